#include "fcheck/numerics.hpp"

#include <cmath>
#include <sstream>

namespace fcheck::numerics {

void QuadConfig::validate() const {
    if (panels < 1) throw DomainError("QuadConfig: panels must be >= 1");
    if (nodes_per_panel < 2) throw DomainError("QuadConfig: nodes_per_panel must be >= 2");
    if (!(tail_cutoff > 0.0)) throw DomainError("QuadConfig: tail_cutoff must be > 0");
    if (!(tol_abs >= 0.0)) throw DomainError("QuadConfig: tol_abs must be >= 0");
}

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(lo <= hi)) {
        std::ostringstream os;
        os << "Interval: lo (" << lo << ") exceeds hi (" << hi << ")";
        throw DomainError(os.str());
    }
}

GaussRule gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss_legendre: order must be positive");
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int k = 0; k < half; ++k) {
        // Chebyshev-like initial guess, then Newton on P_n.
        double x = std::cos(kPi * (k + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            const double pn = (n == 1) ? x : p1;
            const double pn1 = (n == 1) ? 1.0 : p0;
            dp = n * (x * pn - pn1) / (x * x - 1.0);
            const double dx = pn / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute derivative at the converged node.
        double p0 = 1.0;
        double p1 = x;
        for (int j = 2; j <= n; ++j) {
            const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        dp = (n == 1) ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        const auto lo = static_cast<std::size_t>(k);
        const auto hi = static_cast<std::size_t>(n - 1 - k);
        rule.nodes[lo] = -x;
        rule.nodes[hi] = x;
        rule.weights[lo] = w;
        rule.weights[hi] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

namespace {

template <class Value, class F>
Value composite(const F& f, Interval iv, const QuadConfig& cfg) {
    cfg.validate();
    Value total{};
    if (iv.width() == 0.0) return total;
    const GaussRule rule = gauss_legendre(cfg.nodes_per_panel);
    const double h = iv.width() / cfg.panels;
    for (int p = 0; p < cfg.panels; ++p) {
        const double mid = iv.lo + (p + 0.5) * h;
        Value panel{};
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            const double x = mid + 0.5 * h * rule.nodes[j];
            const Value v = f(x);
            if (!std::isfinite(std::abs(v))) {
                std::ostringstream os;
                os << "integrand is not finite at node x = " << x;
                throw EvaluationError(os.str(), x);
            }
            panel += rule.weights[j] * v;
        }
        total += 0.5 * h * panel;
    }
    return total;
}

bool tail_vanishes(double alpha) { return std::abs(std::sin(alpha * kPi)) < 1e-14; }

void check_order(double alpha, double r) {
    if (!(alpha >= 0.0)) throw DomainError("bessel_j: order must be nonnegative");
    if (!(r >= 0.0)) throw DomainError("bessel_j: argument must be nonnegative");
}

} // namespace

Complex integrate(const ComplexFn& f, Interval iv, const QuadConfig& cfg) {
    return composite<Complex>(f, iv, cfg);
}

double integrate_real(const RealFn& f, Interval iv, const QuadConfig& cfg) {
    return composite<double>(f, iv, cfg);
}

double integrate_semi_infinite(const RealFn& f, const QuadConfig& cfg) {
    cfg.validate();
    return composite<double>(f, Interval(0.0, cfg.tail_cutoff), cfg);
}

double bessel_j(double alpha, double r, const QuadConfig& cfg) {
    check_order(alpha, r);
    if (r == 0.0) return alpha == 0.0 ? 1.0 : 0.0;
    const double head = integrate_real(
        [=](double t) { return std::cos(alpha * t - r * std::sin(t)); },
        Interval(0.0, kPi), cfg) / kPi;
    if (tail_vanishes(alpha)) return head;
    const double tail = integrate_semi_infinite(
        [=](double t) { return std::exp(-r * std::sinh(t) - alpha * t); }, cfg);
    return head - std::sin(alpha * kPi) / kPi * tail;
}

double bessel_j_derivative(double alpha, double r, int order, const QuadConfig& cfg) {
    check_order(alpha, r);
    if (order != 1 && order != 2) throw DomainError("bessel_j_derivative: order must be 1 or 2");
    const bool tail = !tail_vanishes(alpha);
    if (tail && r == 0.0)
        throw DomainError("bessel_j_derivative: derivatives of non-integer order need r > 0");
    const Interval head_iv(0.0, kPi);
    const double pre = std::sin(alpha * kPi) / kPi;
    if (order == 1) {
        double d = integrate_real(
            [=](double t) { return std::sin(alpha * t - r * std::sin(t)) * std::sin(t); },
            head_iv, cfg) / kPi;
        if (tail)
            d += pre * integrate_semi_infinite(
                [=](double t) {
                    const double sh = std::sinh(t);
                    return sh * std::exp(-r * sh - alpha * t);
                }, cfg);
        return d;
    }
    double d = -integrate_real(
        [=](double t) {
            const double s = std::sin(t);
            return std::cos(alpha * t - r * s) * s * s;
        },
        head_iv, cfg) / kPi;
    if (tail)
        d -= pre * integrate_semi_infinite(
            [=](double t) {
                const double sh = std::sinh(t);
                return sh * sh * std::exp(-r * sh - alpha * t);
            }, cfg);
    return d;
}

BesselJet bessel_j_jet(double alpha, double r, const QuadConfig& cfg) {
    return {bessel_j(alpha, r, cfg), bessel_j_derivative(alpha, r, 1, cfg),
            bessel_j_derivative(alpha, r, 2, cfg)};
}

double bessel_j_series(double alpha, double r) {
    check_order(alpha, r);
    if (r > kSeriesMaxArgument) {
        std::ostringstream os;
        os << "bessel_j_series: argument " << r << " exceeds " << kSeriesMaxArgument
           << "; use bessel_j";
        throw RangeError(os.str());
    }
    const double half = 0.5 * r;
    double term = std::pow(half, alpha) / std::tgamma(alpha + 1.0);
    double sum = term;
    const double q = -half * half;
    for (int m = 1; m < 60; ++m) {
        term *= q / (m * (m + alpha));
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) break;
    }
    return sum;
}

double bessel_ode_residual(const SmoothFunction& k, double alpha, double r) {
    if (!(r > 0.0)) throw DomainError("bessel_ode_residual: r must be positive");
    return r * r * k.deriv2(r) + r * k.deriv1(r) + (r * r - alpha * alpha) * k.value(r);
}

} // namespace fcheck::numerics
