#include "fcheck/hankel.hpp"

#include <cmath>
#include <sstream>

namespace fcheck::hankel {

HankelKernelTransform hankel_kernel(double alpha, const QuadConfig& quad) {
    if (!(alpha >= 0.0)) throw DomainError("hankel_kernel: order must be nonnegative");
    const QuadConfig bq{};
    HankelKernelTransform t;
    t.kernel = [alpha, bq](double r) { return numerics::bessel_j(alpha, r, bq); };
    t.kernel_d1 = [alpha, bq](double r) { return numerics::bessel_j_derivative(alpha, r, 1, bq); };
    t.kernel_d2 = [alpha, bq](double r) { return numerics::bessel_j_derivative(alpha, r, 2, bq); };
    t.quad = quad;
    return t;
}

HankelKernelTransform zero_hankel_kernel(const QuadConfig& quad) {
    const RealFn zero = [](double) { return 0.0; };
    return {zero, zero, zero, quad};
}

HankelKernelTransform half_order_kernel(const QuadConfig& quad) {
    const double c = std::sqrt(2.0 / kPi);
    HankelKernelTransform t;
    t.kernel = [c](double r) { return c * std::sin(r) / std::sqrt(r); };
    t.kernel_d1 = [c](double r) {
        const double sr = std::sqrt(r);
        return c * (std::cos(r) / sr - 0.5 * std::sin(r) / (r * sr));
    };
    t.kernel_d2 = [c](double r) {
        const double sr = std::sqrt(r);
        return c * (-std::sin(r) / sr - std::cos(r) / (r * sr) + 0.75 * std::sin(r) / (r * r * sr));
    };
    t.quad = quad;
    return t;
}

HankelKernelTransform combine(double a, const HankelKernelTransform& k1, double b,
                              const HankelKernelTransform& k2) {
    HankelKernelTransform t;
    t.kernel = [a, b, f = k1.kernel, g = k2.kernel](double r) { return a * f(r) + b * g(r); };
    if (k1.kernel_d1 && k2.kernel_d1)
        t.kernel_d1 = [a, b, f = *k1.kernel_d1, g = *k2.kernel_d1](double r) { return a * f(r) + b * g(r); };
    if (k1.kernel_d2 && k2.kernel_d2)
        t.kernel_d2 = [a, b, f = *k1.kernel_d2, g = *k2.kernel_d2](double r) { return a * f(r) + b * g(r); };
    t.quad = k1.quad;
    return t;
}

struct BesselSecondSolution::Table {
    double s0;
    double h;
    std::vector<double> u;  // K(e^s)
    std::vector<double> v;  // dK/ds = r K'(r)
};

namespace {

constexpr double kRk4Step = 1e-4;

// u'' = -(e^{2s} - alpha^2) u in s = ln r, state (u, u_s).
void rk4_step(double alpha, double s, double h, double& u, double& v) {
    auto acc = [alpha](double ss, double uu) { return -(std::exp(2.0 * ss) - alpha * alpha) * uu; };
    const double k1u = v, k1v = acc(s, u);
    const double k2u = v + 0.5 * h * k1v, k2v = acc(s + 0.5 * h, u + 0.5 * h * k1u);
    const double k3u = v + 0.5 * h * k2v, k3v = acc(s + 0.5 * h, u + 0.5 * h * k2u);
    const double k4u = v + h * k3v, k4v = acc(s + h, u + h * k3u);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
}

} // namespace

BesselSecondSolution::BesselSecondSolution(double alpha, double r_min, double r_max,
                                           const QuadConfig& bessel_quad)
    : alpha_(alpha) {
    if (!(alpha >= 0.0)) throw DomainError("BesselSecondSolution: order must be nonnegative");
    if (!(r_min > 0.0 && r_min < 1.0 && r_max > 1.0))
        throw DomainError("BesselSecondSolution: need 0 < r_min < 1 < r_max");
    auto table = std::make_shared<Table>();
    const double h = kRk4Step;
    const auto down = static_cast<std::size_t>(std::ceil(-std::log(r_min) / h));
    const auto up = static_cast<std::size_t>(std::ceil(std::log(r_max) / h));
    table->h = h;
    table->s0 = -static_cast<double>(down) * h;
    table->u.resize(down + up + 1);
    table->v.resize(down + up + 1);
    const auto jet = numerics::bessel_j_jet(alpha, 1.0, bessel_quad);
    // (K(1), K'(1)) = (-J'(1), J(1)); at r = 1, dK/ds = K'(1).
    table->u[down] = -jet.d1;
    table->v[down] = jet.value;
    double u = table->u[down], v = table->v[down];
    for (std::size_t k = down; k < down + up; ++k) {
        rk4_step(alpha, table->s0 + static_cast<double>(k) * h, h, u, v);
        table->u[k + 1] = u;
        table->v[k + 1] = v;
    }
    u = table->u[down];
    v = table->v[down];
    for (std::size_t k = down; k > 0; --k) {
        rk4_step(alpha, table->s0 + static_cast<double>(k) * h, -h, u, v);
        table->u[k - 1] = u;
        table->v[k - 1] = v;
    }
    table_ = std::move(table);
}

namespace {

struct Hermite {
    double value;
    double slope;
};

// Cubic Hermite interpolation of (f, f') sampled on a uniform grid.
Hermite hermite(double t, double h, double f0, double d0, double f1, double d1) {
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
    const double value = h00 * f0 + h10 * h * d0 + h01 * f1 + h11 * h * d1;
    const double g00 = 6 * t2 - 6 * t, g10 = 3 * t2 - 4 * t + 1;
    const double g01 = -6 * t2 + 6 * t, g11 = 3 * t2 - 2 * t;
    const double slope = (g00 * f0 + g01 * f1) / h + g10 * d0 + g11 * d1;
    return {value, slope};
}

} // namespace

double BesselSecondSolution::value(double r) const {
    const Table& tb = *table_;
    const double s = std::log(r);
    const double pos = (s - tb.s0) / tb.h;
    if (!(r > 0.0) || pos < 0.0 || pos > static_cast<double>(tb.u.size() - 1)) {
        std::ostringstream os;
        os << "BesselSecondSolution: r = " << r << " outside the tabulated range";
        throw RangeError(os.str());
    }
    auto k = static_cast<std::size_t>(pos);
    if (k + 1 >= tb.u.size()) k = tb.u.size() - 2;
    const double t = pos - static_cast<double>(k);
    return hermite(t, tb.h, tb.u[k], tb.v[k], tb.u[k + 1], tb.v[k + 1]).value;
}

double BesselSecondSolution::deriv1(double r) const {
    const Table& tb = *table_;
    const double s = std::log(r);
    const double pos = (s - tb.s0) / tb.h;
    if (!(r > 0.0) || pos < 0.0 || pos > static_cast<double>(tb.u.size() - 1))
        throw RangeError("BesselSecondSolution: r outside the tabulated range");
    auto k = static_cast<std::size_t>(pos);
    if (k + 1 >= tb.u.size()) k = tb.u.size() - 2;
    const double t = pos - static_cast<double>(k);
    auto accel = [&](std::size_t j) {
        const double sj = tb.s0 + static_cast<double>(j) * tb.h;
        return -(std::exp(2.0 * sj) - alpha_ * alpha_) * tb.u[j];
    };
    const double us = hermite(t, tb.h, tb.v[k], accel(k), tb.v[k + 1], accel(k + 1)).value;
    return us / r;
}

double BesselSecondSolution::deriv2(double r) const {
    const double us = deriv1(r) * r;
    const double uss = -(r * r - alpha_ * alpha_) * value(r);
    return (uss - us) / (r * r);
}

HankelKernelTransform second_solution_kernel(const BesselSecondSolution& y2, const QuadConfig& quad) {
    HankelKernelTransform t;
    t.kernel = [y2](double r) { return y2.value(r); };
    t.kernel_d1 = [y2](double r) { return y2.deriv1(r); };
    t.quad = quad;
    return t;
}

Complex apply_hankel(const HankelKernelTransform& t, const ComplexFn& f, Interval support, double y) {
    if (!(y > 0.0)) throw DomainError("apply_hankel: y must be positive");
    if (support.lo < 0.0) throw DomainError("apply_hankel: support must lie in [0, inf)");
    return numerics::integrate([&](double x) { return t.kernel(y * x) * f(x) * x; }, support, t.quad);
}

Complex apply_hankel(const HankelKernelTransform& t, const TestFunction& f, double y) {
    return apply_hankel(t, f.value, f.support, y);
}

Complex hankel_transform(double alpha, const TestFunction& f, double y, const QuadConfig& cfg) {
    return apply_hankel(hankel_kernel(alpha, cfg), f, y);
}

SupportedFunction bessel_operator(double alpha, const TestFunction& f) {
    if (!(f.support.lo > 0.0))
        throw DomainError("bessel_operator: support must lie in (0, inf); alpha^2/x^2 is singular at 0");
    const double a2 = alpha * alpha;
    return {[f, a2](double x) { return f.deriv2(x) + f.deriv1(x) / x - a2 * f.value(x) / (x * x); },
            f.support};
}

double bessel_property_residual(const HankelKernelTransform& t, double alpha, const TestFunction& f,
                                double y) {
    const SupportedFunction bf = bessel_operator(alpha, f);
    const Complex lhs = apply_hankel(t, bf.value, bf.support, y);
    const Complex rhs = -y * y * apply_hankel(t, f, y);
    return std::abs(lhs - rhs);
}

PartsResiduals parts_identities_check(const HankelKernelTransform& t, const TestFunction& f, double y) {
    if (!t.kernel_d1)
        throw CapabilityError("parts_identities_check: kernel has no closed-form first derivative");
    const auto& k = t.kernel;
    const auto& k1 = *t.kernel_d1;
    auto integral = [&](auto&& g) { return numerics::integrate(g, f.support, t.quad); };
    const Complex a = integral([&](double x) { return x * k(y * x) * f.deriv2(x); });
    const Complex b = integral([&](double x) { return k(y * x) * f.deriv1(x); });
    const Complex c = integral([&](double x) { return y * x * k1(y * x) * f.deriv1(x); });
    PartsResiduals out{std::abs(a + b + c), std::nullopt};
    if (t.kernel_d2) {
        const auto& k2 = *t.kernel_d2;
        const Complex d = integral([&](double x) { return y * k1(y * x) * f.value(x); });
        const Complex e = integral([&](double x) { return y * y * x * k2(y * x) * f.value(x); });
        out.second = std::abs(c + d + e);
    }
    return out;
}

std::vector<double> kernel_ode_residual_profile(const HankelKernelTransform& t, double alpha,
                                                std::span<const double> grid, OdeSign sign) {
    constexpr double h = 1e-4;
    const auto& k = t.kernel;
    auto d1 = [&](double r) {
        return t.kernel_d1 ? (*t.kernel_d1)(r) : (k(r + h) - k(r - h)) / (2.0 * h);
    };
    auto d2 = [&](double r) {
        return t.kernel_d2 ? (*t.kernel_d2)(r) : (k(r + h) - 2.0 * k(r) + k(r - h)) / (h * h);
    };
    const double s = sign == OdeSign::BesselEquation ? 1.0 : -1.0;
    std::vector<double> out;
    out.reserve(grid.size());
    for (const double r : grid) {
        if (!(r > 0.0)) throw DomainError("kernel_ode_residual_profile: grid points must be positive");
        out.push_back(r * r * d2(r) + r * d1(r) + s * (r * r - alpha * alpha) * k(r));
    }
    return out;
}

KernelDiscrimination discriminate_kernel(const HankelKernelTransform& t, double alpha,
                                         const QuadConfig& bessel_quad) {
    KernelDiscrimination out;
    double kj = 0.0, jj = 0.0, kmax = 0.0;
    std::vector<std::pair<double, double>> samples;
    for (int i = 0; i <= 90; ++i) {
        const double r = 1.0 + 0.1 * i;
        const double kv = t.kernel(r);
        const double jv = numerics::bessel_j(alpha, r, bessel_quad);
        kj += kv * jv;
        jj += jv * jv;
        kmax = std::max(kmax, std::abs(kv));
        samples.emplace_back(kv, jv);
    }
    out.c1 = kj / jj;
    for (const auto& [kv, jv] : samples) out.fit_residual = std::max(out.fit_residual, std::abs(kv - out.c1 * jv));
    out.bound = 10.0 * kmax;
    for (int e = 1; e <= 6; ++e) {
        const double r = std::pow(10.0, -e);
        const double kv = t.kernel(r);
        out.probes.emplace_back(r, kv);
        out.probe_max = std::max(out.probe_max, std::abs(kv));
    }
    out.bounded_at_origin = std::isfinite(out.probe_max) && out.probe_max <= out.bound;
    return out;
}

Normalization normalization_check(const HankelKernelTransform& t, double alpha,
                                  const TestFunction& f_star, double y_star) {
    const Complex ref = hankel_transform(alpha, f_star, y_star, t.quad);
    if (std::abs(ref) < kWitnessFloor) {
        std::ostringstream os;
        os << "normalization witness rejected: |H_alpha(f*)(y*)| = " << std::abs(ref)
           << " is below " << kWitnessFloor;
        throw WitnessRejected(os.str());
    }
    return {std::abs(apply_hankel(t, f_star, y_star) - ref), std::abs(ref)};
}

} // namespace fcheck::hankel
