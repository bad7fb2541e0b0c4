#include "fcheck/funcspace.hpp"

#include <algorithm>
#include <cmath>

namespace fcheck::funcspace {

namespace {

constexpr double kEdgeCutoff = 1.0 - 1e-12;

// Derivatives of phi(u) = exp(-1/(1-u^2)) with respect to u.
double bump_d1(double u) {
    if (std::abs(u) >= kEdgeCutoff) return 0.0;
    const double s = 1.0 - u * u;
    return bump_profile(u) * (-2.0 * u / (s * s));
}

double bump_d2(double u) {
    if (std::abs(u) >= kEdgeCutoff) return 0.0;
    const double s = 1.0 - u * u;
    const double s2 = s * s;
    const double g1 = -2.0 * u / s2;
    const double g2 = -2.0 / s2 - 8.0 * u * u / (s2 * s);
    return bump_profile(u) * (g1 * g1 + g2);
}

} // namespace

double bump_profile(double u) {
    if (std::abs(u) >= kEdgeCutoff) return 0.0;
    return std::exp(-1.0 / (1.0 - u * u));
}

double bump_norm_constant(const QuadConfig& cfg) {
    return 1.0 / numerics::integrate_real(bump_profile, Interval(-1.0, 1.0), cfg);
}

TestFunction make_bump(double center, double halfwidth, Complex amplitude) {
    if (!(halfwidth > 0.0)) throw DomainError("make_bump: halfwidth must be positive");
    const double inv = 1.0 / halfwidth;
    TestFunction f;
    f.value = [=](double x) { return amplitude * bump_profile((x - center) * inv); };
    f.deriv1 = [=](double x) { return amplitude * inv * bump_d1((x - center) * inv); };
    f.deriv2 = [=](double x) { return amplitude * inv * inv * bump_d2((x - center) * inv); };
    f.support = Interval(center - halfwidth, center + halfwidth);
    return f;
}

TestFunction dirac_delta(int n) {
    if (n <= 0) throw DomainError("dirac_delta: index must be a positive integer");
    static const double c = bump_norm_constant();
    return make_bump(0.0, 1.0 / n, c * n);
}

TestFunction zero_function(Interval support) {
    const ComplexFn zero = [](double) { return Complex{}; };
    return TestFunction{zero, zero, zero, support};
}

TestFunction TestFunction::derivative() const {
    const ComplexFn d2 = deriv2;
    const double h = 1e-4 * std::max(support.width(), 1e-12);
    const Interval iv = support;
    TestFunction g;
    g.value = deriv1;
    g.deriv1 = deriv2;
    g.deriv2 = [d2, h, iv](double x) -> Complex {
        if (!iv.contains(x)) return {};
        return (d2(x + h) - d2(x - h)) / (2.0 * h);
    };
    g.support = support;
    return g;
}

TestFunction TestFunction::translated(double x0) const {
    TestFunction g;
    g.value = [f = value, x0](double t) { return f(t - x0); };
    g.deriv1 = [f = deriv1, x0](double t) { return f(t - x0); };
    g.deriv2 = [f = deriv2, x0](double t) { return f(t - x0); };
    g.support = Interval(support.lo + x0, support.hi + x0);
    return g;
}

TestFunction TestFunction::scaled(Complex c) const {
    TestFunction g;
    g.value = [f = value, c](double t) { return c * f(t); };
    g.deriv1 = [f = deriv1, c](double t) { return c * f(t); };
    g.deriv2 = [f = deriv2, c](double t) { return c * f(t); };
    g.support = support;
    return g;
}

TestFunction operator+(const TestFunction& a, const TestFunction& b) {
    TestFunction g;
    g.value = [f = a.value, h = b.value](double t) { return f(t) + h(t); };
    g.deriv1 = [f = a.deriv1, h = b.deriv1](double t) { return f(t) + h(t); };
    g.deriv2 = [f = a.deriv2, h = b.deriv2](double t) { return f(t) + h(t); };
    g.support = Interval(std::min(a.support.lo, b.support.lo),
                         std::max(a.support.hi, b.support.hi));
    return g;
}

FiniteSequence::FiniteSequence(std::map<long, Complex> entries) {
    for (const auto& [n, v] : entries) set(n, v);
}

FiniteSequence FiniteSequence::indicator(long n, Complex value) {
    FiniteSequence f;
    f.set(n, value);
    return f;
}

Complex FiniteSequence::operator()(long n) const {
    const auto it = entries_.find(n);
    return it == entries_.end() ? Complex{} : it->second;
}

void FiniteSequence::set(long n, Complex value) {
    if (value == Complex{})
        entries_.erase(n);
    else
        entries_[n] = value;
}

long FiniteSequence::support_radius() const {
    if (entries_.empty()) return 0;
    return std::max(std::labs(entries_.begin()->first), std::labs(entries_.rbegin()->first));
}

double FiniteSequence::l1_norm() const {
    double s = 0.0;
    for (const auto& [n, v] : entries_) s += std::abs(v);
    return s;
}

FiniteSequence& FiniteSequence::operator+=(const FiniteSequence& other) {
    for (const auto& [n, v] : other.entries_) set(n, (*this)(n) + v);
    return *this;
}

FiniteSequence operator*(Complex c, const FiniteSequence& f) {
    FiniteSequence g;
    for (const auto& [n, v] : f.entries_) g.set(n, c * v);
    return g;
}

namespace {

// Evaluates g(n) = f(n + a) - f(n + b) only where it can be nonzero.
FiniteSequence difference(const FiniteSequence& f, long a, long b) {
    FiniteSequence g;
    for (const auto& [m, v] : f.entries()) {
        for (const long n : {m - a, m - b}) g.set(n, f(n + a) - f(n + b));
    }
    return g;
}

} // namespace

FiniteSequence forward_diff(const FiniteSequence& f) { return difference(f, 1, 0); }

FiniteSequence backward_diff(const FiniteSequence& f) { return difference(f, 0, -1); }

} // namespace fcheck::funcspace
