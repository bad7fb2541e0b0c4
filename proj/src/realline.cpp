#include "fcheck/realline.hpp"

#include <cmath>

namespace fcheck::realline {

namespace {

Complex fourier_phase(double x, double y) { return std::polar(1.0, -2.0 * kPi * x * y); }

} // namespace

KernelTransform fourier_kernel(const QuadConfig& quad) {
    KernelTransform t;
    t.kernel = fourier_phase;
    t.kernel_dx = [](double x, double y) { return -2.0 * kPi * kI * y * fourier_phase(x, y); };
    t.quad = quad;
    return t;
}

KernelTransform zero_kernel(const QuadConfig& quad) {
    KernelTransform t;
    t.kernel = [](double, double) { return Complex{}; };
    t.kernel_dx = t.kernel;
    t.quad = quad;
    return t;
}

KernelTransform modulated_kernel(std::function<Complex(double)> g, const QuadConfig& quad) {
    KernelTransform t;
    t.kernel = [g](double x, double y) { return g(y) * fourier_phase(x, y); };
    t.kernel_dx = [g](double x, double y) {
        return -2.0 * kPi * kI * y * g(y) * fourier_phase(x, y);
    };
    t.quad = quad;
    return t;
}

KernelTransform x_weighted_kernel(const QuadConfig& quad) {
    KernelTransform t;
    t.kernel = [](double x, double y) { return (1.0 + x * x) * fourier_phase(x, y); };
    t.kernel_dx = [](double x, double y) {
        return (2.0 * x - 2.0 * kPi * kI * y * (1.0 + x * x)) * fourier_phase(x, y);
    };
    t.quad = quad;
    return t;
}

Complex fourier_r(const TestFunction& f, double y, const QuadConfig& cfg) {
    return numerics::integrate([&](double x) { return f.value(x) * fourier_phase(x, y); },
                               f.support, cfg);
}

Complex apply_kernel(const KernelTransform& t, const TestFunction& f, double y) {
    return numerics::integrate([&](double x) { return t.kernel(x, y) * f.value(x); },
                               f.support, t.quad);
}

double diff_property_residual(const KernelTransform& t, const TestFunction& f, double y) {
    const Complex lhs = apply_kernel(t, f.derivative(), y);
    const Complex rhs = 2.0 * kPi * kI * y * apply_kernel(t, f, y);
    return std::abs(lhs - rhs);
}

double shift_property_residual_r(const KernelTransform& t, const TestFunction& f, double x0,
                                 double y) {
    const Complex lhs = apply_kernel(t, f.translated(x0), y);
    const Complex rhs = fourier_phase(x0, y) * apply_kernel(t, f, y);
    return std::abs(lhs - rhs);
}

LimitSchedule LimitSchedule::geometric(int max_power, double stall_tol) {
    LimitSchedule s;
    for (int p = 1; p <= max_power; ++p) s.indices.push_back(1 << p);
    s.stall_tol = stall_tol;
    s.validate();
    return s;
}

void LimitSchedule::validate() const {
    if (indices.size() < 3) throw DomainError("LimitSchedule: needs at least 3 indices");
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] <= 0) throw DomainError("LimitSchedule: indices must be positive");
        if (k > 0 && indices[k] <= indices[k - 1])
            throw DomainError("LimitSchedule: indices must be strictly increasing");
    }
    if (!(stall_tol > 0.0)) throw DomainError("LimitSchedule: stall_tol must be positive");
}

DiracLimit dirac_limit(const KernelTransform& t, double y, const LimitSchedule& sched) {
    sched.validate();
    DiracLimit out;
    for (const int n : sched.indices)
        out.sequence.emplace_back(n, apply_kernel(t, funcspace::dirac_delta(n), y));
    const auto& seq = out.sequence;
    out.value = seq.back().second;
    out.converged = std::abs(seq.back().second - seq[seq.size() - 2].second) < sched.stall_tol;
    return out;
}

double integration_by_parts_check(const KernelTransform& t, const TestFunction& f, double y) {
    if (!t.kernel_dx)
        throw CapabilityError("integration_by_parts_check: kernel has no closed-form x-derivative");
    const auto& kdx = *t.kernel_dx;
    const Complex a = numerics::integrate(
        [&](double x) { return t.kernel(x, y) * f.deriv1(x); }, f.support, t.quad);
    const Complex b = numerics::integrate(
        [&](double x) { return kdx(x, y) * f.value(x); }, f.support, t.quad);
    return std::abs(a + b);
}

} // namespace fcheck::realline
