#include "fcheck/discrete.hpp"

#include <sstream>

namespace fcheck::discrete {

namespace {

void check_radius(const DiscreteKernelTransform& t, long radius) {
    if (radius > t.max_radius) {
        std::ostringstream os;
        os << "sequence support radius " << radius << " exceeds kernel max_radius "
           << t.max_radius;
        throw RangeError(os.str());
    }
}

Complex circle_phase(double y) { return std::polar(1.0, 2.0 * kPi * y); }

} // namespace

DiscreteKernelTransform dtft_kernel(long max_radius) {
    return {[](long n, double y) { return unit_phase(static_cast<double>(n) * y); }, max_radius};
}

DiscreteKernelTransform zero_discrete_kernel(long max_radius) {
    return {[](long, double) { return Complex{}; }, max_radius};
}

Complex dtft(const FiniteSequence& f, double y) {
    Complex s{};
    for (const auto& [n, v] : f.entries()) s += v * unit_phase(static_cast<double>(n) * y);
    return s;
}

Complex apply_discrete(const DiscreteKernelTransform& t, const FiniteSequence& f, double y) {
    check_radius(t, f.support_radius());
    Complex s{};
    for (const auto& [n, v] : f.entries()) s += t.kernel(n, y) * v;
    return s;
}

double difference_property_residual(const DiscreteKernelTransform& t, const FiniteSequence& f,
                                    double y) {
    const Complex lhs = apply_discrete(t, funcspace::forward_diff(f), y);
    const Complex rhs = (circle_phase(y) - 1.0) * apply_discrete(t, f, y);
    return std::abs(lhs - rhs);
}

double kernel_recurrence_residual(const DiscreteKernelTransform& t, long n, double y) {
    check_radius(t, std::labs(n));
    return std::abs(circle_phase(y) * t.kernel(n, y) - t.kernel(n - 1, y));
}

std::map<long, Complex> reconstruct_kernel(double y, long radius) {
    if (radius < 0) throw DomainError("reconstruct_kernel: radius must be nonnegative");
    std::map<long, Complex> k;
    k[0] = 1.0;
    const Complex down = circle_phase(-y);
    const Complex up = circle_phase(y);
    for (long n = 1; n <= radius; ++n) {
        k[n] = down * k[n - 1];
        k[-n] = up * k[-n + 1];
    }
    return k;
}

double summation_by_parts_check(const DiscreteKernelTransform& t, const FiniteSequence& f,
                                double y) {
    check_radius(t, f.support_radius() + 1);
    const Complex lhs = apply_discrete(t, funcspace::forward_diff(f), y);
    Complex rhs{};
    for (const auto& [n, v] : f.entries()) rhs += v * (t.kernel(n, y) - t.kernel(n - 1, y));
    return std::abs(lhs + rhs);
}

} // namespace fcheck::discrete
