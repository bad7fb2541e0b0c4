#pragma once

// Fourier transform on the real line and generic kernel transforms
// T(f)(y) = int K(x, y) f(x) dx, with the checks that characterize the
// Fourier transform among them.

#include <optional>
#include <string>
#include <vector>

#include "fcheck/funcspace.hpp"

namespace fcheck::realline {

using funcspace::TestFunction;
using numerics::QuadConfig;

using Kernel = std::function<Complex(double x, double y)>;

struct KernelTransform {
    Kernel kernel;
    std::optional<Kernel> kernel_dx;  ///< dK/dx in closed form, when known
    QuadConfig quad;
    std::string domain_note = "R";
};

/// K(x, y) = e^{-2 pi i x y}.
KernelTransform fourier_kernel(const QuadConfig& quad = {});
/// K = 0.
KernelTransform zero_kernel(const QuadConfig& quad = {});
/// K(x, y) = g(y) e^{-2 pi i x y}; with g' omitted kernel_dx is still
/// available since only the x-derivative is needed.
KernelTransform modulated_kernel(std::function<Complex(double)> g, const QuadConfig& quad = {});
/// K(x, y) = (1 + x^2) e^{-2 pi i x y}: Dirac-consistent but not
/// differentiation-consistent.
KernelTransform x_weighted_kernel(const QuadConfig& quad = {});

Complex fourier_r(const TestFunction& f, double y, const QuadConfig& cfg = {});

/// Quadrature of K(x, y) f(x) over support(f).
Complex apply_kernel(const KernelTransform& t, const TestFunction& f, double y);

/// |T(f')(y) - 2 pi i y T(f)(y)|. Integration by parts against e^{-2 pi i x y}
/// gives F(f') = 2 pi i y F(f); the opposite sign singles out the kernels
/// g(y) e^{2 pi i x y} instead.
double diff_property_residual(const KernelTransform& t, const TestFunction& f, double y);

/// |T(L_{x0} f)(y) - e^{-2 pi i x0 y} T(f)(y)|.
double shift_property_residual_r(const KernelTransform& t, const TestFunction& f, double x0,
                                 double y);

struct LimitSchedule {
    std::vector<int> indices;
    double stall_tol = 1e-4;

    /// 2, 4, ..., 2^max_power.
    static LimitSchedule geometric(int max_power = 8, double stall_tol = 1e-4);
    void validate() const;
};

struct DiracLimit {
    Complex value;
    bool converged = false;
    std::vector<std::pair<int, Complex>> sequence;
};

/// T(delta_n)(y) along the schedule. Converged when the last two values differ
/// by less than stall_tol; the last value is returned either way. For a kernel
/// of the form g(y) e^{-2 pi i x y} this recovers g(y).
DiracLimit dirac_limit(const KernelTransform& t, double y,
                       const LimitSchedule& sched = LimitSchedule::geometric());

/// |int K f' dx + int K_x f dx|. Throws CapabilityError without kernel_dx.
double integration_by_parts_check(const KernelTransform& t, const TestFunction& f, double y);

} // namespace fcheck::realline
