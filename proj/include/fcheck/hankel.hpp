#pragma once

// Hankel transform of order alpha, the Bessel differential operator, and the
// checks that characterize the Hankel transform among kernel transforms
// T(f)(y) = int_0^inf K(yx) f(x) x dx.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fcheck/funcspace.hpp"

namespace fcheck::hankel {

using funcspace::TestFunction;
using numerics::ComplexFn;
using numerics::Interval;
using numerics::QuadConfig;
using numerics::RealFn;

struct HankelKernelTransform {
    RealFn kernel;
    std::optional<RealFn> kernel_d1;
    std::optional<RealFn> kernel_d2;
    QuadConfig quad;
};

/// K = J_alpha, derivatives from the differentiated integral representation.
HankelKernelTransform hankel_kernel(double alpha, const QuadConfig& quad = {});
HankelKernelTransform zero_hankel_kernel(const QuadConfig& quad = {});
/// K(r) = sqrt(2/(pi r)) sin r with closed-form derivatives.
HankelKernelTransform half_order_kernel(const QuadConfig& quad = {});
/// a K_1 + b K_2; derivatives kept when both operands have them.
HankelKernelTransform combine(double a, const HankelKernelTransform& k1, double b,
                              const HankelKernelTransform& k2);

/// Solution of the order-alpha Bessel equation with
/// (K(1), K'(1)) = (-J_alpha'(1), J_alpha(1)): Wronskian-independent of
/// J_alpha, hence unbounded at the origin for alpha > 0. Built by classical
/// RK4 in s = ln r with step 1e-4 on [r_min, r_max] and evaluated by cubic
/// Hermite interpolation.
class BesselSecondSolution {
public:
    BesselSecondSolution(double alpha, double r_min = 1e-7, double r_max = 64.0,
                         const QuadConfig& bessel_quad = {});

    double value(double r) const;
    double deriv1(double r) const;
    double deriv2(double r) const;
    double alpha() const { return alpha_; }

private:
    struct Table;
    double alpha_;
    std::shared_ptr<const Table> table_;
};

HankelKernelTransform second_solution_kernel(const BesselSecondSolution& y2,
                                             const QuadConfig& quad = {});

/// int K(yx) f(x) x dx over `support`; y must be positive.
Complex apply_hankel(const HankelKernelTransform& t, const ComplexFn& f, Interval support, double y);
Complex apply_hankel(const HankelKernelTransform& t, const TestFunction& f, double y);

/// H_alpha(f)(y) = int J_alpha(yx) f(x) x dx. The integrand is regular at 0,
/// so supports starting at 0 are accepted; negative supports are not.
Complex hankel_transform(double alpha, const TestFunction& f, double y, const QuadConfig& cfg = {});

struct SupportedFunction {
    ComplexFn value;
    Interval support;
};

/// x -> f''(x) + f'(x)/x - alpha^2 f(x)/x^2. DomainError unless
/// support(f) lies in (0, inf).
SupportedFunction bessel_operator(double alpha, const TestFunction& f);

/// |T(B_alpha f)(y) + y^2 T(f)(y)|.
double bessel_property_residual(const HankelKernelTransform& t, double alpha, const TestFunction& f,
                                double y);

struct PartsResiduals {
    double first;                 ///< x K f'' identity
    std::optional<double> second; ///< y x K' f' identity (needs K'')
};

/// Residuals of
///   int x K(yx) f'' = -int K(yx) f' - int y x K'(yx) f'
///   int y x K'(yx) f' = -int y K'(yx) f - int y^2 x K''(yx) f.
/// CapabilityError without kernel_d1.
PartsResiduals parts_identities_check(const HankelKernelTransform& t, const TestFunction& f, double y);

/// Sign of the (r^2 - alpha^2) K term. BesselEquation is the equation J_alpha
/// solves and the one the integration-by-parts computation produces;
/// Flipped is the opposite sign (the modified Bessel equation), kept for
/// comparison.
enum class OdeSign { BesselEquation, Flipped };

/// r^2 K'' + r K' +/- (r^2 - alpha^2) K on `grid`. Missing derivatives are
/// replaced by central differences with step 1e-4.
std::vector<double> kernel_ode_residual_profile(const HankelKernelTransform& t, double alpha,
                                                std::span<const double> grid,
                                                OdeSign sign = OdeSign::BesselEquation);

struct KernelDiscrimination {
    double c1 = 0.0;               ///< least-squares coefficient of J_alpha on [1, 10]
    bool bounded_at_origin = false;
    double bound = 0.0;            ///< 10 max |K| on [1, 10]
    double probe_max = 0.0;        ///< max |K(10^-k)|, k = 1..6
    double fit_residual = 0.0;     ///< max |K - c1 J_alpha| on the fit grid
    std::vector<std::pair<double, double>> probes;
};

KernelDiscrimination discriminate_kernel(const HankelKernelTransform& t, double alpha,
                                         const QuadConfig& bessel_quad = {});

struct Normalization {
    double residual;   ///< |T(f*)(y*) - H_alpha(f*)(y*)|
    double reference;  ///< |H_alpha(f*)(y*)|, the nonvanishing certificate
};

inline constexpr double kWitnessFloor = 1e-8;

/// WitnessRejected when |H_alpha(f*)(y*)| < 1e-8.
Normalization normalization_check(const HankelKernelTransform& t, double alpha,
                                  const TestFunction& f_star, double y_star);

} // namespace fcheck::hankel
