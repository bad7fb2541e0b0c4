#pragma once

// Quadrature and Bessel functions of the first kind.

#include <functional>
#include <vector>

#include "fcheck/common.hpp"

namespace fcheck::numerics {

struct QuadConfig {
    int panels = 256;
    int nodes_per_panel = 8;
    double tail_cutoff = 40.0;
    double tol_abs = 1e-10;

    /// Throws DomainError unless panels >= 1, nodes_per_panel >= 2,
    /// tail_cutoff > 0 and tol_abs >= 0.
    void validate() const;

    QuadConfig with_panels(int p) const {
        QuadConfig c = *this;
        c.panels = p;
        return c;
    }
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double lo_, double hi_);

    double width() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

using ComplexFn = std::function<Complex(double)>;
using RealFn = std::function<double(double)>;

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule gauss_legendre(int n);

/// Composite Gauss-Legendre over iv: cfg.panels equal panels with
/// cfg.nodes_per_panel nodes each.
Complex integrate(const ComplexFn& f, Interval iv, const QuadConfig& cfg = {});
double integrate_real(const RealFn& f, Interval iv, const QuadConfig& cfg = {});

/// Integral over [0, cfg.tail_cutoff]; the caller asserts exponential decay of
/// f so the discarded tail is negligible.
double integrate_semi_infinite(const RealFn& f, const QuadConfig& cfg = {});

/// J_alpha(r) from the integral representation
///   (1/pi) int_0^pi cos(alpha t - r sin t) dt
///     - (sin(alpha pi)/pi) int_0^inf exp(-r sinh t - alpha t) dt.
/// The second term is dropped when |sin(alpha pi)| < 1e-14.
double bessel_j(double alpha, double r, const QuadConfig& cfg = {});

/// J_alpha and its first two r-derivatives, obtained by differentiating the
/// integral representation under the integral sign. Requires r > 0 unless
/// the tail term is absent.
struct BesselJet {
    double value;
    double d1;
    double d2;
};
BesselJet bessel_j_jet(double alpha, double r, const QuadConfig& cfg = {});

/// The `order`-th r-derivative (1 or 2) alone, as in bessel_j_jet.
double bessel_j_derivative(double alpha, double r, int order, const QuadConfig& cfg = {});

/// Ascending series sum_m (-1)^m (r/2)^{2m+alpha} / (m! Gamma(m+alpha+1)).
/// Throws RangeError for r > 30 where cancellation ruins the sum.
double bessel_j_series(double alpha, double r);

inline constexpr double kSeriesMaxArgument = 30.0;

/// A real C^2 function carrying its first and second derivatives.
struct SmoothFunction {
    RealFn value;
    RealFn deriv1;
    RealFn deriv2;
};

/// r^2 K''(r) + r K'(r) + (r^2 - alpha^2) K(r).
double bessel_ode_residual(const SmoothFunction& k, double alpha, double r);

} // namespace fcheck::numerics
