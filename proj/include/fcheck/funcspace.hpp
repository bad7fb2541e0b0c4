#pragma once

// Test-function spaces: compactly supported C^2 bumps with analytic
// derivatives, the normalized Dirac delta sequence, and finitely supported
// sequences on the integers.

#include <map>

#include "fcheck/numerics.hpp"

namespace fcheck::funcspace {

using numerics::ComplexFn;
using numerics::Interval;
using numerics::QuadConfig;

/// A compactly supported function with closed-form first and second
/// derivatives. All three vanish outside `support`.
struct TestFunction {
    ComplexFn value;
    ComplexFn deriv1;
    ComplexFn deriv2;
    Interval support;

    Complex operator()(double x) const { return value(x); }

    /// f' as a TestFunction. Its second-derivative slot (f''') is a central
    /// difference of deriv2; it is carried for shape only and never
    /// integrated.
    TestFunction derivative() const;

    /// L_{x0} f : t -> f(t - x0).
    TestFunction translated(double x0) const;

    TestFunction scaled(Complex c) const;
};

/// Sum with support equal to the hull of both supports.
TestFunction operator+(const TestFunction& a, const TestFunction& b);

/// e^{-1/(1-u^2)} for |u| < 1, returning exactly 0 once |u| >= 1 - 1e-12.
double bump_profile(double u);

/// (int_{-1}^{1} e^{-1/(1-x^2)} dx)^{-1}.
double bump_norm_constant(const QuadConfig& cfg = {});

/// amplitude * e^{-1/(1-((x-center)/halfwidth)^2)} on [center-halfwidth,
/// center+halfwidth].
TestFunction make_bump(double center, double halfwidth, Complex amplitude);

/// delta_n(x) = C n e^{-1/(1-(nx)^2)} on [-1/n, 1/n], unit mass.
TestFunction dirac_delta(int n);

/// The function that is identically zero, supported on `support`.
TestFunction zero_function(Interval support = Interval(0.0, 1.0));

/// A finitely supported sequence Z -> C. Exact zeros are not stored.
class FiniteSequence {
public:
    FiniteSequence() = default;
    explicit FiniteSequence(std::map<long, Complex> entries);

    static FiniteSequence indicator(long n, Complex value = 1.0);

    Complex operator()(long n) const;
    void set(long n, Complex value);

    const std::map<long, Complex>& entries() const { return entries_; }
    /// Largest |n| with a nonzero entry; 0 for the zero sequence.
    long support_radius() const;
    bool empty() const { return entries_.empty(); }
    double l1_norm() const;

    FiniteSequence& operator+=(const FiniteSequence& other);
    friend FiniteSequence operator+(FiniteSequence a, const FiniteSequence& b) {
        a += b;
        return a;
    }
    friend FiniteSequence operator*(Complex c, const FiniteSequence& f);

    friend bool operator==(const FiniteSequence&, const FiniteSequence&) = default;

private:
    std::map<long, Complex> entries_;
};

/// (Delta^+ f)(n) = f(n+1) - f(n).
FiniteSequence forward_diff(const FiniteSequence& f);
/// (Delta^- f)(n) = f(n) - f(n-1).
FiniteSequence backward_diff(const FiniteSequence& f);

} // namespace fcheck::funcspace
