#pragma once

// Discrete-time Fourier transform l^1(Z) -> C(S^1), with S^1 taken as [0, 1)
// under addition mod 1.

#include <map>

#include "fcheck/funcspace.hpp"

namespace fcheck::discrete {

using funcspace::FiniteSequence;

using DiscreteKernel = std::function<Complex(long n, double y)>;

struct DiscreteKernelTransform {
    DiscreteKernel kernel;
    long max_radius = 128;
};

DiscreteKernelTransform dtft_kernel(long max_radius = 128);
DiscreteKernelTransform zero_discrete_kernel(long max_radius = 128);

Complex dtft(const FiniteSequence& f, double y);

/// sum_n K(n, y) f(n). RangeError when f reaches beyond max_radius.
Complex apply_discrete(const DiscreteKernelTransform& t, const FiniteSequence& f, double y);

/// |T(Delta^+ f)(y) - (e^{2 pi i y} - 1) T(f)(y)|.
double difference_property_residual(const DiscreteKernelTransform& t, const FiniteSequence& f,
                                    double y);

/// |e^{2 pi i y} K(n, y) - K(n-1, y)|.
double kernel_recurrence_residual(const DiscreteKernelTransform& t, long n, double y);

/// Iterates K(n, y) = e^{-2 pi i y} K(n-1, y) both ways from K(0, y) = 1.
std::map<long, Complex> reconstruct_kernel(double y, long radius);

/// |T(Delta^+ f)(y) + sum_n f(n) (K(n, y) - K(n-1, y))|.
double summation_by_parts_check(const DiscreteKernelTransform& t, const FiniteSequence& f,
                                double y);

} // namespace fcheck::discrete
