#pragma once

// Finite abelian groups Z_{n_1} x ... x Z_{n_K} as locally compact abelian
// groups: characters, Fourier transform, convolution, shifts and the Dirac
// family, all as exact finite sums.

#include <functional>
#include <string>
#include <vector>

#include "fcheck/common.hpp"

namespace fcheck::lca {

using Element = std::vector<int>;

class FiniteAbelianGroup {
public:
    /// `measure` is the Haar weight of each point (1 = counting measure).
    explicit FiniteAbelianGroup(std::vector<int> orders, double measure = 1.0);

    /// Parses "6" or "3x5".
    static FiniteAbelianGroup parse(const std::string& spec);

    const std::vector<int>& orders() const { return orders_; }
    double measure() const { return measure_; }
    std::size_t size() const { return size_; }
    std::string name() const;

    /// Mixed-radix bijection between element tuples and 0..size()-1.
    Element element(std::size_t index) const;
    std::size_t index(const Element& x) const;

    std::size_t add(std::size_t a, std::size_t b) const;
    std::size_t neg(std::size_t a) const;
    std::size_t sub(std::size_t a, std::size_t b) const { return add(a, neg(b)); }
    static constexpr std::size_t identity() { return 0; }

    friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

private:
    std::vector<int> orders_;
    double measure_;
    std::size_t size_;
};

inline constexpr std::size_t kMaxDualSize = 4096;

struct Character {
    std::vector<int> frequencies;

    /// e^{2 pi i sum_k m_k x_k / n_k}.
    Complex operator()(const FiniteAbelianGroup& g, std::size_t x) const;
};

struct GroupFunction {
    FiniteAbelianGroup group;
    std::vector<Complex> values;

    explicit GroupFunction(FiniteAbelianGroup g);
    GroupFunction(FiniteAbelianGroup g, std::vector<Complex> v);

    static GroupFunction indicator(const FiniteAbelianGroup& g, std::size_t x, Complex c = 1.0);
    /// delta_e = 1_e / measure(e), the terminal member of the Dirac family.
    static GroupFunction point_mass(const FiniteAbelianGroup& g);

    /// (L_{x0} f)(t) = f(t - x0).
    GroupFunction shifted(std::size_t x0) const;

    GroupFunction& operator+=(const GroupFunction& other);
    friend GroupFunction operator*(Complex c, GroupFunction f);
};

/// All characters, in the order of their frequency tuples' mixed-radix index.
/// RangeError for groups larger than kMaxDualSize.
std::vector<Character> dual_group(const FiniteAbelianGroup& g);

/// sum_x f(x) conj(chi(x)) measure.
Complex fourier_lca(const GroupFunction& f, const Character& chi);

/// (f * g)(z) = sum_x f(x) g(z - x) measure. DomainError on group mismatch.
GroupFunction convolve(const GroupFunction& f, const GroupFunction& g);

/// f(x) = (1/(|G| measure)) sum_chi F(f)(chi) chi(x).
GroupFunction inverse_fourier_lca(const FiniteAbelianGroup& g,
                                  const std::vector<Complex>& spectrum);

/// T(f)(chi) = sum_x K(x, chi) f(x) measure.
struct GroupKernelTransform {
    std::function<Complex(std::size_t x, const Character& chi)> kernel;
    FiniteAbelianGroup group;

    Complex operator()(const GroupFunction& f, const Character& chi) const;
};

GroupKernelTransform fourier_transform_lca(const FiniteAbelianGroup& g);
/// Kernel conj(chi'(x)) with chi' the next character in dual_group order.
GroupKernelTransform relabeled_fourier_lca(const FiniteAbelianGroup& g);
/// Kernel c(chi) conj(chi(x)).
GroupKernelTransform modulated_fourier_lca(const FiniteAbelianGroup& g,
                                           std::function<Complex(const Character&)> c);

/// |T(L_{x0} f)(chi) - conj(chi(x0)) T(f)(chi)|.
double shift_property_residual_lca(const GroupKernelTransform& t, const GroupFunction& f,
                                   std::size_t x0, const Character& chi);

/// T(delta_e)(chi); the group being discrete, the net U -> {e} terminates.
Complex dirac_family_check(const GroupKernelTransform& t, const Character& chi);

/// |T(delta_e * f)(chi) - T(delta_e)(chi) F(f)(chi)|.
double shift_factorization_residual(const GroupKernelTransform& t, const GroupFunction& f,
                               const Character& chi);

} // namespace fcheck::lca
