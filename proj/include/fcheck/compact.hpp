#pragma once

// Finite groups as compact groups: a small catalog with hardcoded unitary
// irreducible representations, the block-valued Fourier transform
//   F(f)(pi) = (1/|G|) sum_x f(x) pi(x)^*,
// integrated representations and the axiom checks that single the Fourier
// transform out among linear maps into the block algebra.

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fcheck/common.hpp"
#include "fcheck/report.hpp"

namespace fcheck::compact {

using Matrix = Eigen::MatrixXcd;

struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<int>> mul;  ///< mul[a][b] = index of ab
    std::vector<int> inv;
    int identity = 0;
    std::string name;

    int operator()(int a, int b) const { return mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int inverse(int a) const { return inv[static_cast<std::size_t>(a)]; }
    bool is_abelian() const;

    /// Throws DomainError unless associativity, identity and inverse laws hold.
    void validate() const;
};

inline constexpr int kMaxCyclicOrder = 64;

/// "Z/n" (n <= 64), "S3", "D4" or "Q8". DomainError for anything else.
FiniteGroup make_group(const std::string& name);

struct UnitaryRep {
    int dim = 0;
    std::vector<Matrix> matrices;  ///< indexed by group element
    std::string label;

    const Matrix& operator()(int x) const { return matrices[static_cast<std::size_t>(x)]; }
};

/// Largest deviation from pi(xy) = pi(x) pi(y), pi(x^{-1}) = pi(x)^* and
/// pi(x) pi(x)^* = I over the whole group.
double rep_defect(const FiniteGroup& g, const UnitaryRep& pi);

/// One representative per equivalence class of unitary irreducibles.
std::vector<UnitaryRep> irreps(const FiniteGroup& g);

/// Left and right regular representations on functions G -> C, basis e_y:
/// (pi_L(x) f)(y) = f(x^{-1} y), (pi_R(x) f)(y) = f(yx).
UnitaryRep left_regular(const FiniteGroup& g);
UnitaryRep right_regular(const FiniteGroup& g);
/// Q(f)(y) = f(y^{-1}), the permutation intertwining pi_L and pi_R.
Matrix inversion_permutation(const FiniteGroup& g);

UnitaryRep direct_sum(const UnitaryRep& a, const UnitaryRep& b);

struct GroupFunction {
    std::string group;
    std::vector<Complex> values;

    static GroupFunction zero(const FiniteGroup& g);
    static GroupFunction indicator(const FiniteGroup& g, int x, Complex c = 1.0);
    static GroupFunction random(const FiniteGroup& g, std::uint64_t seed);

    Complex operator()(int x) const { return values[static_cast<std::size_t>(x)]; }

    GroupFunction& operator+=(const GroupFunction& other);
    friend GroupFunction operator*(Complex c, GroupFunction f);
};

/// One matrix per irreducible representation, in irreps() order.
struct GroupFourierBlocks {
    std::vector<Matrix> blocks;

    double sup_norm() const;
};

GroupFourierBlocks group_fourier(const FiniteGroup& g, const GroupFunction& f);

/// (f * g)(z) = (1/|G|) sum_y f(y) g(z y^{-1}). With pi(x)^* in the Fourier
/// kernel this is the order for which F(f * g) = F(f) F(g).
GroupFunction convolve_g(const FiniteGroup& g, const GroupFunction& a, const GroupFunction& b);

/// f^*(x) = conj(f(x^{-1})).
GroupFunction involution(const FiniteGroup& g, const GroupFunction& f);

/// (L_x f)(t) = f(x^{-1} t).
GroupFunction left_shift(const FiniteGroup& g, const GroupFunction& f, int x);

/// Pi(f) = (1/|G|) sum_x f(x) pi(x).
Matrix integrated_rep(const FiniteGroup& g, const UnitaryRep& pi, const GroupFunction& f);

/// Largest singular value, via power iteration on A^* A (fixed seed,
/// 200 iterations).
double operator_norm(const Matrix& a);

/// Dimension of {A : A M = M A for every M in ms}.
int commutant_dimension(const std::vector<Matrix>& ms, int dim);

/// True iff the commutant of pi is the scalars.
bool schur_irreducible(const UnitaryRep& pi);

/// A unitary Q with Q pi1(x) Q^{-1} = pi2(x) for all x, if one exists.
std::optional<Matrix> unitary_equivalence(const UnitaryRep& pi1, const UnitaryRep& pi2);

/// Any map GroupFunction -> GroupFourierBlocks, declared linear.
using BlockTransform = std::function<GroupFourierBlocks(const GroupFunction&)>;

BlockTransform fourier_block_transform(const FiniteGroup& g);
/// Swaps the blocks of the first two irreducibles.
BlockTransform dual_permuted_fourier(const FiniteGroup& g);
/// U_pi F(f)(pi) U_pi^* with the given unitaries (identity where absent).
BlockTransform conjugated_fourier(const FiniteGroup& g, std::vector<Matrix> unitaries);
/// c F(f).
BlockTransform scaled_fourier(const FiniteGroup& g, Complex c);
/// F with block `which` replaced by zero.
BlockTransform annihilated_fourier(const FiniteGroup& g, std::size_t which);
BlockTransform zero_block_transform(const FiniteGroup& g);

/// ||T(f * g)(pi) - T(f)(pi) T(g)(pi)||.
double convolution_property_residual(const FiniteGroup& g, const BlockTransform& t,
                                     const GroupFunction& f, const GroupFunction& h,
                                     std::size_t pi);
/// ||T(L_x f)(pi) - T(f)(pi) pi(x)^*||.
double shift_property_residual_g(const FiniteGroup& g, const BlockTransform& t,
                                 const GroupFunction& f, int x, std::size_t pi);
/// ||T(f)(pi)^* - T(f^*)(pi)||.
double star_residual(const FiniteGroup& g, const BlockTransform& t, const GroupFunction& f,
                     std::size_t pi);

struct CharacterizationConfig {
    int random_draws = 50;
    std::uint64_t seed = 2024;
    double tolerance = 1e-12;
    double equality_tolerance = 1e-11;
};

/// One report per hypothesis (linearity, star, irreducibility, convolution,
/// shift) followed by the fourier-equality cross-check on fresh random input.
std::vector<verify::PropertyReport> characterization_checks(
    const FiniteGroup& g, const BlockTransform& t, const std::string& target_id,
    const CharacterizationConfig& cfg = {});

/// Summary over characterization_checks: pass iff every hypothesis and the
/// cross-check pass. Notes name the failing hypotheses.
verify::PropertyReport characterization_verdict(const FiniteGroup& g, const BlockTransform& t,
                                                const std::string& target_id,
                                                const CharacterizationConfig& cfg = {});

} // namespace fcheck::compact
