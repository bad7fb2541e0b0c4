#include "fcheck/compact.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace fcheck::compact {

using verify::PropertyReport;
using verify::Role;
using verify::Witness;

namespace {

FiniteGroup from_table(std::string name, int order, const std::function<int(int, int)>& op) {
    FiniteGroup g;
    g.name = std::move(name);
    g.order = order;
    g.mul.assign(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) g.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = op(a, b);
    g.identity = -1;
    for (int e = 0; e < order && g.identity < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < order && ok; ++a) ok = g(e, a) == a && g(a, e) == a;
        if (ok) g.identity = e;
    }
    if (g.identity < 0) throw DomainError("group table for " + g.name + " has no identity");
    g.inv.assign(static_cast<std::size_t>(order), -1);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            if (g(a, b) == g.identity) g.inv[static_cast<std::size_t>(a)] = b;
    g.validate();
    return g;
}

// D_m with element index j*m + k standing for r^k s^j.
FiniteGroup dihedral(std::string name, int m) {
    return from_table(std::move(name), 2 * m, [m](int a, int b) {
        const int k1 = a % m, j1 = a / m;
        const int k2 = b % m, j2 = b / m;
        const int k = ((k1 + (j1 ? -k2 : k2)) % m + m) % m;
        return (j1 ^ j2) * m + k;
    });
}

// Q8 with index 2u + s: unit u in (1, i, j, k), s = 1 for the negative sign.
FiniteGroup quaternion() {
    // unit_product[u][v] = {unit, negative?}
    static constexpr std::array<std::array<std::array<int, 2>, 4>, 4> unit_product{{
        {{{0, 0}, {1, 0}, {2, 0}, {3, 0}}},
        {{{1, 0}, {0, 1}, {3, 0}, {2, 1}}},
        {{{2, 0}, {3, 1}, {0, 1}, {1, 0}}},
        {{{3, 0}, {2, 0}, {1, 1}, {0, 1}}},
    }};
    return from_table("Q8", 8, [](int a, int b) {
        const auto& p = unit_product[static_cast<std::size_t>(a / 2)][static_cast<std::size_t>(b / 2)];
        const int sign = (a % 2) ^ (b % 2) ^ p[1];
        return 2 * p[0] + sign;
    });
}

Matrix scalar(Complex c) {
    Matrix m(1, 1);
    m(0, 0) = c;
    return m;
}

Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

UnitaryRep one_dim(const FiniteGroup& g, const std::string& label,
                   const std::function<Complex(int)>& chi) {
    UnitaryRep r;
    r.dim = 1;
    r.label = label;
    for (int x = 0; x < g.order; ++x) r.matrices.push_back(scalar(chi(x)));
    return r;
}

std::vector<UnitaryRep> dihedral_irreps(const FiniteGroup& g, int m) {
    std::vector<UnitaryRep> reps;
    reps.push_back(one_dim(g, "trivial", [](int) { return Complex{1.0}; }));
    reps.push_back(one_dim(g, "sign", [m](int x) { return Complex{x / m ? -1.0 : 1.0}; }));
    if (m % 2 == 0) {
        reps.push_back(one_dim(g, "rotation-sign", [m](int x) {
            return Complex{(x % m) % 2 ? -1.0 : 1.0};
        }));
        reps.push_back(one_dim(g, "rotation-sign*sign", [m](int x) {
            return Complex{((x % m) % 2 ? -1.0 : 1.0) * (x / m ? -1.0 : 1.0)};
        }));
    }
    const Matrix s = mat2(1.0, 0.0, 0.0, -1.0);
    for (int h = 1; 2 * h < m; ++h) {
        UnitaryRep r;
        r.dim = 2;
        r.label = "standard-" + std::to_string(h);
        for (int x = 0; x < g.order; ++x) {
            const double theta = 2.0 * kPi * h * (x % m) / m;
            const double c = std::cos(theta), sn = std::sin(theta);
            Matrix rot = mat2(c, -sn, sn, c);
            r.matrices.push_back(x / m ? Matrix(rot * s) : rot);
        }
        reps.push_back(std::move(r));
    }
    return reps;
}

std::vector<UnitaryRep> quaternion_irreps(const FiniteGroup& g) {
    std::vector<UnitaryRep> reps;
    reps.push_back(one_dim(g, "trivial", [](int) { return Complex{1.0}; }));
    const std::array<const char*, 3> names{"chi-i", "chi-j", "chi-k"};
    for (int keep = 1; keep <= 3; ++keep) {
        reps.push_back(one_dim(g, names[static_cast<std::size_t>(keep - 1)], [keep](int x) {
            const int u = x / 2;
            return Complex{(u == 0 || u == keep) ? 1.0 : -1.0};
        }));
    }
    const std::array<Matrix, 4> units{
        mat2(1.0, 0.0, 0.0, 1.0),
        mat2(kI, 0.0, 0.0, -kI),
        mat2(0.0, 1.0, -1.0, 0.0),
        mat2(0.0, kI, kI, 0.0),
    };
    UnitaryRep two;
    two.dim = 2;
    two.label = "spin";
    for (int x = 0; x < g.order; ++x) {
        const Matrix& u = units[static_cast<std::size_t>(x / 2)];
        two.matrices.push_back(x % 2 ? Matrix(-u) : u);
    }
    reps.push_back(std::move(two));
    return reps;
}

double max_block_norm(const GroupFourierBlocks& a, const GroupFourierBlocks& b, std::size_t pi) {
    if (pi >= a.blocks.size() || pi >= b.blocks.size()) return std::numeric_limits<double>::infinity();
    const Matrix& x = a.blocks[pi];
    const Matrix& y = b.blocks[pi];
    if (x.rows() != y.rows() || x.cols() != y.cols()) return std::numeric_limits<double>::infinity();
    return operator_norm(x - y);
}

// Rows of the linear map vec(A) -> vec(A L - R A), accumulated as a Gram
// matrix so its null space can be read off an eigen-decomposition.
Eigen::MatrixXcd intertwiner_gram(const std::vector<Matrix>& left, const std::vector<Matrix>& right,
                                  int dim) {
    const int n = dim * dim;
    Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(n, n);
    const Matrix id = Matrix::Identity(dim, dim);
    for (std::size_t k = 0; k < left.size(); ++k) {
        const Matrix& l = left[k];
        const Matrix& r = right[k];
        // vec(A L) = (L^T kron I) vec(A); vec(R A) = (I kron R) vec(A).
        Eigen::MatrixXcd c(n, n);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                c.block(i * dim, j * dim, dim, dim) = l(j, i) * id - (i == j ? r : Matrix::Zero(dim, dim));
        gram += c.adjoint() * c;
    }
    return gram;
}

std::vector<Eigen::VectorXcd> null_space(const Eigen::MatrixXcd& gram) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
    const auto& ev = es.eigenvalues();
    const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    std::vector<Eigen::VectorXcd> basis;
    for (int k = 0; k < ev.size(); ++k)
        if (ev(k) < 1e-10 * scale) basis.push_back(es.eigenvectors().col(k));
    return basis;
}

} // namespace

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            if ((*this)(a, b) != (*this)(b, a)) return false;
    return true;
}

void FiniteGroup::validate() const {
    if (order < 1 || static_cast<int>(mul.size()) != order || static_cast<int>(inv.size()) != order)
        throw DomainError(name + ": malformed Cayley table");
    for (int a = 0; a < order; ++a) {
        if ((*this)(identity, a) != a || (*this)(a, identity) != a)
            throw DomainError(name + ": identity law fails");
        if ((*this)(a, inverse(a)) != identity || (*this)(inverse(a), a) != identity)
            throw DomainError(name + ": inverse law fails");
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if ((*this)((*this)(a, b), c) != (*this)(a, (*this)(b, c)))
                    throw DomainError(name + ": associativity fails");
    }
}

FiniteGroup make_group(const std::string& name) {
    if (name.rfind("Z/", 0) == 0) {
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(name.substr(2), &used);
            if (used != name.size() - 2) n = 0;
        } catch (const std::exception&) {
            n = 0;
        }
        if (n < 1 || n > kMaxCyclicOrder)
            throw DomainError("make_group: cyclic order must be in 1.." + std::to_string(kMaxCyclicOrder));
        return from_table(name, n, [n](int a, int b) { return (a + b) % n; });
    }
    if (name == "S3") return dihedral("S3", 3);
    if (name == "D4") return dihedral("D4", 4);
    if (name == "Q8") return quaternion();
    throw DomainError("make_group: unknown group '" + name + "' (expected Z/n, S3, D4 or Q8)");
}

double rep_defect(const FiniteGroup& g, const UnitaryRep& pi) {
    if (static_cast<int>(pi.matrices.size()) != g.order) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    const Matrix id = Matrix::Identity(pi.dim, pi.dim);
    for (int x = 0; x < g.order; ++x) {
        const Matrix& px = pi(x);
        if (px.rows() != pi.dim || px.cols() != pi.dim) return std::numeric_limits<double>::infinity();
        worst = std::max(worst, (px * px.adjoint() - id).cwiseAbs().maxCoeff());
        worst = std::max(worst, (pi(g.inverse(x)) - px.adjoint()).cwiseAbs().maxCoeff());
        for (int y = 0; y < g.order; ++y)
            worst = std::max(worst, (pi(g(x, y)) - px * pi(y)).cwiseAbs().maxCoeff());
    }
    return worst;
}

std::vector<UnitaryRep> irreps(const FiniteGroup& g) {
    if (g.name.rfind("Z/", 0) == 0) {
        std::vector<UnitaryRep> reps;
        const int n = g.order;
        for (int k = 0; k < n; ++k)
            reps.push_back(one_dim(g, "chi-" + std::to_string(k), [k, n](int x) {
                return unit_phase(-static_cast<double>((k * x) % n) / n);
            }));
        return reps;
    }
    if (g.name == "S3") return dihedral_irreps(g, 3);
    if (g.name == "D4") return dihedral_irreps(g, 4);
    if (g.name == "Q8") return quaternion_irreps(g);
    throw DomainError("irreps: group '" + g.name + "' is not in the catalog");
}

UnitaryRep left_regular(const FiniteGroup& g) {
    UnitaryRep r;
    r.dim = g.order;
    r.label = "left-regular";
    for (int x = 0; x < g.order; ++x) {
        Matrix m = Matrix::Zero(g.order, g.order);
        for (int y = 0; y < g.order; ++y) m(y, g(g.inverse(x), y)) = 1.0;
        r.matrices.push_back(std::move(m));
    }
    return r;
}

UnitaryRep right_regular(const FiniteGroup& g) {
    UnitaryRep r;
    r.dim = g.order;
    r.label = "right-regular";
    for (int x = 0; x < g.order; ++x) {
        Matrix m = Matrix::Zero(g.order, g.order);
        for (int y = 0; y < g.order; ++y) m(y, g(y, x)) = 1.0;
        r.matrices.push_back(std::move(m));
    }
    return r;
}

Matrix inversion_permutation(const FiniteGroup& g) {
    Matrix q = Matrix::Zero(g.order, g.order);
    for (int y = 0; y < g.order; ++y) q(y, g.inverse(y)) = 1.0;
    return q;
}

UnitaryRep direct_sum(const UnitaryRep& a, const UnitaryRep& b) {
    if (a.matrices.size() != b.matrices.size()) throw DomainError("direct_sum: group mismatch");
    UnitaryRep r;
    r.dim = a.dim + b.dim;
    r.label = a.label + "+" + b.label;
    for (std::size_t x = 0; x < a.matrices.size(); ++x) {
        Matrix m = Matrix::Zero(r.dim, r.dim);
        m.topLeftCorner(a.dim, a.dim) = a.matrices[x];
        m.bottomRightCorner(b.dim, b.dim) = b.matrices[x];
        r.matrices.push_back(std::move(m));
    }
    return r;
}

GroupFunction GroupFunction::zero(const FiniteGroup& g) {
    return {g.name, std::vector<Complex>(static_cast<std::size_t>(g.order))};
}

GroupFunction GroupFunction::indicator(const FiniteGroup& g, int x, Complex c) {
    GroupFunction f = zero(g);
    f.values.at(static_cast<std::size_t>(x)) = c;
    return f;
}

GroupFunction GroupFunction::random(const FiniteGroup& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    GroupFunction f = zero(g);
    for (auto& v : f.values) {
        const double re = u(rng);
        v = Complex(re, u(rng));
    }
    return f;
}

GroupFunction& GroupFunction::operator+=(const GroupFunction& other) {
    if (group != other.group || values.size() != other.values.size())
        throw DomainError("GroupFunction: group mismatch");
    for (std::size_t k = 0; k < values.size(); ++k) values[k] += other.values[k];
    return *this;
}

GroupFunction operator*(Complex c, GroupFunction f) {
    for (auto& v : f.values) v *= c;
    return f;
}

double GroupFourierBlocks::sup_norm() const {
    double s = 0.0;
    for (const auto& b : blocks) s = std::max(s, operator_norm(b));
    return s;
}

namespace {

void check_function(const FiniteGroup& g, const GroupFunction& f) {
    if (f.group != g.name || static_cast<int>(f.values.size()) != g.order)
        throw DomainError("function on '" + f.group + "' used with group '" + g.name + "'");
}

} // namespace

GroupFourierBlocks group_fourier(const FiniteGroup& g, const GroupFunction& f) {
    check_function(g, f);
    GroupFourierBlocks out;
    for (const auto& pi : irreps(g)) {
        Matrix acc = Matrix::Zero(pi.dim, pi.dim);
        for (int x = 0; x < g.order; ++x) acc += f(x) * pi(x).adjoint();
        out.blocks.push_back(acc / static_cast<double>(g.order));
    }
    return out;
}

GroupFunction convolve_g(const FiniteGroup& g, const GroupFunction& a, const GroupFunction& b) {
    check_function(g, a);
    check_function(g, b);
    GroupFunction h = GroupFunction::zero(g);
    for (int z = 0; z < g.order; ++z) {
        Complex s{};
        for (int y = 0; y < g.order; ++y) s += a(y) * b(g(z, g.inverse(y)));
        h.values[static_cast<std::size_t>(z)] = s / static_cast<double>(g.order);
    }
    return h;
}

GroupFunction involution(const FiniteGroup& g, const GroupFunction& f) {
    check_function(g, f);
    GroupFunction h = GroupFunction::zero(g);
    for (int x = 0; x < g.order; ++x) h.values[static_cast<std::size_t>(x)] = std::conj(f(g.inverse(x)));
    return h;
}

GroupFunction left_shift(const FiniteGroup& g, const GroupFunction& f, int x) {
    check_function(g, f);
    GroupFunction h = GroupFunction::zero(g);
    const int xi = g.inverse(x);
    for (int t = 0; t < g.order; ++t) h.values[static_cast<std::size_t>(t)] = f(g(xi, t));
    return h;
}

Matrix integrated_rep(const FiniteGroup& g, const UnitaryRep& pi, const GroupFunction& f) {
    check_function(g, f);
    Matrix acc = Matrix::Zero(pi.dim, pi.dim);
    for (int x = 0; x < g.order; ++x) acc += f(x) * pi(x);
    return acc / static_cast<double>(g.order);
}

double operator_norm(const Matrix& a) {
    if (a.size() == 0) return 0.0;
    if (a.cols() == 1) return a.norm();
    const Matrix b = a.adjoint() * a;
    std::mt19937_64 rng(0x5eed);
    std::normal_distribution<double> nd;
    Eigen::VectorXcd v(a.cols());
    for (int k = 0; k < v.size(); ++k) {
        const double re = nd(rng);
        v(k) = Complex(re, nd(rng));
    }
    v.normalize();
    for (int it = 0; it < 200; ++it) {
        Eigen::VectorXcd w = b * v;
        const double n = w.norm();
        if (n == 0.0) return 0.0;
        v = w / n;
    }
    return (a * v).norm();
}

int commutant_dimension(const std::vector<Matrix>& ms, int dim) {
    return static_cast<int>(null_space(intertwiner_gram(ms, ms, dim)).size());
}

bool schur_irreducible(const UnitaryRep& pi) {
    return commutant_dimension(pi.matrices, pi.dim) == 1;
}

std::optional<Matrix> unitary_equivalence(const UnitaryRep& pi1, const UnitaryRep& pi2) {
    if (pi1.dim != pi2.dim || pi1.matrices.size() != pi2.matrices.size()) return std::nullopt;
    const int d = pi1.dim;
    const auto basis = null_space(intertwiner_gram(pi1.matrices, pi2.matrices, d));
    if (basis.empty()) return std::nullopt;
    std::mt19937_64 rng(7);
    std::normal_distribution<double> nd;
    for (int attempt = 0; attempt < 4; ++attempt) {
        Eigen::VectorXcd combo = Eigen::VectorXcd::Zero(d * d);
        for (const auto& b : basis) {
            const double re = nd(rng);
            combo += Complex(re, nd(rng)) * b;
        }
        const Matrix a = Eigen::Map<const Matrix>(combo.data(), d, d);
        Eigen::SelfAdjointEigenSolver<Matrix> es(a.adjoint() * a);
        const auto& ev = es.eigenvalues();
        if (ev.minCoeff() <= 1e-16 * ev.maxCoeff() || ev.maxCoeff() == 0.0) continue;
        const Matrix inv_sqrt = es.eigenvectors() *
                                ev.cwiseSqrt().cwiseInverse().asDiagonal() *
                                es.eigenvectors().adjoint();
        Matrix q = a * inv_sqrt;
        const Complex tr = q.trace();
        if (std::abs(tr) > 1e-12) q *= std::conj(tr) / std::abs(tr);
        double worst = 0.0;
        for (std::size_t x = 0; x < pi1.matrices.size(); ++x)
            worst = std::max(worst, (q * pi1.matrices[x] * q.adjoint() - pi2.matrices[x]).cwiseAbs().maxCoeff());
        if (worst < 1e-9) return q;
    }
    return std::nullopt;
}

BlockTransform fourier_block_transform(const FiniteGroup& g) {
    return [g](const GroupFunction& f) { return group_fourier(g, f); };
}

BlockTransform dual_permuted_fourier(const FiniteGroup& g) {
    return [g](const GroupFunction& f) {
        GroupFourierBlocks b = group_fourier(g, f);
        if (b.blocks.size() >= 2 && b.blocks[0].rows() == b.blocks[1].rows())
            std::swap(b.blocks[0], b.blocks[1]);
        return b;
    };
}

BlockTransform conjugated_fourier(const FiniteGroup& g, std::vector<Matrix> unitaries) {
    return [g, unitaries = std::move(unitaries)](const GroupFunction& f) {
        GroupFourierBlocks b = group_fourier(g, f);
        for (std::size_t k = 0; k < b.blocks.size() && k < unitaries.size(); ++k)
            if (unitaries[k].size() > 0) b.blocks[k] = unitaries[k] * b.blocks[k] * unitaries[k].adjoint();
        return b;
    };
}

BlockTransform scaled_fourier(const FiniteGroup& g, Complex c) {
    return [g, c](const GroupFunction& f) {
        GroupFourierBlocks b = group_fourier(g, f);
        for (auto& m : b.blocks) m *= c;
        return b;
    };
}

BlockTransform annihilated_fourier(const FiniteGroup& g, std::size_t which) {
    return [g, which](const GroupFunction& f) {
        GroupFourierBlocks b = group_fourier(g, f);
        if (which < b.blocks.size()) b.blocks[which].setZero();
        return b;
    };
}

BlockTransform zero_block_transform(const FiniteGroup& g) {
    return scaled_fourier(g, 0.0);
}

double convolution_property_residual(const FiniteGroup& g, const BlockTransform& t,
                                     const GroupFunction& f, const GroupFunction& h,
                                     std::size_t pi) {
    const GroupFourierBlocks lhs = t(convolve_g(g, f, h));
    const GroupFourierBlocks tf = t(f);
    const GroupFourierBlocks th = t(h);
    if (pi >= tf.blocks.size() || pi >= th.blocks.size() ||
        tf.blocks[pi].cols() != th.blocks[pi].rows())
        return std::numeric_limits<double>::infinity();
    GroupFourierBlocks rhs;
    rhs.blocks.resize(pi + 1);
    rhs.blocks[pi] = tf.blocks[pi] * th.blocks[pi];
    return max_block_norm(lhs, rhs, pi);
}

double shift_property_residual_g(const FiniteGroup& g, const BlockTransform& t,
                                 const GroupFunction& f, int x, std::size_t pi) {
    const auto reps = irreps(g);
    if (pi >= reps.size()) return std::numeric_limits<double>::infinity();
    const GroupFourierBlocks lhs = t(left_shift(g, f, x));
    GroupFourierBlocks rhs = t(f);
    if (pi >= rhs.blocks.size() || rhs.blocks[pi].cols() != reps[pi].dim)
        return std::numeric_limits<double>::infinity();
    rhs.blocks[pi] = rhs.blocks[pi] * reps[pi](x).adjoint();
    return max_block_norm(lhs, rhs, pi);
}

double star_residual(const FiniteGroup& g, const BlockTransform& t, const GroupFunction& f,
                     std::size_t pi) {
    GroupFourierBlocks lhs = t(f);
    if (pi >= lhs.blocks.size()) return std::numeric_limits<double>::infinity();
    lhs.blocks[pi] = lhs.blocks[pi].adjoint().eval();
    return max_block_norm(lhs, t(involution(g, f)), pi);
}

namespace {

struct Candidate {
    std::string label;
    GroupFunction f;
};

std::vector<Candidate> spanning_set(const FiniteGroup& g) {
    std::vector<Candidate> out;
    for (int x = 0; x < g.order; ++x)
        out.push_back({"1_" + std::to_string(x), GroupFunction::indicator(g, x)});
    return out;
}

std::vector<Candidate> random_draws(const FiniteGroup& g, int count, std::uint64_t seed) {
    std::vector<Candidate> out;
    for (int k = 0; k < count; ++k)
        out.push_back({"draw" + std::to_string(k),
                       GroupFunction::random(g, seed * 1000003ULL + static_cast<std::uint64_t>(k))});
    return out;
}


template <class F>
double max_over_blocks(std::size_t blocks, F&& residual) {
    double worst = 0.0;
    for (std::size_t pi = 0; pi < blocks; ++pi) worst = std::max(worst, residual(pi));
    return worst;
}

// Blocks of several inputs, computed once each.
std::vector<GroupFourierBlocks> images(const BlockTransform& t, const std::vector<Candidate>& cs) {
    std::vector<GroupFourierBlocks> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(t(c.f));
    return out;
}

double block_residual(const GroupFourierBlocks& a, const GroupFourierBlocks& b, std::size_t nblocks) {
    if (a.blocks.size() != nblocks || b.blocks.size() != nblocks)
        return std::numeric_limits<double>::infinity();
    return max_over_blocks(nblocks, [&](std::size_t pi) { return max_block_norm(a, b, pi); });
}

} // namespace

std::vector<PropertyReport> characterization_checks(const FiniteGroup& g, const BlockTransform& t,
                                                    const std::string& target_id,
                                                    const CharacterizationConfig& cfg) {
    const auto reps = irreps(g);
    const std::size_t nb = reps.size();
    const std::string tag = g.name + ": ";
    const auto span = spanning_set(g);
    const auto draws = random_draws(g, cfg.random_draws, cfg.seed);
    const auto span_img = images(t, span);
    const auto draw_img = images(t, draws);
    std::vector<PropertyReport> out;

    {
        std::vector<Witness> ws;
        std::mt19937_64 rng(cfg.seed ^ 0x11aeULL);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (std::size_t k = 0; k + 1 < draws.size(); k += 2) {
            const double ar = u(rng), ai = u(rng), br = u(rng), bi = u(rng);
            const Complex a(ar, ai), b(br, bi);
            GroupFunction combo = a * draws[k].f;
            combo += b * draws[k + 1].f;
            GroupFourierBlocks expect = draw_img[k];
            const auto& other = draw_img[k + 1];
            double r = std::numeric_limits<double>::infinity();
            if (expect.blocks.size() == nb && other.blocks.size() == nb) {
                for (std::size_t pi = 0; pi < nb; ++pi)
                    expect.blocks[pi] = a * expect.blocks[pi] + b * other.blocks[pi];
                r = block_residual(t(combo), expect, nb);
            }
            ws.push_back({tag + draws[k].label + "," + draws[k + 1].label, r});
        }
        out.push_back(verify::make_report("linearity", target_id, Role::Axiom, cfg.tolerance, std::move(ws)));
    }
    {
        std::vector<Witness> ws;
        auto star_of = [&](const Candidate& c, const GroupFourierBlocks& img) {
            GroupFourierBlocks adj = img;
            for (auto& m : adj.blocks) m = m.adjoint().eval();
            return block_residual(adj, t(involution(g, c.f)), nb);
        };
        for (std::size_t k = 0; k < span.size(); ++k) ws.push_back({tag + span[k].label, star_of(span[k], span_img[k])});
        for (std::size_t k = 0; k < draws.size(); ++k) ws.push_back({tag + draws[k].label, star_of(draws[k], draw_img[k])});
        out.push_back(verify::make_report("star", target_id, Role::Axiom, cfg.tolerance, std::move(ws)));
    }
    {
        std::vector<Witness> ws;
        for (std::size_t pi = 0; pi < nb; ++pi) {
            std::vector<Matrix> ms;
            double largest = 0.0;
            bool shaped = true;
            for (const auto& img : span_img) {
                if (img.blocks.size() != nb || img.blocks[pi].rows() != reps[pi].dim ||
                    img.blocks[pi].cols() != reps[pi].dim) {
                    shaped = false;
                    break;
                }
                ms.push_back(img.blocks[pi]);
                largest = std::max(largest, img.blocks[pi].cwiseAbs().maxCoeff());
            }
            double r = std::numeric_limits<double>::infinity();
            if (shaped) {
                r = commutant_dimension(ms, reps[pi].dim) - 1.0;
                if (largest < 1e-12) r += 1.0;
            }
            ws.push_back({tag + "pi=" + reps[pi].label, r});
        }
        out.push_back(verify::make_report(
            "irreducibility", target_id, Role::Axiom, 0.5, std::move(ws),
            "residual = (commutant dimension - 1) + 1 if the block image is zero"));
    }
    {
        std::vector<Witness> ws;
        auto product_residual = [&](const GroupFunction& f, const GroupFourierBlocks& tf,
                                    const GroupFunction& h, const GroupFourierBlocks& th) {
            const GroupFourierBlocks lhs = t(convolve_g(g, f, h));
            if (tf.blocks.size() != nb || th.blocks.size() != nb) return std::numeric_limits<double>::infinity();
            GroupFourierBlocks rhs;
            for (std::size_t pi = 0; pi < nb; ++pi) {
                if (tf.blocks[pi].cols() != th.blocks[pi].rows()) return std::numeric_limits<double>::infinity();
                rhs.blocks.push_back(tf.blocks[pi] * th.blocks[pi]);
            }
            return block_residual(lhs, rhs, nb);
        };
        for (std::size_t a = 0; a < span.size(); ++a)
            for (std::size_t b = 0; b < span.size(); ++b)
                ws.push_back({tag + span[a].label + "*" + span[b].label,
                              product_residual(span[a].f, span_img[a], span[b].f, span_img[b])});
        for (std::size_t k = 0; k < draws.size(); ++k) {
            const std::size_t j = (k + 1) % draws.size();
            ws.push_back({tag + draws[k].label + "*" + draws[j].label,
                          product_residual(draws[k].f, draw_img[k], draws[j].f, draw_img[j])});
        }
        out.push_back(verify::make_report("convolution", target_id, Role::Axiom, cfg.tolerance, std::move(ws)));
    }
    {
        std::vector<Witness> ws;
        auto shift_residual = [&](const GroupFunction& f, const GroupFourierBlocks& tf, int x) {
            if (tf.blocks.size() != nb) return std::numeric_limits<double>::infinity();
            GroupFourierBlocks rhs = tf;
            for (std::size_t pi = 0; pi < nb; ++pi) {
                if (rhs.blocks[pi].cols() != reps[pi].dim) return std::numeric_limits<double>::infinity();
                rhs.blocks[pi] = rhs.blocks[pi] * reps[pi](x).adjoint();
            }
            return block_residual(t(left_shift(g, f, x)), rhs, nb);
        };
        for (std::size_t a = 0; a < span.size(); ++a)
            for (int x = 0; x < g.order; ++x)
                ws.push_back({tag + "L_" + std::to_string(x) + " " + span[a].label,
                              shift_residual(span[a].f, span_img[a], x)});
        std::mt19937_64 rng(cfg.seed ^ 0x5a1f7ULL);
        std::uniform_int_distribution<int> pick(0, g.order - 1);
        for (std::size_t k = 0; k < draws.size(); ++k) {
            const int x = pick(rng);
            ws.push_back({tag + "L_" + std::to_string(x) + " " + draws[k].label,
                          shift_residual(draws[k].f, draw_img[k], x)});
        }
        out.push_back(verify::make_report("shift", target_id, Role::Axiom, cfg.tolerance, std::move(ws)));
    }
    {
        std::vector<Witness> ws;
        const auto fresh = random_draws(g, cfg.random_draws, cfg.seed + 0x9e3779b9ULL);
        for (const auto& c : fresh)
            ws.push_back({tag + "fresh " + c.label, block_residual(t(c.f), group_fourier(g, c.f), nb)});
        out.push_back(verify::make_report("fourier-equality", target_id, Role::Conclusion,
                                          cfg.equality_tolerance, std::move(ws)));
    }
    return out;
}

PropertyReport characterization_verdict(const FiniteGroup& g, const BlockTransform& t,
                                        const std::string& target_id,
                                        const CharacterizationConfig& cfg) {
    const auto checks = characterization_checks(g, t, target_id, cfg);
    std::string failing;
    for (const auto& r : checks)
        if (r.role == Role::Axiom && !r.passed()) failing += (failing.empty() ? "" : ",") + r.property_id;
    const PropertyReport& eq = checks.back();
    PropertyReport v = verify::make_report("characterization", target_id, Role::Conclusion,
                                           cfg.equality_tolerance, eq.witnesses);
    if (!failing.empty()) {
        v.notes = "non-Fourier; failing axioms: " + failing;
        v.verdict = verify::Verdict::Fail;
    } else {
        v.notes = v.passed() ? "Fourier" : "axioms hold but cross-check failed";
    }
    return v;
}

} // namespace fcheck::compact
