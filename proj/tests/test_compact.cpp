#include <doctest.h>

#include <cmath>

#include "fcheck/compact.hpp"

using namespace fcheck;
using namespace fcheck::compact;

namespace {
const char* const kGroups[] = {"S3", "D4", "Q8", "Z/5"};

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

const verify::PropertyReport& find(const std::vector<verify::PropertyReport>& rs, const std::string& id) {
    for (const auto& r : rs)
        if (r.property_id == id) return r;
    FAIL("missing report " << id);
    return rs.front();
}
} // namespace

TEST_CASE("catalog groups are groups") {
    for (const char* name : kGroups) {
        const auto g = make_group(name);
        CHECK_NOTHROW(g.validate());
        CHECK(g.name == name);
    }
    CHECK(make_group("S3").order == 6);
    CHECK(make_group("D4").order == 8);
    CHECK(make_group("Q8").order == 8);
    CHECK_FALSE(make_group("S3").is_abelian());
    CHECK_FALSE(make_group("Q8").is_abelian());
    CHECK(make_group("Z/7").is_abelian());
    CHECK_THROWS_AS(make_group("A5"), DomainError);
    CHECK_THROWS_AS(make_group("Z/65"), DomainError);
    CHECK_THROWS_AS(make_group("Z/0"), DomainError);
}

TEST_CASE("irreps are unitary, irreducible and complete") {
    for (const char* name : kGroups) {
        const auto g = make_group(name);
        const auto reps = irreps(g);
        int sum = 0;
        for (const auto& pi : reps) {
            CHECK(rep_defect(g, pi) < 1e-12);
            CHECK(schur_irreducible(pi));
            sum += pi.dim * pi.dim;
        }
        CHECK(sum == g.order);
        for (std::size_t a = 0; a < reps.size(); ++a)
            for (std::size_t b = a + 1; b < reps.size(); ++b)
                if (reps[a].dim == reps[b].dim) CHECK_FALSE(unitary_equivalence(reps[a], reps[b]).has_value());
    }
    CHECK(irreps(make_group("S3")).size() == 3);
    CHECK(irreps(make_group("Q8")).size() == 5);
}

TEST_CASE("regular representations") {
    for (const char* name : kGroups) {
        const auto g = make_group(name);
        const auto l = left_regular(g), r = right_regular(g);
        CHECK(rep_defect(g, l) < 1e-12);
        CHECK(rep_defect(g, r) < 1e-12);
        CHECK_FALSE(schur_irreducible(l));
        const Matrix q = inversion_permutation(g);
        double worst = 0.0;
        for (int x = 0; x < g.order; ++x) worst = std::max(worst, max_abs(q * l(x) * q.inverse() - r(x)));
        CHECK(worst < 1e-12);
        CHECK(unitary_equivalence(l, r).has_value());
    }
}

TEST_CASE("commutant dimension") {
    const auto g = make_group("S3");
    const auto reps = irreps(g);
    const auto sum = direct_sum(reps[0], reps[1]);
    CHECK(commutant_dimension(sum.matrices, sum.dim) == 2);
    const auto twice = direct_sum(reps[2], reps[2]);
    CHECK(commutant_dimension(twice.matrices, twice.dim) == 4);
    CHECK(commutant_dimension(left_regular(g).matrices, g.order) == 6);
}

TEST_CASE("operator norm") {
    Matrix d = Matrix::Zero(3, 3);
    d(0, 0) = 2.0;
    d(1, 1) = Complex(0, -5.0);
    d(2, 2) = 1.0;
    CHECK(operator_norm(d) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(operator_norm(Matrix::Zero(2, 2)) == 0.0);
}

TEST_CASE("fourier transform algebra") {
    for (const char* name : kGroups) {
        const auto g = make_group(name);
        const auto reps = irreps(g);
        const auto f = GroupFunction::random(g, 11), h = GroupFunction::random(g, 12);
        const auto ff = group_fourier(g, f), fh = group_fourier(g, h);
        const auto fc = group_fourier(g, convolve_g(g, f, h));
        const auto fs = group_fourier(g, involution(g, f));
        GroupFunction conj_f = f;
        for (auto& v : conj_f.values) v = std::conj(v);
        const auto fbar = group_fourier(g, conj_f);
        double plancherel = 0.0, l2 = 0.0;
        for (std::size_t p = 0; p < reps.size(); ++p) {
            CHECK(max_abs(fc.blocks[p] - ff.blocks[p] * fh.blocks[p]) < 1e-12);
            CHECK(max_abs(fs.blocks[p] - ff.blocks[p].adjoint()) < 1e-12);
            CHECK(max_abs(integrated_rep(g, reps[p], f) - fbar.blocks[p].adjoint()) < 1e-12);
            for (int x = 0; x < g.order; ++x)
                CHECK(max_abs(group_fourier(g, left_shift(g, f, x)).blocks[p] - ff.blocks[p] * reps[p](x).adjoint()) <
                      1e-12);
            plancherel += reps[p].dim * ff.blocks[p].squaredNorm();
        }
        for (const auto& v : f.values) l2 += std::norm(v);
        CHECK(std::abs(plancherel - l2 / g.order) < 1e-11);
        const auto fe = group_fourier(g, GroupFunction::indicator(g, g.identity));
        for (std::size_t p = 0; p < reps.size(); ++p)
            CHECK(max_abs(fe.blocks[p] - Matrix::Identity(reps[p].dim, reps[p].dim) / g.order) < 1e-15);
    }
}

TEST_CASE("integrated representation is a star homomorphism") {
    const auto g = make_group("D4");
    const auto f = GroupFunction::random(g, 3), h = GroupFunction::random(g, 4);
    for (const auto& pi : irreps(g)) {
        const Matrix pf = integrated_rep(g, pi, f), ph = integrated_rep(g, pi, h);
        CHECK(max_abs(integrated_rep(g, pi, convolve_g(g, f, h)) - ph * pf) < 1e-12);
        CHECK(max_abs(integrated_rep(g, pi, involution(g, f)) - pf.adjoint()) < 1e-12);
    }
}

TEST_CASE("characterization of the fourier transform") {
    for (const char* name : kGroups) {
        const auto g = make_group(name);
        const auto rs = characterization_checks(g, fourier_block_transform(g), "fourier");
        for (const auto& r : rs) CHECK_MESSAGE(r.passed(), r.property_id << " " << r.residual_max);
        CHECK(characterization_verdict(g, fourier_block_transform(g), "fourier").passed());
    }
}

TEST_CASE("altered transforms fail the expected hypothesis") {
    const auto g = make_group("S3");
    CharacterizationConfig cfg;
    cfg.random_draws = 10;
    {
        const auto rs = characterization_checks(g, dual_permuted_fourier(g), "p", cfg);
        CHECK(find(rs, "shift").failed());
        CHECK(find(rs, "convolution").passed());
        CHECK(find(rs, "star").passed());
        CHECK(find(rs, "fourier-equality").failed());
    }
    {
        const auto rs = characterization_checks(g, annihilated_fourier(g, 0), "a", cfg);
        CHECK(find(rs, "irreducibility").failed());
        CHECK(find(rs, "convolution").passed());
    }
    {
        const auto rs = characterization_checks(g, scaled_fourier(g, 2.0), "s", cfg);
        CHECK(find(rs, "convolution").failed());
        CHECK(find(rs, "shift").passed());
    }
    {
        const auto rs = characterization_checks(g, zero_block_transform(g), "z", cfg);
        CHECK(find(rs, "irreducibility").failed());
        CHECK_FALSE(characterization_verdict(g, zero_block_transform(g), "z", cfg).passed());
    }
}

TEST_CASE("star residual detects non-star transforms") {
    const auto g = make_group("Z/4");
    const auto f = GroupFunction::random(g, 5);
    const auto t = scaled_fourier(g, Complex(0, 1));
    double worst = 0.0;
    for (std::size_t p = 0; p < 4; ++p) worst = std::max(worst, star_residual(g, t, f, p));
    CHECK(worst > 1e-3);
    CHECK(star_residual(g, fourier_block_transform(g), f, 1) < 1e-13);
}
