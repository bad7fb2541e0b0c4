#include <doctest.h>

#include <cmath>
#include <random>

#include "fcheck/lca.hpp"

using namespace fcheck;
using namespace fcheck::lca;

namespace {
GroupFunction random_function(const FiniteAbelianGroup& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<Complex> v(g.size());
    for (auto& z : v) {
        const double re = u(rng), im = u(rng);
        z = Complex(re, im);
    }
    return GroupFunction(g, v);
}
} // namespace

TEST_CASE("group structure") {
    const auto g = FiniteAbelianGroup::parse("3x5");
    CHECK(g.size() == 15);
    CHECK(g.name() == "3x5");
    for (std::size_t a = 0; a < g.size(); ++a) {
        CHECK(g.index(g.element(a)) == a);
        CHECK(g.add(a, g.neg(a)) == FiniteAbelianGroup::identity());
        for (std::size_t b = 0; b < g.size(); ++b) {
            CHECK(g.add(a, b) == g.add(b, a));
            for (std::size_t c = 0; c < g.size(); ++c) CHECK(g.add(g.add(a, b), c) == g.add(a, g.add(b, c)));
        }
    }
    CHECK_THROWS_AS(FiniteAbelianGroup::parse("3y5"), ParseError);
    CHECK_THROWS_AS(FiniteAbelianGroup::parse(""), ParseError);
    CHECK_THROWS_AS(FiniteAbelianGroup({0}), DomainError);
}

TEST_CASE("dual group") {
    const FiniteAbelianGroup z2({2});
    const auto d2 = dual_group(z2);
    REQUIRE(d2.size() == 2);
    CHECK(d2[0](z2, 1) == Complex(1.0));
    CHECK(std::abs(d2[1](z2, 1) + 1.0) < 1e-15);
    const FiniteAbelianGroup z4({4});
    const auto d4 = dual_group(z4);
    CHECK(d4.size() == 4);
    CHECK(std::abs(d4[1](z4, 1) - Complex(0, 1)) < 1e-15);
    CHECK(dual_group(FiniteAbelianGroup::parse("3x5")).size() == 15);
    CHECK_THROWS_AS(dual_group(FiniteAbelianGroup({64, 65})), RangeError);
    const auto g = FiniteAbelianGroup::parse("2x6");
    for (const auto& chi : dual_group(g))
        for (std::size_t x = 0; x < g.size(); ++x)
            for (std::size_t y = 0; y < g.size(); ++y)
                CHECK(std::abs(chi(g, g.add(x, y)) - chi(g, x) * chi(g, y)) < 1e-14);
}

TEST_CASE("fourier_lca examples") {
    const FiniteAbelianGroup z4({4});
    const auto dual = dual_group(z4);
    for (const auto& chi : dual) CHECK(fourier_lca(GroupFunction::indicator(z4, 0), chi) == Complex(1.0));
    const GroupFunction ones(z4, std::vector<Complex>(4, 1.0));
    for (std::size_t m = 1; m < 4; ++m) CHECK(std::abs(fourier_lca(ones, dual[m])) < 1e-15);
    for (std::size_t m = 0; m < 4; ++m)
        CHECK(std::abs(fourier_lca(GroupFunction::indicator(z4, 1), dual[m]) - unit_phase(m / 4.0)) < 1e-15);
}

TEST_CASE("convolution") {
    const FiniteAbelianGroup z4({4});
    const auto c = convolve(GroupFunction::indicator(z4, 1), GroupFunction::indicator(z4, 1));
    CHECK(c.values == GroupFunction::indicator(z4, 2).values);
    const auto f = random_function(z4, 1);
    CHECK(convolve(f, GroupFunction::indicator(z4, 0)).values == f.values);
    const FiniteAbelianGroup z6({6});
    const auto a = random_function(z6, 2), b = random_function(z6, 3);
    for (const auto& chi : dual_group(z6))
        CHECK(std::abs(fourier_lca(convolve(a, b), chi) - fourier_lca(a, chi) * fourier_lca(b, chi)) < 1e-12);
    CHECK_THROWS_AS(convolve(a, f), DomainError);
}

TEST_CASE("inversion") {
    for (const char* spec : {"6", "3x5", "2x2x4"}) {
        const auto g = FiniteAbelianGroup::parse(spec);
        const auto f = random_function(g, 4);
        std::vector<Complex> s;
        for (const auto& chi : dual_group(g)) s.push_back(fourier_lca(f, chi));
        const auto back = inverse_fourier_lca(g, s);
        for (std::size_t x = 0; x < g.size(); ++x) CHECK(std::abs(back.values[x] - f.values[x]) < 1e-12);
    }
}

TEST_CASE("shift property, Dirac family and factorization") {
    const FiniteAbelianGroup z8({8});
    const auto t = fourier_transform_lca(z8);
    const auto f = random_function(z8, 5);
    for (const auto& chi : dual_group(z8)) {
        for (std::size_t x0 = 0; x0 < 8; ++x0) CHECK(shift_property_residual_lca(t, f, x0, chi) < 1e-13);
        CHECK(shift_property_residual_lca(t, f, 0, chi) == 0.0);
        CHECK(std::abs(dirac_family_check(t, chi) - 1.0) < 1e-15);
    }
    auto c = [](const Character& chi) { return Complex(1.0 + chi.frequencies[0], 0.5); };
    const auto mod = modulated_fourier_lca(z8, c);
    const auto zero = modulated_fourier_lca(z8, [](const Character&) { return Complex(0.0); });
    const FiniteAbelianGroup z5({5});
    const auto g5 = random_function(z5, 6);
    const auto t5 = fourier_transform_lca(z5);
    for (const auto& chi : dual_group(z8)) {
        CHECK(shift_property_residual_lca(mod, f, 3, chi) < 1e-13);
        CHECK(std::abs(dirac_family_check(mod, chi) - c(chi)) < 1e-14);
        CHECK(dirac_family_check(zero, chi) == Complex(0.0));
        CHECK(shift_factorization_residual(mod, f, chi) < 1e-12);
        CHECK(shift_factorization_residual(t, GroupFunction::indicator(z8, 0), chi) < 1e-15);
    }
    for (const auto& chi : dual_group(z5)) CHECK(shift_factorization_residual(t5, g5, chi) < 1e-12);
}

TEST_CASE("relabeled characters break the shift property") {
    const auto g = FiniteAbelianGroup::parse("6");
    const auto t = relabeled_fourier_lca(g);
    double worst = 0.0;
    for (const auto& chi : dual_group(g)) {
        CHECK(std::abs(dirac_family_check(t, chi) - 1.0) < 1e-15);
        for (std::size_t x = 0; x < g.size(); ++x)
            worst = std::max(worst, shift_property_residual_lca(t, GroupFunction::indicator(g, 0), x, chi));
    }
    CHECK(worst > 0.1);
}

TEST_CASE("non-counting Haar measure") {
    const FiniteAbelianGroup g({6}, 0.5);
    const auto t = fourier_transform_lca(g);
    const auto f = random_function(g, 8);
    for (const auto& chi : dual_group(g)) {
        CHECK(std::abs(dirac_family_check(t, chi) - 1.0) < 1e-15);
        CHECK(std::abs(t(f, chi) - fourier_lca(f, chi)) < 1e-14);
        CHECK(shift_factorization_residual(t, f, chi) < 1e-13);
    }
}
