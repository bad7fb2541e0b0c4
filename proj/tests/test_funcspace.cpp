#include <doctest.h>

#include <cmath>
#include <random>

#include "fcheck/funcspace.hpp"

using namespace fcheck;
using namespace fcheck::funcspace;

namespace {
constexpr double kNormConstant = 2.25228362104358;
constexpr double kDelta1AtZero = 0.828568839869105;  // C e^{-1}
} // namespace

TEST_CASE("bump normalization constant") {
    const double c = bump_norm_constant();
    CHECK(std::abs(c - kNormConstant) < 1e-12);
    CHECK(std::abs(bump_norm_constant(QuadConfig{}.with_panels(512)) - c) < 1e-9);
    const Complex mass = numerics::integrate([](double x) { return Complex(bump_profile(x)); }, {-1, 1});
    CHECK(std::abs(c * mass - 1.0) < 1e-10);
}

TEST_CASE("bump profile edge cutoff") {
    CHECK(bump_profile(1.0) == 0.0);
    CHECK(bump_profile(-1.0 + 1e-13) == 0.0);
    CHECK(bump_profile(0.0) == doctest::Approx(std::exp(-1.0)));
}

TEST_CASE("dirac delta sequence") {
    CHECK(std::abs(dirac_delta(1)(0).real() - kDelta1AtZero) < 1e-12);
    for (const int n : {1, 3, 8, 100}) {
        const auto d = dirac_delta(n);
        CHECK(d(1.0 / n) == Complex(0.0));
        CHECK(d(-1.0 / n) == Complex(0.0));
        CHECK(d.support.lo == doctest::Approx(-1.0 / n));
        CHECK(d.support.hi == doctest::Approx(1.0 / n));
        CHECK(d(0.3 / n) == d(-0.3 / n));
        CHECK(d(0.7 / n).real() > 0.0);
    }
    const auto d4 = dirac_delta(4);
    CHECK(std::abs(numerics::integrate(d4.value, {-1, 1}) - 1.0) < 1e-8);
    CHECK_THROWS_AS(dirac_delta(0), DomainError);
    CHECK_THROWS_AS(dirac_delta(-2), DomainError);
}

TEST_CASE("make_bump") {
    CHECK(make_bump(0, 1, kNormConstant)(0).real() == doctest::Approx(dirac_delta(1)(0).real()));
    const auto b = make_bump(3, 1, 1);
    CHECK(b.support.lo == 2.0);
    CHECK(b.support.hi == 4.0);
    CHECK(std::abs(b.deriv1(3)) < 1e-15);
    CHECK(b.deriv2(3).real() == doctest::Approx(-2.0 * std::exp(-1.0)));
    CHECK_THROWS_AS(make_bump(0, 0, 1), DomainError);
    CHECK_THROWS_AS(make_bump(0, -1, 1), DomainError);
}

TEST_CASE("bump derivatives match finite differences") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> c(-3.0, 3.0), w(0.5, 2.0), u(-0.9, 0.9);
    for (int k = 0; k < 100; ++k) {
        const double ck = c(rng), hk = w(rng);
        const auto f = make_bump(ck, hk, Complex(1.0, -0.5));
        const double h = 1e-5 * hk;
        for (int j = 0; j < 32; ++j) {
            const double x = ck + hk * u(rng);
            const Complex fd1 = (f(x + h) - f(x - h)) / (2 * h);
            const Complex fd2 = (f.deriv1(x + h) - f.deriv1(x - h)) / (2 * h);
            CHECK(std::abs(fd1 - f.deriv1(x)) <= 1e-5 * (1 + std::abs(f.deriv1(x))));
            CHECK(std::abs(fd2 - f.deriv2(x)) <= 1e-5 * (1 + std::abs(f.deriv2(x))));
        }
        for (const double x : {ck - hk, ck + hk, ck + 1.5 * hk, ck - 3 * hk}) {
            CHECK(f(x) == Complex(0.0));
            CHECK(f.deriv1(x) == Complex(0.0));
            CHECK(f.deriv2(x) == Complex(0.0));
        }
    }
}

TEST_CASE("test function operations") {
    const auto f = make_bump(0, 1, 1);
    const auto g = f.translated(2.0);
    CHECK(g(2.3) == f(0.3));
    CHECK(g.support.lo == 1.0);
    CHECK(f.scaled(Complex(0, 2))(0.1) == Complex(0, 2) * f(0.1));
    const auto s = f + g;
    CHECK(s.support.lo == -1.0);
    CHECK(s.support.hi == 3.0);
    CHECK(s(0.2) == f(0.2));
    const auto d = f.derivative();
    CHECK(d(0.4) == f.deriv1(0.4));
    CHECK(d.deriv1(0.4) == f.deriv2(0.4));
    CHECK(zero_function()(0.5) == Complex(0.0));
}

TEST_CASE("finite sequences and differences") {
    const auto e0 = FiniteSequence::indicator(0);
    const auto dp = forward_diff(e0);
    CHECK(dp(-1) == Complex(1.0));
    CHECK(dp(0) == Complex(-1.0));
    CHECK(dp.entries().size() == 2);
    const auto f = e0 + FiniteSequence::indicator(3, 2.0);
    CHECK(backward_diff(forward_diff(f)) == forward_diff(backward_diff(f)));
    Complex total = 0.0;
    const auto df = forward_diff(f);
    for (const auto& [n, v] : df.entries()) total += v;
    CHECK(total == Complex(0.0));
    CHECK(f.support_radius() == 3);
    CHECK(forward_diff(f).support_radius() <= 4);
    CHECK(f.l1_norm() == 3.0);
    FiniteSequence z = f + (-1.0) * f;
    CHECK(z.empty());
    CHECK(z.support_radius() == 0);
}
