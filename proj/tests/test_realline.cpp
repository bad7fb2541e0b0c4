#include <doctest.h>

#include <cmath>
#include <random>

#include "fcheck/realline.hpp"

using namespace fcheck;
using namespace fcheck::realline;
using funcspace::dirac_delta;
using funcspace::make_bump;

namespace {
// F(bump(0,1,1))(3), 30-digit adaptive quadrature.
constexpr double kBumpTransformAt3 = 0.00252573791189311;
} // namespace

TEST_CASE("fourier_r examples") {
    for (const int n : {1, 8, 64}) CHECK(std::abs(fourier_r(dirac_delta(n), 0) - 1.0) < 1e-8);
    CHECK(std::abs(fourier_r(make_bump(0, 1, 1), 3) - kBumpTransformAt3) < 1e-8);
}

TEST_CASE("sandwich inequality") {
    for (const double y : {0.0, 0.5, 1.0, 2.0})
        for (int n = 2; n <= 256; n *= 2) {
            if (!(n > 4 * std::abs(y))) continue;
            const Complex v = fourier_r(dirac_delta(n), y);
            CHECK(std::abs(v.imag()) < 1e-9);
            CHECK(v.real() >= std::cos(2 * kPi * y / n) - 1e-6);
            CHECK(v.real() <= 1.0 + 1e-6);
        }
}

TEST_CASE("apply_kernel") {
    const auto four = fourier_kernel();
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> c(-2, 2), w(0.2, 1.5), y(-3, 3);
    for (int k = 0; k < 20; ++k) {
        const auto f = make_bump(c(rng), w(rng), 1.0);
        const double yy = y(rng);
        CHECK(std::abs(apply_kernel(four, f, yy) - fourier_r(f, yy)) < 1e-9);
    }
    const auto f = make_bump(0.3, 0.8, Complex(1, 1));
    CHECK(apply_kernel(zero_kernel(), f, 1.3) == Complex(0.0));
    const auto mod = modulated_kernel([](double yy) { return Complex(1 + yy * yy); });
    CHECK(std::abs(apply_kernel(mod, f, 1.5) - 3.25 * fourier_r(f, 1.5)) < 1e-12);
}

TEST_CASE("differentiation property") {
    const auto f = make_bump(0, 1, 1);
    CHECK(diff_property_residual(fourier_kernel(), f, 2) <= 1e-7);
    CHECK(diff_property_residual(zero_kernel(), f, 2) == 0.0);
    CHECK(diff_property_residual(x_weighted_kernel(), f, 1) > 0.01);
    const auto mod = modulated_kernel([](double yy) { return Complex(1 + yy * yy); });
    KernelTransform conj_kernel;
    conj_kernel.kernel = [](double x, double y) { return std::polar(1.0, 2 * kPi * x * y); };
    CHECK(diff_property_residual(conj_kernel, f, 1.0) > 0.01);
    CHECK(diff_property_residual(mod, f, 1.0) <= 1e-7);
}

TEST_CASE("shift property") {
    const auto f = make_bump(0, 1, 1);
    CHECK(shift_property_residual_r(fourier_kernel(), f, 1.5, 2) <= 1e-7);
    CHECK(shift_property_residual_r(fourier_kernel(), f, 0.0, 2) == 0.0);
    CHECK(shift_property_residual_r(zero_kernel(), f, 1.5, 2) == 0.0);
}

TEST_CASE("limit schedule") {
    const auto s = LimitSchedule::geometric();
    CHECK(s.indices.front() == 2);
    CHECK(s.indices.back() == 256);
    CHECK_NOTHROW(s.validate());
    CHECK_THROWS_AS((LimitSchedule{{2, 4}, 1e-4}.validate()), DomainError);
    CHECK_THROWS_AS((LimitSchedule{{2, 8, 4}, 1e-4}.validate()), DomainError);
}

TEST_CASE("dirac limit recovers the modulation") {
    const auto long_schedule = LimitSchedule::geometric(12);
    const auto lim = dirac_limit(fourier_kernel(), 1.0, long_schedule);
    CHECK(lim.converged);
    CHECK(std::abs(lim.value - 1.0) < 1e-4);
    CHECK(lim.sequence.size() == 12);
    const auto zero = dirac_limit(zero_kernel(), 1.0);
    CHECK(zero.value == Complex(0.0));
    const auto mod = dirac_limit(modulated_kernel([](double yy) { return Complex(1 + yy * yy); }), 2.0, long_schedule);
    CHECK(std::abs(mod.value - 5.0) < 1e-3);
}

TEST_CASE("integration by parts") {
    const auto f = make_bump(0, 1, 1);
    CHECK(integration_by_parts_check(fourier_kernel(), f, 1) <= 1e-8);
    CHECK(integration_by_parts_check(x_weighted_kernel(), f, 1.5) <= 1e-8);
    CHECK(integration_by_parts_check(fourier_kernel(), funcspace::zero_function({-1, 1}), 1) == 0.0);
    KernelTransform xy;
    xy.kernel = [](double x, double y) { return Complex(x * y); };
    CHECK_THROWS_AS(integration_by_parts_check(xy, f, 1), CapabilityError);
    xy.kernel_dx = [](double, double y) { return Complex(y); };
    CHECK(integration_by_parts_check(xy, make_bump(0.5, 0.5, 1), 2.0) <= 1e-10);
}
