#include <doctest.h>

#include <cmath>
#include <random>

#include "fcheck/discrete.hpp"

using namespace fcheck;
using namespace fcheck::discrete;

TEST_CASE("dtft examples") {
    const auto e0 = FiniteSequence::indicator(0);
    for (const double y : {0.0, 0.2, 0.7}) CHECK(dtft(e0, y) == Complex(1.0));
    CHECK(std::abs(dtft(FiniteSequence::indicator(1), 0.25) - Complex(0, -1)) < 1e-15);
    CHECK(std::abs(dtft(e0 + FiniteSequence::indicator(1), 0.5)) < 1e-15);
}

TEST_CASE("apply_discrete") {
    const auto f = FiniteSequence::indicator(-2, 3.0) + FiniteSequence::indicator(5, Complex(0, 1));
    const auto t = dtft_kernel();
    CHECK(apply_discrete(t, f, 0.3) == dtft(f, 0.3));
    CHECK(apply_discrete(zero_discrete_kernel(), f, 0.3) == Complex(0.0));
    DiscreteKernelTransform s{[](long n, double y) { return (1 + y) * unit_phase(static_cast<double>(n) * y); }, 128};
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0, 1);
    for (int k = 0; k < 10; ++k) {
        const double y = u(rng);
        CHECK(std::abs(apply_discrete(s, f, y) - (1 + y) * dtft(f, y)) < 1e-14);
    }
    CHECK_THROWS_AS(apply_discrete(dtft_kernel(4), FiniteSequence::indicator(5), 0.1), RangeError);
}

TEST_CASE("difference property") {
    const auto t = dtft_kernel();
    const auto f = FiniteSequence::indicator(0) + FiniteSequence::indicator(2, 3.0);
    CHECK(difference_property_residual(t, f, 0.3) < 1e-12);
    CHECK(difference_property_residual(t, f, 0.0) < 1e-15);
    CHECK(difference_property_residual(zero_discrete_kernel(), f, 0.3) == 0.0);
}

TEST_CASE("kernel recurrence") {
    const auto t = dtft_kernel();
    for (const long n : {-5L, 0L, 1L, 17L})
        for (const double y : {0.0, 0.3, 0.95}) CHECK(kernel_recurrence_residual(t, n, y) < 1e-14);
    DiscreteKernelTransform flipped{[](long n, double y) {
                                        const Complex k = unit_phase(static_cast<double>(n) * y);
                                        return n == 0 ? -k : k;
                                    },
                                    128};
    CHECK(kernel_recurrence_residual(flipped, 0, 0.0) == doctest::Approx(2.0));
    CHECK(kernel_recurrence_residual(flipped, 1, 0.0) == doctest::Approx(2.0));
    DiscreteKernelTransform one{[](long, double) { return Complex(1.0); }, 128};
    CHECK(kernel_recurrence_residual(one, 3, 0.0) == 0.0);
}

TEST_CASE("reconstruct kernel") {
    for (const auto& [n, v] : reconstruct_kernel(0.0, 10)) CHECK(v == Complex(1.0));
    CHECK(std::abs(reconstruct_kernel(0.25, 1).at(1) - Complex(0, -1)) < 1e-15);
    double worst = 0.0;
    for (int k = 1; k <= 9; ++k)
        for (const auto& [n, v] : reconstruct_kernel(0.1 * k, 64))
            worst = std::max(worst, std::abs(v - unit_phase(static_cast<double>(n) * 0.1 * k)));
    CHECK(worst <= 1e-12);
    CHECK(reconstruct_kernel(0.4, 64).size() == 129);
    CHECK_THROWS_AS(reconstruct_kernel(0.1, -1), DomainError);
}

TEST_CASE("summation by parts") {
    const auto t = dtft_kernel();
    const auto f = FiniteSequence::indicator(0) + FiniteSequence::indicator(1, 2.0);
    CHECK(summation_by_parts_check(t, f, 0.2) < 1e-14);
    CHECK(summation_by_parts_check(t, FiniteSequence{}, 0.2) == 0.0);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1, 1);
    std::map<long, Complex> table;
    for (long n = -6; n <= 6; ++n) {
        const double re = u(rng), im = u(rng);
        table[n] = Complex(re, im);
    }
    DiscreteKernelTransform random{[table](long n, double) {
                                       const auto it = table.find(n);
                                       return it == table.end() ? Complex(0.0) : it->second;
                                   },
                                   16};
    FiniteSequence g;
    for (long n = -4; n <= 4; ++n) g.set(n, Complex(u(rng), u(rng)));
    CHECK(summation_by_parts_check(random, g, 0.0) < 1e-13);
}

TEST_CASE("verdict soundness: difference property and indicator pin the kernel") {
    const auto t = dtft_kernel(64);
    for (const double y : {0.1, 0.35, 0.8}) {
        CHECK(std::abs(apply_discrete(t, FiniteSequence::indicator(0), y) - 1.0) < 1e-12);
        for (long n = -64; n <= 64; ++n)
            CHECK(std::abs(t.kernel(n, y) - reconstruct_kernel(y, 64).at(n)) < 1e-10);
    }
}
