#include <doctest.h>

#include <cmath>

#include "fcheck/expression.hpp"

using namespace fcheck;
using fcheck::expr::Expression;

TEST_CASE("arithmetic") {
    CHECK(Expression::parse("1 + 2*3", {})({}) == Complex(7.0));
    CHECK(Expression::parse("(1 + 2)*3", {})({}) == Complex(9.0));
    CHECK(Expression::parse("2^3^2", {})({}) == Complex(512.0));
    CHECK(Expression::parse("-2^2", {})({}) == Complex(-4.0));
    CHECK(Expression::parse("8/4/2", {})({}) == Complex(1.0));
    CHECK(Expression::parse("1.5e2", {})({}) == Complex(150.0));
    CHECK(Expression::parse("i*i", {})({}) == Complex(-1.0));
}

TEST_CASE("functions and variables") {
    const auto e = Expression::parse("exp(-2*pi*i*x*y)", {"x", "y"});
    for (const double x : {-1.0, 0.3, 2.0})
        for (const double y : {0.0, 0.7}) CHECK(std::abs(e({x, y}) - unit_phase(x * y)) < 1e-14);
    const auto f = Expression::parse("sin(r)*sqrt(2/(pi*r))", {"r"});
    CHECK(f({2.0}).real() == doctest::Approx(std::sin(2.0) * std::sqrt(1 / kPi)));
    CHECK(Expression::parse("cos(0)", {})({}) == Complex(1.0));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(Expression::parse("exp(2*pi*i*n*y", {"n", "y"}), ParseError);
    CHECK_THROWS_AS(Expression::parse("1 +", {}), ParseError);
    CHECK_THROWS_AS(Expression::parse("z", {"x"}), ParseError);
    CHECK_THROWS_AS(Expression::parse("foo(1)", {}), ParseError);
    CHECK_THROWS_AS(Expression::parse("1 2", {}), ParseError);
    CHECK_THROWS_AS(Expression::parse("", {}), ParseError);
    try {
        Expression::parse("1 + * 2", {});
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}
