#include "qplane/parse.hpp"

#include "qplane/omega.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace qplane;

TEST_CASE("defining relation evaluates to zero") {
    CHECK(parse_to_element("x*y - q*y*x").is_zero());
}

TEST_CASE("powers of the product") {
    CHECK(parse_to_element("(x*y)^3") == PlaneElement::monomial({3, 3}, QScalar::q_power(6)));
    CHECK(parse_to_element("u^3") == parse_to_element("(x*y)^3"));
}

TEST_CASE("normalization examples") {
    CHECK(parse_to_element("x*y").str() == "q*y*x");
    CHECK(to_omega(parse_to_element("y^2*x^2")).str() == "q^-3*u^2");
}

TEST_CASE("scalars and q powers") {
    CHECK(parse_to_element("3/2") == PlaneElement::scalar(QScalar(Rational(3, 2))));
    CHECK(parse_to_element("q^-3") == PlaneElement::scalar(QScalar::q_power(-3)));
    CHECK(parse_to_element("2*i*x") ==
          PlaneElement::monomial({0, 1}, QScalar(GaussianRational(Rational(0), Rational(2)))));
    CHECK(parse_to_element("-x + x").is_zero());
    CHECK(parse_to_element("(q + q^-1)*u") ==
          PlaneElement::monomial({1, 1}, QScalar::q_power(2) + QScalar(1)));
}

TEST_CASE("whitespace is insignificant") {
    CHECK(parse_to_element("  x *y-q* y* x ").is_zero());
}

TEST_CASE("syntax errors carry 1-based columns") {
    SUBCASE("unclosed group points at its open paren") {
        try {
            parse_expression("x*(");
            FAIL("expected SyntaxError");
        } catch (const SyntaxError& e) {
            CHECK(e.column == 3);
        }
    }
    SUBCASE("nested unclosed group points at the innermost paren") {
        try {
            parse_expression("(x + (y");
            FAIL("expected SyntaxError");
        } catch (const SyntaxError& e) {
            CHECK(e.column == 6);
        }
    }
    SUBCASE("bad character") {
        try {
            parse_expression("x + #");
            FAIL("expected SyntaxError");
        } catch (const SyntaxError& e) {
            CHECK(e.column == 5);
        }
    }
    SUBCASE("negative exponents are rejected off q") {
        CHECK_THROWS_AS(parse_expression("x^-2"), SyntaxError);
        CHECK_NOTHROW(parse_expression("q^-2"));
    }
    SUBCASE("trailing input") {
        CHECK_THROWS_AS(parse_expression("x y"), SyntaxError);
    }
    SUBCASE("zero denominator") {
        CHECK_THROWS_AS(parse_expression("1/0"), SyntaxError);
    }
    SUBCASE("empty input") {
        CHECK_THROWS_AS(parse_expression(""), SyntaxError);
    }
}

TEST_CASE("print and parse stabilize") {
    const std::vector<std::string> good = {
        "x*y - q*y*x",       "(x*y)^3",          "y^2*x^2",
        "q^-3*u^2",          "1/2+1/3*i",        "-x + 2*y - 3/4",
        "(x + y)^2*(u - 1)", "q^2*y*x + i*u",    "2*(x + y*(u + 1))",
        "-(x - y)",          "1 + q + q^2",      "((x))",
    };
    for (const std::string& s : good) {
        ast::NodePtr first = parse_expression(s);
        const std::string printed = print_expression(first);
        ast::NodePtr second = parse_expression(printed);
        CHECK(print_expression(second) == printed);
        CHECK(evaluate(second) == evaluate(first));
    }
}

TEST_CASE("scalar parsing helpers") {
    CHECK(parse_gaussian("1/2+1/3*i") == GaussianRational(Rational(1, 2), Rational(1, 3)));
    CHECK(parse_gaussian("-2") == GaussianRational(-2));
    CHECK(parse_gaussian("i") == GaussianRational(Rational(0), Rational(1)));
    CHECK_THROWS_AS(parse_gaussian("x"), Error);
    CHECK_THROWS_AS(parse_gaussian("q^2"), Error);
    CHECK(parse_scalar_expression("q^2 - q^-2") ==
          QScalar::q_power(2) - QScalar::q_power(-2));

    CHECK(parse_complex("0.3") == Complex(0.3, 0.0));
    CHECK(parse_complex("-0.25+0.5i") == Complex(-0.25, 0.5));
    CHECK(parse_complex("0.4i") == Complex(0.0, 0.4));
    CHECK(parse_complex("1e-2-0.5i") == Complex(0.01, -0.5));
    CHECK(parse_complex("-i") == Complex(0.0, -1.0));
    CHECK(parse_complex("2-i") == Complex(2.0, -1.0));
    CHECK_THROWS_AS(parse_complex("fish"), Error);
}
