#include "qplane/scalar.hpp"

#include <doctest.h>

#include <cmath>

using namespace qplane;

TEST_CASE("rational helpers") {
    CHECK(rational_str(Rational(5)) == "5");
    CHECK(rational_str(Rational(3, 2)) == "3/2");
    CHECK(rational_pow(Rational(2, 3), BigInt(10)) == Rational(1024, 59049));
    CHECK(rational_pow(Rational(2), BigInt(-3)) == Rational(1, 8));
    CHECK(rational_pow(Rational(7), BigInt(0)) == Rational(1));
}

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational a(Rational(1, 2), Rational(1, 3));
    GaussianRational b(Rational(2), Rational(-1));

    SUBCASE("product and conjugate") {
        GaussianRational p = a * b;
        // (1/2 + i/3)(2 - i) = 1 + 1/3 + i(2/3 - 1/2)
        CHECK(p.re == Rational(4, 3));
        CHECK(p.im == Rational(1, 6));
        CHECK(a.conj().im == Rational(-1, 3));
        CHECK((a * a.conj()).im == Rational(0));
    }
    SUBCASE("squared modulus") {
        GaussianRational c(Rational(3, 4), Rational(1, 5));
        CHECK(c.abs_squared() == Rational(241, 400));
    }
    SUBCASE("powers") {
        GaussianRational i(Rational(0), Rational(1));
        CHECK(i.pow(2) == GaussianRational(-1));
        CHECK(i.pow(4) == GaussianRational(1));
        CHECK(a.pow(0) == GaussianRational(1));
    }
    SUBCASE("text") {
        CHECK(a.str() == "1/2+1/3*i");
        CHECK(GaussianRational(Rational(1, 2), Rational(-1, 3)).str() == "1/2-1/3*i");
        CHECK(GaussianRational(Rational(7)).str() == "7");
    }
}

TEST_CASE("q-scalar arithmetic and text") {
    const QScalar q = QScalar::q_power(1);
    const QScalar qinv = QScalar::q_power(-1);

    CHECK(q * qinv == QScalar(1));
    CHECK((q + qinv) * q == QScalar::q_power(2) + QScalar(1));
    CHECK((q - q).is_zero());

    CHECK(QScalar::q_power(-3).str() == "q^-3");
    CHECK((QScalar(1) + QScalar::q_power(2)).str() == "1 + q^2");
    CHECK((-q).str() == "-q");
    CHECK((QScalar(2) - QScalar::q_power(3)).str() == "2 - q^3");
    CHECK(QScalar::q_power(2, GaussianRational(Rational(1, 2), Rational(1, 3))).str() ==
          "(1/2+1/3*i)*q^2");
}

TEST_CASE("q-scalar evaluation") {
    const QScalar a = QScalar::q_power(-2) + QScalar::q_power(1, GaussianRational(3));

    SUBCASE("complex point") {
        Complex v = a.eval(Complex(2.0, 0.0));
        CHECK(std::abs(v - Complex(6.25, 0.0)) < 1e-12);
    }
    SUBCASE("rational point") {
        CHECK(a.eval_rational(Rational(2)) == Rational(25, 4));
    }
    SUBCASE("zero base") {
        CHECK_THROWS_AS(a.eval(Complex(0.0, 0.0)), ZeroQError);
        CHECK(QScalar::q_power(2).eval(Complex(0.0, 0.0)) == Complex(0.0, 0.0));
    }
}

TEST_CASE("square root brackets") {
    SUBCASE("perfect square") {
        SqrtBracket b = rational_sqrt_bracket(Rational(9, 4));
        REQUIRE(b.exact.has_value());
        CHECK(*b.exact == Rational(3, 2));
        CHECK(b.lo == Rational(3, 2));
        CHECK(b.hi == Rational(3, 2));
    }
    SUBCASE("irrational") {
        SqrtBracket b = rational_sqrt_bracket(Rational(2));
        CHECK_FALSE(b.exact.has_value());
        CHECK(b.lo * b.lo <= Rational(2));
        CHECK(b.hi * b.hi >= Rational(2));
        CHECK(b.hi - b.lo < Rational(1, 1000000));
        CHECK(b.lo > Rational(0));
    }
    SUBCASE("zero") {
        SqrtBracket b = rational_sqrt_bracket(Rational(0));
        REQUIRE(b.exact.has_value());
        CHECK(*b.exact == Rational(0));
    }
}

TEST_CASE("syntax error carries its column") {
    SyntaxError e("boom", 3);
    CHECK(e.column == 3);
    CHECK(std::string(e.what()).find("column 3") != std::string::npos);
}
