#include "qplane/representations.hpp"

#include "qplane/randomgen.hpp"

#include <doctest.h>

#include <cmath>

using namespace qplane;

namespace {

const QScalar kQ = QScalar::q_power(1);

}  // namespace

TEST_CASE("matrix basics") {
    CHECK_THROWS_AS(QMatrix(0), BadDimError);
    QMatrix a = QMatrix::identity(3);
    CHECK(a * a == a);
    CHECK(a.pow(5) == a);
    a.at(0, 2) = QScalar(2);
    QMatrix b(3);
    b.at(2, 1) = kQ;
    CHECK((a * b).at(0, 1) == QScalar::q_power(1, GaussianRational(2)));
    CHECK_THROWS_AS(a * QMatrix(2), BadDimError);
    CHECK((a - a).is_zero());
}

TEST_CASE("generator shapes") {
    const GaussianRational lambda(Rational(2, 3));
    Generators<QScalar> g = build_generators(RepFamily::PiLambda, lambda, 3);
    SUBCASE("X is the up shift") {
        CHECK(g.X.at(0, 1) == QScalar(1));
        CHECK(g.X.at(1, 2) == QScalar(1));
        CHECK(g.X.at(0, 0).is_zero());
        CHECK(g.X.at(2, 0).is_zero());
    }
    SUBCASE("Y is the scaled diagonal") {
        CHECK(g.Y.at(0, 0) == QScalar(lambda));
        CHECK(g.Y.at(1, 1) == QScalar::q_power(1, lambda));
        CHECK(g.Y.at(2, 2) == QScalar::q_power(2, lambda));
        CHECK(g.Y.at(0, 1).is_zero());
    }
    SUBCASE("mirror family transposes the shift") {
        Generators<QScalar> m = build_generators(RepFamily::PiPrimeMu, lambda, 3);
        CHECK(m.Y.at(1, 0) == QScalar(1));
        CHECK(m.Y.at(2, 1) == QScalar(1));
        CHECK(m.X.at(1, 1) == QScalar::q_power(1, lambda));
    }
    SUBCASE("minimum dimension") {
        CHECK_THROWS_AS(build_generators(RepFamily::PiLambda, lambda, 1), BadDimError);
    }
}

TEST_CASE("generator relation XY = q YX at small sizes") {
    for (int dim : {2, 3, 5}) {
        for (RepFamily fam : {RepFamily::PiLambda, RepFamily::PiPrimeMu}) {
            Generators<QScalar> g = build_generators(fam, GaussianRational(1), dim);
            CHECK(g.X * g.Y == (g.Y * g.X).scaled(kQ));
        }
    }
}

TEST_CASE("rep_apply sends generators to generators") {
    const GaussianRational lambda(Rational(1, 2));
    Generators<QScalar> g = build_generators(RepFamily::PiLambda, lambda, 4);
    CHECK(rep_apply(g, PlaneElement::x()) == g.X);
    CHECK(rep_apply(g, PlaneElement::y()) == g.Y);
    CHECK(rep_apply(g, PlaneElement::x() * PlaneElement::y()) == g.X * g.Y);
    CHECK(rep_apply(g, PlaneElement::one()) == QMatrix::identity(4));
    CHECK(rep_apply(g, PlaneElement::zero()).is_zero());
}

TEST_CASE("numeric and symbolic paths agree") {
    Rng rng(split_seed(31, 6));
    const Complex q(0.37, 0.2);
    const Complex param(0.8, -0.1);
    // The symbolic path keeps q as a variable; substitute afterwards and
    // compare against the all-numeric path entry by entry.
    for (int t = 0; t < 10; ++t) {
        PlaneElement a = random_plane_element(rng, 5);
        Generators<Complex> gn = build_generators(RepFamily::PiLambda, param, q, 8);
        CMatrix num = rep_apply(gn, a, q);

        // Numeric parameters are a special case of Gaussian-rational ones only
        // when they are rational; use a rational parameter for the comparison.
        Generators<QScalar> gs =
            build_generators(RepFamily::PiLambda, GaussianRational(Rational(4, 5)), 8);
        Generators<Complex> gn2 = build_generators(RepFamily::PiLambda, Complex(0.8, 0.0), q, 8);
        QMatrix sym = rep_apply(gs, a);
        CMatrix num2 = rep_apply(gn2, a, q);
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) {
                const Complex expect = sym.at(i, j).eval(q);
                CHECK(std::abs(expect - num2.at(i, j)) <= 1e-10 * (1.0 + std::abs(expect)));
            }
        }
        CHECK(num.dim() == 8);
    }
}

TEST_CASE("first row and column extraction") {
    Generators<QScalar> g = build_generators(RepFamily::PiLambda, GaussianRational(1), 4);
    PlaneElement u2 = PlaneElement::u().pow(2);
    auto row = first_row(rep_apply(g, u2));
    REQUIRE(row.size() == 4);
    CHECK(row[2] == QScalar::q_power(3));
    CHECK(row[0].is_zero());
    CHECK(row[1].is_zero());
    CHECK(row[3].is_zero());

    SUBCASE("a series in x reads out its own coefficients") {
        // 2 + 3x + 5x^2 -> first row (2, 3, 5, 0)
        PlaneElement a = PlaneElement::scalar(QScalar(2)) + PlaneElement::x().scaled(QScalar(3)) +
                         PlaneElement::x().pow(2).scaled(QScalar(5));
        auto r = first_row(rep_apply(g, a));
        CHECK(r[0] == QScalar(2));
        CHECK(r[1] == QScalar(3));
        CHECK(r[2] == QScalar(5));
        CHECK(r[3].is_zero());
    }
    SUBCASE("a series in y collapses to its value at the parameter") {
        // 1 + 4y + y^2 at lambda = 1/2 -> first row (1 + 2 + 1/4, 0, 0, 0)
        Generators<QScalar> gh =
            build_generators(RepFamily::PiLambda, GaussianRational(Rational(1, 2)), 4);
        PlaneElement a = PlaneElement::scalar(QScalar(1)) + PlaneElement::y().scaled(QScalar(4)) +
                         PlaneElement::y().pow(2);
        auto r = first_row(rep_apply(gh, a));
        CHECK(r[0] == QScalar(GaussianRational(Rational(13, 4))));
        CHECK(r[1].is_zero());
        CHECK(r[2].is_zero());
        CHECK(r[3].is_zero());
    }
    SUBCASE("leading entries are stable under enlarging the truncation") {
        PlaneElement a = PlaneElement::monomial({2, 1}, QScalar(1)) +
                         PlaneElement::u().pow(2).scaled(QScalar::q_power(-1)) + PlaneElement::x();
        const GaussianRational lambda(Rational(2, 3));
        auto small = first_row(rep_apply(build_generators(RepFamily::PiLambda, lambda, 6), a));
        auto large = first_row(rep_apply(build_generators(RepFamily::PiLambda, lambda, 11), a));
        for (std::size_t j = 0; j < small.size(); ++j) CHECK(small[j] == large[j]);
    }
}

TEST_CASE("upper triangular truncation is nilpotent") {
    const GaussianRational lambda(Rational(2, 3));
    for (int p : {1, 2, 3, 5, 8}) {
        Generators<QScalar> g = upper_triangular_generators(p, lambda);
        QMatrix un = g.X * g.Y;
        CHECK(un.pow(static_cast<unsigned>(p)).is_zero());
        QMatrix prev = un.pow(static_cast<unsigned>(p - 1));
        CHECK_FALSE(prev.is_zero());
        if (p >= 2) {
            const QScalar corner =
                QScalar::q_power(BigInt(p) * (p - 1) / 2, lambda.pow(static_cast<unsigned>(p - 1)));
            CHECK(prev.at(0, p - 1) == corner);
        }
    }
}

TEST_CASE("series substitution in a nilpotent argument") {
    const GaussianRational lambda(1);
    Generators<QScalar> g = upper_triangular_generators(3, lambda);
    QMatrix un = g.X * g.Y;

    SUBCASE("matches the direct sum") {
        std::vector<QScalar> coeffs = {QScalar(1), QScalar(1), QScalar(1), QScalar(7)};
        QMatrix direct = QMatrix::identity(3) + un + un * un;  // the u^3 term vanishes
        CHECK(nilpotent_series_substitute<QScalar>(coeffs, un, 3) == direct);
    }
    SUBCASE("geometric series of the bare shift fills the upper triangle") {
        std::vector<QScalar> ones = {QScalar(1), QScalar(1), QScalar(1)};
        QMatrix m = nilpotent_series_substitute<QScalar>(ones, g.X, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (j >= i)
                    CHECK(m.at(i, j) == QScalar(1));
                else
                    CHECK(m.at(i, j).is_zero());
            }
    }
    SUBCASE("rejects non-nilpotent input") {
        std::vector<QScalar> coeffs = {QScalar(1)};
        CHECK_THROWS_AS(nilpotent_series_substitute<QScalar>(coeffs, QMatrix::identity(3), 3),
                        NotNilpotentError);
    }
}

TEST_CASE("row sum norm") {
    CMatrix m(2);
    m.at(0, 0) = Complex(1.0, 0.0);
    m.at(0, 1) = Complex(-2.0, 0.0);
    m.at(1, 0) = Complex(0.0, 3.0);
    CHECK(row_sum_norm(m) == doctest::Approx(3.0));
}

TEST_CASE("growth profile stays under the reference curve") {
    for (double mag : {0.4, 0.8}) {
        auto profile = growth_profile(RepFamily::PiLambda, Complex(1.0, 0.0), Complex(mag, 0.0),
                                      12, 8);
        REQUIRE(profile.size() == 8);
        for (const GrowthPoint& p : profile) {
            CHECK(p.estimate <= (1.0 + 1e-9) * p.reference);
            // At unit parameter the estimate is |q|^((n+1)/2) on the nose.
            CHECK(p.estimate == doctest::Approx(std::pow(mag, (p.n + 1) / 2.0)).epsilon(1e-9));
        }
    }
    CHECK_THROWS_AS(growth_profile(RepFamily::PiLambda, Complex(1.0, 0.0), Complex(1.5, 0.0), 8, 4),
                    Error);
}
