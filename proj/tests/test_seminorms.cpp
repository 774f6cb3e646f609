#include "qplane/seminorms.hpp"

#include "qplane/omega.hpp"
#include "qplane/randomgen.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace qplane;

TEST_CASE("weight specs") {
    SUBCASE("validation") {
        CHECK_THROWS_AS(WeightSpec::bs(Rational(3, 2)), Error);
        CHECK_THROWS_AS(WeightSpec::bs(Rational(0)), Error);
        CHECK_NOTHROW(WeightSpec::bs(Rational(1)));
        CHECK_THROWS_AS(WeightSpec::custom({Rational(1), Rational(0)}), Error);
    }
    SUBCASE("values") {
        WeightSpec w = WeightSpec::bs(Rational(1, 2));
        CHECK(w.value(0) == Rational(1));
        CHECK(w.value(3) == Rational(1, 512));
        CHECK(WeightSpec::trivial().value(7) == Rational(1));
        WeightSpec c = WeightSpec::custom({Rational(1), Rational(2)});
        CHECK(c.value(1) == Rational(2));
        CHECK(c.max_index() == 1);
        CHECK_THROWS_AS(c.value(2), Error);
    }
}

TEST_CASE("weight submultiplicativity checks") {
    CHECK(weight_submult_check(WeightSpec::trivial(), 50).ok);
    CHECK(weight_submult_check(WeightSpec::bs(Rational(1, 2)), 60).ok);
    CHECK(weight_submult_check(WeightSpec::bs(Rational(9, 10)), 60).ok);

    SUBCASE("custom counterexample is caught with a witness") {
        WeightSpec bad = WeightSpec::custom({Rational(1), Rational(1), Rational(3)});
        SubmultReport rep = weight_submult_check(bad, 2);
        REQUIRE_FALSE(rep.ok);
        REQUIRE(rep.witness.has_value());
        CHECK(rep.witness->first == 1);
        CHECK(rep.witness->second == 1);
    }
}

TEST_CASE("series norms") {
    SUBCASE("1 + 2z at r = 1, trivial weight") {
        CHECK(cw_norm({Complex(1.0), Complex(2.0)}, 1.0, WeightSpec::trivial()) ==
              doctest::Approx(3.0));
    }
    SUBCASE("z^2 at r = 2 under the square-exponent weight") {
        const double v = cw_norm({Complex(0.0), Complex(0.0), Complex(1.0)}, 2.0,
                                 WeightSpec::bs(Rational(1, 2)));
        CHECK(v == doctest::Approx(0.25));
    }
    SUBCASE("exact variant carries a rational value for rational data") {
        SeminormValue v = cw_norm_exact({GaussianRational(Rational(1)), GaussianRational(Rational(2))},
                                        Rational(1), WeightSpec::trivial());
        REQUIRE(v.exact.has_value());
        CHECK(*v.exact == Rational(3));
        CHECK(v.lower <= 3.0);
        CHECK(v.upper >= 3.0);
    }
    SUBCASE("complex rational coefficients still bracket soundly") {
        SeminormValue v = cw_norm_exact({GaussianRational(Rational(3), Rational(4))}, Rational(1),
                                        WeightSpec::trivial());
        // |3+4i| = 5 exactly; the bracket must contain it.
        CHECK(v.lower <= 5.0);
        CHECK(v.upper >= 5.0);
        CHECK(v.upper - v.lower < 1e-9);
    }
}

TEST_CASE("sup norm brackets") {
    SUBCASE("monomials are exact on the boundary") {
        CPoly f = CPoly::power(3, Complex(2.0, 0.0));
        SupNormEstimate e = sup_norm(f, 1.5);
        CHECK(e.lower == doctest::Approx(2.0 * 1.5 * 1.5 * 1.5));
        CHECK(e.upper == doctest::Approx(2.0 * 1.5 * 1.5 * 1.5));
    }
    SUBCASE("1 + z attains its sup at z = rho") {
        CPoly f = CPoly::constant(Complex(1.0)) + CPoly::power(1, Complex(1.0));
        SupNormEstimate e = sup_norm(f, 1.0);
        CHECK(e.lower == doctest::Approx(2.0));
        CHECK(e.upper == doctest::Approx(2.0));
        CHECK(e.lower <= e.upper);
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(sup_norm(CPoly(), 0.0), Error);
        CHECK_THROWS_AS(sup_norm(CPoly(), 1.0, 4), Error);
    }
}

TEST_CASE("cauchy coefficient bounds hold on random polynomials") {
    Rng rng(split_seed(23, 5));
    for (int t = 0; t < 20; ++t) {
        CPoly f = random_cpoly(rng, 7);
        for (int m = 0; m <= f.degree() + 1; ++m) {
            CauchyReport rep = cauchy_check(f, 1.3, m);
            CHECK(rep.ok);
            CHECK(rep.coefficient_modulus <= rep.bound * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("pair seminorm") {
    std::vector<std::pair<CPoly, CPoly>> levels;
    levels.emplace_back(CPoly::constant(Complex(1.0)), CPoly::constant(Complex(1.0)));
    SUBCASE("single constant level") {
        SeminormValue v = pair_seminorm(levels, 2.0, 0.5, 0.5);
        CHECK(v.lower == doctest::Approx(1.0));
        CHECK(v.upper == doctest::Approx(1.0));
    }
    SUBCASE("two levels weight as r^n |q|^(n^2/2)") {
        levels.emplace_back(CPoly::power(1, Complex(1.0)), CPoly());
        const double rho = 2.0, r = 0.5, qa = 0.25;
        SeminormValue v = pair_seminorm(levels, rho, r, qa);
        const double expected = 1.0 + rho * r * std::sqrt(qa);
        CHECK(v.lower == doctest::Approx(expected).epsilon(1e-9));
        CHECK(v.upper == doctest::Approx(expected).epsilon(1e-9));
    }
    SUBCASE("r = rho sqrt(|q|) turns the weight into rho^n |q|^(n(n+1)/2)") {
        levels.emplace_back(CPoly::power(1, Complex(1.0)), CPoly());
        levels.emplace_back(CPoly::power(2, Complex(3.0)), CPoly::constant(Complex(0.0)));
        const double rho = 2.0, qa = 0.25;
        const double r = rho * std::sqrt(qa);
        SeminormValue v = pair_seminorm(levels, rho, r, qa);
        double expected = 0.0;
        const double level_sup[] = {1.0, rho, 3.0 * rho * rho};
        for (int n = 0; n <= 2; ++n)
            expected += level_sup[n] * std::pow(rho, n) * std::pow(qa, 0.5 * n * (n + 1));
        CHECK(v.lower == doctest::Approx(expected).epsilon(1e-9));
        CHECK(v.upper == doctest::Approx(expected).epsilon(1e-9));
    }
    SUBCASE("requires a contractive modulus") {
        CHECK_THROWS_AS(pair_seminorm(levels, 1.0, 1.0, 1.5), Error);
    }
}

TEST_CASE("coefficient norms on single monomials") {
    const Complex q(0.5, 0.0);
    // y^2 x^3: fixing the x-degree at 3 leaves the single term r^2.
    PlaneElement a = PlaneElement::monomial({2, 3}, QScalar(1));
    CHECK(coef_norm(a, q, 2.0, NormAxis::FixedX, 3) == doctest::Approx(4.0));
    CHECK(coef_norm(a, q, 2.0, NormAxis::FixedX, 2) == doctest::Approx(0.0));
    // u = q y x: the lone coefficient is q itself.
    CHECK(coef_norm(PlaneElement::u(), q, 1.0, NormAxis::FixedX, 1) == doctest::Approx(0.5));
    CHECK(coef_norm(PlaneElement::u(), q, 1.0, NormAxis::FixedY, 1) == doctest::Approx(0.5));
}

TEST_CASE("coefficient norms agree between expansions on fixed examples") {
    // a = x u + 2 y^2 u + u^2 exercises all three coordinate families.
    PlaneElement a = from_omega([] {
        OmegaUElement w;
        w.add_x(1, 1, QScalar(1));
        w.add_y(2, 1, QScalar(2));
        w.add_pure(2, QScalar(1));
        return w;
    }());
    BetaGammaForm bg = to_beta_gamma(to_omega(a));
    const Complex q(0.4, 0.3);
    for (NormAxis axis : {NormAxis::FixedX, NormAxis::FixedY}) {
        for (int index = 0; index <= 4; ++index) {
            const double direct = coef_norm(a, q, 0.8, axis, index);
            const double via = coef_norm(bg, q, 0.8, axis, index);
            CHECK(direct == doctest::Approx(via).epsilon(1e-12));
        }
    }
}

TEST_CASE("exact coefficient-norm terms at rational q") {
    PlaneElement a = PlaneElement::monomial({1, 2}, QScalar(1)) +
                     PlaneElement::monomial({2, 2}, QScalar::q_power(1));
    BetaGammaForm bg = to_beta_gamma(to_omega(a));
    for (NormAxis axis : {NormAxis::FixedX, NormAxis::FixedY}) {
        for (int index = 0; index <= 3; ++index) {
            CHECK(coef_norm_terms(a, Rational(1, 3), axis, index) ==
                  coef_norm_terms(bg, Rational(1, 3), axis, index));
        }
    }
}

TEST_CASE("level norms read the beta and gamma rows") {
    OmegaUElement w;
    w.add_x(1, 1, QScalar(1));  // beta_(1,1) = q
    w.add_pure(1, QScalar(2));  // beta_(0,1) = 2
    BetaGammaForm bg = to_beta_gamma(w);
    const Complex q(0.5, 0.0);
    // level 1: |2| + |q| * r at r = 2 -> 2 + 0.5 * 2 = 3.
    CHECK(level_norm_beta(bg, q, 2.0, 1) == doctest::Approx(3.0));
    CHECK(level_norm_gamma(bg, q, 2.0, 1) == doctest::Approx(2.0));  // gamma_(0,1) := beta_(0,1)

    SUBCASE("single beta and gamma rows") {
        OmegaUElement xxu;
        xxu.add_x(2, 1, QScalar(1));  // beta_(2,1) = q^2
        CHECK(level_norm_beta(to_beta_gamma(xxu), q, 3.0, 1) == doctest::Approx(9.0 / 4.0));

        OmegaUElement one;
        one.add_pure(0, QScalar(1));
        CHECK(level_norm_beta(to_beta_gamma(one), q, 3.0, 0) == doctest::Approx(1.0));

        OmegaUElement yyy;
        yyy.add_y(3, 2, QScalar(1));  // gamma_(3,2) = 1
        CHECK(level_norm_gamma(to_beta_gamma(yyy), q, 3.0, 2) == doctest::Approx(27.0));
    }
}

TEST_CASE("csv rows") {
    std::ostringstream os;
    write_seminorm_csv(os, {SeminormRow{"coef_x", 2, 0.5, 1.5, 1.25, 1.75}});
    const std::string text = os.str();
    CHECK(text.find("norm_family,index,r,rho,lower,upper") == 0);
    CHECK(text.find("coef_x,2,") != std::string::npos);
}

TEST_CASE("boundary sample default is env-controlled") {
    CHECK(default_boundary_samples() >= 8);
}
