#include "qplane/serialize.hpp"

#include "qplane/randomgen.hpp"

#include <doctest.h>

using namespace qplane;

TEST_CASE("plane element json round trip") {
    Rng rng(split_seed(53, 1));
    for (int t = 0; t < 25; ++t) {
        PlaneElement a = random_plane_element(rng, 6);
        CHECK(element_from_json(element_to_json(a)) == a);
    }
    CHECK(element_from_json(element_to_json(PlaneElement::zero())) == PlaneElement::zero());
}

TEST_CASE("omega and beta gamma json round trips") {
    Rng rng(split_seed(53, 2));
    for (int t = 0; t < 25; ++t) {
        OmegaUElement w = random_omega_element(rng);
        CHECK(omega_from_json(omega_to_json(w)) == w);
        BetaGammaForm bg = to_beta_gamma(w);
        BetaGammaForm back = beta_gamma_from_json(beta_gamma_to_json(bg));
        CHECK(back.beta == bg.beta);
        CHECK(back.gamma == bg.gamma);
    }
}

TEST_CASE("pair sequence json round trip") {
    Rng rng(split_seed(53, 3));
    for (int t = 0; t < 10; ++t) {
        OmegaUElement w = random_omega_element(rng);
        for (PairConvention conv : {PairConvention::OmegaPair, PairConvention::RPhiXY}) {
            PairSequence p = to_pairs(w, conv);
            PairSequence back = pairs_from_json(pairs_to_json(p));
            CHECK(back.convention == p.convention);
            REQUIRE(back.levels.size() == p.levels.size());
            for (std::size_t n = 0; n < p.levels.size(); ++n) {
                CHECK(back.levels[n].first == p.levels[n].first);
                CHECK(back.levels[n].second == p.levels[n].second);
            }
            CHECK(from_pairs(back) == w);
        }
    }
}

TEST_CASE("matrix json carries shape and scalar kind") {
    QMatrix m = QMatrix::identity(3);
    m.at(0, 2) = QScalar::q_power(-2);
    Json j = matrix_to_json(m);
    CHECK(j.at("dim") == 3);
    CHECK(j.at("scalar") == "exact");
    CHECK(j.at("entries").size() == 9);
    CHECK(j.at("entries")[2] == "q^-2");

    CMatrix c(2);
    c.at(1, 0) = Complex(0.5, -1.0);
    Json jc = matrix_to_json(c);
    CHECK(jc.at("scalar") == "float");
    CHECK(jc.at("entries")[2][0] == 0.5);
    CHECK(jc.at("entries")[2][1] == -1.0);
}

TEST_CASE("check result json") {
    CheckResult r;
    r.name = "eta_entry_row";
    r.params = "j=2";
    r.lhs = "0";
    r.rhs = "q^2";
    r.status = CheckStatus::DiscrepancyRecorded;
    r.details = "oracle_minus_published=q^2";
    Json j = check_to_json(r);
    CHECK(j.at("name") == "eta_entry_row");
    CHECK(j.at("status") == "DISCREPANCY_RECORDED");
    CHECK(j.at("details") == "oracle_minus_published=q^2");
}

TEST_CASE("growth csv") {
    std::vector<GrowthPoint> pts = {{1, 0.5, 0.75}, {2, 0.25, 1.5}};
    const std::string csv = growth_csv(pts);
    CHECK(csv.rfind("n,estimate,reference\n", 0) == 0);
    CHECK(csv.find("\n1,0.5,0.75\n") != std::string::npos);
    CHECK(csv.find("\n2,0.25,1.5\n") != std::string::npos);
}
