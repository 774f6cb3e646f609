#include "qplane/verifiers.hpp"

#include <algorithm>
#include <cmath>

namespace qplane {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass:
            return "PASS";
        case CheckStatus::Fail:
            return "FAIL";
        case CheckStatus::DiscrepancyRecorded:
            return "DISCREPANCY_RECORDED";
    }
    return "?";
}

namespace {

BigInt tri(const BigInt& n) { return n * (n + 1) / 2; }

int oracle_dim(const OmegaUElement& a, int j) {
    PlaneElement plane = from_omega(a);
    int reach = std::max(plane.max_x_degree(), plane.max_y_degree());
    return std::max({j + a.max_u_level() + 1, reach + 1, 2});
}

struct EtaPairs {
    std::vector<QPoly> f, g;
};

EtaPairs eta_pairs(const OmegaUElement& a) {
    PairSequence seq = to_pairs(a, PairConvention::RPhiXY);
    EtaPairs out;
    out.f.reserve(seq.levels.size());
    out.g.reserve(seq.levels.size());
    for (auto& [f, g] : seq.levels) {
        out.f.push_back(std::move(f));
        out.g.push_back(std::move(g));
    }
    return out;
}

QPoly level_of(const std::vector<QPoly>& h, int k) {
    return k < static_cast<int>(h.size()) ? h[static_cast<std::size_t>(k)] : QPoly();
}

}  // namespace

QScalar eta_entry_oracle(const OmegaUElement& a, const EtaParams& p, int j) {
    if (j < 0) throw Error("eta_entry_oracle: j must be nonnegative");
    const int dim = oracle_dim(a, j);
    Generators<QScalar> g = build_generators(p.family, p.param, dim);
    QMatrix m = rep_apply(g, from_omega(a));
    return p.family == RepFamily::PiLambda ? m.at(0, j) : m.at(j, 0);
}

QScalar eta_published_formula(const OmegaUElement& a, const EtaParams& p, int j) {
    if (j < 0) throw Error("eta_published_formula: j must be nonnegative");
    EtaPairs pairs = eta_pairs(a);
    const QScalar q = QScalar::q_power(1);
    const auto& h = p.family == RepFamily::PiLambda ? pairs.g : pairs.f;
    return w_poly(h, q, j).eval(QScalar(p.param));
}

QScalar eta_corrected_kernel(const OmegaUElement& a, const EtaParams& p, int j) {
    if (j < 0) throw Error("eta_corrected_kernel: j must be nonnegative");
    EtaPairs pairs = eta_pairs(a);
    const QScalar z(p.param);
    QScalar out;
    if (p.family == RepFamily::PiLambda) {
        // g_j(lambda) lambda^j q^(j(j+1)/2)
        out += level_of(pairs.g, j).eval(z) * scalar_pow(z, static_cast<unsigned>(j)) *
               QScalar::q_power(tri(j));
        // + sum_k [f_k]_(j-k) lambda^k q^(kj - k(k-1)/2)
        for (int k = 0; k <= j; ++k) {
            QScalar c = level_of(pairs.f, k).coefficient(static_cast<std::size_t>(j - k));
            if (c.is_zero()) continue;
            BigInt e = BigInt(k) * j - BigInt(k) * (BigInt(k) - 1) / 2;
            out += c * scalar_pow(z, static_cast<unsigned>(k)) * QScalar::q_power(e);
        }
    } else {
        // f_i(mu q^i) mu^i q^(i(i+1)/2)
        QScalar arg = z * QScalar::q_power(j);
        out += level_of(pairs.f, j).eval(arg) * scalar_pow(z, static_cast<unsigned>(j)) *
               QScalar::q_power(tri(j));
        // + sum_k [g_k]_(i-k) mu^k q^(k(k+1)/2)
        for (int k = 0; k <= j; ++k) {
            QScalar c = level_of(pairs.g, k).coefficient(static_cast<std::size_t>(j - k));
            if (c.is_zero()) continue;
            out += c * scalar_pow(z, static_cast<unsigned>(k)) * QScalar::q_power(tri(k));
        }
    }
    return out;
}

EtaReport eta_report(const OmegaUElement& a, const EtaParams& p, int j_max) {
    EtaReport rep;
    rep.params = p;
    EtaPairs pairs = eta_pairs(a);
    const QScalar z(p.param);
    for (int j = 0; j <= j_max; ++j) {
        EtaEntryReport e;
        e.j = j;
        e.oracle = eta_entry_oracle(a, p, j);
        e.published = eta_published_formula(a, p, j);
        e.corrected = eta_corrected_kernel(a, p, j);
        const QScalar zj = scalar_pow(z, static_cast<unsigned>(j));
        const QScalar qt = QScalar::q_power(tri(j));
        const QPoly f = level_of(pairs.f, j), g = level_of(pairs.g, j);
        if (p.family == RepFamily::PiLambda) {
            e.diag_oracle = (f.coefficient(0) + g.eval(z)) * zj * qt;
            e.diag_published = (g.eval(z) + g.coefficient(0)) * zj * qt;
        } else {
            e.diag_oracle = (f.eval(z * QScalar::q_power(j)) + g.coefficient(0)) * zj * qt;
            e.diag_published = (f.eval(z) + f.coefficient(0)) * zj * qt;
        }
        e.corrected_matches = e.corrected == e.oracle;
        e.diag_matches = e.diag_oracle == e.diag_published;
        e.status = e.published == e.oracle ? CheckStatus::Pass : CheckStatus::DiscrepancyRecorded;
        rep.all_corrected_match = rep.all_corrected_match && e.corrected_matches;
        rep.any_discrepancy = rep.any_discrepancy || e.status != CheckStatus::Pass;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

std::vector<CheckResult> eta_report_checks(const EtaReport& rep) {
    std::vector<CheckResult> out;
    const char* side = rep.params.family == RepFamily::PiLambda ? "row" : "column";
    for (const EtaEntryReport& e : rep.entries) {
        CheckResult r;
        r.name = std::string("eta_entry_") + side;
        r.params = "j=" + std::to_string(e.j) + ", param=" + rep.params.param.str();
        r.lhs = e.published.str();
        r.rhs = e.oracle.str();
        r.status = e.status;
        QScalar diff = e.oracle - e.published;
        r.details = "corrected_matches=" + std::string(e.corrected_matches ? "yes" : "no") +
                    ", diag_matches=" + std::string(e.diag_matches ? "yes" : "no") +
                    ", oracle_minus_published=" + diff.str();
        out.push_back(std::move(r));
    }
    return out;
}

WBoundReport w_domination_check(const std::vector<CPoly>& h, double rho, Complex q, int n,
                                int samples) {
    if (n < 0) throw Error("w_domination_check: n must be nonnegative");
    if (!(rho > 0)) throw Error("w_domination_check: rho must be positive");
    double q_abs = std::abs(q);
    if (!(q_abs > 0) || !(q_abs < 1)) throw Error("w_domination_check: need 0 < |q| < 1");

    auto level = [&](int k) -> CPoly {
        return k < static_cast<int>(h.size()) ? h[static_cast<std::size_t>(k)] : CPoly();
    };
    WBoundReport rep;
    double tri_n = 0.5 * static_cast<double>(n) * (n + 1);
    SupNormEstimate hn = sup_norm(level(n), rho, samples);
    double scale = std::pow(rho, n) * std::pow(q_abs, tri_n);
    rep.lhs_sampled = hn.lower * scale;
    rep.lhs_lower = hn.lower * scale;

    std::vector<SupNormEstimate> w(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m)
        w[static_cast<std::size_t>(m)] = sup_norm(w_poly(h, Complex(q), m), rho, samples);

    const double c32 = 1.5, c94 = 2.25;
    rep.rhs_sampled = c32 * w[static_cast<std::size_t>(n)].lower;
    rep.rhs_upper = c32 * w[static_cast<std::size_t>(n)].upper;
    double pw = 1.0;
    for (int k = 0; k + 1 <= n; ++k) {
        double div = std::pow(rho, k + 1);
        rep.rhs_sampled += c94 * pw * w[static_cast<std::size_t>(n - 1 - k)].lower / div;
        rep.rhs_upper += c94 * pw * w[static_cast<std::size_t>(n - 1 - k)].upper / div;
        pw *= 2.5;
    }
    rep.ok_strict = rep.lhs_sampled <= rep.rhs_sampled * (1.0 + 1e-6);
    rep.ok_sound = rep.lhs_lower <= rep.rhs_upper;
    return rep;
}

bool w_coefficient_identity_holds(int n, int m) {
    if (n <= m) throw Error("w_coefficient_identity_holds: need n > m");
    const Rational c32(3, 2), c52(5, 2);
    Rational lhs = c32 * c32;
    Rational pw(1);
    for (int i = 0; i <= n - m - 2; ++i) {
        lhs += c32 * c32 * c32 * pw;
        pw *= c52;
    }
    Rational rhs = c32 * c32 * rational_pow(c52, BigInt(n - m - 1));
    return lhs == rhs;
}

SeminormValue tilde_norm(const std::vector<std::pair<CPoly, CPoly>>& levels, double rho,
                         int samples) {
    SeminormValue out;
    for (const auto& [f, g] : levels) {
        SupNormEstimate ef = sup_norm(f, rho, samples);
        SupNormEstimate eg = sup_norm(g, rho, samples);
        out.lower += std::max(ef.lower, eg.lower);
        out.upper += std::max(ef.upper, eg.upper);
    }
    return out;
}

MajorizationReport majorization_report(const std::vector<std::pair<CPoly, CPoly>>& levels,
                                       double rho, double q_abs, int samples) {
    MajorizationReport rep;
    rep.rho = rho;
    rep.q_abs = q_abs;
    double r = rho * std::sqrt(q_abs);
    rep.element_norm = pair_seminorm(levels, rho, r, q_abs);

    std::vector<CPoly> fs, gs;
    fs.reserve(levels.size());
    gs.reserve(levels.size());
    for (const auto& [f, g] : levels) {
        fs.push_back(f);
        gs.push_back(g);
    }
    std::vector<std::pair<CPoly, CPoly>> w_levels;
    for (std::size_t n = 0; n < levels.size(); ++n) {
        w_levels.emplace_back(w_poly(fs, Complex(q_abs), static_cast<int>(n)),
                              w_poly(gs, Complex(q_abs), static_cast<int>(n)));
    }
    rep.w_tilde = tilde_norm(w_levels, rho, samples);
    rep.ratio_low = rep.w_tilde.upper > 0 ? rep.element_norm.lower / rep.w_tilde.upper : 0.0;
    rep.ratio_high = rep.w_tilde.lower > 0 ? rep.element_norm.upper / rep.w_tilde.lower : 0.0;
    return rep;
}

}  // namespace qplane
