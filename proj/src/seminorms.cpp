#include "qplane/seminorms.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <ostream>

namespace qplane {

WeightSpec WeightSpec::bs(Rational s) {
    if (s <= 0 || s > 1) throw Error("WeightSpec: BS base must satisfy 0 < s <= 1");
    WeightSpec w;
    w.kind = WeightKind::BS;
    w.s = std::move(s);
    return w;
}

WeightSpec WeightSpec::custom(std::vector<Rational> table) {
    if (table.empty()) throw Error("WeightSpec: empty custom table");
    for (const Rational& v : table)
        if (v <= 0) throw Error("WeightSpec: weights must be positive");
    WeightSpec w;
    w.kind = WeightKind::Custom;
    w.table = std::move(table);
    return w;
}

Rational WeightSpec::value(int n) const {
    if (n < 0) throw Error("WeightSpec: negative index");
    switch (kind) {
        case WeightKind::Trivial:
            return Rational(1);
        case WeightKind::BS:
            return rational_pow(s, BigInt(n) * n);
        case WeightKind::Custom:
            if (static_cast<std::size_t>(n) >= table.size())
                throw Error("WeightSpec: index beyond custom table");
            return table[static_cast<std::size_t>(n)];
    }
    throw Error("WeightSpec: bad kind");
}

int WeightSpec::max_index() const {
    if (kind == WeightKind::Custom) return static_cast<int>(table.size()) - 1;
    return std::numeric_limits<int>::max();
}

SubmultReport weight_submult_check(const WeightSpec& w, int max_n) {
    SubmultReport rep;
    auto fail = [&](int m, int n) {
        rep.ok = false;
        rep.witness = {m, n};
    };
    switch (w.kind) {
        case WeightKind::Trivial:
            return rep;
        case WeightKind::BS: {
            // s^(2mn) <= 1 holds exactly for 0 < s <= 1, mn >= 0.
            if (w.s > 1) fail(1, 1);
            int direct = std::min(max_n, 40);
            for (int m = 0; m <= direct && rep.ok; ++m) {
                Rational wm = w.value(m);
                for (int n = m; n <= direct; ++n) {
                    if (m + n > direct) break;
                    if (w.value(m + n) > wm * w.value(n)) {
                        fail(m, n);
                        break;
                    }
                }
            }
            return rep;
        }
        case WeightKind::Custom: {
            int limit = std::min(max_n, w.max_index());
            for (int m = 0; m <= limit; ++m) {
                for (int n = m; n <= limit; ++n) {
                    if (m + n > limit) break;
                    if (w.value(m + n) > w.value(m) * w.value(n)) {
                        fail(m, n);
                        return rep;
                    }
                }
            }
            return rep;
        }
    }
    throw Error("weight_submult_check: bad kind");
}

int default_boundary_samples() {
    static const int cached = [] {
        if (const char* env = std::getenv("QPLANE_SAMPLES")) {
            int v = std::atoi(env);
            if (v >= 8) return v;
        }
        return 1024;
    }();
    return cached;
}

SupNormEstimate sup_norm(const CPoly& f, double rho, int samples) {
    if (!(rho > 0)) throw Error("sup_norm: rho must be positive");
    if (samples < 8) throw Error("sup_norm: need at least 8 samples");
    ensure_finite(rho, "rho");
    SupNormEstimate est;
    est.samples = samples;
    for (int k = 0; k <= f.degree(); ++k) {
        Complex c = f.coefficient(static_cast<std::size_t>(k));
        ensure_finite(c, "coefficient");
        est.upper += std::abs(c) * std::pow(rho, k);
    }
    for (int j = 0; j < samples; ++j) {
        double t = 2.0 * std::numbers::pi * j / samples;
        Complex z = std::polar(rho, t);
        est.lower = std::max(est.lower, std::abs(f.eval(z)));
    }
    return est;
}

double cw_norm(const std::vector<Complex>& series, double r, const WeightSpec& w) {
    if (!(r > 0)) throw Error("cw_norm: r must be positive");
    if (static_cast<int>(series.size()) - 1 > w.max_index())
        throw Error("cw_norm: series longer than the weight table");
    double acc = 0.0;
    for (std::size_t n = 0; n < series.size(); ++n) {
        ensure_finite(series[n], "coefficient");
        acc += std::abs(series[n]) * std::pow(r, static_cast<double>(n)) *
               w.value_d(static_cast<int>(n));
    }
    return acc;
}

SeminormValue cw_norm_exact(const std::vector<GaussianRational>& series, const Rational& r,
                            const WeightSpec& w) {
    if (r <= 0) throw Error("cw_norm_exact: r must be positive");
    if (static_cast<int>(series.size()) - 1 > w.max_index())
        throw Error("cw_norm_exact: series longer than the weight table");
    SeminormValue out;
    Rational lo(0), hi(0), exact(0);
    bool all_exact = true;
    Rational rpow(1);
    for (std::size_t n = 0; n < series.size(); ++n) {
        Rational scale = rpow * w.value(static_cast<int>(n));
        SqrtBracket b = rational_sqrt_bracket(series[n].abs_squared());
        lo += b.lo * scale;
        hi += b.hi * scale;
        if (b.exact && all_exact) {
            exact += *b.exact * scale;
        } else {
            all_exact = false;
        }
        rpow *= r;
    }
    if (all_exact) out.exact = exact;
    out.lower = std::nextafter(to_double(lo), 0.0);
    out.upper = std::nextafter(to_double(hi), std::numeric_limits<double>::infinity());
    return out;
}

CauchyReport cauchy_check(const CPoly& f, double rho, int m, int samples) {
    if (m < 0) throw Error("cauchy_check: m must be nonnegative");
    CauchyReport rep;
    rep.coefficient_modulus = std::abs(f.coefficient(static_cast<std::size_t>(m)));
    rep.bound = sup_norm(f, rho, samples).upper / std::pow(rho, m);
    rep.ok = rep.coefficient_modulus <= rep.bound * (1.0 + 1e-12);
    return rep;
}

SeminormValue pair_seminorm(const std::vector<std::pair<CPoly, CPoly>>& levels, double rho,
                            double r, double q_abs) {
    if (!(rho > 0) || !(r > 0)) throw Error("pair_seminorm: rho and r must be positive");
    if (!(q_abs > 0) || !(q_abs < 1)) throw Error("pair_seminorm: need 0 < |q| < 1");
    SeminormValue out;
    for (std::size_t n = 0; n < levels.size(); ++n) {
        SupNormEstimate ef = sup_norm(levels[n].first, rho);
        SupNormEstimate eg = sup_norm(levels[n].second, rho);
        double weight = std::pow(r, static_cast<double>(n)) *
                        std::pow(q_abs, 0.5 * static_cast<double>(n) * static_cast<double>(n));
        out.lower += std::max(ef.lower, eg.lower) * weight;
        out.upper += std::max(ef.upper, eg.upper) * weight;
    }
    return out;
}

namespace {

double qscalar_modulus(const QScalar& c, Complex q) { return std::abs(c.eval(q)); }

Rational qscalar_modulus_squared(const QScalar& c, const Rational& q) {
    return c.eval_rational(q).abs_squared();
}

BigInt tri(const BigInt& n) { return n * (n + 1) / 2; }

// Walks the beta/gamma terms contributing to the (axis, index) norm and
// reports each as (summation index k, scalar).  The expansion maps
// beta_ij -> y^j x^(i+j) and gamma_ij -> y^(i+j) x^j, both scaled by
// q^(j(j+1)/2), so for FixedX the beta family fills k <= index and gamma
// fills k > index; for FixedY the roles flip.
template <typename Fn>
void beta_gamma_norm_terms(const BetaGammaForm& c, NormAxis axis, int index, Fn&& fn) {
    if (axis == NormAxis::FixedX) {
        const int l = index;
        for (const auto& [key, v] : c.beta) {
            if (key.i + key.j != l) continue;
            fn(key.j, v * QScalar::q_power(tri(BigInt(key.j))));
        }
        for (const auto& [key, v] : c.gamma) {
            if (key.j != l) continue;
            fn(key.i + key.j, v * QScalar::q_power(tri(BigInt(key.j))));
        }
    } else {
        const int k = index;
        for (const auto& [key, v] : c.beta) {
            if (key.j != k) continue;
            fn(key.i + key.j, v * QScalar::q_power(tri(BigInt(key.j))));
        }
        for (const auto& [key, v] : c.gamma) {
            if (key.i + key.j != k) continue;
            fn(key.j, v * QScalar::q_power(tri(BigInt(key.j))));
        }
    }
}

}  // namespace

double coef_norm(const PlaneElement& a, Complex q, double r, NormAxis axis, int index) {
    if (!(r > 0)) throw Error("coef_norm: r must be positive");
    double acc = 0.0;
    for (const auto& [m, c] : a.terms()) {
        int fixed = axis == NormAxis::FixedX ? m.x_deg : m.y_deg;
        int summed = axis == NormAxis::FixedX ? m.y_deg : m.x_deg;
        if (fixed != index) continue;
        acc += qscalar_modulus(c, q) * std::pow(r, summed);
    }
    return acc;
}

double coef_norm(const BetaGammaForm& c, Complex q, double r, NormAxis axis, int index) {
    if (!(r > 0)) throw Error("coef_norm: r must be positive");
    double acc = 0.0;
    beta_gamma_norm_terms(c, axis, index, [&](int k, const QScalar& v) {
        acc += qscalar_modulus(v, q) * std::pow(r, k);
    });
    return acc;
}

std::map<int, Rational> coef_norm_terms(const PlaneElement& a, const Rational& q, NormAxis axis,
                                        int index) {
    if (q <= 0) throw Error("coef_norm_terms: q must be a positive rational");
    std::map<int, Rational> out;
    for (const auto& [m, c] : a.terms()) {
        int fixed = axis == NormAxis::FixedX ? m.x_deg : m.y_deg;
        int summed = axis == NormAxis::FixedX ? m.y_deg : m.x_deg;
        if (fixed != index) continue;
        out[summed] += qscalar_modulus_squared(c, q);
    }
    return out;
}

std::map<int, Rational> coef_norm_terms(const BetaGammaForm& c, const Rational& q, NormAxis axis,
                                        int index) {
    if (q <= 0) throw Error("coef_norm_terms: q must be a positive rational");
    std::map<int, Rational> out;
    beta_gamma_norm_terms(c, axis, index, [&](int k, const QScalar& v) {
        out[k] += qscalar_modulus_squared(v, q);
    });
    return out;
}

double level_norm_beta(const BetaGammaForm& c, Complex q, double r, int level) {
    if (!(r > 0)) throw Error("level_norm_beta: r must be positive");
    double acc = 0.0;
    for (const auto& [key, v] : c.beta) {
        if (key.j != level) continue;
        acc += qscalar_modulus(v, q) * std::pow(r, key.i);
    }
    return acc;
}

double level_norm_gamma(const BetaGammaForm& c, Complex q, double r, int level) {
    if (!(r > 0)) throw Error("level_norm_gamma: r must be positive");
    double acc = 0.0;
    // gamma_(0,level) := beta_(0,level), so the shared constant enters here too.
    auto shared = c.beta.find(OmegaKey{0, level});
    if (shared != c.beta.end()) acc += qscalar_modulus(shared->second, q);
    for (const auto& [key, v] : c.gamma) {
        if (key.j != level) continue;
        acc += qscalar_modulus(v, q) * std::pow(r, key.i);
    }
    return acc;
}

void write_seminorm_csv(std::ostream& os, const std::vector<SeminormRow>& rows) {
    os << "norm_family,index,r,rho,lower,upper\n";
    os.precision(17);
    for (const auto& row : rows) {
        os << row.family << ',' << row.index << ',' << row.r << ',' << row.rho << ','
           << row.lower << ',' << row.upper << '\n';
    }
}

}  // namespace qplane
