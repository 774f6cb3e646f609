#include "qplane/omega.hpp"

#include <algorithm>

namespace qplane {

namespace {

BigInt tri(const BigInt& n) { return n * (n + 1) / 2; }

void add_into(std::map<OmegaKey, QScalar>& m, OmegaKey k, const QScalar& c) {
    if (c.is_zero()) return;
    auto it = m.find(k);
    if (it == m.end()) {
        m.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
}

}  // namespace

int OmegaUElement::max_u_level() const {
    int j = 0;
    if (!pure_u.empty()) j = std::max(j, pure_u.rbegin()->first);
    for (const auto& [k, c] : x_part) j = std::max(j, k.j);
    for (const auto& [k, c] : y_part) j = std::max(j, k.j);
    return j;
}

void OmegaUElement::add_pure(int j, const QScalar& c) {
    if (c.is_zero()) return;
    auto it = pure_u.find(j);
    if (it == pure_u.end()) {
        pure_u.emplace(j, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) pure_u.erase(it);
}

void OmegaUElement::add_x(int i, int j, const QScalar& c) {
    if (i < 1) throw Error("OmegaUElement: x part needs i >= 1");
    add_into(x_part, {i, j}, c);
}

void OmegaUElement::add_y(int i, int j, const QScalar& c) {
    if (i < 1) throw Error("OmegaUElement: y part needs i >= 1");
    add_into(y_part, {i, j}, c);
}

namespace {

std::string mono_str(char letter, int i, int j) {
    std::string s;
    if (i == 1) {
        s += letter;
    } else if (i > 1) {
        s += letter;
        s += "^" + std::to_string(i);
    }
    if (j >= 1) {
        if (!s.empty()) s += "*";
        s += j == 1 ? "u" : "u^" + std::to_string(j);
    }
    return s;
}

void append_term(std::string& out, const QScalar& c, const std::string& mono) {
    std::string term;
    if (mono.empty()) {
        term = c.term_count() > 1 ? "(" + c.str() + ")" : c.str();
    } else if (c.is_one()) {
        term = mono;
    } else if (c == QScalar(-1)) {
        term = "-" + mono;
    } else {
        bool parens = c.term_count() > 1 ||
                      (c.term_count() == 1 && !c.terms().begin()->second.is_real());
        term = (parens ? "(" + c.str() + ")" : c.str()) + "*" + mono;
    }
    if (out.empty()) {
        out = term;
    } else if (!term.empty() && term[0] == '-') {
        out += " - " + term.substr(1);
    } else {
        out += " + " + term;
    }
}

}  // namespace

std::string OmegaUElement::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [j, c] : pure_u) append_term(out, c, mono_str('u', j, 0));
    for (const auto& [k, c] : x_part) append_term(out, c, mono_str('x', k.i, k.j));
    for (const auto& [k, c] : y_part) append_term(out, c, mono_str('y', k.i, k.j));
    return out;
}

OmegaUElement to_omega(const PlaneElement& a) {
    OmegaUElement out;
    for (const auto& [m, c] : a.terms()) {
        int k = m.y_deg, l = m.x_deg;
        int t = std::min(k, l);
        // y^k x^l = q^(-t(t+1)/2) y^(k-t) u^t x^(l-t)
        QScalar coeff = c * QScalar::q_power(-tri(BigInt(t)));
        if (k > t) {
            out.add_y(k - t, t, coeff);
        } else if (l > t) {
            // u^t x^(l-t) = q^(-t(l-t)) x^(l-t) u^t
            coeff *= QScalar::q_power(-BigInt(t) * (l - t));
            out.add_x(l - t, t, coeff);
        } else {
            out.add_pure(t, coeff);
        }
    }
    return out;
}

PlaneElement from_omega(const OmegaUElement& a) {
    PlaneElement out;
    for (const auto& [j, c] : a.pure_u) {
        // u^j = q^(j(j+1)/2) y^j x^j
        out += PlaneElement::monomial({j, j}, c * QScalar::q_power(tri(BigInt(j))));
    }
    for (const auto& [k, c] : a.x_part) {
        // x^i u^j = q^(j(j+1)/2 + i*j) y^j x^(i+j)
        BigInt e = tri(BigInt(k.j)) + BigInt(k.i) * k.j;
        out += PlaneElement::monomial({k.j, k.i + k.j}, c * QScalar::q_power(e));
    }
    for (const auto& [k, c] : a.y_part) {
        // y^i u^j = q^(j(j+1)/2) y^(i+j) x^j
        out += PlaneElement::monomial({k.i + k.j, k.j}, c * QScalar::q_power(tri(BigInt(k.j))));
    }
    return out;
}

OmegaUElement omega_mul(const OmegaUElement& a, const OmegaUElement& b) {
    return to_omega(from_omega(a) * from_omega(b));
}

namespace {

enum class Letter { None, X, Y };

struct OmegaMono {
    Letter letter = Letter::None;
    int i = 0;  // letter degree; 0 iff letter == None
    int j = 0;  // u-level
};

void add_mono(OmegaUElement& out, const OmegaMono& m, const QScalar& c) {
    if (m.letter == Letter::X) {
        out.add_x(m.i, m.j, c);
    } else if (m.letter == Letter::Y) {
        out.add_y(m.i, m.j, c);
    } else {
        out.add_pure(m.j, c);
    }
}

// Product of two basis monomials by the level relations alone.
void direct_mono_mul(OmegaUElement& out, const OmegaMono& a, const OmegaMono& b,
                     const QScalar& coeff) {
    // Move u^(a.j) past b's letter block: u x = q^-1 x u, u y = q y u.
    BigInt e = 0;
    if (b.letter == Letter::X) e -= BigInt(a.j) * b.i;
    if (b.letter == Letter::Y) e += BigInt(a.j) * b.i;
    int j = a.j + b.j;

    OmegaMono r;
    r.j = j;
    if (a.letter == Letter::None || b.letter == Letter::None || a.letter == b.letter) {
        r.letter = a.letter == Letter::None ? b.letter : a.letter;
        r.i = a.i + b.i;
        if (r.i == 0) r.letter = Letter::None;
    } else if (a.letter == Letter::X) {
        // x^i y^m = q^(t*m - t(t+1)/2) x^(i-t) y^(m-t) u^t, t = min(i,m)
        int t = std::min(a.i, b.i);
        e += BigInt(t) * b.i - tri(BigInt(t));
        r.j += t;
        if (a.i - t > 0) {
            r.letter = Letter::X;
            r.i = a.i - t;
        } else if (b.i - t > 0) {
            r.letter = Letter::Y;
            r.i = b.i - t;
        }
    } else {
        // y^a x^b = q^-(t*b - t(t-1)/2) y^(a-t) x^(b-t) u^t, t = min(a,b)
        int t = std::min(a.i, b.i);
        e -= BigInt(t) * b.i - BigInt(t) * (BigInt(t) - 1) / 2;
        r.j += t;
        if (a.i - t > 0) {
            r.letter = Letter::Y;
            r.i = a.i - t;
        } else if (b.i - t > 0) {
            r.letter = Letter::X;
            r.i = b.i - t;
        }
    }
    add_mono(out, r, coeff * QScalar::q_power(e));
}

template <typename Fn>
void for_each_mono(const OmegaUElement& a, Fn&& fn) {
    for (const auto& [j, c] : a.pure_u) fn(OmegaMono{Letter::None, 0, j}, c);
    for (const auto& [k, c] : a.x_part) fn(OmegaMono{Letter::X, k.i, k.j}, c);
    for (const auto& [k, c] : a.y_part) fn(OmegaMono{Letter::Y, k.i, k.j}, c);
}

}  // namespace

OmegaUElement omega_mul_direct(const OmegaUElement& a, const OmegaUElement& b) {
    OmegaUElement out;
    for_each_mono(a, [&](const OmegaMono& ma, const QScalar& ca) {
        for_each_mono(b, [&](const OmegaMono& mb, const QScalar& cb) {
            direct_mono_mul(out, ma, mb, ca * cb);
        });
    });
    return out;
}

PairSequence to_pairs(const OmegaUElement& a, PairConvention convention) {
    PairSequence seq;
    seq.convention = convention;
    seq.levels.assign(static_cast<std::size_t>(a.max_u_level()) + 1, {});
    for (const auto& [k, c] : a.x_part) {
        QPoly& f = seq.levels[static_cast<std::size_t>(k.j)].first;
        f.set_coefficient(static_cast<std::size_t>(k.i), f.coefficient(k.i) + c);
    }
    for (const auto& [k, c] : a.y_part) {
        QPoly& g = seq.levels[static_cast<std::size_t>(k.j)].second;
        g.set_coefficient(static_cast<std::size_t>(k.i), g.coefficient(k.i) + c);
    }
    for (const auto& [j, c] : a.pure_u) {
        auto& [f, g] = seq.levels[static_cast<std::size_t>(j)];
        QScalar cf = convention == PairConvention::OmegaPair ? c : c * QScalar(Rational(1, 2));
        f.set_coefficient(0, cf);
        g.set_coefficient(0, cf);
    }
    return seq;
}

OmegaUElement from_pairs(const PairSequence& seq) {
    OmegaUElement out;
    for (std::size_t n = 0; n < seq.levels.size(); ++n) {
        const auto& [f, g] = seq.levels[n];
        if (!(f.coefficient(0) == g.coefficient(0)))
            throw Error("from_pairs: level " + std::to_string(n) + " violates f(0) == g(0)");
        int j = static_cast<int>(n);
        for (int i = 1; i <= f.degree(); ++i) out.add_x(i, j, f.coefficient(i));
        for (int i = 1; i <= g.degree(); ++i) out.add_y(i, j, g.coefficient(i));
        QScalar c0 = f.coefficient(0);
        if (seq.convention == PairConvention::RPhiXY) c0 += g.coefficient(0);
        out.add_pure(j, c0);
    }
    return out;
}

BetaGammaForm to_beta_gamma(const OmegaUElement& a) {
    BetaGammaForm out;
    for (const auto& [j, c] : a.pure_u) add_into(out.beta, {0, j}, c);
    for (const auto& [k, c] : a.x_part)
        add_into(out.beta, k, c * QScalar::q_power(BigInt(k.i) * k.j));
    out.gamma = a.y_part;
    return out;
}

OmegaUElement from_beta_gamma(const BetaGammaForm& c) {
    OmegaUElement out;
    for (const auto& [k, v] : c.beta) {
        if (k.i == 0) {
            out.add_pure(k.j, v);
        } else {
            out.add_x(k.i, k.j, v * QScalar::q_power(-BigInt(k.i) * k.j));
        }
    }
    for (const auto& [k, v] : c.gamma) out.add_y(k.i, k.j, v);
    return out;
}

PlaneElement beta_gamma_expand(const BetaGammaForm& c) {
    PlaneElement out;
    for (const auto& [k, v] : c.beta) {
        BigInt e = tri(BigInt(k.j));
        out += PlaneElement::monomial({k.j, k.i + k.j}, v * QScalar::q_power(e));
    }
    for (const auto& [k, v] : c.gamma) {
        BigInt e = tri(BigInt(k.j));
        out += PlaneElement::monomial({k.i + k.j, k.j}, v * QScalar::q_power(e));
    }
    return out;
}

}  // namespace qplane
