#include "qplane/plane.hpp"

#include <algorithm>

namespace qplane {

MonomialProduct monomial_mul(const Monomial& a, const Monomial& b) {
    MonomialProduct out;
    out.monomial = {a.y_deg + b.y_deg, a.x_deg + b.x_deg};
    out.q_exponent = BigInt(a.x_deg) * b.y_deg;
    return out;
}

PlaneElement PlaneElement::monomial(Monomial m, QScalar c) {
    PlaneElement e;
    if (m.y_deg < 0 || m.x_deg < 0) throw Error("PlaneElement: negative degree");
    if (!c.is_zero()) e.terms_.emplace(m, std::move(c));
    return e;
}

QScalar PlaneElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? QScalar() : it->second;
}

int PlaneElement::max_x_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.x_deg);
    return d;
}

int PlaneElement::max_y_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.y_deg);
    return d;
}

void PlaneElement::add_term(const Monomial& m, const QScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

PlaneElement& PlaneElement::operator+=(const PlaneElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

PlaneElement& PlaneElement::operator-=(const PlaneElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

PlaneElement operator*(const PlaneElement& a, const PlaneElement& b) {
    PlaneElement out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            MonomialProduct p = monomial_mul(ma, mb);
            out.add_term(p.monomial, ca * cb * QScalar::q_power(p.q_exponent));
        }
    }
    return out;
}

PlaneElement operator-(const PlaneElement& a) {
    PlaneElement r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
}

PlaneElement PlaneElement::scaled(const QScalar& c) const {
    PlaneElement r;
    if (c.is_zero()) return r;
    for (const auto& [m, t] : terms_) {
        QScalar v = t * c;
        if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
    }
    return r;
}

PlaneElement PlaneElement::pow(unsigned n) const {
    PlaneElement acc = one(), b = *this;
    while (n > 0) {
        if (n & 1u) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

std::string PlaneElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        if (m.y_deg == 1) {
            mono = "y";
        } else if (m.y_deg > 1) {
            mono = "y^" + std::to_string(m.y_deg);
        }
        if (m.x_deg >= 1) {
            if (!mono.empty()) mono += "*";
            mono += m.x_deg == 1 ? "x" : "x^" + std::to_string(m.x_deg);
        }
        std::string term;
        if (mono.empty()) {
            term = c.term_count() > 1 ? "(" + c.str() + ")" : c.str();
        } else if (c.is_one()) {
            term = mono;
        } else if (c == QScalar(-1)) {
            term = "-" + mono;
        } else {
            std::string cs = c.str();
            bool parens = c.term_count() > 1 ||
                          (c.term_count() == 1 && !c.terms().begin()->second.is_real());
            term = (parens ? "(" + cs + ")" : cs) + "*" + mono;
        }
        if (first) {
            out = term;
            first = false;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

bool u_power_identity_holds(unsigned n) {
    PlaneElement lhs = PlaneElement::one();
    const PlaneElement u = PlaneElement::u();
    for (unsigned k = 0; k < n; ++k) lhs = lhs * u;
    BigInt e = BigInt(n) * (BigInt(n) + 1) / 2;
    PlaneElement rhs = PlaneElement::monomial({static_cast<int>(n), static_cast<int>(n)},
                                              QScalar::q_power(e));
    return lhs == rhs;
}

}  // namespace qplane
