#pragma once

// The q-plane in its normal-form basis y^k x^l.  The defining relation
// x*y = q*y*x makes every word reducible to this basis; products only ever
// multiply coefficients by integer powers of q, so the coefficient ring is
// QScalar and q stays symbolic at this layer.

#include "qplane/scalar.hpp"

#include <compare>
#include <map>
#include <string>

namespace qplane {

struct Monomial {
    int y_deg = 0;  // k in y^k x^l
    int x_deg = 0;  // l
    auto operator<=>(const Monomial&) const = default;
};

// Product of basis monomials: (y^k x^l)(y^k' x^l') picks up q^(l*k') while
// the l x's cross the k' y's.
struct MonomialProduct {
    Monomial monomial;
    BigInt q_exponent;
};
MonomialProduct monomial_mul(const Monomial& a, const Monomial& b);

class PlaneElement {
  public:
    PlaneElement() = default;

    static PlaneElement zero() { return {}; }
    static PlaneElement one() { return monomial({0, 0}, QScalar(1)); }
    static PlaneElement x() { return monomial({0, 1}, QScalar(1)); }
    static PlaneElement y() { return monomial({1, 0}, QScalar(1)); }
    // u := x*y = q*y*x in normal form.
    static PlaneElement u() { return monomial({1, 1}, QScalar::q_power(1)); }
    static PlaneElement scalar(QScalar c) { return monomial({0, 0}, std::move(c)); }
    static PlaneElement monomial(Monomial m, QScalar c);

    const std::map<Monomial, QScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    QScalar coefficient(const Monomial& m) const;

    int max_x_degree() const;  // 0 for the zero element
    int max_y_degree() const;

    PlaneElement& operator+=(const PlaneElement& o);
    PlaneElement& operator-=(const PlaneElement& o);

    friend PlaneElement operator+(PlaneElement a, const PlaneElement& b) { return a += b; }
    friend PlaneElement operator-(PlaneElement a, const PlaneElement& b) { return a -= b; }
    friend PlaneElement operator*(const PlaneElement& a, const PlaneElement& b);
    friend PlaneElement operator-(const PlaneElement& a);
    friend bool operator==(const PlaneElement& a, const PlaneElement& b) {
        return a.terms_ == b.terms_;
    }

    PlaneElement scaled(const QScalar& c) const;
    PlaneElement pow(unsigned n) const;

    // Canonical text, terms sorted by (k, l): "q^3*y^2*x^2 + 2*x".
    std::string str() const;

  private:
    void add_term(const Monomial& m, const QScalar& c);
    std::map<Monomial, QScalar> terms_;
};

// (x*y)^n == q^(n(n+1)/2) * y^n x^n, checked by repeated multiplication.
bool u_power_identity_holds(unsigned n);

}  // namespace qplane
