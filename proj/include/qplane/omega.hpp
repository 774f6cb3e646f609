#pragma once

// Second picture of the same algebra: the basis {u^j, x^i u^j, y^i u^j} with
// u = x*y.  Conversions to and from the plane normal form, the pair-of-
// polynomials view (one (f_n, g_n) pair per u-level, glued by f_n(0) =
// g_n(0)), and the beta/gamma coefficient families used by the series norms.

#include "qplane/plane.hpp"
#include "qplane/poly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qplane {

struct OmegaKey {
    int i = 0;  // letter degree, >= 1 in x_part/y_part
    int j = 0;  // u-level
    auto operator<=>(const OmegaKey&) const = default;
};

class OmegaUElement {
  public:
    // u^j terms, key j >= 0.
    std::map<int, QScalar> pure_u;
    // x^i u^j terms, i >= 1.
    std::map<OmegaKey, QScalar> x_part;
    // y^i u^j terms, i >= 1.
    std::map<OmegaKey, QScalar> y_part;

    bool is_zero() const { return pure_u.empty() && x_part.empty() && y_part.empty(); }
    int max_u_level() const;

    void add_pure(int j, const QScalar& c);
    void add_x(int i, int j, const QScalar& c);
    void add_y(int i, int j, const QScalar& c);

    friend bool operator==(const OmegaUElement& a, const OmegaUElement& b) {
        return a.pure_u == b.pure_u && a.x_part == b.x_part && a.y_part == b.y_part;
    }

    // Canonical text: "q^-3*u^2 + x*u + y^2*u", u terms first, then x, then y.
    std::string str() const;
};

enum class PairConvention {
    // f_n carries the x side plus the full u^n constant, g_n the y side plus
    // the same constant; the represented level is f_n(X) + g_n(Y) - f_n(0).
    OmegaPair,
    // The level is f_n(X) + g_n(Y) itself, so the u^n constant is halved
    // between f_n and g_n (the unique split with zero-constant letter parts
    // that keeps f_n(0) = g_n(0)).
    RPhiXY,
};

struct PairSequence {
    PairConvention convention = PairConvention::RPhiXY;
    // levels[n] = (f_n, g_n); invariant f_n(0) == g_n(0).
    std::vector<std::pair<QPoly, QPoly>> levels;
};

struct BetaGammaForm {
    // beta[(i,j)], i >= 0: coefficient of u^j x^i; beta_ij = q^(i*j) * (coeff
    // of x^i u^j).  gamma[(i,j)], i >= 1: coefficient of y^i u^j.  The i = 0
    // column is shared: gamma_0j := beta_0j.
    std::map<OmegaKey, QScalar> beta;
    std::map<OmegaKey, QScalar> gamma;

    friend bool operator==(const BetaGammaForm& a, const BetaGammaForm& b) {
        return a.beta == b.beta && a.gamma == b.gamma;
    }
};

// Normal form -> omega basis.  y^k x^l factors through u^m with m = min(k,l)
// at the cost of q^(-m(m+1)/2), and u's commute past x via x^i u^j =
// q^(i*j) u^j x^i.
OmegaUElement to_omega(const PlaneElement& a);
PlaneElement from_omega(const OmegaUElement& a);

// Product computed by routing through the plane basis.
OmegaUElement omega_mul(const OmegaUElement& a, const OmegaUElement& b);

// Independent product using only the level relations (x u = q u x,
// u y = q y u, x y = u); agreement with omega_mul is a standing check.
OmegaUElement omega_mul_direct(const OmegaUElement& a, const OmegaUElement& b);

PairSequence to_pairs(const OmegaUElement& a, PairConvention convention);
OmegaUElement from_pairs(const PairSequence& seq);

BetaGammaForm to_beta_gamma(const OmegaUElement& a);
OmegaUElement from_beta_gamma(const BetaGammaForm& c);

// Expansion straight into the plane basis:
// beta_ij u^j x^i = beta_ij q^(j(j+1)/2) y^j x^(i+j),
// gamma_ij y^i u^j = gamma_ij q^(j(j+1)/2) y^(i+j) x^j.
PlaneElement beta_gamma_expand(const BetaGammaForm& c);

}  // namespace qplane
