#pragma once

// Weighted series norms and the polynomial sup-norm estimates feeding them.
// Sampled boundary maxima give lower bounds, coefficient sums give upper
// bounds; exact values are carried as rationals where the arithmetic allows.

#include "qplane/omega.hpp"
#include "qplane/plane.hpp"
#include "qplane/poly.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace qplane {

enum class WeightKind { Trivial, BS, Custom };

// Submultiplicative weight sequence w_n: w_(m+n) <= w_m * w_n.
struct WeightSpec {
    WeightKind kind = WeightKind::Trivial;
    Rational s = Rational(1);       // BS: w_n = s^(n^2), 0 < s <= 1
    std::vector<Rational> table;    // Custom: w_0..w_m, positive

    static WeightSpec trivial() { return {}; }
    static WeightSpec bs(Rational s);
    static WeightSpec custom(std::vector<Rational> table);

    Rational value(int n) const;  // exact weight
    double value_d(int n) const { return to_double(value(n)); }
    int max_index() const;  // last index with a defined weight (INT_MAX if unbounded)
};

struct SubmultReport {
    bool ok = true;
    std::optional<std::pair<int, int>> witness;  // first violating (m, n)
};

// Exact check of w_(m+n) <= w_m w_n for all m, n <= max_n.  Trivial and
// Custom compare rationals directly.  BS reduces to the exponent sign
// (s <= 1 and (m+n)^2 - m^2 - n^2 = 2mn >= 0) and re-verifies the low range
// by direct cross-multiplied comparison.
SubmultReport weight_submult_check(const WeightSpec& w, int max_n);

struct SeminormValue {
    std::optional<Rational> exact;  // set when the value is exactly rational
    double lower = 0.0;
    double upper = 0.0;
};

struct SupNormEstimate {
    double lower = 0.0;  // max |f| over equispaced points of the circle |z| = rho
    double upper = 0.0;  // sum of |coefficient_k| rho^k
    int samples = 0;
};

// QPLANE_SAMPLES from the environment, else 1024.
int default_boundary_samples();

// Circle sup norm of a polynomial on |z| = rho.  rho > 0, samples >= 8.
SupNormEstimate sup_norm(const CPoly& f, double rho, int samples = default_boundary_samples());

// sum_n |series[n]| r^n w_n, numeric path.  r > 0.
double cw_norm(const std::vector<Complex>& series, double r, const WeightSpec& w);

// Exact path: Gaussian-rational coefficients, |.| via squared moduli.  exact
// is set when every term modulus is rational; lower/upper always bracket.
SeminormValue cw_norm_exact(const std::vector<GaussianRational>& series, const Rational& r,
                            const WeightSpec& w);

struct CauchyReport {
    bool ok = false;
    double coefficient_modulus = 0.0;  // |f^(m)(0)/m!|, read off exactly
    double bound = 0.0;                // upper sup estimate / rho^m
};

// |f^(m)(0)|/m! <= sup|f| / rho^m on coefficients vs the upper sup estimate.
CauchyReport cauchy_check(const CPoly& f, double rho, int m,
                          int samples = default_boundary_samples());

// sum_n max(||f_n||_rho, ||g_n||_rho) r^n q_abs^(n^2/2) over a pair sequence
// with numeric coefficients.  Interval from the sup-norm brackets.
SeminormValue pair_seminorm(const std::vector<std::pair<CPoly, CPoly>>& levels, double rho,
                            double r, double q_abs);

// Coefficient norms of a plane element a = sum alpha_kl y^k x^l:
//   FixedX: index = l, sum over k of |alpha_kl| r^k
//   FixedY: index = k, sum over l of |alpha_kl| r^l
enum class NormAxis { FixedX, FixedY };

double coef_norm(const PlaneElement& a, Complex q, double r, NormAxis axis, int index);

// Same norm computed from the beta/gamma families:
//   FixedX l: sum_(k<=l) |beta_(l-k,k) q^(k(k+1)/2)| r^k
//           + sum_(k>l)  |gamma_(k-l,l) q^(l(l+1)/2)| r^k
//   FixedY k: sum_(l>=k) |beta_(l-k,k) q^(k(k+1)/2)| r^l
//           + sum_(l<k)  |gamma_(k-l,l) q^(l(l+1)/2)| r^l
double coef_norm(const BetaGammaForm& c, Complex q, double r, NormAxis axis, int index);

// Exact fingerprints for the two-path agreement at rational q > 0: map from
// the summation index to the squared modulus of that term (r left out; both
// paths weight the same index identically).
std::map<int, Rational> coef_norm_terms(const PlaneElement& a, const Rational& q, NormAxis axis,
                                        int index);
std::map<int, Rational> coef_norm_terms(const BetaGammaForm& c, const Rational& q, NormAxis axis,
                                        int index);

// Omega-side level norms: sum_i |beta_i,level| r^i and sum_i |gamma_i,level| r^i.
double level_norm_beta(const BetaGammaForm& c, Complex q, double r, int level);
double level_norm_gamma(const BetaGammaForm& c, Complex q, double r, int level);

struct SeminormRow {
    std::string family;
    int index = 0;
    double r = 0.0;
    double rho = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

// CSV with header norm_family,index,r,rho,lower,upper.
void write_seminorm_csv(std::ostream& os, const std::vector<SeminormRow>& rows);

}  // namespace qplane
