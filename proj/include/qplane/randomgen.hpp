#pragma once

// Deterministic random inputs for property tests and the verification
// suites.  Everything is seeded explicitly; split_seed gives independent
// streams per check so adding a check never shifts another one's data.

#include "qplane/omega.hpp"
#include "qplane/plane.hpp"
#include "qplane/poly.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace qplane {

std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream);

using Rng = std::mt19937_64;

// Small rational p/r with |p| <= max_num, 1 <= r <= max_den.
Rational random_rational(Rng& rng, int max_num = 9, int max_den = 4);

// Gaussian rational; imaginary part present with probability ~1/2 when
// allow_imag.  Never returns zero.
GaussianRational random_gaussian(Rng& rng, bool allow_imag = true);

// 1..max_terms q-monomials with exponents in [-max_exp, max_exp].
QScalar random_qscalar(Rng& rng, int max_terms = 2, int max_exp = 3);

// Up to max_terms monomials y^k x^l with k, l <= max_deg.
PlaneElement random_plane_element(Rng& rng, int max_deg = 6, int max_terms = 8);

// Up to max_terms omega-basis monomials with letter degree i <= max_letter
// (i >= 1 for x/y parts) and u-level j <= max_level.
OmegaUElement random_omega_element(Rng& rng, int max_letter = 6, int max_level = 6,
                                   int max_terms = 8);

// Complex coefficients in the square [-scale, scale]^2; degree <= max_deg.
CPoly random_cpoly(Rng& rng, int max_deg, double scale = 2.0);

// Pair levels (f_n, g_n) with numeric coefficients and f_n(0) == g_n(0).
std::vector<std::pair<CPoly, CPoly>> random_pair_levels(Rng& rng, int levels, int max_deg,
                                                        double scale = 2.0);

// Nonnegative rational coefficients (exact moduli for the exact norm path).
std::vector<GaussianRational> random_nonneg_series(Rng& rng, int length, int max_num = 9,
                                                   int max_den = 4);

std::vector<Complex> random_complex_series(Rng& rng, int length, double scale = 2.0);

}  // namespace qplane
