#ifndef PADIC2_BUZZARD_CALEGARI_HPP
#define PADIC2_BUZZARD_CALEGARI_HPP

#include <gmpxx.h>

#include <map>
#include <optional>

#include "padic2/newton_polygon.hpp"

namespace padic2 {

// Coefficient of X^n in the slope-test polynomial
//   1 + sum_n X^n prod_{j=1}^n 2^{2j} (2k-8j)! (2k-8j-3)! (2k-12j-2)
//                              / ((2k-12j)! (2k-6j-1)!),
// exact rational.  `variant` replaces (2k-6j-1)! by (2k-6j-2)!; the two
// differ by an odd rational so their 2-adic polygons coincide.
mpq_class bc_coefficient(long n, long k, bool variant = false);

// Closed-form multiplicity e_{n,ell} for 3n+4 <= ell <= 6n+1.
long e_coeff(long n, long ell);

// Height a_n = 3n(n+1)/2 + sum_ell e_{n,ell} v2(k - ell); +infinity exactly
// when k equals an ell with positive multiplicity.
struct BCHeights {
    long k;
    std::map<long, Valuation> heights;  // n -> a_n, n = 0..n_max
};

BCHeights bc_heights(long k, long n_max);
NewtonPolygon bc_polygon(long k, long n_max);

// ceil(n + (2/3) sum_ell e_{n,ell} v2(k-ell)): checking a vertex at n needs
// the polygon only up to this degree.  Empty when some v2(k-ell) is
// +infinity.
std::optional<long> lemma52_bound(long n, long k);

}  // namespace padic2

#endif
