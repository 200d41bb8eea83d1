#ifndef PADIC2_EXP_SUM_HPP
#define PADIC2_EXP_SUM_HPP

#include <optional>
#include <vector>

#include "padic2/padic_series.hpp"

namespace padic2 {

struct ExpTerm {
    PadicNumber coeff;
    PadicNumber base;  // nonzero
};

// Finite exponential sum f(k) = constant + sum a_i * b_i^k over Z_2.
// Bases are pairwise distinct after aggregation (coefficients of equal
// bases are summed; base-1 terms fold into the constant) and terms whose
// coefficient is zero at working precision are dropped.
class ExpSum {
  public:
    ExpSum(std::vector<ExpTerm> terms, PadicNumber constant);

    const std::vector<ExpTerm>& terms() const { return terms_; }
    const PadicNumber& constant() const { return constant_; }

    // Exact evaluation at an integer k >= 0 (modulo the working precision).
    PadicNumber value_at(const mpz_class& k) const;

    // mu = min over terms of v2(base); returns mu and the sub-sum of terms
    // attaining it with bases divided by 2^mu.
    std::pair<long, ExpSum> unit_part() const;

    // Smallest D with b^D == 1 mod 2^ell for every base (bases must be
    // units, ell >= 2).
    long period(long ell) const;

    // The analytic series g with g(x) = f(Dx + r) for every integer x,
    // truncated at `degree` with the 2u - v2(u!) style floor attached.
    // Requires unit bases with b^D == 1 mod 4.
    PadicSeries to_series(long r, long D, long degree) const;

  private:
    std::vector<ExpTerm> terms_;
    PadicNumber constant_;
};

// v2(f(r + Dk)) = mu*k + lambda + sum_i v2(k - Omega_i)
//               + sum_j min(n_j, d_j * v2(k - u_j)).
// valid_from empty means the asymptotic caveat applies (non-unit input);
// for unit-base sums the formula is exact at every integer.
struct ValuationFormula {
    mpq_class mu = 0;
    long lambda = 0;
    std::vector<PadicNumber> omegas;
    std::vector<MinTermDescriptor> min_terms;
    std::optional<long> valid_from;  // k0, exact for all k >= k0
    long modulus = 1;                // D
    long residue = 0;                // r
};

// Formula extraction for a series certified as in to_series.
ValuationFormula extract_formula(const PadicSeries& g);

// Evaluate at the series variable (k in the paper's half-weight usage).
// Throws PrecisionError when a constant's stored precision cannot decide
// v2(k - Omega); +infinity only when k coincides with an Omega exactly.
Valuation eval_formula(const ValuationFormula& f, const mpz_class& k);

}  // namespace padic2

#endif
