#ifndef PADIC2_HECKE_TRACES_HPP
#define PADIC2_HECKE_TRACES_HPP

#include <map>
#include <optional>

#include "padic2/exp_sum.hpp"
#include "padic2/hurwitz.hpp"

namespace padic2 {

// Exact Tr(T_{2^n} | S_{2k}) by the Eichler-Selberg trace formula: divisor
// term, elliptic terms over Hurwitz class numbers with the two-term root
// recurrence, and the degenerate t^2 = 2^{n+2} class when n is even.
// n = 0 returns dim S_{2k}.
mpz_class es_trace(long n, long k, HurwitzCache& cache);
mpz_class es_trace(long n, long k);

// The unit-base part of Tr(T_{2^n} | S_{2k}) as an exponential sum in the
// half-weight variable k: constant -1 plus one term per odd t with
// coefficient -H(2^{n+2}-t^2) / (rho_t (rho_t - conj)) and base rho_t^2,
// where rho_t is the unit root of X^2 - tX + 2^n.
ExpSum unit_exp_sum(long n, long prec, HurwitzCache& cache);

// Power series of the unit part of Tr(T_2^i | S_{2k}) in k (D = 1, r = 0).
PadicSeries power_sum_series(long i, long degree, long prec, HurwitzCache& cache);

// Complete exponential Bell composition: series of the unit part of
// Tr(wedge^n T_2 | S_{2k}).
PadicSeries wedge_series(long n, long degree, long prec, HurwitzCache& cache);

// A formula constant paired to its nearby integer ell from the closed-form
// height table; valuation empty means the constant equals ell exactly at
// stored precision.
struct PairedConstant {
    bool is_min_term;
    PadicNumber constant;       // Omega, or the min-term u
    long cap = 0;               // n_j (min terms only)
    int d = 0;                  // descriptor degree (min terms only)
    long ell;
    std::optional<long> pairing_valuation;
};

struct TraceFormulaEntry {
    ValuationFormula formula;
    std::vector<PairedConstant> pairing;  // sorted by ell, then residue
};

struct TraceFormulaTable {
    long n_max = 0;
    long precision_bits = 0;
    long degree = 0;
    std::map<long, TraceFormulaEntry> rows;
};

// Formulas for 1 <= n <= n_max with every constant paired to the ell in
// [3n+4, 6n+1] maximizing v2(constant - ell).  Asserts lambda = 3n(n+1)/2,
// term-count conservation against the closed-form e-table, and slot-exact
// pairing multiplicities; PairingError on ambiguity.
TraceFormulaTable build_table(long n_max, long degree, long precision, HurwitzCache& cache);

// Omega for n = 1 from the 2-adic logarithm closed form; both square-root
// branches are tried and the one matching the series extraction is
// returned.  `series_omega` pins the branch.
PadicNumber omega_closed_form(long prec, const PadicNumber& series_omega);

}  // namespace padic2

#endif
