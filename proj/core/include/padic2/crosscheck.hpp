#ifndef PADIC2_CROSSCHECK_HPP
#define PADIC2_CROSSCHECK_HPP

#include <optional>
#include <string>
#include <vector>

#include "padic2/config.hpp"
#include "padic2/hecke_traces.hpp"

namespace padic2 {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;  // offending case on failure, summary on success
};

// Test-only fault injection: pretend e_{n,ell} is off by delta inside the
// closed-form comparison.
struct ETablePerturbation {
    long n;
    long ell;
    long delta;
};

// eval_formula == v2 of the oracle char-poly coefficient for n <= 3 over
// even weights in [2 k_min, 2 k_max], gated on nonzero traces with formula
// value <= k-3.
CheckResult check_traces_vs_oracle(const TraceFormulaTable& table, long k_min, long k_max);

// es_trace == oracle trace for n <= 4 (adjudicates the divisor-term
// exponent reading).
CheckResult check_es_trace_vs_oracle(long k_min, long k_max, HurwitzCache& cache);

// enumeration == multiplicative formula for every valid m <= m_max, and
// integrality for m = 7 mod 8.
CheckResult check_hurwitz_dual_path(long m_max);

// both odd-sum identities, r <= r_max, m <= m_max.
CheckResult check_hurwitz_odd_identities(long r_max, long m_max);

// closed-form heights equal product valuations on seeded random k, both
// factorial variants; the perturbation hook makes the check fail on a
// doctored table.
CheckResult check_bc_product(long n_max, long samples, unsigned long seed,
                             std::optional<ETablePerturbation> perturb = std::nullopt);

std::vector<CheckResult> run_crosscheck(const Config& cfg, const TraceFormulaTable& table,
                                        HurwitzCache& cache);

}  // namespace padic2

#endif
