#include "padic2/crosscheck.hpp"

#include <random>

#include "padic2/buzzard_calegari.hpp"
#include "padic2/errors.hpp"
#include "padic2/modular_oracle.hpp"

namespace padic2 {

CheckResult check_traces_vs_oracle(const TraceFormulaTable& table, long k_min, long k_max) {
    long checked = 0;
    for (long n = 1; n <= std::min<long>(3, table.n_max); ++n) {
        for (long k = std::max<long>(6, k_min); k <= k_max; ++k) {
            long w = 2 * k;
            if (cusp_dim(w) < n) continue;
            auto cp = char_poly_reversed(w);
            if (cp[n] == 0) continue;
            Valuation fv = eval_formula(table.rows.at(n).formula, k);
            if (fv > Valuation(k - 3)) continue;
            ++checked;
            if (fv != Valuation(valuation2(cp[n])))
                return {"traces_vs_oracle", false,
                        "mismatch at n=" + std::to_string(n) + " 2k=" + std::to_string(w)};
        }
    }
    return {"traces_vs_oracle", true, std::to_string(checked) + " gated values equal"};
}

namespace {

// Tr(T_{2^n}) from the matrix side: invert the Hecke power relation
// Tr(T_2^n) = sum_i (C(n,i) - C(n,i-1)) 2^{(2k-1)i} Tr(T_{2^{n-2i}}).
mpz_class oracle_prime_power_trace(long w, long n) {
    if (n == 0) return cusp_dim(w);
    mpz_class t = t2_power_trace(w, n);
    for (long i = 1; 2 * i <= n; ++i) {
        mpz_class c1, c2;
        mpz_bin_uiui(c1.get_mpz_t(), n, i);
        mpz_bin_uiui(c2.get_mpz_t(), n, i - 1);
        t -= (c1 - c2) * (mpz_class(1) << ((w - 1) * i)) * oracle_prime_power_trace(w, n - 2 * i);
    }
    return t;
}

}  // namespace

CheckResult check_es_trace_vs_oracle(long k_min, long k_max, HurwitzCache& cache) {
    long checked = 0;
    for (long k = std::max<long>(6, k_min); k <= k_max; ++k) {
        long w = 2 * k;
        for (long n = 0; n <= 4; ++n) {
            ++checked;
            if (es_trace(n, k, cache) != oracle_prime_power_trace(w, n))
                return {"es_trace_vs_oracle", false,
                        "mismatch at n=" + std::to_string(n) + " 2k=" + std::to_string(w)};
        }
    }
    return {"es_trace_vs_oracle", true, std::to_string(checked) + " traces equal"};
}

CheckResult check_hurwitz_dual_path(long m_max) {
    long checked = 0;
    for (long m = 3; m <= m_max; ++m) {
        if (m % 4 == 1 || m % 4 == 2) continue;
        ++checked;
        if (hurwitz_forms(m).value != hurwitz_formula(m).value)
            return {"hurwitz_dual_path", false, "mismatch at m=" + std::to_string(m)};
        if (m % 8 == 7 && hurwitz_forms(m).value.get_den() != 1)
            return {"hurwitz_dual_path", false,
                    "non-integral H(m) at m=" + std::to_string(m) + " = 7 mod 8"};
    }
    return {"hurwitz_dual_path", true, std::to_string(checked) + " class numbers equal"};
}

CheckResult check_hurwitz_odd_identities(long r_max, long m_max) {
    for (long r = 0; r <= r_max; ++r)
        for (long m = 1; m <= m_max; ++m)
            if (!lemma_h_odd_check(r, m))
                return {"hurwitz_odd_identities", false,
                        "identity fails at r=" + std::to_string(r) + " m=" + std::to_string(m)};
    return {"hurwitz_odd_identities", true,
            "identities hold to r<=" + std::to_string(r_max) + ", m<=" + std::to_string(m_max)};
}

CheckResult check_bc_product(long n_max, long samples, unsigned long seed,
                             std::optional<ETablePerturbation> perturb) {
    std::mt19937_64 rng(seed);
    auto e_val = [&](long n, long ell) {
        long e = e_coeff(n, ell);
        if (perturb && perturb->n == n && perturb->ell == ell) e += perturb->delta;
        return e;
    };
    for (long n = 1; n <= n_max; ++n) {
        for (long s = 0; s < samples; ++s) {
            long k = 6 * n + 2 + static_cast<long>(rng() % 4096);
            mpq_class c = bc_coefficient(n, k);
            // height from the (possibly perturbed) e-table
            bool infinite = false;
            long h = 3 * n * (n + 1) / 2;
            for (long ell = 3 * n + 4; ell <= 6 * n + 1; ++ell) {
                long e = e_val(n, ell);
                if (e == 0) continue;
                if (k == ell) {
                    infinite = true;
                    break;
                }
                h += e * valuation2(mpz_class(k - ell));
            }
            if (c == 0) {
                if (!infinite)
                    return {"bc_product", false,
                            "vanishing coefficient, finite height at n=" + std::to_string(n) +
                                " k=" + std::to_string(k)};
                continue;
            }
            if (infinite || valuation2(c) != h)
                return {"bc_product", false,
                        "height mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                            " ell-table row " + std::to_string(n)};
            mpq_class cv = bc_coefficient(n, k, true);
            if (valuation2(cv) != valuation2(c))
                return {"bc_product", false,
                        "factorial variants disagree at n=" + std::to_string(n) +
                            " k=" + std::to_string(k)};
        }
    }
    return {"bc_product", true,
            std::to_string(samples) + " samples per n <= " + std::to_string(n_max)};
}

std::vector<CheckResult> run_crosscheck(const Config& cfg, const TraceFormulaTable& table,
                                        HurwitzCache& cache) {
    std::vector<CheckResult> out;
    out.push_back(check_traces_vs_oracle(table, cfg.k_min, cfg.k_max));
    out.push_back(check_es_trace_vs_oracle(cfg.k_min, std::min<long>(cfg.k_max, 30), cache));
    out.push_back(check_hurwitz_dual_path(20000));
    out.push_back(check_hurwitz_odd_identities(6, 7));
    out.push_back(check_bc_product(8, 200, cfg.seed));
    return out;
}

}  // namespace padic2
