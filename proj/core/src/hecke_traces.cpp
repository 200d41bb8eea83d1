#include "padic2/hecke_traces.hpp"

#include <algorithm>

#include "padic2/buzzard_calegari.hpp"
#include "padic2/errors.hpp"

namespace padic2 {

mpz_class es_trace(long n, long k, HurwitzCache& cache) {
    if (k < 6) throw DomainError("es_trace: weight 2k must be at least 12");
    if (n < 0) throw DomainError("es_trace: negative n");
    long w = 2 * k;
    mpq_class total = 0;

    // divisor term: -(1/2) sum_{i=0}^{n} 2^{(2k-1) min(i, n-i)}
    for (long i = 0; i <= n; ++i) {
        long e = std::min(i, n - i) * (w - 1);
        total -= mpq_class(mpz_class(1) << e, 2);
    }

    // t = 0 class: -H(2^{n+2}) (-2^n)^{k-1} / 2
    mpz_class pnk;  // (2^n)^{k-1}
    pnk = mpz_class(1) << (n * (k - 1));
    mpq_class t0 = cache.get(static_cast<long>(1) << (n + 2)) * mpq_class(pnk, 2);
    if ((k - 1) % 2 == 1) t0 = -t0;
    total -= t0;

    // elliptic classes: -sum_{1 <= t, t^2 < 2^{n+2}} H(2^{n+2}-t^2) s_{2k-2}(t)
    // with s_j = t s_{j-1} - 2^n s_{j-2} the root power ratio
    mpz_class pn = mpz_class(1) << n;
    mpz_class bound = mpz_class(1) << (n + 2);
    for (long t = 1; mpz_class(t) * t < bound; ++t) {
        long m = static_cast<long>(mpz_class(bound - mpz_class(t) * t).get_si());
        mpz_class s0 = 1, s1 = t;
        for (long j = 2; j <= w - 2; ++j) {
            mpz_class s2 = t * s1 - pn * s0;
            s0 = s1;
            s1 = s2;
        }
        mpz_class sval = (w - 2 == 0) ? s0 : s1;
        total -= cache.get(m) * mpq_class(sval);
    }

    // degenerate boundary t^2 = 2^{n+2} (even n only), with H(0) = -1/12:
    // the +/-t pair contributes (2k-1) 2^{n(k-1)} / 12
    if (n % 2 == 0) total += mpq_class(mpz_class(w - 1) * pnk, 12);

    total.canonicalize();
    if (total.get_den() != 1)
        throw IntegralityError("es_trace: non-integral result, formula transcription bug");
    return total.get_num();
}

mpz_class es_trace(long n, long k) {
    HurwitzCache cache;
    return es_trace(n, k, cache);
}

ExpSum unit_exp_sum(long n, long prec, HurwitzCache& cache) {
    if (n < 1) throw DomainError("unit_exp_sum: n must be positive");
    std::vector<ExpTerm> terms;
    mpz_class bound = mpz_class(1) << (n + 2);
    for (long t = 1; mpz_class(t) * t < bound; t += 2) {
        long m = static_cast<long>(mpz_class(bound - mpz_class(t) * t).get_si());
        const mpq_class& h = cache.get(m);
        if (h.get_den() != 1)
            throw IntegralityError("unit_exp_sum: H(m) not integral for m = 7 mod 8");
        // s = sqrt(t^2 - 2^{n+2}), sign fixed so rho = (t+s)/2 is a unit
        PadicNumber disc = PadicNumber::from_integer(mpz_class(t) * t - bound, prec + 1);
        PadicNumber s = disc.sqrt_unit();
        PadicNumber rho = (PadicNumber::from_integer(t, s.precision()) + s).div_pow2(1);
        if (!rho.is_unit()) {
            s = -s;
            rho = (PadicNumber::from_integer(t, s.precision()) + s).div_pow2(1);
        }
        if (!rho.is_unit()) throw DomainError("unit_exp_sum: no unit root");
        // coefficient -H / (rho * s), base rho^2  (rho^{2k-1} = rho^{-1} (rho^2)^k)
        PadicNumber coeff = (rho * s).invert_unit().mul_integer(-h.get_num());
        terms.push_back({coeff, rho * rho});
    }
    return ExpSum(std::move(terms), PadicNumber::from_integer(-1, prec));
}

PadicSeries power_sum_series(long i, long degree, long prec, HurwitzCache& cache) {
    if (i < 1) throw DomainError("power_sum_series: i must be positive");
    // the factorial divisions cost up to v2(degree!) < degree bits, so the
    // arithmetic carries guard bits above the requested output precision
    long internal = prec + degree + 32;
    return unit_exp_sum(i, internal, cache).to_series(0, 1, degree);
}

PadicSeries wedge_series(long n, long degree, long prec, HurwitzCache& cache) {
    if (n < 1) throw DomainError("wedge_series: n must be positive");
    // x_i = -(i-1)! * power sum series of T_2^i
    std::vector<PadicSeries> x;
    mpz_class fact = 1;
    for (long i = 1; i <= n; ++i) {
        if (i > 1) fact *= (i - 1);
        x.push_back(power_sum_series(i, degree, prec, cache).mul_integer(-fact));
    }
    // complete Bell polynomials: B_{m+1} = sum_j C(m, j) B_{m-j} x_{j+1}
    std::vector<PadicNumber> one(degree + 1, PadicNumber::zero(prec));
    one[0] = PadicNumber::one(prec);
    std::vector<PadicSeries> bell;
    bell.push_back(PadicSeries(std::move(one), 0, 8));
    for (long m = 0; m < n; ++m) {
        PadicSeries next = bell[m] * x[0];  // j = 0 term: C(m,0) B_m x_1
        for (long j = 1; j <= m; ++j) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m),
                         static_cast<unsigned long>(j));
            next = next + (bell[m - j] * x[j]).mul_integer(binom);
        }
        bell.push_back(std::move(next));
    }
    PadicSeries out = bell[n].div_factorial(static_cast<unsigned long>(n));
    if (n % 2 == 1) out = out.mul_integer(-1);
    return out;
}

namespace {

// pair one constant to the ell in [3n+4, 6n+1] maximizing v2(c - ell)
std::pair<long, std::optional<long>> pair_constant(const PadicNumber& c, long n) {
    long best_ell = -1;
    long best_v = -1;
    bool best_inf = false;
    bool tie = false;
    for (long ell = 3 * n + 4; ell <= 6 * n + 1; ++ell) {
        mpz_class diff = c.residue() - ell;
        mpz_class red;
        mpz_fdiv_r_2exp(red.get_mpz_t(), diff.get_mpz_t(),
                        static_cast<mp_bitcnt_t>(c.precision()));
        bool inf = (red == 0);
        long v = inf ? c.precision() : valuation2(red);
        if (inf && !best_inf) {
            best_inf = true;
            best_ell = ell;
            best_v = v;
            tie = false;
        } else if (inf && best_inf) {
            tie = true;
        } else if (!best_inf && v > best_v) {
            best_v = v;
            best_ell = ell;
            tie = false;
        } else if (!best_inf && v == best_v) {
            tie = true;
        }
    }
    if (tie) throw PairingError("pairing ambiguous for a formula constant");
    if (best_inf) return {best_ell, std::nullopt};
    return {best_ell, best_v};
}

}  // namespace

TraceFormulaTable build_table(long n_max, long degree, long precision, HurwitzCache& cache) {
    if (n_max < 1) throw DomainError("build_table: n_max must be positive");
    TraceFormulaTable table;
    table.n_max = n_max;
    table.precision_bits = precision;
    table.degree = degree;
    for (long n = 1; n <= n_max; ++n) {
        PadicSeries f = wedge_series(n, degree, precision, cache);
        ValuationFormula formula = extract_formula(f);
        if (formula.lambda != 3 * n * (n + 1) / 2)
            throw DomainError("build_table: lambda is not 3n(n+1)/2 at n = " +
                              std::to_string(n));
        // term-count conservation against the closed-form e-table
        long dsum = static_cast<long>(formula.omegas.size());
        for (const auto& mt : formula.min_terms) dsum += mt.d;
        long esum = 0;
        for (long ell = 3 * n + 4; ell <= 6 * n + 1; ++ell) esum += e_coeff(n, ell);
        if (dsum != esum)
            throw DomainError("build_table: term count mismatch at n = " + std::to_string(n));

        TraceFormulaEntry entry;
        entry.formula = formula;
        std::map<long, long> slots;  // ell -> used multiplicity
        for (const auto& om : formula.omegas) {
            auto [ell, pv] = pair_constant(om, n);
            slots[ell] += 1;
            entry.pairing.push_back({false, om, 0, 0, ell, pv});
        }
        for (const auto& mt : formula.min_terms) {
            auto [ell, pv] = pair_constant(mt.u, n);
            slots[ell] += mt.d;
            entry.pairing.push_back({true, mt.u, mt.cap, mt.d, ell, pv});
        }
        for (const auto& [ell, used] : slots)
            if (used != e_coeff(n, ell))
                throw PairingError("pairing multiplicity mismatch at n = " + std::to_string(n) +
                                   ", ell = " + std::to_string(ell));
        std::sort(entry.pairing.begin(), entry.pairing.end(),
                  [](const PairedConstant& a, const PairedConstant& b) {
                      if (a.ell != b.ell) return a.ell < b.ell;
                      return a.constant.residue() < b.constant.residue();
                  });
        table.rows.emplace(n, std::move(entry));
    }
    return table;
}

PadicNumber omega_closed_form(long prec, const PadicNumber& series_omega) {
    long work = prec + 16;
    PadicNumber s = PadicNumber::from_integer(-7, work).sqrt_unit();
    for (int branch = 0; branch < 2; ++branch) {
        if (branch == 1) s = -s;
        // rho = (1 - s)/2; log(1-2rho) = log(s), log(1-rho) = log((1+s)/2)
        PadicNumber num = s.iwasawa_log();
        PadicNumber one_minus_rho = (PadicNumber::one(s.precision()) + s).div_pow2(1);
        // Iwasawa convention: strip the 2-power before taking the log
        ValBound v = one_minus_rho.valuation();
        if (v.is_lower_bound) continue;
        PadicNumber den = one_minus_rho.div_pow2(v.value).iwasawa_log();
        ValBound nv = num.valuation(), dv = den.valuation();
        if (nv.is_lower_bound || dv.is_lower_bound) continue;
        if (nv.value < dv.value) continue;  // ratio must stay integral
        PadicNumber ratio = num.div_pow2(dv.value) *
                            den.div_pow2(dv.value).invert_unit();
        PadicNumber omega_candidate = (ratio + PadicNumber::one(ratio.precision())).div_pow2(1);
        long bits = std::min({omega_candidate.precision(), series_omega.precision()});
        if (omega_candidate.congruent(series_omega, bits))
            return omega_candidate;
    }
    throw DomainError("omega_closed_form: neither square-root branch matches the series");
}

}  // namespace padic2
