#include "padic2/exp_sum.hpp"

#include <algorithm>
#include <climits>
#include <map>

#include "padic2/errors.hpp"

namespace padic2 {

ExpSum::ExpSum(std::vector<ExpTerm> terms, PadicNumber constant) : constant_(constant) {
    // aggregate equal bases; fold base 1 into the constant; drop zero terms
    std::map<mpz_class, ExpTerm> by_base;
    for (auto& t : terms) {
        if (t.base.known_zero()) throw DomainError("ExpSum: zero base");
        if (t.base.residue() == 1) {
            constant_ += t.coeff;
            continue;
        }
        auto it = by_base.find(t.base.residue());
        if (it == by_base.end())
            by_base.emplace(t.base.residue(), t);
        else
            it->second.coeff += t.coeff;
    }
    for (auto& [r, t] : by_base) {
        if (t.coeff.known_zero()) continue;
        terms_.push_back(t);
    }
}

PadicNumber ExpSum::value_at(const mpz_class& k) const {
    PadicNumber acc = constant_;
    for (const auto& t : terms_) acc += t.coeff * t.base.pow(k);
    return acc;
}

std::pair<long, ExpSum> ExpSum::unit_part() const {
    if (terms_.empty() && constant_.known_zero())
        throw DomainError("unit_part: empty exponential sum");
    long mu = LONG_MAX;
    if (!constant_.known_zero()) mu = 0;  // base 1 is a unit
    for (const auto& t : terms_) {
        ValBound v = t.base.valuation();
        if (v.is_lower_bound) throw PrecisionError("unit_part: base valuation undecided");
        mu = std::min(mu, v.value);
    }
    std::vector<ExpTerm> sel;
    PadicNumber c = PadicNumber::zero(constant_.precision());
    if (!constant_.known_zero() && mu == 0) c = constant_;
    for (const auto& t : terms_) {
        if (t.base.valuation().value != mu) continue;
        sel.push_back({t.coeff, t.base.div_pow2(mu)});
    }
    return {mu, ExpSum(std::move(sel), c)};
}

long ExpSum::period(long ell) const {
    if (ell < 2) throw DomainError("period: ell must be at least 2");
    long D = 1;
    for (const auto& t : terms_) {
        if (!t.base.is_unit()) throw NotUnitError("period: non-unit base");
        PadicNumber b = t.base.truncate(std::min(t.base.precision(), ell));
        PadicNumber p = b;
        long order = 1;
        while (p.residue() != 1) {
            p *= p;  // orders mod 2^ell are powers of two
            order *= 2;
            if (order > (1L << std::min<long>(ell, 40))) throw DomainError("period: no finite order");
        }
        D = std::max(D, order);  // orders are 2-powers, so lcm = max
    }
    return D;
}

PadicSeries ExpSum::to_series(long r, long D, long degree) const {
    if (degree < 1) throw DomainError("to_series: degree must be positive");
    long prec = constant_.precision();
    for (const auto& t : terms_) prec = std::min({prec, t.coeff.precision(), t.base.precision()});

    // logs of b^D and the scaled heads a * b^r
    std::vector<PadicNumber> logs, heads;
    long ell_eff = LONG_MAX;
    long offset = LONG_MAX;
    for (const auto& t : terms_) {
        if (!t.base.is_unit()) throw NotUnitError("to_series: non-unit base");
        PadicNumber bD = t.base.pow(D);
        if (bD.residue() % 4 != 1) throw DomainError("to_series: b^D is not 1 mod 4");
        PadicNumber L = bD.iwasawa_log();
        ell_eff = std::min(ell_eff, L.valuation().value);  // >= 2; lower bound is fine
        logs.push_back(L);
        heads.push_back(t.coeff * t.base.pow(r));
        offset = std::min(offset, heads.back().valuation().value);
    }
    if (!constant_.known_zero()) offset = std::min(offset, constant_.valuation().value);
    if (offset == LONG_MAX) offset = 0;
    if (ell_eff == LONG_MAX) ell_eff = 2;
    ell_eff = std::max<long>(2, std::min<long>(ell_eff, 8));

    // c_u = (1/u!) sum_n heads_n * logs_n^u, constant folded into c_0
    std::vector<PadicNumber> coeffs(degree + 1, PadicNumber::zero(prec));
    std::vector<PadicNumber> pw(logs.size());
    coeffs[0] = constant_.truncate(std::min(constant_.precision(), prec));
    for (size_t n = 0; n < logs.size(); ++n) {
        pw[n] = PadicNumber::one(prec);
        coeffs[0] += heads[n];
    }
    mpz_class odd_fact = 1;
    long v_fact = 0;
    for (long u = 1; u <= degree; ++u) {
        mpz_class uz(u);
        long vu = (u % 2 == 0) ? valuation2(uz) : 0;
        v_fact += vu;
        odd_fact *= (uz >> vu);
        PadicNumber acc = PadicNumber::zero(prec);
        for (size_t n = 0; n < logs.size(); ++n) {
            pw[n] *= logs[n];
            acc += heads[n] * pw[n];
        }
        if (acc.precision() - v_fact < 1)
            throw PrecisionError("to_series: factorial division exhausts precision");
        PadicNumber c = acc.div_pow2(v_fact);
        mpz_class om;
        mpz_fdiv_r_2exp(om.get_mpz_t(), odd_fact.get_mpz_t(),
                        static_cast<mp_bitcnt_t>(c.precision()));
        if (om != 1) c *= PadicNumber::from_integer(om, c.precision()).invert_unit();
        coeffs[u] = c;
    }
    PadicSeries g(std::move(coeffs), offset, ell_eff);
    if (g.tail_bound() < 1)
        throw PrecisionError("to_series: degree too small for a certified tail");
    return g;
}

ValuationFormula extract_formula(const PadicSeries& g) {
    SlopeFactorization sf = slope_factorize(g);
    ValuationFormula f;
    ValBound av = sf.alpha.valuation();
    if (av.is_lower_bound) throw PrecisionError("extract_formula: alpha valuation undecided");
    f.lambda = av.value;
    Z2Factorization z = factor_z2(sf.factor);
    for (const auto& r : z.roots)
        for (int m = 0; m < r.multiplicity; ++m) f.omegas.push_back(r.root);
    f.min_terms = z.min_terms;
    f.valid_from = 0;  // unit-base route: exact at every integer
    return f;
}

Valuation eval_formula(const ValuationFormula& f, const mpz_class& k) {
    Valuation acc(mpq_class(f.mu * k));
    acc += Valuation(f.lambda);
    for (const auto& omega : f.omegas) {
        mpz_class diff;
        mpz_class raw = k - omega.residue();
        mpz_fdiv_r_2exp(diff.get_mpz_t(), raw.get_mpz_t(),
                        static_cast<mp_bitcnt_t>(omega.precision()));
        if (diff == 0)
            throw PrecisionError("eval_formula: v2(k - Omega) undecided at precision " +
                                 std::to_string(omega.precision()));
        acc += Valuation(valuation2(diff));
    }
    for (const auto& mt : f.min_terms) {
        mpz_class diff;
        mpz_class raw = k - mt.u.residue();
        mpz_fdiv_r_2exp(diff.get_mpz_t(), raw.get_mpz_t(),
                        static_cast<mp_bitcnt_t>(mt.u.precision()));
        long w;
        if (diff == 0) {
            // beyond the stored precision the min resolves to the cap as
            // long as d * precision reaches it; the descent guarantees that
            if (mt.d * mt.u.precision() < mt.cap)
                throw PrecisionError("eval_formula: min-term undecided at stored precision");
            w = mt.u.precision();
        } else {
            w = valuation2(diff);
        }
        acc += Valuation(std::min<long>(mt.cap, static_cast<long>(mt.d) * w));
    }
    return acc;
}

}  // namespace padic2
