#include "padic2/hurwitz.hpp"

#include <cstdio>
#include <fstream>
#include <vector>

#include "padic2/errors.hpp"

namespace padic2 {

namespace {

long isqrt(long n) {
    if (n < 0) return -1;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), mpz_class(n).get_mpz_t());
    return r.get_si();
}

// squarefree part via trial division (m stays small: <= a few times 2^17)
long squarefree_part(long m) {
    long sf = 1;
    for (long p = 2; p * p <= m; ++p) {
        long e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e % 2 == 1) sf *= p;
    }
    return sf * m;
}

// Kronecker symbol (-d | p) for the field of discriminant -d, p prime.
int field_symbol(long d, long p) {
    if (p == 2) {
        if (d % 2 == 0) return 0;
        // d == 3 (mod 4) here; (-1)^((d+1)/4)
        return ((d + 1) / 4) % 2 == 0 ? 1 : -1;
    }
    if (d % p == 0) return 0;
    mpz_class a = -mpz_class(d);
    return mpz_legendre(a.get_mpz_t(), mpz_class(p).get_mpz_t());
}

}  // namespace

HurwitzValue hurwitz_forms(long m) {
    if (m <= 0) throw DomainError("hurwitz_forms: m must be positive");
    long rem = m % 4;
    if (rem == 1 || rem == 2) return {mpq_class(0)};
    mpq_class total = 0;
    // enumerate a >= 1, 0 <= b <= a with b^2 + m = 4ac, a <= c; count the
    // +/-b pair except where the reduction convention forces b >= 0
    for (long a = 1; 3 * a * a <= m; ++a) {
        for (long b = (m % 2); b <= a; b += 2) {
            long num = b * b + m;
            if (num % (4 * a) != 0) continue;
            long c = num / (4 * a);
            if (c < a) continue;
            mpq_class w;
            if (b == a && a == c)
                w = mpq_class(1, 3);  // multiple of x^2 + xy + y^2
            else if (b == 0 && a == c)
                w = mpq_class(1, 2);  // multiple of x^2 + y^2
            else if (b == 0 || b == a || a == c)
                w = 1;  // b >= 0 forced, single class
            else
                w = 2;  // +/- b both reduced
            total += w;
        }
    }
    return {total};
}

HurwitzValue hurwitz_formula(long m) {
    if (m <= 0 || (m % 4 != 0 && m % 4 != 3))
        throw DomainError("hurwitz_formula: m must be 0 or 3 mod 4");
    long m0 = squarefree_part(m);
    long d = (m0 % 4 == 3) ? m0 : 4 * m0;  // fundamental: -d discriminant
    long big_a2 = m / d;
    long big_a = isqrt(big_a2);
    if (big_a * big_a != big_a2)
        throw DomainError("hurwitz_formula: m / d_m is not a square");
    // class number from the enumeration at the fundamental discriminant
    long w = (d == 3) ? 3 : (d == 4) ? 2 : 1;
    mpq_class h = hurwitz_forms(d).value * w;
    mpq_class sum = 0;
    for (long a = 1; a <= big_a; ++a) {
        if (big_a % a != 0) continue;
        // phi_m(a) = a * prod_{p | a} (1 - chi(p)/p)
        mpq_class phi = a;
        long rest = a;
        for (long p = 2; p * p <= rest; ++p) {
            if (rest % p != 0) continue;
            while (rest % p == 0) rest /= p;
            phi *= mpq_class(p - field_symbol(d, p), p);
        }
        if (rest > 1) phi *= mpq_class(rest - field_symbol(d, rest), rest);
        sum += phi;
    }
    mpq_class out = h * sum / w;
    out.canonicalize();
    return {out};
}

namespace {

HurwitzCache& shared_cache() {
    static HurwitzCache cache;
    return cache;
}

mpq_class h_sum_impl(long r, long n, long step, HurwitzCache& cache) {
    if (n < 0) return 0;  // empty-sum base case
    mpq_class total = 0;
    mpz_class bound = mpz_class(1) << (n + 2);
    for (long t = 1; mpz_class(t) * t < bound; t += step) {
        long m = static_cast<long>(mpz_class(bound - mpz_class(t) * t).get_si());
        mpz_class tp;
        mpz_ui_pow_ui(tp.get_mpz_t(), static_cast<unsigned long>(t),
                      static_cast<unsigned long>(r));
        total += cache.get(m) * mpq_class(tp);
    }
    return total;
}

}  // namespace

mpq_class h_sum(long r, long n, HurwitzCache& cache) { return h_sum_impl(r, n, 1, cache); }
mpq_class h_sum_odd(long r, long n, HurwitzCache& cache) { return h_sum_impl(r, n, 2, cache); }
mpq_class h_sum(long r, long n) { return h_sum_impl(r, n, 1, shared_cache()); }
mpq_class h_sum_odd(long r, long n) { return h_sum_impl(r, n, 2, shared_cache()); }

bool lemma_h_odd_check(long r, long m) {
    if (m < 1) throw DomainError("lemma_h_odd_check: m must be >= 1");
    HurwitzCache& cache = shared_cache();
    // even exponent: odd-sum(2^{2m}) = sum(2^{2m}) - 2^{r+1} sum(2^{2m-2}) - 2^{rm+1}/3
    mpq_class lhs_even = h_sum_odd(r, 2 * m, cache);
    mpq_class rhs_even = h_sum(r, 2 * m, cache) -
                         (mpz_class(1) << (r + 1)) * h_sum(r, 2 * m - 2, cache) -
                         mpq_class(mpz_class(1) << (r * m + 1), 3);
    rhs_even.canonicalize();
    // odd exponent: odd-sum(2^{2m-1}) = sum(2^{2m-1}) - 2^{r+1} sum(2^{2m-3}) - 2^{rm-1}
    mpq_class lhs_odd = h_sum_odd(r, 2 * m - 1, cache);
    mpq_class pow_half =
        (r * m >= 1) ? mpq_class(mpz_class(1) << (r * m - 1)) : mpq_class(1, 2);
    mpq_class rhs_odd = h_sum(r, 2 * m - 1, cache) -
                        (mpz_class(1) << (r + 1)) * h_sum(r, 2 * m - 3, cache) - pow_half;
    rhs_odd.canonicalize();
    return lhs_even == rhs_even && lhs_odd == rhs_odd;
}

HurwitzCache::HurwitzCache(std::string path) : path_(std::move(path)) { load(); }

const mpq_class& HurwitzCache::get(long m) {
    auto it = values_.find(m);
    if (it != values_.end()) return it->second;
    auto [pos, ok] = values_.emplace(m, hurwitz_forms(m).value);
    return pos->second;
}

void HurwitzCache::load() {
    if (path_.empty()) return;
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (!header_seen) {
            header_seen = true;  // {"hurwitz_cache_version":1}
            continue;
        }
        long m = 0;
        long num = 0, den = 1;
        if (std::sscanf(line.c_str(), "{\"m\":%ld,\"num\":%ld,\"den\":%ld}", &m, &num, &den) == 3)
            values_.emplace(m, mpq_class(num, den));
    }
}

void HurwitzCache::save() const {
    if (path_.empty()) return;
    std::string tmp = path_ + ".tmp";
    {
        std::ofstream out(tmp);
        out << "{\"hurwitz_cache_version\":1}\n";
        for (const auto& [m, v] : values_)
            out << "{\"m\":" << m << ",\"num\":" << v.get_num() << ",\"den\":" << v.get_den()
                << "}\n";
    }
    std::rename(tmp.c_str(), path_.c_str());
}

}  // namespace padic2
