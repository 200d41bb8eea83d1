#ifndef PADIC2_HURWITZ_HPP
#define PADIC2_HURWITZ_HPP

#include <gmpxx.h>

#include <map>
#include <string>

namespace padic2 {

// Weighted class number H(m) of positive definite binary quadratic forms of
// discriminant -m; 0 for m == 1, 2 (mod 4).  Denominator divides 6.
struct HurwitzValue {
    mpq_class value;
};

// Primary path: enumeration of reduced forms ax^2 + bxy + cy^2 with
// b^2 - 4ac = -m, |b| <= a <= c, b >= 0 when |b| == a or a == c; weight 1/2
// for multiples of x^2 + y^2 and 1/3 for multiples of x^2 + xy + y^2.
HurwitzValue hurwitz_forms(long m);

// Cross-check path: H(m) = (h/w) * sum_{a^2 | m/d_m} phi_m(a) with h the
// class number of Q(sqrt(-m)), w in {1,2,3} by the fundamental
// discriminant, phi_m multiplicative over primes with the Kronecker symbol.
// Requires m == 0, 3 (mod 4).
HurwitzValue hurwitz_formula(long m);

class HurwitzCache;

// H_r(2^n) = sum over 1 <= t < 2^{n/2+1} of H(2^{n+2} - t^2) t^r; the n = -1
// base case is the empty sum.
mpq_class h_sum(long r, long n);
mpq_class h_sum(long r, long n, HurwitzCache& cache);
// Same restricted to odd t.
mpq_class h_sum_odd(long r, long n);
mpq_class h_sum_odd(long r, long n, HurwitzCache& cache);
// Both class-number-sum identities relating the odd-t sums to the full ones
// at exponent 2m and 2m-1; exact check.
bool lemma_h_odd_check(long r, long m);

// Memoized Hurwitz values with a JSON-lines disk format:
//   {"hurwitz_cache_version":1}
//   {"m":3,"num":1,"den":3}
// Entries are immutable once written; save() rewrites atomically.
class HurwitzCache {
  public:
    HurwitzCache() = default;
    explicit HurwitzCache(std::string path);

    const mpq_class& get(long m);
    size_t size() const { return values_.size(); }

    void load();
    void save() const;

  private:
    std::string path_;
    std::map<long, mpq_class> values_;
};

}  // namespace padic2

#endif
