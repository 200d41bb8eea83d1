#include "padic2/buzzard_calegari.hpp"

#include "padic2/errors.hpp"
#include "padic2/padic_number.hpp"

namespace padic2 {

mpq_class bc_coefficient(long n, long k, bool variant) {
    if (n < 1) throw DomainError("bc_coefficient: n must be positive");
    if (2 * k - 8 * n - 3 < 0)
        throw DomainError("bc_coefficient: factorial argument negative");
    mpq_class prod = 1;
    for (long j = 1; j <= n; ++j) {
        // 2^{2j} * (2k-8j)!/(2k-12j)! * (2k-12j-2) * (2k-8j-3)!/(2k-6j-1)!
        // expanded as short falling/rising products
        mpz_class num = mpz_class(1) << (2 * j);
        for (long m = 2 * k - 12 * j + 1; m <= 2 * k - 8 * j; ++m) num *= m;
        num *= (2 * k - 12 * j - 2);
        mpz_class den = 1;
        long hi = variant ? 2 * k - 6 * j - 2 : 2 * k - 6 * j - 1;
        for (long m = 2 * k - 8 * j - 2; m <= hi; ++m) den *= m;
        prod *= mpq_class(num, den);
    }
    prod.canonicalize();
    return prod;
}

long e_coeff(long n, long ell) {
    if (ell < 3 * n + 4 || ell > 6 * n + 1)
        throw DomainError("e_coeff: ell outside [3n+4, 6n+1]");
    long delta = (ell % 6 == 1) ? 1 : 0;
    if (ell < 4 * n) return (ell - 1) / 3 - n;
    if (ell == 4 * n || ell == 4 * n + 1) return delta + n - 1 - ell / 6;
    if (ell <= 6 * n) return delta + n - ell / 6;
    return 1;  // ell == 6n+1
}

BCHeights bc_heights(long k, long n_max) {
    if (k <= 6) throw DomainError("bc_heights: k must exceed 6");
    BCHeights out;
    out.k = k;
    out.heights[0] = Valuation(0);
    for (long n = 1; n <= n_max; ++n) {
        Valuation a(3 * n * (n + 1) / 2);
        for (long ell = 3 * n + 4; ell <= 6 * n + 1; ++ell) {
            long e = e_coeff(n, ell);
            if (e == 0) continue;
            if (k == ell) {
                a = Valuation::infinity();
                break;
            }
            a += Valuation(e * valuation2(mpz_class(k - ell)));
        }
        out.heights[n] = a;
    }
    return out;
}

NewtonPolygon bc_polygon(long k, long n_max) {
    BCHeights h = bc_heights(k, n_max);
    std::vector<PolygonPoint> pts;
    for (const auto& [n, a] : h.heights) pts.push_back({n, a});
    return NewtonPolygon::hull(std::move(pts));
}

std::optional<long> lemma52_bound(long n, long k) {
    if (k <= 6) throw DomainError("lemma52_bound: k must exceed 6");
    long vsum = 0;
    for (long ell = 3 * n + 4; ell <= 6 * n + 1; ++ell) {
        long e = e_coeff(n, ell);
        if (e == 0) continue;
        if (k == ell) return std::nullopt;
        vsum += e * valuation2(mpz_class(k - ell));
    }
    // ceil(n + 2*vsum/3)
    return n + (2 * vsum + 2) / 3;
}

}  // namespace padic2
