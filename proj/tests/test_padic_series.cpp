#include <random>

#include "doctest.h"
#include "padic2/errors.hpp"
#include "padic2/padic_series.hpp"

using namespace padic2;

namespace {

PadicSeries from_ints(std::vector<long> v, long prec, long off = 0, long slope = 2) {
    std::vector<PadicNumber> c;
    for (long x : v) c.push_back(PadicNumber::from_integer(x, prec));
    return PadicSeries(std::move(c), off, slope);
}

long brute_val(const Polynomial& p, const mpz_class& k) {
    auto v = p.eval(k).valuation();
    REQUIRE_FALSE(v.is_lower_bound);
    return v.value;
}

}  // namespace

TEST_CASE("certified polygon basics") {
    // 3 + 0*x + x^2: flat hull at height 0 from index 0 to 2
    auto f = from_ints({3, 0, 1}, 64);
    auto np = f.certified_polygon();
    REQUIRE(np.vertices().size() == 2);
    CHECK(np.vertices()[0].index == 0);
    CHECK(np.vertices()[1].index == 2);
    CHECK(np.value_at(1) == Valuation(0));

    // unit constant coefficient: single vertex at the origin
    auto g = from_ints({3, 2, 4}, 64);
    auto sf = slope_factorize(g);
    CHECK(sf.factor.degree() == 0);
    CHECK(sf.alpha.residue() == 3);

    auto zero = from_ints({0, 0}, 32);
    CHECK_THROWS_AS(zero.certified_polygon(), DomainError);
}

TEST_CASE("slope factorization of a unit series") {
    auto f = from_ints({5, 4, 8, 16}, 128);
    auto sf = slope_factorize(f);
    CHECK(sf.factor.degree() == 0);
    CHECK(sf.alpha.residue() == 5);
    CHECK(sf.unit[0].residue() == 1);
    // f / 5 recomputed
    auto inv5 = PadicNumber::from_integer(5, 128).invert_unit();
    CHECK(sf.unit[1].residue() == (PadicNumber::from_integer(4, 128) * inv5).residue());
}

TEST_CASE("slope factorization splits a linear vertex") {
    // series with heights (0,2),(1,0),(2,3),(3,5), zero beyond: vertex at 1
    std::vector<long> coeffs = {4, 1, 8, 32};
    coeffs.resize(25, 0);
    auto f = from_ints(coeffs, 100, -2, 2);
    auto sf = slope_factorize(f);
    CHECK(sf.alpha.valuation().value == 0);
    REQUIRE(sf.factor.degree() == 1);
    // reconstruction: alpha * P * u == f coefficientwise
    Polynomial up(std::vector<PadicNumber>(sf.unit.coeffs().begin(), sf.unit.coeffs().end()));
    auto prod = sf.factor * up;
    for (long i = 0; i <= f.trunc_degree(); ++i) {
        auto lhs = prod[i] * sf.alpha;
        long bits = std::min(lhs.precision(), f[i].precision());
        CHECK(lhs.congruent(f[i], bits));
    }
}

TEST_CASE("z2_roots: exact double root") {
    auto p = Polynomial::from_integers({361, -38, 1}, 200);  // (x-19)^2
    auto roots = z2_roots(p);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].multiplicity == 2);
    CHECK(roots[0].root.residue() % 1024 == 19);
}

TEST_CASE("z2_roots: none for x^2+x+1") {
    auto p = Polynomial::from_integers({1, 1, 1}, 64);
    CHECK(z2_roots(p).empty());
    auto d = factor_descriptor(p);
    CHECK(d.cap == 0);
    CHECK(d.d == 2);
}

TEST_CASE("z2_roots: split of distinct roots") {
    // (x-3)(x-10)(x-24) = x^3 - 37x^2 + 342x - 720
    auto p = Polynomial::from_integers({-720, 342, -37, 1}, 120);
    auto roots = z2_roots(p);
    REQUIRE(roots.size() == 3);
    std::vector<long> vals;
    for (auto& r : roots) vals.push_back(mpz_class(r.root.residue() % 4096).get_si());
    CHECK(std::count(vals.begin(), vals.end(), 3) == 1);
    CHECK(std::count(vals.begin(), vals.end(), 10) == 1);
    CHECK(std::count(vals.begin(), vals.end(), 24) == 1);
    for (auto& r : roots) {
        auto pv = p.eval(r.root).valuation();
        CHECK(pv.is_lower_bound);  // vanishes at stated precision
    }
}

TEST_CASE("factor descriptor: x^2-2x+4") {
    auto p = Polynomial::from_integers({4, -2, 1}, 64);
    auto d = factor_descriptor(p);
    CHECK(d.cap == 2);
    CHECK(d.d == 2);
    CHECK(d.u.residue() == 0);
    // brute force over k mod 2^8
    for (long k = 0; k < 256; ++k) {
        long lhs = brute_val(p, k);
        long w = (k == 0) ? 100 : valuation2(mpz_class(k));
        CHECK(lhs == std::min(d.cap, 2 * std::min<long>(w, 50)));
    }
}

TEST_CASE("descriptor brute-force equivalence on random inseparable quadratics") {
    std::mt19937_64 rng(21);
    int tried = 0;
    while (tried < 30) {
        // (x - a)^2 + 2^e * odd stays inseparable when e is odd and modest
        long a = static_cast<long>(rng() % 64);
        long e = 3 + 2 * static_cast<long>(rng() % 5);  // odd offset from squares
        long odd = 2 * static_cast<long>(rng() % 200) + 1;
        mpz_class c0 = mpz_class(a) * a + (mpz_class(odd) << e);
        auto p = Polynomial::from_integers({c0, -2 * a, 1}, 96);
        Z2Factorization f = factor_z2(p);
        if (f.min_terms.size() != 1 || !f.roots.empty()) continue;
        ++tried;
        auto d = f.min_terms.front();
        long modulus_bits = std::min<long>(d.cap + 2, 16);
        mpz_class span = mpz_class(1) << modulus_bits;
        for (mpz_class k = 0; k < span; ++k) {
            long lhs = brute_val(p, k);
            mpz_class diff = k - d.u.residue();
            long w;
            if (diff == 0)
                w = 1000;  // beyond cap; min resolves to cap
            else
                w = std::min<long>(valuation2(diff), 1000);
            CHECK(lhs == std::min<long>(d.cap, d.d * w));
        }
    }
}

TEST_CASE("negative slope block stays in the alpha/unit part") {
    // all roots outside the closed unit disk: v2(f(k)) = v2(f(0)) for all k
    std::mt19937_64 rng(23);
    for (int it = 0; it < 30; ++it) {
        // product of (2*odd_a x - odd_b): every root has negative valuation
        std::vector<mpz_class> coeffs = {1};
        int deg = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < deg; ++i) {
            mpz_class a = 2 * (2 * static_cast<long>(rng() % 50) + 1);
            mpz_class b = 2 * static_cast<long>(rng() % 50) + 1;
            std::vector<mpz_class> next(coeffs.size() + 1, 0);
            for (size_t j = 0; j < coeffs.size(); ++j) {
                next[j] += coeffs[j] * (-b);
                next[j + 1] += coeffs[j] * a;
            }
            coeffs = next;
        }
        std::vector<PadicNumber> c;
        for (auto& v : coeffs) c.push_back(PadicNumber::from_integer(v, 80));
        PadicSeries f(std::move(c), 0, 2);
        auto sf = slope_factorize(f);
        CHECK(sf.factor.degree() == 0);  // no roots in the closed unit disk
        Polynomial p(std::vector<PadicNumber>(f.coeffs().begin(), f.coeffs().end()));
        long v0 = p.eval(mpz_class(0)).valuation().value;
        for (int t = 0; t < 100; ++t) {
            mpz_class k = static_cast<long>(rng() % 100000);
            CHECK(p.eval(k).valuation().value == v0);
        }
    }
}

TEST_CASE("root certification on random split products") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 40; ++it) {
        // monic product of distinct small linear factors
        std::vector<long> rs;
        int deg = 2 + static_cast<int>(rng() % 4);
        while (static_cast<int>(rs.size()) < deg) {
            long r = static_cast<long>(rng() % 2000);
            if (std::find(rs.begin(), rs.end(), r) == rs.end()) rs.push_back(r);
        }
        std::vector<mpz_class> coeffs = {1};
        for (long r : rs) {
            std::vector<mpz_class> next(coeffs.size() + 1, 0);
            for (size_t j = 0; j < coeffs.size(); ++j) {
                next[j] += coeffs[j] * (-r);
                next[j + 1] += coeffs[j];
            }
            coeffs = next;
        }
        auto p = Polynomial::from_integers(coeffs, 140);
        auto roots = z2_roots(p);
        REQUIRE(roots.size() == rs.size());
        for (auto& r : roots) {
            CHECK(p.eval(r.root).valuation().is_lower_bound);
            bool matches = false;
            for (long want : rs)
                if (r.root.residue() == want) matches = true;
            CHECK(matches);
        }
    }
}
