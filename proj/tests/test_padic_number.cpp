#include <random>

#include "doctest.h"
#include "padic2/errors.hpp"
#include "padic2/padic_number.hpp"

using namespace padic2;

namespace {

mpz_class random_mpz(std::mt19937_64& rng, long bits) {
    mpz_class v = 0;
    for (long i = 0; i < bits; i += 32) {
        v <<= 32;
        v += static_cast<unsigned long>(rng() & 0xffffffffull);
    }
    mpz_class r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    return r;
}

}  // namespace

TEST_CASE("ring operations") {
    auto a = PadicNumber::from_integer(1 + 2, 8);
    auto b = PadicNumber::from_integer(1 - 2, 8);
    CHECK((a * b).residue() == 253);  // -3 mod 2^8

    auto x = PadicNumber::from_integer(24, 16);
    auto y = x.div_pow2(3);
    CHECK(y.residue() == 3);
    CHECK(y.precision() == 13);

    auto m1 = PadicNumber::from_integer(-1, 64);
    CHECK((m1 * m1).residue() == 1);

    CHECK_THROWS_AS(PadicNumber::from_integer(8, 10).div_pow2(10), PrecisionError);
    CHECK_THROWS_AS(PadicNumber::from_integer(8, 10).div_pow2(4), DomainError);
}

TEST_CASE("precision propagation is monotone") {
    auto a = PadicNumber::from_integer(17, 40);
    auto b = PadicNumber::from_integer(5, 25);
    CHECK((a + b).precision() == 25);
    CHECK((a - b).precision() == 25);
    CHECK((a * b).precision() == 25);
}

TEST_CASE("valuation") {
    CHECK(PadicNumber::from_integer(24, 16).valuation().value == 3);
    CHECK_FALSE(PadicNumber::from_integer(24, 16).valuation().is_lower_bound);
    CHECK(PadicNumber::from_integer(-7, 16).valuation().value == 0);
    auto z = PadicNumber::zero(64);
    CHECK(z.valuation().value == 64);
    CHECK(z.valuation().is_lower_bound);
    CHECK(z.height().is_infinity());
}

TEST_CASE("valuation is additive under multiplication") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        long va = static_cast<long>(rng() % 10);
        long vb = static_cast<long>(rng() % 10);
        mpz_class ua = 2 * random_mpz(rng, 40) + 1;
        mpz_class ub = 2 * random_mpz(rng, 40) + 1;
        auto a = PadicNumber::from_integer(ua << va, 96);
        auto b = PadicNumber::from_integer(ub << vb, 96);
        CHECK((a * b).valuation().value == va + vb);
    }
}

TEST_CASE("unit inversion") {
    CHECK(PadicNumber::one(32).invert_unit().residue() == 1);
    auto inv3 = PadicNumber::from_integer(3, 8).invert_unit();
    CHECK(inv3.residue() == 171);

    // extended-gcd oracle for 1/(-7) mod 2^50
    mpz_class mod = mpz_class(1) << 50;
    mpz_class expect;
    mpz_class m7 = -7;
    mpz_class m7r;
    mpz_fdiv_r_2exp(m7r.get_mpz_t(), m7.get_mpz_t(), 50);
    CHECK(mpz_invert(expect.get_mpz_t(), m7r.get_mpz_t(), mod.get_mpz_t()) != 0);
    auto inv = PadicNumber::from_integer(-7, 50).invert_unit();
    CHECK(inv.residue() == expect);
    CHECK((inv * PadicNumber::from_integer(-7, 50)).residue() == 1);

    CHECK_THROWS_AS(PadicNumber::from_integer(6, 16).invert_unit(), NotUnitError);
}

TEST_CASE("sqrt_unit examples") {
    CHECK(PadicNumber::one(40).sqrt_unit().residue() == 1);

    // sqrt(9): the branch == 1 mod 4 is -3
    auto r = PadicNumber::from_integer(9, 40).sqrt_unit();
    CHECK(r.precision() == 39);
    mpz_class m3 = -3;
    mpz_class m3r;
    mpz_fdiv_r_2exp(m3r.get_mpz_t(), m3.get_mpz_t(), 39);
    CHECK(r.residue() == m3r);

    // sqrt(-7): exhaustive search mod 2^7 of x^2 == -7, root lifts == 1 mod 4
    // land on 21 mod 32
    bool found = false;
    for (int x = 1; x < 128; x += 2)
        if ((x * x) % 128 == ((-7) % 128 + 128) % 128 && x % 4 == 1 && x % 32 == 21)
            found = true;
    CHECK(found);
    auto s = PadicNumber::from_integer(-7, 60).sqrt_unit();
    CHECK(s.residue() % 32 == 21);
    CHECK((s * s).residue() == PadicNumber::from_integer(-7, 59).residue());

    CHECK_THROWS_AS(PadicNumber::from_integer(3, 40).sqrt_unit(), NoSquareRootError);
    CHECK_THROWS_AS(PadicNumber::from_integer(5, 40).sqrt_unit(), NoSquareRootError);
}

TEST_CASE("sqrt_unit squares back over random units") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10000; ++i) {
        mpz_class u = (random_mpz(rng, 57) << 3) + 1;  // == 1 mod 8
        auto x = PadicNumber::from_integer(u, 60);
        auto r = x.sqrt_unit();
        CHECK((r * r).residue() == x.truncate(59).residue());
        CHECK(r.residue() % 4 == 1);
    }
}

TEST_CASE("iwasawa_log basics") {
    CHECK(PadicNumber::one(64).iwasawa_log().known_zero());
    CHECK(PadicNumber::from_integer(-1, 64).iwasawa_log().known_zero());

    // partial-sum oracle for log(9) = log(1+8): the series
    // sum_{j>=1} (-1)^(j+1) 8^j/j has 2-adic valuation 3
    long prec = 4096;
    mpq_class partial = 0;
    mpz_class pw = 1;
    for (int j = 1; j <= 40; ++j) {
        pw *= 8;
        mpq_class term(pw, j);
        term.canonicalize();
        if (j % 2 == 1)
            partial += term;
        else
            partial -= term;
    }
    long oracle_val = valuation2(partial);
    CHECK(oracle_val == 3);
    auto lg = PadicNumber::from_integer(9, prec).iwasawa_log();
    CHECK(lg.valuation().value == 3);

    // congruence of the full value against the exact partial sum mod 2^20:
    // terms past j = 40 have valuation >= 3*41 - 5 > 20
    mpz_class num = partial.get_num(), den = partial.get_den();
    auto oracle = PadicNumber::from_integer(num, 20) *
                  PadicNumber::from_integer(den, 20).invert_unit();
    CHECK(lg.truncate(20).residue() == oracle.residue());

    CHECK_THROWS_AS(PadicNumber::from_integer(4, 32).iwasawa_log(), NotUnitError);
}

TEST_CASE("iwasawa_log is a homomorphism and kills sign") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 60; ++i) {
        mpz_class u = 2 * random_mpz(rng, 120) + 1;
        mpz_class v = 2 * random_mpz(rng, 120) + 1;
        auto a = PadicNumber::from_integer(u, 160);
        auto b = PadicNumber::from_integer(v, 160);
        auto lab = (a * b).iwasawa_log();
        auto sum = a.iwasawa_log() + b.iwasawa_log();
        long bits = std::min(lab.precision(), sum.precision());
        CHECK(lab.congruent(sum, bits));
        auto lneg = (-a).iwasawa_log();
        auto la = a.iwasawa_log();
        CHECK(la.congruent(lneg, std::min(la.precision(), lneg.precision())));
    }
}

TEST_CASE("residue section") {
    CHECK(PadicNumber::residue_section(0, 16).known_zero());
    CHECK(PadicNumber::residue_section(1, 16).residue() == 1);
    for (int b : {0, 1})
        CHECK(PadicNumber::residue_section(b, 16).residue() % 2 == b);
    CHECK_THROWS_AS(PadicNumber::residue_section(2, 16), DomainError);
}

TEST_CASE("pow matches repeated multiplication") {
    auto b = PadicNumber::from_integer(1234577, 128);
    auto p = PadicNumber::one(128);
    for (int k = 0; k <= 20; ++k) {
        CHECK(b.pow(k).residue() == p.residue());
        p *= b;
    }
}
