#include <cstdio>

#include "doctest.h"
#include "padic2/errors.hpp"
#include "padic2/hurwitz.hpp"

using namespace padic2;

namespace {

// independent oracle: blunt enumeration of all reduced forms
mpq_class brute_hurwitz(long m) {
    if (m % 4 == 1 || m % 4 == 2) return 0;
    mpq_class total = 0;
    for (long a = 1; a * a <= m; ++a)
        for (long b = -a; b <= a; ++b)
            for (long c = a; 4 * a * c <= m + b * b; ++c) {
                if (b * b - 4 * a * c != -m) continue;
                if ((b == -a || a == c) && b < 0) continue;  // reduction convention
                if (a == b && b == c)
                    total += mpq_class(1, 3);
                else if (a == c && b == 0)
                    total += mpq_class(1, 2);
                else
                    total += 1;
            }
    return total;
}

}  // namespace

TEST_CASE("form enumeration examples") {
    CHECK(hurwitz_forms(3).value == mpq_class(1, 3));
    CHECK(hurwitz_forms(4).value == mpq_class(1, 2));
    CHECK(hurwitz_forms(23).value == 3);
    CHECK(hurwitz_forms(7).value == 1);
    CHECK(hurwitz_forms(8).value == 1);
    CHECK(hurwitz_forms(15).value == 2);
    CHECK(hurwitz_forms(5).value == 0);  // 5 == 1 mod 4
    CHECK(hurwitz_forms(1).value == 0);
    CHECK_THROWS_AS(hurwitz_forms(0), DomainError);
}

TEST_CASE("enumeration matches the blunt oracle") {
    for (long m = 1; m <= 500; ++m) CHECK(hurwitz_forms(m).value == brute_hurwitz(m));
}

TEST_CASE("formula path examples") {
    CHECK(hurwitz_formula(12).value == mpq_class(4, 3));
    CHECK(hurwitz_formula(16).value == mpq_class(3, 2));
    CHECK(hurwitz_formula(7).value == 1);
    CHECK_THROWS_AS(hurwitz_formula(5), DomainError);
}

TEST_CASE("dual-path equality to 2000") {
    for (long m = 3; m <= 2000; ++m) {
        if (m % 4 == 1 || m % 4 == 2) continue;
        CHECK(hurwitz_forms(m).value == hurwitz_formula(m).value);
    }
}

TEST_CASE("integrality for m = 7 mod 8") {
    for (long m = 7; m <= 2000; m += 8)
        CHECK(hurwitz_forms(m).value.get_den() == 1);
}

TEST_CASE("class number power sums") {
    HurwitzCache cache;
    // H_0(2^2) = H(15) + H(12) + H(7) = 2 + 4/3 + 1 = 13/3
    CHECK(h_sum(0, 2, cache) == mpq_class(13, 3));
    // H_0(2^0) = H(3) = 1/3
    CHECK(h_sum(0, 0, cache) == mpq_class(1, 3));
    // base case
    CHECK(h_sum(5, -1, cache) == 0);
    // odd sums
    CHECK(h_sum_odd(0, 1, cache) == 1);      // H(7)
    CHECK(h_sum_odd(0, 2, cache) == 3);      // H(15) + H(7)
}

TEST_CASE("odd-sum identities") {
    // consistency of the examples above at (r, m) = (0, 1)
    CHECK(h_sum(0, 2) - 2 * h_sum(0, 0) - mpq_class(2, 3) == 3);
    for (long r = 0; r <= 6; ++r)
        for (long m = 1; m <= 4; ++m) CHECK(lemma_h_odd_check(r, m));
    CHECK(lemma_h_odd_check(2, 2));
    CHECK(lemma_h_odd_check(1, 3));
}

TEST_CASE("cache round trip") {
    std::string path = "hurwitz_test_cache.jsonl";
    {
        HurwitzCache cache(path);
        CHECK(cache.get(23) == 3);
        CHECK(cache.get(4) == mpq_class(1, 2));
        cache.save();
    }
    {
        HurwitzCache cache(path);
        CHECK(cache.size() == 2);
        CHECK(cache.get(23) == 3);
    }
    std::remove(path.c_str());
}
