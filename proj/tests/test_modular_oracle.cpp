#include "doctest.h"
#include "padic2/errors.hpp"
#include "padic2/hecke_traces.hpp"
#include "padic2/modular_oracle.hpp"

using namespace padic2;

TEST_CASE("eisenstein and delta expansions") {
    auto e4 = eisenstein(4, 8);
    CHECK(e4[0] == 1);
    CHECK(e4[1] == 240);
    CHECK(e4[2] == 240 * 9);

    auto e6 = eisenstein(6, 8);
    CHECK(e6[1] == -504);
    CHECK(e6[2] == -504 * 33);  // sigma_5(2) = 33

    auto d = delta_form(8);
    CHECK(d[0] == 0);
    CHECK(d[1] == 1);
    CHECK(d[2] == -24);
    CHECK(d[3] == 252);
    CHECK(d[4] == -1472);
}

TEST_CASE("cusp dimensions") {
    CHECK(cusp_dim(12) == 1);
    CHECK(cusp_dim(14) == 0);
    CHECK(cusp_dim(16) == 1);
    CHECK(cusp_dim(24) == 2);
    CHECK(cusp_dim(26) == 1);
    CHECK(cusp_dim(36) == 3);
    CHECK(cusp_dim(38) == 2);
}

TEST_CASE("miller basis is echelon") {
    for (long w : {12, 24, 36, 48, 50}) {
        long dim = cusp_dim(w);
        auto basis = miller_basis(w, 2 * dim + 4);
        REQUIRE(static_cast<long>(basis.size()) == dim);
        for (long i = 1; i <= dim; ++i) {
            CHECK(basis[i - 1][0] == 0);
            for (long j = 1; j <= dim; ++j) CHECK(basis[i - 1][j] == (i == j ? 1 : 0));
        }
    }
}

TEST_CASE("t2 matrices at small weights") {
    auto m12 = t2_matrix(12);
    REQUIRE(m12.size() == 1);
    CHECK(m12[0][0] == -24);  // tau(2)

    auto m16 = t2_matrix(16);
    REQUIRE(m16.size() == 1);
    CHECK(m16[0][0] == 216);  // E4 * Delta

    auto m24 = t2_matrix(24);
    REQUIRE(m24.size() == 2);
    CHECK(m24[0][0] + m24[1][1] == 1080);
}

TEST_CASE("characteristic polynomials") {
    auto cp12 = char_poly_reversed(12);
    REQUIRE(cp12.size() == 2);
    CHECK(cp12[0] == 1);
    CHECK(cp12[1] == 24);  // det(1 + 24X)

    auto cp24 = char_poly_reversed(24);
    REQUIRE(cp24.size() == 3);
    CHECK(cp24[0] == 1);
    CHECK(cp24[1] == -1080);
    CHECK(cp24[2] == -20468736);

    for (long w = 12; w <= 60; w += 2)
        CHECK(char_poly_reversed(w).size() == static_cast<size_t>(cusp_dim(w) + 1));
}

TEST_CASE("oracle polygons and lowest slopes") {
    auto np24 = oracle_polygon(24);
    auto slopes = np24.slope_list();
    REQUIRE(slopes.size() == 2);
    CHECK(slopes[0] == Valuation(3));
    CHECK(slopes[1] == Valuation(7));

    auto np12 = oracle_polygon(12);
    CHECK(np12.slope_list()[0] == Valuation(3));

    // 2k = 30: k = 15 == 7 mod 8, lowest slope 6 with multiplicity 2
    auto np30 = oracle_polygon(30);
    auto s30 = np30.slope_list();
    REQUIRE(s30.size() >= 2);
    CHECK(s30[0] == Valuation(6));
    CHECK(s30[1] == Valuation(6));
}

TEST_CASE("matrix trace equals the exact trace formula") {
    HurwitzCache cache;
    for (long w = 12; w <= 120; w += 2) {
        if (cusp_dim(w) == 0) continue;
        CHECK(t2_power_trace(w, 1) == es_trace(1, w / 2, cache));
    }
}

TEST_CASE("power traces match the Hecke recursion") {
    // Tr(T_2^n) = sum_i (C(n,i) - C(n,i-1)) 2^{(2k-1)i} Tr(T_{2^{n-2i}})
    HurwitzCache cache;
    for (long w = 12; w <= 60; w += 2) {
        if (cusp_dim(w) == 0) continue;
        long k = w / 2;
        for (long n = 1; n <= 4; ++n) {
            mpz_class want = 0;
            for (long i = 0; 2 * i <= n; ++i) {
                mpz_class c1, c2;
                mpz_bin_uiui(c1.get_mpz_t(), n, i);
                if (i >= 1)
                    mpz_bin_uiui(c2.get_mpz_t(), n, i - 1);
                else
                    c2 = 0;
                mpz_class pw = mpz_class(1) << ((w - 1) * i);
                want += (c1 - c2) * pw * es_trace(n - 2 * i, k, cache);
            }
            CHECK(t2_power_trace(w, n) == want);
        }
    }
}

TEST_CASE("t2 and t3 matrices commute") {
    for (long w = 12; w <= 40; w += 2) {
        long dim = cusp_dim(w);
        if (dim == 0) continue;
        auto a = hecke_matrix(w, 2);
        auto b = hecke_matrix(w, 3);
        for (long i = 0; i < dim; ++i)
            for (long j = 0; j < dim; ++j) {
                mpz_class ab = 0, ba = 0;
                for (long l = 0; l < dim; ++l) {
                    ab += a[i][l] * b[l][j];
                    ba += b[i][l] * a[l][j];
                }
                CHECK(ab == ba);
            }
    }
}
