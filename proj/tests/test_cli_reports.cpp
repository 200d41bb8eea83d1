#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "padic2/config.hpp"
#include "padic2/crosscheck.hpp"
#include "padic2/errors.hpp"
#include "padic2/json_io.hpp"

using namespace padic2;

namespace {

HurwitzCache& cache() {
    static HurwitzCache c;
    return c;
}

const TraceFormulaTable& table2() {
    static TraceFormulaTable t = build_table(2, 96, 512, cache());
    return t;
}

}  // namespace

TEST_CASE("config parsing and overrides") {
    std::string path = "padic2_test_config.txt";
    {
        std::ofstream out(path);
        out << "# comment line\n";
        out << "precision_bits = 256\n";
        out << "series_degree=128  # trailing comment\n";
        out << "n_max = 3\n";
        out << "cache_dir = /tmp/somewhere\n";
        out << "k_min = 8\nk_max = 40\nseed = 99\n";
    }
    Config cfg = Config::from_file(path);
    CHECK(cfg.precision_bits == 256);
    CHECK(cfg.series_degree == 128);
    CHECK(cfg.n_max == 3);
    CHECK(cfg.cache_dir == "/tmp/somewhere");
    CHECK(cfg.k_min == 8);
    CHECK(cfg.k_max == 40);
    CHECK(cfg.seed == 99);
    cfg.validate();
    std::remove(path.c_str());

    {
        std::ofstream out(path);
        out << "bogus_key = 1\n";
    }
    CHECK_THROWS_AS(Config::from_file(path), DomainError);
    std::remove(path.c_str());
}

TEST_CASE("padic number JSON round trip") {
    auto v = PadicNumber::from_integer(mpz_class("442980431217671"), 120);
    auto j = to_json(v);
    auto back = padic_from_json(j);
    CHECK(back.residue() == v.residue());
    CHECK(back.precision() == v.precision());
}

TEST_CASE("polygon JSON shape") {
    std::vector<PolygonPoint> pts = {{0, Valuation(0)}, {1, Valuation(3)}, {2, Valuation(10)}};
    auto j = to_json(NewtonPolygon::hull(pts));
    CHECK(j["vertices"].size() == 3);
    CHECK(j["vertices"][1][1] == "3");
}

TEST_CASE("table JSON round trip is identical") {
    const auto& t = table2();
    auto j = to_json(t);
    auto back = table_from_json(j);
    CHECK(back.n_max == t.n_max);
    CHECK(back.precision_bits == t.precision_bits);
    CHECK(back.degree == t.degree);
    REQUIRE(back.rows.size() == t.rows.size());
    for (const auto& [n, entry] : t.rows) {
        const auto& b = back.rows.at(n);
        CHECK(b.formula.lambda == entry.formula.lambda);
        REQUIRE(b.formula.omegas.size() == entry.formula.omegas.size());
        for (size_t i = 0; i < entry.formula.omegas.size(); ++i) {
            CHECK(b.formula.omegas[i].residue() == entry.formula.omegas[i].residue());
            CHECK(b.formula.omegas[i].precision() == entry.formula.omegas[i].precision());
        }
        REQUIRE(b.pairing.size() == entry.pairing.size());
        for (size_t i = 0; i < entry.pairing.size(); ++i) {
            CHECK(b.pairing[i].ell == entry.pairing[i].ell);
            CHECK(b.pairing[i].pairing_valuation == entry.pairing[i].pairing_valuation);
        }
    }
    // emit -> load -> emit is byte identical
    CHECK(to_json(back).dump(2) == j.dump(2));
}

TEST_CASE("appendix text carries the pinned constants") {
    auto text = appendix_text(table2());
    CHECK(text.find("v2(k - 442980431217671) | v2(k - 7) | 10") != std::string::npos);
    CHECK(text.find("v2(k - 11)") != std::string::npos);
}

TEST_CASE("warm reruns are byte identical") {
    const auto& t = table2();
    std::string a = to_json(t).dump(2);
    // a rebuilt table from the same inputs serializes identically
    HurwitzCache fresh;
    TraceFormulaTable again = build_table(2, 96, 512, fresh);
    CHECK(to_json(again).dump(2) == a);
}

TEST_CASE("crosscheck catches a perturbed e-table") {
    auto ok = check_bc_product(4, 20, 12345);
    CHECK(ok.pass);
    auto bad = check_bc_product(4, 20, 12345, ETablePerturbation{4, 19, 1});
    CHECK_FALSE(bad.pass);
    CHECK(bad.detail.find("n=4") != std::string::npos);
}

TEST_CASE("narrowed ranges pass faster") {
    Config narrow;
    narrow.k_min = 6;
    narrow.k_max = 12;
    auto r = check_traces_vs_oracle(table2(), narrow.k_min, narrow.k_max);
    CHECK(r.pass);
}
