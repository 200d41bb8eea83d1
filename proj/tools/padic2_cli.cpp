// Command line front end: formulas, bc, hurwitz, oracle, crosscheck,
// verify-bc, hatada.  All heavy lifting lives in the library; this file is
// flag plumbing and report emission.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <iostream>

#include "padic2/buzzard_calegari.hpp"
#include "padic2/config.hpp"
#include "padic2/crosscheck.hpp"
#include "padic2/errors.hpp"
#include "padic2/hecke_traces.hpp"
#include "padic2/json_io.hpp"
#include "padic2/modular_oracle.hpp"
#include "padic2/verifier.hpp"

using namespace padic2;

namespace {

// Formula tables are cached keyed by their full budget; a request at a
// different budget recomputes rather than extends.
TraceFormulaTable load_or_build_table(const Config& cfg, HurwitzCache& cache) {
    std::string path = cfg.table_cache_path(cfg.n_max, cfg.precision_bits, cfg.series_degree);
    if (std::filesystem::exists(path)) return table_from_json(read_json_file(path));
    TraceFormulaTable table =
        build_table(cfg.n_max, cfg.series_degree, cfg.precision_bits, cache);
    std::filesystem::create_directories(cfg.cache_dir);
    write_json_file(path, to_json(table));
    return table;
}

int cmd_formulas(const Config& cfg, const std::string& format, const std::string& out_path) {
    HurwitzCache cache(cfg.hurwitz_cache_path());
    TraceFormulaTable table = load_or_build_table(cfg, cache);
    cache.save();
    std::string payload = format == "json" ? to_json(table).dump(2) + "\n"
                                           : appendix_text(table);
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path);
        out << payload;
    }
    return 0;
}

int cmd_bc(const Config&, long k, long n_max, bool polygon, bool heights, bool check_product) {
    ordered_json j;
    if (check_product) {
        bool all_ok = true;
        for (long n = 1; n <= n_max; ++n) {
            mpq_class c = bc_coefficient(n, k);
            auto h = bc_heights(k, n).heights.at(n);
            bool ok = (c == 0) ? h.is_infinity() : (h == Valuation(valuation2(c)));
            all_ok = all_ok && ok;
        }
        j["k"] = k;
        j["n_max"] = n_max;
        j["product_matches_heights"] = all_ok;
        std::cout << j.dump(2) << "\n";
        return all_ok ? 0 : 1;
    }
    if (heights || !polygon) {
        ordered_json hs = ordered_json::array();
        for (const auto& [n, a] : bc_heights(k, n_max).heights)
            hs.push_back(ordered_json::array({n, a.str()}));
        j["k"] = k;
        j["heights"] = hs;
    }
    if (polygon) {
        j["k"] = k;
        j["polygon"] = to_json(bc_polygon(k, n_max));
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_hurwitz(const Config& cfg, long r, long n) {
    HurwitzCache cache(cfg.hurwitz_cache_path());
    ordered_json j;
    mpq_class full = h_sum(r, n, cache);
    mpq_class odd = h_sum_odd(r, n, cache);
    j["r"] = r;
    j["n"] = n;
    j["sum"] = full.get_str();
    j["sum_odd"] = odd.get_str();
    long m = (n + 1) / 2;
    if (m >= 1) j["odd_identity_holds"] = lemma_h_odd_check(r, m);
    cache.save();
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_oracle(long weight, bool char_poly, bool polygon, long trace_power) {
    ordered_json j;
    j["weight"] = weight;
    j["dim"] = cusp_dim(weight);
    if (char_poly) {
        ordered_json c = ordered_json::array();
        for (const auto& v : char_poly_reversed(weight)) c.push_back(v.get_str());
        j["char_poly_reversed"] = c;
    }
    if (polygon) j["polygon"] = to_json(oracle_polygon(weight));
    if (trace_power >= 0) j["trace_power"] = t2_power_trace(weight, trace_power).get_str();
    if (!char_poly && !polygon && trace_power < 0)
        j["trace"] = t2_power_trace(weight, 1).get_str();
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_crosscheck(const Config& cfg) {
    HurwitzCache cache(cfg.hurwitz_cache_path());
    TraceFormulaTable table = load_or_build_table(cfg, cache);
    auto results = run_crosscheck(cfg, table, cache);
    cache.save();
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        all = all && r.pass;
    }
    return all ? 0 : 1;
}

int cmd_verify_bc(const Config& cfg, long max_iterations, const std::string& table_path,
                  const std::string& report_path) {
    HurwitzCache cache(cfg.hurwitz_cache_path());
    TraceFormulaTable table = table_path.empty()
                                  ? load_or_build_table(cfg, cache)
                                  : table_from_json(read_json_file(table_path));
    cache.save();
    VerifyReport report = run_verifier(table, table.n_max, max_iterations);
    ordered_json j = to_json(report);
    if (!report_path.empty()) write_json_file(report_path, j);
    std::cout << j.dump(2) << "\n";
    bool ok = report.unresolved.empty();
    for (const auto& v : report.verdicts)
        if (v.verified && (!v.polygons_equal || !v.t2_geq_bc)) ok = false;
    return ok ? 0 : 1;
}

int cmd_hatada(const Config& cfg, const std::string& table_path,
               const std::string& report_path) {
    HurwitzCache cache(cfg.hurwitz_cache_path());
    TraceFormulaTable table = table_path.empty()
                                  ? load_or_build_table(cfg, cache)
                                  : table_from_json(read_json_file(table_path));
    cache.save();
    HatadaReport report = hatada_report(table);
    ordered_json j = to_json(report);
    if (!report_path.empty()) write_json_file(report_path, j);
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact 2-adic valuations of Hecke traces and slope polygons"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    Config cfg;
    app.add_option("--config", config_path, "key=value configuration file");
    auto* precision_opt = app.add_option("--precision", cfg.precision_bits, "working precision in bits");
    auto* degree_opt = app.add_option("--degree", cfg.series_degree, "series truncation degree");
    auto* nmax_opt = app.add_option("--n-max", cfg.n_max, "table depth");
    auto* cache_opt = app.add_option("--cache-dir", cfg.cache_dir, "cache directory");
    auto* seed_opt = app.add_option("--seed", cfg.seed, "seed for randomized sweeps");
    auto* kmin_opt = app.add_option("--k-min", cfg.k_min, "oracle sweep lower half-weight");
    auto* kmax_opt = app.add_option("--k-max", cfg.k_max, "oracle sweep upper half-weight");

    auto* formulas = app.add_subcommand("formulas", "emit the valuation formula table");
    std::string format = "appendix";
    std::string out_path;
    formulas->add_option("--format", format, "appendix|json")
        ->check(CLI::IsMember({"appendix", "json"}));
    formulas->add_option("--out", out_path, "write to a file instead of stdout");

    auto* bc = app.add_subcommand("bc", "closed-form slope-test heights and polygon");
    long bc_k = 0;
    bool bc_polygon_flag = false, bc_heights_flag = false, bc_check = false;
    bc->add_option("--k", bc_k, "half-weight")->required();
    bc->add_flag("--polygon", bc_polygon_flag, "emit the polygon");
    bc->add_flag("--heights", bc_heights_flag, "emit the heights");
    bc->add_flag("--check-product", bc_check, "compare against the exact product");

    auto* hurwitz = app.add_subcommand("hurwitz", "class number power sums");
    long hw_r = 0, hw_n = 0;
    hurwitz->add_option("--r", hw_r, "power of t")->required();
    hurwitz->add_option("--n", hw_n, "exponent of 2")->required();

    auto* oracle = app.add_subcommand("oracle", "exact modular-forms ground truth");
    long o_weight = 0, o_trace_power = -1;
    bool o_char = false, o_poly = false;
    oracle->add_option("--weight", o_weight, "even weight 2k >= 12")->required();
    oracle->add_flag("--char-poly", o_char, "emit det(1 - T2 X)");
    oracle->add_flag("--polygon", o_poly, "emit the 2-adic polygon");
    oracle->add_option("--trace-power", o_trace_power, "emit Tr(T2^n)");

    auto* crosscheck = app.add_subcommand("crosscheck", "run the invariant suites");

    auto* verify = app.add_subcommand("verify-bc", "ball-subdivision polygon verification");
    long max_iterations = 64;
    std::string table_path, report_path;
    verify->add_option("--max-iterations", max_iterations, "worklist round budget");
    verify->add_option("--table", table_path, "formula table JSON (from `formulas`)");
    verify->add_option("--report", report_path, "write the report JSON here");

    auto* hatada = app.add_subcommand("hatada", "lowest slopes by residue class");
    std::string h_table_path, h_report_path;
    hatada->add_option("--table", h_table_path, "formula table JSON");
    hatada->add_option("--report", h_report_path, "write the report JSON here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) {
            Config file_cfg = Config::from_file(config_path);
            // flags override file values
            if (precision_opt->count() == 0) cfg.precision_bits = file_cfg.precision_bits;
            if (degree_opt->count() == 0) cfg.series_degree = file_cfg.series_degree;
            if (nmax_opt->count() == 0) cfg.n_max = file_cfg.n_max;
            if (cache_opt->count() == 0) cfg.cache_dir = file_cfg.cache_dir;
            if (seed_opt->count() == 0) cfg.seed = file_cfg.seed;
            if (kmin_opt->count() == 0) cfg.k_min = file_cfg.k_min;
            if (kmax_opt->count() == 0) cfg.k_max = file_cfg.k_max;
        }
        cfg.validate();

        if (*formulas) return cmd_formulas(cfg, format, out_path);
        if (*bc) return cmd_bc(cfg, bc_k, cfg.n_max, bc_polygon_flag, bc_heights_flag, bc_check);
        if (*hurwitz) return cmd_hurwitz(cfg, hw_r, hw_n);
        if (*oracle) return cmd_oracle(o_weight, o_char, o_poly, o_trace_power);
        if (*crosscheck) return cmd_crosscheck(cfg);
        if (*verify) return cmd_verify_bc(cfg, max_iterations, table_path, report_path);
        if (*hatada) return cmd_hatada(cfg, h_table_path, h_report_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
