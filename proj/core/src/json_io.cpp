#include "padic2/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "padic2/errors.hpp"

namespace padic2 {

ordered_json to_json(const PadicNumber& v) {
    return ordered_json{{"residue_hex", v.residue_hex()}, {"precision_bits", v.precision()}};
}

PadicNumber padic_from_json(const ordered_json& j) {
    mpz_class r(j.at("residue_hex").get<std::string>(), 16);
    return PadicNumber::from_integer(r, j.at("precision_bits").get<long>());
}

ordered_json to_json(const NewtonPolygon& np) {
    ordered_json verts = ordered_json::array();
    for (const auto& v : np.vertices())
        verts.push_back(ordered_json::array({v.index, v.height.str()}));
    return ordered_json{{"vertices", verts}};
}

namespace {

std::string rat_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class rat_parse(const std::string& s) {
    mpq_class q(s);
    q.canonicalize();
    return q;
}

}  // namespace

ordered_json to_json(const ValuationFormula& f) {
    ordered_json omegas = ordered_json::array();
    for (const auto& o : f.omegas) omegas.push_back(to_json(o));
    ordered_json mins = ordered_json::array();
    for (const auto& m : f.min_terms)
        mins.push_back(ordered_json{{"cap", m.cap}, {"d", m.d}, {"u", to_json(m.u)}});
    ordered_json j{{"mu", rat_str(f.mu)},
                   {"lambda", f.lambda},
                   {"omegas", omegas},
                   {"min_terms", mins}};
    if (f.valid_from.has_value())
        j["valid_from"] = *f.valid_from;
    else
        j["valid_from"] = "asymptotic";
    j["modulus"] = f.modulus;
    j["residue"] = f.residue;
    return j;
}

ValuationFormula formula_from_json(const ordered_json& j) {
    ValuationFormula f;
    f.mu = rat_parse(j.at("mu").get<std::string>());
    f.lambda = j.at("lambda").get<long>();
    for (const auto& o : j.at("omegas")) f.omegas.push_back(padic_from_json(o));
    for (const auto& m : j.at("min_terms"))
        f.min_terms.push_back({m.at("cap").get<long>(), m.at("d").get<int>(),
                               padic_from_json(m.at("u"))});
    if (j.at("valid_from").is_string())
        f.valid_from = std::nullopt;
    else
        f.valid_from = j.at("valid_from").get<long>();
    f.modulus = j.at("modulus").get<long>();
    f.residue = j.at("residue").get<long>();
    return f;
}

ordered_json to_json(const TraceFormulaTable& t) {
    ordered_json rows = ordered_json::array();
    for (const auto& [n, entry] : t.rows) {
        ordered_json pairing = ordered_json::array();
        for (const auto& pc : entry.pairing) {
            ordered_json p{{"is_min_term", pc.is_min_term},
                           {"constant", to_json(pc.constant)},
                           {"cap", pc.cap},
                           {"d", pc.d},
                           {"ell", pc.ell}};
            if (pc.pairing_valuation.has_value())
                p["pairing_valuation"] = *pc.pairing_valuation;
            else
                p["pairing_valuation"] = "inf";
            pairing.push_back(p);
        }
        rows.push_back(ordered_json{
            {"n", n}, {"formula", to_json(entry.formula)}, {"pairing", pairing}});
    }
    return ordered_json{{"n_max", t.n_max},
                        {"precision_bits", t.precision_bits},
                        {"degree", t.degree},
                        {"rows", rows}};
}

TraceFormulaTable table_from_json(const ordered_json& j) {
    TraceFormulaTable t;
    t.n_max = j.at("n_max").get<long>();
    t.precision_bits = j.at("precision_bits").get<long>();
    t.degree = j.at("degree").get<long>();
    for (const auto& row : j.at("rows")) {
        TraceFormulaEntry entry;
        entry.formula = formula_from_json(row.at("formula"));
        for (const auto& p : row.at("pairing")) {
            PairedConstant pc;
            pc.is_min_term = p.at("is_min_term").get<bool>();
            pc.constant = padic_from_json(p.at("constant"));
            pc.cap = p.at("cap").get<long>();
            pc.d = p.at("d").get<int>();
            pc.ell = p.at("ell").get<long>();
            if (p.at("pairing_valuation").is_string())
                pc.pairing_valuation = std::nullopt;
            else
                pc.pairing_valuation = p.at("pairing_valuation").get<long>();
            entry.pairing.push_back(pc);
        }
        t.rows.emplace(row.at("n").get<long>(), std::move(entry));
    }
    return t;
}

ordered_json to_json(const VerifyReport& r) {
    ordered_json balls = ordered_json::array();
    for (const auto& v : r.verdicts) {
        ordered_json b{{"center", v.ball.center.get_str()},
                       {"radius_valuation", v.ball.radius_valuation}};
        if (v.verified) {
            b["verdict"] = "verified";
            b["vertex"] = v.vertex;
            b["polygons_equal"] = v.polygons_equal;
            b["t2_geq_bc"] = v.t2_geq_bc;
        } else {
            b["verdict"] = "no_vertex_in_range";
        }
        balls.push_back(b);
    }
    ordered_json unresolved = ordered_json::array();
    for (const auto& b : r.unresolved)
        unresolved.push_back(ordered_json{{"center", b.center.get_str()},
                                          {"radius_valuation", b.radius_valuation}});
    return ordered_json{{"iterations", r.iterations},
                        {"c1_count", r.c1_count},
                        {"balls_processed", r.balls_processed},
                        {"balls_split", r.balls_split},
                        {"max_depth", r.max_depth},
                        {"balls", balls},
                        {"unresolved", unresolved}};
}

ordered_json to_json(const HatadaReport& r) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows) {
        ordered_json slopes = ordered_json::array();
        for (const auto& s : row.slopes) slopes.push_back(rat_str(s));
        rows.push_back(ordered_json{
            {"modulus", row.modulus}, {"residue", row.residue}, {"slopes", slopes}});
    }
    return ordered_json{
        {"n_max", r.n_max}, {"slopes_reported", r.slopes_reported}, {"rows", rows}};
}

namespace {

std::string mod50(const PadicNumber& v) {
    mpz_class r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), v.residue().get_mpz_t(),
                    static_cast<mp_bitcnt_t>(std::min<long>(50, v.precision())));
    return r.get_str();
}

}  // namespace

std::string appendix_text(const TraceFormulaTable& t) {
    std::ostringstream out;
    out << "n | term in v2(Tr(wedge^n T2 | S_2k)) | closed-form term | v2(const - ell)\n";
    out << std::string(78, '-') << "\n";
    for (const auto& [n, entry] : t.rows) {
        bool first = true;
        for (const auto& pc : entry.pairing) {
            out << (first ? std::to_string(n) : " ") << " | ";
            first = false;
            if (pc.is_min_term) {
                out << "min(" << pc.cap << ", " << pc.d << "*v2(k - " << mod50(pc.constant)
                    << "))";
                out << " | " << pc.d << "*v2(k - " << pc.ell << ") | ";
            } else {
                out << "v2(k - " << mod50(pc.constant) << ")";
                out << " | v2(k - " << pc.ell << ") | ";
            }
            if (pc.pairing_valuation.has_value())
                out << *pc.pairing_valuation;
            else
                out << "inf";
            out << "\n";
        }
        out << std::string(78, '-') << "\n";
    }
    return out.str();
}

void write_json_file(const std::string& path, const ordered_json& j) {
    std::ofstream out(path);
    if (!out) throw DomainError("write_json_file: cannot open " + path);
    out << j.dump(2) << "\n";
}

ordered_json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("read_json_file: cannot open " + path);
    ordered_json j;
    in >> j;
    return j;
}

}  // namespace padic2
