#ifndef PADIC2_JSON_IO_HPP
#define PADIC2_JSON_IO_HPP

#include <nlohmann/json_fwd.hpp>

#include "padic2/exp_sum.hpp"
#include "padic2/hecke_traces.hpp"
#include "padic2/newton_polygon.hpp"
#include "padic2/verifier.hpp"

// Stable JSON forms (ordered keys so reruns are byte identical):
//   PadicNumber        {"residue_hex": "...", "precision_bits": n}
//   NewtonPolygon      {"vertices": [[i, "h"], ...]} with "h" = "a/b"|"inf"
//   ValuationFormula   {"mu": "a/b", "lambda": n, "omegas": [...],
//                       "min_terms": [{"cap","d","u"}], "valid_from": n|"asymptotic"}
//   TraceFormulaTable  {"n_max","precision_bits","degree","rows":[...]}

namespace padic2 {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const PadicNumber& v);
PadicNumber padic_from_json(const ordered_json& j);

ordered_json to_json(const NewtonPolygon& np);

ordered_json to_json(const ValuationFormula& f);
ValuationFormula formula_from_json(const ordered_json& j);

ordered_json to_json(const TraceFormulaTable& t);
TraceFormulaTable table_from_json(const ordered_json& j);

ordered_json to_json(const VerifyReport& r);
ordered_json to_json(const HatadaReport& r);

// Appendix-style aligned text: one block per n, three columns (term, the
// paired closed-form term, pairing valuation), constants printed mod 2^50.
std::string appendix_text(const TraceFormulaTable& t);

void write_json_file(const std::string& path, const ordered_json& j);
ordered_json read_json_file(const std::string& path);

}  // namespace padic2

#endif
