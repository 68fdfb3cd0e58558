#pragma once

#include <string>

#include <json.hpp>

#include "topzeta/dl_zeta.hpp"
#include "topzeta/nondegeneracy.hpp"
#include "topzeta/zeta_expr.hpp"

namespace topzeta {

std::string to_string(NondegStatus s);

// JSON object for a zeta computation:
//   {"zeta_terms": [...], "numerator": ["p/q", ...] (ascending in s),
//    "denominator_factors": [[N, nu, multiplicity], ...],
//    "poles": [{"pole": "-7/10", "order": 1}, ...],
//    "nondegenerate": "certified"|"uncertified"|"degenerate"}
// Rationals are serialized as strings. Key and array orders are
// deterministic, so the output is byte-stable across runs.
nlohmann::json zeta_report_json(const ZetaExpr& zeta, const NormalizedRatFunc& normalized,
                                const PoleTable& poles, NondegStatus nondeg);

nlohmann::json pole_table_json(const PoleTable& poles);
nlohmann::json nondeg_report_json(const NewtonPolytope& np, const NondegReport& report);

}  // namespace topzeta
