#include "topzeta/report.hpp"

namespace topzeta {

std::string to_string(NondegStatus s) {
  switch (s) {
    case NondegStatus::Certified: return "certified";
    case NondegStatus::Uncertified: return "uncertified";
    case NondegStatus::Degenerate: return "degenerate";
    case NondegStatus::Skipped: return "skipped";
  }
  return "?";
}

namespace {

nlohmann::json factor_json(const LinearFactor& f) {
  return nlohmann::json::array({f.N.to_string(), f.nu.to_string()});
}

}  // namespace

nlohmann::json zeta_report_json(const ZetaExpr& zeta, const NormalizedRatFunc& normalized,
                                const PoleTable& poles, NondegStatus nondeg) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : zeta.terms) {
    nlohmann::json denom = nlohmann::json::array();
    for (const auto& f : t.denominator) denom.push_back(factor_json(f));
    terms.push_back({{"coefficient", t.coefficient.to_string()},
                     {"s_power", t.s_power},
                     {"denominator", denom}});
  }

  nlohmann::json numerator = nlohmann::json::array();
  int deg = normalized.numerator.degree_in(kSVar);
  for (int e = 0; e <= std::max(deg, 0); ++e) {
    SparsePoly c = normalized.numerator.coeff_in(kSVar, e);
    numerator.push_back(c.is_constant() ? c.constant_value().to_string() : c.to_string());
  }

  nlohmann::json denom_factors = nlohmann::json::array();
  for (std::size_t t = 0; t < normalized.denominator.size();) {
    std::size_t run = t;
    while (run < normalized.denominator.size() &&
           normalized.denominator[run] == normalized.denominator[t])
      ++run;
    const LinearFactor& f = normalized.denominator[t];
    denom_factors.push_back(nlohmann::json::array(
        {f.N.to_string(), f.nu.to_string(), static_cast<int>(run - t)}));
    t = run;
  }

  return {{"zeta_terms", terms},
          {"numerator", numerator},
          {"denominator_factors", denom_factors},
          {"poles", pole_table_json(poles)},
          {"nondegenerate", to_string(nondeg)}};
}

nlohmann::json pole_table_json(const PoleTable& poles) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : poles)
    out.push_back({{"pole", p.pole.to_string()}, {"order", p.order}});
  return out;
}

nlohmann::json nondeg_report_json(const NewtonPolytope& np, const NondegReport& report) {
  nlohmann::json faces = nlohmann::json::array();
  for (const auto& fr : report.faces) {
    const CompactFace& face = np.compact_faces.at(static_cast<std::size_t>(fr.face_index));
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : face.vertices) verts.push_back(v);
    nlohmann::json entry = {{"dim", fr.dim}, {"vertices", verts},
                            {"verdict", to_string(fr.verdict)}};
    if (!fr.witness.empty()) entry["witness"] = fr.witness;
    faces.push_back(entry);
  }
  return {{"faces", faces}, {"overall", to_string(report.overall)}};
}

}  // namespace topzeta
