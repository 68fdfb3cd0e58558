#include "topzeta/dl_zeta.hpp"

#include <algorithm>

#include "topzeta/errors.hpp"
#include "topzeta/nondegeneracy.hpp"

namespace topzeta {

namespace {

LinearFactor facet_factor(const FacetData& f) {
  return LinearFactor::numeric(Rational(static_cast<long>(f.N)),
                               Rational(static_cast<long>(f.nu)));
}

}  // namespace

JTerm j_facet(const NewtonPolytope& np, int face_index) {
  const CompactFace& face = np.compact_faces.at(face_index);
  if (face.dim != np.n - 1) throw WrongDimError("j_facet needs a face of dimension n-1");
  ZetaExpr z;
  z.append(make_zeta_term(SparsePoly::constant(Rational(1)), 0,
                          {facet_factor(np.facet(face.own_facet))}));
  return {face_index, std::move(z)};
}

JTerm j_edge(const NewtonPolytope& np, int face_index) {
  const CompactFace& face = np.compact_faces.at(face_index);
  if (np.n != 3 || face.dim != 1) throw WrongDimError("j_edge needs a 1-face in dimension 3");
  if (face.facets.size() != 2) throw WrongDimError("edge must lie in exactly two facets");
  const FacetData& f1 = np.facet(face.facets[0]);
  const FacetData& f2 = np.facet(face.facets[1]);
  Coord m = mult2(f1.normal, f2.normal);
  ZetaExpr z;
  z.append(make_zeta_term(SparsePoly::constant(Rational(static_cast<long>(m))), 0,
                          {facet_factor(f1), facet_factor(f2)}));
  return {face_index, std::move(z)};
}

ZetaExpr j_vertex_from_cycle(const NewtonPolytope& np, const std::vector<int>& cycle) {
  ZetaExpr z;
  const FacetData& apex = np.facet(cycle.front());
  for (std::size_t t = 2; t < cycle.size(); ++t) {
    const FacetData& f1 = np.facet(cycle[t - 1]);
    const FacetData& f2 = np.facet(cycle[t]);
    Coord m = mult3(apex.normal, f1.normal, f2.normal);
    if (m == 0) continue;  // coplanar triple contributes nothing
    z.append(make_zeta_term(SparsePoly::constant(Rational(static_cast<long>(m))), 0,
                            {facet_factor(apex), facet_factor(f1), facet_factor(f2)}));
  }
  return z;
}

JTerm j_vertex(const NewtonPolytope& np, int face_index) {
  const CompactFace& face = np.compact_faces.at(face_index);
  if (face.dim != 0) throw WrongDimError("j_vertex needs a vertex");
  if (np.n == 2) {
    if (face.facets.size() != 2) throw WrongDimError("planar vertex must lie on two facets");
    const FacetData& f1 = np.facet(face.facets[0]);
    const FacetData& f2 = np.facet(face.facets[1]);
    Coord det = mult2(f1.normal, f2.normal);
    ZetaExpr z;
    z.append(make_zeta_term(SparsePoly::constant(Rational(static_cast<long>(det))), 0,
                            {facet_factor(f1), facet_factor(f2)}));
    return {face_index, std::move(z)};
  }
  std::vector<int> cycle = np.order_facets_around_vertex(face);
  return {face_index, j_vertex_from_cycle(np, cycle)};
}

ZetaExpr zeta_local(const SupportedPoly& f) {
  NewtonPolytope np = build_polytope(f);
  ZetaExpr total;
  const LinearFactor unit = LinearFactor::numeric(Rational(1), Rational(1));
  for (std::size_t idx = 0; idx < np.compact_faces.size(); ++idx) {
    const CompactFace& face = np.compact_faces[idx];
    if (face.dim == 0) {
      for (auto& t : j_vertex(np, static_cast<int>(idx)).value.terms) total.append(std::move(t));
      continue;
    }
    JTerm j = face.dim == np.n - 1 ? j_facet(np, static_cast<int>(idx))
                                   : j_edge(np, static_cast<int>(idx));
    long long vol = np.normalized_volume(face);
    Rational weight = Rational(static_cast<long>(vol));
    if (face.dim % 2 == 1) weight = -weight;
    for (auto& t : j.value.terms) {
      FactorList denom = t.denominator;
      denom.push_back(unit);
      total.append(
          make_zeta_term(weight * t.coefficient, 1, std::move(denom)));
    }
  }
  return total;
}

LocalZeta zeta_local_checked(const SupportedPoly& f, bool run_check) {
  LocalZeta out;
  out.zeta = zeta_local(f);
  if (!run_check) {
    out.nondeg = NondegStatus::Skipped;
    return out;
  }
  NondegReport report = is_nondegenerate(f);
  switch (report.overall) {
    case FaceVerdict::Nondegenerate: out.nondeg = NondegStatus::Certified; break;
    case FaceVerdict::PossiblyDegenerate: out.nondeg = NondegStatus::Uncertified; break;
    case FaceVerdict::Degenerate: out.nondeg = NondegStatus::Degenerate; break;
  }
  return out;
}

bool theorem3_check(const ZetaExpr& Z, const ZetaExpr& Z1, const ZetaExpr& Z2) {
  auto poles = [](const ZetaExpr& z) {
    PoleTable t = pole_table(zeta_combine(z));
    std::vector<Rational> vals;
    for (const auto& e : t) vals.push_back(e.pole);
    return vals;
  };
  std::vector<Rational> p1 = poles(Z1), p2 = poles(Z2);
  const Rational minus_one(-1);
  for (const Rational& p : poles(Z)) {
    if (p == minus_one) continue;
    bool covered = std::find(p1.begin(), p1.end(), p) != p1.end() ||
                   std::find(p2.begin(), p2.end(), p) != p2.end();
    if (!covered) return false;
  }
  return true;
}

}  // namespace topzeta
