#pragma once

#include "topzeta/newton_polytope.hpp"
#include "topzeta/zeta_expr.hpp"

namespace topzeta {

// J-contribution of one compact face, in the factored shape of the formula.
struct JTerm {
  int face_index = -1;
  ZetaExpr value;
};

JTerm j_facet(const NewtonPolytope& np, int face_index);
JTerm j_edge(const NewtonPolytope& np, int face_index);
JTerm j_vertex(const NewtonPolytope& np, int face_index);

// Vertex contribution from an explicit facet cycle (fan apex = cycle front).
// Exposed so partition independence can be checked across rotations and
// reflections of the cycle.
ZetaExpr j_vertex_from_cycle(const NewtonPolytope& np, const std::vector<int>& cycle);

// The local topological zeta function as a factored term sum: vertices
// contribute J directly, positive-dimensional compact faces contribute
// (-1)^dim * normalized volume * J times s/(s+1).
ZetaExpr zeta_local(const SupportedPoly& f);

enum class NondegStatus { Certified, Uncertified, Degenerate, Skipped };

struct LocalZeta {
  ZetaExpr zeta;
  NondegStatus nondeg = NondegStatus::Skipped;
};

// zeta_local plus a nondegeneracy certificate for the formula's hypothesis;
// a failed or inconclusive certificate never blocks the computation, it is
// reported alongside.
LocalZeta zeta_local_checked(const SupportedPoly& f, bool run_check = true);

// True iff every pole of Z is a pole of Z1, of Z2, or equals -1.
bool theorem3_check(const ZetaExpr& Z, const ZetaExpr& Z1, const ZetaExpr& Z2);

}  // namespace topzeta
