#pragma once

#include <string>
#include <vector>

#include "topzeta/newton_polytope.hpp"
#include "topzeta/sparse_poly.hpp"

namespace topzeta {

enum class FaceVerdict { Nondegenerate, PossiblyDegenerate, Degenerate };

std::string to_string(FaceVerdict v);

struct FaceReport {
  int face_index = -1;
  int dim = 0;
  FaceVerdict verdict = FaceVerdict::Nondegenerate;
  std::string witness;  // repeated factor (dim <= 1) or inconclusive gcd (dim 2)
};

// One-sided certificate: Nondegenerate verdicts are exact; PossiblyDegenerate
// appears only on 2-dimensional faces where the resultant test is
// inconclusive.
struct NondegReport {
  std::vector<FaceReport> faces;
  FaceVerdict overall = FaceVerdict::Nondegenerate;
};

// Restriction of f to the lattice points lying on the face.
SupportedPoly face_polynomial(const SupportedPoly& f, const NewtonPolytope& np,
                              const CompactFace& face);

FaceVerdict check_face(const SupportedPoly& f_sigma, const NewtonPolytope& np,
                       const CompactFace& face, std::string* witness = nullptr);

NondegReport is_nondegenerate(const SupportedPoly& f);

}  // namespace topzeta
