#pragma once

#include <map>
#include <string>
#include <vector>

#include "topzeta/rational.hpp"

namespace topzeta {

using Coord = long long;
using LatticePoint = std::vector<Coord>;

// A polynomial given by its support at the origin; ambient dimension 2 or 3.
// The origin must not be in the support (f(0) = 0).
struct SupportedPoly {
  int n = 0;
  std::vector<std::string> var_names;
  std::map<LatticePoint, Rational> terms;

  SupportedPoly(int ambient_dim, std::map<LatticePoint, Rational> support,
                std::vector<std::string> names = {});

  std::string to_string() const;
};

// A facet (face of dimension n-1) of the Newton polytope, identified by its
// primitive inner normal. N is the minimum of the normal over the support,
// nu the sum of the normal's coefficients.
struct FacetData {
  std::vector<Coord> normal;
  Coord N = 0;
  Coord nu = 0;
  bool compact = false;
};

struct CompactFace {
  int dim = 0;
  std::vector<LatticePoint> vertices;  // cyclic boundary order when dim == 2
  std::vector<int> facets;             // ids of all facets whose hyperplane contains the face
  int own_facet = -1;                  // set when dim == n-1
};

struct NewtonPolytope {
  int n = 0;
  SupportedPoly poly;
  std::vector<FacetData> facets;
  std::vector<CompactFace> compact_faces;

  const FacetData& facet(int id) const { return facets.at(static_cast<std::size_t>(id)); }

  // Normalized volume of a compact face: 1 for vertices, lattice length for
  // segments, and for polygons the fan sum of |det| over triangles divided
  // by the lattice distance N.
  long long normalized_volume(const CompactFace& face) const;

  // Facet ids around a vertex in cyclic order (consecutive facets share a
  // 1-dimensional face of the polytope through the vertex). Starts at the
  // lexicographically smallest normal, oriented toward the smaller neighbor.
  std::vector<int> order_facets_around_vertex(const CompactFace& vertex) const;

  bool point_on_facet(const LatticePoint& p, int facet_id) const;
};

NewtonPolytope build_polytope(const SupportedPoly& f);

// Index multiplicity of two facet normals: for n=3 the gcd of the absolute
// 2x2 minors of the stacked 2x3 matrix; for n=2 the absolute determinant.
Coord mult2(const std::vector<Coord>& l1, const std::vector<Coord>& l2);

// |det| of three stacked normals (n=3); zero for coplanar triples.
Coord mult3(const std::vector<Coord>& l1, const std::vector<Coord>& l2,
            const std::vector<Coord>& l3);

}  // namespace topzeta
