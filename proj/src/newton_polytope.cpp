#include "topzeta/newton_polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "topzeta/errors.hpp"

namespace topzeta {

namespace {

Coord llabs_c(Coord v) { return v < 0 ? -v : v; }

Coord gcd_c(Coord a, Coord b) {
  a = llabs_c(a);
  b = llabs_c(b);
  while (b) {
    Coord t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Coord dot(const std::vector<Coord>& a, const LatticePoint& p) {
  Coord s = 0;
  for (std::size_t t = 0; t < a.size(); ++t) s += a[t] * p[t];
  return s;
}

std::vector<Coord> cross(const std::vector<Coord>& a, const std::vector<Coord>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Rank of a small integer matrix by fraction-free elimination.
int int_rank(std::vector<std::vector<Coord>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[row]);
    for (std::size_t r = row + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Coord g = gcd_c(rows[r][col], rows[row][col]);
      Coord fr = rows[row][col] / g, fp = rows[r][col] / g;
      for (std::size_t c = 0; c < cols; ++c) rows[r][c] = rows[r][c] * fr - rows[row][c] * fp;
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Canonical primitive normal with nonnegative entries, or empty if the
// candidate has mixed signs or is zero.
std::vector<Coord> canonical_normal(std::vector<Coord> v) {
  bool pos = false, neg = false;
  for (Coord c : v) {
    if (c > 0) pos = true;
    if (c < 0) neg = true;
  }
  if (pos && neg) return {};
  if (!pos && !neg) return {};
  if (neg)
    for (Coord& c : v) c = -c;
  Coord g = 0;
  for (Coord c : v) g = gcd_c(g, c);
  for (Coord& c : v) c /= g;
  return v;
}

std::vector<Coord> unit(int n, int i) {
  std::vector<Coord> e(n, 0);
  e[i] = 1;
  return e;
}

LatticePoint sub(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint d(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) d[t] = a[t] - b[t];
  return d;
}

}  // namespace

SupportedPoly::SupportedPoly(int ambient_dim, std::map<LatticePoint, Rational> support,
                             std::vector<std::string> names)
    : n(ambient_dim), var_names(std::move(names)), terms(std::move(support)) {
  if (n != 2 && n != 3) throw Error("ambient dimension must be 2 or 3");
  if (var_names.empty())
    var_names = n == 2 ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x", "y", "z"};
  if (static_cast<int>(var_names.size()) != n) throw Error("variable name count mismatch");
  for (auto it = terms.begin(); it != terms.end();) {
    if (static_cast<int>(it->first.size()) != n) throw Error("exponent vector length mismatch");
    for (Coord c : it->first)
      if (c < 0) throw Error("negative exponent in support");
    if (it->second.is_zero())
      it = terms.erase(it);
    else
      ++it;
  }
  if (terms.empty()) throw EmptySupportError();
  LatticePoint origin(n, 0);
  if (terms.count(origin)) throw OriginInSupportError();
}

std::string SupportedPoly::to_string() const {
  // Graded-lex descending over the declared variable order.
  std::vector<const std::pair<const LatticePoint, Rational>*> order;
  for (const auto& t : terms) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const auto* l, const auto* r) {
    Coord dl = std::accumulate(l->first.begin(), l->first.end(), Coord(0));
    Coord dr = std::accumulate(r->first.begin(), r->first.end(), Coord(0));
    if (dl != dr) return dl > dr;
    return l->first > r->first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const Rational& c = t->second;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? "-" : "+");
    }
    bool print_coeff = mag != Rational(1);
    if (print_coeff) os << mag.to_string();
    bool need_star = print_coeff;
    for (int v = 0; v < n; ++v) {
      if (t->first[v] == 0) continue;
      if (need_star) os << "*";
      os << var_names[v];
      if (t->first[v] > 1) os << "^" << t->first[v];
      need_star = true;
    }
    if (!need_star) os << "1";  // cannot happen: origin excluded
  }
  return os.str();
}

bool NewtonPolytope::point_on_facet(const LatticePoint& p, int facet_id) const {
  const FacetData& f = facet(facet_id);
  return dot(f.normal, p) == f.N;
}

NewtonPolytope build_polytope(const SupportedPoly& f) {
  const int n = f.n;
  std::vector<LatticePoint> pts;
  for (const auto& [p, c] : f.terms) pts.push_back(p);

  // Candidate primitive normals: coordinate directions, plus for every pair
  // of support points the normals orthogonal to their difference (paired
  // with each coordinate recession direction in n=3), plus for n=3 the
  // normals of every support triple.
  std::set<std::vector<Coord>> cand;
  for (int t = 0; t < n; ++t) cand.insert(unit(n, t));
  if (n == 2) {
    for (std::size_t p = 0; p < pts.size(); ++p)
      for (std::size_t q = p + 1; q < pts.size(); ++q) {
        LatticePoint d = sub(pts[q], pts[p]);
        auto v = canonical_normal({-d[1], d[0]});
        if (!v.empty()) cand.insert(v);
      }
  } else {
    for (std::size_t p = 0; p < pts.size(); ++p)
      for (std::size_t q = p + 1; q < pts.size(); ++q) {
        std::vector<Coord> d = sub(pts[q], pts[p]);
        for (int t = 0; t < 3; ++t) {
          auto v = canonical_normal(cross(d, unit(3, t)));
          if (!v.empty()) cand.insert(v);
        }
        for (std::size_t r = q + 1; r < pts.size(); ++r) {
          auto v = canonical_normal(cross(d, sub(pts[r], pts[p])));
          if (!v.empty()) cand.insert(v);
        }
      }
  }

  NewtonPolytope np{n, f, {}, {}};
  for (const auto& normal : cand) {
    Coord best = dot(normal, pts[0]);
    for (const auto& p : pts) best = std::min(best, dot(normal, p));
    std::vector<LatticePoint> active;
    for (const auto& p : pts)
      if (dot(normal, p) == best) active.push_back(p);
    std::vector<std::vector<Coord>> rows;
    for (std::size_t t = 1; t < active.size(); ++t) rows.push_back(sub(active[t], active[0]));
    for (int t = 0; t < n; ++t)
      if (normal[t] == 0) rows.push_back(unit(n, t));
    if (int_rank(rows) != n - 1) continue;
    FacetData fd;
    fd.normal = normal;
    fd.N = best;
    fd.nu = std::accumulate(normal.begin(), normal.end(), Coord(0));
    fd.compact = std::all_of(normal.begin(), normal.end(), [](Coord c) { return c > 0; });
    np.facets.push_back(std::move(fd));
  }
  std::sort(np.facets.begin(), np.facets.end(),
            [](const FacetData& a, const FacetData& b) { return a.normal < b.normal; });

  // Vertices: support points whose active facet normals span the space.
  auto active_facets = [&](const LatticePoint& p) {
    std::vector<int> ids;
    for (std::size_t t = 0; t < np.facets.size(); ++t)
      if (dot(np.facets[t].normal, p) == np.facets[t].N) ids.push_back(static_cast<int>(t));
    return ids;
  };
  std::vector<LatticePoint> vertices;
  for (const auto& p : pts) {
    std::vector<std::vector<Coord>> rows;
    for (int id : active_facets(p)) rows.push_back(np.facets[id].normal);
    if (int_rank(rows) == n) vertices.push_back(p);
  }
  std::sort(vertices.begin(), vertices.end());

  auto is_vertex = [&](const LatticePoint& p) {
    return std::binary_search(vertices.begin(), vertices.end(), p);
  };
  auto containing = [&](const std::vector<LatticePoint>& face_pts) {
    std::vector<int> ids;
    for (std::size_t t = 0; t < np.facets.size(); ++t) {
      bool all = true;
      for (const auto& p : face_pts)
        if (dot(np.facets[t].normal, p) != np.facets[t].N) {
          all = false;
          break;
        }
      if (all) ids.push_back(static_cast<int>(t));
    }
    return ids;
  };

  std::vector<CompactFace> faces;
  for (const auto& v : vertices) {
    CompactFace cf;
    cf.dim = 0;
    cf.vertices = {v};
    cf.facets = containing({v});
    int needed = n == 2 ? 2 : 3;
    if (static_cast<int>(cf.facets.size()) < needed)
      throw Error("malformed hull: vertex with too few containing facets");
    faces.push_back(std::move(cf));
  }

  if (n == 3) {
    // Compact edges: bounded 1-dimensional intersections of facet pairs.
    std::set<std::pair<LatticePoint, LatticePoint>> seen;
    for (std::size_t a = 0; a < np.facets.size(); ++a) {
      for (std::size_t b = a + 1; b < np.facets.size(); ++b) {
        const auto& la = np.facets[a].normal;
        const auto& lb = np.facets[b].normal;
        bool common_zero = false;
        for (int t = 0; t < 3; ++t)
          if (la[t] == 0 && lb[t] == 0) common_zero = true;
        if (common_zero) continue;  // unbounded direction: not compact
        if (int_rank({la, lb}) != 2) continue;
        std::vector<LatticePoint> both;
        for (const auto& p : pts)
          if (dot(la, p) == np.facets[a].N && dot(lb, p) == np.facets[b].N) both.push_back(p);
        if (both.size() < 2) continue;
        std::sort(both.begin(), both.end());
        LatticePoint lo = both.front(), hi = both.back();
        if (lo == hi) continue;
        if (!seen.insert({lo, hi}).second) continue;
        CompactFace cf;
        cf.dim = 1;
        cf.vertices = {lo, hi};
        cf.facets = containing({lo, hi});
        if (cf.facets.size() != 2)
          throw Error("malformed hull: edge not contained in exactly two facets");
        faces.push_back(std::move(cf));
      }
    }
    // Compact facets (2-faces), with boundary vertices in cyclic order.
    for (std::size_t id = 0; id < np.facets.size(); ++id) {
      if (!np.facets[id].compact) continue;
      std::vector<LatticePoint> polys;
      for (const auto& p : pts)
        if (dot(np.facets[id].normal, p) == np.facets[id].N && is_vertex(p)) polys.push_back(p);
      if (polys.size() < 3) throw Error("malformed hull: compact facet with < 3 vertices");
      // Project out a coordinate with nonzero normal entry and sort by angle
      // around the (scaled) centroid.
      int drop = 0;
      for (int t = 0; t < 3; ++t)
        if (np.facets[id].normal[t] != 0) drop = t;
      int u = (drop + 1) % 3, w = (drop + 2) % 3;
      Coord cx = 0, cy = 0;
      for (const auto& p : polys) {
        cx += p[u];
        cy += p[w];
      }
      const Coord k = static_cast<Coord>(polys.size());
      auto half = [](Coord x, Coord y) { return (y < 0 || (y == 0 && x < 0)) ? 1 : 0; };
      std::sort(polys.begin(), polys.end(), [&](const LatticePoint& p, const LatticePoint& q) {
        Coord px = k * p[u] - cx, py = k * p[w] - cy;
        Coord qx = k * q[u] - cx, qy = k * q[w] - cy;
        int hp = half(px, py), hq = half(qx, qy);
        if (hp != hq) return hp < hq;
        Coord crossz = px * qy - py * qx;
        if (crossz != 0) return crossz > 0;
        return p < q;  // collinear with centroid: cannot happen for distinct hull vertices
      });
      CompactFace cf;
      cf.dim = 2;
      cf.vertices = polys;
      cf.facets = containing(polys);
      cf.own_facet = static_cast<int>(id);
      faces.push_back(std::move(cf));
    }
  } else {
    // n = 2: compact facets are the edges with strictly positive normal.
    for (std::size_t id = 0; id < np.facets.size(); ++id) {
      if (!np.facets[id].compact) continue;
      std::vector<LatticePoint> active;
      for (const auto& p : pts)
        if (dot(np.facets[id].normal, p) == np.facets[id].N) active.push_back(p);
      std::sort(active.begin(), active.end());
      if (active.size() < 2 || active.front() == active.back()) continue;
      CompactFace cf;
      cf.dim = 1;
      cf.vertices = {active.front(), active.back()};
      cf.facets = containing(cf.vertices);
      cf.own_facet = static_cast<int>(id);
      faces.push_back(std::move(cf));
    }
  }

  // For n=3, a compact facet is its own containing facet; mark own_facet for
  // dim n-1 faces found above. Vertices in n=2 must lie on exactly two facets.
  if (n == 2) {
    for (const auto& cf : faces)
      if (cf.dim == 0 && cf.facets.size() != 2)
        throw Error("malformed hull: planar vertex not on exactly two facets");
  }

  std::sort(faces.begin(), faces.end(), [](const CompactFace& a, const CompactFace& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  np.compact_faces = std::move(faces);
  return np;
}

long long NewtonPolytope::normalized_volume(const CompactFace& face) const {
  if (face.dim == 0) return 1;
  if (face.dim == 1) {
    LatticePoint d = sub(face.vertices[1], face.vertices[0]);
    Coord g = 0;
    for (Coord c : d) g = gcd_c(g, c);
    return g;
  }
  if (face.dim != 2 || n != 3) throw Error("normalized_volume: unsupported face dimension");
  const FacetData& own = facet(face.own_facet);
  // Fan triangulation from the lexicographically smallest vertex, following
  // the stored cyclic boundary order.
  const auto& vs = face.vertices;
  const std::size_t k = vs.size();
  std::size_t apex = 0;
  for (std::size_t t = 1; t < k; ++t)
    if (vs[t] < vs[apex]) apex = t;
  long long total = 0;
  for (std::size_t t = 1; t + 1 < k; ++t) {
    const LatticePoint& a = vs[apex];
    const LatticePoint& b = vs[(apex + t) % k];
    const LatticePoint& c = vs[(apex + t + 1) % k];
    long long det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                    a[2] * (b[0] * c[1] - b[1] * c[0]);
    total += det < 0 ? -det : det;
  }
  if (own.N == 0 || total % own.N != 0) throw Error("normalized_volume: non-integral result");
  return total / own.N;
}

std::vector<int> NewtonPolytope::order_facets_around_vertex(const CompactFace& vertex) const {
  if (vertex.dim != 0) throw NotAVertexError();
  if (n != 3) throw Error("order_facets_around_vertex requires ambient dimension 3");
  const LatticePoint& v = vertex.vertices[0];
  const std::vector<int>& ids = vertex.facets;
  const std::size_t r = ids.size();
  if (r < 3) throw NotAVertexError();

  std::vector<LatticePoint> pts;
  for (const auto& [p, c] : poly.terms) pts.push_back(p);

  // Two facets are adjacent around v when their intersection with the
  // polytope is a 1-dimensional face through v.
  auto adjacent = [&](int fa, int fb) {
    const FacetData& A = facets[fa];
    const FacetData& B = facets[fb];
    std::vector<std::vector<Coord>> rows;
    for (const auto& p : pts)
      if (dot(A.normal, p) == A.N && dot(B.normal, p) == B.N && p != v) rows.push_back(sub(p, v));
    for (int t = 0; t < 3; ++t)
      if (A.normal[t] == 0 && B.normal[t] == 0) rows.push_back(unit(3, t));
    if (rows.empty()) return false;
    return int_rank(rows) == 1;
  };

  std::vector<std::vector<int>> nbr(r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b)
      if (adjacent(ids[a], ids[b])) {
        nbr[a].push_back(static_cast<int>(b));
        nbr[b].push_back(static_cast<int>(a));
      }
  for (std::size_t t = 0; t < r; ++t)
    if (nbr[t].size() != 2) throw BrokenFanError("facet adjacency around vertex is not a cycle");

  std::size_t start = 0;
  for (std::size_t t = 1; t < r; ++t)
    if (facets[ids[t]].normal < facets[ids[start]].normal) start = t;
  int n0 = nbr[start][0], n1 = nbr[start][1];
  int second = facets[ids[n0]].normal < facets[ids[n1]].normal ? n0 : n1;

  std::vector<int> cycle{static_cast<int>(start), second};
  std::vector<char> used(r, 0);
  used[start] = used[second] = 1;
  while (cycle.size() < r) {
    int cur = cycle.back();
    int nxt = -1;
    for (int cand : nbr[cur])
      if (!used[cand]) nxt = cand;
    if (nxt < 0) throw BrokenFanError("facet adjacency around vertex is not a single cycle");
    used[nxt] = 1;
    cycle.push_back(nxt);
  }
  // Closing edge of the cycle must exist.
  if (std::find(nbr[cycle.back()].begin(), nbr[cycle.back()].end(), cycle.front()) ==
      nbr[cycle.back()].end())
    throw BrokenFanError("facet adjacency around vertex does not close up");

  std::vector<int> out;
  for (int t : cycle) out.push_back(ids[t]);
  return out;
}

Coord mult2(const std::vector<Coord>& l1, const std::vector<Coord>& l2) {
  if (l1.size() == 2) {
    Coord det = l1[0] * l2[1] - l1[1] * l2[0];
    if (det == 0) throw DependentNormalsError();
    return det < 0 ? -det : det;
  }
  Coord m01 = l1[0] * l2[1] - l1[1] * l2[0];
  Coord m02 = l1[0] * l2[2] - l1[2] * l2[0];
  Coord m12 = l1[1] * l2[2] - l1[2] * l2[1];
  Coord g = gcd_c(gcd_c(m01, m02), m12);
  if (g == 0) throw DependentNormalsError();
  return g;
}

Coord mult3(const std::vector<Coord>& l1, const std::vector<Coord>& l2,
            const std::vector<Coord>& l3) {
  Coord det = l1[0] * (l2[1] * l3[2] - l2[2] * l3[1]) - l1[1] * (l2[0] * l3[2] - l2[2] * l3[0]) +
              l1[2] * (l2[0] * l3[1] - l2[1] * l3[0]);
  return det < 0 ? -det : det;
}

}  // namespace topzeta
