#pragma once

#include "mosaic/rational.hpp"
#include "mosaic/vec.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mosaic {

struct NotAVertex : MosaicError {
  using MosaicError::MosaicError;
};

// ---------------------------------------------------------------------------
// kernels: exact fields compare strictly, the double kernel uses a relative
// tolerance for hull predicates

template <class T>
struct ExactKernel {
  using Scalar = T;
  static int orient_sign(const Vec3<T>& a, const Vec3<T>& b, const Vec3<T>& c,
                         const Vec3<T>& d) {
    return sign(orient3(a, b, c, d));
  }
  static int cross_sign2(const Vec3<T>& o, const Vec3<T>& a, const Vec3<T>& b) {
    return sign(cross2(a - o, b - o));
  }
  static bool collinear(const Vec3<T>& a, const Vec3<T>& b, const Vec3<T>& c) {
    return cross(b - a, c - a) == Vec3<T>(T(0), T(0), T(0));
  }
};

struct DoubleKernel {
  using Scalar = double;
  static constexpr double eps = 1e-9;
  static int orient_sign(const Vec3<double>& a, const Vec3<double>& b,
                         const Vec3<double>& c, const Vec3<double>& d) {
    Vec3<double> u = b - a, v = c - a, w = d - a;
    double det = dot(cross(u, v), w);
    double scale = norm(u) * norm(v) * norm(w);
    if (std::abs(det) <= eps * std::max(scale, 1e-300)) return 0;
    return det > 0 ? 1 : -1;
  }
  static int cross_sign2(const Vec3<double>& o, const Vec3<double>& a,
                         const Vec3<double>& b) {
    double c = cross2(a - o, b - o);
    double scale = norm(a - o) * norm(b - o);
    if (std::abs(c) <= eps * std::max(scale, 1e-300)) return 0;
    return c > 0 ? 1 : -1;
  }
  static bool collinear(const Vec3<double>& a, const Vec3<double>& b,
                        const Vec3<double>& c) {
    Vec3<double> x = cross(b - a, c - a);
    return norm(x) <= eps * std::max(norm(b - a) * norm(c - a), 1e-300);
  }
};

// ---------------------------------------------------------------------------
// convex polytope with explicit face lattice

/// Convex polytope in dimension 2 or 3 (2D data lives in the z = 0 plane).
/// Facets are vertex-index cycles; in 3D each cycle is counterclockwise as
/// seen from outside, in 2D the facets are the edges of the CCW boundary ring
/// listed in cycle order.
template <class T>
struct Polytope {
  int dim = 3;
  std::vector<Vec3<T>> verts;
  std::vector<std::vector<int>> facets;

  /// CCW boundary ring (2D only).
  std::vector<int> ring() const {
    std::vector<int> r;
    r.reserve(facets.size());
    for (const auto& e : facets) r.push_back(e[0]);
    return r;
  }

  std::vector<std::array<int, 2>> edges() const {
    std::set<std::array<int, 2>> es;
    for (const auto& f : facets) {
      for (size_t k = 0; k < f.size(); ++k) {
        int a = f[k], b = f[(k + 1) % f.size()];
        if (dim == 2 && f.size() == 2 && k == 1) break;
        es.insert({std::min(a, b), std::max(a, b)});
      }
    }
    return {es.begin(), es.end()};
  }

  Vec3<T> vertex_mean() const {
    Vec3<T> s(T(0), T(0), T(0));
    for (const auto& v : verts) s += v;
    T inv = T(1) / T(int(verts.size()));
    return s * inv;
  }

  /// Outward plane of facet i: dot(n, x) <= c inside.
  std::pair<Vec3<T>, T> facet_plane(int i) const {
    const auto& f = facets[i];
    Vec3<T> n(T(0), T(0), T(0));
    if (dim == 2) {
      // outward normal of edge (a, b) on a CCW ring is (dy, -dx)
      Vec3<T> d = verts[f[1]] - verts[f[0]];
      n = Vec3<T>(d.y, -d.x, T(0));
      return {n, dot(n, verts[f[0]])};
    }
    for (size_t k = 0; k < f.size(); ++k) {
      const Vec3<T>& a = verts[f[k]];
      const Vec3<T>& b = verts[f[(k + 1) % f.size()]];
      n += cross(a, b);
    }
    return {n, dot(n, verts[f[0]])};
  }

  bool contains(const Vec3<T>& p, bool strict = false) const {
    for (size_t i = 0; i < facets.size(); ++i) {
      auto [n, c] = facet_plane(int(i));
      T s = dot(n, p) - c;
      if (sign(s) > 0) return false;
      if (strict && sign(s) == 0) return false;
    }
    return true;
  }

  bool is_vertex(const Vec3<T>& p) const {
    for (const auto& v : verts)
      if (v == p) return true;
    return false;
  }

  /// Volume in 3D, area in 2D; exact for exact scalars.
  T volume() const {
    if (dim == 2) {
      T a(0);
      for (const auto& e : facets) a += cross2(verts[e[0]], verts[e[1]]);
      return a / T(2);
    }
    T v(0);
    for (const auto& f : facets)
      for (size_t k = 1; k + 1 < f.size(); ++k)
        v += dot(cross(verts[f[0]], verts[f[k]]), verts[f[k + 1]]);
    return v / T(6);
  }

  Vec3<T> aabb_min() const {
    Vec3<T> m = verts[0];
    for (const auto& v : verts) {
      if (v.x < m.x) m.x = v.x;
      if (v.y < m.y) m.y = v.y;
      if (v.z < m.z) m.z = v.z;
    }
    return m;
  }
  Vec3<T> aabb_max() const {
    Vec3<T> m = verts[0];
    for (const auto& v : verts) {
      if (v.x > m.x) m.x = v.x;
      if (v.y > m.y) m.y = v.y;
      if (v.z > m.z) m.z = v.z;
    }
    return m;
  }

  /// Euler relation v - e + f = 2 (3D) or v = e (2D ring).
  bool euler_ok() const {
    if (dim == 2) return verts.size() == facets.size() && verts.size() >= 3;
    long v = long(verts.size()), e = long(edges().size()), f = long(facets.size());
    return v - e + f == 2;
  }

  /// Edge endpoints adjacent to vertex v, in cyclic order around v, together
  /// with the facet indices visited by the walk. Requires consistently
  /// oriented facets (3D).
  void vertex_star(int v, std::vector<int>& edge_ends, std::vector<int>& star_facets) const {
    edge_ends.clear();
    star_facets.clear();
    // facet -> successor of v in its cycle; map predecessor -> facet
    std::map<int, std::pair<int, int>> by_pred;  // pred vertex -> (facet, succ)
    for (size_t fi = 0; fi < facets.size(); ++fi) {
      const auto& f = facets[fi];
      for (size_t k = 0; k < f.size(); ++k) {
        if (f[k] == v) {
          int succ = f[(k + 1) % f.size()];
          int pred = f[(k + f.size() - 1) % f.size()];
          by_pred[pred] = {int(fi), succ};
        }
      }
    }
    if (by_pred.empty()) throw NotAVertex("vertex_star: index not on any facet");
    int w = by_pred.begin()->first;
    const int start = w;
    do {
      auto it = by_pred.find(w);
      if (it == by_pred.end()) throw MosaicError("vertex_star: open facet fan");
      edge_ends.push_back(w);
      star_facets.push_back(it->second.first);
      w = it->second.second;
    } while (w != start && edge_ends.size() <= by_pred.size());
    if (w != start) throw MosaicError("vertex_star: facet fan does not close");
  }
};

// ---------------------------------------------------------------------------
// convex hull, 2D (monotone chain)

template <class K>
Polytope<typename K::Scalar> convex_hull_2d(std::vector<Vec3<typename K::Scalar>> pts) {
  using T = typename K::Scalar;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw DegenerateInput("2D hull needs 3 affinely independent points");
  auto build = [&](bool upper) {
    std::vector<Vec3<T>> chain;
    for (size_t i = 0; i < pts.size(); ++i) {
      const Vec3<T>& p = pts[upper ? pts.size() - 1 - i : i];
      while (chain.size() >= 2 &&
             K::cross_sign2(chain[chain.size() - 2], chain[chain.size() - 1], p) <= 0)
        chain.pop_back();
      chain.push_back(p);
    }
    return chain;
  };
  std::vector<Vec3<T>> lo = build(false), hi = build(true);
  lo.pop_back();
  hi.pop_back();
  lo.insert(lo.end(), hi.begin(), hi.end());
  if (lo.size() < 3) throw DegenerateInput("2D hull degenerate (collinear input)");
  Polytope<T> P;
  P.dim = 2;
  P.verts = lo;
  for (size_t i = 0; i < lo.size(); ++i)
    P.facets.push_back({int(i), int((i + 1) % lo.size())});
  return P;
}

// ---------------------------------------------------------------------------
// convex hull, 3D: incremental triangulated hull + coplanar facet merge

namespace detail {

struct HullTri {
  std::array<int, 3> v;
  std::array<int, 3> nbr;  // neighbor across edge (v[k], v[k+1])
  bool alive = true;
};

template <class K>
std::vector<HullTri> incremental_hull_tris(const std::vector<Vec3<typename K::Scalar>>& pts) {
  const int n = int(pts.size());
  // initial affine basis
  int i1 = -1, i2 = -1, i3 = -1;
  for (int i = 1; i < n && i1 < 0; ++i)
    if (!(pts[i] == pts[0])) i1 = i;
  if (i1 < 0) throw DegenerateInput("hull: all points equal");
  for (int i = i1 + 1; i < n && i2 < 0; ++i)
    if (!K::collinear(pts[0], pts[i1], pts[i])) i2 = i;
  if (i2 < 0) throw DegenerateInput("hull: all points collinear");
  for (int i = 1; i < n && i3 < 0; ++i)
    if (K::orient_sign(pts[0], pts[i1], pts[i2], pts[i]) != 0) i3 = i;
  if (i3 < 0) throw DegenerateInput("hull: all points coplanar");

  std::vector<HullTri> tris;
  auto add_initial = [&](int a, int b, int c, int na, int nb, int nc) {
    tris.push_back({{a, b, c}, {na, nb, nc}, true});
  };
  int a = 0, b = i1, c = i2, d = i3;
  if (K::orient_sign(pts[a], pts[b], pts[c], pts[d]) > 0) std::swap(b, c);
  // tetra with outward-oriented faces; neighbor k sits across edge (v[k], v[k+1])
  add_initial(a, b, c, 1, 2, 3);
  add_initial(a, d, b, 3, 2, 0);
  add_initial(b, d, c, 1, 3, 0);
  add_initial(a, c, d, 0, 2, 1);

  std::vector<char> visible;
  for (int p = 1; p < n; ++p) {
    if (p == i1 || p == i2 || p == i3) continue;
    visible.assign(tris.size(), 0);
    int nvis = 0;
    for (size_t t = 0; t < tris.size(); ++t) {
      if (!tris[t].alive) continue;
      if (K::orient_sign(pts[tris[t].v[0]], pts[tris[t].v[1]], pts[tris[t].v[2]], pts[p]) > 0) {
        visible[t] = 1;
        ++nvis;
      }
    }
    if (nvis == 0) continue;  // inside or on the boundary
    // horizon: directed edges of visible tris whose neighbor is hidden
    std::map<int, std::pair<int, int>> horizon;  // from -> (to, hidden tri)
    for (size_t t = 0; t < tris.size(); ++t) {
      if (!tris[t].alive || !visible[t]) continue;
      for (int k = 0; k < 3; ++k) {
        int nb = tris[t].nbr[k];
        if (!visible[nb]) {
          int e0 = tris[t].v[k], e1 = tris[t].v[(k + 1) % 3];
          horizon[e0] = {e1, nb};
        }
      }
    }
    for (size_t t = 0; t < tris.size(); ++t)
      if (visible[t]) tris[t].alive = false;
    if (horizon.empty()) throw DegenerateInput("hull: empty horizon");
    // walk the horizon cycle, fanning new triangles from p
    std::vector<std::array<int, 3>> ring;  // (e0, e1, hidden)
    int start = horizon.begin()->first, cur = start;
    do {
      auto it = horizon.find(cur);
      if (it == horizon.end()) throw DegenerateInput("hull: broken horizon");
      ring.push_back({cur, it->second.first, it->second.second});
      cur = it->second.first;
    } while (cur != start && ring.size() <= horizon.size());
    if (cur != start || ring.size() != horizon.size())
      throw DegenerateInput("hull: horizon is not a single cycle");

    int base = int(tris.size());
    int m = int(ring.size());
    for (int k = 0; k < m; ++k) {
      auto [e0, e1, hid] = ring[k];
      if (K::collinear(pts[e0], pts[e1], pts[p]))
        throw DegenerateInput("hull: degenerate horizon triangle");
      HullTri nt;
      nt.v = {e0, e1, p};
      nt.nbr = {hid, base + (k + 1) % m, base + (k + m - 1) % m};
      tris.push_back(nt);
      // fix hidden tri's neighbor pointer for edge (e1, e0)
      HullTri& h = tris[hid];
      for (int j = 0; j < 3; ++j)
        if (h.v[j] == e1 && h.v[(j + 1) % 3] == e0) h.nbr[j] = base + k;
    }
    visible.resize(tris.size(), 0);
  }
  std::vector<HullTri> out;
  std::vector<int> remap(tris.size(), -1);
  for (size_t t = 0; t < tris.size(); ++t)
    if (tris[t].alive) {
      remap[t] = int(out.size());
      out.push_back(tris[t]);
    }
  for (auto& t : out)
    for (int k = 0; k < 3; ++k) t.nbr[k] = remap[t.nbr[k]];
  return out;
}

}  // namespace detail

/// Full-lattice 3D convex hull. Coplanar adjacent triangles are merged into
/// polygonal facets and non-extreme points are dropped.
template <class K>
Polytope<typename K::Scalar> convex_hull_3d(const std::vector<Vec3<typename K::Scalar>>& pts_in) {
  using T = typename K::Scalar;
  std::vector<Vec3<T>> pts = pts_in;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 4) throw DegenerateInput("3D hull needs 4 affinely independent points");
  auto tris = detail::incremental_hull_tris<K>(pts);

  // group triangles into maximal coplanar regions (BFS over coplanar neighbors)
  int nt = int(tris.size());
  std::vector<int> region(nt, -1);
  int nregions = 0;
  for (int seed = 0; seed < nt; ++seed) {
    if (region[seed] >= 0) continue;
    int r = nregions++;
    std::vector<int> stack{seed};
    region[seed] = r;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int k = 0; k < 3; ++k) {
        int nb = tris[t].nbr[k];
        if (region[nb] >= 0) continue;
        const auto& tv = tris[t].v;
        int opp = -1;
        for (int j = 0; j < 3; ++j) {
          int w = tris[nb].v[j];
          if (w != tv[0] && w != tv[1] && w != tv[2]) opp = w;
        }
        if (opp >= 0 &&
            K::orient_sign(pts[tv[0]], pts[tv[1]], pts[tv[2]], pts[opp]) == 0) {
          region[nb] = r;
          stack.push_back(nb);
        }
      }
    }
  }

  // boundary cycle of each region -> facet polygon
  std::vector<std::vector<int>> facets(nregions);
  std::vector<std::map<int, int>> bnd(nregions);  // directed boundary edges
  for (int t = 0; t < nt; ++t)
    for (int k = 0; k < 3; ++k)
      if (region[tris[t].nbr[k]] != region[t])
        bnd[region[t]][tris[t].v[k]] = tris[t].v[(k + 1) % 3];
  for (int r = 0; r < nregions; ++r) {
    if (bnd[r].empty()) throw DegenerateInput("hull: facet region without boundary");
    std::vector<int> cyc;
    int start = bnd[r].begin()->first, cur = start;
    do {
      cyc.push_back(cur);
      auto it = bnd[r].find(cur);
      if (it == bnd[r].end()) throw DegenerateInput("hull: broken facet boundary");
      cur = it->second;
    } while (cur != start && cyc.size() <= bnd[r].size());
    if (cur != start || cyc.size() != bnd[r].size())
      throw DegenerateInput("hull: facet boundary is not a single cycle");
    // drop collinear chain points (non-extreme in the facet plane)
    std::vector<int> poly;
    int m = int(cyc.size());
    for (int k = 0; k < m; ++k) {
      int prev = cyc[(k + m - 1) % m], mid = cyc[k], next = cyc[(k + 1) % m];
      if (!K::collinear(pts[prev], pts[mid], pts[next])) poly.push_back(mid);
    }
    if (poly.size() < 3) throw DegenerateInput("hull: facet degenerated to a segment");
    facets[r] = poly;
  }

  // keep only corner points
  std::vector<int> newid(pts.size(), -1);
  Polytope<T> P;
  P.dim = 3;
  for (auto& f : facets)
    for (int& v : f) {
      if (newid[v] < 0) {
        newid[v] = int(P.verts.size());
        P.verts.push_back(pts[v]);
      }
      v = newid[v];
    }
  P.facets = std::move(facets);
  return P;
}

/// Dimension-dispatching hull per the library convention (z = 0 for 2D).
template <class K>
Polytope<typename K::Scalar> convex_hull(const std::vector<Vec3<typename K::Scalar>>& pts, int dim) {
  if (dim == 2) return convex_hull_2d<K>(pts);
  return convex_hull_3d<K>(pts);
}

inline Polytope<Rational> convex_hull(const std::vector<Vec3<Rational>>& pts, int dim) {
  return convex_hull<ExactKernel<Rational>>(pts, dim);
}

// ---------------------------------------------------------------------------
// solid angles

/// Area of the convex spherical polygon with the given cyclically ordered
/// unit vertices, by angle excess: sum of interior angles - (n-2)*pi.
inline double spherical_polygon_area(const std::vector<Vec3<double>>& dirs) {
  int n = int(dirs.size());
  if (n < 3) throw DegenerateInput("spherical polygon needs >= 3 vertices");
  double total = 0;
  for (int i = 0; i < n; ++i) {
    const Vec3<double>& u = dirs[(i + n - 1) % n];
    const Vec3<double>& v = dirs[i];
    const Vec3<double>& w = dirs[(i + 1) % n];
    auto tang = [&](const Vec3<double>& q) {
      Vec3<double> t = q - v * dot(q, v);
      return normalized(t);
    };
    double c = dot(tang(u), tang(w));
    c = std::clamp(c, -1.0, 1.0);
    total += std::acos(c);
  }
  return total - (n - 2) * kPi;
}

/// Internal angle of a cell at one of its vertices: the spherical measure of
/// the tangent cone (radians of arc in 2D, steradians in 3D).
template <class T>
double internal_solid_angle(const Polytope<T>& cell, int vertex_index) {
  if (vertex_index < 0 || vertex_index >= int(cell.verts.size()))
    throw NotAVertex("internal_solid_angle: bad vertex index");
  Vec3<double> p = vec_to_double(cell.verts[vertex_index]);
  if (cell.dim == 2) {
    auto r = cell.ring();
    auto it = std::find(r.begin(), r.end(), vertex_index);
    if (it == r.end()) throw NotAVertex("internal_solid_angle: not a ring vertex");
    size_t k = size_t(it - r.begin());
    Vec3<double> a = vec_to_double(cell.verts[r[(k + r.size() - 1) % r.size()]]) - p;
    Vec3<double> b = vec_to_double(cell.verts[r[(k + 1) % r.size()]]) - p;
    double c = std::clamp(dot(normalized(a), normalized(b)), -1.0, 1.0);
    return std::acos(c);
  }
  std::vector<int> ends, star;
  cell.vertex_star(vertex_index, ends, star);
  std::vector<Vec3<double>> dirs;
  dirs.reserve(ends.size());
  for (int w : ends) dirs.push_back(normalized(vec_to_double(cell.verts[w]) - p));
  return spherical_polygon_area(dirs);
}

/// External angle: spherical measure of the polar (outer normal) cone at the
/// vertex, equal to the area of the spherical hull of the incident facet
/// normals.
template <class T>
double external_solid_angle(const Polytope<T>& cell, int vertex_index) {
  if (vertex_index < 0 || vertex_index >= int(cell.verts.size()))
    throw NotAVertex("external_solid_angle: bad vertex index");
  if (cell.dim == 2) return kPi - internal_solid_angle(cell, vertex_index);
  std::vector<int> ends, star;
  cell.vertex_star(vertex_index, ends, star);
  std::vector<Vec3<double>> normals;
  normals.reserve(star.size());
  for (int fi : star) {
    auto [n, c] = cell.facet_plane(fi);
    (void)c;
    normals.push_back(normalized(vec_to_double(n)));
  }
  std::reverse(normals.begin(), normals.end());  // polar cone reverses order
  if (normals.size() == 2) throw MosaicError("external angle at an edge point");
  return spherical_polygon_area(normals);
}

// ---------------------------------------------------------------------------
// tetrahedral decomposition (apex construction, at most 2v - 7 pieces)

template <class T>
std::vector<std::array<int, 4>> tetrahedral_decomposition(const Polytope<T>& P) {
  if (P.dim != 3) throw MosaicError("tetrahedral_decomposition needs a 3D polytope");
  if (P.verts.size() < 4) throw DegenerateInput("polytope with fewer than 4 vertices");
  const int apex = 0;
  std::vector<std::array<int, 4>> tets;
  for (const auto& f : P.facets) {
    if (std::find(f.begin(), f.end(), apex) != f.end()) continue;
    for (size_t k = 1; k + 1 < f.size(); ++k)
      tets.push_back({apex, f[0], f[k], f[k + 1]});
  }
  return tets;
}

template <class T>
T tetra_volume(const Vec3<T>& a, const Vec3<T>& b, const Vec3<T>& c, const Vec3<T>& d) {
  T v = orient3(a, b, c, d) / T(6);
  return sign(v) < 0 ? -v : v;
}

// ---------------------------------------------------------------------------
// dense tableau simplex (maximize c.x, A x <= b, x >= 0), Bland's rule

template <class T>
struct LPSolution {
  enum Status { kOptimal, kUnbounded, kInfeasible } status;
  T value;
  std::vector<T> x;
};

template <class T>
LPSolution<T> simplex_maximize(const std::vector<std::vector<T>>& A,
                               const std::vector<T>& b, const std::vector<T>& c) {
  const int m = int(A.size()), n = int(c.size());
  // tableau with slack variables; artificial variables for rows with b < 0
  int nart = 0;
  for (int i = 0; i < m; ++i)
    if (sign(b[i]) < 0) ++nart;
  int cols = n + m + nart;
  std::vector<std::vector<T>> tab(m, std::vector<T>(cols + 1, T(0)));
  std::vector<int> basis(m);
  int art = n + m;
  for (int i = 0; i < m; ++i) {
    bool neg = sign(b[i]) < 0;
    for (int j = 0; j < n; ++j) tab[i][j] = neg ? -A[i][j] : A[i][j];
    tab[i][n + i] = neg ? T(-1) : T(1);
    tab[i][cols] = neg ? -b[i] : b[i];
    if (neg) {
      tab[i][art] = T(1);
      basis[i] = art++;
    } else {
      basis[i] = n + i;
    }
  }

  auto pivot = [&](int pr, int pc) {
    T inv = T(1) / tab[pr][pc];
    for (int j = 0; j <= cols; ++j) tab[pr][j] = tab[pr][j] * inv;
    for (int i = 0; i < m; ++i) {
      if (i == pr || sign(tab[i][pc]) == 0) continue;
      T f = tab[i][pc];
      for (int j = 0; j <= cols; ++j) tab[i][j] = tab[i][j] - f * tab[pr][j];
    }
    basis[pr] = pc;
  };

  auto run = [&](const std::vector<T>& obj, int usable_cols) -> bool {
    // objective row built from the basis; Bland's rule; returns false if unbounded
    for (;;) {
      std::vector<T> red(usable_cols, T(0));
      T shift(0);
      std::vector<T> lam(m);
      for (int i = 0; i < m; ++i) lam[i] = basis[i] < int(obj.size()) ? obj[basis[i]] : T(0);
      for (int j = 0; j < usable_cols; ++j) {
        T cj = j < int(obj.size()) ? obj[j] : T(0);
        T acc(0);
        for (int i = 0; i < m; ++i)
          if (sign(tab[i][j]) != 0) acc += lam[i] * tab[i][j];
        red[j] = cj - acc;
      }
      (void)shift;
      int pc = -1;
      for (int j = 0; j < usable_cols; ++j)
        if (sign(red[j]) > 0) {
          pc = j;
          break;
        }
      if (pc < 0) return true;
      int pr = -1;
      for (int i = 0; i < m; ++i) {
        if (sign(tab[i][pc]) <= 0) continue;
        if (pr < 0) {
          pr = i;
          continue;
        }
        T lhs = tab[i][cols] * tab[pr][pc];
        T rhs = tab[pr][cols] * tab[i][pc];
        int cmpv = sign(lhs - rhs);
        if (cmpv < 0 || (cmpv == 0 && basis[i] < basis[pr])) pr = i;
      }
      if (pr < 0) return false;
      pivot(pr, pc);
    }
  };

  LPSolution<T> sol;
  if (nart > 0) {
    std::vector<T> phase1(cols, T(0));
    for (int j = n + m; j < cols; ++j) phase1[j] = T(-1);
    run(phase1, cols);
    T p1(0);
    for (int i = 0; i < m; ++i)
      if (basis[i] >= n + m) p1 += tab[i][cols];
    if (sign(p1) != 0) {
      sol.status = LPSolution<T>::kInfeasible;
      sol.value = T(0);
      return sol;
    }
    // drive leftover artificial basics out if possible
    for (int i = 0; i < m; ++i) {
      if (basis[i] < n + m) continue;
      for (int j = 0; j < n + m; ++j)
        if (sign(tab[i][j]) != 0) {
          pivot(i, j);
          break;
        }
    }
  }
  std::vector<T> obj(n, T(0));
  for (int j = 0; j < n; ++j) obj[j] = c[j];
  bool ok = run(obj, n + m);
  if (!ok) {
    sol.status = LPSolution<T>::kUnbounded;
    sol.value = T(0);
    return sol;
  }
  sol.status = LPSolution<T>::kOptimal;
  sol.x.assign(n, T(0));
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) sol.x[basis[i]] = tab[i][cols];
  sol.value = T(0);
  for (int j = 0; j < n; ++j) sol.value += c[j] * sol.x[j];
  return sol;
}

// ---------------------------------------------------------------------------
// normality radii: Chebyshev-center inradius (LP) + minimum enclosing ball

/// Chebyshev inradius: largest r with a center x satisfying
/// n_i . x + r <= b_i over all unit facet normals.
template <class T>
double chebyshev_inradius(const Polytope<T>& P, Vec3<double>* center = nullptr) {
  int d = P.dim;
  Vec3<double> shift = vec_to_double(P.vertex_mean());
  std::vector<std::vector<double>> A;
  std::vector<double> b;
  for (size_t i = 0; i < P.facets.size(); ++i) {
    auto [n, c] = P.facet_plane(int(i));
    Vec3<double> nd = normalized(vec_to_double(n));
    double cd = (to_double(c) - dot(vec_to_double(n), shift)) / norm(vec_to_double(n));
    // variables: x1+, x1-, ..., xd+, xd-, r
    std::vector<double> row(2 * d + 1, 0.0);
    const double nc[3] = {nd.x, nd.y, nd.z};
    for (int k = 0; k < d; ++k) {
      row[2 * k] = nc[k];
      row[2 * k + 1] = -nc[k];
    }
    row[2 * d] = 1.0;
    A.push_back(row);
    b.push_back(cd);  // > 0: vertex mean is interior
  }
  std::vector<double> c(2 * d + 1, 0.0);
  c[2 * d] = 1.0;
  auto sol = simplex_maximize<double>(A, b, c);
  if (sol.status != LPSolution<double>::kOptimal)
    throw MosaicError("chebyshev_inradius: LP did not solve");
  if (center) {
    double xs[3] = {0, 0, 0};
    for (int k = 0; k < d; ++k) xs[k] = sol.x[2 * k] - sol.x[2 * k + 1];
    *center = Vec3<double>(xs[0], xs[1], xs[2]) + shift;
  }
  return sol.value;
}

namespace detail {

template <class T>
struct Ball {
  Vec3<T> c;
  T r2;
  bool valid = false;
  bool contains(const Vec3<T>& p) const {
    if (!valid) return false;
    Vec3<T> d = p - c;
    return sign(dot(d, d) - r2) <= 0;
  }
};

template <class T>
Ball<T> ball_from(const std::vector<Vec3<T>>& B) {
  Ball<T> out;
  if (B.empty()) return out;
  out.valid = true;
  if (B.size() == 1) {
    out.c = B[0];
    out.r2 = T(0);
    return out;
  }
  if (B.size() == 2) {
    out.c = (B[0] + B[1]) * (T(1) / T(2));
    Vec3<T> d = B[0] - out.c;
    out.r2 = dot(d, d);
    return out;
  }
  // circumcenter of 3 or 4 points: c = a + A^-1 rhs in the affine span
  const Vec3<T>& a = B[0];
  std::vector<Vec3<T>> u;
  for (size_t i = 1; i < B.size(); ++i) u.push_back(B[i] - a);
  int k = int(u.size());  // 2 or 3
  // solve sum_j x_j (u_i . u_j) = (u_i . u_i) / 2
  std::vector<std::vector<T>> M(k, std::vector<T>(k + 1, T(0)));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) M[i][j] = dot(u[i], u[j]);
    M[i][k] = dot(u[i], u[i]) / T(2);
  }
  // gaussian elimination with exact pivoting
  for (int col = 0; col < k; ++col) {
    int piv = -1;
    for (int r = col; r < k; ++r)
      if (sign(M[r][col]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) {
      out.valid = false;
      return out;
    }
    std::swap(M[col], M[piv]);
    for (int r = 0; r < k; ++r) {
      if (r == col || sign(M[r][col]) == 0) continue;
      T f = M[r][col] / M[col][col];
      for (int cc = col; cc <= k; ++cc) M[r][cc] = M[r][cc] - f * M[col][cc];
    }
  }
  Vec3<T> cvec(T(0), T(0), T(0));
  for (int i = 0; i < k; ++i) {
    T xi = M[i][k] / M[i][i];
    cvec += u[i] * xi;
  }
  out.c = a + cvec;
  Vec3<T> d = B[0] - out.c;
  out.r2 = dot(d, d);
  return out;
}

template <class T>
Ball<T> welzl(std::vector<Vec3<T>>& pts, size_t n, std::vector<Vec3<T>> B, int dim) {
  if (n == 0 || int(B.size()) == dim + 1) return ball_from(B);
  Vec3<T> p = pts[n - 1];
  Ball<T> D = welzl(pts, n - 1, B, dim);
  if (D.valid && D.contains(p)) return D;
  B.push_back(p);
  Ball<T> D2 = welzl(pts, n - 1, B, dim);
  if (!D2.valid) return D;  // degenerate support, keep previous
  return D2;
}

}  // namespace detail

/// Minimum enclosing ball radius (squared radius is exact for exact scalars).
template <class T>
T min_enclosing_ball_r2(const Polytope<T>& P, Vec3<T>* center = nullptr) {
  std::vector<Vec3<T>> pts = P.verts;
  // deterministic shuffle
  std::uint64_t s = 0x9e3779b97f4a7c15ull;
  for (size_t i = pts.size(); i > 1; --i) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    std::swap(pts[i - 1], pts[s % i]);
  }
  auto ball = detail::welzl(pts, pts.size(), {}, P.dim);
  if (!ball.valid) throw DegenerateInput("min_enclosing_ball: empty input");
  if (center) *center = ball.c;
  return ball.r2;
}

/// (inradius, circumradius) of a polytope; r <= R.
template <class T>
std::pair<double, double> normality_radii(const Polytope<T>& P) {
  double r = chebyshev_inradius(P);
  double R = std::sqrt(to_double(min_enclosing_ball_r2(P)));
  return {r, R};
}

}  // namespace mosaic
