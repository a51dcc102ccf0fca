#pragma once

#include "mosaic/periodic.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mosaic {

struct VertexFigureNotSimplex : MosaicError {
  using MosaicError::MosaicError;
};
struct EpsilonTooLarge : MosaicError {
  using MosaicError::MosaicError;
};
struct NotSimplicial : MosaicError {
  using MosaicError::MosaicError;
};
struct InvalidRatio : MosaicError {
  using MosaicError::MosaicError;
};
struct OutOfRange : MosaicError {
  using MosaicError::MosaicError;
};

enum class PlanarTiling {
  kTriangular,
  kSquare,
  kHexagonal,
  kTrihexagonal,
  kSnubSquare,
  kElongatedTriangular,
  kTruncatedSquare,
  kTruncatedHexagonal,
  kRhombitrihexagonal,
  kTruncatedTrihexagonal,
  kSnubHexagonal,
};

inline const std::vector<std::pair<PlanarTiling, const char*>>& planar_tiling_names() {
  static const std::vector<std::pair<PlanarTiling, const char*>> names = {
      {PlanarTiling::kTriangular, "triangular"},
      {PlanarTiling::kSquare, "square"},
      {PlanarTiling::kHexagonal, "hexagonal"},
      {PlanarTiling::kTrihexagonal, "trihexagonal"},
      {PlanarTiling::kSnubSquare, "snub_square"},
      {PlanarTiling::kElongatedTriangular, "elongated_triangular"},
      {PlanarTiling::kTruncatedSquare, "truncated_square"},
      {PlanarTiling::kTruncatedHexagonal, "truncated_hexagonal"},
      {PlanarTiling::kRhombitrihexagonal, "rhombitrihexagonal"},
      {PlanarTiling::kTruncatedTrihexagonal, "truncated_trihexagonal"},
      {PlanarTiling::kSnubHexagonal, "snub_hexagonal"},
  };
  return names;
}

inline PlanarTiling planar_tiling_from_string(const std::string& s) {
  for (auto [t, n] : planar_tiling_names())
    if (s == n) return t;
  throw UnknownName("unknown planar tiling: " + s);
}

// ---------------------------------------------------------------------------
// construction helpers

namespace detail {

/// Splits a fractional-coordinate point into base point in [0,1)^d + shift.
inline std::pair<Vec3<Rational>, std::array<int, 3>> split_frac(const Vec3<Rational>& f) {
  std::array<int, 3> shift{0, 0, 0};
  Vec3<Rational> base = f;
  Rational* comps[3] = {&base.x, &base.y, &base.z};
  for (int k = 0; k < 3; ++k) {
    Int fl = rational_floor(*comps[k]);
    shift[k] = fl.convert_to<int>();
    *comps[k] -= Rational(fl);
  }
  return {base, shift};
}

/// Vertex dedup by fractional position; returns the VertexRef of a point.
struct VertexInterner {
  PeriodicMosaic* M;
  std::map<Vec3<Rational>, int> index;
  VertexRef intern(const Vec3<Rational>& frac_point) {
    auto [base, shift] = split_frac(frac_point);
    auto [it, fresh] = index.try_emplace(base, int(M->verts.size()));
    if (fresh) M->verts.push_back(base);
    return {it->second, shift};
  }
};

struct Q3V {
  Q3 x, y;
  Q3V operator+(const Q3V& o) const { return {x + o.x, y + o.y}; }
  Q3V operator-(const Q3V& o) const { return {x - o.x, y - o.y}; }
  Q3V operator*(const Q3& s) const { return {x * s, y * s}; }
};

/// Builds a 2D periodic mosaic from one period's cells given in exact
/// Cartesian Q[sqrt3] coordinates: every vertex is rebased to rational
/// fractional coordinates in the (t1, t2) lattice basis (the stored lattice
/// is the identity; all reported quantities are affine invariants).
inline PeriodicMosaic planar_from_cells(const Q3V& t1, const Q3V& t2,
                                        const std::vector<std::vector<Q3V>>& polys,
                                        std::string name) {
  PeriodicMosaic M;
  M.dim = 2;
  M.lattice = {Vec3<Rational>(1, 0), Vec3<Rational>(0, 1), Vec3<Rational>(0, 0, 1)};
  M.name = std::move(name);
  VertexInterner intern{&M, {}};
  Q3 det = t1.x * t2.y - t1.y * t2.x;
  for (const auto& poly : polys) {
    PeriodicCell cell;
    for (const auto& p : poly) {
      Q3 f1 = (p.x * t2.y - p.y * t2.x) / det;
      Q3 f2 = (t1.x * p.y - t1.y * p.x) / det;
      if (!f1.is_rational() || !f2.is_rational())
        throw MosaicError("tiling vertex is not rational in the lattice basis");
      cell.verts.push_back(intern.intern(Vec3<Rational>(f1.a, f2.a)));
    }
    int m = int(cell.verts.size());
    for (int i = 0; i < m; ++i) cell.facets.push_back({i, (i + 1) % m});
    M.cells.push_back(std::move(cell));
  }
  normalize_representatives(M);
  return M;
}

inline Vec3<Rational> mat_solve3(const std::array<Vec3<Rational>, 3>& cols,
                                 const Vec3<Rational>& rhs) {
  Rational det = dot(cross(cols[0], cols[1]), cols[2]);
  if (sign(det) == 0) throw DegenerateInput("singular lattice");
  Rational x = dot(cross(rhs, cols[1]), cols[2]) / det;
  Rational y = dot(cross(cols[0], rhs), cols[2]) / det;
  Rational z = dot(cross(cols[0], cols[1]), rhs) / det;
  return {x, y, z};
}

/// Adds one cell given by Cartesian points; facets come from an exact hull.
inline void add_cell_from_points(PeriodicMosaic& M, VertexInterner& intern,
                                 const std::vector<Vec3<Rational>>& cartesian) {
  auto P = convex_hull(cartesian, M.dim);
  PeriodicCell cell;
  std::map<Vec3<Rational>, int> local;
  for (const auto& pt : P.verts) {
    Vec3<Rational> f = mat_solve3(M.lattice, pt);
    if (M.dim == 2) f.z = 0;
    local[pt] = int(cell.verts.size());
    cell.verts.push_back(intern.intern(f));
  }
  cell.facets = P.facets;
  M.cells.push_back(std::move(cell));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// planar tilings (exact coordinates; the sqrt(3) family lives in Q[sqrt3])

inline PeriodicMosaic build_planar(PlanarTiling t) {
  using detail::Q3V;
  const Q3 s = Q3::sqrt3();
  const Q3 half = Q3(rat(1, 2));
  auto v = [](Q3 x, Q3 y) { return Q3V{std::move(x), std::move(y)}; };

  switch (t) {
    case PlanarTiling::kSquare:
      return detail::planar_from_cells(
          v(1, 0), v(0, 1), {{v(0, 0), v(1, 0), v(1, 1), v(0, 1)}}, "square");

    case PlanarTiling::kTriangular: {
      Q3V a = v(1, 0), b = v(half, s * half);
      return detail::planar_from_cells(
          a, b, {{v(0, 0), a, b}, {a, a + b, b}}, "triangular");
    }

    case PlanarTiling::kHexagonal: {
      std::vector<Q3V> hex = {v(1, 0),  v(half, s * half),  v(-half, s * half),
                              v(-1, 0), v(-half, -s * half), v(half, -s * half)};
      return detail::planar_from_cells(v(Q3(rat(3, 2)), s * half),
                                       v(Q3(rat(3, 2)), -(s * half)), {hex}, "hexagonal");
    }

    case PlanarTiling::kTrihexagonal: {
      std::vector<Q3V> hex = {v(1, 0),  v(half, s * half),  v(-half, s * half),
                              v(-1, 0), v(-half, -s * half), v(half, -s * half)};
      std::vector<Q3V> up = {v(1, 0), v(Q3(rat(3, 2)), s * half), v(half, s * half)};
      std::vector<Q3V> dn = {v(1, 0), v(half, -(s * half)), v(Q3(rat(3, 2)), -(s * half))};
      return detail::planar_from_cells(v(2, 0), v(1, s), {hex, up, dn}, "trihexagonal");
    }

    case PlanarTiling::kElongatedTriangular: {
      // rational triangle height: the row offsets are irrational in the exact
      // lattice basis, so an affinely deformed (combinatorially identical)
      // realization is used
      std::vector<Q3V> sq = {v(0, 0), v(1, 0), v(1, 1), v(0, 1)};
      Q3 top = Q3(2);
      std::vector<Q3V> up = {v(0, 1), v(1, 1), v(half, top)};
      std::vector<Q3V> dn = {v(1, 1), v(Q3(rat(3, 2)), top), v(half, top)};
      return detail::planar_from_cells(v(1, 0), v(half, top), {sq, up, dn},
                                       "elongated_triangular");
    }

    case PlanarTiling::kSnubSquare: {
      // rational surrogate for sqrt3: the tile-fit identities are polynomial
      // in the triangle height, so any positive value gives the same
      // combinatorial tiling with rational data
      const Q3 q = Q3(rat(7, 4));
      Q3 a = Q3(1) + q * half;
      std::vector<Q3V> s0 = {v(0, 0), v(1, 0), v(1, 1), v(0, 1)};
      std::vector<Q3V> qa = {v(1, 1), v(a, half), v(half + a, half + q * half), v(Q3(rat(3, 2)), a)};
      std::vector<Q3V> tr = {v(1, 0), v(1, 1), v(a, half)};
      std::vector<Q3V> ta = {v(1, 1), v(Q3(rat(3, 2)), a), v(half, a)};
      std::vector<Q3V> tb = {v(1, 1), v(half, a), v(0, 1)};
      std::vector<Q3V> td = {v(1, 0), v(a, -half), v(a, half)};
      return detail::planar_from_cells(v(half, a), v(a, -half), {s0, qa, tr, ta, tb, td},
                                       "snub_square");
    }

    case PlanarTiling::kTruncatedSquare: {
      std::vector<Q3V> oct = {v(1, 0), v(2, 0), v(3, 1), v(3, 2),
                              v(2, 3), v(1, 3), v(0, 2), v(0, 1)};
      std::vector<Q3V> dia = {v(2, 0), v(3, 1), v(4, 0), v(3, -1)};
      return detail::planar_from_cells(v(3, 0), v(0, 3), {oct, dia}, "truncated_square");
    }

    case PlanarTiling::kTruncatedHexagonal: {
      // rational cut ratio; the equilateral value 2 - sqrt3 would make the
      // lattice-basis coordinates irrational, and any ratio in (0, 1/2) gives
      // the same combinatorics
      const Q3 u = Q3(rat(1, 4));
      std::vector<Q3V> hex = {v(1, 0),  v(half, s * half),  v(-half, s * half),
                              v(-1, 0), v(-half, -s * half), v(half, -s * half)};
      std::vector<Q3V> dodeca;
      for (size_t i = 0; i < 6; ++i) {
        Q3V A = hex[i], B = hex[(i + 1) % 6];
        dodeca.push_back(A + (B - A) * u);
        dodeca.push_back(B + (A - B) * u);
      }
      auto corner = [&](Q3V p, std::vector<Q3V> nbrs) {
        std::vector<Q3V> tri;
        for (const auto& q : nbrs) tri.push_back(p + (q - p) * u);
        return tri;
      };
      std::vector<Q3V> t1 = corner(v(1, 0), {v(half, s * half), v(2, 0), v(half, -(s * half))});
      std::vector<Q3V> t2 = corner(v(2, 0), {v(Q3(rat(5, 2)), s * half), v(1, 0),
                                             v(Q3(rat(5, 2)), -(s * half))});
      return detail::planar_from_cells(v(Q3(rat(3, 2)), s * half), v(Q3(rat(3, 2)), -(s * half)),
                                       {dodeca, t1, t2}, "truncated_hexagonal");
    }

    case PlanarTiling::kRhombitrihexagonal: {
      std::vector<Q3V> hex = {v(1, 0),  v(half, s * half),  v(-half, s * half),
                              v(-1, 0), v(-half, -s * half), v(half, -s * half)};
      // rational multiple of the radial edge midpoint in place of the unit
      // normal 2/sqrt3 * mid: the closure identities hold for any scale, and
      // a rational one keeps the lattice-basis coordinates rational
      const Q3 rho = Q3(rat(7, 6));
      auto square_on = [&](int i) {
        Q3V A = hex[i], B = hex[(i + 1) % 6];
        Q3V off = ((A + B) * Q3(rat(1, 2))) * rho;
        return std::vector<Q3V>{A, B, B + off, A + off};
      };
      auto tri_at = [&](int i) {
        // triangle wedged at hexagon vertex i between the squares on edges
        // (i-1, i) and (i, i+1)
        Q3V p = hex[i];
        Q3V prev = hex[(i + 5) % 6], next = hex[(i + 1) % 6];
        Q3V off1 = ((p + next) * Q3(rat(1, 2))) * rho;
        Q3V off2 = ((prev + p) * Q3(rat(1, 2))) * rho;
        return std::vector<Q3V>{p, p + off1, p + off2};
      };
      Q3 cx = Q3(rat(3, 2)) + rho * Q3(rat(3, 4));         // 3/2 + 3 rho / 4
      Q3 cy = (rho + 2) * (s * Q3(rat(1, 4)));             // (rho + 2) sqrt3 / 4
      return detail::planar_from_cells(v(cx, cy), v(cx, Q3(0) - cy),
                                       {hex, square_on(0), square_on(1), square_on(2),
                                        tri_at(0), tri_at(3)},
                                       "rhombitrihexagonal");
    }

    case PlanarTiling::kTruncatedTrihexagonal: {
      const Q3 u = Q3(rat(1, 4));
      auto cut_ring = [&](const std::vector<Q3V>& ring) {
        std::vector<Q3V> out;
        for (size_t i = 0; i < ring.size(); ++i) {
          Q3V A = ring[i], B = ring[(i + 1) % ring.size()];
          out.push_back(A + (B - A) * u);
          out.push_back(B + (A - B) * u);
        }
        return out;
      };
      std::vector<Q3V> hex = {v(1, 0),  v(half, s * half),  v(-half, s * half),
                              v(-1, 0), v(-half, -s * half), v(half, -s * half)};
      std::vector<Q3V> up = {v(1, 0), v(Q3(rat(3, 2)), s * half), v(half, s * half)};
      std::vector<Q3V> dn = {v(1, 0), v(half, -(s * half)), v(Q3(rat(3, 2)), -(s * half))};
      // node quads at the three kagome node orbits
      auto quad_at = [&](Q3V p, std::vector<Q3V> nbrs) {
        std::vector<Q3V> q;
        for (const auto& n : nbrs) q.push_back(p + (n - p) * u);
        return q;  // neighbors passed in cyclic order
      };
      std::vector<Q3V> q1 = quad_at(v(1, 0), {v(Q3(rat(3, 2)), s * half), v(half, s * half),
                                              v(half, -(s * half)), v(Q3(rat(3, 2)), -(s * half))});
      std::vector<Q3V> q2 = quad_at(v(half, s * half),
                                    {v(Q3(rat(3, 2)), s * half), v(0, s),
                                     v(Q3(rat(-1, 2)), s * half), v(1, 0)});
      std::vector<Q3V> q3 = quad_at(v(Q3(rat(3, 2)), s * half),
                                    {v(Q3(rat(5, 2)), s * half), v(2, s), v(half, s * half),
                                     v(1, 0)});
      return detail::planar_from_cells(v(2, 0), v(1, s),
                                       {cut_ring(hex), cut_ring(up), cut_ring(dn), q1, q2, q3},
                                       "truncated_trihexagonal");
    }

    case PlanarTiling::kSnubHexagonal: {
      // index-7 sublattice construction on the unit triangular lattice:
      // lattice points a e1 + b e2 with 3a + b = 0 (mod 7) become hexagon
      // centers; all triangles not touching a center survive
      auto eis = [&](int a, int b) {
        return v(Q3(a) + Q3(b) * half, Q3(b) * (s * half));
      };
      auto is_center = [](int a, int b) { return ((3 * a + b) % 7 + 7) % 7 == 0; };
      std::vector<std::vector<Q3V>> cells;
      std::vector<Q3V> hex = {eis(1, 0), eis(0, 1), eis(-1, 1),
                              eis(-1, 0), eis(0, -1), eis(1, -1)};
      cells.push_back(hex);
      for (int a = 0; a < 7; ++a) {
        // up triangle (a,0), (a+1,0), (a,1); down triangle (a+1,0), (a+1,1), (a,1)
        if (!is_center(a, 0) && !is_center(a + 1, 0) && !is_center(a, 1))
          cells.push_back({eis(a, 0), eis(a + 1, 0), eis(a, 1)});
        if (!is_center(a + 1, 0) && !is_center(a + 1, 1) && !is_center(a, 1))
          cells.push_back({eis(a + 1, 0), eis(a + 1, 1), eis(a, 1)});
      }
      return detail::planar_from_cells(eis(2, 1), eis(-1, 3), cells, "snub_hexagonal");
    }
  }
  throw UnknownName("unhandled planar tiling");
}

// ---------------------------------------------------------------------------
// prisms and the 3D catalog

inline PeriodicMosaic build_prism(PlanarTiling t, const Rational& height = 1) {
  if (sign(height) <= 0) throw NonPositive("prism height must be positive");
  PeriodicMosaic P2 = build_planar(t);
  PeriodicMosaic M;
  M.dim = 3;
  M.lattice = {Vec3<Rational>(1, 0, 0), Vec3<Rational>(0, 1, 0), Vec3<Rational>(0, 0, height)};
  M.name = "prism:" + P2.name;
  for (const auto& f : P2.verts) M.verts.push_back(Vec3<Rational>(f.x, f.y, 0));
  for (const auto& c2 : P2.cells) {
    PeriodicCell c;
    int m = int(c2.verts.size());
    // ring order of the polygon
    std::vector<int> ring;
    for (const auto& e : c2.facets) ring.push_back(e[0]);
    for (int i : ring) {
      const VertexRef& r = c2.verts[i];
      c.verts.push_back({r.v, {r.shift[0], r.shift[1], 0}});
    }
    for (int i : ring) {
      const VertexRef& r = c2.verts[i];
      c.verts.push_back({r.v, {r.shift[0], r.shift[1], 1}});
    }
    std::vector<int> bottom, top;
    for (int i = 0; i < m; ++i) bottom.push_back(i);
    for (int i = 0; i < m; ++i) top.push_back(m + i);
    c.facets.push_back(bottom);
    c.facets.push_back(top);
    for (int i = 0; i < m; ++i)
      c.facets.push_back({i, (i + 1) % m, m + (i + 1) % m, m + i});
    M.cells.push_back(std::move(c));
  }
  normalize_representatives(M);
  return M;
}

inline PeriodicMosaic build_cubic() {
  PeriodicMosaic M;
  M.dim = 3;
  M.name = "cubic";
  M.verts = {Vec3<Rational>(0, 0, 0)};
  PeriodicCell c;
  for (int k = 0; k < 8; ++k) c.verts.push_back({0, {k >> 2, (k >> 1) & 1, k & 1}});
  c.facets = {{0, 1, 3, 2}, {4, 6, 7, 5}, {0, 4, 5, 1},
              {2, 3, 7, 6}, {0, 2, 6, 4}, {1, 5, 7, 3}};
  M.cells.push_back(c);
  return M;
}

/// Generic-position hyperplane mosaic representative: an affinely sheared
/// cubic mosaic (hyperplane mosaics are combinatorially cubic).
inline PeriodicMosaic build_hyperplane_generic() {
  PeriodicMosaic M = build_cubic();
  M.name = "hyperplane_generic";
  M.lattice = {Vec3<Rational>(1, 0, 0), Vec3<Rational>(rat(1, 3), 1, 0),
               Vec3<Rational>(rat(1, 5), rat(1, 7), 1)};
  return M;
}

inline PeriodicMosaic build_alternated_cubic() {
  PeriodicMosaic M;
  M.dim = 3;
  M.name = "alternated_cubic";
  M.lattice = {Vec3<Rational>(1, 1, 0), Vec3<Rational>(1, 0, 1), Vec3<Rational>(0, 1, 1)};
  detail::VertexInterner intern{&M, {}};
  using V = Vec3<Rational>;
  std::vector<V> octa = {{0, 0, 0}, {2, 0, 0}, {1, 1, 0}, {1, -1, 0}, {1, 0, 1}, {1, 0, -1}};
  std::vector<V> tet1 = {{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  std::vector<V> tet2 = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {2, 1, 1}};
  detail::add_cell_from_points(M, intern, octa);
  detail::add_cell_from_points(M, intern, tet1);
  detail::add_cell_from_points(M, intern, tet2);
  normalize_representatives(M);
  return M;
}

inline PeriodicMosaic build_bitruncated_cubic() {
  PeriodicMosaic M;
  M.dim = 3;
  M.name = "bitruncated_cubic";
  M.lattice = {Vec3<Rational>(2, 2, -2), Vec3<Rational>(2, -2, 2), Vec3<Rational>(-2, 2, 2)};
  detail::VertexInterner intern{&M, {}};
  std::vector<Vec3<Rational>> trunc_octa;
  int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (auto& p : perms)
    for (int s1 : {-1, 1})
      for (int s2 : {-1, 1}) {
        int coords[3];
        coords[p[0]] = 0;
        coords[p[1]] = s1;
        coords[p[2]] = 2 * s2;
        trunc_octa.push_back(Vec3<Rational>(coords[0], coords[1], coords[2]));
      }
  detail::add_cell_from_points(M, intern, trunc_octa);
  normalize_representatives(M);
  return M;
}

/// Non-face-to-face stack of shifted brick-wall layers (every node is a
/// T-node of degree 2).
inline PeriodicMosaic build_brick_wall_3d() {
  PeriodicMosaic M;
  M.dim = 3;
  M.name = "brick_wall_3d";
  M.face_to_face = false;
  M.lattice = {Vec3<Rational>(2, 0, 0), Vec3<Rational>(1, 1, 0),
               Vec3<Rational>(rat(1, 2), rat(1, 2), 1)};
  detail::VertexInterner intern{&M, {}};
  std::vector<Vec3<Rational>> brick;
  for (int x : {0, 2})
    for (int y : {0, 1})
      for (int z : {0, 1}) brick.push_back(Vec3<Rational>(x, y, z));
  detail::add_cell_from_points(M, intern, brick);
  normalize_representatives(M);
  return M;
}

// ---------------------------------------------------------------------------
// barycentric subdivision (flag simplices)

inline PeriodicMosaic barycentric_subdivision(const PeriodicMosaic& M) {
  if (!M.face_to_face) throw NotFaceToFace("barycentric subdivision needs face-to-face input");
  PeriodicMosaic out;
  out.dim = M.dim;
  out.lattice = M.lattice;
  out.name = "barycentric:" + M.name;
  detail::VertexInterner intern{&out, {}};

  auto centroid = [&](const std::vector<VertexRef>& refs) {
    Vec3<Rational> s(0, 0, 0);
    for (const auto& r : refs) s += M.frac_position(r);
    return s * Rational(1, Int(refs.size()));
  };

  for (size_t ci = 0; ci < M.cells.size(); ++ci) {
    const PeriodicCell& c = M.cells[ci];
    VertexRef vc = intern.intern(centroid(c.verts));
    // old vertices re-interned against the new vertex table
    std::vector<VertexRef> corner;
    for (const auto& r : c.verts) corner.push_back(intern.intern(M.frac_position(r)));
    for (const auto& f : c.facets) {
      if (M.dim == 2) {
        // flags: vertex in edge in cell
        VertexRef ve = intern.intern(centroid({c.verts[f[0]], c.verts[f[1]]}));
        for (int end : f) {
          PeriodicCell t;
          t.verts = {corner[end], ve, vc};
          t.facets = {{0, 1}, {1, 2}, {2, 0}};
          out.cells.push_back(std::move(t));
        }
        continue;
      }
      std::vector<VertexRef> face_refs;
      for (int v : f) face_refs.push_back(c.verts[v]);
      VertexRef vf = intern.intern(centroid(face_refs));
      for (size_t k = 0; k < f.size(); ++k) {
        int a = f[k], b = f[(k + 1) % f.size()];
        VertexRef ve = intern.intern(centroid({c.verts[a], c.verts[b]}));
        for (int end : {a, b}) {
          PeriodicCell t;
          t.verts = {corner[end], ve, vf, vc};
          t.facets = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
          out.cells.push_back(std::move(t));
        }
      }
    }
  }
  normalize_representatives(out);
  return out;
}

// ---------------------------------------------------------------------------
// iterated foams

/// One node-truncation step. Every node must have a simplex vertex figure
/// (degree d+1 with d+1 edges). Cut points sit at the given fraction of each
/// edge (default 1/4, which for equal-length edges is the quarter-shortest-
/// edge policy); fractions keep all coordinates rational across iterations.
inline PeriodicMosaic foam_step(const PeriodicMosaic& M, const Rational& cut = Rational(1, 4)) {
  if (M.dim != 3) throw DimensionMismatch("foam_step is implemented for 3D mosaics");
  if (!M.face_to_face) throw NotFaceToFace("foam_step needs a face-to-face mosaic");
  if (!(sign(cut) > 0 && cut < Rational(1, 2)))
    throw EpsilonTooLarge("cut fraction must lie in (0, 1/2)");

  auto T = detail::build_orbits(M);
  const long long n_nodes = T.count(0);

  // edges around each node orbit: map node orbit -> set of (other end refs)
  std::vector<std::set<VertexRef>> node_edges((size_t(n_nodes)));
  std::vector<long> node_deg(size_t(n_nodes), 0);
  for (const auto& c : M.cells) {
    std::set<int> seen;
    for (const auto& r : c.verts) {
      int orbit = T.insert(0, {r});
      node_deg[orbit] += 1;
    }
    for (auto [a, b] : detail::cell_edge_list(c, 3)) {
      for (int flip = 0; flip < 2; ++flip) {
        const VertexRef& from = flip ? c.verts[b] : c.verts[a];
        const VertexRef& to = flip ? c.verts[a] : c.verts[b];
        int orbit = T.insert(0, {from});
        VertexRef rel{to.v,
                      {to.shift[0] - from.shift[0], to.shift[1] - from.shift[1],
                       to.shift[2] - from.shift[2]}};
        node_edges[orbit].insert(rel);
      }
    }
  }
  for (long long n = 0; n < n_nodes; ++n) {
    if (node_deg[n] != 4 || node_edges[n].size() != 4)
      throw VertexFigureNotSimplex("node orbit " + std::to_string(n) + " has degree " +
                                   std::to_string(node_deg[n]) + " with " +
                                   std::to_string(node_edges[n].size()) + " edges");
  }

  PeriodicMosaic out;
  out.dim = 3;
  out.lattice = M.lattice;
  out.name = "foam:" + M.name;
  detail::VertexInterner intern{&out, {}};

  // cut point on the edge from node instance `at` toward `to`
  auto cut_point = [&](const VertexRef& at, const VertexRef& to) {
    Vec3<Rational> p = M.frac_position(at);
    Vec3<Rational> q = M.frac_position(to);
    return intern.intern(p + (q - p) * cut);
  };

  // truncated old cells
  for (size_t ci = 0; ci < M.cells.size(); ++ci) {
    const PeriodicCell& c = M.cells[ci];
    auto geom = M.cell_geometry(int(ci));
    PeriodicCell nc;
    std::map<std::pair<int, int>, int> corner;  // (at local, toward local) -> new local
    auto corner_ix = [&](int at, int to) {
      auto key = std::make_pair(at, to);
      auto it = corner.find(key);
      if (it != corner.end()) return it->second;
      int ix = int(nc.verts.size());
      nc.verts.push_back(cut_point(c.verts[at], c.verts[to]));
      corner.emplace(key, ix);
      return ix;
    };
    for (const auto& f : c.facets) {
      std::vector<int> poly;
      int m = int(f.size());
      for (int k = 0; k < m; ++k) {
        int prev = f[(k + m - 1) % m], cur = f[k], next = f[(k + 1) % m];
        poly.push_back(corner_ix(cur, prev));
        poly.push_back(corner_ix(cur, next));
      }
      nc.facets.push_back(poly);
    }
    // one triangle per removed vertex, ordered along the vertex star
    for (size_t v = 0; v < c.verts.size(); ++v) {
      std::vector<int> ends, star;
      geom.vertex_star(int(v), ends, star);
      std::vector<int> tri;
      for (int e : ends) tri.push_back(corner_ix(int(v), e));
      nc.facets.push_back(tri);
    }
    out.cells.push_back(std::move(nc));
  }

  // one simplex cell per node orbit
  for (long long n = 0; n < n_nodes; ++n) {
    const auto& rep = T.rep[0][size_t(n)];
    VertexRef at = rep[0];
    PeriodicCell sc;
    for (const auto& rel : node_edges[size_t(n)]) {
      VertexRef to{rel.v,
                   {rel.shift[0] + at.shift[0], rel.shift[1] + at.shift[1],
                    rel.shift[2] + at.shift[2]}};
      sc.verts.push_back(cut_point(at, to));
    }
    sc.facets = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    out.cells.push_back(std::move(sc));
  }
  normalize_representatives(out);
  return out;
}

/// Dual step: split every simplex cell into d+1 simplices coned from its
/// centroid.
inline PeriodicMosaic dual_foam_step(const PeriodicMosaic& M) {
  if (!M.face_to_face) throw NotFaceToFace("dual_foam_step needs a face-to-face mosaic");
  for (const auto& c : M.cells)
    if (int(c.verts.size()) != M.dim + 1)
      throw NotSimplicial("dual_foam_step needs simplicial cells");
  PeriodicMosaic out;
  out.dim = M.dim;
  out.lattice = M.lattice;
  out.name = "dualfoam:" + M.name;
  detail::VertexInterner intern{&out, {}};
  for (const auto& c : M.cells) {
    Vec3<Rational> s(0, 0, 0);
    for (const auto& r : c.verts) s += M.frac_position(r);
    VertexRef ctr = intern.intern(s * Rational(1, M.dim + 1));
    std::vector<VertexRef> base;
    for (const auto& r : c.verts) base.push_back(intern.intern(M.frac_position(r)));
    for (const auto& f : c.facets) {
      PeriodicCell nc;
      for (int v : f) nc.verts.push_back(base[v]);
      nc.verts.push_back(ctr);
      if (M.dim == 2)
        nc.facets = {{0, 1}, {1, 2}, {2, 0}};
      else
        nc.facets = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
      out.cells.push_back(std::move(nc));
    }
  }
  normalize_representatives(out);
  return out;
}

// ---------------------------------------------------------------------------
// layered mixing (Theorem-1.6-style strips), evaluated combinatorially

/// Either a limiting cubic-layer fraction lambda in [0,1], or an explicit
/// periodic block sequence S(k_m, l_m).
struct LayerRecipe {
  std::optional<Rational> lambda;
  std::vector<std::pair<long, long>> blocks;
};

/// Exact per-layer element counts of the four layer types (per unit square
/// of layer, owning the bottom interface):
///   type 1 cubic:        cells 1,  nodes 1, edges 3,  facets 3,  I_vc 8
///   type 2 subdivided:   cells 48, nodes 8, edges 56, facets 96, I_vc 192
///   type 3 (open top):   cells 37, nodes 8, edges 49, facets 78, I_vc 149
///   type 4 (open bottom): cells 37, nodes 5, edges 39, facets 71, I_vc 149
inline MosaicStats layered_mix(const LayerRecipe& recipe) {
  MosaicStats S;
  if (recipe.lambda) {
    const Rational& lam = *recipe.lambda;
    if (sign(lam) < 0 || lam > 1) throw InvalidRatio("lambda must lie in [0,1]");
    Rational mu = 1 - lam;
    Rational I = 8 * lam + 192 * mu;
    Rational Nv = lam + 8 * mu;
    Rational Nc = lam + 48 * mu;
    Rational Ifc = 6 * lam + 192 * mu;
    Rational Iec = 12 * lam + 288 * mu;
    S.n_bar = I / Nv;
    S.v_bar = I / Nc;
    S.f_bar = Ifc / Nc;
    S.e_bar = Iec / Nc;
    S.h_bar = I / (Nv + Nc);
    return S;
  }
  if (recipe.blocks.empty()) throw InvalidRatio("recipe needs lambda or blocks");
  long long Nv = 0, Nc = 0, Ne = 0, Nf = 0, I = 0, Ifc = 0, Iec = 0;
  for (auto [k, l] : recipe.blocks) {
    if (k < 1 || l < 1) throw InvalidRatio("block layer counts must be >= 1");
    Nv += k + 8 * l + 13;
    Ne += 3 * k + 56 * l + 88;
    Nf += 3 * k + 96 * l + 149;
    Nc += k + 48 * l + 74;
    I += 8 * k + 192 * l + 298;
    Ifc += 6 * k + 192 * l + 298;
    Iec += 12 * k + 288 * l + 448;
  }
  S.N_v = Nv;
  S.N_e = Ne;
  S.N_f = Nf;
  S.N_c = Nc;
  S.n_bar = Rational(I, Nv);
  S.v_bar = Rational(I, Nc);
  S.f_bar = Rational(Ifc, Nc);
  S.e_bar = Rational(Iec, Nc);
  S.h_bar = Rational(I, Nv + Nc);
  return S;
}

// ---------------------------------------------------------------------------
// inverting the harmonic-degree constructions

struct HarmonicTarget {
  bool layered = false;      // true: Case 1 strip mix; false: Case 2 partial division
  Rational lambda;           // Case 1
  int k = 0;                 // Case 2: dual-foam iterations from the subdivided cubic
  Rational mu;               // Case 2: fraction of cells divided in step k+1
  Rational achieved_h;       // exact harmonic degree of the returned recipe
};

/// Exact harmonic degree of the Case-2 plan: n_k from the dual-foam
/// recursion with n_0 = 24, v = 4, then a mu-fraction of cells divided.
inline Rational case2_h(int k, const Rational& mu) {
  Rational n_k = foam_recursion(24, 3, k);
  Rational x = Rational(4) / n_k;  // N_v / N_c of the k-th iterate
  return (4 + 12 * mu) / (x + 1 + 4 * mu);
}

inline HarmonicTarget harmonic_target(const Rational& h_star, int d = 3) {
  if (d != 3) throw DimensionMismatch("harmonic_target is implemented for d = 3");
  if (!(h_star > Rational(3) && h_star <= Rational(4)))
    throw OutOfRange("target harmonic degree must lie in (3, 4]");
  HarmonicTarget out;
  Rational h_sub(24, 7);
  if (h_star >= h_sub) {
    out.layered = true;
    // h(lambda) = (8 lam + 192 (1-lam)) / (2 lam + 56 (1-lam)), solved exactly
    out.lambda = (56 * h_star - 192) / (54 * h_star - 184);
    LayerRecipe r;
    r.lambda = out.lambda;
    out.achieved_h = layered_mix(r).h_bar;
    return out;
  }
  out.layered = false;
  // smallest k with h_{k+1} <= h* <= h_k; dividing a mu-fraction of M_k's
  // cells interpolates between the two iterates
  int k = 0;
  while (h_star < case2_h(k, 1)) {
    ++k;
    if (k > 512) throw OutOfRange("target not bracketed by the dual-foam recursion");
  }
  out.k = k;
  Rational n_k = foam_recursion(24, 3, k);
  Rational x = Rational(4) / n_k;
  // solve (4 + 12 mu) / (x + 1 + 4 mu) = h*
  out.mu = (4 - h_star * (x + 1)) / (4 * h_star - 12);
  out.achieved_h = case2_h(k, out.mu);
  return out;
}

// ---------------------------------------------------------------------------
// name-based catalog

inline PeriodicMosaic build(const std::string& name) {
  if (name.rfind("prism:", 0) == 0)
    return build_prism(planar_tiling_from_string(name.substr(6)));
  if (name.rfind("barycentric:", 0) == 0)
    return barycentric_subdivision(build(name.substr(12)));
  if (name == "cubic") return build_cubic();
  if (name == "hyperplane_generic") return build_hyperplane_generic();
  if (name == "alternated_cubic") return build_alternated_cubic();
  if (name == "bitruncated_cubic") return build_bitruncated_cubic();
  if (name == "brick_wall_3d") return build_brick_wall_3d();
  for (auto [t, n] : planar_tiling_names())
    if (name == n) return build_planar(t);
  throw UnknownName("unknown mosaic: " + name);
}

inline std::vector<std::string> catalog_names() {
  std::vector<std::string> names = {"cubic", "alternated_cubic", "bitruncated_cubic",
                                    "hyperplane_generic", "brick_wall_3d"};
  for (auto [t, n] : planar_tiling_names()) {
    names.push_back(n);
    names.push_back(std::string("prism:") + n);
  }
  names.push_back("barycentric:cubic");
  return names;
}

}  // namespace mosaic
