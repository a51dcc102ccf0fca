#pragma once

#include "mosaic/complex.hpp"
#include "mosaic/formulas.hpp"
#include "mosaic/geom.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace mosaic {

struct InvalidTiling : MosaicError {
  using MosaicError::MosaicError;
};
struct NotFaceToFace : MosaicError {
  using MosaicError::MosaicError;
};

struct VertexRef {
  int v = 0;
  std::array<int, 3> shift{0, 0, 0};
  bool operator==(const VertexRef& o) const { return v == o.v && shift == o.shift; }
  bool operator<(const VertexRef& o) const {
    if (v != o.v) return v < o.v;
    return shift < o.shift;
  }
};

struct PeriodicCell {
  std::vector<VertexRef> verts;
  // facet cycles indexing into verts; same conventions as Polytope
  std::vector<std::vector<int>> facets;
};

/// Translation-periodic mosaic given by a rational lattice and one
/// representative cell per translation orbit. Vertex coordinates are
/// fractional (lattice-basis) coordinates in [0,1)^d; an instance of vertex v
/// at integer shift s sits at lattice * (frac_v + s).
struct PeriodicMosaic {
  int dim = 3;
  std::array<Vec3<Rational>, 3> lattice = {Vec3<Rational>(1, 0, 0), Vec3<Rational>(0, 1, 0),
                                           Vec3<Rational>(0, 0, 1)};
  std::vector<Vec3<Rational>> verts;
  std::vector<PeriodicCell> cells;
  bool face_to_face = true;
  std::string name;

  Vec3<Rational> frac_position(const VertexRef& r) const {
    const Vec3<Rational>& f = verts[r.v];
    return {f.x + r.shift[0], f.y + r.shift[1], f.z + r.shift[2]};
  }
  Vec3<Rational> embed_frac(const Vec3<Rational>& f) const {
    Vec3<Rational> p = lattice[0] * f.x + lattice[1] * f.y;
    if (dim == 3) p += lattice[2] * f.z;
    return p;
  }
  Vec3<Rational> embed(const VertexRef& r) const { return embed_frac(frac_position(r)); }

  Rational lattice_volume() const {
    if (dim == 2) {
      Rational a = cross2(lattice[0], lattice[1]);
      return sign(a) < 0 ? -a : a;
    }
    Rational v = dot(cross(lattice[0], lattice[1]), lattice[2]);
    return sign(v) < 0 ? -v : v;
  }

  /// Geometry of one cell instance, facets oriented outward.
  Polytope<Rational> cell_geometry(int ci, std::array<int, 3> extra = {0, 0, 0}) const {
    const PeriodicCell& c = cells[ci];
    Polytope<Rational> P;
    P.dim = dim;
    for (const auto& r : c.verts) {
      VertexRef rr = r;
      for (int k = 0; k < 3; ++k) rr.shift[k] += extra[k];
      P.verts.push_back(embed(rr));
    }
    P.facets = c.facets;
    Vec3<Rational> mean = P.vertex_mean();
    if (dim == 2) {
      // single CCW ring expected
      Rational area(0);
      for (const auto& e : P.facets) area += cross2(P.verts[e[0]], P.verts[e[1]]);
      if (sign(area) < 0) {
        std::vector<std::vector<int>> rev;
        for (auto it = P.facets.rbegin(); it != P.facets.rend(); ++it)
          rev.push_back({(*it)[1], (*it)[0]});
        P.facets = rev;
      }
      return P;
    }
    for (auto& f : P.facets) {
      Vec3<Rational> n(0, 0, 0);
      for (size_t k = 0; k < f.size(); ++k)
        n += cross(P.verts[f[k]], P.verts[f[(k + 1) % f.size()]]);
      if (sign(dot(n, P.verts[f[0]] - mean)) < 0) std::reverse(f.begin(), f.end());
    }
    return P;
  }
};

/// Exact per-period averages. h̄ always equals n̄ v̄ / (n̄ + v̄).
struct MosaicStats {
  Rational n_bar, v_bar, f_bar, e_bar, h_bar;
  long long N_c = 0, N_v = 0, N_f = 0, N_e = 0;
  std::map<long, long> node_degree_hist, cell_degree_hist;
};

namespace detail {

inline Int rational_floor(const Rational& r) {
  Int q = numerator(r) / denominator(r);
  if (sign(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

inline std::vector<std::array<int, 2>> cell_edge_list(const PeriodicCell& c, int dim) {
  std::set<std::array<int, 2>> es;
  for (const auto& f : c.facets) {
    if (dim == 2) {
      es.insert({std::min(f[0], f[1]), std::max(f[0], f[1])});
      continue;
    }
    for (size_t k = 0; k < f.size(); ++k) {
      int a = f[k], b = f[(k + 1) % f.size()];
      es.insert({std::min(a, b), std::max(a, b)});
    }
  }
  return {es.begin(), es.end()};
}

// translation-invariant orbit key of an element given by its vertex refs
inline std::vector<int> orbit_key(std::vector<VertexRef> refs) {
  std::array<int, 3> mins = refs[0].shift;
  for (const auto& r : refs)
    for (int k = 0; k < 3; ++k) mins[k] = std::min(mins[k], r.shift[k]);
  for (auto& r : refs)
    for (int k = 0; k < 3; ++k) r.shift[k] -= mins[k];
  std::sort(refs.begin(), refs.end());
  std::vector<int> key;
  key.reserve(refs.size() * 4);
  for (const auto& r : refs) {
    key.push_back(r.v);
    key.push_back(r.shift[0]);
    key.push_back(r.shift[1]);
    key.push_back(r.shift[2]);
  }
  return key;
}

struct OrbitTables {
  // per dimension k: orbit key -> orbit id, plus one representative's refs
  std::array<std::map<std::vector<int>, int>, 4> ix;
  std::array<std::vector<std::vector<VertexRef>>, 4> rep;
  // incidence totals per period: low[k] = sum over k-orbit representatives of
  // their j-subelement counts, j < k (index by [k][j])
  long long subcount[4][4] = {};

  int insert(int k, const std::vector<VertexRef>& refs) {
    auto key = orbit_key(refs);
    auto [it, fresh] = ix[k].try_emplace(key, int(rep[k].size()));
    if (fresh) rep[k].push_back(refs);
    return it->second;
  }
  long long count(int k) const { return (long long)rep[k].size(); }
};

inline OrbitTables build_orbits(const PeriodicMosaic& M) {
  OrbitTables T;
  for (const auto& c : M.cells) {
    T.insert(M.dim, c.verts);
    for (const auto& r : c.verts) T.insert(0, {r});
    for (auto [a, b] : cell_edge_list(c, M.dim)) T.insert(1, {c.verts[a], c.verts[b]});
    if (M.dim == 3)
      for (const auto& f : c.facets) {
        std::vector<VertexRef> refs;
        for (int v : f) refs.push_back(c.verts[v]);
        T.insert(2, refs);
      }
  }
  // subelement counts per representative orbit
  for (const auto& refs : T.rep[1]) {
    (void)refs;
    T.subcount[1][0] += 2;
  }
  if (M.dim == 3)
    for (const auto& refs : T.rep[2]) {
      T.subcount[2][0] += (long long)refs.size();
      T.subcount[2][1] += (long long)refs.size();
    }
  for (const auto& c : M.cells) {
    T.subcount[M.dim][0] += (long long)c.verts.size();
    T.subcount[M.dim][1] += (long long)cell_edge_list(c, M.dim).size();
    if (M.dim == 3) T.subcount[3][2] += (long long)c.facets.size();
  }
  return T;
}

}  // namespace detail

inline MosaicStats stats(const PeriodicMosaic& M) {
  if (M.cells.empty()) throw InvalidTiling("mosaic without cells");
  auto T = detail::build_orbits(M);
  MosaicStats S;
  S.N_c = (long long)M.cells.size();
  S.N_v = T.count(0);
  S.N_e = T.count(1);
  S.N_f = M.dim == 3 ? T.count(2) : T.count(1);

  long long inc = 0;
  std::map<int, long> deg;  // node orbit -> degree
  for (const auto& c : M.cells) {
    inc += (long long)c.verts.size();
    S.cell_degree_hist[long(c.verts.size())]++;
    for (const auto& r : c.verts) deg[T.insert(0, {r})]++;
  }
  for (auto& [orbit, d] : deg) S.node_degree_hist[d]++;

  S.v_bar = Rational(inc, S.N_c);
  S.n_bar = Rational(inc, S.N_v);
  S.e_bar = Rational(T.subcount[M.dim][1], S.N_c);
  S.f_bar = M.dim == 3 ? Rational(T.subcount[3][2], S.N_c) : S.e_bar;
  S.h_bar = harmonic_degree(S.n_bar, S.v_bar);
  return S;
}

// ---------------------------------------------------------------------------
// the 4x4 incidence matrix of 3D mosaics

struct NijMatrix {
  Rational m[4][4];
  const Rational& operator()(int i, int j) const { return m[i][j]; }
  Rational& operator()(int i, int j) { return m[i][j]; }
  bool operator==(const NijMatrix& o) const {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (!(m[i][j] == o.m[i][j])) return false;
    return true;
  }
};

/// Exact incidence averages measured on one period.
inline NijMatrix measure_nij(const PeriodicMosaic& M) {
  if (M.dim != 3) throw DimensionMismatch("measure_nij needs a 3D mosaic");
  if (!M.face_to_face) throw NotFaceToFace("measure_nij needs a face-to-face mosaic");
  auto T = detail::build_orbits(M);
  long long N[4] = {T.count(0), T.count(1), T.count(2), T.count(3)};
  NijMatrix A;
  for (int i = 0; i < 4; ++i) A(i, i) = 1;
  for (int j = 1; j < 4; ++j)
    for (int i = 0; i < j; ++i) {
      // total (i, j) incidences per period, counted on the j side
      long long inc = T.subcount[j][i];
      A(j, i) = Rational(inc, N[j]);  // i-faces per j-face
      A(i, j) = Rational(inc, N[i]);  // j-faces around an i-face
    }
  return A;
}

/// Eq-of-three-parameters incidence matrix: rows/cols indexed 0..3, with
/// v = n30, f = n32, n = n03.
inline NijMatrix nij_from_params(const Rational& v, const Rational& f, const Rational& n) {
  if (sign(v) <= 0 || sign(f) <= 0 || sign(n) <= 0)
    throw MosaicError("nij_from_params: parameters must be positive");
  NijMatrix A;
  Rational two(2);
  A(0, 0) = 1;
  A(0, 1) = (f - 2) * n / v + 2;
  A(0, 2) = (f - 2) * n / v + n;
  A(0, 3) = n;
  A(1, 0) = 2;
  A(1, 1) = 1;
  A(1, 2) = two * (v + f - 2) * n / ((f - 2) * n + two * v);
  A(1, 3) = A(1, 2);
  A(2, 0) = two * (v - 2) / f + 2;
  A(2, 1) = A(2, 0);
  A(2, 2) = 1;
  A(2, 3) = 2;
  A(3, 0) = v;
  A(3, 1) = v + f - 2;
  A(3, 2) = f;
  A(3, 3) = 1;
  return A;
}

/// Dual mosaic swap: n_ij(M°) = n_(3-i)(3-j)(M); an involution.
inline NijMatrix dual_nij(const NijMatrix& A) {
  NijMatrix D;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) D(i, j) = A(3 - i, 3 - j);
  return D;
}

// ---------------------------------------------------------------------------
// average total angle and the per-node / per-cell tiling sums

struct TotalAngle {
  double internal_avg = 0, external_avg = 0, total_avg = 0;
};

inline TotalAngle average_total_angle(const PeriodicMosaic& M) {
  if (!M.face_to_face) throw NotFaceToFace("average_total_angle needs face-to-face input");
  double si = 0, se = 0;
  long long k = 0;
  for (size_t c = 0; c < M.cells.size(); ++c) {
    auto P = M.cell_geometry(int(c));
    for (size_t v = 0; v < P.verts.size(); ++v) {
      si += internal_solid_angle(P, int(v));
      se += external_solid_angle(P, int(v));
      ++k;
    }
  }
  TotalAngle out;
  out.internal_avg = si / double(k);
  out.external_avg = se / double(k);
  out.total_avg = out.internal_avg + out.external_avg;
  return out;
}

/// Sum of internal angles around each node orbit (must tile S^{d-1}) and sum
/// of external angles over each cell's vertices (likewise).
struct TilingSums {
  std::vector<double> per_node_internal;
  std::vector<double> per_cell_external;
};

inline TilingSums angle_tiling_sums(const PeriodicMosaic& M) {
  auto T = detail::build_orbits(M);
  TilingSums out;
  out.per_node_internal.assign(size_t(T.count(0)), 0.0);
  for (size_t c = 0; c < M.cells.size(); ++c) {
    auto P = M.cell_geometry(int(c));
    double cell_sum = 0;
    for (size_t v = 0; v < P.verts.size(); ++v) {
      int orbit = T.insert(0, {M.cells[c].verts[v]});
      out.per_node_internal[orbit] += internal_solid_angle(P, int(v));
      cell_sum += external_solid_angle(P, int(v));
    }
    out.per_cell_external.push_back(cell_sum);
  }
  return out;
}

// ---------------------------------------------------------------------------
// patches: explicit cell instances for block-based oracles

struct PatchCell {
  int orbit;
  std::array<int, 3> shift;
  Polytope<Rational> geom;
};

inline std::vector<PatchCell> periodic_patch(const PeriodicMosaic& M, int lo, int hi) {
  std::vector<PatchCell> out;
  int zlo = M.dim == 3 ? lo : 0, zhi = M.dim == 3 ? hi : 1;
  for (int x = lo; x < hi; ++x)
    for (int y = lo; y < hi; ++y)
      for (int z = zlo; z < zhi; ++z)
        for (size_t c = 0; c < M.cells.size(); ++c)
          out.push_back({int(c), {x, y, z}, M.cell_geometry(int(c), {x, y, z})});
  return out;
}

/// Canonical representatives: every cell is translated so that its centroid
/// has fractional coordinates in [0,1)^d.
inline void normalize_representatives(PeriodicMosaic& M) {
  for (auto& c : M.cells) {
    Vec3<Rational> s(0, 0, 0);
    for (const auto& r : c.verts) s += M.frac_position(r);
    s = s * Rational(1, Int(c.verts.size()));
    const Rational* comps[3] = {&s.x, &s.y, &s.z};
    for (int k = 0; k < M.dim; ++k) {
      int fl = detail::rational_floor(*comps[k]).convert_to<int>();
      if (fl != 0)
        for (auto& r : c.verts) r.shift[k] -= fl;
    }
  }
}

/// Smallest inradius and largest circumradius over one period's cells.
inline std::pair<double, double> normality_bounds(const PeriodicMosaic& M) {
  double r_min = 1e300, R_max = 0;
  for (size_t c = 0; c < M.cells.size(); ++c) {
    auto [r, R] = normality_radii(M.cell_geometry(int(c)));
    r_min = std::min(r_min, r);
    R_max = std::max(R_max, R);
  }
  return {r_min, R_max};
}

/// Exact tiling sanity: per-period cell volumes must add up to the lattice
/// cell volume, and a 3^d patch must assemble without overlaps. Returns the
/// measured face-to-face flag.
inline bool validate_periodic(const PeriodicMosaic& M) {
  Rational vol(0);
  for (size_t c = 0; c < M.cells.size(); ++c) vol += M.cell_geometry(int(c)).volume();
  if (!(vol == M.lattice_volume()))
    throw InvalidTiling("cell volumes " + rational_to_string(vol) +
                        " do not fill the lattice cell " +
                        rational_to_string(M.lattice_volume()));
  int radius = 1;
  for (const auto& c : M.cells)
    for (const auto& r : c.verts)
      for (int k = 0; k < 3; ++k) radius = std::max(radius, std::abs(r.shift[k]));
  std::vector<Polytope<Rational>> patch;
  for (const auto& pc : periodic_patch(M, -radius, radius + 1)) patch.push_back(pc.geom);
  auto X = assemble(std::move(patch));
  return X.face_to_face();
}

// ---------------------------------------------------------------------------
// interchange format: rationals as "p/q" strings, bit-exact round trip

inline nlohmann::json to_interchange_json(const PeriodicMosaic& M) {
  nlohmann::json j;
  j["dimension"] = M.dim;
  auto vec_json = [&](const Vec3<Rational>& v) {
    nlohmann::json a = nlohmann::json::array();
    a.push_back(rational_to_string(v.x));
    a.push_back(rational_to_string(v.y));
    if (M.dim == 3) a.push_back(rational_to_string(v.z));
    return a;
  };
  j["lattice"] = nlohmann::json::array();
  for (int k = 0; k < M.dim; ++k) j["lattice"].push_back(vec_json(M.lattice[k]));
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : M.verts) j["vertices"].push_back(vec_json(v));
  j["cells"] = nlohmann::json::array();
  for (const auto& c : M.cells) {
    nlohmann::json jc = nlohmann::json::array();
    for (const auto& r : c.verts) {
      nlohmann::json jr;
      jr["v"] = r.v;
      jr["shift"] = M.dim == 3
                        ? nlohmann::json::array({r.shift[0], r.shift[1], r.shift[2]})
                        : nlohmann::json::array({r.shift[0], r.shift[1]});
      jc.push_back(jr);
    }
    j["cells"].push_back(jc);
  }
  j["face_to_face"] = M.face_to_face;
  return j;
}

inline PeriodicMosaic from_interchange_json(const nlohmann::json& j) {
  PeriodicMosaic M;
  M.dim = j.at("dimension").get<int>();
  if (M.dim != 2 && M.dim != 3) throw DimensionMismatch("interchange: dimension must be 2 or 3");
  auto vec_parse = [&](const nlohmann::json& a) {
    Vec3<Rational> v(0, 0, 0);
    v.x = parse_rational(a.at(0).get<std::string>());
    v.y = parse_rational(a.at(1).get<std::string>());
    if (M.dim == 3) v.z = parse_rational(a.at(2).get<std::string>());
    return v;
  };
  for (int k = 0; k < M.dim; ++k) M.lattice[k] = vec_parse(j.at("lattice").at(k));
  for (const auto& a : j.at("vertices")) M.verts.push_back(vec_parse(a));
  for (const auto& jc : j.at("cells")) {
    PeriodicCell c;
    for (const auto& jr : jc) {
      VertexRef r;
      r.v = jr.at("v").get<int>();
      const auto& s = jr.at("shift");
      r.shift = {s.at(0).get<int>(), s.at(1).get<int>(),
                 M.dim == 3 ? s.at(2).get<int>() : 0};
      if (r.v < 0 || r.v >= int(M.verts.size()))
        throw MosaicError("interchange: vertex index out of range");
      c.verts.push_back(r);
    }
    M.cells.push_back(std::move(c));
  }
  M.face_to_face = j.at("face_to_face").get<bool>();
  // the format carries no face lattice: recover each cell's facets by hull
  for (auto& c : M.cells) {
    std::vector<Vec3<Rational>> pts;
    for (const auto& r : c.verts) pts.push_back(M.embed(r));
    auto P = convex_hull(pts, M.dim);
    if (P.verts.size() != c.verts.size())
      throw InvalidTiling("interchange: cell vertices are not in convex position");
    std::map<Vec3<Rational>, int> pos;
    for (size_t i = 0; i < pts.size(); ++i) pos[pts[i]] = int(i);
    c.facets.clear();
    for (const auto& f : P.facets) {
      std::vector<int> g;
      for (int v : f) g.push_back(pos.at(P.verts[v]));
      c.facets.push_back(g);
    }
  }
  return M;
}

}  // namespace mosaic
