#pragma once

#include "mosaic/formulas.hpp"
#include "mosaic/geom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

namespace mosaic {

struct TooFewPoints : MosaicError {
  using MosaicError::MosaicError;
};
struct TooFewPlanes : MosaicError {
  using MosaicError::MosaicError;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

struct PoissonSample {
  std::vector<Vec3<double>> points;  // in the half-open unit torus box
  double intensity = 0;
  std::uint64_t seed = 0;
};

inline PoissonSample poisson_sample(double intensity, std::uint64_t seed) {
  PoissonSample S;
  S.intensity = intensity;
  S.seed = seed;
  std::mt19937_64 rng(splitmix64(seed));
  std::poisson_distribution<long long> pd(intensity);
  long long k = pd(rng);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  S.points.reserve(size_t(k));
  for (long long i = 0; i < k; ++i) {
    double x = u(rng), y = u(rng), z = u(rng);
    S.points.push_back({x, y, z});
  }
  std::sort(S.points.begin(), S.points.end());
  S.points.erase(std::unique(S.points.begin(), S.points.end()), S.points.end());
  return S;
}

// ---------------------------------------------------------------------------
// filtered exact predicates

namespace detail_delaunay {

inline int exact_sign_orient(const Vec3<double>& a, const Vec3<double>& b,
                             const Vec3<double>& c, const Vec3<double>& d) {
  Vec3<Rational> ra(Rational(a.x), Rational(a.y), Rational(a.z));
  Vec3<Rational> rb(Rational(b.x), Rational(b.y), Rational(b.z));
  Vec3<Rational> rc(Rational(c.x), Rational(c.y), Rational(c.z));
  Vec3<Rational> rd(Rational(d.x), Rational(d.y), Rational(d.z));
  return sign(orient3(ra, rb, rc, rd));
}

/// Sign of det[b-a, c-a, d-a]; exact on ties.
inline int orient3d(const Vec3<double>& a, const Vec3<double>& b, const Vec3<double>& c,
                    const Vec3<double>& d) {
  Vec3<double> u = b - a, v = c - a, w = d - a;
  double m1 = v.y * w.z - v.z * w.y, p1 = std::abs(v.y * w.z) + std::abs(v.z * w.y);
  double m2 = v.z * w.x - v.x * w.z, p2 = std::abs(v.z * w.x) + std::abs(v.x * w.z);
  double m3 = v.x * w.y - v.y * w.x, p3 = std::abs(v.x * w.y) + std::abs(v.y * w.x);
  double det = u.x * m1 + u.y * m2 + u.z * m3;
  double perm = std::abs(u.x) * p1 + std::abs(u.y) * p2 + std::abs(u.z) * p3;
  double err = 1e-14 * perm;
  if (det > err) return 1;
  if (det < -err) return -1;
  return exact_sign_orient(a, b, c, d);
}

inline int exact_sign_insphere(const Vec3<double> p[5]) {
  Vec3<Rational> r[5];
  Rational lift[5];
  for (int i = 0; i < 5; ++i) {
    r[i] = {Rational(p[i].x), Rational(p[i].y), Rational(p[i].z)};
  }
  Vec3<Rational> q[4];
  for (int i = 0; i < 4; ++i) {
    q[i] = r[i] - r[4];
    lift[i] = dot(q[i], q[i]);
  }
  // 4x4 determinant with the lifted column, Laplace along the lift
  auto det3 = [&](int i, int j, int k) {
    return dot(cross(q[i], q[j]), q[k]);
  };
  Rational det = -lift[0] * det3(1, 2, 3) + lift[1] * det3(0, 2, 3) -
                 lift[2] * det3(0, 1, 3) + lift[3] * det3(0, 1, 2);
  return sign(det);
}

/// Positive when e lies strictly inside the circumsphere of the positively
/// oriented tetrahedron (a, b, c, d); exact on ties, with a deterministic
/// order-based tie-break for exactly cospherical 5-tuples.
inline int insphere(const Vec3<double>& a, const Vec3<double>& b, const Vec3<double>& c,
                    const Vec3<double>& d, const Vec3<double>& e, std::uint64_t tie_salt) {
  const Vec3<double> p[5] = {a, b, c, d, e};
  double m[4][4], ab[4][4];
  for (int i = 0; i < 4; ++i) {
    m[i][0] = p[i].x - e.x;
    m[i][1] = p[i].y - e.y;
    m[i][2] = p[i].z - e.z;
    m[i][3] = m[i][0] * m[i][0] + m[i][1] * m[i][1] + m[i][2] * m[i][2];
    for (int j = 0; j < 4; ++j) ab[i][j] = std::abs(m[i][j]);
  }
  auto minor3 = [&](int r0, int r1, int r2, double mm[4][4]) {
    return mm[r0][0] * (mm[r1][1] * mm[r2][2] - mm[r1][2] * mm[r2][1]) -
           mm[r0][1] * (mm[r1][0] * mm[r2][2] - mm[r1][2] * mm[r2][0]) +
           mm[r0][2] * (mm[r1][0] * mm[r2][1] - mm[r1][1] * mm[r2][0]);
  };
  auto minor3_abs = [&](int r0, int r1, int r2) {
    return ab[r0][0] * (ab[r1][1] * ab[r2][2] + ab[r1][2] * ab[r2][1]) +
           ab[r0][1] * (ab[r1][0] * ab[r2][2] + ab[r1][2] * ab[r2][0]) +
           ab[r0][2] * (ab[r1][0] * ab[r2][1] + ab[r1][1] * ab[r2][0]);
  };
  // with rows (p_i - e | |p_i - e|^2), e inside the circumsphere of a
  // positively oriented tetrahedron makes this determinant negative
  double det = -m[0][3] * minor3(1, 2, 3, m) + m[1][3] * minor3(0, 2, 3, m) -
               m[2][3] * minor3(0, 1, 3, m) + m[3][3] * minor3(0, 1, 2, m);
  double perm = ab[0][3] * minor3_abs(1, 2, 3) + ab[1][3] * minor3_abs(0, 2, 3) +
                ab[2][3] * minor3_abs(0, 1, 3) + ab[3][3] * minor3_abs(0, 1, 2);
  double err = 1e-13 * perm;
  if (det < -err) return 1;
  if (det > err) return -1;
  int s = exact_sign_insphere(p);
  if (s != 0) return -s;
  // exactly cospherical: deterministic seed-derived perturbation order
  std::uint64_t h = tie_salt;
  for (int i = 0; i < 5; ++i) {
    h = splitmix64(h ^ std::uint64_t(std::llround(p[i].x * (1ll << 40))));
    h = splitmix64(h ^ std::uint64_t(std::llround(p[i].y * (1ll << 40))));
  }
  return (h & 1) ? 1 : -1;
}

}  // namespace detail_delaunay

// ---------------------------------------------------------------------------
// incremental Delaunay (Bowyer-Watson, walk location, super simplex)

class Triangulation3 {
 public:
  struct Tet {
    std::array<int, 4> v;
    std::array<int, 4> nbr;  // across the face opposite v[k]; -1 outside
    bool alive = true;
  };

  explicit Triangulation3(std::vector<Vec3<double>> pts, std::uint64_t tie_salt = 0,
                          bool paranoid = false)
      : pts_(std::move(pts)), salt_(tie_salt), paranoid_(paranoid) {
    if (pts_.size() < 5) throw TooFewPoints("triangulation needs at least 5 points");
    n_real_ = int(pts_.size());
    build();
  }

  /// Structural invariants: positive orientation and reciprocal neighbor
  /// links over the alive tetrahedra.
  bool validate_structure() const {
    for (size_t i = 0; i < tets_.size(); ++i) {
      const auto& t = tets_[i];
      if (!t.alive) continue;
      if (detail_delaunay::orient3d(pts_[t.v[0]], pts_[t.v[1]], pts_[t.v[2]],
                                    pts_[t.v[3]]) <= 0)
        return false;
      for (int k = 0; k < 4; ++k) {
        int nb = t.nbr[k];
        if (nb == -1) continue;
        if (!tets_[nb].alive) return false;
        bool back = false;
        for (int j = 0; j < 4; ++j) back |= tets_[nb].nbr[j] == int(i);
        if (!back) return false;
      }
    }
    return true;
  }

  const std::vector<Vec3<double>>& points() const { return pts_; }
  int real_point_count() const { return n_real_; }

  /// Alive tetrahedra not touching the enclosing super simplex.
  std::vector<std::array<int, 4>> finite_tets() const {
    std::vector<std::array<int, 4>> out;
    for (const auto& t : tets_) {
      if (!t.alive) continue;
      bool super = false;
      for (int v : t.v) super |= v >= n_real_;
      if (!super) out.push_back(t.v);
    }
    return out;
  }

 private:
  static constexpr int kFace[4][3] = {{1, 3, 2}, {0, 2, 3}, {0, 3, 1}, {0, 1, 2}};

  std::vector<Vec3<double>> pts_;
  std::vector<Tet> tets_;
  std::vector<int> free_;
  std::vector<int> mark_;  // cavity stamps, reused across insertions
  int stamp_ = 0;
  std::uint64_t salt_;
  int n_real_ = 0;
  int hint_ = 0;
  bool paranoid_ = false;

  int orient_face(int tet, int k, const Vec3<double>& p) const {
    const auto& t = tets_[tet];
    return detail_delaunay::orient3d(pts_[t.v[kFace[k][0]]], pts_[t.v[kFace[k][1]]],
                                     pts_[t.v[kFace[k][2]]], p);
  }

  bool in_sphere(int tet, const Vec3<double>& p) const {
    const auto& t = tets_[tet];
    return detail_delaunay::insphere(pts_[t.v[0]], pts_[t.v[1]], pts_[t.v[2]],
                                     pts_[t.v[3]], p, salt_) > 0;
  }

  int locate(const Vec3<double>& p) const {
    int t = hint_;
    for (long guard = 0; t >= 0 && tets_[t].alive && guard < (long)tets_.size() + 8;
         ++guard) {
      bool moved = false;
      for (int k = 0; k < 4; ++k) {
        if (orient_face(t, k, p) < 0) {
          t = tets_[t].nbr[k];
          moved = true;
          break;
        }
      }
      if (!moved) return t;
    }
    // fallback: exhaustive scan (unreachable for points inside the super tet)
    for (size_t i = 0; i < tets_.size(); ++i) {
      if (!tets_[i].alive) continue;
      bool in = true;
      for (int k = 0; k < 4 && in; ++k) in = orient_face(int(i), k, p) >= 0;
      if (in) return int(i);
    }
    throw MosaicError("delaunay: point location failed");
  }

  int alloc_tet() {
    if (!free_.empty()) {
      int ix = free_.back();
      free_.pop_back();
      tets_[ix].alive = true;
      return ix;
    }
    tets_.push_back({});
    mark_.push_back(0);
    return int(tets_.size()) - 1;
  }

  void build() {
    // enclosing simplex far outside the padded unit box
    const double lo = -40, span = 160;
    int s0 = int(pts_.size());
    pts_.push_back({lo, lo, lo});
    pts_.push_back({lo + span, lo, lo});
    pts_.push_back({lo, lo + span, lo});
    pts_.push_back({lo, lo, lo + span});
    if (detail_delaunay::orient3d(pts_[s0], pts_[s0 + 1], pts_[s0 + 2], pts_[s0 + 3]) < 0)
      std::swap(pts_[s0 + 2], pts_[s0 + 3]);
    Tet root;
    root.v = {s0, s0 + 1, s0 + 2, s0 + 3};
    root.nbr = {-1, -1, -1, -1};
    tets_.push_back(root);
    mark_.push_back(0);
    hint_ = 0;

    // deterministic Morton insertion order over the real points
    std::vector<int> order(n_real_);
    for (int i = 0; i < n_real_; ++i) order[i] = i;
    auto morton = [&](int i) {
      auto spread = [](std::uint64_t x) {
        x &= 0x1fffff;
        x = (x | (x << 32)) & 0x1f00000000ffffull;
        x = (x | (x << 16)) & 0x1f0000ff0000ffull;
        x = (x | (x << 8)) & 0x100f00f00f00f00full;
        x = (x | (x << 4)) & 0x10c30c30c30c30c3ull;
        x = (x | (x << 2)) & 0x1249249249249249ull;
        return x;
      };
      const Vec3<double>& p = pts_[i];
      auto q = [&](double c) {
        return std::uint64_t(std::clamp((c + 2.0) / 5.0, 0.0, 1.0) * 2097151.0);
      };
      return spread(q(p.x)) | (spread(q(p.y)) << 1) | (spread(q(p.z)) << 2);
    };
    std::vector<std::uint64_t> keys(n_real_);
    for (int i = 0; i < n_real_; ++i) keys[i] = morton(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return keys[a] != keys[b] ? keys[a] < keys[b] : a < b;
    });
    int count = 0;
    for (int i : order) {
      insert(i);
      ++count;
      if (paranoid_ && !validate_structure())
        throw MosaicError("delaunay: structure broken after insertion " +
                          std::to_string(count));
    }
  }

  void insert(int pi) {
    const Vec3<double>& p = pts_[pi];
    int start = locate(p);
    // cavity of circumsphere conflicts; boundary faces are derived only after
    // the cavity is complete (a neighbor may join through another path)
    const int in_mark = 2 * ++stamp_, out_mark = in_mark + 1;
    std::vector<int> cavity{start};
    mark_[start] = in_mark;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int k = 0; k < 4; ++k) {
        int nb = tets_[t].nbr[k];
        if (nb == -1 || mark_[nb] == in_mark || mark_[nb] == out_mark) continue;
        if (in_sphere(nb, p)) {
          mark_[nb] = in_mark;
          cavity.push_back(nb);
          stack.push_back(nb);
        } else {
          mark_[nb] = out_mark;
        }
      }
    }
    // snapshot boundary faces before any slot is reused by the fill
    struct BFace {
      int f0, f1, f2, outside;
    };
    std::vector<BFace> bfaces;
    for (int t : cavity)
      for (int k = 0; k < 4; ++k) {
        int nb = tets_[t].nbr[k];
        if (nb == -1 || mark_[nb] != in_mark)
          bfaces.push_back({tets_[t].v[kFace[k][0]], tets_[t].v[kFace[k][1]],
                            tets_[t].v[kFace[k][2]], nb});
      }
    for (int t : cavity) {
      tets_[t].alive = false;
      free_.push_back(t);
    }
    // fill: one tet per boundary face, glued along p-edges
    std::unordered_map<std::uint64_t, std::pair<int, int>> edge_glue;
    auto edge_key = [&](int a, int b) {
      if (a > b) std::swap(a, b);
      return (std::uint64_t(std::uint32_t(a)) << 32) | std::uint32_t(b);
    };
    int first_new = -1;
    for (const auto& bf : bfaces) {
      int f0 = bf.f0, f1 = bf.f1, f2 = bf.f2, outside = bf.outside;
      int nt = alloc_tet();
      if (first_new < 0) first_new = nt;
      tets_[nt].v = {f0, f1, f2, pi};
      tets_[nt].nbr = {-1, -1, -1, outside};
      if (outside != -1) {
        // the matching face of the outside tet is the one missing from
        // {f0, f1, f2}
        for (int j = 0; j < 4; ++j) {
          int w = tets_[outside].v[j];
          if (w != f0 && w != f1 && w != f2) {
            tets_[outside].nbr[j] = nt;
            break;
          }
        }
      }
      // faces around p: face 0 across edge (f1, f2), 1 across (f0, f2), 2 across (f0, f1)
      const int pairs[3][2] = {{f1, f2}, {f0, f2}, {f0, f1}};
      for (int j = 0; j < 3; ++j) {
        auto key = edge_key(pairs[j][0], pairs[j][1]);
        auto it = edge_glue.find(key);
        if (it == edge_glue.end()) {
          edge_glue.emplace(key, std::make_pair(nt, j));
        } else {
          tets_[nt].nbr[j] = it->second.first;
          tets_[it->second.first].nbr[it->second.second] = nt;
        }
      }
    }
    hint_ = first_new;
  }
};

// ---------------------------------------------------------------------------
// torus (periodic) Delaunay via padded copies + orbit deduplication

struct TorusTet {
  std::array<int, 4> owner;                 // original point ids
  std::array<std::array<int, 3>, 4> shift;  // canonical shifts (min = 0)
};

struct TorusDelaunay {
  long long V = 0, E = 0, F = 0, T = 0;
  double volume = 0;      // sum of tet volumes; 1 for a valid tiling
  double max_radius = 0;  // largest circumradius among the kept tetrahedra
  double margin = 0;
  std::vector<TorusTet> tets;
  bool euler_ok() const { return V - E + F - T == 0 && F == 2 * T && E == V + T; }
};

namespace detail_delaunay {

struct ArrayHash {
  template <class A>
  std::size_t operator()(const A& a) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : a) h = splitmix64(h ^ std::uint64_t(x));
    return std::size_t(h);
  }
};

inline bool circumsphere(const Vec3<double>& a, const Vec3<double>& b, const Vec3<double>& c,
                         const Vec3<double>& d, Vec3<double>* center, double* radius) {
  Vec3<double> u = b - a, v = c - a, w = d - a;
  double det = 2 * dot(u, cross(v, w));
  if (det == 0) return false;
  Vec3<double> rhs = cross(v, w) * dot(u, u) + cross(w, u) * dot(v, v) +
                     cross(u, v) * dot(w, w);
  Vec3<double> off = rhs * (1.0 / det);
  *center = a + off;
  *radius = norm(off);
  return true;
}

}  // namespace detail_delaunay

inline TorusDelaunay periodic_delaunay_with_margin(const PoissonSample& sample, double margin) {
  const auto& pts = sample.points;
  const int n = int(pts.size());
  if (n < 5) throw TooFewPoints("periodic_delaunay needs at least 5 points");

  // Exact translates are structurally degenerate (copies of one point are
  // cospherical on cube-corner patterns; p, q, p+s, q+s are coplanar), so each
  // copy gets a deterministic infinitesimal jitter keyed on (owner, shift).
  // Certified tetrahedra have slack far above the jitter scale, so the kept
  // orbit set equals the exact torus Delaunay complex.
  auto jitter = [](int i, int sx, int sy, int sz, int axis) {
    std::uint64_t h = splitmix64(std::uint64_t(i) * 131 + std::uint64_t(axis + 5));
    h = splitmix64(h ^ std::uint64_t((sx + 1) * 9 + (sy + 1) * 3 + (sz + 1)));
    return (double(h >> 11) / double(1ull << 53) - 0.5) * 1e-10;
  };
  std::vector<Vec3<double>> padded;
  std::vector<int> owner;
  std::vector<std::array<int, 3>> shift;
  for (int sx = -1; sx <= 1; ++sx)
    for (int sy = -1; sy <= 1; ++sy)
      for (int sz = -1; sz <= 1; ++sz)
        for (int i = 0; i < n; ++i) {
          Vec3<double> q = pts[i] + Vec3<double>(sx, sy, sz);
          if (q.x < -margin || q.x > 1 + margin || q.y < -margin || q.y > 1 + margin ||
              q.z < -margin || q.z > 1 + margin)
            continue;
          q.x += jitter(i, sx, sy, sz, 0);
          q.y += jitter(i, sx, sy, sz, 1);
          q.z += jitter(i, sx, sy, sz, 2);
          padded.push_back(q);
          owner.push_back(i);
          shift.push_back({sx, sy, sz});
        }

  Triangulation3 tri(padded, sample.seed);

  TorusDelaunay out;
  out.margin = margin;
  std::unordered_map<std::array<std::uint64_t, 4>, TorusTet, detail_delaunay::ArrayHash> orbit;
  for (const auto& tv : tri.finite_tets()) {
    Vec3<double> c;
    double r;
    if (!detail_delaunay::circumsphere(tri.points()[tv[0]], tri.points()[tv[1]],
                                       tri.points()[tv[2]], tri.points()[tv[3]], &c, &r))
      continue;
    if (c.x - r < -margin || c.x + r > 1 + margin || c.y - r < -margin ||
        c.y + r > 1 + margin || c.z - r < -margin || c.z + r > 1 + margin)
      continue;  // circumsphere exits the populated region: not torus-certified
    TorusTet tt;
    int mins[3] = {1 << 20, 1 << 20, 1 << 20};
    for (int k = 0; k < 4; ++k) {
      tt.owner[k] = owner[tv[k]];
      tt.shift[k] = shift[tv[k]];
      for (int j = 0; j < 3; ++j) mins[j] = std::min(mins[j], tt.shift[k][j]);
    }
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 3; ++j) tt.shift[k][j] -= mins[j];
    std::array<std::uint64_t, 4> key;
    for (int k = 0; k < 4; ++k)
      key[k] = (std::uint64_t(tt.owner[k]) << 9) | (std::uint64_t(tt.shift[k][0]) << 6) |
               (std::uint64_t(tt.shift[k][1]) << 3) | std::uint64_t(tt.shift[k][2]);
    std::sort(key.begin(), key.end());
    if (orbit.emplace(key, tt).second) {
      out.max_radius = std::max(out.max_radius, r);
      out.volume += std::abs(to_double(orient3(tri.points()[tv[0]], tri.points()[tv[1]],
                                               tri.points()[tv[2]], tri.points()[tv[3]]))) /
                    6.0;
    }
  }

  out.T = (long long)orbit.size();
  std::unordered_map<std::array<std::uint64_t, 3>, int, detail_delaunay::ArrayHash> faces;
  std::unordered_map<std::array<std::uint64_t, 2>, int, detail_delaunay::ArrayHash> edges;
  std::vector<char> seen_owner(n, 0);
  for (const auto& [key, tt] : orbit) {
    out.tets.push_back(tt);
    for (int k = 0; k < 4; ++k) seen_owner[tt.owner[k]] = 1;
    for (int skip = 0; skip < 4; ++skip) {
      std::array<std::uint64_t, 3> fkey;
      int mins[3] = {1 << 20, 1 << 20, 1 << 20};
      for (int k = 0, j = 0; k < 4; ++k) {
        if (k == skip) continue;
        for (int d = 0; d < 3; ++d) mins[d] = std::min(mins[d], tt.shift[k][d]);
        ++j;
      }
      int j = 0;
      for (int k = 0; k < 4; ++k) {
        if (k == skip) continue;
        fkey[j++] = (std::uint64_t(tt.owner[k]) << 9) |
                    (std::uint64_t(tt.shift[k][0] - mins[0]) << 6) |
                    (std::uint64_t(tt.shift[k][1] - mins[1]) << 3) |
                    std::uint64_t(tt.shift[k][2] - mins[2]);
      }
      std::sort(fkey.begin(), fkey.end());
      faces[fkey]++;
    }
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        std::array<std::uint64_t, 2> ekey;
        int mins[3];
        for (int d = 0; d < 3; ++d) mins[d] = std::min(tt.shift[a][d], tt.shift[b][d]);
        ekey[0] = (std::uint64_t(tt.owner[a]) << 9) |
                  (std::uint64_t(tt.shift[a][0] - mins[0]) << 6) |
                  (std::uint64_t(tt.shift[a][1] - mins[1]) << 3) |
                  std::uint64_t(tt.shift[a][2] - mins[2]);
        ekey[1] = (std::uint64_t(tt.owner[b]) << 9) |
                  (std::uint64_t(tt.shift[b][0] - mins[0]) << 6) |
                  (std::uint64_t(tt.shift[b][1] - mins[1]) << 3) |
                  std::uint64_t(tt.shift[b][2] - mins[2]);
        if (ekey[0] > ekey[1]) std::swap(ekey[0], ekey[1]);
        edges.emplace(ekey, 0);
      }
  }
  out.F = (long long)faces.size();
  out.E = (long long)edges.size();
  out.V = 0;
  for (char s : seen_owner) out.V += s;
  for (const auto& [k, cnt] : faces)
    if (cnt != 2) out.F = -1;  // multiplicity violation: flagged for the caller
  return out;
}

/// Delaunay triangulation of the 3-torus. The definition pads every point
/// with its 26 neighbor copies and deduplicates orbits; for large samples the
/// copies are trimmed to a margin and every kept tetrahedron is certified by
/// its circumsphere staying inside the populated region. The margin grows
/// until the certificate and the torus Euler identities hold.
inline TorusDelaunay periodic_delaunay(const PoissonSample& sample) {
  const int n = int(sample.points.size());
  if (n < 5) throw TooFewPoints("periodic_delaunay needs at least 5 points");
  double margin =
      n <= 600 ? 1.0
               : std::min(1.0, 4.0 * std::cbrt(3.0 * std::log(double(n)) /
                                               (4.0 * kPi * double(n))));
  for (;;) {
    auto out = periodic_delaunay_with_margin(sample, margin);
    bool ok = out.euler_ok() && out.V == n && std::abs(out.volume - 1.0) < 1e-9 &&
              out.max_radius < margin;
    if (ok) return out;
    if (margin >= 1.0)
      throw MosaicError("periodic_delaunay: torus certificate failed at full padding");
    margin = std::min(1.0, margin * 1.6);
  }
}

// ---------------------------------------------------------------------------
// Poisson-Voronoi / Poisson-Delaunay statistics

struct ReplicateStats {
  long long points = 0, T = 0, E = 0, F = 0;
  double n_bar = 0, v_bar = 0, f_bar = 0, h_bar = 0;
};

struct RandomStats {
  double n_bar = 0, v_bar = 0, f_bar = 0, h_bar = 0;
  double n_se = 0, v_se = 0, f_se = 0, h_se = 0;
  long long replicates = 0;
  std::uint64_t seed = 0;
  std::vector<ReplicateStats> rows;
};

/// Bulk statistics of the Poisson-Voronoi mosaic (or its Delaunay dual) from
/// periodic triangulations: n = 4 exactly for Voronoi (generic nodes are
/// circumcenters of tetrahedra), v = 4T/N by incidence balance, and
/// f = 2 + v/2 from the torus Euler relation E = V + T.
inline RandomStats voronoi_delaunay_stats(long long N, int reps, std::uint64_t seed,
                                          bool delaunay_side = false) {
  if (N < 100) throw TooFewPoints("voronoi_delaunay_stats needs N >= 100");
  if (reps < 1) throw MosaicError("need at least one replicate");
  RandomStats out;
  out.seed = seed;
  out.replicates = reps;
  for (int r = 0; r < reps; ++r) {
    auto sample = poisson_sample(double(N), splitmix64(seed ^ (0xabcd0000ull + r)));
    auto D = periodic_delaunay(sample);
    ReplicateStats row;
    row.points = D.V;
    row.T = D.T;
    row.E = D.E;
    row.F = D.F;
    double vor_v = 4.0 * double(D.T) / double(D.V);
    if (!delaunay_side) {
      row.n_bar = 4.0;
      row.v_bar = vor_v;
      row.f_bar = 2.0 + vor_v / 2.0;  // exact per replicate via E = V + T
    } else {
      row.n_bar = vor_v;
      row.v_bar = 4.0;
      row.f_bar = 4.0;
    }
    row.h_bar = row.n_bar * row.v_bar / (row.n_bar + row.v_bar);
    out.rows.push_back(row);
  }
  auto mean_se = [&](auto get, double* mean, double* se) {
    double m = 0;
    for (const auto& row : out.rows) m += get(row);
    m /= double(out.rows.size());
    double var = 0;
    for (const auto& row : out.rows) var += (get(row) - m) * (get(row) - m);
    var = out.rows.size() > 1 ? var / double(out.rows.size() - 1) : 0.0;
    *mean = m;
    *se = std::sqrt(var / double(out.rows.size()));
  };
  mean_se([](const ReplicateStats& r) { return r.n_bar; }, &out.n_bar, &out.n_se);
  mean_se([](const ReplicateStats& r) { return r.v_bar; }, &out.v_bar, &out.v_se);
  mean_se([](const ReplicateStats& r) { return r.f_bar; }, &out.f_bar, &out.f_se);
  mean_se([](const ReplicateStats& r) { return r.h_bar; }, &out.h_bar, &out.h_se);
  return out;
}

// ---------------------------------------------------------------------------
// generic hyperplane arrangements (closed forms)

struct ArrangementStats {
  Int cells, vertices, incidences;
  Rational v_bar;  // 8 C(m,3) / cells
  Rational n_bar;  // exactly 8 at every node
};

inline Int binomial(long m, int k) {
  Int r = 1;
  for (int i = 0; i < k; ++i) r = r * (m - i) / (i + 1);
  return r;
}

inline ArrangementStats hyperplane_arrangement_stats(long m) {
  if (m < 3) throw TooFewPlanes("arrangements need at least 3 planes");
  ArrangementStats out;
  out.vertices = binomial(m, 3);
  out.cells = 1 + Int(m) + binomial(m, 2) + binomial(m, 3);
  out.incidences = 8 * binomial(m, 3);
  out.v_bar = Rational(out.incidences, out.cells);
  out.n_bar = 8;
  return out;
}

}  // namespace mosaic
