#pragma once

#include "mosaic/formulas.hpp"
#include "mosaic/geom.hpp"

#include <cmath>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace mosaic {

struct OriginNotInterior : MosaicError {
  using MosaicError::MosaicError;
};

// ---------------------------------------------------------------------------
// polyhedron catalog: Platonic + Archimedean + prisms/antiprisms.
// The cubic-symmetry family carries exact rational coordinates; icosahedral
// solids use doubles with a 1e-12 snap. Counts and face lattices are exact
// either way.

namespace detail_spherical {

inline double snap(double x) { return std::round(x * 1e12) / 1e12; }

inline Polytope<double> to_double_poly(const Polytope<Rational>& P) {
  Polytope<double> D;
  D.dim = P.dim;
  for (const auto& v : P.verts) D.verts.push_back(vec_to_double(v));
  D.facets = P.facets;
  return D;
}

inline std::vector<Vec3<Rational>> sign_perms(std::vector<Rational> base, bool all_perms = true) {
  std::vector<Vec3<Rational>> out;
  std::sort(base.begin(), base.end());
  std::vector<std::vector<Rational>> perms;
  do {
    perms.push_back(base);
  } while (all_perms && std::next_permutation(base.begin(), base.end()));
  for (const auto& p : perms)
    for (int sx : {-1, 1})
      for (int sy : {-1, 1})
        for (int sz : {-1, 1}) {
          Vec3<Rational> v(p[0] * sx, p[1] * sy, p[2] * sz);
          out.push_back(v);
        }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<Vec3<double>> phi_family(const std::string& name) {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<std::array<double, 3>> seeds;
  bool even_perms_only = false;
  bool chiral = false;
  if (name == "icosahedron") {
    seeds = {{0, 1, phi}};
    even_perms_only = true;  // cyclic permutations suffice here
  } else if (name == "dodecahedron") {
    return [] {
      std::vector<Vec3<double>> v;
      const double phi = (1 + std::sqrt(5.0)) / 2;
      for (int sx : {-1, 1})
        for (int sy : {-1, 1})
          for (int sz : {-1, 1}) v.push_back({double(sx), double(sy), double(sz)});
      for (int a : {-1, 1})
        for (int b : {-1, 1}) {
          v.push_back({0, a / phi, b * phi});
          v.push_back({a / phi, b * phi, 0});
          v.push_back({b * phi, 0, a / phi});
        }
      return v;
    }();
  } else if (name == "icosidodecahedron") {
    std::vector<Vec3<double>> v;
    for (int a : {-1, 1}) {
      v.push_back({a * phi, 0, 0});
      v.push_back({0, a * phi, 0});
      v.push_back({0, 0, a * phi});
    }
    for (int sx : {-1, 1})
      for (int sy : {-1, 1})
        for (int sz : {-1, 1}) {
          v.push_back({sx * 0.5, sy * phi / 2, sz * (phi * phi) / 2});
          v.push_back({sy * phi / 2, sz * (phi * phi) / 2, sx * 0.5});
          v.push_back({sz * (phi * phi) / 2, sx * 0.5, sy * phi / 2});
        }
    return v;
  } else if (name == "truncated_dodecahedron") {
    std::vector<Vec3<double>> v;
    auto cyc = [&](double a, double b, double c) {
      v.push_back({a, b, c});
      v.push_back({b, c, a});
      v.push_back({c, a, b});
    };
    for (int s1 : {-1, 1})
      for (int s2 : {-1, 1})
        for (int s3 : {-1, 1}) {
          cyc(0, s1 * 1 / phi, s2 * (2 + phi));
          (void)s3;
        }
    for (int s1 : {-1, 1})
      for (int s2 : {-1, 1})
        for (int s3 : {-1, 1}) {
          cyc(s1 * 1 / phi, s2 * phi, s3 * 2 * phi);
          cyc(s1 * phi, s2 * 2, s3 * (phi + 1));
        }
    return v;
  } else if (name == "truncated_icosahedron") {
    std::vector<Vec3<double>> v;
    auto cyc = [&](double a, double b, double c) {
      v.push_back({a, b, c});
      v.push_back({b, c, a});
      v.push_back({c, a, b});
    };
    for (int s1 : {-1, 1})
      for (int s2 : {-1, 1}) {
        cyc(0, s1 * 1, s2 * 3 * phi);
      }
    for (int s1 : {-1, 1})
      for (int s2 : {-1, 1})
        for (int s3 : {-1, 1}) {
          cyc(s1 * 1, s2 * (2 + phi), s3 * 2 * phi);
          cyc(s1 * 2, s2 * (1 + 2 * phi), s3 * phi);
        }
    return v;
  } else if (name == "rhombicosidodecahedron") {
    std::vector<Vec3<double>> v;
    auto cyc = [&](double a, double b, double c) {
      v.push_back({a, b, c});
      v.push_back({b, c, a});
      v.push_back({c, a, b});
    };
    double p2 = phi * phi, p3 = phi * phi * phi;
    for (int s1 : {-1, 1})
      for (int s2 : {-1, 1})
        for (int s3 : {-1, 1}) {
          cyc(s1 * 1, s2 * 1, s3 * p3);
          cyc(s1 * p2, s2 * phi, s3 * 2 * phi);
        }
    for (int s1 : {-1, 1})
      for (int s2 : {-1, 1}) {
        cyc(s1 * (2 + phi), 0, s2 * p2);
      }
    return v;
  } else if (name == "truncated_icosidodecahedron") {
    std::vector<Vec3<double>> v;
    auto cyc = [&](double a, double b, double c) {
      v.push_back({a, b, c});
      v.push_back({b, c, a});
      v.push_back({c, a, b});
    };
    double ip = 1 / phi;
    for (int s1 : {-1, 1})
      for (int s2 : {-1, 1})
        for (int s3 : {-1, 1}) {
          cyc(s1 * ip, s2 * ip, s3 * (3 + phi));
          cyc(s1 * 2 * ip, s2 * phi, s3 * (1 + 2 * phi));
          cyc(s1 * ip, s2 * phi * phi, s3 * (-1 + 3 * phi));
          cyc(s1 * (2 * phi - 1), s2 * 2, s3 * (2 + phi));
          cyc(s1 * phi, s2 * 3, s3 * 2 * phi);
        }
    return v;
  } else if (name == "snub_cube") {
    // tribonacci constant
    double t = 1.8392867552141612;
    std::vector<Vec3<double>> v;
    double c[3] = {1, 1 / t, t};
    // even permutations with an even number of minus signs, odd with odd
    int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    for (int pi = 0; pi < 6; ++pi)
      for (int sx : {-1, 1})
        for (int sy : {-1, 1})
          for (int sz : {-1, 1}) {
            int minus = (sx < 0) + (sy < 0) + (sz < 0);
            bool even_perm = pi < 3;
            if ((minus % 2 == 0) != even_perm) continue;
            v.push_back({sx * c[perms[pi][0]], sy * c[perms[pi][1]], sz * c[perms[pi][2]]});
          }
    return v;
  } else if (name == "snub_dodecahedron") {
    // seed vertex orbit under the 60 icosahedral rotations
    const double xi = 0.94315125924; // real root of x^3 = x + phi... snub parameter
    std::vector<Vec3<double>> base;
    double a = xi - 1 / xi;
    double b = xi * phi + phi * phi + phi / xi;
    // standard even-permutation/sign recipe for the snub dodecahedron
    auto cyc = [&](std::vector<Vec3<double>>& out, double x, double y, double z) {
      out.push_back({x, y, z});
      out.push_back({y, z, x});
      out.push_back({z, x, y});
    };
    std::vector<std::array<double, 3>> rows = {
        {2 * a, 2, 2 * b},
        {a + b / phi + phi, -a * phi + b + 1 / phi, a / phi + b * phi - 1},
        {a + b / phi - phi, a * phi - b + 1 / phi, a / phi + b * phi + 1},
        {-a / phi + b * phi + 1, -a + b / phi - phi, a * phi + b - 1 / phi},
        {-a / phi + b * phi - 1, a - b / phi - phi, a * phi + b + 1 / phi}};
    std::vector<Vec3<double>> v;
    for (auto& r : rows)
      for (int s1 : {-1, 1})
        for (int s2 : {-1, 1})
          for (int s3 : {-1, 1}) {
            int minus = (s1 < 0) + (s2 < 0) + (s3 < 0);
            if (minus % 2 != 0) continue;
            cyc(v, s1 * r[0], s2 * r[1], s3 * r[2]);
          }
    return v;
  }
  (void)even_perms_only;
  (void)chiral;
  // icosahedron: cyclic permutations of (0, ±1, ±phi)
  std::vector<Vec3<double>> v;
  for (int a : {-1, 1})
    for (int b : {-1, 1}) {
      v.push_back({0, a * 1.0, b * phi});
      v.push_back({a * 1.0, b * phi, 0});
      v.push_back({b * phi, 0, a * 1.0});
    }
  return v;
}

}  // namespace detail_spherical

inline std::vector<std::string> polyhedron_catalog() {
  std::vector<std::string> names = {
      "tetrahedron",     "cube",
      "octahedron",      "dodecahedron",
      "icosahedron",     "truncated_tetrahedron",
      "cuboctahedron",   "truncated_cube",
      "truncated_octahedron",
      "rhombicuboctahedron", "truncated_cuboctahedron",
      "snub_cube",       "icosidodecahedron",
      "truncated_dodecahedron", "truncated_icosahedron",
      "rhombicosidodecahedron", "truncated_icosidodecahedron",
      "snub_dodecahedron"};
  for (int n = 3; n <= 12; ++n) {
    names.push_back("prism_" + std::to_string(n));
    names.push_back("antiprism_" + std::to_string(n));
  }
  return names;
}

/// Catalog polyhedron centered at the origin. Rational solids are hulled
/// exactly; icosahedral solids in double precision (1e-12 snap).
inline Polytope<double> catalog_polyhedron(const std::string& name) {
  using detail_spherical::sign_perms;
  using detail_spherical::to_double_poly;

  auto exact = [&](const std::vector<Vec3<Rational>>& pts) {
    return to_double_poly(convex_hull(pts, 3));
  };

  if (name == "tetrahedron")
    return exact({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
  if (name == "cube") return exact(sign_perms({1, 1, 1}, false));
  if (name == "octahedron") return exact(sign_perms({0, 0, 1}));
  if (name == "truncated_tetrahedron") {
    // corners of the (1,1,1) tetrahedron cut at one third
    std::vector<Vec3<Rational>> pts;
    const Vec3<Rational> corners[4] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) pts.push_back(corners[i] + (corners[j] - corners[i]) * rat(1, 3));
    return exact(pts);
  }
  if (name == "cuboctahedron") return exact(sign_perms({0, 1, 1}));
  if (name == "truncated_cube") {
    // cube corners cut at one third: combinatorially exact, octagons irregular
    std::vector<Vec3<Rational>> pts;
    for (int sx : {-1, 1})
      for (int sy : {-1, 1})
        for (int sz : {-1, 1}) {
          Vec3<Rational> c(sx, sy, sz);
          for (int ax = 0; ax < 3; ++ax) {
            Vec3<Rational> p = c;
            (ax == 0 ? p.x : ax == 1 ? p.y : p.z) *= rat(1, 3);
            pts.push_back(p);
          }
        }
    return exact(pts);
  }
  if (name == "truncated_octahedron") return exact(sign_perms({0, 1, 2}));
  if (name == "rhombicuboctahedron") return exact(sign_perms({1, 1, 2}));
  if (name == "truncated_cuboctahedron") return exact(sign_perms({1, 2, 3}));

  if (name.rfind("prism_", 0) == 0 || name.rfind("antiprism_", 0) == 0) {
    bool anti = name[0] == 'a';
    int n = std::stoi(name.substr(anti ? 10 : 6));
    if (n < 3 || n > 12) throw UnknownName("prism index out of range: " + name);
    Polytope<double> P;
    P.dim = 3;
    double h = anti ? 0.8 : 1.0;
    for (int ring = 0; ring < 2; ++ring) {
      double off = anti && ring ? kPi / n : 0.0;
      for (int k = 0; k < n; ++k) {
        double a = 2 * kPi * k / n + off;
        P.verts.push_back({std::cos(a), std::sin(a), ring ? h : -h});
      }
    }
    std::vector<int> bottom, top;
    for (int k = n - 1; k >= 0; --k) bottom.push_back(k);
    for (int k = 0; k < n; ++k) top.push_back(n + k);
    P.facets.push_back(bottom);
    P.facets.push_back(top);
    for (int k = 0; k < n; ++k) {
      int k1 = (k + 1) % n;
      if (anti) {
        P.facets.push_back({k, k1, n + k});
        P.facets.push_back({k1, n + k1, n + k});
      } else {
        P.facets.push_back({k, k1, n + k1, n + k});
      }
    }
    return P;
  }

  // icosahedral family in doubles
  auto pts = detail_spherical::phi_family(name);
  if (pts.empty()) throw UnknownName("unknown polyhedron: " + name);
  for (auto& p : pts) {
    p.x = detail_spherical::snap(p.x);
    p.y = detail_spherical::snap(p.y);
    p.z = detail_spherical::snap(p.z);
  }
  return convex_hull_3d<DoubleKernel>(pts);
}

// ---------------------------------------------------------------------------
// spherical mosaics by central projection

struct SphericalMosaic {
  Polytope<double> source;
  long N_c = 0, N_v = 0, N_e = 0;
  std::vector<double> cell_areas;  // spherical areas of the projected facets
};

inline SphericalMosaic from_polyhedron(const Polytope<double>& P) {
  if (P.dim != 3) throw DimensionMismatch("spherical mosaics project 3D polyhedra");
  if (!P.contains({0, 0, 0}, true))
    throw OriginNotInterior("polyhedron must contain the origin in its interior");
  SphericalMosaic S;
  S.source = P;
  S.N_c = long(P.facets.size());
  S.N_v = long(P.verts.size());
  S.N_e = long(P.edges().size());
  for (const auto& f : P.facets) {
    std::vector<Vec3<double>> dirs;
    for (int v : f) dirs.push_back(normalized(P.verts[v]));
    S.cell_areas.push_back(spherical_polygon_area(dirs));
  }
  return S;
}

struct SphericalStats {
  Rational n_bar, v_bar, mu_bar, h_bar;
  double omega_bar = 0;  // average total angle, satisfies h * omega = 2 pi
};

inline SphericalStats spherical_stats(const SphericalMosaic& S) {
  SphericalStats out;
  out.n_bar = Rational(2 * S.N_e, S.N_v);
  out.v_bar = Rational(2 * S.N_e, S.N_c);
  out.mu_bar = Rational(4, S.N_c + S.N_v);
  out.h_bar = harmonic_degree(out.n_bar, out.v_bar);
  double area_sum = 0;
  for (double a : S.cell_areas) area_sum += a;
  // omega = (pi * sum of cell degrees + total area) / (2 E), measured from the
  // spherical angles through the polygon areas
  out.omega_bar = (kPi * 2 * double(S.N_e) + area_sum) / (2 * double(S.N_e));
  return out;
}

// ---------------------------------------------------------------------------
// polarity

/// Polar dual: one vertex per facet plane (n/c for the plane n.x = c), then
/// the hull. Needs the origin strictly inside.
template <class T>
Polytope<T> polar_dual(const Polytope<T>& P) {
  if (!P.contains(Vec3<T>(T(0), T(0), T(0)), true))
    throw OriginNotInterior("polar dual needs the origin in the interior");
  std::vector<Vec3<T>> poles;
  for (size_t i = 0; i < P.facets.size(); ++i) {
    auto [n, c] = P.facet_plane(int(i));
    poles.push_back(n * (T(1) / c));
  }
  if constexpr (std::is_same_v<T, double>)
    return convex_hull_3d<DoubleKernel>(poles);
  else
    return convex_hull(poles, 3);
}

// ---------------------------------------------------------------------------
// OFF-style input

inline Polytope<double> parse_off(std::istream& in) {
  std::string tok;
  if (!(in >> tok)) throw MosaicError("OFF: empty input");
  if (tok == "OFF") {
    if (!(in >> tok)) throw MosaicError("OFF: missing counts");
  }
  long nv = 0;
  try {
    nv = std::stol(tok);
  } catch (const std::exception&) {
    throw MosaicError("OFF: bad vertex count: " + tok);
  }
  long nf, ne;
  if (!(in >> nf >> ne)) throw MosaicError("OFF: missing counts");
  (void)ne;
  Polytope<double> P;
  P.dim = 3;
  for (long i = 0; i < nv; ++i) {
    double x, y, z;
    if (!(in >> x >> y >> z)) throw MosaicError("OFF: bad vertex line");
    P.verts.push_back({x, y, z});
  }
  for (long i = 0; i < nf; ++i) {
    int k;
    if (!(in >> k) || k < 3) throw MosaicError("OFF: bad facet line");
    std::vector<int> f(k);
    for (int j = 0; j < k; ++j) {
      if (!(in >> f[j]) || f[j] < 0 || f[j] >= nv) throw MosaicError("OFF: bad facet index");
    }
    P.facets.push_back(f);
  }
  // orient all facets outward relative to the vertex mean
  Vec3<double> mean = P.vertex_mean();
  for (auto& f : P.facets) {
    auto plane_normal = [&] {
      Vec3<double> n{0, 0, 0};
      for (size_t k = 0; k < f.size(); ++k)
        n += cross(P.verts[f[k]] - mean, P.verts[f[(k + 1) % f.size()]] - mean);
      return n;
    };
    if (dot(plane_normal(), P.verts[f[0]] - mean) < 0) std::reverse(f.begin(), f.end());
  }
  if (!P.euler_ok()) throw MosaicError("OFF: face lattice fails the Euler relation");
  return P;
}

inline Polytope<double> parse_off(const std::string& text) {
  std::istringstream in(text);
  return parse_off(in);
}

inline std::string to_off(const Polytope<double>& P) {
  std::ostringstream out;
  out << "OFF\n" << P.verts.size() << " " << P.facets.size() << " " << P.edges().size() << "\n";
  out.precision(17);
  for (const auto& v : P.verts) out << v.x << " " << v.y << " " << v.z << "\n";
  for (const auto& f : P.facets) {
    out << f.size();
    for (int v : f) out << " " << v;
    out << "\n";
  }
  return out.str();
}

}  // namespace mosaic
