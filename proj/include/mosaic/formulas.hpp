#pragma once

#include "mosaic/rational.hpp"

#include <cmath>
#include <string>
#include <tuple>

namespace mosaic {

struct NonPositive : MosaicError {
  using MosaicError::MosaicError;
};
struct BelowSimplexDegree : MosaicError {
  using MosaicError::MosaicError;
};
struct NotAHoneycomb : MosaicError {
  using MosaicError::MosaicError;
};
struct DegenerateDenominator : MosaicError {
  using MosaicError::MosaicError;
};

/// Harmonic degree of a mosaic with average nodal degree n and cell degree v.
inline Rational harmonic_degree(const Rational& n_bar, const Rational& v_bar) {
  if (sign(n_bar) <= 0 || sign(v_bar) <= 0) throw NonPositive("degrees must be positive");
  return n_bar * v_bar / (n_bar + v_bar);
}

/// Harmonic degree of a generic hyperplane mosaic in dimension d.
inline Rational hyperplane_h(int d) {
  if (d < 1) throw NonPositive("dimension must be at least 1");
  Rational h(1);
  for (int k = 1; k < d; ++k) h *= 2;
  return h;
}

/// k applications of x -> (d+1)^2 x / (d+1+x); fixed point d(d+1).
inline Rational foam_recursion(Rational x, int d, int k) {
  if (!(x >= Rational(d + 1))) throw BelowSimplexDegree("foam recursion needs x >= d+1");
  Rational dd(d + 1);
  for (int i = 0; i < k; ++i) x = dd * dd * x / (dd + x);
  return x;
}

inline Int factorial(int n) {
  Int f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

/// (n, v, h) of the first barycentric subdivision of the cubic lattice:
/// n = (d+1)!, v = d+1, h = (d+1)!/(1+d!), with d <= h < d+1.
inline std::tuple<Rational, Rational, Rational> barycentric_degrees(int d) {
  if (d < 1) throw NonPositive("dimension must be at least 1");
  Rational n(factorial(d + 1));
  Rational v(d + 1);
  Rational h = Rational(factorial(d + 1), 1 + factorial(d));
  if (!(Rational(d) <= h && h < Rational(d + 1)))
    throw MosaicError("barycentric degree left its proven range");
  return {n, v, h};
}

inline Rational h_lower_bound(int d) {
  if (d < 1) throw NonPositive("dimension must be at least 1");
  return Rational(d + 1, 2);
}

struct Refined3dBound {
  Rational n_lower;  // max{4, 2v/(2v-7)}
  Rational h_floor;  // 28/13
};

inline Refined3dBound refined_3d_bound(const Rational& v_bar) {
  if (!(v_bar >= 4)) throw NonPositive("3D mosaics have v >= 4");
  Rational cand = 2 * v_bar / (2 * v_bar - 7);
  Refined3dBound out;
  out.n_lower = cand > 4 ? cand : Rational(4);
  out.h_floor = Rational(28, 13);
  return out;
}

enum class CurvatureClass { kSpherical, kEuclidean, kHyperbolic };

inline std::string to_string(CurvatureClass c) {
  switch (c) {
    case CurvatureClass::kSpherical: return "spherical";
    case CurvatureClass::kEuclidean: return "euclidean";
    default: return "hyperbolic";
  }
}

/// Sign of 1/p + 1/q - 1/2 decides the geometry of the regular mosaic {p,q}.
inline CurvatureClass schlafli_classify(int p, int q) {
  if (p < 3 || q < 3) throw NonPositive("Schlafli entries must be >= 3");
  Rational s = Rational(1, p) + Rational(1, q) - Rational(1, 2);
  int sg = sign(s);
  if (sg > 0) return CurvatureClass::kSpherical;
  if (sg == 0) return CurvatureClass::kEuclidean;
  return CurvatureClass::kHyperbolic;
}

struct PlatonicCounts {
  int v, e, f;
};

/// Exact data of the five Platonic solids, keyed by Schlafli pair.
inline PlatonicCounts platonic_counts(int p, int q) {
  if (schlafli_classify(p, q) != CurvatureClass::kSpherical)
    throw NotAHoneycomb("{" + std::to_string(p) + "," + std::to_string(q) +
                        "} is not a spherical pair");
  if (p == 3 && q == 3) return {4, 6, 4};
  if (p == 4 && q == 3) return {8, 12, 6};
  if (p == 3 && q == 4) return {6, 12, 8};
  if (p == 5 && q == 3) return {20, 30, 12};
  if (p == 3 && q == 5) return {12, 30, 20};
  throw NotAHoneycomb("no Platonic solid with those indices");
}

/// Closed-form cross-check: v = 4p / (4 - (p-2)(q-2)).
inline PlatonicCounts platonic_counts_formula(int p, int q) {
  int den = 4 - (p - 2) * (q - 2);
  if (den <= 0) throw NotAHoneycomb("formula denominator not positive");
  if ((4 * p) % den || (4 * q) % den || (2 * p * q) % den)
    throw NotAHoneycomb("formula does not give integers");
  return {4 * p / den, 2 * p * q / den, 4 * q / den};
}

struct RegularHoneycomb {
  Rational n_bar, v_bar, h_bar;
  CurvatureClass curvature;
};

/// {p,q,r} honeycomb: cells {p,q}, vertex figures {q,r}; v = vertices of the
/// cell, n = facets of the vertex figure. Curvature from the sign of
/// sin(pi/p) sin(pi/r) - cos(pi/q).
inline RegularHoneycomb regular_honeycomb_stats(int p, int q, int r) {
  auto cell = platonic_counts(p, q);
  auto figure = platonic_counts(q, r);
  RegularHoneycomb out;
  out.v_bar = cell.v;
  out.n_bar = figure.f;
  out.h_bar = harmonic_degree(out.n_bar, out.v_bar);
  double s = std::sin(kPi / p) * std::sin(kPi / r) - std::cos(kPi / q);
  if (std::abs(s) < 1e-9)
    out.curvature = CurvatureClass::kEuclidean;  // only {4,3,4} among valid triples
  else
    out.curvature = s > 0 ? CurvatureClass::kSpherical : CurvatureClass::kHyperbolic;
  return out;
}

/// Planar non-face-to-face relation, both readings: the printed formula
/// 2v/(v-p-1) and the angle-sum derivation (1+p)v/(v-2). They agree at p = 1.
inline std::pair<Rational, Rational> planar_nff_relation(const Rational& v_bar,
                                                         const Rational& p) {
  if (sign(p) < 0 || p > 1) throw NonPositive("regular-node proportion must be in [0,1]");
  if (!(v_bar > 2)) throw NonPositive("planar cells have v > 2");
  Rational d1 = v_bar - p - 1;
  Rational d2 = v_bar - 2;
  if (sign(d1) == 0 || sign(d2) == 0) throw DegenerateDenominator("nff relation denominator is zero");
  return {2 * v_bar / d1, (1 + p) * v_bar / d2};
}

/// Spherical non-face-to-face relation: v = (2-mu) n / (n + mu - 1 - p).
inline Rational spherical_nff_relation(const Rational& n_bar, const Rational& mu_bar,
                                       const Rational& p) {
  Rational den = n_bar + mu_bar - 1 - p;
  if (sign(den) == 0) throw DegenerateDenominator("spherical nff denominator is zero");
  return (2 - mu_bar) * n_bar / den;
}

/// d < h <= 2^{d-1}, the conjectured admissible range.
inline bool conjecture_predicate(const Rational& h_bar, int d) {
  return h_bar > Rational(d) && h_bar <= hyperplane_h(d);
}

}  // namespace mosaic
