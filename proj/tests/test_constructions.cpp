#include "mosaic/constructions.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace mosaic;
using Catch::Approx;

TEST_CASE("planar tilings: exact degrees, histograms, h = 2") {
  using Hist = std::map<long, long>;
  struct Want {
    PlanarTiling t;
    Rational n, v;
    Hist nodes, cells;  // degree -> orbits per period
  };
  const std::vector<Want> wants = {
      {PlanarTiling::kTriangular, 6, 3, {{6, 1}}, {{3, 2}}},
      {PlanarTiling::kSquare, 4, 4, {{4, 1}}, {{4, 1}}},
      {PlanarTiling::kHexagonal, 3, 6, {{3, 2}}, {{6, 1}}},
      {PlanarTiling::kTrihexagonal, 4, 4, {{4, 3}}, {{3, 2}, {6, 1}}},
      {PlanarTiling::kSnubSquare, 5, rat(10, 3), {{5, 4}}, {{3, 4}, {4, 2}}},
      {PlanarTiling::kElongatedTriangular, 5, rat(10, 3), {{5, 2}}, {{3, 2}, {4, 1}}},
      {PlanarTiling::kTruncatedSquare, 3, 6, {{3, 4}}, {{4, 1}, {8, 1}}},
      {PlanarTiling::kTruncatedHexagonal, 3, 6, {{3, 6}}, {{3, 2}, {12, 1}}},
      {PlanarTiling::kRhombitrihexagonal, 4, 4, {{4, 6}}, {{3, 2}, {4, 3}, {6, 1}}},
      {PlanarTiling::kTruncatedTrihexagonal, 3, 6, {{3, 12}}, {{4, 3}, {6, 2}, {12, 1}}},
      {PlanarTiling::kSnubHexagonal, 5, rat(10, 3), {{5, 6}}, {{3, 8}, {6, 1}}},
  };
  for (const auto& w : wants) {
    auto M = build_planar(w.t);
    INFO(M.name);
    CHECK(validate_periodic(M));
    auto S = stats(M);
    CHECK(S.n_bar == w.n);
    CHECK(S.v_bar == w.v);
    CHECK(S.h_bar == 2);
    CHECK(S.node_degree_hist == w.nodes);
    CHECK(S.cell_degree_hist == w.cells);
  }
}

TEST_CASE("prism doubling: h = 4 and degrees double") {
  for (auto [t, name] : planar_tiling_names()) {
    auto P2 = build_planar(t);
    auto S2 = stats(P2);
    auto M = build_prism(t);
    auto S = stats(M);
    INFO(name);
    CHECK(S.n_bar == 2 * S2.n_bar);
    CHECK(S.v_bar == 2 * S2.v_bar);
    CHECK(S.f_bar == S2.v_bar + 2);
    CHECK(S.h_bar == 4);
  }
}

TEST_CASE("selected prisms match their reference rows") {
  auto hexp = stats(build(std::string("prism:hexagonal")));
  CHECK(hexp.n_bar == 6);
  CHECK(hexp.v_bar == 12);
  CHECK(hexp.f_bar == 8);
  auto snub = stats(build(std::string("prism:snub_square")));
  CHECK(snub.n_bar == 10);
  CHECK(snub.v_bar == rat(20, 3));
  CHECK(snub.f_bar == rat(16, 3));
  CHECK(validate_periodic(build_prism(PlanarTiling::kTriangular)));
  CHECK(validate_periodic(build_prism(PlanarTiling::kSnubSquare)));
}

TEST_CASE("cubic family stats") {
  auto cs = stats(build_cubic());
  CHECK(cs.n_bar == 8);
  CHECK(cs.v_bar == 8);
  CHECK(cs.f_bar == 6);
  CHECK(cs.h_bar == 4);

  auto hs = stats(build_hyperplane_generic());
  CHECK(hs.h_bar == 4);
  CHECK(validate_periodic(build_hyperplane_generic()));

  auto as = stats(build_alternated_cubic());
  CHECK(as.n_bar == 14);
  CHECK(as.v_bar == rat(14, 3));
  CHECK(as.f_bar == rat(16, 3));
  CHECK(as.h_bar == rat(7, 2));
  CHECK(as.cell_degree_hist == std::map<long, long>{{4, 2}, {6, 1}});
  CHECK(as.node_degree_hist == std::map<long, long>{{14, 1}});
  CHECK(validate_periodic(build_alternated_cubic()));

  auto bs = stats(build_bitruncated_cubic());
  CHECK(bs.n_bar == 4);
  CHECK(bs.v_bar == 24);
  CHECK(bs.f_bar == 14);
  CHECK(bs.h_bar == rat(24, 7));
  CHECK(bs.node_degree_hist == std::map<long, long>{{4, 6}});
  CHECK(validate_periodic(build_bitruncated_cubic()));
}

TEST_CASE("brick wall: non-face-to-face with h below 2") {
  auto M = build_brick_wall_3d();
  CHECK_FALSE(validate_periodic(M));  // T-junction layers
  CHECK_FALSE(M.face_to_face);
  auto S = stats(M);
  CHECK(S.n_bar == 2);
  CHECK(S.v_bar == 8);
  CHECK(S.f_bar == 6);
  CHECK(S.h_bar == rat(8, 5));
  CHECK_FALSE(conjecture_predicate(S.h_bar, 3));
}

TEST_CASE("alternated cubic total angle matches 4pi/h") {
  auto M = build_alternated_cubic();
  auto W = average_total_angle(M);
  CHECK(W.total_avg == Approx(8 * kPi / 7).margin(1e-9));
  // polar identities: mean internal angle times n and mean external times v
  // both give the full sphere
  auto S = stats(M);
  CHECK(W.internal_avg * to_double(S.n_bar) == Approx(4 * kPi).margin(1e-9));
  CHECK(W.external_avg * to_double(S.v_bar) == Approx(4 * kPi).margin(1e-9));
}

TEST_CASE("planar tilings satisfy the angle tilings at every node and cell") {
  for (auto [t, name] : planar_tiling_names()) {
    auto M = build_planar(t);
    INFO(name);
    auto W = average_total_angle(M);
    CHECK(W.total_avg == Approx(kPi).margin(1e-9));
    auto sums = angle_tiling_sums(M);
    for (double s : sums.per_node_internal) CHECK(s == Approx(2 * kPi).margin(1e-9));
    for (double s : sums.per_cell_external) CHECK(s == Approx(2 * kPi).margin(1e-12));
  }
}

TEST_CASE("prisms satisfy the harmonic angle identity") {
  for (auto t : {PlanarTiling::kHexagonal, PlanarTiling::kSnubSquare}) {
    auto M = build_prism(t);
    INFO(M.name);
    auto S = stats(M);
    auto W = average_total_angle(M);
    CHECK(to_double(S.h_bar) * W.total_avg == Approx(4 * kPi).epsilon(1e-7));
  }
}

TEST_CASE("alternated cubic nij: formula matches measurement") {
  auto M = build_alternated_cubic();
  auto S = stats(M);
  auto A = measure_nij(M);
  auto F = nij_from_params(S.v_bar, S.f_bar, S.n_bar);
  CHECK(A == F);
  CHECK(A(0, 1) == 12);  // node-edge entry: ((f-2)n)/v + 2
  auto D = dual_nij(A);
  CHECK(D(3, 0) == S.n_bar);  // dual swaps cell and node degrees
  CHECK(D(0, 3) == S.v_bar);

  // bitruncated cubic dual carries n = 24, v = 4
  auto B = measure_nij(build_bitruncated_cubic());
  auto BD = dual_nij(B);
  CHECK(BD(0, 3) == 24);
  CHECK(BD(3, 0) == 4);

  // the incidence matrix survives the interchange round trip (facets are
  // reconstructed by hull on load)
  auto M2 = from_interchange_json(to_interchange_json(M));
  CHECK(measure_nij(M2) == A);
}

TEST_CASE("barycentric subdivision of the cubic lattice") {
  auto M = barycentric_subdivision(build_cubic());
  CHECK(M.cells.size() == 48);  // 2^d d! flags per cube
  for (const auto& c : M.cells) CHECK(c.verts.size() == 4);
  auto S = stats(M);
  CHECK(S.n_bar == 24);
  CHECK(S.v_bar == 4);
  CHECK(S.h_bar == rat(24, 7));
  CHECK(validate_periodic(M));
  auto [bn, bv, bh] = barycentric_degrees(3);
  CHECK(S.n_bar == bn);
  CHECK(S.h_bar == bh);
}

TEST_CASE("barycentric subdivision of a planar mosaic stays planar") {
  auto M = barycentric_subdivision(build_planar(PlanarTiling::kSquare));
  for (const auto& c : M.cells) CHECK(c.verts.size() == 3);
  auto S = stats(M);
  CHECK(S.h_bar == 2);
  CHECK(S.n_bar == 6);  // (d+1)! for d = 2
  CHECK(validate_periodic(M));
}

TEST_CASE("foam steps drive v along the recursion exactly") {
  auto M0 = build_bitruncated_cubic();
  auto S0 = stats(M0);
  REQUIRE(S0.v_bar == 24);

  auto M1 = foam_step(M0);
  auto S1 = stats(M1);
  CHECK(S1.v_bar == rat(96, 7));
  CHECK(S1.n_bar == 4);
  CHECK(S1.v_bar == foam_recursion(24, 3, 1));
  CHECK(validate_periodic(M1));

  auto M2 = foam_step(M1);
  auto S2 = stats(M2);
  CHECK(S2.v_bar == rat(384, 31));
  CHECK(S2.n_bar == 4);
  CHECK(S2.v_bar == foam_recursion(24, 3, 2));

  // per primitive period: 1 truncated cell + 6 node simplices, 2 new nodes on
  // each of the 12 old edges
  CHECK(S1.N_c == 7);
  CHECK(S1.N_v == 24);
  CHECK(S1.n_bar * Rational(S1.N_v) == S1.v_bar * Rational(S1.N_c));
}

TEST_CASE("foam guards") {
  CHECK_THROWS_AS(foam_step(build_cubic()), VertexFigureNotSimplex);
  CHECK_THROWS_AS(foam_step(build_bitruncated_cubic(), rat(1, 2)), EpsilonTooLarge);
  CHECK_THROWS_AS(foam_step(build_bitruncated_cubic(), rat(-1, 4)), EpsilonTooLarge);
}

TEST_CASE("dual foam: n along the recursion, cells multiply by 4") {
  auto M0 = barycentric_subdivision(build_cubic());
  auto M1 = dual_foam_step(M0);
  auto S1 = stats(M1);
  CHECK(S1.n_bar == rat(96, 7));
  CHECK(S1.v_bar == 4);
  CHECK(M1.cells.size() == 4 * M0.cells.size());
  CHECK(validate_periodic(M1));
  auto M2 = dual_foam_step(M1);
  auto S2 = stats(M2);
  CHECK(S2.n_bar == rat(384, 31));
  CHECK(S2.h_bar == harmonic_degree(S2.n_bar, S2.v_bar));
  // h decreasing toward 3
  CHECK(S2.h_bar < S1.h_bar);
  CHECK(S1.h_bar < rat(24, 7));
  CHECK(S2.h_bar > 3);
  CHECK_THROWS_AS(dual_foam_step(build_cubic()), NotSimplicial);
}

TEST_CASE("layered mix endpoints and monotonicity") {
  LayerRecipe r;
  r.lambda = Rational(1);
  CHECK(layered_mix(r).h_bar == 4);
  r.lambda = Rational(0);
  CHECK(layered_mix(r).h_bar == rat(24, 7));
  r.lambda = rat(1, 2);
  auto mid = layered_mix(r);
  CHECK(mid.h_bar == rat(100, 29));
  CHECK(mid.h_bar > rat(24, 7));
  CHECK(mid.h_bar < 4);
  Rational prev(0);
  for (int i = 0; i <= 100; ++i) {
    r.lambda = rat(i, 100);
    Rational h = layered_mix(r).h_bar;
    if (i > 0) CHECK(h > prev);
    prev = h;
  }
  r.lambda = rat(3, 2);
  CHECK_THROWS_AS(layered_mix(r), InvalidRatio);
}

TEST_CASE("layered mix: finite strip approaches the limit") {
  LayerRecipe fin;
  fin.blocks = {{100, 100}};
  auto S = layered_mix(fin);
  CHECK(S.h_bar == rat(20298, 5887));
  LayerRecipe lim;
  lim.lambda = rat(1, 2);
  CHECK(std::abs(to_double(S.h_bar) - to_double(layered_mix(lim).h_bar)) < 1e-3);
  // exact per-period identities of the periodic strip stack
  CHECK(S.n_bar * Rational(S.N_v) == S.v_bar * Rational(S.N_c));
  CHECK(Rational(S.N_v - S.N_e + S.N_f - S.N_c) == 0);  // 3-torus Euler characteristic
  LayerRecipe bad;
  bad.blocks = {{0, 5}};
  CHECK_THROWS_AS(layered_mix(bad), InvalidRatio);
}

TEST_CASE("harmonic target hits rational targets exactly") {
  auto t1 = harmonic_target(4);
  CHECK(t1.layered);
  CHECK(t1.lambda == 1);
  CHECK(t1.achieved_h == 4);
  auto t2 = harmonic_target(rat(24, 7));
  CHECK(t2.layered);
  CHECK(t2.lambda == 0);
  CHECK(t2.achieved_h == rat(24, 7));
  auto t3 = harmonic_target(rat(7, 2));
  CHECK(t3.layered);
  CHECK(t3.achieved_h == rat(7, 2));
  // below 24/7: partial-division plans
  auto t4 = harmonic_target(rat(29, 9));
  CHECK_FALSE(t4.layered);
  CHECK(t4.k == 0);
  CHECK(t4.mu == rat(13, 48));
  CHECK(t4.achieved_h == rat(29, 9));
  CHECK(t4.mu >= 0);
  CHECK(t4.mu <= 1);
  auto t5 = harmonic_target(rat(301, 100));
  CHECK_FALSE(t5.layered);
  CHECK(t5.achieved_h == rat(301, 100));
  CHECK_THROWS_AS(harmonic_target(3), OutOfRange);
  CHECK_THROWS_AS(harmonic_target(5), OutOfRange);
}

TEST_CASE("catalog names build and serialize") {
  for (const auto& name : catalog_names()) {
    auto M = build(name);
    INFO(name);
    auto j = to_interchange_json(M);
    auto M2 = from_interchange_json(j);
    CHECK(to_interchange_json(M2).dump() == j.dump());
    CHECK(stats(M2).h_bar == stats(M).h_bar);
    // canonical representatives: cell centroids in [0,1)^d
    for (const auto& c : M.cells) {
      Vec3<Rational> s(0, 0, 0);
      for (const auto& r : c.verts) s += M.frac_position(r);
      s = s * Rational(1, Int(c.verts.size()));
      CHECK(sign(s.x) >= 0);
      CHECK(s.x < 1);
      CHECK(sign(s.y) >= 0);
      CHECK(s.y < 1);
      if (M.dim == 3) {
        CHECK(sign(s.z) >= 0);
        CHECK(s.z < 1);
      }
    }
  }
  CHECK_THROWS_AS(build(std::string("nonsense")), UnknownName);
}

TEST_CASE("conjecture predicate and bounds for the 3D catalog") {
  for (const auto& name : {"cubic", "alternated_cubic", "bitruncated_cubic",
                           "hyperplane_generic", "prism:triangular", "barycentric:cubic"}) {
    auto S = stats(build(name));
    INFO(name);
    CHECK(conjecture_predicate(S.h_bar, 3));
    CHECK(S.h_bar >= rat(28, 13));
    auto bound = refined_3d_bound(S.v_bar);
    CHECK(S.n_bar >= bound.n_lower);
  }
}
