#include "mosaic/complex.hpp"

#include "test_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace mosaic;
using mosaic::testutil::box2;
using mosaic::testutil::box3;

TEST_CASE("single cube complex") {
  auto X = assemble<Rational>({box3({0, 0, 0}, {1, 1, 1})});
  CHECK(X.node_count() == 8);
  CHECK(X.edge_count() == 12);
  CHECK(X.facet_count() == 6);
  CHECK(X.cell_count() == 1);
  CHECK(X.face_to_face());
}

TEST_CASE("two cubes sharing a square face") {
  auto X = assemble<Rational>(
      {box3({0, 0, 0}, {1, 1, 1}), box3({1, 0, 0}, {2, 1, 1})});
  CHECK(X.node_count() == 12);
  CHECK(X.edge_count() == 20);
  CHECK(X.facet_count() == 11);
  CHECK(X.cell_count() == 2);
  CHECK(X.face_to_face());
  // interior facet touches both cells, boundary facets exactly one
  int twos = 0;
  for (const auto& f : X.facets_) {
    CHECK((f.cells.size() == 1 || f.cells.size() == 2));
    twos += f.cells.size() == 2;
  }
  CHECK(twos == 1);
}

TEST_CASE("offset bricks create a T-junction (2D)") {
  auto X = assemble<Rational>({box2({0, 0}, {2, 1}), box2({1, 1}, {3, 2})});
  CHECK_FALSE(X.face_to_face());
  REQUIRE(X.tjunctions.size() == 2);
  std::set<Vec3<Rational>> tnodes;
  for (auto [n, c] : X.tjunctions) tnodes.insert(X.nodes[n]);
  CHECK(tnodes.count(Vec3<Rational>(1, 1)) == 1);
  CHECK(tnodes.count(Vec3<Rational>(2, 1)) == 1);
}

TEST_CASE("brick-wall style 3D junction is detected") {
  auto X = assemble<Rational>({box3({0, 0, 0}, {2, 1, 1}),
                               box3({-1, 0, 1}, {1, 1, 2}),
                               box3({1, 0, 1}, {3, 1, 2})});
  CHECK_FALSE(X.face_to_face());
}

TEST_CASE("overlapping cells are rejected") {
  CHECK_THROWS_AS(assemble<Rational>({box3({0, 0, 0}, {1, 1, 1}),
                                      box3({rat(1, 2), 0, 0}, {rat(3, 2), 1, 1})}),
                  OverlappingCells);
}

TEST_CASE("degrees and incidence transposition on a 2x2x2 block") {
  std::vector<Polytope<Rational>> cells;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z)
        cells.push_back(box3({x, y, z}, {x + 1, y + 1, z + 1}));
  auto X = assemble(std::move(cells));
  CHECK(X.node_count() == 27);
  CHECK(X.cell_count() == 8);
  // central node has degree 8
  int central = -1;
  for (int n = 0; n < X.node_count(); ++n)
    if (X.nodes[n] == Vec3<Rational>(1, 1, 1)) central = n;
  REQUIRE(central >= 0);
  CHECK(node_degree(X, central) == 8);
  for (int c = 0; c < X.cell_count(); ++c) CHECK(cell_degree(X, c) == 8);
  // transposition: n in cell list <=> cell in node list
  long lhs = 0, rhs = 0;
  for (int n = 0; n < X.node_count(); ++n) lhs += node_degree(X, n);
  for (int c = 0; c < X.cell_count(); ++c) rhs += cell_degree(X, c);
  CHECK(lhs == rhs);
  for (int n = 0; n < X.node_count(); ++n)
    for (int c : X.node_cells[n]) {
      bool found = false;
      for (int gn : X.cell_nodes[c]) found |= gn == n;
      CHECK(found);
    }
  CHECK_THROWS_AS(node_degree(X, 999), NotFound);
  CHECK_THROWS_AS(cell_degree(X, -1), NotFound);

  auto rep = validate(X);
  CHECK(rep.face_to_face);
  CHECK(rep.euler_ok);
  CHECK(rep.convex);
  CHECK(rep.normal);
  CHECK(rep.r_min == Catch::Approx(0.5).margin(1e-9));
  CHECK(rep.R_max == Catch::Approx(std::sqrt(3.0) / 2).margin(1e-9));
}

TEST_CASE("T-node degree counts vertex incidences, not containment") {
  // (2,1) is a corner of both lower bricks and sits inside the upper brick's
  // bottom edge, so its degree is 2
  auto X = assemble<Rational>({box2({0, 0}, {2, 1}), box2({2, 0}, {4, 1}),
                               box2({1, 1}, {3, 2})});
  int tn = -1;
  for (int n = 0; n < X.node_count(); ++n)
    if (X.nodes[n] == Vec3<Rational>(2, 1)) tn = n;
  REQUIRE(tn >= 0);
  CHECK(node_degree(X, tn) == 2);
  CHECK_FALSE(X.face_to_face());
}
