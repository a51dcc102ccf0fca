#pragma once

#include "mosaic/geom.hpp"

#include <map>
#include <set>
#include <vector>

namespace mosaic {

struct OverlappingCells : MosaicError {
  using MosaicError::MosaicError;
};
struct NotFound : MosaicError {
  using MosaicError::MosaicError;
};

/// Finite polytopal complex. Faces of every dimension are deduplicated by
/// exact vertex-set identity; nodes are deduplicated by exact coordinates.
template <class T = Rational>
struct CellComplex {
  int dim = 3;
  std::vector<Polytope<T>> cells;
  std::vector<Vec3<T>> nodes;
  std::vector<std::vector<int>> cell_nodes;  // cell -> global node id per local vertex
  std::vector<std::vector<int>> node_cells;  // node -> cells having it as a vertex

  struct FaceRec {
    std::vector<int> nodes;  // sorted global ids
    std::vector<int> cells;  // incident cells
  };
  std::vector<FaceRec> edges_;
  std::vector<FaceRec> facets_;  // (d-1)-faces for d == 3; equals edges_ for d == 2

  // (node, cell) pairs where the node lies in the cell without being one of
  // its vertices: the T-junctions of a non-face-to-face assembly
  std::vector<std::pair<int, int>> tjunctions;

  long node_count() const { return long(nodes.size()); }
  long cell_count() const { return long(cells.size()); }
  long edge_count() const { return long(edges_.size()); }
  long facet_count() const { return dim == 2 ? edge_count() : long(facets_.size()); }

  bool face_to_face() const { return tjunctions.empty(); }
};

struct ValidityReport {
  bool face_to_face = false;
  bool normal = false;
  double r_min = 0, R_max = 0;
  bool convex = false;
  bool euler_ok = false;
};

namespace detail {

template <class T>
bool separated_by_facet(const Polytope<T>& C, const Polytope<T>& D) {
  for (size_t i = 0; i < C.facets.size(); ++i) {
    auto [n, c] = C.facet_plane(int(i));
    bool all_out = true;
    for (const auto& p : D.verts)
      if (sign(dot(n, p) - c) < 0) {
        all_out = false;
        break;
      }
    if (all_out) return true;
  }
  return false;
}

template <class T>
bool interiors_overlap(const Polytope<T>& C, const Polytope<T>& D) {
  Vec3<T> cl = C.aabb_min(), ch = C.aabb_max();
  Vec3<T> dl = D.aabb_min(), dh = D.aabb_max();
  if (sign(ch.x - dl.x) <= 0 || sign(dh.x - cl.x) <= 0 || sign(ch.y - dl.y) <= 0 ||
      sign(dh.y - cl.y) <= 0)
    return false;
  if (C.dim == 3 && (sign(ch.z - dl.z) <= 0 || sign(dh.z - cl.z) <= 0)) return false;
  if (separated_by_facet(C, D) || separated_by_facet(D, C)) return false;
  // no facet plane separates; for tiling inputs this means real interpenetration
  for (const auto& p : D.verts)
    if (C.contains(p, true)) return true;
  for (const auto& p : C.verts)
    if (D.contains(p, true)) return true;
  if (C.contains(D.vertex_mean(), true) || D.contains(C.vertex_mean(), true)) return true;
  return true;  // conservative: unresolved pairs are treated as overlapping
}

}  // namespace detail

/// Options for assemble(); the T-junction scan is quadratic-ish and can be
/// skipped for large blocks used only as counting oracles.
struct AssembleOptions {
  bool check_overlap = true;
  bool detect_tjunctions = true;
};

template <class T>
CellComplex<T> assemble(std::vector<Polytope<T>> cells, AssembleOptions opt = {}) {
  if (cells.empty()) throw DegenerateInput("assemble: no cells");
  CellComplex<T> X;
  X.dim = cells[0].dim;
  X.cells = std::move(cells);

  std::map<Vec3<T>, int> node_id;
  X.cell_nodes.resize(X.cells.size());
  for (size_t c = 0; c < X.cells.size(); ++c) {
    if (X.cells[c].dim != X.dim) throw DegenerateInput("assemble: mixed dimensions");
    for (const auto& v : X.cells[c].verts) {
      auto [it, fresh] = node_id.try_emplace(v, int(X.nodes.size()));
      if (fresh) X.nodes.push_back(v);
      X.cell_nodes[c].push_back(it->second);
    }
  }
  X.node_cells.resize(X.nodes.size());
  for (size_t c = 0; c < X.cells.size(); ++c)
    for (int n : std::set<int>(X.cell_nodes[c].begin(), X.cell_nodes[c].end()))
      X.node_cells[n].push_back(int(c));

  // dedup edges and facets by canonical node sets
  std::map<std::vector<int>, int> edge_ix, facet_ix;
  for (size_t c = 0; c < X.cells.size(); ++c) {
    for (auto [a, b] : X.cells[c].edges()) {
      std::vector<int> key = {X.cell_nodes[c][a], X.cell_nodes[c][b]};
      std::sort(key.begin(), key.end());
      auto [it, fresh] = edge_ix.try_emplace(key, int(X.edges_.size()));
      if (fresh) X.edges_.push_back({key, {}});
      X.edges_[it->second].cells.push_back(int(c));
    }
    if (X.dim == 3) {
      for (const auto& f : X.cells[c].facets) {
        std::vector<int> key;
        for (int v : f) key.push_back(X.cell_nodes[c][v]);
        std::sort(key.begin(), key.end());
        auto [it, fresh] = facet_ix.try_emplace(key, int(X.facets_.size()));
        if (fresh) X.facets_.push_back({key, {}});
        X.facets_[it->second].cells.push_back(int(c));
        if (X.facets_[it->second].cells.size() > 2)
          throw OverlappingCells("assemble: three cells share one facet");
      }
    }
  }

  std::vector<Vec3<T>> lo(X.cells.size()), hi(X.cells.size());
  for (size_t c = 0; c < X.cells.size(); ++c) {
    lo[c] = X.cells[c].aabb_min();
    hi[c] = X.cells[c].aabb_max();
  }

  if (opt.check_overlap) {
    for (size_t i = 0; i < X.cells.size(); ++i)
      for (size_t j = i + 1; j < X.cells.size(); ++j) {
        if (hi[i].x <= lo[j].x || hi[j].x <= lo[i].x || hi[i].y <= lo[j].y ||
            hi[j].y <= lo[i].y)
          continue;
        if (X.dim == 3 && (hi[i].z <= lo[j].z || hi[j].z <= lo[i].z)) continue;
        if (detail::interiors_overlap(X.cells[i], X.cells[j]))
          throw OverlappingCells("assemble: cells " + std::to_string(i) + " and " +
                                 std::to_string(j) + " share interior points");
      }
  }

  if (opt.detect_tjunctions) {
    // nodes sorted by x so each cell only tests candidates in its x-slab
    std::vector<int> order(X.nodes.size());
    for (size_t n = 0; n < order.size(); ++n) order[n] = int(n);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return X.nodes[a].x < X.nodes[b].x; });
    for (size_t c = 0; c < X.cells.size(); ++c) {
      const auto& cell = X.cells[c];
      std::vector<std::pair<Vec3<T>, T>> planes;
      for (size_t f = 0; f < cell.facets.size(); ++f) planes.push_back(cell.facet_plane(int(f)));
      std::set<int> own(X.cell_nodes[c].begin(), X.cell_nodes[c].end());
      auto first = std::lower_bound(order.begin(), order.end(), lo[c].x,
                                    [&](int n, const T& x) { return X.nodes[n].x < x; });
      for (auto it = first; it != order.end(); ++it) {
        int n = *it;
        const Vec3<T>& p = X.nodes[n];
        if (p.x > hi[c].x) break;
        if (p.y < lo[c].y || p.y > hi[c].y) continue;
        if (X.dim == 3 && (p.z < lo[c].z || p.z > hi[c].z)) continue;
        if (own.count(n)) continue;
        bool inside = true;
        for (const auto& [nrm, off] : planes)
          if (sign(dot(nrm, p) - off) > 0) {
            inside = false;
            break;
          }
        if (inside) X.tjunctions.emplace_back(n, int(c));
      }
    }
  }
  return X;
}

template <class T>
int node_degree(const CellComplex<T>& X, int node) {
  if (node < 0 || node >= int(X.nodes.size())) throw NotFound("node_degree: no such node");
  return int(X.node_cells[node].size());
}

template <class T>
int cell_degree(const CellComplex<T>& X, int cell) {
  if (cell < 0 || cell >= int(X.cells.size())) throw NotFound("cell_degree: no such cell");
  return int(X.cells[cell].verts.size());
}

template <class T>
ValidityReport validate(const CellComplex<T>& X) {
  ValidityReport rep;
  rep.face_to_face = X.face_to_face();
  rep.convex = true;
  rep.euler_ok = true;
  for (const auto& cell : X.cells) {
    if (X.dim == 3 && !cell.euler_ok()) rep.euler_ok = false;
    for (const auto& v : cell.verts)
      if (!cell.contains(v)) rep.convex = false;
    if (X.dim == 3) {
      // facet planarity, exact
      for (size_t i = 0; i < cell.facets.size(); ++i) {
        auto [n, c] = cell.facet_plane(int(i));
        for (int v : cell.facets[i])
          if (!(dot(n, cell.verts[v]) == c)) rep.convex = false;
      }
    }
  }
  rep.r_min = 1e300;
  rep.R_max = 0;
  for (const auto& cell : X.cells) {
    auto [r, R] = normality_radii(cell);
    rep.r_min = std::min(rep.r_min, r);
    rep.R_max = std::max(rep.R_max, R);
  }
  rep.normal = rep.r_min > 0 && rep.R_max < 1e300;
  return rep;
}

}  // namespace mosaic
