#pragma once

#include "mosaic/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace mosaic {

enum class RowSource { kConstructed, kArithmetic, kMonteCarlo };

inline const char* to_string(RowSource s) {
  switch (s) {
    case RowSource::kConstructed: return "constructed";
    case RowSource::kArithmetic: return "arithmetic";
    default: return "monte-carlo";
  }
}

/// One row of the uniform-honeycomb reference table: exact (n, v, f) plus the
/// 2-decimal harmonic degree as printed. The two random rows carry rounded
/// Monte Carlo values.
struct Table1Row {
  const char* id;
  const char* name;
  const char* n;        // rational string
  const char* v;
  const char* f;
  const char* h_print;  // printed 2-decimal value
  RowSource source;
  const char* construction;  // catalog name when built geometrically, else ""
};

inline const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {"1", "cubic", "8", "8", "6", "4.00", RowSource::kConstructed, "cubic"},
      {"2", "rectified cubic", "6", "9", "11", "3.60", RowSource::kArithmetic, ""},
      {"3", "truncated cubic", "5", "15", "11", "3.75", RowSource::kArithmetic, ""},
      {"4", "cantellated cubic", "5", "12", "58/5", "3.53", RowSource::kArithmetic, ""},
      {"5", "cantitruncated cubic", "4", "96/5", "58/5", "3.31", RowSource::kArithmetic, ""},
      {"6", "runcitruncated cubic", "5", "15", "11", "3.75", RowSource::kArithmetic, ""},
      {"7", "alternated cubic", "14", "14/3", "16/3", "3.50", RowSource::kConstructed,
       "alternated_cubic"},
      {"8", "cantic cubic", "5", "15", "11", "3.75", RowSource::kArithmetic, ""},
      {"9", "runcic cubic", "5", "10", "10", "3.33", RowSource::kArithmetic, ""},
      {"10", "runcicantic cubic", "4", "24", "14", "3.43", RowSource::kArithmetic, ""},
      {"11", "bitruncated cubic", "4", "24", "14", "3.43", RowSource::kConstructed,
       "bitruncated_cubic"},
      {"12", "omnitruncated cubic", "4", "24", "14", "3.43", RowSource::kArithmetic, ""},
      {"13", "quarter cubic", "8", "8", "6", "4.00", RowSource::kArithmetic, ""},
      {"14", "truncated/bitruncated square prismatic", "6", "12", "8", "4.00",
       RowSource::kConstructed, "prism:truncated_square"},
      {"15", "snub square prismatic", "10", "20/3", "16/3", "4.00", RowSource::kConstructed,
       "prism:snub_square"},
      {"16", "triangular prismatic", "12", "6", "5", "4.00", RowSource::kConstructed,
       "prism:triangular"},
      {"17", "hexagonal prismatic", "6", "12", "8", "4.00", RowSource::kConstructed,
       "prism:hexagonal"},
      {"18", "trihexagonal prismatic", "8", "8", "6", "4.00", RowSource::kConstructed,
       "prism:trihexagonal"},
      {"19", "truncated hexagonal prismatic", "6", "12", "8", "4.00",
       RowSource::kConstructed, "prism:truncated_hexagonal"},
      {"20", "rhombi-hexagonal prismatic", "8", "8", "6", "4.00", RowSource::kConstructed,
       "prism:rhombitrihexagonal"},
      {"21", "snub-hexagonal prismatic", "10", "20/3", "16/3", "4.00",
       RowSource::kConstructed, "prism:snub_hexagonal"},
      {"22", "truncated trihexagonal prismatic", "6", "12", "8", "4.00",
       RowSource::kConstructed, "prism:truncated_trihexagonal"},
      {"23", "elongated triangular prismatic", "10", "20/3", "16/3", "4.00",
       RowSource::kConstructed, "prism:elongated_triangular"},
      {"24", "gyrated alternated cubic", "14", "14/3", "16/3", "3.50",
       RowSource::kArithmetic, ""},
      {"25", "gyroelongated alternated cubic", "13", "26/5", "26/5", "3.71",
       RowSource::kArithmetic, ""},
      {"26", "elongated alternated cubic", "13", "26/5", "26/5", "3.71",
       RowSource::kArithmetic, ""},
      {"27", "gyrated triangular prismatic", "12", "6", "5", "4.00",
       RowSource::kArithmetic, ""},
      {"28", "gyroelongated triangular prismatic", "10", "20/3", "16/3", "4.00",
       RowSource::kArithmetic, ""},
      {"29", "Poisson-Voronoi", "4", "2707/100", "1551/100", "3.49", RowSource::kMonteCarlo,
       ""},
      {"30", "Hyperplane", "8", "8", "6", "4.00", RowSource::kConstructed,
       "hyperplane_generic"},
      {"31", "iterated foam", "4", "12", "8", "3.00", RowSource::kArithmetic, ""},
      {"1'", "dual of cubic", "8", "8", "6", "4.00", RowSource::kArithmetic, ""},
      {"2'", "dual of rectified cubic", "9", "6", "8", "3.60", RowSource::kArithmetic, ""},
      {"3'", "dual of truncated cubic", "15", "5", "5", "3.75", RowSource::kArithmetic, ""},
      {"4'", "dual of cantellated cubic", "12", "5", "6", "3.53", RowSource::kArithmetic,
       ""},
      {"5'", "dual of cantitruncated cubic", "96/5", "4", "4", "3.31",
       RowSource::kArithmetic, ""},
      {"6'", "dual of runcitruncated cubic", "15", "5", "5", "3.75",
       RowSource::kArithmetic, ""},
      {"7'", "dual of alternated cubic", "14/3", "14", "12", "3.50",
       RowSource::kArithmetic, ""},
      {"8'", "dual of cantic cubic", "15", "5", "5", "3.75", RowSource::kArithmetic, ""},
      {"9'", "dual of runcic cubic", "10", "5", "6", "3.33", RowSource::kArithmetic, ""},
      {"10'", "dual of runcicantic cubic", "24", "4", "4", "3.43", RowSource::kArithmetic,
       ""},
      {"11'", "dual of bitruncated cubic", "24", "4", "4", "3.43", RowSource::kArithmetic,
       ""},
      {"12'", "dual of omnitruncated cubic", "24", "4", "4", "3.43",
       RowSource::kArithmetic, ""},
      {"13'", "dual of quarter cubic", "8", "8", "6", "4.00", RowSource::kArithmetic, ""},
      {"14'", "dual of truncated/bitruncated square prismatic", "12", "6", "5", "4.00",
       RowSource::kArithmetic, ""},
      {"15'", "dual of snub square prismatic", "20/3", "10", "7", "4.00",
       RowSource::kArithmetic, ""},
      {"16'", "dual of triangular prismatic", "6", "12", "8", "4.00",
       RowSource::kArithmetic, ""},
      {"17'", "dual of hexagonal prismatic", "12", "6", "5", "4.00",
       RowSource::kArithmetic, ""},
      {"18'", "dual of trihexagonal prismatic", "8", "8", "6", "4.00",
       RowSource::kArithmetic, ""},
      {"19'", "dual of truncated hexagonal prismatic", "12", "6", "5", "4.00",
       RowSource::kArithmetic, ""},
      {"20'", "dual of rhombi-hexagonal prismatic", "8", "8", "6", "4.00",
       RowSource::kArithmetic, ""},
      {"21'", "dual of snub-hexagonal prismatic", "20/3", "10", "7", "4.00",
       RowSource::kArithmetic, ""},
      {"22'", "dual of truncated trihexagonal prismatic", "12", "6", "5", "4.00",
       RowSource::kArithmetic, ""},
      {"23'", "dual of elongated triangular prismatic", "20/3", "10", "7", "4.00",
       RowSource::kArithmetic, ""},
      {"24'", "dual of gyrated alternated cubic", "14/3", "14", "12", "3.50",
       RowSource::kArithmetic, ""},
      {"25'", "dual of gyroelongated alternated cubic", "26/5", "13", "10", "3.71",
       RowSource::kArithmetic, ""},
      {"26'", "dual of elongated alternated cubic", "26/5", "13", "10", "3.71",
       RowSource::kArithmetic, ""},
      {"27'", "dual of gyrated triangular prismatic", "6", "12", "8", "4.00",
       RowSource::kArithmetic, ""},
      {"28'", "dual of gyroelongated triangular prismatic", "20/3", "10", "7", "4.00",
       RowSource::kArithmetic, ""},
      {"29'", "dual of Poisson-Voronoi: Poisson-Delaunay", "2707/100", "4", "4", "3.49",
       RowSource::kMonteCarlo, ""},
      {"30'", "dual of Hyperplane: Hyperplane", "8", "8", "6", "4.00",
       RowSource::kArithmetic, ""},
      {"31'", "dual of iterated foam", "12", "4", "4", "3.00", RowSource::kArithmetic, ""},
  };
  return rows;
}

/// Regular honeycombs (Table 2): the printed harmonic-degree column holds the
/// reciprocal 1/h; row 7's cells are octahedra so its symbol is {3,4,3}.
struct Table2Row {
  int id;
  const char* cell;
  const char* node;
  const char* space;  // as printed
  int p, q, r;
  const char* n;
  const char* v;
  const char* h_print;  // printed value, equal to 1/h
};

inline const std::vector<Table2Row>& table2_rows() {
  static const std::vector<Table2Row> rows = {
      {1, "cube", "octahedron", "Euclidean", 4, 3, 4, "8", "8", "0.250"},
      {2, "icosahedron", "dodecahedron", "Hyperbolic", 3, 5, 3, "12", "12", "0.167"},
      {3, "dodecahedron", "icosahedron", "Hyperbolic", 5, 3, 5, "20", "20", "0.100"},
      {4, "cube", "icosahedron", "Hyperbolic", 4, 3, 5, "8", "20", "0.175"},
      {5, "dodecahedron", "octahedron", "Hyperbolic", 5, 3, 4, "20", "8", "0.175"},
      {6, "tetrahedron", "tetrahedron", "Elliptic", 3, 3, 3, "4", "4", "0.500"},
      {7, "octahedron", "cube", "Elliptic", 3, 4, 3, "6", "6", "0.333"},
      {8, "cube", "octahedron", "Elliptic", 4, 3, 3, "8", "4", "0.375"},
      {9, "tetrahedron", "octahedron", "Elliptic", 3, 3, 4, "4", "8", "0.375"},
      {10, "dodecahedron", "tetrahedron", "Elliptic", 5, 3, 3, "20", "4", "0.300"},
      {11, "tetrahedron", "icosahedron", "Elliptic", 3, 3, 5, "4", "20", "0.300"},
  };
  return rows;
}

}  // namespace mosaic
