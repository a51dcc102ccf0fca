#include "mosaic/constructions.hpp"
#include "mosaic/random_mosaics.hpp"
#include "mosaic/spherical.hpp"
#include "mosaic/table1_data.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace mosaic;

namespace {

PeriodicMosaic load_mosaic(const std::string& target) {
  if (std::filesystem::exists(target)) {
    std::ifstream in(target);
    if (!in) throw MosaicError("cannot open " + target);
    nlohmann::json j;
    in >> j;
    auto M = from_interchange_json(j);
    M.name = target;
    return M;
  }
  return build(target);
}

std::string dec(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", to_double(r));
  return buf;
}

int cmd_construct(const std::string& name, const std::string& out) {
  auto M = build(name);
  bool ftf = validate_periodic(M);
  if (ftf != M.face_to_face)
    throw MosaicError("face-to-face flag disagrees with the measured patch");
  auto j = to_interchange_json(M);
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream os(out);
    if (!os) throw MosaicError("cannot write " + out);
    os << j.dump(2) << "\n";
  }
  std::fprintf(stderr, "%s: %zu cells/period, face_to_face=%s\n", name.c_str(),
               M.cells.size(), M.face_to_face ? "true" : "false");
  return 0;
}

int cmd_stats(const std::string& target, bool exact) {
  auto M = load_mosaic(target);
  auto S = stats(M);
  if (exact) {
    std::printf("n_bar = %s\nv_bar = %s\nf_bar = %s\ne_bar = %s\nh_bar = %s\n",
                rational_to_string(S.n_bar).c_str(), rational_to_string(S.v_bar).c_str(),
                rational_to_string(S.f_bar).c_str(), rational_to_string(S.e_bar).c_str(),
                rational_to_string(S.h_bar).c_str());
    std::printf("period: N_c=%lld N_v=%lld N_f=%lld N_e=%lld\n", S.N_c, S.N_v, S.N_f,
                S.N_e);
  } else {
    std::printf("%s %s %s %s\n", dec(S.n_bar).c_str(), dec(S.v_bar).c_str(),
                dec(S.f_bar).c_str(), dec(S.h_bar).c_str());
  }
  return 0;
}

void print_nij(const NijMatrix& A, const char* title) {
  std::printf("%s\n", title);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) std::printf("%10s", rational_to_string(A(i, j)).c_str());
    std::printf("\n");
  }
}

int cmd_nij(const std::string& target, bool check) {
  auto M = load_mosaic(target);
  auto A = measure_nij(M);
  print_nij(A, "measured n_ij");
  if (!check) return 0;
  auto S = stats(M);
  auto F = nij_from_params(S.v_bar, S.f_bar, S.n_bar);
  print_nij(F, "closed-form n_ij(v, f, n)");
  int diffs = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!(A(i, j) == F(i, j))) ++diffs;
  std::printf("differing entries: %d\n", diffs);
  return diffs == 0 ? 0 : 1;
}

int verify_table1(bool arithmetic) {
  int failures = 0;
  if (arithmetic) {
    const auto& rows = table1_rows();
    for (const auto& row : rows) {
      Rational n = parse_rational(row.n), v = parse_rational(row.v);
      double h = to_double(harmonic_degree(n, v));
      double printed = to_double(parse_rational(row.h_print));
      bool ok = std::abs(h - printed) <= 0.005;
      std::printf("[%s] row %-4s %-45s h=%.4f printed=%s\n", ok ? "PASS" : "FAIL", row.id,
                  row.name, h, row.h_print);
      failures += !ok;
    }
    // primal/dual swap consistency
    for (size_t i = 0; i < 31; ++i) {
      const auto& a = rows[i];
      const auto& b = rows[i + 31];
      bool ok = parse_rational(a.n) == parse_rational(b.v) &&
                parse_rational(a.v) == parse_rational(b.n);
      std::printf("[%s] dual swap %s <-> %s\n", ok ? "PASS" : "FAIL", a.id, b.id);
      failures += !ok;
    }
    std::printf("%s: %zu/%zu rows\n", failures == 0 ? "PASS" : "FAIL",
                rows.size() + 31 - failures, rows.size() + 31);
    return failures == 0 ? 0 : 1;
  }
  for (const auto& row : table1_rows()) {
    if (row.construction[0] == '\0') continue;
    auto S = stats(build(row.construction));
    bool ok = S.n_bar == parse_rational(row.n) && S.v_bar == parse_rational(row.v) &&
              S.f_bar == parse_rational(row.f) &&
              std::abs(to_double(S.h_bar) - to_double(parse_rational(row.h_print))) <= 0.005;
    std::printf("[%s] row %-4s %-45s (%s) -> n=%s v=%s f=%s h=%s\n", ok ? "PASS" : "FAIL",
                row.id, row.name, row.construction, rational_to_string(S.n_bar).c_str(),
                rational_to_string(S.v_bar).c_str(), rational_to_string(S.f_bar).c_str(),
                rational_to_string(S.h_bar).c_str());
    failures += !ok;
  }
  return failures == 0 ? 0 : 1;
}

int verify_table2() {
  std::printf("note: the printed degree column is read as 1/h, and the degree pair\n"
              "      as (cell vertices, vertex-figure faces) up to transposition\n");
  int failures = 0;
  for (const auto& row : table2_rows()) {
    auto S = regular_honeycomb_stats(row.p, row.q, row.r);
    Rational pn = parse_rational(row.n), pv = parse_rational(row.v);
    bool degrees_ok =
        (pn == S.n_bar && pv == S.v_bar) || (pn == S.v_bar && pv == S.n_bar);
    bool recip_ok =
        std::abs(to_double(parse_rational(row.h_print)) - 1.0 / to_double(S.h_bar)) <=
        5e-4;
    std::string space = row.space;
    bool curv_ok = (space == "Euclidean" && S.curvature == CurvatureClass::kEuclidean) ||
                   (space == "Elliptic" && S.curvature == CurvatureClass::kSpherical) ||
                   (space == "Hyperbolic" && S.curvature == CurvatureClass::kHyperbolic);
    bool ok = degrees_ok && recip_ok && curv_ok;
    std::printf("[%s] {%d,%d,%d} %s/%s: n=%s v=%s h=%s printed 1/h=%s %s\n",
                ok ? "PASS" : "FAIL", row.p, row.q, row.r, row.cell, row.node,
                rational_to_string(S.n_bar).c_str(), rational_to_string(S.v_bar).c_str(),
                rational_to_string(S.h_bar).c_str(), row.h_print, row.space);
    failures += !ok;
  }
  std::printf("%s: %zu/11 rows\n", failures == 0 ? "PASS" : "FAIL", 11 - size_t(failures));
  return failures == 0 ? 0 : 1;
}

int verify_conjecture() {
  int failures = 0;
  for (const auto& name : catalog_names()) {
    auto M = build(name);
    if (!M.face_to_face) {
      auto S = stats(M);
      std::printf("[SKIP] %-30s not face-to-face (h=%s escapes the range)\n", name.c_str(),
                  rational_to_string(S.h_bar).c_str());
      continue;
    }
    auto S = stats(M);
    if (M.dim == 2) {
      bool ok = S.h_bar == 2;
      std::printf("[%s] %-30s d=2 h=%s (= 2^(d-1); planar mosaics sit on the boundary)\n",
                  ok ? "PASS" : "FAIL", name.c_str(), rational_to_string(S.h_bar).c_str());
      failures += !ok;
      continue;
    }
    bool ok = conjecture_predicate(S.h_bar, 3);
    std::printf("[%s] %-30s d=3 h=%s in (3, 4]\n", ok ? "PASS" : "FAIL", name.c_str(),
                rational_to_string(S.h_bar).c_str());
    failures += !ok;
  }
  return failures == 0 ? 0 : 1;
}

int verify_angles(const std::string& name, double tol) {
  auto M = load_mosaic(name);
  auto S = stats(M);
  auto W = average_total_angle(M);
  double sphere = M.dim == 2 ? 2 * kPi : 4 * kPi;
  double rel = std::abs(to_double(S.h_bar) * W.total_avg - sphere) / sphere;
  bool ok = rel <= tol;
  std::printf("[%s] %s: h*Omega = %.12f vs S_{d-1} = %.12f (rel err %.3e, tol %g)\n",
              ok ? "PASS" : "FAIL", M.name.c_str(), to_double(S.h_bar) * W.total_avg,
              sphere, rel, tol);
  return ok ? 0 : 1;
}

struct PlaneRow {
  std::string id, name;
  Rational n, v, f;
  std::string source;
};

std::vector<PlaneRow> plane_rows(const std::string& set) {
  std::vector<PlaneRow> rows;
  if (set == "none") return rows;  // header-only export
  if (set == "table1" || set == "all") {
    for (const auto& r : table1_rows())
      rows.push_back({r.id, r.name, parse_rational(r.n), parse_rational(r.v),
                      parse_rational(r.f), to_string(r.source)});
  }
  if (set == "catalog" || set == "all") {
    int k = 0;
    for (const auto& name : catalog_names()) {
      auto S = stats(build(name));
      rows.push_back({"c" + std::to_string(++k), name, S.n_bar, S.v_bar, S.f_bar,
                      "constructed"});
    }
  }
  return rows;
}

void write_csv(const std::vector<PlaneRow>& rows, std::ostream& os) {
  os << "id,name,n_bar,v_bar,f_bar,h_bar,n_bar_exact,v_bar_exact,source\n";
  for (const auto& r : rows) {
    Rational h = harmonic_degree(r.n, r.v);
    os << r.id << ",\"" << r.name << "\"," << dec(r.n) << "," << dec(r.v) << ","
       << dec(r.f) << "," << dec(h) << "," << rational_to_string(r.n) << ","
       << rational_to_string(r.v) << "," << r.source << "\n";
  }
}

void write_svg(const std::vector<PlaneRow>& rows, const std::string& axes,
               std::ostream& os) {
  const double W = 800, H = 600, ml = 60, mb = 50, mt = 20, mr = 20;
  const double lo = 2, hi = 30;
  auto sx = [&](double x) { return ml + (x - lo) / (hi - lo) * (W - ml - mr); };
  auto sy = [&](double y) { return H - mb - (y - lo) / (hi - lo) * (H - mb - mt); };
  char buf[256];
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\">\n";
  os << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
                sx(lo), sy(lo), sx(hi), sy(lo));
  os << buf;
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
                sx(lo), sy(lo), sx(lo), sy(hi));
  os << buf;
  const char* xlabel = axes == "fv" ? "f" : "n";
  std::snprintf(buf, sizeof buf,
                "<text x=\"%.2f\" y=\"%.2f\" font-size=\"14\">%s</text>\n", sx(hi) - 10,
                sy(lo) + 30, xlabel);
  os << buf;
  std::snprintf(buf, sizeof buf, "<text x=\"%.2f\" y=\"%.2f\" font-size=\"14\">v</text>\n",
                sx(lo) - 30, sy(hi) + 10);
  os << buf;
  if (axes == "nv") {
    // dotted iso-curves h = 3 and h = 4: v = h n / (n - h)
    for (double h : {3.0, 4.0}) {
      std::ostringstream pts;
      for (double n = h + 0.35; n <= hi; n += 0.1) {
        double v = h * n / (n - h);
        if (v > hi || v < lo) continue;
        pts << sx(n) << "," << sy(v) << " ";
      }
      os << "<polyline fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4 3\" points=\""
         << pts.str() << "\"/>\n";
    }
  } else {
    // simple (f = v/2 + 2) and simplicial (f = 2v - 4) polyhedron lines
    auto line = [&](double f1, double v1, double f2, double v2) {
      std::snprintf(
          buf, sizeof buf,
          "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"gray\"/>\n",
          sx(f1), sy(v1), sx(f2), sy(v2));
      os << buf;
    };
    line(lo / 2 + 2, lo, hi / 2 + 2, hi);
    line(2 * lo - 4, lo, 2 * hi - 4, hi);
  }
  for (const auto& r : rows) {
    double x = axes == "fv" ? to_double(r.f) : to_double(r.n);
    double y = to_double(r.v);
    if (x < lo || x > hi || y < lo || y > hi) continue;
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"black\"/>\n", sx(x),
                  sy(y));
    os << buf;
  }
  os << "</svg>\n";
}

int cmd_plane(const std::string& set, const std::string& csv, const std::string& svg,
              const std::string& axes) {
  auto rows = plane_rows(set);
  if (!csv.empty()) {
    std::ofstream os(csv);
    if (!os) throw MosaicError("cannot write " + csv);
    write_csv(rows, os);
  } else {
    write_csv(rows, std::cout);
  }
  if (!svg.empty()) {
    std::ofstream os(svg);
    if (!os) throw MosaicError("cannot write " + svg);
    write_svg(rows, axes, os);
  }
  return 0;
}

int cmd_iterate(const std::string& kind, const std::string& name, int k) {
  auto M = build(name);
  auto S = stats(M);
  bool foam = kind == "foam";
  Rational predicted = foam ? S.v_bar : S.n_bar;
  std::printf("step 0: %s = %s\n", foam ? "v" : "n",
              rational_to_string(predicted).c_str());
  int failures = 0;
  for (int step = 1; step <= k; ++step) {
    M = foam ? foam_step(M) : dual_foam_step(M);
    S = stats(M);
    predicted = foam_recursion(predicted, 3, 1);
    Rational measured = foam ? S.v_bar : S.n_bar;
    bool ok = measured == predicted;
    auto [r, R] = normality_bounds(M);
    std::printf(
        "step %d: measured %s = %s, recursion predicts %s, h = %s, r = %.6f, R = %.6f [%s]\n",
        step, foam ? "v" : "n", rational_to_string(measured).c_str(),
        rational_to_string(predicted).c_str(), rational_to_string(S.h_bar).c_str(), r, R,
        ok ? "PASS" : "FAIL");
    failures += !ok;
  }
  return failures == 0 ? 0 : 1;
}

int cmd_mix(const std::string& lambda_str, const std::string& target_str) {
  if (!target_str.empty()) {
    auto plan = harmonic_target(parse_rational(target_str));
    if (plan.layered)
      std::printf("layered recipe: lambda = %s (achieved h = %s)\n",
                  rational_to_string(plan.lambda).c_str(),
                  rational_to_string(plan.achieved_h).c_str());
    else
      std::printf("partial-division recipe: k = %d, mu = %s (achieved h = %s)\n", plan.k,
                  rational_to_string(plan.mu).c_str(),
                  rational_to_string(plan.achieved_h).c_str());
    return 0;
  }
  LayerRecipe r;
  r.lambda = parse_rational(lambda_str);
  auto S = layered_mix(r);
  std::printf("lambda = %s: n = %s (%s), v = %s (%s), f = %s, h = %s (%s)\n",
              lambda_str.c_str(), rational_to_string(S.n_bar).c_str(), dec(S.n_bar).c_str(),
              rational_to_string(S.v_bar).c_str(), dec(S.v_bar).c_str(),
              rational_to_string(S.f_bar).c_str(), rational_to_string(S.h_bar).c_str(),
              dec(S.h_bar).c_str());
  return 0;
}

int cmd_random(const std::string& kind, long long n, int reps, std::uint64_t seed) {
  if (const char* env = std::getenv("MOSAIC_SEED")) seed = std::strtoull(env, nullptr, 10);
  auto R = voronoi_delaunay_stats(n, reps, seed, kind == "delaunay");
  std::printf("replicate,points,T,E,F,n_bar,v_bar,f_bar,h_bar\n");
  for (size_t i = 0; i < R.rows.size(); ++i) {
    const auto& row = R.rows[i];
    std::printf("%zu,%lld,%lld,%lld,%lld,%.6f,%.6f,%.6f,%.6f\n", i, row.points, row.T,
                row.E, row.F, row.n_bar, row.v_bar, row.f_bar, row.h_bar);
  }
  std::printf("summary,,,,,%.6f,%.6f,%.6f,%.6f\n", R.n_bar, R.v_bar, R.f_bar, R.h_bar);
  std::fprintf(stderr, "stderr summary: v = %.4f +- %.4f, f = %.4f +- %.4f (seed %llu)\n",
               R.v_bar, R.v_se, R.f_bar, R.f_se, (unsigned long long)R.seed);
  return 0;
}

int cmd_sphere(const std::string& target) {
  Polytope<double> P;
  if (std::filesystem::exists(target)) {
    std::ifstream in(target);
    P = parse_off(in);
  } else {
    P = catalog_polyhedron(target);
  }
  auto S = from_polyhedron(P);
  auto st = spherical_stats(S);
  std::printf("N_c=%ld N_v=%ld N_e=%ld\n", S.N_c, S.N_v, S.N_e);
  std::printf("n = %s, v = %s, mu = %s, h = %s = 2 - mu (%s)\n",
              rational_to_string(st.n_bar).c_str(), rational_to_string(st.v_bar).c_str(),
              rational_to_string(st.mu_bar).c_str(), rational_to_string(st.h_bar).c_str(),
              st.h_bar == 2 - st.mu_bar ? "exact" : "VIOLATED");
  double total = 0;
  for (double a : S.cell_areas) total += a;
  std::printf("area sum = %.12f (4pi = %.12f), h * Omega = %.12f (2pi = %.12f)\n", total,
              4 * kPi, to_double(st.h_bar) * st.omega_bar, 2 * kPi);
  return st.h_bar == 2 - st.mu_bar ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"convex mosaic construction, measurement and verification"};
  app.require_subcommand(1);

  std::string name, out, target, set = "table1", csv, svg, axes = "nv", lambda, htarget;
  std::string kind;
  bool exact = false, check = false, arithmetic = false;
  double tol = 1e-7;
  long long npoints = 1000;
  int reps = 1, ksteps = 1;
  std::uint64_t seed = 1;

  auto* c_list = app.add_subcommand("list", "list the construction catalog");

  auto* c_construct = app.add_subcommand("construct", "build a mosaic and serialize it");
  c_construct->add_option("name", name)->required();
  c_construct->add_option("--out", out);

  auto* c_stats = app.add_subcommand("stats", "per-period averages of a mosaic");
  c_stats->add_option("target", target)->required();
  c_stats->add_flag("--exact", exact);

  auto* c_nij = app.add_subcommand("nij", "incidence matrix of a 3D mosaic");
  c_nij->add_option("target", target)->required();
  c_nij->add_flag("--check", check);

  auto* c_verify = app.add_subcommand("verify", "run the reference checks");
  c_verify->require_subcommand(1);
  auto* v_t1 = c_verify->add_subcommand("table1", "uniform honeycomb table");
  v_t1->add_flag("--arithmetic", arithmetic);
  auto* v_t2 = c_verify->add_subcommand("table2", "regular honeycombs");
  auto* v_conj = c_verify->add_subcommand("conjecture", "harmonic-degree range");
  auto* v_ang = c_verify->add_subcommand("angles", "h * Omega = S_{d-1}");
  v_ang->add_option("name", name)->required();
  v_ang->add_option("--tol", tol);

  auto* c_plane = app.add_subcommand("plane", "symbolic-plane CSV / SVG export");
  c_plane->add_option("--set", set)
      ->check(CLI::IsMember({"table1", "catalog", "all", "none"}));
  c_plane->add_option("--csv", csv);
  c_plane->add_option("--svg", svg);
  c_plane->add_option("--axes", axes)->check(CLI::IsMember({"nv", "fv"}));

  auto* c_iter = app.add_subcommand("iterate", "foam / dual-foam iteration");
  c_iter->add_option("kind", kind)->required()->check(CLI::IsMember({"foam", "dualfoam"}));
  c_iter->add_option("name", name)->required();
  c_iter->add_option("-k", ksteps)->check(CLI::PositiveNumber);

  auto* c_mix = app.add_subcommand("mix", "layered strip mixing");
  c_mix->add_option("--lambda", lambda);
  c_mix->add_option("--target", htarget);

  auto* c_rand = app.add_subcommand("random", "Poisson-Voronoi / Delaunay statistics");
  c_rand->add_option("kind", kind)->required()->check(CLI::IsMember({"voronoi", "delaunay"}));
  c_rand->add_option("--points", npoints);
  c_rand->add_option("--reps", reps);
  c_rand->add_option("--seed", seed);

  auto* c_sphere = app.add_subcommand("sphere", "spherical mosaic of a polyhedron");
  c_sphere->add_option("polyhedron", target)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (c_list->parsed()) {
      for (const auto& nm : catalog_names()) std::printf("%s\n", nm.c_str());
      std::printf("-- polyhedra --\n");
      for (const auto& nm : polyhedron_catalog()) std::printf("%s\n", nm.c_str());
      return 0;
    }
    if (c_construct->parsed()) return cmd_construct(name, out);
    if (c_stats->parsed()) return cmd_stats(target, exact);
    if (c_nij->parsed()) return cmd_nij(target, check);
    if (v_t1->parsed()) return verify_table1(arithmetic);
    if (v_t2->parsed()) return verify_table2();
    if (v_conj->parsed()) return verify_conjecture();
    if (v_ang->parsed()) return verify_angles(name, tol);
    if (c_plane->parsed()) return cmd_plane(set, csv, svg, axes);
    if (c_iter->parsed()) return cmd_iterate(kind, name, ksteps);
    if (c_mix->parsed()) {
      if (lambda.empty() && htarget.empty())
        throw MosaicError("mix needs --lambda or --target");
      return cmd_mix(lambda, htarget);
    }
    if (c_rand->parsed()) return cmd_random(kind, npoints, reps, seed);
    if (c_sphere->parsed()) return cmd_sphere(target);
  } catch (const UnknownName& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const MosaicError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
