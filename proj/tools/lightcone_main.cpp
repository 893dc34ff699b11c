// Command-line front end: mesh export in the half-space and ball models,
// hyperplane classification, curvature reports, and the desk-scale scans.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lightcone/classify.hpp"
#include "lightcone/cmc.hpp"
#include "lightcone/experiments.hpp"
#include "lightcone/mesh.hpp"
#include "lightcone/verify.hpp"

namespace {

using nlohmann::json;
using namespace lightcone;

struct SourceFlags {
  std::string tau_expr;
  std::string g_expr;
  std::string plane;
  std::string builtin;
  double h = 0.0;
  bool h_set = false;
};

void add_source_flags(CLI::App* cmd, SourceFlags& flags) {
  cmd->add_option("--tau-expr", flags.tau_expr, "graph function tau(u,v)");
  cmd->add_option("--g-expr", flags.g_expr, "holomorphic/meromorphic data g(z)");
  cmd->add_option("--plane", flags.plane, "hyperplane coefficients a,b,c,d");
  cmd->add_option("--builtin", flags.builtin,
                  "horosphere|sphere|counterexample|standard-hypersphere");
  cmd->add_option("--H", flags.h, "target mean curvature")
      ->each([&flags](const std::string&) { flags.h_set = true; });
}

HyperplaneCoeffs parse_plane(const std::string& spec) {
  HyperplaneCoeffs h;
  char extra;
  if (std::sscanf(spec.c_str(), "%lf,%lf,%lf,%lf%c", &h.a, &h.b, &h.c, &h.d,
                  &extra) != 4) {
    raise(Errc::InvalidArgument, "plane spec must be a,b,c,d: '" + spec + "'");
  }
  return h;
}

MeshSource source_from_flags(const SourceFlags& flags) {
  const int given = !flags.tau_expr.empty() + !flags.g_expr.empty() +
                    !flags.plane.empty() + !flags.builtin.empty();
  if (given != 1) {
    raise(Errc::InvalidArgument,
          "exactly one of --tau-expr, --g-expr, --plane, --builtin is required");
  }
  if (!flags.tau_expr.empty()) {
    return SourceTau{parse(flags.tau_expr, ExprMode::Real)};
  }
  if (!flags.g_expr.empty()) {
    return SourceG{parse(flags.g_expr, ExprMode::Complex),
                   flags.h_set ? flags.h : 0.0};
  }
  if (!flags.plane.empty()) {
    return SourcePlane{parse_plane(flags.plane)};
  }
  if (flags.builtin == "horosphere") {
    return SourceBuiltin{BuiltinSurface::Horosphere, 0.0};
  }
  if (flags.builtin == "sphere") {
    return SourceBuiltin{BuiltinSurface::Sphere, flags.h_set ? flags.h : -2.0};
  }
  if (flags.builtin == "counterexample") {
    return SourceBuiltin{BuiltinSurface::Counterexample,
                         flags.h_set ? flags.h : -0.5};
  }
  if (flags.builtin == "standard-hypersphere") {
    return SourceBuiltin{BuiltinSurface::StandardHypersphere, 0.0};
  }
  raise(Errc::InvalidArgument, "unknown builtin '" + flags.builtin + "'");
}

double fd_step_from_env() {
  if (const char* env = std::getenv("LIGHTCONE_FD_STEP")) {
    const double step = std::atof(env);
    if (step > 0.0) return step;
  }
  return 1e-4;
}

GraphFunction resolve_graph(const SourceFlags& flags, const Grid& grid,
                            bool use_fd) {
  const MeshSource source = source_from_flags(flags);
  GraphFunction g = graph_from_source(source, grid);
  if (use_fd) {
    return GraphFunction::finite_difference(
        [g](double u, double v) { return g.value(u, v); }, fd_step_from_env(),
        g.domain());
  }
  return g;
}

void emit(const json& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    out << payload.dump(2) << "\n";
  }
}

std::vector<double> parse_radii(const std::string& spec) {
  std::vector<double> radii;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    radii.push_back(std::stod(item));
  }
  return radii;
}

int run(int argc, char** argv) {
  CLI::App app{"surfaces of constant mean curvature in the 3-dimensional light cone"};
  app.require_subcommand(1);

  std::string grid_spec = "-2,2,-2,2,41,41";
  std::string out_path;
  std::string model = "halfspace";
  bool as_json = false;
  bool use_fd = false;

  SourceFlags gen_flags;
  auto* gen = app.add_subcommand("generate", "sample a surface and write a mesh");
  add_source_flags(gen, gen_flags);
  gen->add_option("--grid", grid_spec, "umin,umax,vmin,vmax,nu,nv");
  gen->add_option("--model", model, "halfspace|ball");
  gen->add_option("--out", out_path, "output file (default stdout)");

  std::string plane_spec;
  auto* cls = app.add_subcommand("classify", "classify a hyperplane section");
  cls->add_option("--plane", plane_spec, "coefficients a,b,c,d")->required();
  cls->add_flag("--json", as_json, "emit a JSON report");
  cls->add_option("--out", out_path, "output file (default stdout)");

  SourceFlags curv_flags;
  auto* curv = app.add_subcommand("curvature", "curvature statistics over a grid");
  add_source_flags(curv, curv_flags);
  curv->add_option("--grid", grid_spec);
  curv->add_flag("--json", as_json);
  curv->add_flag("--fd", use_fd, "use the finite-difference provider");
  curv->add_option("--out", out_path);

  SourceFlags scan_flags;
  std::string radii_spec = "1,2,3";
  auto* scan = app.add_subcommand("scan", "curvature-infimum scan over growing disks");
  add_source_flags(scan, scan_flags);
  scan->add_option("--radii", radii_spec, "comma-separated increasing radii");
  scan->add_flag("--json", as_json);
  scan->add_flag("--fd", use_fd);
  scan->add_option("--out", out_path);

  std::string dist_g;
  std::string dist_grid = "-2,4,-2,2,61,41";
  auto* dist = app.add_subcommand("distribution",
                                  "value distribution of the ZMC curvature");
  dist->add_option("--g-expr", dist_g, "holomorphic data g(z)")->required();
  dist->add_option("--grid", dist_grid);
  dist->add_flag("--json", as_json);
  dist->add_option("--out", out_path);

  SourceFlags proj_flags;
  std::string proj_grid = "-50,50,-50,50,201,201";
  auto* proj = app.add_subcommand("project", "ideal-boundary projection report");
  add_source_flags(proj, proj_flags);
  proj->add_option("--grid", proj_grid);
  proj->add_flag("--json", as_json);
  proj->add_option("--out", out_path);

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("suite", suite, "core|jets|graph|cmc|classify|all");
  verify->add_flag("--json", as_json);
  verify->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    MeshSpec spec;
    spec.grid = Grid::parse(grid_spec);
    spec.source = source_from_flags(gen_flags);
    if (model == "halfspace") {
      spec.model = MeshModel::HalfSpace;
    } else if (model == "ball") {
      spec.model = MeshModel::Ball;
    } else {
      raise(Errc::InvalidArgument, "model must be halfspace or ball");
    }
    const Mesh mesh = build_mesh(spec);
    if (out_path.empty()) {
      write_obj(mesh, std::cout);
    } else {
      std::ofstream out(out_path);
      write_obj(mesh, out);
    }
    std::cerr << "mesh: " << mesh.vertices.size() << " vertices, "
              << mesh.triangles.size() << " triangles\n";
    return 0;
  }

  if (cls->parsed()) {
    const HyperplaneCoeffs h = parse_plane(plane_spec);
    const SectionClass result = classify(h);
    if (as_json) {
      json payload = {{"schema", 1},
                      {"kind", to_string(result.kind)},
                      {"subcase", to_string(result.subcase)},
                      {"entire", result.entire},
                      {"normal_norm", normal_norm(h)}};
      if (result.kind != SectionKind::Empty) {
        payload["H"] = result.mean_curvature;
      }
      emit(payload, out_path);
    } else {
      std::ostringstream line;
      line << to_string(result.kind);
      if (result.kind != SectionKind::Empty) {
        line << " (" << to_string(result.subcase) << ")"
             << (result.entire ? " entire" : " not entire")
             << " H=" << result.mean_curvature;
      }
      line << " normal_norm=" << normal_norm(h);
      std::cout << line.str() << "\n";
    }
    return 0;
  }

  if (curv->parsed()) {
    const Grid grid = Grid::parse(grid_spec);
    const GraphFunction g = resolve_graph(curv_flags, grid, use_fd);
    double h_min = 1e300, h_max = -1e300, k_min = 1e300, k_max = -1e300;
    double q_max = 0.0;
    int n = 0;
    for (int j = 0; j < grid.nv; ++j) {
      for (int i = 0; i < grid.nu; ++i) {
        if (!g.contains(grid.u(i), grid.v(j))) continue;
        const CurvatureData c = curvature_data(g, grid.u(i), grid.v(j));
        h_min = std::min(h_min, c.mean);
        h_max = std::max(h_max, c.mean);
        k_min = std::min(k_min, c.gauss);
        k_max = std::max(k_max, c.gauss);
        q_max = std::max(q_max, std::abs(c.hopf));
        ++n;
      }
    }
    if (n == 0) raise(Errc::DomainBoundary, "no grid point lies in the domain");
    if (as_json) {
      emit(json{{"schema", 1},
                {"samples", n},
                {"H_min", h_min},
                {"H_max", h_max},
                {"K_min", k_min},
                {"K_max", k_max},
                {"Q_max_abs", q_max}},
           out_path);
    } else {
      std::cout << "samples=" << n << " H=[" << h_min << ", " << h_max
                << "] K=[" << k_min << ", " << k_max << "] |Q|<=" << q_max
                << "\n";
    }
    return 0;
  }

  if (scan->parsed()) {
    const std::vector<double> radii = parse_radii(radii_spec);
    const double rmax = radii.back();
    const Grid probe{-rmax, rmax, -rmax, rmax, 41, 41};
    const GraphFunction g = resolve_graph(scan_flags, probe, use_fd);
    const ScanReport report = scan_bernstein(g, radii);
    if (as_json) {
      emit(json{{"schema", 1},
                {"radii", report.radii},
                {"inf_K", report.inf_gauss},
                {"H_mean", report.mean_h},
                {"H_stddev", report.stddev_h},
                {"verdict",
                 report.diverging ? "diverging" : "bounded-below-so-far"}},
           out_path);
    } else {
      for (std::size_t k = 0; k < report.radii.size(); ++k) {
        std::cout << "R=" << report.radii[k] << " inf_K=" << report.inf_gauss[k]
                  << "\n";
      }
      std::cout << "H mean=" << report.mean_h << " stddev=" << report.stddev_h
                << " verdict="
                << (report.diverging ? "diverging" : "bounded-below-so-far")
                << "\n";
    }
    return 0;
  }

  if (dist->parsed()) {
    const DistributionReport report =
        value_distribution(parse(dist_g, ExprMode::Complex), Grid::parse(dist_grid));
    if (as_json) {
      emit(json{{"schema", 1},
                {"samples", report.samples},
                {"K_min", report.min},
                {"K_max", report.max},
                {"deciles", report.deciles},
                {"all_zero", report.all_zero}},
           out_path);
    } else {
      std::cout << "samples=" << report.samples << " K_min=" << report.min
                << " K_max=" << report.max << (report.all_zero ? " (all zero)" : "")
                << "\n";
    }
    return 0;
  }

  if (proj->parsed()) {
    const Grid grid = Grid::parse(proj_grid);
    const MeshSource source = source_from_flags(proj_flags);
    const GraphFunction g = graph_from_source(source, grid);
    const ProjectionReport report =
        projection_check(g, grid, source_attains_puncture(source));
    if (as_json) {
      json payload = {{"schema", 1},
                      {"samples", report.samples},
                      {"duplicate_rays", report.duplicate_rays},
                      {"bins_hit", report.bins_hit},
                      {"bins_total", report.bins_total},
                      {"injective", report.injective},
                      {"verdict", report.verdict}};
      if (report.attains_puncture.has_value()) {
        payload["attains_puncture"] = *report.attains_puncture;
      }
      emit(payload, out_path);
    } else {
      std::cout << "samples=" << report.samples
                << " duplicates=" << report.duplicate_rays << " bins="
                << report.bins_hit << "/" << report.bins_total << " "
                << report.verdict << "\n";
    }
    return 0;
  }

  if (verify->parsed()) {
    const std::vector<CheckResult> results = verify_suite(suite);
    if (as_json) {
      json checks = json::array();
      for (const CheckResult& r : results) {
        checks.push_back({{"name", r.name},
                          {"residual", r.residual},
                          {"tolerance", r.tolerance},
                          {"pass", r.pass}});
      }
      emit(json{{"schema", 1}, {"suite", suite}, {"checks", checks},
                {"pass", all_passed(results)}},
           out_path);
    } else {
      for (const CheckResult& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name
                  << " residual=" << r.residual << " tol=" << r.tolerance
                  << "\n";
      }
    }
    return all_passed(results) ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lightcone::Error& err) {
    std::cerr << "error [" << lightcone::errc_name(err.code()) << "]: "
              << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
}
