#include <umbilic/umbilic.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitParse = 3;
constexpr int kExitIo = 4;

int exit_code(umb_status s) {
  switch (s) {
    case UMB_OK:
      return kExitOk;
    case UMB_ERR_PARSE:
    case UMB_ERR_INVALID_ARGUMENT:
      return kExitParse;
    case UMB_ERR_IO:
      return kExitIo;
    default:
      return kExitNumeric;
  }
}

struct SurfaceDeleter {
  void operator()(umb_surface* s) const { umb_surface_free(s); }
};
struct ReportDeleter {
  void operator()(umb_report* r) const { umb_report_free(r); }
};
using SurfacePtr = std::unique_ptr<umb_surface, SurfaceDeleter>;
using ReportPtr = std::unique_ptr<umb_report, ReportDeleter>;

int fail(umb_status s) {
  std::cerr << "error (" << umb_status_name(s) << "): " << umb_last_error() << '\n';
  return exit_code(s);
}

std::vector<double> numbers(const std::string& text, size_t n, const char* what) {
  std::vector<double> out;
  std::string cur;
  std::stringstream ss(text);
  while (std::getline(ss, cur, ',')) {
    size_t used = 0;
    double v = 0;
    try {
      v = std::stod(cur, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != cur.size()) throw CLI::ValidationError(what, "malformed number '" + cur + "'");
    out.push_back(v);
  }
  if (out.size() != n) throw CLI::ValidationError(what, "expected " + std::to_string(n) + " comma-separated numbers");
  return out;
}

std::pair<int, int> grid(const std::string& text, const char* what) {
  const size_t x = text.find('x');
  try {
    if (x == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError(what, "expected N or NxM");
  }
}

struct Output {
  std::string json_path;
  bool timing = false;
  bool quiet = false;
};

// Prints the report and writes the JSON file; returns the exit code.
int emit(umb_report* r, const Output& o, double seconds) {
  if (!o.quiet) std::cout << umb_report_text(r);
  if (!o.json_path.empty()) {
    nlohmann::json j = nlohmann::json::parse(umb_report_json(r));
    if (o.timing) j["wall_time_s"] = seconds;
    std::ofstream f(o.json_path);
    if (!f) {
      std::cerr << "error: cannot write " << o.json_path << '\n';
      return kExitIo;
    }
    f << j.dump(2) << '\n';
    if (!f) {
      std::cerr << "error: write to " << o.json_path << " failed\n";
      return kExitIo;
    }
  }
  if (o.timing) std::cerr << "wall time " << seconds << " s\n";
  return umb_report_passed(r) ? kExitOk : kExitFailed;
}

template <class Fn>
int run(const Output& o, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  umb_report* raw = nullptr;
  const umb_status s = fn(&raw);
  ReportPtr r(raw);
  if (s != UMB_OK) return fail(s);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return emit(r.get(), o, secs);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Umbilic indices, regularity and duality checks for graph surfaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", umb_version());

  Output out;
  std::string surface_text;
  auto common = [&](CLI::App* sub, bool needs_surface) {
    if (needs_surface) sub->add_option("--surface,-s", surface_text, "surface spec, e.g. fm:m=3,a=0.1")->required();
    sub->add_option("--json", out.json_path, "write the report as JSON");
    sub->add_flag("--timing", out.timing, "record wall time");
    sub->add_flag("--quiet,-q", out.quiet, "suppress the text report");
  };

  std::string curve = "auto", route = "all";
  CLI::App* index = app.add_subcommand("index", "index of an umbilic or Hessian eigen-flow along a curve");
  common(index, true);
  index->add_option("--curve,-c", curve, "circle:R[@X,Y] | ellipse:A,B[@X,Y] | auto")->capture_default_str();
  index->add_option("--route,-r", route,
                    "D | delta | direct | sign-change | hessian-cartesian | hessian-polar | hessian-direct | "
                    "infinity | all")
      ->capture_default_str();

  std::string rect = "-1,1,-1,1", scan_grid = "400";
  CLI::App* scan = app.add_subcommand("scan", "umbilic candidates on a grid");
  common(scan, true);
  scan->add_option("--rect", rect, "xmin,xmax,ymin,ymax")->capture_default_str();
  scan->add_option("--grid", scan_grid, "nodes per axis, N or NxM")->capture_default_str();

  umb_regularity_options ropt;
  umb_regularity_options_default(&ropt);
  bool limits = false;
  CLI::App* reg = app.add_subcommand("regularity", "regularity ladder of the inverted graph");
  common(reg, true);
  reg->add_option("--R", ropt.R, "base radius")->capture_default_str();
  reg->add_option("--radii", ropt.radii, "number of radii R*4^k")->capture_default_str();
  reg->add_option("--theta-grid", ropt.theta_grid, "angular samples")->capture_default_str();
  reg->add_option("--c", ropt.c, "exponent of the C2 criterion (negative: automatic)")->capture_default_str();
  reg->add_flag("--limits", limits, "also sample the limits near the origin of the inversion");

  double r_out = 0, r_in = 0;
  CLI::App* dual = app.add_subcommand("duality", "index at infinity plus index of the dual at the origin");
  common(dual, true);
  dual->add_option("--r-out", r_out, "radius of the circle near infinity (default 1/r-in)");
  dual->add_option("--r-in", r_in, "radius of the circle about the origin (default: valid radius of the dual)");

  std::string suite = "all";
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify, false);
  verify->add_option("--suite", suite, "indices | regularity | duality | ribaucour | all")
      ->check(CLI::IsMember({"indices", "regularity", "duality", "ribaucour", "all"}))
      ->capture_default_str();

  umb_export_options eopt;
  umb_export_options_default(&eopt);
  std::string what = eopt.what, field = eopt.field, mesh = eopt.mesh, erect = "-1,1,-1,1", egrid = "50";
  std::string annulus, samples = "8x48", mesh_grid = "200x720", path;
  CLI::App* exp = app.add_subcommand("export", "write a field (CSV, SVG) or a mesh (OBJ)");
  common(exp, true);
  exp->add_option("--what", what, "field-csv | field-svg | mesh-obj")->capture_default_str();
  exp->add_option("--field", field, "principal | D | delta | hessian | hessian-delta")->capture_default_str();
  exp->add_option("--rect", erect, "xmin,xmax,ymin,ymax")->capture_default_str();
  exp->add_option("--grid", egrid, "nodes per axis, N or NxM")->capture_default_str();
  exp->add_option("--annulus", annulus, "r0,r1: SVG samples on an annulus");
  exp->add_option("--samples", samples, "annulus samples, radial x angular")->capture_default_str();
  exp->add_option("--mesh", mesh, "inversion | congruence")->capture_default_str();
  exp->add_option("--rmax", eopt.rmax, "mesh radius in the parameter plane")->capture_default_str();
  exp->add_option("--mesh-grid", mesh_grid, "rings x sectors")->capture_default_str();
  exp->add_option("--out,-o", path, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  SurfacePtr surface;
  if (!surface_text.empty()) {
    umb_surface* raw = nullptr;
    const umb_status s = umb_surface_parse(surface_text.c_str(), &raw);
    if (s != UMB_OK) return fail(s);
    surface.reset(raw);
    for (size_t i = 0; i < umb_surface_warning_count(raw); ++i)
      std::cerr << "warning: " << umb_surface_warning(raw, i) << '\n';
  }

  try {
    if (*index) {
      return run(out, [&](umb_report** r) { return umb_index(surface.get(), curve.c_str(), route.c_str(), r); });
    }
    if (*scan) {
      const auto b = numbers(rect, 4, "--rect");
      const auto [nx, ny] = grid(scan_grid, "--grid");
      return run(out, [&](umb_report** r) { return umb_scan(surface.get(), b[0], b[1], b[2], b[3], nx, ny, r); });
    }
    if (*reg) {
      ropt.limits = limits ? 1 : 0;
      return run(out, [&](umb_report** r) { return umb_regularity(surface.get(), &ropt, r); });
    }
    if (*dual) {
      return run(out, [&](umb_report** r) { return umb_duality(surface.get(), r_out, r_in, r); });
    }
    if (*verify) {
      return run(out, [&](umb_report** r) { return umb_verify(suite.c_str(), r); });
    }
    if (*exp) {
      const auto b = numbers(erect, 4, "--rect");
      const auto [nx, ny] = grid(egrid, "--grid");
      const auto [nr, nt] = grid(samples, "--samples");
      const auto [mr, mt] = grid(mesh_grid, "--mesh-grid");
      eopt.what = what.c_str();
      eopt.field = field.c_str();
      eopt.mesh = mesh.c_str();
      eopt.xmin = b[0];
      eopt.xmax = b[1];
      eopt.ymin = b[2];
      eopt.ymax = b[3];
      eopt.nx = nx;
      eopt.ny = ny;
      if (!annulus.empty()) {
        const auto a = numbers(annulus, 2, "--annulus");
        eopt.annulus = 1;
        eopt.r0 = a[0];
        eopt.r1 = a[1];
      }
      eopt.nr = nr;
      eopt.ntheta = nt;
      eopt.n_radial = mr;
      eopt.n_theta = mt;
      return run(out, [&](umb_report** r) { return umb_export(surface.get(), &eopt, path.c_str(), r); });
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitParse;
}
