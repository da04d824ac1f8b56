#pragma once

#include <string>

#include <json.hpp>

#include "exporters.hpp"
#include "inversion.hpp"
#include "scan.hpp"
#include "surface.hpp"

namespace umbilic {

inline constexpr const char* kVersion = "0.1.0";

// Outcome of one front-end command: a JSON document with the keys command,
// surface, curve, indices, diagnostics, version (plus results), and the
// matching plain-text lines.
struct CommandReport {
  nlohmann::json json;
  std::string text;
  bool passed = true;
};

// curve: circle:R[@X,Y] | ellipse:A,B[@X,Y] | auto
// route: D | delta | direct | sign-change | hessian-cartesian | hessian-polar |
//        hessian-direct | infinity | all
CommandReport cmd_index(const SurfaceSpec& f, const std::string& curve, const std::string& route);
CommandReport cmd_scan(const SurfaceSpec& f, const Rect& rect, int nx, int ny);
CommandReport cmd_regularity(const SurfaceSpec& f, const RegularityOptions& opt, bool limits);
// Non-positive radii select defaults.
CommandReport cmd_duality(const SurfaceSpec& f, real radius_out, real radius_in);
CommandReport cmd_verify(const std::string& suite);

struct ExportRequest {
  std::string what = "field-csv";  // field-csv | field-svg | mesh-obj
  std::string field = "principal";
  Rect rect;
  int nx = 50, ny = 50;
  bool annulus = false;
  Annulus ring;
  int nr = 8, ntheta = 48;
  std::string mesh = "inversion";  // inversion | congruence
  real rmax = 0.5L;
  int n_radial = 200, n_theta = 720;
};
CommandReport cmd_export(const SurfaceSpec& f, const ExportRequest& req, const std::string& path);

CurveSpec parse_curve(const std::string& text);

}  // namespace umbilic
