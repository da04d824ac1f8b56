#include <umbilic/umbilic.h>

#include <cmath>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "commands.hpp"
#include "errors.hpp"
#include "jets.hpp"

struct umb_surface {
  umbilic::SurfaceSpec spec;
};

struct umb_report {
  umbilic::CommandReport report;
  std::string json;
  std::vector<std::string> routes;
};

namespace {

thread_local std::string g_last_error;

template <class Fn>
umb_status guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return UMB_OK;
  } catch (const umbilic::Error& e) {
    g_last_error = e.what();
    return static_cast<umb_status>(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  }
  return UMB_ERR_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) throw umbilic::InvalidArgument(what);
}

umb_report* wrap(umbilic::CommandReport&& r) {
  auto* out = new umb_report{std::move(r), {}, {}};
  out->json = out->report.json.dump(2);
  for (const auto& e : out->report.json["indices"]) out->routes.push_back(e["route"].get<std::string>());
  return out;
}

}  // namespace

extern "C" {

const char* umb_version(void) { return umbilic::kVersion; }

const char* umb_status_name(umb_status s) {
  switch (s) {
    case UMB_OK:
      return "ok";
    case UMB_ERR_PARSE:
      return "parse error";
    case UMB_ERR_DOMAIN:
      return "domain error";
    case UMB_ERR_NONFINITE:
      return "non-finite value";
    case UMB_ERR_ZERO_ON_CURVE:
      return "zero on curve";
    case UMB_ERR_UMBILIC_ON_CURVE:
      return "umbilic on curve";
    case UMB_ERR_TANGENT_ZERO:
      return "tangential zero";
    case UMB_ERR_NO_CONVERGENCE:
      return "no convergence";
    case UMB_ERR_UMBILIC:
      return "umbilic";
    case UMB_ERR_EQUI_DIAGONAL:
      return "equi-diagonal point";
    case UMB_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case UMB_ERR_IO:
      return "i/o error";
    case UMB_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

const char* umb_last_error(void) { return g_last_error.c_str(); }

umb_status umb_surface_parse(const char* text, umb_surface** out) {
  return guard([&] {
    require(text && out, "null argument");
    *out = nullptr;
    *out = new umb_surface{umbilic::parse_surface(text)};
  });
}

void umb_surface_free(umb_surface* s) { delete s; }

const char* umb_surface_name(const umb_surface* s) { return s ? s->spec.name.c_str() : ""; }

size_t umb_surface_warning_count(const umb_surface* s) { return s ? s->spec.warnings.size() : 0; }

const char* umb_surface_warning(const umb_surface* s, size_t i) {
  return s && i < s->spec.warnings.size() ? s->spec.warnings[i].c_str() : "";
}

umb_status umb_jet(const umb_surface* s, double x, double y, int order, int polar, double out[10]) {
  return guard([&] {
    require(s && out, "null argument");
    require(order == 2 || order == 3, "order must be 2 or 3");
    const umbilic::Jet j = polar ? umbilic::eval_polar_jet(s->spec, umbilic::PolarPoint::make(x, y), order)
                                 : umbilic::eval_jet(s->spec, {x, y}, order);
    out[0] = static_cast<double>(j.value);
    for (int k = 0; k < 2; ++k) out[1 + k] = static_cast<double>(j.first[k]);
    for (int k = 0; k < 3; ++k) out[3 + k] = static_cast<double>(j.second[k]);
    for (int k = 0; k < 4; ++k) out[6 + k] = static_cast<double>(j.third[k]);
  });
}

umb_status umb_index(const umb_surface* s, const char* curve, const char* route, umb_report** out) {
  return guard([&] {
    require(s && curve && route && out, "null argument");
    *out = nullptr;
    *out = wrap(umbilic::cmd_index(s->spec, curve, route));
  });
}

umb_status umb_scan(const umb_surface* s, double xmin, double xmax, double ymin, double ymax, int nx, int ny,
                    umb_report** out) {
  return guard([&] {
    require(s && out, "null argument");
    require(xmin < xmax && ymin < ymax, "empty scan rectangle");
    *out = nullptr;
    *out = wrap(umbilic::cmd_scan(s->spec, {xmin, xmax, ymin, ymax}, nx, ny));
  });
}

void umb_regularity_options_default(umb_regularity_options* o) {
  if (!o) return;
  const umbilic::RegularityOptions d;
  o->R = static_cast<double>(d.R);
  o->radii = d.radii;
  o->theta_grid = d.theta_grid;
  o->c = static_cast<double>(d.c);
  o->limits = 0;
}

umb_status umb_regularity(const umb_surface* s, const umb_regularity_options* o, umb_report** out) {
  return guard([&] {
    require(s && out, "null argument");
    umb_regularity_options opt;
    umb_regularity_options_default(&opt);
    if (o) opt = *o;
    require(opt.R > 0 && opt.radii >= 4 && opt.theta_grid >= 8, "regularity needs R > 0, radii >= 4, grid >= 8");
    umbilic::RegularityOptions ro;
    ro.R = opt.R;
    ro.radii = opt.radii;
    ro.theta_grid = opt.theta_grid;
    ro.c = opt.c;
    *out = nullptr;
    *out = wrap(umbilic::cmd_regularity(s->spec, ro, opt.limits != 0));
  });
}

umb_status umb_duality(const umb_surface* s, double radius_out, double radius_in, umb_report** out) {
  return guard([&] {
    require(s && out, "null argument");
    *out = nullptr;
    *out = wrap(umbilic::cmd_duality(s->spec, radius_out, radius_in));
  });
}

umb_status umb_verify(const char* suite, umb_report** out) {
  return guard([&] {
    require(suite && out, "null argument");
    *out = nullptr;
    *out = wrap(umbilic::cmd_verify(suite));
  });
}

void umb_export_options_default(umb_export_options* o) {
  if (!o) return;
  const umbilic::ExportRequest d;
  o->what = "field-csv";
  o->field = "principal";
  o->xmin = static_cast<double>(d.rect.xmin);
  o->xmax = static_cast<double>(d.rect.xmax);
  o->ymin = static_cast<double>(d.rect.ymin);
  o->ymax = static_cast<double>(d.rect.ymax);
  o->nx = d.nx;
  o->ny = d.ny;
  o->annulus = 0;
  o->r0 = static_cast<double>(d.ring.r0);
  o->r1 = static_cast<double>(d.ring.r1);
  o->nr = d.nr;
  o->ntheta = d.ntheta;
  o->mesh = "inversion";
  o->rmax = static_cast<double>(d.rmax);
  o->n_radial = d.n_radial;
  o->n_theta = d.n_theta;
}

umb_status umb_export(const umb_surface* s, const umb_export_options* o, const char* path, umb_report** out) {
  return guard([&] {
    require(s && o && path && out, "null argument");
    require(o->what && o->field && o->mesh, "null option string");
    umbilic::ExportRequest r;
    r.what = o->what;
    r.field = o->field;
    r.rect = {o->xmin, o->xmax, o->ymin, o->ymax};
    r.nx = o->nx;
    r.ny = o->ny;
    r.annulus = o->annulus != 0;
    r.ring = {o->r0, o->r1};
    r.nr = o->nr;
    r.ntheta = o->ntheta;
    r.mesh = o->mesh;
    r.rmax = o->rmax;
    r.n_radial = o->n_radial;
    r.n_theta = o->n_theta;
    *out = nullptr;
    *out = wrap(umbilic::cmd_export(s->spec, r, path));
  });
}

const char* umb_report_json(const umb_report* r) { return r ? r->json.c_str() : ""; }
const char* umb_report_text(const umb_report* r) { return r ? r->report.text.c_str() : ""; }
int umb_report_passed(const umb_report* r) { return r && r->report.passed ? 1 : 0; }
size_t umb_report_index_count(const umb_report* r) { return r ? r->routes.size() : 0; }

int umb_report_twice_index(const umb_report* r, size_t i) {
  if (!r || i >= r->routes.size()) return 0;
  return r->report.json["indices"][i]["twice_index"].get<int>();
}

const char* umb_report_route(const umb_report* r, size_t i) {
  return r && i < r->routes.size() ? r->routes[i].c_str() : "";
}

void umb_report_free(umb_report* r) { delete r; }

}  // extern "C"
