#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "catalog.hpp"
#include "errors.hpp"
#include "verify.hpp"
#include "winding.hpp"

namespace umbilic {

namespace {

using nlohmann::json;

double d(real v) { return static_cast<double>(v); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

json base(const std::string& command, const SurfaceSpec* f) {
  return json{{"command", command},
              {"surface", f ? json(f->name) : json(nullptr)},
              {"curve", nullptr},
              {"indices", json::array()},
              {"diagnostics", json::array()},
              {"version", kVersion}};
}

json winding_json(const WindingReport& w) {
  return {{"samples", w.samples},         {"min_magnitude", d(w.min_magnitude)}, {"depth", w.depth},
          {"max_step_angle", d(w.max_step_angle)}, {"raw", d(w.raw)},             {"refined", w.refined}};
}

void add_index(CommandReport& rep, const std::string& route, HalfIndex idx, const WindingReport* w) {
  rep.json["indices"].push_back(
      {{"route", route}, {"twice_index", idx.twice}, {"index", idx.str()}, {"residual", w ? json(d(w->residual)) : json(nullptr)}});
  json diag = {{"route", route}};
  if (w) diag["winding"] = winding_json(*w);
  rep.json["diagnostics"].push_back(diag);
}

bool is_g_family(const SurfaceSpec& f) {
  return (f.kind == SurfaceKind::Fm || f.kind == SurfaceKind::Gm ||
          (f.kind == SurfaceKind::Expression && f.m > 0 && !f.of)) &&
         f.m > 0;
}

bool is_lambda_family(const SurfaceSpec& f) {
  return (f.kind == SurfaceKind::LambdaM || f.kind == SurfaceKind::Dual) && f.m > 0;
}

real parse_real(const std::string& s, const std::string& what) {
  size_t used = 0;
  real v = 0;
  try {
    v = std::stold(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !is_finite(v)) throw ParseError("malformed number '" + s + "' in " + what);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

CurveSpec parse_curve(const std::string& text) {
  const size_t colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("curve '" + text + "': expected circle:R or ellipse:A,B");
  const std::string kind = text.substr(0, colon);
  std::string args = text.substr(colon + 1);
  Point2 center;
  if (const size_t at = args.find('@'); at != std::string::npos) {
    const auto c = split(args.substr(at + 1), ',');
    if (c.size() != 2) throw ParseError("curve '" + text + "': centre must be X,Y");
    center = {parse_real(c[0], "curve centre"), parse_real(c[1], "curve centre")};
    args = args.substr(0, at);
  }
  const auto v = split(args, ',');
  if (kind == "circle" && v.size() == 1) {
    const real r = parse_real(v[0], "circle radius");
    if (!(r > 0)) throw InvalidArgument("circle radius must be positive");
    return CurveSpec::circle(r, center);
  }
  if (kind == "ellipse" && v.size() == 2) {
    const real a = parse_real(v[0], "ellipse axis"), b = parse_real(v[1], "ellipse axis");
    if (!(a > 0 && b > 0)) throw InvalidArgument("ellipse axes must be positive");
    return CurveSpec::ellipse(a, b, center);
  }
  throw ParseError("curve '" + text + "': expected circle:R[@X,Y] or ellipse:A,B[@X,Y]");
}

CommandReport cmd_index(const SurfaceSpec& f, const std::string& curve_text, const std::string& route) {
  CommandReport rep;
  rep.json = base("index", &f);
  std::ostringstream out;
  out << "surface: " << f.name << '\n';
  for (const std::string& w : f.warnings) out << "warning: " << w << '\n';
  CurveSpec curve;
  json curve_json;
  bool auto_g = false;
  if (curve_text == "auto") {
    if (is_g_family(f)) {
      const RadiusSearch rs = find_valid_radius_g(f);
      curve = CurveSpec::circle(rs.radius);
      auto_g = true;
      const SignConditions& s = rs.conditions;
      curve_json = {{"spec", "auto"},
                    {"kind", "circle"},
                    {"radius", d(rs.radius)},
                    {"search_steps", rs.steps},
                    {"sign_conditions",
                     {{"delta2_at_0", d(s.delta2_at_0)},
                      {"delta2_at_pi_over_m", d(s.delta2_at_pi_m)},
                      {"d_delta1_at_0", d(s.d_delta1_at_0)},
                      {"d_delta1_at_pi_over_m", d(s.d_delta1_at_pi_m)},
                      {"sign_changes", s.sign_changes},
                      {"expected_changes", s.expected_changes},
                      {"hold", s.holds()}}}};
      out << "curve: circle r = " << fmt("%.6Lg", rs.radius) << " (auto, " << rs.steps << " doublings)\n";
      out << "sign conditions: " << (s.holds() ? "hold" : "fail")
          << fmt(" (delta2(0) = %.4Lg, delta2(pi/m) = %.4Lg, d delta1(0) = %.4Lg, d delta1(pi/m) = %.4Lg)\n",
                 s.delta2_at_0, s.delta2_at_pi_m, s.d_delta1_at_0, s.d_delta1_at_pi_m);
    } else if (is_lambda_family(f)) {
      const LambdaRadiusSearch rs = find_valid_radius_lambda(f);
      curve = CurveSpec::circle(rs.radius);
      curve_json = {{"spec", "auto"},
                    {"kind", "circle"},
                    {"radius", d(rs.radius)},
                    {"search_steps", rs.steps},
                    {"zeta_conditions",
                     {{"zeta2_at_0", d(rs.conditions.zeta2_at_0)},
                      {"zeta2_at_pi_over_m", d(rs.conditions.zeta2_at_pi_m)},
                      {"sign_changes", rs.conditions.sign_changes},
                      {"expected_changes", rs.conditions.expected_changes},
                      {"hold", rs.conditions.holds()}}}};
      out << "curve: circle r = " << fmt("%.6Lg", rs.radius) << " (auto, " << rs.steps << " halvings)\n";
    } else {
      throw InvalidArgument("--curve auto needs an fm, gm, lambda or dual surface with m set");
    }
  } else {
    curve = parse_curve(curve_text);
    curve_json = {{"spec", curve_text}, {"kind", curve.describe()}};
    out << "curve: " << curve.describe() << '\n';
  }
  rep.json["curve"] = curve_json;

  std::vector<std::string> routes;
  if (route == "all") {
    if (is_lambda_family(f)) {
      routes = {"hessian-polar", "hessian-cartesian", "hessian-direct"};
    } else {
      routes = {"D", "delta", "direct"};
    }
  } else {
    routes = {route};
  }
  const bool origin_circle =
      curve.kind == CurveSpec::Kind::Circle && curve.center.x == 0 && curve.center.y == 0;
  for (const std::string& r : routes) {
    if (r == "D" || r == "direct") {
      const IndexResult ir = r == "D" ? umbilic_index_via_D(f, curve) : umbilic_index_direct(f, curve);
      add_index(rep, r, ir.index, &ir.winding);
      out << "route " << r << ": I = " << ir.index.str() << '\n';
    } else if (r == "delta") {
      const WindingReport w = delta_index(f, curve);
      const HalfIndex I{2 * winding_about_origin(curve) + w.index};
      add_index(rep, "delta", I, &w);
      rep.json["diagnostics"].back()["ind_Delta"] = w.index;
      out << "route delta: ind(Delta) = " << w.index << '\n' << "I = " << I.str() << '\n';
      if (auto_g) {
        const HalfIndex inv = inverted_index(I);
        add_index(rep, "inverted", inv, nullptr);
        out << "inverted index = " << inv.str() << '\n';
      }
    } else if (r == "sign-change") {
      if (!origin_circle) throw InvalidArgument("sign-change route needs a circle about the origin");
      const SignChangeResult sc = sign_change_index(f, curve);
      const HalfIndex I{2 + sc.index};
      rep.json["indices"].push_back(
          {{"route", "sign-change"}, {"twice_index", I.twice}, {"index", I.str()}, {"residual", nullptr}});
      json roots = json::array();
      for (const SignChangeRoot& s : sc.roots)
        roots.push_back({{"theta", d(s.t)}, {"d_delta1", d(s.d_delta1)}, {"delta2", d(s.delta2)}, {"epsilon", s.epsilon}});
      rep.json["diagnostics"].push_back({{"route", "sign-change"}, {"ind_Delta", sc.index}, {"roots", roots}});
      out << "route sign-change: ind(Delta) = " << sc.index << " from " << sc.roots.size() << " zeros of delta1\n"
          << "I = " << I.str() << '\n';
    } else if (r == "hessian-cartesian" || r == "hessian-polar" || r == "hessian-direct") {
      const HessianRoute hr = r == "hessian-cartesian" ? HessianRoute::Cartesian
                              : r == "hessian-polar"   ? HessianRoute::Polar
                                                       : HessianRoute::Direct;
      const IndexResult ir = hessian_flow_index(f, curve, hr);
      add_index(rep, r, ir.index, &ir.winding);
      out << "route " << r << ": " << ir.index.str();
      if (hr == HessianRoute::Polar) out << " (ind(delta_g) = " << ir.winding.index << ")";
      out << '\n';
    } else if (r == "infinity") {
      if (!origin_circle) throw InvalidArgument("infinity route needs a circle about the origin");
      const IndexResult ir = index_at_infinity(f, curve.radius);
      add_index(rep, "infinity", ir.index, &ir.winding);
      out << "index at infinity: " << ir.index.str() << '\n';
    } else {
      throw InvalidArgument("unknown route '" + r + "'");
    }
  }
  rep.text = out.str();
  return rep;
}

CommandReport cmd_scan(const SurfaceSpec& f, const Rect& rect, int nx, int ny) {
  CommandReport rep;
  rep.json = base("scan", &f);
  const ScanResult s = scan_umbilics(f, rect, nx, ny);
  json cells = json::array();
  std::ostringstream out;
  out << "surface: " << f.name << '\n'
      << fmt("grid: [%Lg, %Lg] x [%Lg, %Lg], %d x %d nodes\n", rect.xmin, rect.xmax, rect.ymin, rect.ymax, nx, ny)
      << "candidates: " << s.candidates.size() << '\n';
  for (const ScanCell& c : s.candidates) {
    cells.push_back({{"i", c.i},
                     {"j", c.j},
                     {"x", {d(c.x0), d(c.x1)}},
                     {"y", {d(c.y0), d(c.y1)}},
                     {"twice_index", c.twice_index},
                     {"zero_on_boundary", c.zero_on_boundary}});
    out << fmt("  cell [%.6Lg, %.6Lg] x [%.6Lg, %.6Lg]: ", c.x0, c.x1, c.y0, c.y1)
        << (c.zero_on_boundary ? std::string("identifiers vanish on the boundary")
                               : "index " + HalfIndex{c.twice_index}.str())
        << '\n';
  }
  json results = {{"candidates", cells},
                  {"sign_cells", s.sign_cells},
                  {"min_d1", d(s.min_d1)},
                  {"max_d1", d(s.max_d1)},
                  {"min_abs_d2", d(s.min_abs_d2)}};
  out << fmt("min d1 = %.6Lg, max d1 = %.6Lg, min |d2| = %.6Lg\n", s.min_d1, s.max_d1, s.min_abs_d2);
  if (f.kind == SurfaceKind::GhomiHoward) {
    // d1 vanishes on y = 0 and on x = -y^2.
    std::vector<Point2> axis, parabola;
    const real ylim = std::min({rect.ymax, -rect.ymin, std::sqrt(std::max<real>(0, -rect.xmin))});
    for (int k = 0; k < 200; ++k) {
      axis.push_back({rect.xmin + (rect.xmax - rect.xmin) * k / 199, 0});
      const real y = -ylim + 2 * ylim * k / 199;
      parabola.push_back({-y * y, y});
    }
    const real ma = min_abs_d2(f, axis), mp = min_abs_d2(f, parabola);
    results["min_abs_d2_on_y0"] = d(ma);
    results["min_abs_d2_on_parabola"] = d(mp);
    out << fmt("min |d2| on y = 0: %.6Lg, on x = -y^2: %.6Lg (200 samples each)\n", ma, mp);
  }
  rep.json["results"] = results;
  rep.text = out.str();
  return rep;
}

CommandReport cmd_regularity(const SurfaceSpec& f, const RegularityOptions& opt, bool limits) {
  CommandReport rep;
  rep.json = base("regularity", &f);
  const RegularityReport r = check_regularity(f, opt);
  std::ostringstream out;
  out << "surface: " << f.name << '\n' << "level: " << level_name(r.level) << fmt(" (c = %Lg)\n", r.c);
  json ws = json::array();
  for (const Witness& w : r.witnesses) {
    json vals = json::array(), radii = json::array();
    for (real v : w.values) vals.push_back(d(v));
    for (real v : w.radii) radii.push_back(d(v));
    ws.push_back({{"criterion", w.criterion},
                  {"kind", w.kind},
                  {"level", level_name(w.level)},
                  {"radii", radii},
                  {"sup", vals},
                  {"pass", w.pass}});
    out << fmt("  %-22s %-9s %-4s", w.criterion.c_str(), w.kind.c_str(), w.pass ? "ok" : "no");
    for (size_t k = w.values.size() >= 4 ? w.values.size() - 4 : 0; k < w.values.size(); ++k)
      out << fmt(" %.4Lg", w.values[k]);
    out << '\n';
  }
  rep.json["results"] = {{"level", level_name(r.level)}, {"c", d(r.c)}, {"witnesses", ws}};
  if (limits) {
    const HattedLimitsReport h = check_hatted_limits(f);
    json seqs = json::array();
    out << "limits near the origin of the inverted graph (rho = 1e-1 .. 1e-6):\n";
    for (const LimitSequence& s : h.sequences) {
      json vals = json::array();
      for (real v : s.values) vals.push_back(d(v));
      seqs.push_back({{"quantity", s.quantity}, {"sup", vals}, {"monotone", s.monotone}, {"below_tol", s.below_tol}});
      out << fmt("  %-16s %s %s", s.quantity.c_str(), s.monotone ? "decreasing" : "not-monotone",
                 s.below_tol ? "below" : "above");
      for (real v : s.values) out << fmt(" %.3Lg", v);
      out << '\n';
    }
    rep.json["results"]["limits"] = {
        {"tol", d(h.tol)}, {"sequences", seqs}, {"kuv_printed_vs_ad", d(h.kuv_printed_vs_ad)}};
    out << fmt("printed k_uv vs AD: relative difference %.3Lg\n", h.kuv_printed_vs_ad);
  }
  rep.text = out.str();
  return rep;
}

CommandReport cmd_duality(const SurfaceSpec& f, real radius_out, real radius_in) {
  CommandReport rep;
  rep.json = base("duality", &f);
  if (!(radius_in > 0)) {
    const SurfaceSpec g = make_dual(f);
    radius_in = g.m > 0 ? find_valid_radius_lambda(g).radius : 0.1L;
  }
  if (!(radius_out > 0)) radius_out = 1 / radius_in;
  const DualityResult r = duality_check(f, radius_out, radius_in);
  add_index(rep, "dual-origin", r.at_origin, &r.origin_detail.winding);
  add_index(rep, "infinity", r.at_infinity, &r.infinity_detail.winding);
  rep.passed = r.twice_sum == 4;
  rep.json["curve"] = {{"radius_out", d(radius_out)}, {"radius_in", d(radius_in)}};
  rep.json["results"] = {{"twice_sum", r.twice_sum}, {"sum", HalfIndex{r.twice_sum}.str()}};
  std::ostringstream out;
  out << "surface: " << f.name << '\n'
      << fmt("ind_o(H_dual) = %s on r = %.6Lg\n", r.at_origin.str().c_str(), radius_in)
      << fmt("ind_inf(H_f) = %s on r = %.6Lg\n", r.at_infinity.str().c_str(), radius_out)
      << "sum = " << HalfIndex{r.twice_sum}.str() << '\n';
  rep.text = out.str();
  return rep;
}

CommandReport cmd_verify(const std::string& suite) {
  CommandReport rep;
  rep.json = base("verify", nullptr);
  const std::vector<Check> checks = run_suite(suite);
  json arr = json::array();
  std::ostringstream out;
  int failed = 0;
  for (const Check& c : checks) {
    arr.push_back({{"suite", c.suite}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"data", c.data}});
    out << (c.pass ? "PASS " : "FAIL ") << c.suite << ": " << c.name << " - " << c.detail << '\n';
    if (!c.pass) ++failed;
  }
  out << checks.size() - failed << '/' << checks.size() << " checks passed\n";
  rep.passed = failed == 0;
  rep.json["results"] = {{"suite", suite}, {"checks", arr}, {"passed", rep.passed}};
  rep.text = out.str();
  return rep;
}

CommandReport cmd_export(const SurfaceSpec& f, const ExportRequest& req, const std::string& path) {
  CommandReport rep;
  rep.json = base("export", &f);
  std::function<void(std::ostream&)> writer;
  if (req.what == "field-csv") {
    const FieldKind k = parse_field_kind(req.field);
    writer = [&](std::ostream& os) { write_field_csv(os, f, k, req.rect, req.nx, req.ny); };
  } else if (req.what == "field-svg") {
    const FieldKind k = parse_field_kind(req.field);
    if (req.annulus) {
      writer = [&](std::ostream& os) { write_field_svg(os, f, k, req.ring, req.nr, req.ntheta); };
    } else {
      writer = [&](std::ostream& os) { write_field_svg(os, f, k, req.rect, req.nx, req.ny); };
    }
  } else if (req.what == "mesh-obj") {
    MeshKind k;
    if (req.mesh == "inversion") {
      k = MeshKind::Inversion;
    } else if (req.mesh == "congruence") {
      k = MeshKind::Congruence;
    } else {
      throw InvalidArgument("unknown mesh '" + req.mesh + "' (inversion, congruence)");
    }
    writer = [&, k](std::ostream& os) { write_mesh_obj(os, f, k, req.rmax, req.n_radial, req.n_theta); };
  } else {
    throw InvalidArgument("unknown export '" + req.what + "' (field-csv, field-svg, mesh-obj)");
  }
  // Render first so that evaluation errors never leave a partial file behind.
  std::ostringstream buf;
  writer(buf);
  export_to_file(path, [&](std::ostream& os) { os << buf.str(); });
  rep.json["results"] = {{"what", req.what}, {"path", path}, {"bytes", buf.str().size()}};
  rep.text = "wrote " + req.what + " to " + path + '\n';
  return rep;
}

}  // namespace umbilic
