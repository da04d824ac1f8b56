#include "catalog.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>

#include "errors.hpp"

namespace umbilic {

namespace {

using namespace expr;

std::string num(real v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Lg", v);
  return buf;
}

Expr sq(Expr e) { return expr::pow(std::move(e), 2); }

// r^p cos(m theta)
Expr polar_argument(int m, real p) { return expr::pow(expr::r(), p) * func(Fn::Cos, constant(m) * expr::theta()); }

void check_m(int m) {
  if (m < 1) throw InvalidArgument("m must be a positive integer");
}

SurfaceSpec base(SurfaceKind kind, std::string name, Expr e, Domain d) {
  SurfaceSpec s;
  s.kind = kind;
  s.name = std::move(name);
  s.expr = std::move(e);
  s.domain = d;
  return s;
}

std::map<std::string, std::string> parse_params(std::string_view text) {
  std::map<std::string, std::string> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(pos, end - pos);
    const size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) throw ParseError("surface parameter '" + std::string(item) + "' is not key=value");
    out[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    pos = end + 1;
  }
  return out;
}

real to_real(const std::map<std::string, std::string>& p, const std::string& key, bool required, real fallback) {
  const auto it = p.find(key);
  if (it == p.end()) {
    if (required) throw ParseError("surface parameter '" + key + "' is required");
    return fallback;
  }
  char* end = nullptr;
  const real v = std::strtold(it->second.c_str(), &end);
  if (it->second.empty() || *end != '\0' || !is_finite(v)) throw ParseError("surface parameter '" + key + "' is not a number");
  return v;
}

int to_int(const std::map<std::string, std::string>& p, const std::string& key) {
  const real v = to_real(p, key, true, 0);
  if (v != std::nearbyint(v) || v < 1 || v > 1000) throw ParseError("surface parameter '" + key + "' must be a positive integer");
  return static_cast<int>(v);
}

void allow_only(const std::map<std::string, std::string>& p, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : p) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) throw ParseError("unknown surface parameter '" + k + "'");
  }
}

}  // namespace

namespace catalog {

SurfaceSpec bates() {
  Expr x = expr::x(), y = expr::y();
  Expr e = 2.0L + (x * y) / (func(Fn::Sqrt, 1.0L + sq(x)) * func(Fn::Sqrt, 1.0L + sq(y)));
  return base(SurfaceKind::Bates, "bates", e, Domain::all_plane());
}

SurfaceSpec ghomi_howard(real lam) {
  if (!(lam > 0)) throw InvalidArgument("Ghomi-Howard parameter lam must be positive");
  Expr x = expr::x(), y = expr::y();
  Expr w = x + sq(y);
  Expr e = 1.0L + lam * ((1.0L + w) / func(Fn::Sqrt, 1.0L + sq(w)));
  SurfaceSpec s = base(SurfaceKind::GhomiHoward, "gh:lam=" + num(lam), e, Domain::all_plane());
  s.lam = lam;
  return s;
}

SurfaceSpec rez3() {
  Expr x = expr::x(), y = expr::y();
  return base(SurfaceKind::ReZ3, "rez3", expr::pow(x, 3) - 3.0L * x * sq(y), Domain::all_plane());
}

SurfaceSpec rez2zbar() {
  Expr x = expr::x(), y = expr::y();
  SurfaceSpec s = base(SurfaceKind::ReZ2Zbar, "rez2zbar", expr::pow(x, 3) + x * sq(y), Domain::all_plane());
  s.polar_expr = expr::pow(expr::r(), 3) * func(Fn::Cos, expr::theta());
  return s;
}

SurfaceSpec paraboloid() {
  Expr x = expr::x(), y = expr::y();
  SurfaceSpec s = base(SurfaceKind::Paraboloid, "paraboloid", (sq(x) + sq(y)) / constant(2), Domain::all_plane());
  s.polar_expr = sq(expr::r()) / constant(2);
  return s;
}

SurfaceSpec gm(int m, real a, const FSpec& F) {
  check_m(m);
  if (!(a > 0 && a < 1)) throw InvalidArgument("g_m exponent a must lie in (0, 1)");
  const bool is_tanh = F.kind == FSpec::Kind::Tanh;
  Expr e = 1.0L + (is_tanh ? func(Fn::Tanh, polar_argument(m, a)) : profile(F, polar_argument(m, a)));
  std::string name = is_tanh ? "fm:m=" + std::to_string(m) + ",a=" + num(a)
                             : "gm:m=" + std::to_string(m) + ",a=" + num(a) + ",F=oneminusexp" +
                                   (F.M != 3 ? ",M=" + num(F.M) : std::string());
  SurfaceSpec s = base(is_tanh ? SurfaceKind::Fm : SurfaceKind::Gm, name, e, Domain::punctured_plane());
  s.m = m;
  s.a = a;
  s.F = F;
  if (a >= 0.25L) s.warnings.push_back("a >= 1/4: outside the range used for the C2 regularity argument");
  return s;
}

SurfaceSpec fm(int m, real a) { return gm(m, a, FSpec::tanh()); }

SurfaceSpec fm_minus_one(int m, real a) {
  SurfaceSpec s = fm(m, a);
  s.kind = SurfaceKind::Expression;
  s.name = "fm1:m=" + std::to_string(m) + ",a=" + num(a);
  s.expr = func(Fn::Tanh, polar_argument(m, a));
  return s;
}

SurfaceSpec lambda_m(int m, real a) {
  check_m(m);
  if (!(a > 0 && a < 1)) throw InvalidArgument("Lambda_m exponent a must lie in (0, 1)");
  Expr t = func(Fn::Tanh, polar_argument(m, -a));
  // x^2 + y^2 rather than r^2 keeps the Wirtinger h^2 coefficient exactly zero.
  SurfaceSpec s = base(SurfaceKind::LambdaM, "lambda:m=" + std::to_string(m) + ",a=" + num(a),
                       (sq(expr::x()) + sq(expr::y())) * t, Domain::punctured_plane());
  s.polar_expr = sq(expr::r()) * t;
  s.m = m;
  s.a = a;
  return s;
}

SurfaceSpec from_expr(Expr e, std::string name) {
  const Domain d = e->uses_polar ? Domain::punctured_plane() : Domain::all_plane();
  return base(SurfaceKind::Expression, std::move(name), std::move(e), d);
}

SurfaceSpec expression(std::string_view text) { return from_expr(parse_expression(text), "expr:" + std::string(text)); }

}  // namespace catalog

SurfaceSpec make_dual(const SurfaceSpec& f) {
  SurfaceSpec s;
  s.kind = SurfaceKind::Dual;
  s.name = "dual:" + f.name;
  s.of = std::make_shared<const SurfaceSpec>(f);
  s.expr = expr::dual(f.expr);
  if (f.polar_expr) s.polar_expr = expr::dual(f.polar_expr);
  s.domain = f.domain.inverted();
  s.m = f.m;
  s.a = f.a;
  s.F = f.F;
  return s;
}

SurfaceSpec parse_surface(std::string_view text) {
  const size_t colon = text.find(':');
  const std::string head(text.substr(0, colon));
  const std::string_view rest = colon == std::string_view::npos ? std::string_view() : text.substr(colon + 1);
  if (head == "expr") {
    if (rest.empty()) throw ParseError("expr: needs an expression");
    return catalog::expression(rest);
  }
  if (head == "dual") {
    if (rest.empty()) throw ParseError("dual: needs a surface");
    return make_dual(parse_surface(rest));
  }
  const auto p = parse_params(rest);
  if (head == "rez3" || head == "rez2zbar" || head == "bates" || head == "paraboloid") {
    allow_only(p, {});
    if (head == "rez3") return catalog::rez3();
    if (head == "rez2zbar") return catalog::rez2zbar();
    if (head == "bates") return catalog::bates();
    return catalog::paraboloid();
  }
  if (head == "gh") {
    allow_only(p, {"lam"});
    try {
      return catalog::ghomi_howard(to_real(p, "lam", false, 1));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  if (head == "fm" || head == "fm1" || head == "lambda") {
    allow_only(p, {"m", "a"});
    const int m = to_int(p, "m");
    const real a = to_real(p, "a", true, 0);
    try {
      if (head == "fm") return catalog::fm(m, a);
      if (head == "fm1") return catalog::fm_minus_one(m, a);
      return catalog::lambda_m(m, a);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  if (head == "gm") {
    allow_only(p, {"m", "a", "F", "M"});
    const int m = to_int(p, "m");
    const real a = to_real(p, "a", true, 0);
    const auto it = p.find("F");
    const std::string kind = it == p.end() ? "tanh" : it->second;
    try {
      if (kind == "tanh") return catalog::gm(m, a, FSpec::tanh());
      if (kind == "oneminusexp") return catalog::gm(m, a, FSpec::one_minus_exp(to_real(p, "M", false, 3)));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
    throw ParseError("unknown profile F='" + kind + "'");
  }
  throw ParseError("unknown surface '" + head + "'");
}

Jet closed_form_polar_jet_g(const SurfaceSpec& spec, PolarPoint p) {
  if (spec.kind != SurfaceKind::Fm && spec.kind != SurfaceKind::Gm) throw InvalidArgument("closed form needs an f_m or g_m surface");
  if (!(p.r > 0)) throw DomainError("closed form requires r > 0");
  const real r = p.r, a = spec.a, m = spec.m;
  const real c = std::cos(m * p.theta), s = std::sin(m * p.theta);
  const real ra = std::pow(r, a);
  const auto d = spec.F.derivatives(ra * c);
  const real F1 = d[1], F2 = d[2];
  Jet j;
  j.coords = Coords::Polar;
  j.value = 1 + d[0];
  j.first = {a * std::pow(r, a - 1) * c * F1, -m * ra * s * F1};
  j.second = {a * std::pow(r, a - 2) * c * (a * ra * c * F2 + (a - 1) * F1),
              -a * m * std::pow(r, a - 1) * s * (ra * c * F2 + F1), m * m * ra * (ra * s * s * F2 - c * F1)};
  return j;
}

Jet closed_form_polar_jet_lambda(const SurfaceSpec& spec, PolarPoint p) {
  if (spec.kind != SurfaceKind::LambdaM) throw InvalidArgument("closed form needs a Lambda_m surface");
  if (!(p.r > 0)) throw DomainError("closed form requires r > 0");
  const real r = p.r, a = spec.a, m = spec.m;
  const real c = std::cos(m * p.theta), s = std::sin(m * p.theta);
  const real ra = std::pow(r, a), rma = 1 / ra;
  const auto d = tanh_derivatives(rma * c);
  const real F = d[0], F1 = d[1], F2 = d[2];
  Jet j;
  j.coords = Coords::Polar;
  j.value = r * r * F;
  j.first = {r * (2 * F - a * c * rma * F1), -m * std::pow(r, 2 - a) * s * F1};
  j.second = {2 * F + a * rma * rma * c * ((a - 3) * ra * F1 + a * c * F2),
              m * s * std::pow(r, 1 - 2 * a) * ((a - 2) * ra * F1 + a * c * F2),
              -m * m * std::pow(r, 2 - 2 * a) * (ra * c * F1 - s * s * F2)};
  return j;
}

std::pair<real, real> closed_form_zeta(const SurfaceSpec& spec, PolarPoint p) {
  if (spec.kind != SurfaceKind::LambdaM) throw InvalidArgument("closed form needs a Lambda_m surface");
  const real r = p.r, a = spec.a, m = spec.m;
  const real c = std::cos(m * p.theta), s = std::sin(m * p.theta);
  const real ra = std::pow(r, a);
  const auto d = tanh_derivatives(c / ra);
  const real F1 = d[1], F2 = d[2];
  const real r22a = std::pow(r, 2 - 2 * a);
  const real z1 = 2 * m * r22a * s * (a * c * F2 + (a - 1) * ra * F1);
  const real z2 = -r22a * (a * a * c * c - m * m * s * s) * F2 - (a * a - 2 * a + m * m) * std::pow(r, 2 - a) * c * F1;
  return {z1, z2};
}

std::pair<real, real> closed_form_lambda_gradient(const SurfaceSpec& spec, PolarPoint p) {
  if (spec.kind != SurfaceKind::LambdaM) throw InvalidArgument("closed form needs a Lambda_m surface");
  const real r = p.r, a = spec.a, m = spec.m;
  const real c1 = std::cos(p.theta), s1 = std::sin(p.theta);
  const real c = std::cos(m * p.theta), s = std::sin(m * p.theta);
  const real ra = std::pow(r, a);
  const auto d = tanh_derivatives(c / ra);
  const real th = d[0], sech2 = d[1];
  const real k = std::pow(r, 1 - a);
  return {k * ((m * s1 * s - a * c1 * c) * sech2 + 2 * ra * c1 * th),
          k * (2 * ra * s1 * th - (a * s1 * c + m * c1 * s) * sech2)};
}

}  // namespace umbilic
