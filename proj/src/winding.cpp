#include "winding.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace umbilic {

// ---- curves ---------------------------------------------------------------

CurveSpec CurveSpec::circle(real radius, Point2 center) {
  if (!(radius > 0)) throw InvalidArgument("circle radius must be positive");
  CurveSpec c;
  c.kind = Kind::Circle;
  c.radius = radius;
  c.center = center;
  return c;
}

CurveSpec CurveSpec::ellipse(real a, real b, Point2 center) {
  if (!(a > 0 && b > 0)) throw InvalidArgument("ellipse semi-axes must be positive");
  CurveSpec c;
  c.kind = Kind::Ellipse;
  c.ax = a;
  c.by = b;
  c.center = center;
  return c;
}

CurveSpec CurveSpec::parametric(std::function<Point2(real)> map) {
  CurveSpec c;
  c.kind = Kind::Parametric;
  c.map = std::move(map);
  const Point2 a = c.map(0), b = c.map(kTwoPi);
  if (std::hypot(a.x - b.x, a.y - b.y) > 1e-12L * (1 + std::hypot(a.x, a.y)))
    throw InvalidArgument("parametric curve is not closed");
  return c;
}

Point2 CurveSpec::at(real t) const {
  switch (kind) {
    case Kind::Circle:
      return {center.x + radius * std::cos(t), center.y + radius * std::sin(t)};
    case Kind::Ellipse:
      return {center.x + ax * std::cos(t), center.y + by * std::sin(t)};
    case Kind::Parametric:
      return map(normalize_angle(t));
  }
  return {};
}

Point2 CurveSpec::velocity(real t) const {
  switch (kind) {
    case Kind::Circle:
      return {-radius * std::sin(t), radius * std::cos(t)};
    case Kind::Ellipse:
      return {-ax * std::sin(t), by * std::cos(t)};
    case Kind::Parametric: {
      const real h = 1e-6L;
      const Point2 a = at(t - h), b = at(t + h);
      return {(b.x - a.x) / (2 * h), (b.y - a.y) / (2 * h)};
    }
  }
  return {};
}

PolarPoint CurveSpec::polar_at(real t) const {
  if (kind == Kind::Circle && center.x == 0 && center.y == 0) return PolarPoint::make(radius, t);
  return PolarPoint::from(at(t));
}

std::string CurveSpec::describe() const {
  std::ostringstream os;
  os.precision(12);
  switch (kind) {
    case Kind::Circle:
      os << "circle:" << static_cast<double>(radius);
      break;
    case Kind::Ellipse:
      os << "ellipse:" << static_cast<double>(ax) << "," << static_cast<double>(by);
      break;
    case Kind::Parametric:
      return "parametric";
  }
  if (center.x != 0 || center.y != 0) os << "@" << static_cast<double>(center.x) << "," << static_cast<double>(center.y);
  return os.str();
}

std::string HalfIndex::str() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

// ---- angle accumulation ---------------------------------------------------

namespace {

struct Accumulator {
  std::function<real(real)> angle;  // sample angle at t
  real (*wrap)(real);
  real trigger;
  int max_depth;
  real total = 0;
  long samples = 0;
  real max_step = 0;
  int depth = 0;

  // An interval is accepted when its step is below the trigger and the
  // midpoint sample agrees with it, which exposes loops hidden between samples.
  void segment(real t0, real a0, real t1, real a1, int level) {
    const real step = wrap(a1 - a0);
    const real tm = (t0 + t1) / 2;
    const real am = angle(tm);
    ++samples;
    const real halves = wrap(am - a0) + wrap(a1 - am);
    if (std::fabs(step) >= trigger || std::fabs(halves - step) > trigger / 2) {
      if (level >= max_depth) throw NoConvergence("angle refinement exceeded depth " + std::to_string(max_depth));
      segment(t0, a0, tm, am, level + 1);
      segment(tm, am, t1, a1, level + 1);
      return;
    }
    total += step;
    max_step = std::max(max_step, std::fabs(step));
    depth = std::max(depth, level);
  }

  void run(int n) {
    if (n < 4) throw InvalidArgument("at least 4 initial samples are required");
    std::vector<real> a(n);
    for (int k = 0; k < n; ++k) a[k] = angle(kTwoPi * k / n);
    samples += n;
    for (int k = 0; k < n; ++k) {
      const real t1 = kTwoPi * (k + 1) / n;
      segment(kTwoPi * k / n, a[k], t1, a[(k + 1) % n], 0);
    }
  }
};

WindingReport finish(const Accumulator& acc, real unit, real max_residual, real min_mag) {
  WindingReport w;
  w.raw = acc.total / unit;
  w.index = static_cast<int>(std::llround(w.raw));
  w.residual = std::fabs(w.raw - w.index);
  w.samples = acc.samples;
  w.max_step_angle = acc.max_step;
  w.depth = acc.depth;
  w.refined = acc.depth > 0;
  w.min_magnitude = min_mag;
  if (!(w.residual < max_residual)) throw NoConvergence("winding residual too large");
  return w;
}

}  // namespace

WindingReport vector_field_index(const VectorOnCurve& field, const WindingOptions& opt) {
  real min_mag = INFINITY;
  Accumulator acc;
  acc.angle = [&](real t) {
    const PlaneVector v = field(t);
    if (!is_finite(v.vx) || !is_finite(v.vy)) throw NonFiniteError("non-finite vector on curve");
    const real mag = std::hypot(v.vx, v.vy);
    if (mag <= opt.zero_tol) throw ZeroOnCurveError("vector field vanishes on the curve");
    min_mag = std::min(min_mag, mag);
    return std::atan2(v.vy, v.vx);
  };
  acc.wrap = wrap_pi;
  acc.trigger = kPi / 2;
  acc.max_depth = opt.max_depth;
  acc.run(opt.initial_samples);
  return finish(acc, kTwoPi, 0.01L, min_mag);
}

WindingReport vector_field_index(const std::function<PlaneVector(Point2)>& field, const CurveSpec& curve,
                                 const WindingOptions& opt) {
  return vector_field_index([&](real t) { return field(curve.at(t)); }, opt);
}

WindingReport line_field_index(const DirectionOnCurve& dirs, const WindingOptions& opt) {
  Accumulator acc;
  acc.angle = [&](real t) {
    real a;
    try {
      a = dirs(t);
    } catch (const UmbilicError& e) {
      throw UmbilicOnCurveError(std::string("umbilic on the curve: ") + e.what());
    }
    if (!is_finite(a)) throw NonFiniteError("non-finite direction on curve");
    return a;
  };
  acc.wrap = wrap_half_pi;
  acc.trigger = kPi / 4;
  acc.max_depth = opt.max_depth;
  acc.run(opt.initial_samples);
  // Units of pi give twice the index directly.
  return finish(acc, kPi, 0.02L, 0);
}

WindingReport line_field_index(const std::function<real(Point2)>& dirs, const CurveSpec& curve,
                               const WindingOptions& opt) {
  return line_field_index([&](real t) { return dirs(curve.at(t)); }, opt);
}

// ---- umbilic indices ------------------------------------------------------

int winding_about_origin(const CurveSpec& c) {
  switch (c.kind) {
    case CurveSpec::Kind::Circle: {
      const real d = std::hypot(c.center.x, c.center.y);
      if (d == c.radius) throw DomainError("curve passes through the origin");
      return d < c.radius ? 1 : 0;
    }
    case CurveSpec::Kind::Ellipse: {
      const real q = (c.center.x / c.ax) * (c.center.x / c.ax) + (c.center.y / c.by) * (c.center.y / c.by);
      if (q == 1) throw DomainError("curve passes through the origin");
      return q < 1 ? 1 : 0;
    }
    case CurveSpec::Kind::Parametric:
      break;
  }
  try {
    return vector_field_index([&](real t) {
             const Point2 p = c.at(t);
             return PlaneVector{p.x, p.y};
           }).index;
  } catch (const ZeroOnCurveError&) {
    throw DomainError("curve passes through the origin");
  }
}

IndexResult umbilic_index_via_D(const SurfaceSpec& f, const CurveSpec& c, const WindingOptions& opt) {
  IndexResult out;
  out.route = "D";
  out.winding = vector_field_index([&](real t) { return cartesian_identifiers(eval_jet(f, c.at(t), 2)); }, opt);
  out.index.twice = out.winding.index;
  return out;
}

WindingReport delta_index(const SurfaceSpec& f, const CurveSpec& c, const WindingOptions& opt, PolarJetSource source) {
  return vector_field_index(
      [&](real t) {
        const PolarPoint pp = c.polar_at(t);
        const Jet j = source == PolarJetSource::Direct ? eval_polar_jet(f, pp, 2)
                                                       : jet_cartesian_to_polar(eval_jet(f, c.at(t), 2), pp);
        return polar_identifiers(j, pp);
      },
      opt);
}

IndexResult umbilic_index_via_Delta(const SurfaceSpec& f, const CurveSpec& c, const WindingOptions& opt,
                                    PolarJetSource source) {
  IndexResult out;
  out.route = "delta";
  out.winding = delta_index(f, c, opt, source);
  out.index.twice = 2 * winding_about_origin(c) + out.winding.index;
  return out;
}

IndexResult umbilic_index_direct(const SurfaceSpec& f, const CurveSpec& c, const WindingOptions& opt) {
  IndexResult out;
  out.route = "direct";
  out.winding = line_field_index([&](real t) { return principal_direction(eval_jet(f, c.at(t), 2)); }, opt);
  out.index.twice = out.winding.index;
  return out;
}

HalfIndex inverted_index(HalfIndex i_gamma) { return {4 - i_gamma.twice}; }

// ---- sign-change counting -------------------------------------------------

namespace {

struct DeltaSample {
  real d1 = 0, d2 = 0, dd1 = 0;
};

real delta1_at(const SurfaceSpec& f, const CurveSpec& c, real t) {
  const PolarPoint pp = c.polar_at(t);
  return polar_identifiers(eval_polar_jet(f, pp, 2), pp).vx;
}

// delta1, delta2 and d(delta1)/dt from an order-3 polar expansion.
DeltaSample delta_with_slope(const SurfaceSpec& f, const CurveSpec& c, real t) {
  using T = Taylor<real>;
  const PolarPoint pp = c.polar_at(t);
  const T P = polar_taylor(f, pp, 3);
  const T fr = P.partial(0), ft = P.partial(1);
  const T frr = fr.partial(0), frt = fr.partial(1), ftt = ft.partial(1);
  const T r = T::variable(1, pp.r, 0);
  const auto [d1, d2] = polar_identifiers_of<T>(fr.truncated(1), ft.truncated(1), frr, frt, ftt, r);
  const Point2 p = c.at(t), v = c.velocity(t);
  const real rr = pp.r;
  const real r_dot = (p.x * v.x + p.y * v.y) / rr;
  const real t_dot = (p.x * v.y - p.y * v.x) / (rr * rr);
  DeltaSample s{d1.coeff(0, 0), d2.coeff(0, 0), d1.coeff(1, 0) * r_dot + d1.coeff(0, 1) * t_dot};
  if (!is_finite(s.d1) || !is_finite(s.d2) || !is_finite(s.dd1)) throw NonFiniteError("non-finite identifier on curve");
  return s;
}

int sgn(real v) { return (v > 0) - (v < 0); }

}  // namespace

SignChangeResult sign_change_index(const SurfaceSpec& f, const CurveSpec& c, int samples, real deriv_tol) {
  if (samples < 8) throw InvalidArgument("sign scan needs at least 8 samples");
  const real dt = kTwoPi / samples;
  std::vector<real> ts(samples), vs(samples);
  for (int k = 0; k < samples; ++k) {
    ts[k] = (k + 0.5L) * dt;
    vs[k] = delta1_at(f, c, ts[k]);
    if (!is_finite(vs[k])) throw NonFiniteError("non-finite identifier on curve");
  }
  std::vector<real> roots;
  for (int k = 0; k < samples; ++k) {
    if (vs[k] == 0) roots.push_back(ts[k]);
  }
  for (int k = 0; k < samples; ++k) {
    const int k1 = (k + 1) % samples;
    if (vs[k] == 0 || vs[k1] == 0 || sgn(vs[k]) == sgn(vs[k1])) continue;
    real a = ts[k], b = k1 == 0 ? ts[0] + kTwoPi : ts[k1];
    const int sa = sgn(vs[k]);
    real root = -1;
    for (int it = 0; it < 200; ++it) {
      const real m = (a + b) / 2;
      if (m <= a || m >= b) break;
      const real v = delta1_at(f, c, m);
      if (v == 0) {
        root = m;
        break;
      }
      (sgn(v) == sa ? a : b) = m;
    }
    roots.push_back(root >= 0 ? root : (a + b) / 2);
  }
  std::sort(roots.begin(), roots.end());
  SignChangeResult out;
  for (real t : roots) {
    const DeltaSample s = delta_with_slope(f, c, t);
    SignChangeRoot root{normalize_angle(t), s.dd1, s.d2, 0};
    if (s.d2 == 0) throw ZeroOnCurveError("delta1 and delta2 vanish together on the curve");
    if (!(std::fabs(s.dd1) > deriv_tol * std::fabs(s.d2)))
      throw TangentZeroError("delta1 has a degenerate zero on the curve");
    root.epsilon = s.d2 < 0 ? 0 : (s.dd1 > 0 ? 1 : -1);
    out.index -= root.epsilon;
    out.roots.push_back(root);
  }
  return out;
}

// ---- Hessian eigen-flows --------------------------------------------------

std::string route_name(HessianRoute r) {
  switch (r) {
    case HessianRoute::Cartesian:
      return "hessian-cartesian";
    case HessianRoute::Polar:
      return "hessian-polar";
    case HessianRoute::Direct:
      return "hessian-direct";
  }
  return "";
}

IndexResult hessian_flow_index(const SurfaceSpec& g, const CurveSpec& c, HessianRoute route, JetEngine engine,
                               const WindingOptions& opt) {
  IndexResult out;
  out.route = route_name(route);
  const bool wirt = engine == JetEngine::Wirtinger;
  switch (route) {
    case HessianRoute::Cartesian:
      out.winding = vector_field_index(
          [&](real t) {
            const Point2 p = c.at(t);
            return wirt ? hessian_identifier_cartesian(eval_wirtinger(g, p))
                        : hessian_identifier_cartesian(eval_jet(g, p, 2));
          },
          opt);
      out.index.twice = out.winding.index;
      break;
    case HessianRoute::Polar:
      out.winding = vector_field_index(
          [&](real t) {
            const PolarPoint pp = c.polar_at(t);
            return wirt ? hessian_identifier_polar(eval_wirtinger(g, c.at(t)), pp)
                        : hessian_identifier_polar(eval_polar_jet(g, pp, 2), pp);
          },
          opt);
      out.index.twice = 2 * winding_about_origin(c) + out.winding.index;
      break;
    case HessianRoute::Direct:
      out.winding = line_field_index(
          [&](real t) {
            const Point2 p = c.at(t);
            return wirt ? hessian_direction(eval_wirtinger(g, p)) : hessian_direction(eval_jet(g, p, 2));
          },
          opt);
      out.index.twice = out.winding.index;
      break;
  }
  return out;
}

IndexResult index_at_infinity(const SurfaceSpec& f, real radius, const WindingOptions& opt) {
  IndexResult out = hessian_flow_index(f, CurveSpec::circle(radius), HessianRoute::Direct, JetEngine::Wirtinger, opt);
  out.route = "infinity";
  return out;
}

// ---- valid radii ----------------------------------------------------------

namespace {

int cyclic_sign_changes(const std::vector<real>& v) {
  std::vector<int> s;
  for (real x : v)
    if (x != 0) s.push_back(sgn(x));
  int n = 0;
  for (size_t k = 0; k < s.size(); ++k)
    if (s[k] != s[(k + 1) % s.size()]) ++n;
  return n;
}

void require_m(const SurfaceSpec& s) {
  if (s.m < 1) throw InvalidArgument("surface " + s.name + " has no rotational order m");
}

}  // namespace

bool SignConditions::holds() const {
  return delta2_at_0 > delta2_noise_0 && delta2_at_pi_m < -delta2_noise_pi_m && d_delta1_at_0 > 0 && d_delta1_at_pi_m < 0 &&
         sign_changes == expected_changes;
}

SignConditions g_sign_conditions(const SurfaceSpec& g, real r, int grid) {
  require_m(g);
  const int n = grid > 0 ? grid : 64 * g.m;
  const CurveSpec c = CurveSpec::circle(r);
  SignConditions sc;
  sc.radius = r;
  const DeltaSample s0 = delta_with_slope(g, c, 0);
  const DeltaSample s1 = delta_with_slope(g, c, kPi / g.m);
  sc.delta2_at_0 = s0.d2;
  sc.delta2_at_pi_m = s1.d2;
  sc.d_delta1_at_0 = s0.dd1;
  sc.d_delta1_at_pi_m = s1.dd1;
  std::vector<real> v(n);
  for (int k = 0; k < n; ++k) v[k] = delta1_at(g, c, kTwoPi * (k + 0.5L) / n);
  sc.sign_changes = cyclic_sign_changes(v);
  sc.expected_changes = 2 * g.m;
  auto noise = [&](real theta) {
    const PolarPoint pp = PolarPoint::make(r, theta);
    const Jet j = eval_polar_jet(g, pp, 2);
    const real h = 1 + j.fr() * j.fr();
    const real terms = std::fabs(h * r * j.fr()) + std::fabs(h * j.ftt()) + std::fabs(j.frr() * (r * r + j.ft() * j.ft()));
    return 64 * std::numeric_limits<real>::epsilon() * terms;
  };
  sc.delta2_noise_0 = noise(0);
  sc.delta2_noise_pi_m = noise(kPi / g.m);
  return sc;
}

RadiusSearch find_valid_radius_g(const SurfaceSpec& g, real r0, int max_steps) {
  require_m(g);
  RadiusSearch out;
  real r = r0;
  for (int k = 0; k <= max_steps; ++k, r *= 2) {
    if (!is_finite(r)) break;
    try {
      const SignConditions sc = g_sign_conditions(g, r);
      if (sc.holds()) {
        out.radius = r;
        out.steps = k;
        out.conditions = sc;
        return out;
      }
    } catch (const NonFiniteError&) {
    }
  }
  throw NoConvergence("no radius satisfying the sign conditions for " + g.name);
}

bool ZetaConditions::holds() const { return zeta2_at_0 > 0 && zeta2_at_pi_m < 0 && sign_changes == expected_changes; }

ZetaConditions zeta_conditions(const SurfaceSpec& lam, real r, int grid) {
  require_m(lam);
  const int n = grid > 0 ? grid : 64 * lam.m;
  ZetaConditions z;
  z.radius = r;
  auto zeta = [&](real theta) {
    const PolarPoint pp = PolarPoint::make(r, theta);
    return hessian_identifier_polar(eval_wirtinger(lam, pp.cartesian()), pp);
  };
  z.zeta2_at_0 = zeta(0).vy;
  z.zeta2_at_pi_m = zeta(kPi / lam.m).vy;
  std::vector<real> v(n);
  for (int k = 0; k < n; ++k) v[k] = zeta(kTwoPi * (k + 0.5L) / n).vx;
  z.sign_changes = cyclic_sign_changes(v);
  z.expected_changes = 2 * lam.m;
  return z;
}

LambdaRadiusSearch find_valid_radius_lambda(const SurfaceSpec& lam, real r0, int max_steps) {
  require_m(lam);
  real r = r0;
  for (int k = 0; k <= max_steps; ++k, r /= 2) {
    try {
      const ZetaConditions z = zeta_conditions(lam, r);
      if (z.holds()) return {r, k, z};
    } catch (const NonFiniteError&) {
    }
  }
  throw NoConvergence("no radius satisfying the sign conditions for " + lam.name);
}

}  // namespace umbilic
