#include "inversion.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "catalog.hpp"
#include "errors.hpp"

namespace umbilic {

InversionPoint invert_graph(const SurfaceSpec& f, Point2 uv) {
  const real s = uv.x * uv.x + uv.y * uv.y;
  if (!(s > 0)) throw DomainError("inversion is undefined at the origin");
  const real fh = eval_value(f, {uv.x / s, uv.y / s});
  const real h = s * fh;
  const real den = 1 + s * fh * fh;
  return {uv, {uv.x / den, uv.y / den, h / den}};
}

GraphHeight graph_height(const SurfaceSpec& f, Point2 XY) {
  const real s = std::hypot(XY.x, XY.y);
  if (!(s > 0)) throw DomainError("graph height is evaluated away from the origin");
  const real theta = normalize_angle(std::atan2(XY.y, XY.x));
  // psi(rho) = rho / (1 + phi^2), phi = f / r at r = 1 / rho, and its slope.
  auto psi = [&](real rho, real* slope) {
    const real r = 1 / rho;
    const Jet j = eval_polar_jet(f, PolarPoint::make(r, theta), 2);
    const real phi = j.value / r;
    const real q = 1 + phi * phi;
    if (slope) *slope = (1 - (j.value * j.value - 2 * r * j.value * j.fr()) / (r * r)) / (q * q);
    return rho / q;
  };
  real lo = 0, hi = s;
  for (int k = 0; psi(hi, nullptr) < s; ++k) {
    if (k > 200) throw NoConvergence("graph height: no bracket for the preimage");
    lo = hi;
    hi *= 2;
  }
  real rho = s;
  GraphHeight out;
  for (int it = 0; it < 200; ++it) {
    real slope = 0;
    const real v = psi(rho, &slope) - s;
    out.iterations = it + 1;
    if (std::fabs(v) <= 4 * std::numeric_limits<real>::epsilon() * s) break;
    (v < 0 ? lo : hi) = rho;
    real next = slope > 0 ? rho - v / slope : (lo + hi) / 2;
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    if (next == rho) break;
    rho = next;
  }
  out.residual = std::fabs(psi(rho, nullptr) - s) / s;
  if (!(out.residual < 1e-12L)) throw NoConvergence("graph height: residual above 1e-12");
  const real r = 1 / rho;
  const real phi = eval_value(f, {r * std::cos(theta), r * std::sin(theta)}) / r;
  out.uv = {rho * std::cos(theta), rho * std::sin(theta)};
  out.Z = rho * phi / (1 + phi * phi);
  return out;
}

std::string level_name(RegularityLevel l) {
  switch (l) {
    case RegularityLevel::Fails:
      return "Fails";
    case RegularityLevel::C0:
      return "C0";
    case RegularityLevel::Differentiable:
      return "Differentiable";
    case RegularityLevel::C1:
      return "C1";
    case RegularityLevel::C2projection:
      return "C2projection";
  }
  return "";
}

const Witness* RegularityReport::find(const std::string& criterion) const {
  for (const Witness& w : witnesses)
    if (w.criterion == criterion) return &w;
  return nullptr;
}

std::vector<real> regularity_angles(const SurfaceSpec& f, real r, int grid, int m) {
  std::vector<real> th;
  for (int k = 0; k < grid; ++k) th.push_back(kTwoPi * (k + 0.5L) / grid);
  for (int k = 0; k < 8; ++k) th.push_back(kPi * k / 4);
  for (int k = 0; m > 0 && k < 2 * m; ++k) th.push_back(kPi * k / m);
  std::sort(th.begin(), th.end());
  auto value = [&](real t) { return eval_value(f, {r * std::cos(t), r * std::sin(t)}); };
  std::vector<real> v(th.size());
  for (size_t k = 0; k < th.size(); ++k) v[k] = value(th[k]);
  const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
  const real range = *mx - *mn;
  if (!(range > 0)) return th;
  std::vector<real> extra;
  const size_t n = th.size();
  for (size_t k = 0; k < n; ++k) {
    const size_t k1 = (k + 1) % n;
    real a = th[k], b = k1 == 0 ? th[0] + kTwoPi : th[k1];
    real fa = v[k], fb = v[k1];
    if (!(std::fabs(fb - fa) > 0.05L * range)) continue;
    // Follow the steeper half down to a 1e-12 wide bracket.
    for (int it = 0; it < 80 && b - a > 1e-12L; ++it) {
      const real mid = (a + b) / 2;
      const real fm = value(mid);
      extra.push_back(normalize_angle(mid));
      if (std::fabs(fm - fa) >= std::fabs(fb - fm)) {
        b = mid;
        fb = fm;
      } else {
        a = mid;
        fa = fm;
      }
    }
  }
  // Narrow peaks: ternary search around the extreme samples.
  for (size_t k : {static_cast<size_t>(mx - v.begin()), static_cast<size_t>(mn - v.begin())}) {
    const real sign = k == static_cast<size_t>(mx - v.begin()) ? 1 : -1;
    real a = k == 0 ? th[n - 1] - kTwoPi : th[k - 1];
    real b = k + 1 == n ? th[0] + kTwoPi : th[k + 1];
    for (int it = 0; it < 60 && b - a > 1e-12L; ++it) {
      const real m1 = a + (b - a) / 3, m2 = b - (b - a) / 3;
      if (sign * value(m1) < sign * value(m2)) {
        a = m1;
      } else {
        b = m2;
      }
    }
    extra.push_back(normalize_angle((a + b) / 2));
  }
  th.insert(th.end(), extra.begin(), extra.end());
  std::sort(th.begin(), th.end());
  th.erase(std::unique(th.begin(), th.end()), th.end());
  return th;
}

namespace {

bool limit_verdict(const std::vector<real>& v, real tol) {
  const size_t n = v.size();
  if (n < 4) return false;
  for (real x : v)
    if (!is_finite(x)) return false;
  for (size_t k = n - 4; k + 1 < n; ++k)
    if (!(v[k + 1] < v[k])) return false;
  return v[n - 1] < tol;
}

bool bound_verdict(const std::vector<real>& v, real growth) {
  const size_t n = v.size();
  if (n < 3) return false;
  for (real x : v)
    if (!is_finite(x)) return false;
  for (size_t k = n - 3; k + 1 < n; ++k)
    if (!(v[k + 1] <= (1 + growth) * v[k])) return false;
  return true;
}

}  // namespace

RegularityReport check_regularity(const SurfaceSpec& f, const RegularityOptions& opt) {
  RegularityReport rep;
  rep.c = opt.c >= 0 ? opt.c : ((f.kind == SurfaceKind::Fm || f.kind == SurfaceKind::Gm) ? 2 * f.a : 0);
  const real c = rep.c;
  struct Q {
    const char* name;
    const char* kind;
    RegularityLevel level;
    std::function<real(const Jet&, real)> eval;
  };
  const std::vector<Q> qs = {
      {"f/r", "bound", RegularityLevel::C0, [](const Jet& j, real r) { return j.value / r; }},
      {"(f^2-2rff_r)/r^2", "below-one", RegularityLevel::Differentiable,
       [](const Jet& j, real r) { return (j.value * j.value - 2 * r * j.value * j.fr()) / (r * r); }},
      {"lim f/r", "limit", RegularityLevel::Differentiable, [](const Jet& j, real r) { return j.value / r; }},
      {"f", "bound", RegularityLevel::C1, [](const Jet& j, real) { return j.value; }},
      {"(a) f_r", "limit", RegularityLevel::C1, [](const Jet& j, real) { return j.fr(); }},
      {"(b) f_theta/r", "limit", RegularityLevel::C1, [](const Jet& j, real r) { return j.ft() / r; }},
      {"r^(1-c/2) f_r", "bound", RegularityLevel::C2projection,
       [c](const Jet& j, real r) { return std::pow(r, 1 - c / 2) * j.fr(); }},
      {"r^(-c/2) f_theta", "bound", RegularityLevel::C2projection,
       [c](const Jet& j, real r) { return std::pow(r, -c / 2) * j.ft(); }},
      {"r^(2-c) f_rr", "bound", RegularityLevel::C2projection,
       [c](const Jet& j, real r) { return std::pow(r, 2 - c) * j.frr(); }},
      {"r^(1-c) f_rtheta", "bound", RegularityLevel::C2projection,
       [c](const Jet& j, real r) { return std::pow(r, 1 - c) * j.frt(); }},
      {"r^(-c) f_thetatheta", "bound", RegularityLevel::C2projection,
       [c](const Jet& j, real r) { return std::pow(r, -c) * j.ftt(); }},
  };
  std::vector<size_t> active;
  for (size_t i = 0; i < qs.size(); ++i)
    if (qs[i].level <= opt.requested) active.push_back(i);
  for (size_t i : active) {
    Witness w;
    w.criterion = qs[i].name;
    w.kind = qs[i].kind;
    w.level = qs[i].level;
    rep.witnesses.push_back(w);
  }
  real r = opt.R;
  for (int k = 1; k <= opt.radii; ++k) {
    r *= 4;
    const std::vector<real> th = regularity_angles(f, r, opt.theta_grid, f.m);
    auto jet_at = [&](real t) { return eval_polar_jet(f, PolarPoint::make(r, t), 2); };
    std::vector<real> sup(active.size(), 0);
    std::vector<size_t> arg(active.size(), 0);
    bool finite = true;
    for (size_t k = 0; k < th.size() && finite; ++k) {
      Jet j;
      try {
        j = jet_at(th[k]);
      } catch (const NonFiniteError&) {
        finite = false;
        break;
      }
      for (size_t q = 0; q < active.size(); ++q) {
        const real v = std::fabs(qs[active[q]].eval(j, r));
        if (!is_finite(v)) finite = false;
        if (v > sup[q]) {
          sup[q] = v;
          arg[q] = k;
        }
      }
    }
    if (!finite) {
      std::fill(sup.begin(), sup.end(), INFINITY);
    } else {
      // Narrow peaks: ternary search between the neighbours of each maximiser.
      const size_t n = th.size();
      for (size_t q = 0; q < active.size(); ++q) {
        const size_t k = arg[q];
        real a = k == 0 ? th[n - 1] - kTwoPi : th[k - 1];
        real b = k + 1 == n ? th[0] + kTwoPi : th[k + 1];
        auto val = [&](real t) { return std::fabs(qs[active[q]].eval(jet_at(t), r)); };
        for (int it = 0; it < 60 && b - a > 1e-12L; ++it) {
          const real m1 = a + (b - a) / 3, m2 = b - (b - a) / 3;
          if (val(m1) < val(m2)) {
            a = m1;
          } else {
            b = m2;
          }
        }
        sup[q] = std::max(sup[q], val((a + b) / 2));
      }
    }
    for (size_t q = 0; q < active.size(); ++q) {
      rep.witnesses[q].radii.push_back(r);
      rep.witnesses[q].values.push_back(sup[q]);
    }
  }
  for (Witness& w : rep.witnesses) {
    if (w.kind == "limit") {
      w.pass = limit_verdict(w.values, opt.limit_tol);
    } else if (w.kind == "bound") {
      w.pass = bound_verdict(w.values, opt.growth_tol);
    } else {
      w.pass = std::all_of(w.values.begin(), w.values.end(), [](real v) { return v < 1; });
    }
  }
  auto level_ok = [&](RegularityLevel l) {
    bool ok = true;
    for (const Witness& w : rep.witnesses)
      if (w.level == l) ok = ok && w.pass;
    return ok;
  };
  rep.level = RegularityLevel::Fails;
  for (RegularityLevel l : {RegularityLevel::C0, RegularityLevel::Differentiable, RegularityLevel::C1,
                            RegularityLevel::C2projection}) {
    if (l > opt.requested || !level_ok(l)) break;
    rep.level = l;
  }
  return rep;
}

HattedSecond hatted_second(const SurfaceSpec& f, Point2 uv) {
  using T = Taylor<real>;
  const T fh = hatted_taylor(f, uv, 2);
  const T u = T::variable(2, uv.x, 0), v = T::variable(2, uv.y, 1);
  const T s = u * u + v * v;
  const T h = s * fh;
  const T k = s * fh * fh;
  const T Z = h / (k + 1.0L);
  auto second = [](const T& t) { return std::array<real, 3>{2 * t.coeff(2, 0), t.coeff(1, 1), 2 * t.coeff(0, 2)}; };
  HattedSecond out;
  out.h = second(h);
  out.k = second(k);
  out.Z = second(Z);
  out.hvalue = h.coeff(0, 0);
  out.kvalue = k.coeff(0, 0);
  out.Zvalue = Z.coeff(0, 0);
  out.h1 = {h.coeff(1, 0), h.coeff(0, 1)};
  out.k1 = {k.coeff(1, 0), k.coeff(0, 1)};
  return out;
}

real printed_kuv(const SurfaceSpec& f, real rho, real theta) {
  const Jet j = hat_jet(f, PolarPoint::make(rho, theta), 2);
  const real F = j.value, Fr = j.fr(), Ft = j.ft(), Frr = j.frr(), Frt = j.frt(), Ftt = j.ftt();
  return std::sin(2 * theta) * (rho * rho * Fr * Fr + F * (rho * rho * Frr + 3 * rho * Fr - Ftt) - Ft * Ft) +
         2 * std::cos(2 * theta) * (Ft * (rho * Fr + F) + rho * F * Frt);
}

HattedLimitsReport check_hatted_limits(const SurfaceSpec& f, int theta_samples) {
  HattedLimitsReport rep;
  const char* names[] = {"rho^2 fhat_rho", "rho fhat_theta", "h_u",       "h_v",       "k_u",
                         "k_v",            "rho k_uu",       "rho k_uv",  "rho k_vv",  "Z Z_uu",
                         "Z Z_uv",         "Z Z_vv",         "rho h_uu",  "rho h_uv",  "rho h_vv"};
  const size_t nq = std::size(names);
  for (size_t q = 0; q < nq; ++q) rep.sequences.push_back({names[q], {}, {}, false, false});
  for (int e = 1; e <= 6; ++e) {
    const real rho = std::pow(10.0L, -e);
    std::vector<real> sup(nq, 0);
    for (int i = 0; i < theta_samples; ++i) {
      const real th = kTwoPi * (i + 0.5L) / theta_samples;
      const Jet j = hat_jet(f, PolarPoint::make(rho, th), 2);
      const real F = j.value, Fr = j.fr(), Ft = j.ft();
      const real c = std::cos(th), s = std::sin(th);
      const HattedSecond hs = hatted_second(f, {rho * c, rho * s});
      const real vals[] = {
          rho * rho * Fr,
          rho * Ft,
          rho * ((2 * F + rho * Fr) * c - Ft * s),
          rho * ((2 * F + rho * Fr) * s + Ft * c),
          2 * F * rho * (c * (F + rho * Fr) - Ft * s),
          2 * F * rho * (s * (F + rho * Fr) + Ft * c),
          rho * hs.k[0],
          rho * hs.k[1],
          rho * hs.k[2],
          hs.Zvalue * hs.Z[0],
          hs.Zvalue * hs.Z[1],
          hs.Zvalue * hs.Z[2],
          rho * hs.h[0],
          rho * hs.h[1],
          rho * hs.h[2],
      };
      for (size_t q = 0; q < nq; ++q) sup[q] = std::max(sup[q], std::fabs(vals[q]));
    }
    for (size_t q = 0; q < nq; ++q) {
      rep.sequences[q].rho.push_back(rho);
      rep.sequences[q].values.push_back(sup[q]);
    }
  }
  for (LimitSequence& s : rep.sequences) {
    s.monotone = true;
    for (size_t k = 0; k + 1 < s.values.size(); ++k) s.monotone = s.monotone && s.values[k + 1] < s.values[k];
    s.below_tol = s.values[4] < rep.tol && s.values[5] < rep.tol;
  }
  const real rho = 0.01L, th = 0.4L;
  const real ad = hatted_second(f, {rho * std::cos(th), rho * std::sin(th)}).k[1];
  const real pr = printed_kuv(f, rho, th);
  rep.kuv_printed_vs_ad = std::fabs(pr - ad) / std::max(std::fabs(ad), std::numeric_limits<real>::min());
  return rep;
}

DualityResult duality_check(const SurfaceSpec& f, real radius_out, real radius_in) {
  DualityResult out;
  out.radius_out = radius_out;
  out.radius_in = radius_in;
  const SurfaceSpec g = make_dual(f);
  out.infinity_detail = index_at_infinity(f, radius_out);
  out.origin_detail = hessian_flow_index(g, CurveSpec::circle(radius_in), HessianRoute::Direct);
  out.at_infinity = out.infinity_detail.index;
  out.at_origin = out.origin_detail.index;
  out.twice_sum = out.at_infinity.twice + out.at_origin.twice;
  return out;
}

}  // namespace umbilic
