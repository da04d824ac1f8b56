#include "jets.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "errors.hpp"

namespace umbilic {

namespace {

using T = Taylor<real>;
using C = std::complex<real>;
using TC = Taylor<C>;

std::string where(Point2 p) {
  return "(" + std::to_string(static_cast<double>(p.x)) + ", " + std::to_string(static_cast<double>(p.y)) + ")";
}

void check_order(int order) {
  if (order != 2 && order != 3) throw InvalidArgument("jet order must be 2 or 3");
}

void check_finite(const Jet& j) {
  bool ok = is_finite(j.value);
  for (real v : j.first) ok = ok && is_finite(v);
  for (real v : j.second) ok = ok && is_finite(v);
  if (j.order == 3)
    for (real v : j.third) ok = ok && is_finite(v);
  if (!ok) throw NonFiniteError("non-finite jet entry");
}

}  // namespace

void check_domain(const SurfaceSpec& f, Point2 p) {
  if (!f.domain.contains(p.x, p.y)) throw DomainError("point " + where(p) + " outside domain " + f.domain.describe());
}

Taylor<real> Jet::taylor() const {
  T t(order, value);
  t.coeff(1, 0) = first[0];
  t.coeff(0, 1) = first[1];
  t.coeff(2, 0) = second[0] / 2;
  t.coeff(1, 1) = second[1];
  t.coeff(0, 2) = second[2] / 2;
  if (order == 3) {
    t.coeff(3, 0) = third[0] / 6;
    t.coeff(2, 1) = third[1] / 2;
    t.coeff(1, 2) = third[2] / 2;
    t.coeff(0, 3) = third[3] / 6;
  }
  return t;
}

Jet Jet::from_taylor(const Taylor<real>& t, Coords coords) {
  Jet j;
  j.order = t.order();
  j.coords = coords;
  j.value = t.coeff(0, 0);
  j.first = {t.coeff(1, 0), t.coeff(0, 1)};
  j.second = {2 * t.coeff(2, 0), t.coeff(1, 1), 2 * t.coeff(0, 2)};
  if (j.order == 3) j.third = {6 * t.coeff(3, 0), 2 * t.coeff(2, 1), 2 * t.coeff(1, 2), 6 * t.coeff(0, 3)};
  return j;
}

Taylor<real> cartesian_taylor(const SurfaceSpec& f, Point2 p, int order) {
  check_domain(f, p);
  const Frame<T> fr = cartesian_frame(T::variable(order, p.x, 0), T::variable(order, p.y, 1), f.expr->uses_polar);
  return evaluate(*f.expr, fr);
}

Taylor<real> polar_taylor(const SurfaceSpec& f, PolarPoint p, int order) {
  if (!(p.r > 0)) throw DomainError("polar jet requires r > 0");
  check_domain(f, p.cartesian());
  const Frame<T> fr = polar_frame(T::variable(order, p.r, 0), T::variable(order, p.theta, 1));
  return evaluate(*f.polar_tree(), fr);
}

Taylor<real> hatted_taylor(const SurfaceSpec& f, Point2 uv, int order) {
  const real s = uv.x * uv.x + uv.y * uv.y;
  if (!(s > 0)) throw DomainError("hatted field is undefined at the origin");
  check_domain(f, {uv.x / s, uv.y / s});
  const Frame<T> base = cartesian_frame(T::variable(order, uv.x, 0), T::variable(order, uv.y, 1), false);
  return evaluate(*f.expr, inverted_frame(base, f.expr->uses_polar));
}

real eval_value(const SurfaceSpec& f, Point2 p) {
  check_domain(f, p);
  const real v = evaluate(*f.expr, cartesian_frame(p.x, p.y, f.expr->uses_polar));
  if (!is_finite(v)) throw NonFiniteError("non-finite value at " + where(p));
  return v;
}

Jet eval_jet(const SurfaceSpec& f, Point2 p, int order) {
  check_order(order);
  Jet j = Jet::from_taylor(cartesian_taylor(f, p, order), Coords::Cartesian);
  check_finite(j);
  return j;
}

Jet eval_polar_jet(const SurfaceSpec& f, PolarPoint p, int order) {
  check_order(order);
  Jet j = Jet::from_taylor(polar_taylor(f, p, order), Coords::Polar);
  check_finite(j);
  return j;
}

WirtingerJet eval_wirtinger(const SurfaceSpec& f, Point2 p) {
  check_domain(f, p);
  const C half(0.5L, 0), ihalf(0, 0.5L);
  TC x(2, C(p.x, 0)), y(2, C(p.y, 0));
  x.coeff(1, 0) = half;
  x.coeff(0, 1) = half;
  y.coeff(1, 0) = -ihalf;
  y.coeff(0, 1) = ihalf;
  const TC g = evaluate(*f.expr, cartesian_frame(x, y, f.expr->uses_polar));
  WirtingerJet w;
  w.value = g.coeff(0, 0).real();
  w.gz = g.coeff(1, 0);
  w.gzz = 2.0L * g.coeff(2, 0);
  w.gzzbar = g.coeff(1, 1).real();
  if (!is_finite(w.value) || !is_finite(w.gz.real()) || !is_finite(w.gz.imag()) || !is_finite(w.gzz.real()) ||
      !is_finite(w.gzz.imag()) || !is_finite(w.gzzbar))
    throw NonFiniteError("non-finite Wirtinger jet at " + where(p));
  return w;
}

Jet jet_cartesian_to_polar(const Jet& j, PolarPoint p, int order) {
  if (order < 0) order = j.order;
  check_order(order);
  if (j.coords != Coords::Cartesian) throw InvalidArgument("expected a Cartesian jet");
  if (j.order < order) throw InvalidArgument("Cartesian jet order is below the requested polar order");
  if (!(p.r > 0)) throw DomainError("polar conversion requires r > 0");
  const T r = T::variable(order, p.r, 0);
  const T t = T::variable(order, p.theta, 1);
  T dx = r * cos(t);
  T dy = r * sin(t);
  dx.coeff(0, 0) = 0;
  dy.coeff(0, 0) = 0;
  const T c = j.taylor().truncated(order);
  T out(order, c.coeff(0, 0));
  for (int n = 1; n <= order; ++n) {
    for (int k = 0; k <= n; ++k) {
      const int i = n - k;
      const real cij = c.coeff(i, k);
      if (cij == 0) continue;
      T mono(order, 1);
      for (int a = 0; a < i; ++a) mono = mono * dx;
      for (int b = 0; b < k; ++b) mono = mono * dy;
      out += mono * cij;
    }
  }
  Jet pj = Jet::from_taylor(out, Coords::Polar);
  check_finite(pj);
  return pj;
}

Jet hat_jet(const SurfaceSpec& f, PolarPoint q, int order) {
  check_order(order);
  const real rho = q.r;
  if (!(rho > 0)) throw DomainError("hatted jet requires rho > 0");
  const real r = 1 / rho;
  if (!f.domain.contains(r * std::cos(q.theta), r * std::sin(q.theta)))
    throw DomainError("rho outside (0, 1/R) for domain " + f.domain.describe());
  const Jet p = eval_polar_jet(f, PolarPoint::make(r, q.theta), order);
  const real r2 = r * r, r3 = r2 * r, r4 = r2 * r2;
  Jet h;
  h.order = order;
  h.coords = Coords::Polar;
  h.value = p.value;
  h.first = {-r2 * p.fr(), p.ft()};
  h.second = {2 * r3 * p.fr() + r4 * p.frr(), -r2 * p.frt(), p.ftt()};
  if (order == 3) {
    h.third = {-6 * r4 * p.fr() - 6 * r2 * r3 * p.frr() - r3 * r3 * p.third[0],
               2 * r3 * p.frt() + r4 * p.third[1], -r2 * p.third[2], p.third[3]};
  }
  check_finite(h);
  return h;
}

}  // namespace umbilic
