#include "identifiers.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace umbilic {

namespace {

real half_angle(real num, real den) {
  real phi = std::atan2(num, den) / 2;
  if (phi < 0) phi += kPi;
  if (phi >= kPi) phi -= kPi;
  return phi;
}

}  // namespace

PlaneVector cartesian_identifiers(const Jet& j) {
  const real fx = j.fx(), fy = j.fy();
  const real h = 1 + fx * fx;
  return {h * j.fxy() - fx * fy * j.fxx(), h * j.fyy() - j.fxx() * (1 + fy * fy)};
}

PlaneVector polar_identifiers(const Jet& j, PolarPoint p) {
  if (!(p.r > 0)) throw DomainError("polar identifiers require r > 0");
  const auto [d1, d2] = polar_identifiers_of<real>(j.fr(), j.ft(), j.frr(), j.frt(), j.ftt(), p.r);
  return {d1, d2};
}

PlaneVector hessian_identifier_cartesian(const Jet& j) { return {2 * j.fxy(), j.fyy() - j.fxx()}; }

PlaneVector hessian_identifier_polar(const Jet& j, PolarPoint p) {
  const real r = p.r;
  return {2 * (r * j.frt() - j.ft()), -r * r * j.frr() + r * j.fr() + j.ftt()};
}

PlaneVector hessian_identifier_cartesian(const WirtingerJet& w) { return {-4 * w.gzz.imag(), -4 * w.gzz.real()}; }

PlaneVector hessian_identifier_polar(const WirtingerJet& w, PolarPoint p) {
  const std::complex<real> q = 4 * p.r * p.r * std::polar(1.0L, 2 * p.theta) * w.gzz;
  return {-q.imag(), -q.real()};
}

real hessian_direction(const Jet& j) {
  const real num = 2 * j.fxy(), den = j.fxx() - j.fyy();
  if (num == 0 && den == 0) throw EquiDiagonalError("Hessian is a multiple of the identity");
  return half_angle(num, den);
}

real hessian_direction(const WirtingerJet& w) {
  if (w.gzz == std::complex<real>(0, 0)) throw EquiDiagonalError("Hessian is a multiple of the identity");
  return half_angle(-w.gzz.imag(), w.gzz.real());
}

Sym2 shape_matrix_A(const Jet& j) {
  const real fx = j.fx(), fy = j.fy(), fxx = j.fxx(), fxy = j.fxy(), fyy = j.fyy();
  const real h = 1 + fx * fx;
  const real k = std::sqrt(1 + fx * fx + fy * fy);
  const real l = -h * fxy + fx * fy * fxx;
  return {fx * fy * (fx * fy * fxx - 2 * h * fxy) + h * h * fyy, l * k, k * k * fxx};
}

Sym2 shape_matrix_B(const Jet& j, PolarPoint p) {
  const real r = p.r;
  const real fr = j.fr(), ft = j.ft(), frr = j.frr(), frt = j.frt(), ftt = j.ftt();
  const real h = 1 + fr * fr;
  const real k = std::sqrt(ft * ft + r * r * h);
  const real l = ft * (h + r * fr * frr) - r * h * frt;
  const real b11 = r * fr * fr * ft * ft * frr + h * fr * (-2 * r * ft * frt + 2 * ft * ft + r * r * h) + r * h * h * ftt;
  return {b11, l * k, r * k * k * frr};
}

std::pair<Sym2, Sym2> fundamental_forms(const Jet& j) {
  const real fx = j.fx(), fy = j.fy();
  return {{1 + fx * fx, fx * fy, 1 + fy * fy}, {j.fxx(), j.fxy(), j.fyy()}};
}

PlaneVector v_A(const Sym2& m) { return {m.a11 - m.a22, m.a12}; }

bool is_umbilic(const Jet& j, real tol) {
  const PlaneVector d = cartesian_identifiers(j);
  const real scale = std::max({std::fabs(j.fxx()), std::fabs(j.fxy()), std::fabs(j.fyy())}) *
                     (1 + j.fx() * j.fx() + j.fy() * j.fy());
  return std::fabs(d.vx) + std::fabs(d.vy) <= tol * scale;
}

real principal_direction(const Jet& j, real tol) {
  if (is_umbilic(j, tol)) throw UmbilicError("principal direction undefined at an umbilic");
  const auto [I, II] = fundamental_forms(j);
  // I = L L^T, S = L^-1 II L^-T.
  const real l11 = std::sqrt(I.a11);
  const real l21 = I.a12 / l11;
  const real l22 = std::sqrt(I.a22 - l21 * l21);
  const real m11 = 1 / l11, m21 = -l21 / (l11 * l22), m22 = 1 / l22;  // L^-1
  // S = M II M^T with M lower triangular.
  const real t11 = m11 * II.a11, t12 = m11 * II.a12;
  const real t21 = m21 * II.a11 + m22 * II.a12, t22 = m21 * II.a12 + m22 * II.a22;
  const real s11 = t11 * m11;
  const real s12 = t11 * m21 + t12 * m22;
  const real s22 = t21 * m21 + t22 * m22;
  const real phi = std::atan2(2 * s12, s11 - s22) / 2;
  // w = L^-T (cos phi, sin phi).
  const real c = std::cos(phi), s = std::sin(phi);
  const real wx = m11 * c + m21 * s, wy = m22 * s;
  real ang = std::atan2(wy, wx);
  if (ang < 0) ang += kPi;
  if (ang >= kPi) ang -= kPi;
  return ang;
}

}  // namespace umbilic
