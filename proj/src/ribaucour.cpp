#include "ribaucour.hpp"

#include <cmath>
#include <limits>

#include "catalog.hpp"
#include "errors.hpp"

namespace umbilic {

namespace {

using T = Taylor<real>;

struct PhiTaylor {
  T xi, eta, lambda;
};

// Phi = (x + lambda nu_1, y + lambda nu_2) and lambda, to the given order.
PhiTaylor phi_taylor(const SurfaceSpec& f, Point2 p, int order) {
  const T g = cartesian_taylor(f, p, order + 1);
  const T fx = g.partial(0), fy = g.partial(1), fv = g.truncated(order);
  const T W = sqrt(fx * fx + fy * fy + 1.0L);
  const T lam = fv * W / (W + 1.0L);
  const T x = T::variable(order, p.x, 0), y = T::variable(order, p.y, 1);
  return {x + lam * fx / W, y + lam * fy / W, lam};
}

struct Mat2 {
  real a, b, c, d;  // [[a, b], [c, d]]
  real det() const { return a * d - b * c; }
};

Mat2 jacobian(const PhiTaylor& t) { return {t.xi.coeff(1, 0), t.xi.coeff(0, 1), t.eta.coeff(1, 0), t.eta.coeff(0, 1)}; }

std::array<real, 2> solve(const Mat2& m, real u, real v) {
  const real D = m.det();
  return {(m.d * u - m.b * v) / D, (m.a * v - m.c * u) / D};
}

// lambda at Phi^-1(target), Newton from `start` with step halving.
real lambda_at(const SurfaceSpec& f, Point2 start, Point2 target) {
  Point2 q = start;
  PhiTaylor t = phi_taylor(f, q, 1);
  auto miss = [&](const PhiTaylor& s) { return std::hypot(s.xi.base() - target.x, s.eta.base() - target.y); };
  const real tol = 64 * std::numeric_limits<real>::epsilon() * std::max<real>(1, std::hypot(target.x, target.y));
  real err = miss(t);
  for (int it = 0; it < 60 && err > tol; ++it) {
    const auto d = solve(jacobian(t), target.x - t.xi.base(), target.y - t.eta.base());
    real step = 1;
    for (int k = 0; k < 30; ++k, step /= 2) {
      const Point2 nq{q.x + step * d[0], q.y + step * d[1]};
      const PhiTaylor nt = phi_taylor(f, nq, 1);
      const real ne = miss(nt);
      if (ne < err) {
        q = nq;
        t = nt;
        err = ne;
        break;
      }
      if (k == 29) throw NoConvergence("Phi inversion stalled");
    }
  }
  if (!(err <= tol)) throw NoConvergence("Phi inversion did not converge");
  return t.lambda.base();
}

// Least-squares quadratic over a 5x5 stencil; returns the Hessian.
Sym2 fitted_hessian(const SurfaceSpec& f, Point2 p, Point2 c, const Mat2& J0, real h) {
  real A[6][7] = {};
  for (int i = -2; i <= 2; ++i) {
    for (int j = -2; j <= 2; ++j) {
      const Point2 target{c.x + i * h, c.y + j * h};
      const auto d = solve(J0, i * h, j * h);
      const real v = lambda_at(f, {p.x + d[0], p.y + d[1]}, target);
      const real s = i, t = j;
      const real row[6] = {1, s, t, s * s / 2, s * t, t * t / 2};
      for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) A[a][b] += row[a] * row[b];
        A[a][6] += row[a] * v;
      }
    }
  }
  for (int col = 0; col < 6; ++col) {
    int piv = col;
    for (int r = col + 1; r < 6; ++r)
      if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
    std::swap(A[col], A[piv]);
    for (int r = 0; r < 6; ++r) {
      if (r == col) continue;
      const real k = A[r][col] / A[col][col];
      for (int q = col; q < 7; ++q) A[r][q] -= k * A[col][q];
    }
  }
  auto coef = [&](int k) { return A[k][6] / A[k][k]; };
  return {coef(3) / (h * h), coef(4) / (h * h), coef(5) / (h * h)};
}

Sym2 chain_rule_hessian(const PhiTaylor& t) {
  const Mat2 J = jacobian(t);
  const real D = J.det();
  const Mat2 Ji{J.d / D, -J.b / D, -J.c / D, J.a / D};
  // grad_(xi, eta) lambda = J^-T grad_(x, y) lambda
  const real lx = t.lambda.coeff(1, 0), ly = t.lambda.coeff(0, 1);
  const real Lxi = Ji.a * lx + Ji.c * ly, Leta = Ji.b * lx + Ji.d * ly;
  auto hess = [](const T& u) { return std::array<real, 3>{2 * u.coeff(2, 0), u.coeff(1, 1), 2 * u.coeff(0, 2)}; };
  const auto hl = hess(t.lambda), hx = hess(t.xi), he = hess(t.eta);
  std::array<real, 3> m;
  for (int k = 0; k < 3; ++k) m[k] = hl[k] - Lxi * hx[k] - Leta * he[k];
  // Ji^T M Ji
  const real M[2][2] = {{m[0], m[1]}, {m[1], m[2]}};
  const real K[2][2] = {{Ji.a, Ji.b}, {Ji.c, Ji.d}};
  auto entry = [&](int i, int j) {
    real s = 0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) s += K[a][i] * M[a][b] * K[b][j];
    return s;
  };
  return {entry(0, 0), entry(0, 1), entry(1, 1)};
}

}  // namespace

std::array<real, 2> gradient_from_normal(const Vec3& nu) {
  const real d = 1 - nu[2];
  if (!(d > 0)) throw DomainError("normal (0, 0, 1) has no gradient form");
  return {nu[0] / d, nu[1] / d};
}

Vec3 normal_from_gradient(real lx, real ly) {
  const real q = 1 + lx * lx + ly * ly;
  return {2 * lx / q, 2 * ly / q, (lx * lx + ly * ly - 1) / q};
}

RibaucourData ribaucour_data(const SurfaceSpec& f, Point2 p) {
  const Jet j = eval_jet(f, p, 2);
  const real W = std::sqrt(1 + j.fx() * j.fx() + j.fy() * j.fy());
  RibaucourData d;
  d.lambda = j.value * W / (1 + W);
  d.normal = {j.fx() / W, j.fy() / W, -1 / W};
  d.phi_image = {p.x + d.lambda * d.normal[0], p.y + d.lambda * d.normal[1]};
  d.grad_lambda = gradient_from_normal(d.normal);
  d.mu = 2 / (1 + d.grad_lambda[0] * d.grad_lambda[0] + d.grad_lambda[1] * d.grad_lambda[1]);
  return d;
}

FactA1Report fact_a1(const SurfaceSpec& f, Point2 p, HessianSource src, real h) {
  FactA1Report rep;
  const Jet jet = eval_jet(f, p, 2);
  const real w = principal_direction(jet);
  const PhiTaylor t = phi_taylor(f, p, src == HessianSource::ChainRule ? 2 : 1);
  const Mat2 J = jacobian(t);
  rep.jacobian_det = J.det();
  if (!(rep.jacobian_det > 0.1L)) throw NoConvergence("Phi is not safely invertible here (det dPhi <= 0.1)");
  const real c = std::cos(w), s = std::sin(w);
  rep.pushed_angle = std::atan2(J.c * c + J.d * s, J.a * c + J.b * s);
  // Local length scale: inverse size of the Hessian of f.
  const real hess = std::sqrt(jet.fxx() * jet.fxx() + 2 * jet.fxy() * jet.fxy() + jet.fyy() * jet.fyy());
  const real scale = hess > 1 ? 1 / hess : 1;
  rep.hessian = src == HessianSource::ChainRule
                    ? chain_rule_hessian(t)
                    : fitted_hessian(f, p, {t.xi.base(), t.eta.base()}, J, h * scale);
  const Sym2& H = rep.hessian;
  rep.eigen_angle = std::atan2(2 * H.a12, H.a11 - H.a22) / 2;
  const real d = rep.pushed_angle - rep.eigen_angle;
  rep.residual = std::min(std::fabs(std::sin(d)), std::fabs(std::cos(d)));
  return rep;
}

real fact_a1_residual(const SurfaceSpec& f, Point2 p, HessianSource src) { return fact_a1(f, p, src).residual; }

CongruencePoint sphere_congruence_surface(const SurfaceSpec& lam, Point2 p) {
  if (p.x == 0 && p.y == 0) throw DomainError("sphere congruence surface is evaluated away from the origin");
  const T L = cartesian_taylor(lam, p, 2);
  const T gx = L.partial(0), gy = L.partial(1);
  const T q = gx * gx + gy * gy + 1.0L;
  const T nu[3] = {2.0L * gx / q, 2.0L * gy / q, (gx * gx + gy * gy - 1.0L) / q};
  const real Lv = L.base();
  CongruencePoint out;
  out.grad = {gx.base(), gy.base()};
  for (int k = 0; k < 3; ++k) {
    out.nu[k] = nu[k].base();
    out.lam_nu_xi[k] = Lv * nu[k].coeff(1, 0);
    out.lam_nu_eta[k] = Lv * nu[k].coeff(0, 1);
  }
  out.P = {p.x - Lv * out.nu[0], p.y - Lv * out.nu[1], Lv - Lv * out.nu[2]};
  const Vec3 e1{1, 0, out.grad[0]}, e2{0, 1, out.grad[1]};
  for (int k = 0; k < 3; ++k) {
    out.P_xi[k] = e1[k] - out.grad[0] * out.nu[k] - out.lam_nu_xi[k];
    out.P_eta[k] = e2[k] - out.grad[1] * out.nu[k] - out.lam_nu_eta[k];
  }
  if (lam.kind == SurfaceKind::LambdaM) {
    const auto [a, b] = closed_form_lambda_gradient(lam, PolarPoint::from(p));
    out.grad_printed = {a, b};
  } else {
    out.grad_printed = out.grad;
  }
  return out;
}

}  // namespace umbilic
