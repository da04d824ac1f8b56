#pragma once

#include <string_view>
#include <utility>

#include "jets.hpp"
#include "surface.hpp"

namespace umbilic {

namespace catalog {

// 2 + xy / (sqrt(1 + x^2) sqrt(1 + y^2))
SurfaceSpec bates();
// 1 + lam (1 + x + y^2) / sqrt(1 + (x + y^2)^2)
SurfaceSpec ghomi_howard(real lam = 1);
SurfaceSpec rez3();      // x^3 - 3 x y^2
SurfaceSpec rez2zbar();  // x^3 + x y^2 = r^3 cos(theta)
SurfaceSpec paraboloid();
// 1 + tanh(r^a cos(m theta))
SurfaceSpec fm(int m, real a);
// 1 + F(r^a cos(m theta))
SurfaceSpec gm(int m, real a, const FSpec& F);
// f_m - 1 = tanh(r^a cos(m theta))
SurfaceSpec fm_minus_one(int m, real a);
// (x^2 + y^2) tanh(r^-a cos(m theta))
SurfaceSpec lambda_m(int m, real a);
SurfaceSpec expression(std::string_view text);
SurfaceSpec from_expr(Expr e, std::string name);

}  // namespace catalog

// g(u, v) = (u^2 + v^2) f(u / (u^2 + v^2), v / (u^2 + v^2)).
SurfaceSpec make_dual(const SurfaceSpec& f);

// Text forms: rez3, rez2zbar, bates, paraboloid, gh[:lam=L], fm:m=M,a=A,
// fm1:m=M,a=A, gm:m=M,a=A[,F=tanh|oneminusexp][,M=W], lambda:m=M,a=A,
// dual:<surface>, expr:<expression>.
SurfaceSpec parse_surface(std::string_view text);

// Printed closed-form polar jets (order 2) for the g_m / f_m and Lambda_m
// families.
Jet closed_form_polar_jet_g(const SurfaceSpec& spec, PolarPoint p);
Jet closed_form_polar_jet_lambda(const SurfaceSpec& spec, PolarPoint p);
// (zeta_1, zeta_2) for Lambda_m in closed form.
std::pair<real, real> closed_form_zeta(const SurfaceSpec& spec, PolarPoint p);
// (Lambda_xi, Lambda_eta) for Lambda_m in closed form.
std::pair<real, real> closed_form_lambda_gradient(const SurfaceSpec& spec, PolarPoint p);

}  // namespace umbilic
