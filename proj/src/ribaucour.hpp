#pragma once

#include <array>

#include "identifiers.hpp"
#include "jets.hpp"
#include "surface.hpp"

namespace umbilic {

using Vec3 = std::array<real, 3>;

struct RibaucourData {
  real lambda = 0;
  std::array<real, 2> grad_lambda{};  // (lambda_xi, lambda_eta)
  Point2 phi_image;                   // (xi, eta)
  Vec3 normal{};
  real mu = 0;
};

// Tangent-sphere congruence data of the graph of f at p.
RibaucourData ribaucour_data(const SurfaceSpec& f, Point2 p);

// (lambda_xi, lambda_eta) from a unit normal with nu_3 < 1, and back.
std::array<real, 2> gradient_from_normal(const Vec3& nu);
Vec3 normal_from_gradient(real lx, real ly);

enum class HessianSource { Fit, ChainRule };

struct FactA1Report {
  real residual = 0;       // |sin| of the angle to the nearest eigen-direction
  real jacobian_det = 0;   // det dPhi at p
  real pushed_angle = 0;   // direction of dPhi(w)
  Sym2 hessian;            // of lambda in (xi, eta)
  real eigen_angle = 0;
};

// Fit stencil step is h times min(1, 1 / |Hessian of f|).
FactA1Report fact_a1(const SurfaceSpec& f, Point2 p, HessianSource src = HessianSource::Fit, real h = 1e-4L);
real fact_a1_residual(const SurfaceSpec& f, Point2 p, HessianSource src = HessianSource::Fit);

struct CongruencePoint {
  Vec3 P{};
  Vec3 nu{};
  std::array<real, 2> grad{};          // (Lambda_xi, Lambda_eta) from the expression graph
  std::array<real, 2> grad_printed{};  // same, closed form (Lambda_m only)
  Vec3 P_xi{}, P_eta{};
  Vec3 lam_nu_xi{}, lam_nu_eta{};      // Lambda * nu_xi, Lambda * nu_eta
};

// P = (xi, eta, Lambda) - Lambda nu with nu built from grad Lambda.
CongruencePoint sphere_congruence_surface(const SurfaceSpec& lam, Point2 p);

}  // namespace umbilic
