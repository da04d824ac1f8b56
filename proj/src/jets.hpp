#pragma once

#include <array>
#include <complex>

#include "real.hpp"
#include "surface.hpp"
#include "taylor.hpp"

namespace umbilic {

struct Point2 {
  real x = 0, y = 0;
};

struct PolarPoint {
  real r = 1, theta = 0;  // theta in [0, 2pi)

  static PolarPoint make(real r, real theta) { return {r, normalize_angle(theta)}; }
  static PolarPoint from(Point2 p) { return make(std::hypot(p.x, p.y), std::atan2(p.y, p.x)); }
  Point2 cartesian() const { return {r * std::cos(theta), r * std::sin(theta)}; }
};

enum class Coords { Cartesian, Polar };

// Value and partial derivatives. Slots are (1, 2) = (x, y) or (r, theta);
// second = (11, 12, 22), third = (111, 112, 122, 222).
struct Jet {
  int order = 2;
  Coords coords = Coords::Cartesian;
  real value = 0;
  std::array<real, 2> first{};
  std::array<real, 3> second{};
  std::array<real, 4> third{};

  real fx() const { return first[0]; }
  real fy() const { return first[1]; }
  real fxx() const { return second[0]; }
  real fxy() const { return second[1]; }
  real fyy() const { return second[2]; }

  real fr() const { return first[0]; }
  real ft() const { return first[1]; }
  real frr() const { return second[0]; }
  real frt() const { return second[1]; }
  real ftt() const { return second[2]; }

  Taylor<real> taylor() const;
  static Jet from_taylor(const Taylor<real>& t, Coords coords);
};

// Second-order data in the Wirtinger frame z = x + iy: g_z, g_zz, g_{z zbar}.
struct WirtingerJet {
  real value = 0;
  std::complex<real> gz, gzz;
  real gzzbar = 0;
};

// Taylor expansions of the field in (dx, dy), (dr, dtheta), and of the
// hatted field f(u/rho^2, v/rho^2) in (du, dv).
Taylor<real> cartesian_taylor(const SurfaceSpec& f, Point2 p, int order);
Taylor<real> polar_taylor(const SurfaceSpec& f, PolarPoint p, int order);
Taylor<real> hatted_taylor(const SurfaceSpec& f, Point2 uv, int order);

real eval_value(const SurfaceSpec& f, Point2 p);
Jet eval_jet(const SurfaceSpec& f, Point2 p, int order);
// Polar jet from the field written in r, theta (no Cartesian detour).
Jet eval_polar_jet(const SurfaceSpec& f, PolarPoint p, int order);
WirtingerJet eval_wirtinger(const SurfaceSpec& f, Point2 p);

Jet jet_cartesian_to_polar(const Jet& j, PolarPoint p, int order = -1);

// Jet of the hatted field in (rho, theta) at q = (rho, theta), from the polar
// jet of f at r = 1/rho.
Jet hat_jet(const SurfaceSpec& f, PolarPoint q, int order = 2);

void check_domain(const SurfaceSpec& f, Point2 p);

}  // namespace umbilic
