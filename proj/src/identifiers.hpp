#pragma once

#include <utility>

#include "jets.hpp"
#include "real.hpp"

namespace umbilic {

struct Sym2 {
  real a11 = 0, a12 = 0, a22 = 0;
};

struct PlaneVector {
  real vx = 0, vy = 0;
};

// (d1, d2): both vanish exactly at umbilics of the graph.
PlaneVector cartesian_identifiers(const Jet& j);
// (delta1, delta2) from a polar jet at p.
PlaneVector polar_identifiers(const Jet& j, PolarPoint p);

template <class T>
std::pair<T, T> polar_identifiers_of(const T& fr, const T& ft, const T& frr, const T& frt, const T& ftt, const T& r) {
  const T h = fr * fr + 1.0L;
  const T d1 = -(ft * (h + r * fr * frr)) + r * h * frt;
  const T d2 = h * (r * fr + ftt) - frr * (r * r + ft * ft);
  return {d1, d2};
}

// d_g = (2 g_xy, g_yy - g_xx).
PlaneVector hessian_identifier_cartesian(const Jet& j);
// delta_g = (2 (r g_rt - g_t), -r^2 g_rr + r g_r + g_tt).
PlaneVector hessian_identifier_polar(const Jet& j, PolarPoint p);
// The same two fields from Wirtinger data, free of cancellation against the
// trace of the Hessian.
PlaneVector hessian_identifier_cartesian(const WirtingerJet& w);
PlaneVector hessian_identifier_polar(const WirtingerJet& w, PolarPoint p);

// Eigen-direction of the larger Hessian eigenvalue, in [0, pi).
real hessian_direction(const Jet& j);
real hessian_direction(const WirtingerJet& w);

Sym2 shape_matrix_A(const Jet& j);
Sym2 shape_matrix_B(const Jet& j, PolarPoint p);
// (I, II); II is the Hessian.
std::pair<Sym2, Sym2> fundamental_forms(const Jet& j);
PlaneVector v_A(const Sym2& m);

inline constexpr real kUmbilicTol = 1e-9L;

// |d1| + |d2| <= tol * max|second| * (1 + |grad f|^2).
bool is_umbilic(const Jet& j, real tol = kUmbilicTol);
// Direction of the larger principal curvature of I^-1 II, in [0, pi).
real principal_direction(const Jet& j, real tol = kUmbilicTol);

}  // namespace umbilic
