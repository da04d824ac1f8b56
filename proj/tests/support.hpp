#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "catalog.hpp"
#include "jets.hpp"

namespace umbilic::test {

// |a - b| <= tol * max(|b|, scale, tiny).
inline bool close(real a, real b, real tol, real scale = 0) {
  const real ref = std::max({std::fabs(b), scale, real(1e-300L)});
  return std::fabs(a - b) <= tol * ref;
}

inline real jet_scale(const Jet& j) {
  real s = std::fabs(j.value);
  for (real v : j.first) s = std::max(s, std::fabs(v));
  for (real v : j.second) s = std::max(s, std::fabs(v));
  return s;
}

// Central differences of the plain value: (f, fx, fy, fxx, fxy, fyy).
inline std::array<real, 6> fd_jet(const SurfaceSpec& f, Point2 p, real h1 = 1e-5L, real h2 = 1e-4L) {
  auto v = [&](real dx, real dy) { return eval_value(f, {p.x + dx, p.y + dy}); };
  const real f0 = v(0, 0);
  return {f0,
          (v(h1, 0) - v(-h1, 0)) / (2 * h1),
          (v(0, h1) - v(0, -h1)) / (2 * h1),
          (v(h2, 0) - 2 * f0 + v(-h2, 0)) / (h2 * h2),
          (v(h2, h2) - v(h2, -h2) - v(-h2, h2) + v(-h2, -h2)) / (4 * h2 * h2),
          (v(0, h2) - 2 * f0 + v(0, -h2)) / (h2 * h2)};
}

// Uniform point in the annulus r0 <= r <= r1.
inline Point2 annulus_point(std::mt19937_64& rng, real r0, real r1) {
  std::uniform_real_distribution<double> ur(static_cast<double>(r0), static_cast<double>(r1));
  std::uniform_real_distribution<double> ut(0, 2 * std::numbers::pi);
  const real r = ur(rng), t = ut(rng);
  return {r * std::cos(t), r * std::sin(t)};
}

}  // namespace umbilic::test
