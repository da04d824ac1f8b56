#pragma once

#include <cmath>
#include <limits>
#include <numbers>

namespace umbilic {

// Extended precision is load-bearing: the large-radius index computations for
// the tanh families evaluate derivatives of size ~1e-1660, far below the range
// of an IEEE double.
using real = long double;

static_assert(std::numeric_limits<real>::max_exponent10 >= 4000,
              "umbilic requires an extended-range long double (x87 80-bit or binary128)");

inline constexpr real kPi = std::numbers::pi_v<long double>;
inline constexpr real kTwoPi = 2 * kPi;

inline bool is_finite(real v) { return std::isfinite(v); }

// Wraps an angle into (-pi, pi].
inline real wrap_pi(real a) {
  a = std::remainder(a, kTwoPi);
  if (a <= -kPi) a += kTwoPi;
  return a;
}

// Wraps an angle into (-pi/2, pi/2].
inline real wrap_half_pi(real a) {
  a = std::remainder(a, kPi);
  if (a <= -kPi / 2) a += kPi;
  return a;
}

inline real normalize_angle(real a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  if (a >= kTwoPi) a = 0;
  return a;
}

}  // namespace umbilic
