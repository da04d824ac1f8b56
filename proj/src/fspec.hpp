#pragma once

#include <array>
#include <string>

#include "real.hpp"

namespace umbilic {

// Bounded odd profile F used by the g_m family.
struct FSpec {
  enum class Kind { Tanh, OneMinusExp };

  Kind kind = Kind::Tanh;
  real M = 3;  // gluing half-width for OneMinusExp

  static FSpec tanh() { return {}; }
  static FSpec one_minus_exp(real M = 3);

  // F, F', F'', F''' at x.
  std::array<real, 4> derivatives(real x) const;
  real value(real x) const { return derivatives(x)[0]; }

  std::string name() const;
};

}  // namespace umbilic
