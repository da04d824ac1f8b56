#include "fspec.hpp"

#include <cmath>
#include <sstream>

#include "errors.hpp"
#include "taylor.hpp"

namespace umbilic {

namespace {

// Odd quintic p x + q x^3 + s x^5 matching 1 - exp(-x) to second order at x = M.
struct Quintic {
  real p, q, s;
};

Quintic glue(real M) {
  const real e = std::exp(-M);
  // Rows: value, slope, curvature at M.
  real a[3][4] = {
      {M, M * M * M, M * M * M * M * M, 1 - e},
      {1, 3 * M * M, 5 * M * M * M * M, e},
      {0, 6 * M, 20 * M * M * M, -e},
  };
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int r = c + 1; r < 3; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    for (int k = 0; k < 4; ++k) std::swap(a[c][k], a[piv][k]);
    for (int r = 0; r < 3; ++r) {
      if (r == c) continue;
      const real f = a[r][c] / a[c][c];
      for (int k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return {a[0][3] / a[0][0], a[1][3] / a[1][1], a[2][3] / a[2][2]};
}

}  // namespace

FSpec FSpec::one_minus_exp(real M) {
  if (!(M > 0)) throw InvalidArgument("OneMinusExp gluing width must be positive");
  return {Kind::OneMinusExp, M};
}

std::array<real, 4> FSpec::derivatives(real x) const {
  if (kind == Kind::Tanh) return tanh_derivatives(x);
  if (x > M) {
    const real e = std::exp(-x);
    return {1 - e, e, -e, e};
  }
  if (x < -M) {
    const real e = std::exp(x);
    return {e - 1, e, e, e};
  }
  const Quintic c = glue(M);
  const real x2 = x * x;
  return {x * (c.p + x2 * (c.q + x2 * c.s)), c.p + x2 * (3 * c.q + 5 * c.s * x2), x * (6 * c.q + 20 * c.s * x2),
          6 * c.q + 60 * c.s * x2};
}

std::string FSpec::name() const {
  if (kind == Kind::Tanh) return "tanh";
  std::ostringstream os;
  os << "oneminusexp";
  if (M != 3) os << "(" << static_cast<double>(M) << ")";
  return os.str();
}

}  // namespace umbilic
