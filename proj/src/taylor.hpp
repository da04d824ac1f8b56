#pragma once

// Truncated bivariate Taylor arithmetic up to total order 3.
//
// A Taylor<S> holds the normalized coefficients c[i][j] of the polynomial
//   sum_{i+j<=order} c[i][j] * h1^i * h2^j
// describing a scalar quantity near a base point. Arithmetic truncates at the
// object's order, so evaluating an expression on Taylor inputs yields exact
// (to rounding) partial derivatives through third order.
//
// S is either `real` (increments along x/y or r/theta) or std::complex<real>
// (Wirtinger increments h, conj(h), used when the traceless part of a Hessian
// must be resolved underneath a much larger isotropic part).

#include <algorithm>
#include <array>
#include <complex>
#include <stdexcept>

#include "real.hpp"

namespace umbilic {

namespace detail {
inline real real_part(real v) { return v; }
inline real real_part(const std::complex<real>& v) { return v.real(); }
}  // namespace detail

template <class S>
class Taylor {
 public:
  static constexpr int kMaxOrder = 3;
  static constexpr int kSize = 10;

  static constexpr int index(int i, int j) {
    const int n = i + j;
    return n * (n + 1) / 2 + j;
  }

  Taylor() = default;
  explicit Taylor(int order) : order_(order) { check_order(order); }
  Taylor(int order, S value) : order_(order) {
    check_order(order);
    c_[0] = value;
  }

  static Taylor constant(int order, S value) { return Taylor(order, value); }

  // Independent variable with unit slope along increment `which` (0 or 1).
  static Taylor variable(int order, S value, int which) {
    Taylor t(order, value);
    if (order >= 1) t.c_[which == 0 ? index(1, 0) : index(0, 1)] = S(1);
    return t;
  }

  int order() const { return order_; }
  const S& coeff(int i, int j) const { return c_[index(i, j)]; }
  S& coeff(int i, int j) { return c_[index(i, j)]; }
  const S& value() const { return c_[0]; }
  real base() const { return detail::real_part(c_[0]); }

  // Partial derivative of the polynomial with respect to increment `which`,
  // one order lower.
  Taylor partial(int which) const {
    if (order_ == 0) return Taylor(0, S(0));
    Taylor out(order_ - 1);
    for (int n = 0; n < order_; ++n) {
      for (int j = 0; j <= n; ++j) {
        const int i = n - j;
        if (which == 0) {
          out.coeff(i, j) = c_[index(i + 1, j)] * real(i + 1);
        } else {
          out.coeff(i, j) = c_[index(i, j + 1)] * real(j + 1);
        }
      }
    }
    return out;
  }

  Taylor truncated(int order) const {
    Taylor out(std::min(order, order_));
    for (int k = 0; k < size_for(out.order_); ++k) out.c_[k] = c_[k];
    return out;
  }

  Taylor& operator+=(const Taylor& o) {
    align(o);
    for (int k = 0; k < size_for(order_); ++k) c_[k] += o.c_[k];
    return *this;
  }
  Taylor& operator-=(const Taylor& o) {
    align(o);
    for (int k = 0; k < size_for(order_); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Taylor& operator*=(const Taylor& o) {
    *this = *this * o;
    return *this;
  }
  Taylor& operator+=(S s) {
    c_[0] += s;
    return *this;
  }
  Taylor& operator*=(S s) {
    for (int k = 0; k < size_for(order_); ++k) c_[k] *= s;
    return *this;
  }

  friend Taylor operator+(Taylor a, const Taylor& b) { return a += b; }
  friend Taylor operator-(Taylor a, const Taylor& b) { return a -= b; }
  friend Taylor operator-(Taylor a) {
    for (int k = 0; k < size_for(a.order_); ++k) a.c_[k] = -a.c_[k];
    return a;
  }
  friend Taylor operator+(Taylor a, S s) { return a += s; }
  friend Taylor operator+(S s, Taylor a) { return a += s; }
  friend Taylor operator-(Taylor a, S s) { return a += -s; }
  friend Taylor operator-(S s, const Taylor& a) { return (-a) + s; }
  friend Taylor operator*(Taylor a, S s) { return a *= s; }
  friend Taylor operator*(S s, Taylor a) { return a *= s; }

  friend Taylor operator*(const Taylor& a, const Taylor& b) {
    const int order = std::min(a.order_, b.order_);
    Taylor out(order);
    for (int na = 0; na <= order; ++na) {
      for (int ja = 0; ja <= na; ++ja) {
        const S& ca = a.c_[index(na - ja, ja)];
        if (ca == S(0)) continue;
        for (int nb = 0; nb + na <= order; ++nb) {
          for (int jb = 0; jb <= nb; ++jb) {
            out.c_[index(na - ja + nb - jb, ja + jb)] += ca * b.c_[index(nb - jb, jb)];
          }
        }
      }
    }
    return out;
  }

  // g(u) for a scalar function g given its derivatives g^(k)(u0), k = 0..3.
  Taylor compose(const std::array<real, 4>& g) const {
    Taylor nil = *this;
    nil.c_[0] = S(0);
    Taylor out(order_, S(g[0]));
    Taylor power = nil;
    real factorial = 1;
    for (int k = 1; k <= order_; ++k) {
      factorial *= k;
      out += power * S(g[k] / factorial);
      if (k < order_) power = power * nil;
    }
    return out;
  }

  friend Taylor operator/(const Taylor& a, const Taylor& b) { return a * reciprocal(b); }
  friend Taylor operator/(const Taylor& a, S s) { return a * (S(1) / s); }
  friend Taylor operator/(S s, const Taylor& b) { return reciprocal(b) * s; }

  friend Taylor reciprocal(const Taylor& u) {
    const real x = u.base();
    return u.compose({1 / x, -1 / (x * x), 2 / (x * x * x), -6 / (x * x * x * x)});
  }

 private:
  static constexpr int size_for(int order) { return (order + 1) * (order + 2) / 2; }
  static void check_order(int order) {
    if (order < 0 || order > kMaxOrder) throw std::invalid_argument("Taylor order must be in [0, 3]");
  }
  void align(const Taylor& o) {
    if (o.order_ < order_) order_ = o.order_;
  }

  int order_ = 0;
  std::array<S, kSize> c_{};
};

// Elementary functions. Derivative tables are exact closed forms.

template <class S>
Taylor<S> exp(const Taylor<S>& u) {
  const real e = std::exp(u.base());
  return u.compose({e, e, e, e});
}

template <class S>
Taylor<S> log(const Taylor<S>& u) {
  const real x = u.base();
  return u.compose({std::log(x), 1 / x, -1 / (x * x), 2 / (x * x * x)});
}

template <class S>
Taylor<S> sqrt(const Taylor<S>& u) {
  const real x = u.base();
  const real s = std::sqrt(x);
  return u.compose({s, 1 / (2 * s), -1 / (4 * s * x), 3 / (8 * s * x * x)});
}

template <class S>
Taylor<S> pow(const Taylor<S>& u, real p) {
  const real x = u.base();
  const real v = std::pow(x, p);
  return u.compose({v, p * v / x, p * (p - 1) * v / (x * x), p * (p - 1) * (p - 2) * v / (x * x * x)});
}

template <class S>
Taylor<S> ipow(const Taylor<S>& u, int n) {
  if (n == 0) return Taylor<S>(u.order(), S(1));
  if (n < 0) return reciprocal(ipow(u, -n));
  Taylor<S> out = u;
  for (int k = 1; k < n; ++k) out = out * u;
  return out;
}

template <class S>
Taylor<S> sin(const Taylor<S>& u) {
  const real s = std::sin(u.base());
  const real c = std::cos(u.base());
  return u.compose({s, c, -s, -c});
}

template <class S>
Taylor<S> cos(const Taylor<S>& u) {
  const real s = std::sin(u.base());
  const real c = std::cos(u.base());
  return u.compose({c, -s, -c, s});
}

template <class S>
Taylor<S> atan(const Taylor<S>& u) {
  const real x = u.base();
  const real q = 1 / (1 + x * x);
  return u.compose({std::atan(x), q, -2 * x * q * q, (6 * x * x - 2) * q * q * q});
}

// tanh and its derivatives with sech^2 evaluated as 4t/(1+t)^2, t = exp(-2|x|),
// which never overflows and underflows only to the correct limit.
inline std::array<real, 4> tanh_derivatives(real x) {
  const real t = std::exp(-2 * std::fabs(x));
  const real s2 = 4 * t / ((1 + t) * (1 + t));
  const real th = std::tanh(x);
  return {th, s2, -2 * th * s2, -2 * s2 * (s2 - 2 * th * th)};
}

template <class S>
Taylor<S> tanh(const Taylor<S>& u) {
  return u.compose(tanh_derivatives(u.base()));
}

}  // namespace umbilic
