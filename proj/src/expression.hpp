#pragma once

// Expression graphs for scalar fields on the plane. A field is written in terms
// of the Cartesian variables x, y and/or the polar variables r, theta; the same
// tree is evaluated on plain reals or on truncated Taylor objects.

#include <array>
#include <complex>
#include <memory>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "fspec.hpp"
#include "real.hpp"
#include "taylor.hpp"

namespace umbilic {

struct Node;
using Expr = std::shared_ptr<const Node>;

enum class Op { Const, X, Y, R, Theta, Neg, Add, Sub, Mul, Div, Pow, IPow, Func, Dual };
enum class Fn { Tanh, Exp, Log, Sqrt, Sin, Cos, Atan, Profile };

struct Node {
  Op op = Op::Const;
  real value = 0;  // Const, or real exponent of Pow
  int n = 0;       // integer exponent of IPow
  Fn fn = Fn::Exp;
  FSpec profile;   // Fn::Profile
  Expr a, b;
  bool uses_polar = false;
};

namespace expr {
Expr constant(real v);
Expr x();
Expr y();
Expr r();
Expr theta();
Expr neg(Expr a);
Expr add(Expr a, Expr b);
Expr sub(Expr a, Expr b);
Expr mul(Expr a, Expr b);
Expr div(Expr a, Expr b);
// Integral constant exponents become repeated products, so negative bases work.
Expr pow(Expr a, Expr b);
Expr pow(Expr a, real p);
Expr func(Fn fn, Expr a);
Expr profile(const FSpec& F, Expr a);
// (x^2 + y^2) * child(x / (x^2 + y^2), y / (x^2 + y^2)).
Expr dual(Expr child);
bool is_constant(const Expr& e, real* v = nullptr);
}  // namespace expr

inline Expr operator+(Expr a, Expr b) { return expr::add(std::move(a), std::move(b)); }
inline Expr operator-(Expr a, Expr b) { return expr::sub(std::move(a), std::move(b)); }
inline Expr operator*(Expr a, Expr b) { return expr::mul(std::move(a), std::move(b)); }
inline Expr operator/(Expr a, Expr b) { return expr::div(std::move(a), std::move(b)); }
inline Expr operator-(Expr a) { return expr::neg(std::move(a)); }
inline Expr operator+(real a, Expr b) { return expr::add(expr::constant(a), std::move(b)); }
inline Expr operator*(real a, Expr b) { return expr::mul(expr::constant(a), std::move(b)); }
inline Expr operator-(real a, Expr b) { return expr::sub(expr::constant(a), std::move(b)); }
inline Expr operator/(real a, Expr b) { return expr::div(expr::constant(a), std::move(b)); }

// Infix grammar: + - * / ^, unary minus, parentheses, numbers, the variables
// x, y, r, theta, the constant pi, and tanh exp log sqrt sin cos atan.
Expr parse_expression(std::string_view text);

// Values of the four coordinate functions at the evaluation point.
template <class T>
struct Frame {
  T x, y, r, theta;
  bool has_polar = false;
};

namespace detail {

inline real base_of(real v) { return v; }
template <class S>
real base_of(const Taylor<S>& v) {
  return v.base();
}

inline real apply_table(real, const std::array<real, 4>& d) { return d[0]; }
template <class S>
Taylor<S> apply_table(const Taylor<S>& u, const std::array<real, 4>& d) {
  return u.compose(d);
}

inline real ipow(real v, int n) {
  real out = 1;
  const bool inv = n < 0;
  for (int k = 0; k < (inv ? -n : n); ++k) out *= v;
  return inv ? 1 / out : out;
}

template <class T>
T constant_like(const T& shape, real v) {
  if constexpr (std::is_same_v<T, real>) {
    (void)shape;
    return v;
  } else {
    return T(shape.order(), v);
  }
}

}  // namespace detail

// Polar coordinates of a point given as (possibly Taylor-valued) x, y. The angle
// is computed relative to the base direction so that derivatives stay exact.
template <class T>
void attach_polar(Frame<T>& f) {
  using std::atan;
  using std::sqrt;
  const real x0 = detail::base_of(f.x);
  const real y0 = detail::base_of(f.y);
  if (x0 == 0 && y0 == 0) throw DomainError("polar coordinates are undefined at the origin");
  const real t0 = normalize_angle(std::atan2(y0, x0));
  const real c = std::cos(t0), s = std::sin(t0);
  const T xr = f.x * c + f.y * s;
  const T yr = f.y * c - f.x * s;
  f.r = sqrt(f.x * f.x + f.y * f.y);
  f.theta = atan(yr / xr) + t0;
  f.has_polar = true;
}

template <class T>
Frame<T> cartesian_frame(const T& x, const T& y, bool polar) {
  Frame<T> f{x, y, x, y, false};
  if (polar) attach_polar(f);
  return f;
}

template <class T>
Frame<T> polar_frame(const T& r, const T& theta) {
  using std::cos;
  using std::sin;
  return Frame<T>{r * cos(theta), r * sin(theta), r, theta, true};
}

// Frame at the image of the inversion (x, y) -> (x, y) / (x^2 + y^2).
template <class T>
Frame<T> inverted_frame(const Frame<T>& f, bool polar) {
  const T s = f.x * f.x + f.y * f.y;
  Frame<T> g{f.x / s, f.y / s, f.x, f.y, false};
  if (polar) {
    if (f.has_polar) {
      g.r = detail::constant_like(f.r, 1) / f.r;
      g.theta = f.theta;
      g.has_polar = true;
    } else {
      attach_polar(g);
    }
  }
  return g;
}

template <class T>
T evaluate(const Node& n, const Frame<T>& f) {
  using std::cos;
  using std::exp;
  using std::log;
  using std::sin;
  using std::sqrt;
  using std::tanh;
  using std::atan;
  switch (n.op) {
    case Op::Const:
      return detail::constant_like(f.x, n.value);
    case Op::X:
      return f.x;
    case Op::Y:
      return f.y;
    case Op::R:
      if (!f.has_polar) throw DomainError("polar variable requested without polar frame");
      return f.r;
    case Op::Theta:
      if (!f.has_polar) throw DomainError("polar variable requested without polar frame");
      return f.theta;
    case Op::Neg:
      return -evaluate(*n.a, f);
    case Op::Add:
      return evaluate(*n.a, f) + evaluate(*n.b, f);
    case Op::Sub:
      return evaluate(*n.a, f) - evaluate(*n.b, f);
    case Op::Mul:
      return evaluate(*n.a, f) * evaluate(*n.b, f);
    case Op::Div:
      return evaluate(*n.a, f) / evaluate(*n.b, f);
    case Op::IPow: {
      const T v = evaluate(*n.a, f);
      if constexpr (std::is_same_v<T, real>) {
        return detail::ipow(v, n.n);
      } else {
        return ipow(v, n.n);
      }
    }
    case Op::Pow: {
      const T v = evaluate(*n.a, f);
      if (n.b) {
        return exp(evaluate(*n.b, f) * log(v));
      }
      if constexpr (std::is_same_v<T, real>) {
        return std::pow(v, n.value);
      } else {
        return pow(v, n.value);
      }
    }
    case Op::Func: {
      const T v = evaluate(*n.a, f);
      switch (n.fn) {
        case Fn::Tanh:
          if constexpr (std::is_same_v<T, real>) {
            return std::tanh(v);
          } else {
            return tanh(v);
          }
        case Fn::Exp:
          return exp(v);
        case Fn::Log:
          return log(v);
        case Fn::Sqrt:
          return sqrt(v);
        case Fn::Sin:
          return sin(v);
        case Fn::Cos:
          return cos(v);
        case Fn::Atan:
          return atan(v);
        case Fn::Profile:
          return detail::apply_table(v, n.profile.derivatives(detail::base_of(v)));
      }
      break;
    }
    case Op::Dual: {
      const Frame<T> g = inverted_frame(f, n.a->uses_polar);
      return (f.x * f.x + f.y * f.y) * evaluate(*n.a, g);
    }
  }
  throw InvalidArgument("malformed expression node");
}

}  // namespace umbilic
