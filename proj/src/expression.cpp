#include "expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>

namespace umbilic {

namespace expr {

namespace {

Expr make(Node n) {
  n.uses_polar = n.op == Op::R || n.op == Op::Theta || (n.a && n.a->uses_polar) || (n.b && n.b->uses_polar);
  return std::make_shared<const Node>(std::move(n));
}

Expr leaf(Op op) {
  Node n;
  n.op = op;
  return make(std::move(n));
}

Expr binary(Op op, Expr a, Expr b) {
  Node n;
  n.op = op;
  n.a = std::move(a);
  n.b = std::move(b);
  return make(std::move(n));
}

}  // namespace

bool is_constant(const Expr& e, real* v) {
  if (e->op != Op::Const) return false;
  if (v) *v = e->value;
  return true;
}

Expr constant(real v) {
  Node n;
  n.op = Op::Const;
  n.value = v;
  return make(std::move(n));
}

Expr x() { return leaf(Op::X); }
Expr y() { return leaf(Op::Y); }
Expr r() { return leaf(Op::R); }
Expr theta() { return leaf(Op::Theta); }

Expr neg(Expr a) {
  real v;
  if (is_constant(a, &v)) return constant(-v);
  Node n;
  n.op = Op::Neg;
  n.a = std::move(a);
  return make(std::move(n));
}

Expr add(Expr a, Expr b) { return binary(Op::Add, std::move(a), std::move(b)); }
Expr sub(Expr a, Expr b) { return binary(Op::Sub, std::move(a), std::move(b)); }
Expr mul(Expr a, Expr b) { return binary(Op::Mul, std::move(a), std::move(b)); }
Expr div(Expr a, Expr b) { return binary(Op::Div, std::move(a), std::move(b)); }

Expr pow(Expr a, real p) {
  if (p == std::nearbyint(p) && std::fabs(p) <= 64) {
    Node n;
    n.op = Op::IPow;
    n.n = static_cast<int>(p);
    n.a = std::move(a);
    return make(std::move(n));
  }
  Node n;
  n.op = Op::Pow;
  n.value = p;
  n.a = std::move(a);
  return make(std::move(n));
}

Expr pow(Expr a, Expr b) {
  real p;
  if (is_constant(b, &p)) return pow(std::move(a), p);
  Node n;
  n.op = Op::Pow;
  n.a = std::move(a);
  n.b = std::move(b);
  return make(std::move(n));
}

Expr func(Fn fn, Expr a) {
  Node n;
  n.op = Op::Func;
  n.fn = fn;
  n.a = std::move(a);
  return make(std::move(n));
}

Expr profile(const FSpec& F, Expr a) {
  Node n;
  n.op = Op::Func;
  n.fn = Fn::Profile;
  n.profile = F;
  n.a = std::move(a);
  return make(std::move(n));
}

Expr dual(Expr child) {
  Node n;
  n.op = Op::Dual;
  n.a = std::move(child);
  return make(std::move(n));
}

}  // namespace expr

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Expr parse() {
    Expr e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression: " + msg + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr sum() {
    Expr e = product();
    for (;;) {
      if (accept('+')) {
        e = expr::add(e, product());
      } else if (accept('-')) {
        e = expr::sub(e, product());
      } else {
        return e;
      }
    }
  }

  Expr product() {
    Expr e = unary();
    for (;;) {
      if (accept('*')) {
        e = expr::mul(e, unary());
      } else if (accept('/')) {
        e = expr::div(e, unary());
      } else {
        return e;
      }
    }
  }

  Expr unary() {
    if (accept('-')) return expr::neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (accept('^')) return expr::pow(base, unary());
    return base;
  }

  Expr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = sum();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Expr number() {
    const std::string rest(s_.substr(pos_));
    char* end = nullptr;
    const long double v = std::strtold(rest.c_str(), &end);
    if (end == rest.c_str()) fail("malformed number");
    pos_ += static_cast<size_t>(end - rest.c_str());
    return expr::constant(v);
  }

  Expr identifier() {
    const size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    const std::string id(s_.substr(start, pos_ - start));
    if (id == "x") return expr::x();
    if (id == "y") return expr::y();
    if (id == "r") return expr::r();
    if (id == "theta") return expr::theta();
    if (id == "pi") return expr::constant(kPi);
    static const std::pair<const char*, Fn> kFns[] = {
        {"tanh", Fn::Tanh}, {"exp", Fn::Exp}, {"log", Fn::Log},   {"sqrt", Fn::Sqrt},
        {"sin", Fn::Sin},   {"cos", Fn::Cos}, {"atan", Fn::Atan},
    };
    for (const auto& [name, fn] : kFns) {
      if (id == name) {
        if (!accept('(')) fail("expected '(' after " + id);
        Expr arg = sum();
        if (!accept(')')) fail("expected ')'");
        return expr::func(fn, arg);
      }
    }
    pos_ = start;
    fail("unknown identifier '" + id + "'");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace umbilic
