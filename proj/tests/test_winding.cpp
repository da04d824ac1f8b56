#include <doctest.h>

#include <random>

#include "catalog.hpp"
#include "support.hpp"
#include "winding.hpp"

using namespace umbilic;

TEST_CASE("vector field degree on the unit circle") {
  const CurveSpec c = CurveSpec::circle(1);
  CHECK(vector_field_index([](Point2) { return PlaneVector{1, 0}; }, c).index == 0);
  CHECK(vector_field_index([](Point2 p) { return PlaneVector{p.x, p.y}; }, c).index == 1);
  CHECK(vector_field_index([](Point2 p) { return PlaneVector{p.x, -p.y}; }, c).index == -1);
  const WindingReport w = vector_field_index(
      [](Point2 p) {
        const std::complex<real> z(p.x, p.y), v = z * z * z;
        return PlaneVector{v.real(), v.imag()};
      },
      c);
  CHECK(w.index == 3);
  CHECK(w.residual < 0.01L);
  CHECK(w.max_step_angle < kPi / 2);
}

TEST_CASE("vector field degree with a zero on the curve") {
  WindingOptions opt;
  opt.zero_tol = 1e-12L;
  CHECK_THROWS_AS(vector_field_index([](Point2 p) { return PlaneVector{p.x - 1, p.y}; }, CurveSpec::circle(1), opt),
                  ZeroOnCurveError);
}

TEST_CASE("line field index") {
  const CurveSpec c = CurveSpec::circle(0.5L);
  CHECK(line_field_index([](Point2) { return 0.3L; }, c).index == 0);
  // Half-angle of the position: index 1/2.
  const WindingReport w = line_field_index([](Point2 p) { return std::atan2(p.y, p.x) / 2; }, c);
  CHECK(w.index == 1);
  CHECK(w.residual < 0.02L);
  CHECK(w.max_step_angle < kPi / 4);
  CHECK(line_field_index([](Point2 p) { return -std::atan2(p.y, p.x) / 2; }, c).index == -1);
}

TEST_CASE("Hessian eigen-directions of a saddle have index 0") {
  const SurfaceSpec g = catalog::expression("x^2 - y^2");
  for (HessianRoute r : {HessianRoute::Cartesian, HessianRoute::Polar, HessianRoute::Direct}) {
    CHECK(hessian_flow_index(g, CurveSpec::circle(1), r).index.twice == 0);
    CHECK(hessian_flow_index(g, CurveSpec::circle(0.2L, {3, -1}), r).index.twice == 0);
  }
  CHECK(index_at_infinity(g, 50).index.twice == 0);
}

TEST_CASE("Delta of r^3 cos(theta) on r = 0.1") {
  const WindingReport w = delta_index(catalog::rez2zbar(), CurveSpec::circle(0.1L));
  CHECK(w.index == -1);
  const WindingReport v = delta_index(catalog::rez2zbar(), CurveSpec::circle(0.1L), {}, PolarJetSource::FromCartesian);
  CHECK(v.index == -1);
}

TEST_CASE("sign-change count for r^3 cos(theta)") {
  const SignChangeResult s = sign_change_index(catalog::rez2zbar(), CurveSpec::circle(0.1L));
  CHECK(s.index == -1);
  REQUIRE(s.roots.size() == 2);
  int at0 = -1, atpi = -1;
  for (const SignChangeRoot& r : s.roots) {
    if (std::fabs(wrap_pi(r.t)) < 1e-9L) {
      at0 = r.epsilon;
      CHECK(r.delta2 < 0);
    }
    if (std::fabs(wrap_pi(r.t - kPi)) < 1e-9L) {
      atpi = r.epsilon;
      CHECK(r.delta2 > 0);
      CHECK(r.d_delta1 > 0);
    }
  }
  CHECK(at0 == 0);
  CHECK(atpi == 1);
}

TEST_CASE("sign-change count rejects an identically vanishing delta1") {
  CHECK_THROWS_AS(sign_change_index(catalog::paraboloid(), CurveSpec::circle(0.5L)), TangentZeroError);
}

TEST_CASE("umbilic index via D") {
  IndexResult z = umbilic_index_via_D(catalog::rez3(), CurveSpec::circle(0.1L));
  CHECK(z.index.twice == -1);
  CHECK(z.index.str() == "-1/2");
  CHECK(umbilic_index_via_D(catalog::paraboloid(), CurveSpec::circle(0.1L)).index.twice == 2);
  const IndexResult b = umbilic_index_via_D(catalog::bates(), CurveSpec::circle(5));
  CHECK(b.index.twice == 0);
  CHECK(b.winding.min_magnitude > 0);
}

TEST_CASE("umbilic index via Delta and direct") {
  CHECK(umbilic_index_via_Delta(catalog::rez2zbar(), CurveSpec::circle(0.1L)).index.twice == 1);
  CHECK(umbilic_index_via_Delta(catalog::paraboloid(), CurveSpec::circle(0.3L)).index.twice == 2);
  CHECK(umbilic_index_direct(catalog::rez3(), CurveSpec::circle(0.1L)).index.twice == -1);
  CHECK(umbilic_index_direct(catalog::rez2zbar(), CurveSpec::circle(0.1L)).index.twice == 1);
}

TEST_CASE("inverted index") {
  for (int m = 1; m <= 6; ++m) CHECK(inverted_index({2 - m}).twice == 2 + m);
  CHECK(inverted_index({2}).twice == 2);
  CHECK(inverted_index({1}).twice == 3);
  CHECK(HalfIndex{3}.str() == "3/2");
  CHECK(HalfIndex{-4}.str() == "-2");
  CHECK(HalfIndex{0}.str() == "0");
}

TEST_CASE("f_m at the auto radius") {
  for (int m = 1; m <= 6; ++m) {
    CAPTURE(m);
    const SurfaceSpec f = catalog::fm(m, 0.2L);
    const RadiusSearch rs = find_valid_radius_g(f);
    CHECK(rs.conditions.holds());
    const CurveSpec c = CurveSpec::circle(rs.radius);
    CHECK(delta_index(f, c).index == -m);
    const SignChangeResult s = sign_change_index(f, c);
    CHECK(s.index == -m);
    CHECK(s.roots.size() == static_cast<size_t>(2 * m));
    CHECK(umbilic_index_via_Delta(f, c).index.twice == 2 - m);
  }
}

TEST_CASE("Hessian flow index of Re z^3 and Lambda_m") {
  for (HessianRoute r : {HessianRoute::Cartesian, HessianRoute::Polar, HessianRoute::Direct}) {
    CHECK(hessian_flow_index(catalog::rez3(), CurveSpec::circle(0.5L), r).index.twice == -1);
  }
  for (int m = 1; m <= 4; ++m) {
    const SurfaceSpec g = catalog::lambda_m(m, 0.5L);
    const CurveSpec c = CurveSpec::circle(find_valid_radius_lambda(g).radius);
    for (HessianRoute r : {HessianRoute::Cartesian, HessianRoute::Polar, HessianRoute::Direct}) {
      for (JetEngine e : {JetEngine::Wirtinger, JetEngine::Real}) {
        // The real engine loses the traceless part below these radii.
        if (e == JetEngine::Real && m > 2) continue;
        CAPTURE(m);
        CHECK(hessian_flow_index(g, c, r, e).index.twice == 2 + m);
      }
    }
  }
}

TEST_CASE("index at infinity") {
  for (int m = 1; m <= 6; ++m) {
    const SurfaceSpec f = catalog::fm_minus_one(m, 0.5L);
    const real R = 1 / find_valid_radius_lambda(make_dual(f)).radius;
    CHECK(index_at_infinity(f, R).index.twice == 2 - m);
  }
  CHECK_THROWS_AS(index_at_infinity(catalog::paraboloid(), 10), EquiDiagonalError);
}

TEST_CASE("property: doubling the initial samples never changes an index") {
  struct Case {
    const char* spec;
    real r;
  };
  const Case cases[] = {{"rez3", 0.1L}, {"rez2zbar", 0.1L}, {"paraboloid", 0.2L}, {"bates", 5}, {"gh", 3}};
  for (const Case& c : cases) {
    CAPTURE(std::string(c.spec));
    const SurfaceSpec f = parse_surface(c.spec);
    const CurveSpec curve = CurveSpec::circle(c.r);
    WindingOptions a, b;
    a.initial_samples = 256;
    b.initial_samples = 512;
    CHECK(umbilic_index_via_D(f, curve, a).index == umbilic_index_via_D(f, curve, b).index);
    CHECK(umbilic_index_direct(f, curve, a).index == umbilic_index_direct(f, curve, b).index);
  }
  for (int m = 1; m <= 6; ++m) {
    const SurfaceSpec f = catalog::fm(m, 0.2L);
    const CurveSpec curve = CurveSpec::circle(find_valid_radius_g(f).radius);
    WindingOptions a, b;
    a.initial_samples = 2048;
    b.initial_samples = 4096;
    CHECK(delta_index(f, curve, a).index == delta_index(f, curve, b).index);
  }
}

TEST_CASE("property: indices of f_m do not depend on the valid radius") {
  for (int m = 1; m <= 4; ++m) {
    const SurfaceSpec f = catalog::fm(m, 0.2L);
    const real r1 = find_valid_radius_g(f).radius;
    for (real r : {r1, 2 * r1, 8 * r1}) {
      if (!g_sign_conditions(f, r).holds()) continue;
      CHECK(delta_index(f, CurveSpec::circle(r)).index == -m);
    }
  }
  for (real r : {0.05L, 0.1L, 0.2L}) CHECK(delta_index(catalog::rez2zbar(), CurveSpec::circle(r)).index == -1);
}

TEST_CASE("property: routes agree") {
  struct Case {
    const char* spec;
    CurveSpec c;
  };
  const Case cases[] = {
      {"rez3", CurveSpec::circle(0.1L)},
      {"rez2zbar", CurveSpec::circle(0.2L)},
      {"paraboloid", CurveSpec::circle(0.3L)},
      {"bates", CurveSpec::circle(5)},
      {"gh", CurveSpec::circle(2)},
      {"gh", CurveSpec::circle(0.3L, {1.29L, 0})},
      {"rez3", CurveSpec::ellipse(0.3L, 0.1L)},
      {"expr:x^3 - 3*x*y^2 + 0.2*(x^2 + y^2)", CurveSpec::circle(0.05L)},
  };
  for (const Case& c : cases) {
    CAPTURE(std::string(c.spec));
    const SurfaceSpec f = parse_surface(c.spec);
    const HalfIndex d = umbilic_index_via_D(f, c.c).index;
    CHECK(umbilic_index_direct(f, c.c).index == d);
    CHECK(umbilic_index_via_Delta(f, c.c).index == d);
  }
  for (const char* spec : {"rez3", "lambda:m=2,a=0.5", "expr:x^2 - y^2 + x^3"}) {
    const SurfaceSpec g = parse_surface(spec);
    const CurveSpec c = CurveSpec::circle(g.kind == SurfaceKind::LambdaM ? find_valid_radius_lambda(g).radius : 0.2L);
    const HalfIndex a = hessian_flow_index(g, c, HessianRoute::Cartesian).index;
    CHECK(hessian_flow_index(g, c, HessianRoute::Polar).index == a);
    CHECK(hessian_flow_index(g, c, HessianRoute::Direct).index == a);
  }
}

TEST_CASE("property: sign-change count equals the Delta degree") {
  for (int m = 1; m <= 6; ++m) {
    for (const char* F : {"tanh", "oneminusexp"}) {
      const SurfaceSpec f = parse_surface("gm:m=" + std::to_string(m) + ",a=0.2,F=" + F);
      const CurveSpec c = CurveSpec::circle(find_valid_radius_g(f).radius);
      CHECK(sign_change_index(f, c).index == delta_index(f, c).index);
    }
  }
  const CurveSpec c = CurveSpec::circle(0.1L);
  CHECK(sign_change_index(catalog::rez2zbar(), c).index == delta_index(catalog::rez2zbar(), c).index);
}

TEST_CASE("property: positive multipliers leave the degree unchanged") {
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> coef(-1, 1);
  for (int trial = 0; trial < 20; ++trial) {
    real a[4], b[4];
    for (int k = 0; k < 4; ++k) a[k] = coef(rng), b[k] = coef(rng);
    auto mult = [&](real t) {
      real s = 0;
      for (int k = 0; k < 4; ++k) s += a[k] * std::cos((k + 1) * t) + b[k] * std::sin((k + 1) * t);
      return std::exp(3 * s);
    };
    for (const char* spec : {"rez3", "paraboloid", "bates"}) {
      const SurfaceSpec f = parse_surface(spec);
      const CurveSpec c = CurveSpec::circle(0.4L);
      auto field = [&](real t) { return cartesian_identifiers(eval_jet(f, c.at(t), 2)); };
      const int base = vector_field_index(field).index;
      const int scaled = vector_field_index([&](real t) {
                           const PlaneVector v = field(t);
                           const real s = mult(t);
                           return PlaneVector{s * v.vx, s * v.vy};
                         }).index;
      CHECK(scaled == base);
    }
  }
}

TEST_CASE("sign conditions reject a delta2 that is only rounding noise") {
  // r^a = 16 makes delta2(0) vanish for the exponential tail when a = 0.2.
  const SurfaceSpec g = parse_surface("gm:m=1,a=0.2,F=oneminusexp");
  const SignConditions sc = g_sign_conditions(g, std::pow(2.0L, 20));
  CHECK(std::fabs(sc.delta2_at_0) <= sc.delta2_noise_0);
  CHECK_FALSE(sc.holds());
  CHECK(find_valid_radius_g(g).radius == std::pow(2.0L, 21));
}
