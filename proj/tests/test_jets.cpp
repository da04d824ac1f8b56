#include <doctest.h>

#include <random>

#include "catalog.hpp"
#include "jets.hpp"
#include "support.hpp"

using namespace umbilic;
using umbilic::test::close;

TEST_CASE("jet of Re z^3 at (1,0)") {
  const Jet j = eval_jet(catalog::rez3(), {1, 0}, 2);
  CHECK(j.value == doctest::Approx(1));
  CHECK(j.fx() == doctest::Approx(3));
  CHECK(j.fy() == doctest::Approx(0));
  CHECK(j.fxx() == doctest::Approx(6));
  CHECK(j.fxy() == doctest::Approx(0));
  CHECK(j.fyy() == doctest::Approx(-6));
}

TEST_CASE("zero field has a zero jet") {
  const SurfaceSpec z = catalog::expression("0");
  for (Point2 p : {Point2{0, 0}, Point2{3, -2}, Point2{1e5, 7}}) {
    const Jet j = eval_jet(z, p, 3);
    CHECK(j.value == 0);
    for (real v : j.first) CHECK(v == 0);
    for (real v : j.second) CHECK(v == 0);
    for (real v : j.third) CHECK(v == 0);
  }
}

TEST_CASE("Bates jet against central differences at (1,2)") {
  const SurfaceSpec b = catalog::bates();
  const Jet j = eval_jet(b, {1, 2}, 2);
  const auto fd = test::fd_jet(b, {1, 2});
  const real s = test::jet_scale(j);
  const real ad[6] = {j.value, j.fx(), j.fy(), j.fxx(), j.fxy(), j.fyy()};
  for (int k = 0; k < 6; ++k) CHECK(close(ad[k], fd[k], 1e-6L, s));
}

TEST_CASE("third-order slots match differences of second-order jets") {
  const SurfaceSpec b = catalog::bates();
  const Point2 p{0.7L, -1.3L};
  const real h = 1e-6L;
  const Jet j = eval_jet(b, p, 3);
  const Jet px = eval_jet(b, {p.x + h, p.y}, 2), mx = eval_jet(b, {p.x - h, p.y}, 2);
  const Jet py = eval_jet(b, {p.x, p.y + h}, 2), my = eval_jet(b, {p.x, p.y - h}, 2);
  CHECK(close(j.third[0], (px.fxx() - mx.fxx()) / (2 * h), 1e-6L, 1));
  CHECK(close(j.third[1], (px.fxy() - mx.fxy()) / (2 * h), 1e-6L, 1));
  CHECK(close(j.third[2], (py.fxy() - my.fxy()) / (2 * h), 1e-6L, 1));
  CHECK(close(j.third[3], (py.fyy() - my.fyy()) / (2 * h), 1e-6L, 1));
}

TEST_CASE("polar conversion of r^3 cos(theta) at (1,0)") {
  const PolarPoint p = PolarPoint::make(1, 0);
  const Jet j = jet_cartesian_to_polar(eval_jet(catalog::rez2zbar(), p.cartesian(), 2), p);
  CHECK(j.coords == Coords::Polar);
  CHECK(j.fr() == doctest::Approx(3));
  CHECK(std::fabs(j.ft()) < 1e-15L);
}

TEST_CASE("radial paraboloid polar jet") {
  for (real r : {0.3L, 1.0L, 4.5L}) {
    for (real t : {0.0L, 1.1L, 4.0L}) {
      const PolarPoint p = PolarPoint::make(r, t);
      const Jet j = jet_cartesian_to_polar(eval_jet(catalog::paraboloid(), p.cartesian(), 2), p);
      CHECK(close(j.fr(), r, 1e-15L, 1));
      CHECK(std::fabs(j.ft()) < 1e-14L);
      CHECK(close(j.frr(), 1, 1e-15L));
      CHECK(std::fabs(j.frt()) < 1e-14L);
      CHECK(std::fabs(j.ftt()) < 1e-13L);
    }
  }
}

TEST_CASE("polar jet of f_5 matches the closed form") {
  const SurfaceSpec f = catalog::fm(5, 0.2L);
  const PolarPoint p = PolarPoint::make(2, 0.3L);
  const Jet ad = jet_cartesian_to_polar(eval_jet(f, p.cartesian(), 2), p);
  const Jet cf = closed_form_polar_jet_g(f, p);
  const real s = test::jet_scale(cf);
  CHECK(close(ad.value, cf.value, 1e-10L, s));
  for (int k = 0; k < 2; ++k) CHECK(close(ad.first[k], cf.first[k], 1e-10L, s));
  for (int k = 0; k < 3; ++k) CHECK(close(ad.second[k], cf.second[k], 1e-10L, s));
}

TEST_CASE("polar conversion requires r > 0") {
  CHECK_THROWS_AS(jet_cartesian_to_polar(eval_jet(catalog::rez3(), {0, 0}, 2), PolarPoint{0, 0}), DomainError);
}

TEST_CASE("punctured fields reject the origin") {
  CHECK_THROWS_AS(eval_jet(catalog::fm(3, 0.2L), {0, 0}, 2), DomainError);
  CHECK_THROWS_AS(eval_polar_jet(catalog::fm(3, 0.2L), PolarPoint{0, 0}, 2), DomainError);
}

TEST_CASE("hatted jet of a constant") {
  const Jet j = hat_jet(catalog::expression("1"), PolarPoint::make(0.3L, 0.7L));
  CHECK(j.value == doctest::Approx(1));
  for (real v : j.first) CHECK(std::fabs(v) < 1e-15L);
  for (real v : j.second) CHECK(std::fabs(v) < 1e-15L);
}

TEST_CASE("hatted radial derivative of -1/r at rho = 1/2") {
  // f_r = 1/r^2, so rho fhat_rho = -r f_r = -1/2.
  const Jet j = hat_jet(catalog::expression("-1/r"), PolarPoint::make(0.5L, 0.4L));
  CHECK(close(j.fr(), -1, 1e-15L));
  CHECK(std::fabs(j.ft()) < 1e-15L);
}

TEST_CASE("hatted jet of f_3 matches the composed expression") {
  const SurfaceSpec f = catalog::fm(3, 0.2L);
  const SurfaceSpec composed = catalog::expression("1 + tanh(r^(-0.2) * cos(3*theta))");
  const PolarPoint q = PolarPoint::make(0.1L, 1.0L);
  const Jet a = hat_jet(f, q, 2);
  const Jet b = eval_polar_jet(composed, q, 2);
  const real s = test::jet_scale(b);
  CHECK(close(a.value, b.value, 1e-9L, s));
  for (int k = 0; k < 2; ++k) CHECK(close(a.first[k], b.first[k], 1e-9L, s));
  for (int k = 0; k < 3; ++k) CHECK(close(a.second[k], b.second[k], 1e-9L, s));
}

TEST_CASE("property: second derivatives match differences on catalog fields") {
  struct Case {
    const char* spec;
    real r0, r1;
  };
  const Case cases[] = {
      {"bates", 0.1L, 5},        {"gh", 0.1L, 5},           {"rez3", 0.1L, 3},
      {"rez2zbar", 0.1L, 3},     {"paraboloid", 0.1L, 3},   {"fm:m=3,a=0.2", 0.5L, 5},
      {"fm:m=5,a=0.1", 0.5L, 5}, {"gm:m=4,a=0.2,F=oneminusexp", 0.5L, 5},
      {"lambda:m=2,a=0.5", 0.3L, 2}, {"dual:fm1:m=3,a=0.2", 0.3L, 2},
  };
  std::mt19937_64 rng(12345);
  for (const Case& c : cases) {
    CAPTURE(std::string(c.spec));
    const SurfaceSpec f = parse_surface(c.spec);
    for (int k = 0; k < 100; ++k) {
      const Point2 p = test::annulus_point(rng, c.r0, c.r1);
      const Jet j = eval_jet(f, p, 2);
      // Steps shrink with the distance to the singular origin.
      const real r = std::min(std::hypot(p.x, p.y), real(1));
      const auto fd = test::fd_jet(f, p, 1e-6L * r, 1e-4L * r);
      const real s = test::jet_scale(j);
      const real ad[6] = {j.value, j.fx(), j.fy(), j.fxx(), j.fxy(), j.fyy()};
      for (int i = 0; i < 6; ++i) {
        CAPTURE(i);
        CHECK(close(ad[i], fd[i], 1e-6L, s));
      }
    }
  }
}

TEST_CASE("property: direct polar jets equal converted Cartesian jets") {
  std::mt19937_64 rng(99);
  for (const char* spec : {"fm:m=3,a=0.2", "gm:m=2,a=0.15,F=oneminusexp", "lambda:m=4,a=0.5", "rez2zbar"}) {
    CAPTURE(std::string(spec));
    const SurfaceSpec f = parse_surface(spec);
    for (int k = 0; k < 100; ++k) {
      const PolarPoint p = PolarPoint::from(test::annulus_point(rng, 0.2L, 4));
      const Jet a = eval_polar_jet(f, p, 2);
      const Jet b = jet_cartesian_to_polar(eval_jet(f, p.cartesian(), 2), p);
      const real s = test::jet_scale(a);
      CHECK(close(b.value, a.value, 1e-12L, s));
      for (int i = 0; i < 2; ++i) CHECK(close(b.first[i], a.first[i], 1e-12L, s));
      for (int i = 0; i < 3; ++i) CHECK(close(b.second[i], a.second[i], 1e-12L, s));
    }
  }
}
