#include <doctest.h>

#include <random>

#include "catalog.hpp"
#include "inversion.hpp"
#include "ribaucour.hpp"
#include "support.hpp"

using namespace umbilic;
using umbilic::test::close;

TEST_CASE("inversion of the plane z = 1") {
  const InversionPoint p = invert_graph(catalog::expression("1"), {1, 0});
  CHECK(close(p.xyz[0], 0.5L, 1e-15L));
  CHECK(std::fabs(p.xyz[1]) < 1e-18L);
  CHECK(close(p.xyz[2], 0.5L, 1e-15L));
  CHECK_THROWS_AS(invert_graph(catalog::expression("1"), {0, 0}), DomainError);
}

TEST_CASE("property: inversion equals F / |F|^2") {
  std::mt19937_64 rng(4);
  for (const char* spec : {"bates", "gh", "fm:m=5,a=0.2", "rez3"}) {
    const SurfaceSpec f = parse_surface(spec);
    for (int k = 0; k < 100; ++k) {
      const Point2 uv = test::annulus_point(rng, 0.05L, 1);
      const real s = uv.x * uv.x + uv.y * uv.y;
      const Point2 xy{uv.x / s, uv.y / s};
      const real z = eval_value(f, xy);
      const real n = xy.x * xy.x + xy.y * xy.y + z * z;
      const InversionPoint p = invert_graph(f, uv);
      const real scale = std::sqrt(p.xyz[0] * p.xyz[0] + p.xyz[1] * p.xyz[1] + p.xyz[2] * p.xyz[2]);
      CHECK(close(p.xyz[0], xy.x / n, 1e-13L, scale));
      CHECK(close(p.xyz[1], xy.y / n, 1e-13L, scale));
      CHECK(close(p.xyz[2], z / n, 1e-13L, scale));
      // Third coordinate as rho phi / (1 + phi^2) with phi = f / r.
      const real rho = std::sqrt(s), phi = z * rho;
      CHECK(close(p.xyz[2], rho * phi / (1 + phi * phi), 1e-13L, scale));
    }
  }
}

TEST_CASE("bounded fields invert towards the origin") {
  for (const char* spec : {"bates", "gh", "fm:m=5,a=0.2"}) {
    const SurfaceSpec f = parse_surface(spec);
    real prev = INFINITY;
    for (int k = 2; k <= 8; ++k) {
      const real rho = std::pow(10.0L, -k);
      const auto x = invert_graph(f, {rho * std::cos(0.3L), rho * std::sin(0.3L)}).xyz;
      const real n = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
      CHECK(n < prev);
      CHECK(n <= 1.000001L * rho);
      prev = n;
    }
  }
}

TEST_CASE("graph height of the inverted plane z = 1") {
  const SurfaceSpec one = catalog::expression("1");
  // Tangent point of the projection: only a double root, so a looser check.
  CHECK(close(graph_height(one, {0.5L, 0}).Z, 0.5L, 1e-6L));
  // The image is the sphere X^2 + Y^2 + Z^2 = Z.
  for (real s : {1e-4L, 0.01L, 0.1L, 0.3L, 0.45L}) {
    for (real t : {0.0L, 1.0L, 4.0L}) {
      const GraphHeight g = graph_height(one, {s * std::cos(t), s * std::sin(t)});
      CHECK(close(g.Z, 2 * s * s / (1 + std::sqrt(1 - 4 * s * s)), 1e-13L));
      CHECK(g.residual < 1e-12L);
    }
  }
}

TEST_CASE("graph height of f_3 against a bisection of the forward map") {
  const SurfaceSpec f = catalog::fm(3, 0.2L);
  const real X = 1e-3L;
  auto forward = [&](real u) {
    const real fh = eval_value(f, {1 / u, 0});
    return std::array<real, 2>{u / (1 + u * u * fh * fh), u * u * fh / (1 + u * u * fh * fh)};
  };
  real lo = X, hi = 2 * X;
  REQUIRE(forward(lo)[0] < X);
  REQUIRE(forward(hi)[0] > X);
  for (int k = 0; k < 200; ++k) {
    const real mid = (lo + hi) / 2;
    (forward(mid)[0] < X ? lo : hi) = mid;
  }
  const real oracle = forward((lo + hi) / 2)[1];
  CHECK(close(graph_height(f, {X, 0}).Z, oracle, 1e-9L));
}

TEST_CASE("property: graph height inverts the projected inversion") {
  std::mt19937_64 rng(21);
  for (const char* spec : {"bates", "gh", "fm:m=3,a=0.2", "fm:m=5,a=0.1"}) {
    CAPTURE(spec);
    const SurfaceSpec f = parse_surface(spec);
    for (int k = 0; k < 50; ++k) {
      const Point2 uv = test::annulus_point(rng, 1e-4L, 0.02L);
      const InversionPoint p = invert_graph(f, uv);
      const GraphHeight g = graph_height(f, {p.xyz[0], p.xyz[1]});
      CHECK(close(g.uv.x, uv.x, 1e-10L, std::hypot(uv.x, uv.y)));
      CHECK(close(g.uv.y, uv.y, 1e-10L, std::hypot(uv.x, uv.y)));
      CHECK(close(g.Z, p.xyz[2], 1e-10L, std::hypot(uv.x, uv.y)));
    }
  }
}

TEST_CASE("graph height slope tends to lim f / r") {
  // lim f/r is 0 for Bates and 1/2 for r/2 + 1.
  const SurfaceSpec half = catalog::expression("r/2 + 1");
  for (real t : {0.2L, 2.5L}) {
    real prev = INFINITY;
    for (int k = 2; k <= 7; ++k) {
      const real s = std::pow(10.0L, -k);
      const Point2 XY{s * std::cos(t), s * std::sin(t)};
      const real a = std::fabs(graph_height(catalog::bates(), XY).Z / s);
      CHECK(a < prev);
      prev = a;
      CHECK(std::fabs(graph_height(half, XY).Z / s - 0.5L) < 3 * s);
    }
    CHECK(prev < 1e-6L);
  }
}

TEST_CASE("graph height rejects the origin") {
  CHECK_THROWS_AS(graph_height(catalog::bates(), {0, 0}), DomainError);
}

TEST_CASE("property: dual is an involution") {
  std::mt19937_64 rng(8);
  for (const char* spec : {"bates", "fm1:m=3,a=0.2", "rez3", "expr:x^2 - y^2"}) {
    CAPTURE(spec);
    const SurfaceSpec f = parse_surface(spec);
    const SurfaceSpec dd = make_dual(make_dual(f));
    for (int k = 0; k < 100; ++k) {
      const Point2 p = test::annulus_point(rng, 0.5L, 2);
      CHECK(close(eval_value(dd, p), eval_value(f, p), 1e-11L, 1));
    }
  }
}

TEST_CASE("sphere-radius function of the inverted graph matches the tangent-sphere radius") {
  // For f = 1 the inverted graph is the lower cap of X^2 + Y^2 + Z^2 = Z.
  const SurfaceSpec one = catalog::expression("1");
  const SurfaceSpec cap = catalog::expression("(1 - sqrt(1 - 4*(x^2 + y^2)))/2");
  const real h = 1e-6L;
  for (Point2 XY : {Point2{0.1L, 0.05L}, Point2{-0.2L, 0.13L}, Point2{0.01L, -0.3L}}) {
    const real Z = graph_height(one, XY).Z;
    const real ZX = (graph_height(one, {XY.x + h, XY.y}).Z - graph_height(one, {XY.x - h, XY.y}).Z) / (2 * h);
    const real ZY = (graph_height(one, {XY.x, XY.y + h}).Z - graph_height(one, {XY.x, XY.y - h}).Z) / (2 * h);
    const real W = std::sqrt(1 + ZX * ZX + ZY * ZY);
    const real lam = Z * W / (1 + W);
    CHECK(close(lam, ribaucour_data(cap, XY).lambda, 1e-9L));
  }
}

TEST_CASE("hatted limits of a constant decay linearly") {
  const HattedLimitsReport r = check_hatted_limits(catalog::expression("1"));
  for (const LimitSequence& s : r.sequences) {
    if (s.quantity != "h_u" && s.quantity != "h_v" && s.quantity != "k_u" && s.quantity != "k_v") continue;
    CAPTURE(s.quantity);
    REQUIRE(s.values.size() == 6);
    for (size_t k = 0; k + 1 < s.values.size(); ++k) CHECK(close(s.values[k] / s.values[k + 1], 10, 1e-9L));
    CHECK(close(s.values[0], 0.2L, 0.01L));
  }
}

TEST_CASE("printed k_uv expansion matches Taylor arithmetic") {
  const SurfaceSpec f = catalog::fm(3, 0.2L);
  const real rho = 0.01L, t = 0.4L;
  const HattedSecond hs = hatted_second(f, {rho * std::cos(t), rho * std::sin(t)});
  CHECK(close(printed_kuv(f, rho, t), hs.k[1], 1e-10L));
  CHECK(check_hatted_limits(f).kuv_printed_vs_ad < 1e-10L);
}

TEST_CASE("hatted second derivatives against differences") {
  const SurfaceSpec f = catalog::fm(3, 0.2L);
  const Point2 uv{0.05L, 0.02L};
  const real e = 1e-6L;
  auto k_of = [&](Point2 p) {
    const real s = p.x * p.x + p.y * p.y;
    const real fh = eval_value(f, {p.x / s, p.y / s});
    return s * fh * fh;
  };
  const HattedSecond hs = hatted_second(f, uv);
  const real kuv = (k_of({uv.x + e, uv.y + e}) - k_of({uv.x + e, uv.y - e}) - k_of({uv.x - e, uv.y + e}) +
                    k_of({uv.x - e, uv.y - e})) /
                   (4 * e * e);
  CHECK(close(hs.k[1], kuv, 1e-5L, 1));
}

TEST_CASE("regularity verdicts") {
  const RegularityReport fm = check_regularity(catalog::fm(3, 0.1L));
  CHECK(fm.level == RegularityLevel::C2projection);
  CHECK(fm.c == doctest::Approx(0.2));
  CHECK(fm.find("(a) f_r")->values.back() < 1e-3L);
  CHECK(fm.find("(b) f_theta/r")->values.back() < 1e-3L);
  for (const char* spec : {"bates", "gh"}) {
    CAPTURE(spec);
    const RegularityReport r = check_regularity(parse_surface(spec));
    CHECK(r.level == RegularityLevel::Differentiable);
    CHECK(std::max(r.find("(a) f_r")->values.back(), r.find("(b) f_theta/r")->values.back()) > 0.01L);
  }
  CHECK(check_regularity(catalog::paraboloid()).level == RegularityLevel::Fails);
  for (const Witness& w : fm.witnesses) {
    CAPTURE(w.criterion);
    REQUIRE(w.radii.size() == 10);
    for (size_t k = 0; k < w.radii.size(); ++k) {
      CHECK(std::isfinite(w.values[k]));
      if (k) CHECK(w.radii[k] > w.radii[k - 1]);
    }
  }
  CHECK(fm.find("no such criterion") == nullptr);
  CHECK(level_name(RegularityLevel::C1) == "C1");
}

TEST_CASE("regularity angle sets include the symmetry axes") {
  const std::vector<real> a = regularity_angles(catalog::fm(4, 0.2L), 100, 64, 4);
  for (real axis : {0.0L, kPi / 4, kPi / 2, kPi}) {
    bool found = false;
    for (real t : a) found = found || std::fabs(wrap_pi(t - axis)) < 1e-15L;
    CHECK(found);
  }
}

TEST_CASE("duality of indices") {
  const DualityResult s = duality_check(catalog::expression("x^2 - y^2"), 10, 0.1L);
  CHECK(s.at_infinity.twice == 0);
  CHECK(s.at_origin.twice == 4);
  CHECK(s.twice_sum == 4);
  for (int m = 1; m <= 6; ++m) {
    CAPTURE(m);
    const SurfaceSpec f = catalog::fm_minus_one(m, 0.5L);
    const real r = find_valid_radius_lambda(make_dual(f)).radius;
    const DualityResult d = duality_check(f, 1 / r, r);
    CHECK(d.at_infinity.twice == 2 - m);
    CHECK(d.at_origin.twice == 2 + m);
    CHECK(d.twice_sum == 4);
  }
}
