#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <random>

#include "catalog.hpp"
#include "errors.hpp"
#include "inversion.hpp"
#include "ribaucour.hpp"
#include "winding.hpp"

namespace umbilic {

namespace {

using nlohmann::json;

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Runs each item on its own thread; results keep the item order.
std::vector<Check> run_parallel(const std::vector<std::function<Check()>>& items) {
  std::vector<std::future<Check>> fs;
  for (const auto& it : items) fs.push_back(std::async(std::launch::async, it));
  std::vector<Check> out;
  for (auto& f : fs) out.push_back(f.get());
  return out;
}

Check guarded(const std::string& suite, const std::string& name, const std::function<Check()>& body) {
  try {
    Check c = body();
    c.suite = suite;
    c.name = name;
    return c;
  } catch (const std::exception& e) {
    Check c;
    c.suite = suite;
    c.name = name;
    c.detail = std::string("error: ") + e.what();
    return c;
  }
}

std::vector<Check> indices_suite() {
  std::vector<std::function<Check()>> items;
  const char* S = "indices";
  struct Route {
    const char* name;
    IndexResult (*fn)(const SurfaceSpec&, const CurveSpec&, const WindingOptions&);
  };
  for (Route r : {Route{"D", [](const SurfaceSpec& f, const CurveSpec& c, const WindingOptions& o) {
                          return umbilic_index_via_D(f, c, o);
                        }},
                  Route{"Delta", [](const SurfaceSpec& f, const CurveSpec& c, const WindingOptions& o) {
                          return umbilic_index_via_Delta(f, c, o);
                        }},
                  Route{"direct", [](const SurfaceSpec& f, const CurveSpec& c, const WindingOptions& o) {
                          return umbilic_index_direct(f, c, o);
                        }}}) {
    items.push_back([=] {
      return guarded(S, std::string("rez3 origin via ") + r.name, [&] {
        const IndexResult ir = r.fn(catalog::rez3(), CurveSpec::circle(0.1L), {});
        Check c;
        c.pass = ir.index.twice == -1 && ir.winding.residual < 0.01L;
        c.detail = fmt("index %s, residual %.2Lg", ir.index.str().c_str(), ir.winding.residual);
        c.data = {{"twice_index", ir.index.twice}, {"residual", static_cast<double>(ir.winding.residual)}};
        return c;
      });
    });
  }
  items.push_back([=] {
    return guarded(S, "r^3 cos(theta) at radii 0.05, 0.1, 0.2", [&] {
      Check c;
      c.pass = true;
      for (real r : {0.05L, 0.1L, 0.2L}) {
        const WindingReport w = delta_index(catalog::rez2zbar(), CurveSpec::circle(r));
        const IndexResult u = umbilic_index_via_Delta(catalog::rez2zbar(), CurveSpec::circle(r));
        c.pass = c.pass && w.index == -1 && u.index.twice == 1;
        c.detail += fmt("r=%Lg: ind(Delta) %d, I %s; ", r, w.index, u.index.str().c_str());
      }
      return c;
    });
  });
  for (int m = 1; m <= 6; ++m) {
    items.push_back([=] {
      return guarded(S, fmt("f_m m=%d a=0.2", m), [&] {
        const SurfaceSpec f = catalog::fm(m, 0.2L);
        const RadiusSearch rs = find_valid_radius_g(f);
        const CurveSpec c = CurveSpec::circle(rs.radius);
        const WindingReport w = delta_index(f, c);
        const SignChangeResult sc = sign_change_index(f, c);
        const HalfIndex I{2 + w.index};
        Check ch;
        ch.pass = rs.conditions.holds() && w.index == -m && sc.index == -m && I.twice == 2 - m &&
                  inverted_index(I).twice == 2 + m;
        ch.detail = fmt("radius %.4Lg, ind(Delta) %d, sign-change %d, I %s, inverted %s", rs.radius, w.index, sc.index,
                        I.str().c_str(), inverted_index(I).str().c_str());
        ch.data = {{"radius", static_cast<double>(rs.radius)}, {"twice_index", I.twice}};
        return ch;
      });
    });
  }
  for (int m = 1; m <= 4; ++m) {
    items.push_back([=] {
      return guarded(S, fmt("Lambda_m m=%d a=0.5", m), [&] {
        const SurfaceSpec g = catalog::lambda_m(m, 0.5L);
        const LambdaRadiusSearch rs = find_valid_radius_lambda(g);
        const CurveSpec c = CurveSpec::circle(rs.radius);
        Check ch;
        ch.pass = rs.conditions.holds();
        for (HessianRoute r : {HessianRoute::Polar, HessianRoute::Cartesian, HessianRoute::Direct}) {
          const IndexResult ir = hessian_flow_index(g, c, r);
          ch.pass = ch.pass && ir.index.twice == 2 + m;
          ch.detail += route_name(r) + " " + ir.index.str() + "; ";
        }
        ch.detail += fmt("radius %.4Lg", rs.radius);
        return ch;
      });
    });
  }
  return run_parallel(items);
}

std::vector<Check> regularity_suite() {
  const char* S = "regularity";
  std::vector<std::function<Check()>> items;
  for (const char* s : {"fm:m=3,a=0.1", "fm:m=5,a=0.2", "gm:m=4,a=0.2,F=oneminusexp"}) {
    items.push_back([=] {
      return guarded(S, std::string(s) + " reaches C2projection", [&] {
        const RegularityReport r = check_regularity(parse_surface(s));
        Check c;
        c.pass = r.level == RegularityLevel::C2projection;
        c.detail = "level " + level_name(r.level) + fmt(", c = %Lg", r.c);
        return c;
      });
    });
  }
  for (const char* s : {"bates", "gh"}) {
    items.push_back([=] {
      return guarded(S, std::string(s) + " is differentiable but not C1", [&] {
        const RegularityReport r = check_regularity(parse_surface(s));
        const Witness* a = r.find("(a) f_r");
        const Witness* b = r.find("(b) f_theta/r");
        const real pa = a->values.back(), pb = b->values.back();
        Check c;
        c.pass = r.level == RegularityLevel::Differentiable && std::max(pa, pb) > 0.01L;
        c.detail = "level " + level_name(r.level) + fmt(", final sup (a) %.3Lg, (b) %.3Lg", pa, pb);
        return c;
      });
    });
  }
  return run_parallel(items);
}

std::vector<Check> duality_suite() {
  const char* S = "duality";
  std::vector<std::function<Check()>> items;
  for (int m = 1; m <= 6; ++m) {
    items.push_back([=] {
      return guarded(S, fmt("f_m - 1 m=%d a=0.2", m), [&] {
        const SurfaceSpec f = catalog::fm_minus_one(m, 0.2L);
        const LambdaRadiusSearch rs = find_valid_radius_lambda(make_dual(f));
        const DualityResult d = duality_check(f, 1 / rs.radius, rs.radius);
        Check c;
        c.pass = d.twice_sum == 4;
        c.detail = "origin " + d.at_origin.str() + ", infinity " + d.at_infinity.str() +
                   fmt(", sum %s", HalfIndex{d.twice_sum}.str().c_str());
        return c;
      });
    });
  }
  items.push_back([=] {
    return guarded(S, "x^2 - y^2", [&] {
      const DualityResult d = duality_check(catalog::expression("x^2 - y^2"), 10, 0.1L);
      Check c;
      c.pass = d.twice_sum == 4;
      c.detail = "origin " + d.at_origin.str() + ", infinity " + d.at_infinity.str();
      return c;
    });
  });
  items.push_back([=] {
    return guarded(S, "dual(f_m - 1) equals Lambda_m", [&] {
      std::mt19937_64 gen(20240611);
      real worst = 0;
      for (int k = 0; k < 500; ++k) {
        const int m = 1 + static_cast<int>(gen() % 6);
        const real a = 0.05L + 0.9L * (gen() >> 11) * 0x1p-53L;
        const real r = 0.01L + 2 * (gen() >> 11) * 0x1p-53L, t = kTwoPi * (gen() >> 11) * 0x1p-53L;
        const Point2 p = PolarPoint::make(r, t).cartesian();
        const real u = eval_value(make_dual(catalog::fm_minus_one(m, a)), p);
        const real v = eval_value(catalog::lambda_m(m, a), p);
        worst = std::max(worst, std::fabs(u - v) / std::max<real>(1, std::fabs(v)));
      }
      Check c;
      c.pass = worst < 1e-11L;
      c.detail = fmt("max difference %.3Lg over 500 points", worst);
      return c;
    });
  });
  return run_parallel(items);
}

std::vector<Check> ribaucour_suite() {
  const char* S = "ribaucour";
  std::vector<std::function<Check()>> items;
  struct Case {
    const char* surface;
    real r0, r1;
  };
  for (Case cs : {Case{"expr:(x^2+2*y^2)/2", 0.05L, 0.6L}, Case{"rez3", 0.05L, 0.4L}, Case{"bates", 0.1L, 1.5L},
                  Case{"fm:m=3,a=0.1", 0.3L, 0.9L}, Case{"lambda:m=2,a=0.5", 0.1L, 0.4L}}) {
    items.push_back([=] {
      return guarded(S, std::string("Fact A.1 on ") + cs.surface, [&] {
        const SurfaceSpec f = parse_surface(cs.surface);
        std::mt19937_64 gen(7);
        real worst = 0;
        int used = 0, skipped = 0;
        while (used < 10 && skipped < 1000) {
          const real r = cs.r0 + (cs.r1 - cs.r0) * ((gen() >> 11) * 0x1p-53L);
          const real t = kTwoPi * ((gen() >> 11) * 0x1p-53L);
          try {
            worst = std::max(worst, fact_a1_residual(f, PolarPoint::make(r, t).cartesian()));
            ++used;
          } catch (const UmbilicError&) {
            ++skipped;
          } catch (const NoConvergence&) {
            ++skipped;
          }
        }
        Check c;
        c.pass = used == 10 && worst < 1e-4L;
        c.detail = fmt("max residual %.3Lg over %d points (%d skipped)", worst, used, skipped);
        c.data = {{"max_residual", static_cast<double>(worst)}};
        return c;
      });
    });
  }
  items.push_back([=] {
    return guarded(S, "normal round trip", [&] {
      std::mt19937_64 gen(11);
      real worst = 0;
      for (int k = 0; k < 1000; ++k) {
        const real z = -((gen() >> 11) * 0x1p-53L), t = kTwoPi * ((gen() >> 11) * 0x1p-53L);
        const real s = std::sqrt(1 - z * z);
        const Vec3 nu{s * std::cos(t), s * std::sin(t), z};
        const auto g = gradient_from_normal(nu);
        const Vec3 back = normal_from_gradient(g[0], g[1]);
        for (int i = 0; i < 3; ++i) worst = std::max(worst, std::fabs(back[i] - nu[i]));
      }
      Check c;
      c.pass = worst < 1e-13L;
      c.detail = fmt("max deviation %.3Lg over 1000 normals", worst);
      return c;
    });
  });
  return run_parallel(items);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"indices", "regularity", "duality", "ribaucour", "all"};
  return names;
}

std::vector<Check> run_suite(const std::string& suite) {
  if (suite == "indices") return indices_suite();
  if (suite == "regularity") return regularity_suite();
  if (suite == "duality") return duality_suite();
  if (suite == "ribaucour") return ribaucour_suite();
  if (suite == "all") {
    std::vector<Check> out;
    for (const char* s : {"indices", "regularity", "duality", "ribaucour"}) {
      auto part = run_suite(s);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw InvalidArgument("unknown suite '" + suite + "'");
}

}  // namespace umbilic
