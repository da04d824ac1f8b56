#pragma once

#include <functional>
#include <string>
#include <vector>

#include "identifiers.hpp"
#include "jets.hpp"
#include "surface.hpp"

namespace umbilic {

// Closed curve t -> point, t in [0, 2pi], counterclockwise.
struct CurveSpec {
  enum class Kind { Circle, Ellipse, Parametric };
  Kind kind = Kind::Circle;
  Point2 center;
  real radius = 1;     // Circle
  real ax = 1, by = 1; // Ellipse semi-axes
  std::function<Point2(real)> map;  // Parametric

  static CurveSpec circle(real radius, Point2 center = {});
  static CurveSpec ellipse(real a, real b, Point2 center = {});
  static CurveSpec parametric(std::function<Point2(real)> map);

  Point2 at(real t) const;
  Point2 velocity(real t) const;
  // Polar coordinates about the origin; exact (radius, t) for origin circles.
  PolarPoint polar_at(real t) const;
  std::string describe() const;
};

// Exact half-integer stored as twice its value.
struct HalfIndex {
  int twice = 0;
  std::string str() const;
  bool operator==(const HalfIndex&) const = default;
};

struct WindingReport {
  int index = 0;       // integer degree (vector fields) or twice the index (line fields)
  real raw = 0;        // unrounded accumulated value in the same units
  real residual = 0;
  long samples = 0;
  real min_magnitude = 0;
  real max_step_angle = 0;
  int depth = 0;
  bool refined = false;
};

struct WindingOptions {
  int initial_samples = 2048;
  int max_depth = 24;
  real zero_tol = 0;  // vector magnitude treated as a zero
};

using VectorOnCurve = std::function<PlaneVector(real)>;
using DirectionOnCurve = std::function<real(real)>;

WindingReport vector_field_index(const VectorOnCurve& field, const WindingOptions& opt = {});
WindingReport vector_field_index(const std::function<PlaneVector(Point2)>& field, const CurveSpec& curve,
                                 const WindingOptions& opt = {});
// Index of a line field given by angles mod pi; `index` holds twice the index.
WindingReport line_field_index(const DirectionOnCurve& dirs, const WindingOptions& opt = {});
WindingReport line_field_index(const std::function<real(Point2)>& dirs, const CurveSpec& curve,
                               const WindingOptions& opt = {});

// Winding number of the curve about the origin; the polar routes add twice
// this to the degree of their field. DomainError if the curve meets the origin.
int winding_about_origin(const CurveSpec& c);

struct IndexResult {
  std::string route;
  HalfIndex index;
  WindingReport winding;
};

enum class JetEngine { Wirtinger, Real };
enum class PolarJetSource { Direct, FromCartesian };

struct SignChangeRoot {
  real t = 0;
  real d_delta1 = 0;
  real delta2 = 0;
  int epsilon = 0;
};

struct SignChangeResult {
  int index = 0;  // integer index of Delta_f along the curve
  std::vector<SignChangeRoot> roots;
};

IndexResult umbilic_index_via_D(const SurfaceSpec& f, const CurveSpec& c, const WindingOptions& opt = {});
IndexResult umbilic_index_via_Delta(const SurfaceSpec& f, const CurveSpec& c, const WindingOptions& opt = {},
                                    PolarJetSource source = PolarJetSource::Direct);
// Integer rotation index of Delta_f.
WindingReport delta_index(const SurfaceSpec& f, const CurveSpec& c, const WindingOptions& opt = {},
                          PolarJetSource source = PolarJetSource::Direct);
// Principal-direction line field.
IndexResult umbilic_index_direct(const SurfaceSpec& f, const CurveSpec& c, const WindingOptions& opt = {});

inline constexpr real kTangentTol = 1e-9L;
SignChangeResult sign_change_index(const SurfaceSpec& f, const CurveSpec& c, int samples = 512,
                                   real deriv_tol = kTangentTol);

HalfIndex inverted_index(HalfIndex i_gamma);

enum class HessianRoute { Cartesian, Polar, Direct };
std::string route_name(HessianRoute r);
IndexResult hessian_flow_index(const SurfaceSpec& g, const CurveSpec& c, HessianRoute route,
                               JetEngine engine = JetEngine::Wirtinger, const WindingOptions& opt = {});
IndexResult index_at_infinity(const SurfaceSpec& f, real radius, const WindingOptions& opt = {});

// Sign data along the circle of radius r for the g_m family.
struct SignConditions {
  real radius = 0;
  real delta2_at_0 = 0;
  real delta2_at_pi_m = 0;
  real d_delta1_at_0 = 0;
  real d_delta1_at_pi_m = 0;
  int sign_changes = 0;
  int expected_changes = 0;
  // Rounding floor of delta2 at 0 and pi/m: 64 eps times the sum of its term sizes.
  real delta2_noise_0 = 0, delta2_noise_pi_m = 0;
  bool holds() const;
};

SignConditions g_sign_conditions(const SurfaceSpec& g, real r, int grid = 0);

struct RadiusSearch {
  real radius = 0;
  int steps = 0;
  SignConditions conditions;
};

// r = r0 * 2^k, k = 0, 1, ..., accepting the first radius where the sign
// conditions hold.
RadiusSearch find_valid_radius_g(const SurfaceSpec& g, real r0 = 2, int max_steps = 4096);

// Lambda_m-type fields near the origin: r = r0 / 2^k until
// zeta2(0) > 0 > zeta2(pi/m) and zeta1 changes sign exactly 2m times.
struct ZetaConditions {
  real radius = 0;
  real zeta2_at_0 = 0;
  real zeta2_at_pi_m = 0;
  int sign_changes = 0;
  int expected_changes = 0;
  bool holds() const;
};
ZetaConditions zeta_conditions(const SurfaceSpec& lam, real r, int grid = 0);
struct LambdaRadiusSearch {
  real radius = 0;
  int steps = 0;
  ZetaConditions conditions;
};
LambdaRadiusSearch find_valid_radius_lambda(const SurfaceSpec& lam, real r0 = 0.5L, int max_steps = 200);

}  // namespace umbilic
