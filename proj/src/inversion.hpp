#pragma once

#include <array>
#include <string>
#include <vector>

#include "jets.hpp"
#include "surface.hpp"
#include "winding.hpp"

namespace umbilic {

struct InversionPoint {
  Point2 uv;
  std::array<real, 3> xyz{};
};

// Psi_f(u, v) = (u, v, rho^2 fhat) / (1 + rho^2 fhat^2), fhat(u, v) = f(u / rho^2, v / rho^2).
InversionPoint invert_graph(const SurfaceSpec& f, Point2 uv);

struct GraphHeight {
  real Z = 0;
  Point2 uv;        // preimage under the projected inversion
  real residual = 0;
  int iterations = 0;
};

// Z_f(X, Y): third coordinate of Psi_f over the projected point (X, Y).
GraphHeight graph_height(const SurfaceSpec& f, Point2 XY);

enum class RegularityLevel { Fails, C0, Differentiable, C1, C2projection };
std::string level_name(RegularityLevel l);

struct Witness {
  std::string criterion;
  std::string kind;  // "bound", "limit" or "below-one"
  RegularityLevel level = RegularityLevel::C0;
  std::vector<real> radii;
  std::vector<real> values;  // sup over the angular samples at each radius
  bool pass = false;
};

struct RegularityOptions {
  real R = 1;
  int radii = 10;  // r = R * 4^k, k = 1..radii
  int theta_grid = 720;
  real c = -1;     // exponent of the C2 criterion; negative selects 2a for f_m/g_m, else 0
  real limit_tol = 1e-3L;
  real growth_tol = 0.01L;
  RegularityLevel requested = RegularityLevel::C2projection;
};

struct RegularityReport {
  RegularityLevel level = RegularityLevel::Fails;
  real c = 0;
  std::vector<Witness> witnesses;
  const Witness* find(const std::string& criterion) const;
};

RegularityReport check_regularity(const SurfaceSpec& f, const RegularityOptions& opt = {});

// Angular sample set used by the regularity checks at radius r: an offset grid,
// the axis angles, and extra points bisected into sharp transitions of f.
std::vector<real> regularity_angles(const SurfaceSpec& f, real r, int grid, int m);

struct LimitSequence {
  std::string quantity;
  std::vector<real> rho;
  std::vector<real> values;  // sup over angular samples
  bool monotone = false;
  bool below_tol = false;     // value at rho = 1e-5 below tol
};

struct HattedLimitsReport {
  std::vector<LimitSequence> sequences;
  real kuv_printed_vs_ad = 0;  // relative difference at (rho, theta) = (0.01, 0.4)
  real tol = 1e-6L;
};

// Hatted-field limits near the origin at rho = 10^-k, k = 1..6.
HattedLimitsReport check_hatted_limits(const SurfaceSpec& f, int theta_samples = 64);

// Second derivatives (uu, uv, vv) of h = rho^2 fhat, k = (rho fhat)^2 and
// Z = h / (k + 1) at uv, by Taylor arithmetic.
struct HattedSecond {
  std::array<real, 3> h{}, k{}, Z{};
  real Zvalue = 0, hvalue = 0, kvalue = 0;
  std::array<real, 2> h1{}, k1{};
};
HattedSecond hatted_second(const SurfaceSpec& f, Point2 uv);
// Printed expansion of k_uv in terms of the hatted polar jet.
real printed_kuv(const SurfaceSpec& f, real rho, real theta);

struct DualityResult {
  HalfIndex at_origin;    // ind_o(H_dual)
  HalfIndex at_infinity;  // ind_inf(H_f)
  int twice_sum = 0;
  real radius_out = 0, radius_in = 0;
  IndexResult origin_detail, infinity_detail;
};

DualityResult duality_check(const SurfaceSpec& f, real radius_out, real radius_in);

}  // namespace umbilic
