#pragma once

#include <memory>
#include <string>
#include <vector>

#include "expression.hpp"
#include "fspec.hpp"
#include "real.hpp"

namespace umbilic {

// Where a field may be evaluated.
struct Domain {
  enum class Kind { AllPlane, PuncturedPlane, Exterior, PuncturedDisk };
  Kind kind = Kind::AllPlane;
  real R = 0;  // Exterior: r > R; PuncturedDisk: 0 < r < R

  static Domain all_plane() { return {}; }
  static Domain punctured_plane() { return {Kind::PuncturedPlane, 0}; }
  static Domain exterior(real R) { return {Kind::Exterior, R}; }
  static Domain punctured_disk(real R) { return {Kind::PuncturedDisk, R}; }

  bool contains(real x, real y) const;
  // Image under (x, y) -> (x, y) / (x^2 + y^2).
  Domain inverted() const;
  std::string describe() const;
};

enum class SurfaceKind { Bates, GhomiHoward, ReZ3, ReZ2Zbar, Paraboloid, Fm, Gm, LambdaM, Dual, Expression };

struct SurfaceSpec {
  SurfaceKind kind = SurfaceKind::Expression;
  std::string name;  // canonical text form, reparsable by parse_surface
  real lam = 1;
  int m = 0;
  real a = 0;
  FSpec F;
  std::shared_ptr<const SurfaceSpec> of;  // Dual
  Expr expr;                              // evaluated for all Cartesian and Wirtinger jets
  Expr polar_expr;                        // optional form preferred for direct polar jets
  Domain domain;
  std::vector<std::string> warnings;

  const Expr& polar_tree() const { return polar_expr ? polar_expr : expr; }
};

}  // namespace umbilic
