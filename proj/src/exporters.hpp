#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include "scan.hpp"
#include "surface.hpp"

namespace umbilic {

// Field sampled for CSV and SVG output.
enum class FieldKind { Principal, D, Delta, Hessian, HessianDelta };
FieldKind parse_field_kind(const std::string& s);
bool is_line_field(FieldKind k);

// Header x,y,dir_angle,d1,d2; rows in row-major order (y outer), 17 digits.
// d1, d2 are the identifiers matching the field (D or Delta or the Hessian pair).
void write_field_csv(std::ostream& os, const SurfaceSpec& f, FieldKind kind, const Rect& rect, int nx, int ny);

struct Annulus {
  real r0 = 0.05L, r1 = 0.2L;
};

// Quiver on a polar grid: segments for line fields, arrows for vector fields.
void write_field_svg(std::ostream& os, const SurfaceSpec& f, FieldKind kind, const Annulus& region, int nr,
                     int ntheta);
void write_field_svg(std::ostream& os, const SurfaceSpec& f, FieldKind kind, const Rect& region, int nx, int ny);

enum class MeshKind { Inversion, Congruence };
// Polar grid of n_radial rings by n_theta sectors over 0 < radius <= rmax, a
// centre vertex, and the seam column duplicated at theta = 0.
void write_mesh_obj(std::ostream& os, const SurfaceSpec& f, MeshKind kind, real rmax, int n_radial, int n_theta);

// File wrappers; IoError when the path cannot be written.
void export_to_file(const std::string& path, const std::function<void(std::ostream&)>& write);

}  // namespace umbilic
