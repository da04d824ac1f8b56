#include "exporters.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>

#include "errors.hpp"
#include "identifiers.hpp"
#include "inversion.hpp"
#include "ribaucour.hpp"

namespace umbilic {

namespace {

std::string num(real v) {
  if (!is_finite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17Lg", v);
  return buf;
}

struct Sample {
  real angle = NAN;  // direction (mod pi for line fields)
  real d1 = NAN, d2 = NAN;
};

Sample sample(const SurfaceSpec& f, FieldKind kind, Point2 p) {
  Sample s;
  switch (kind) {
    case FieldKind::Principal: {
      const Jet j = eval_jet(f, p, 2);
      const PlaneVector d = cartesian_identifiers(j);
      s.d1 = d.vx;
      s.d2 = d.vy;
      try {
        s.angle = principal_direction(j);
      } catch (const UmbilicError&) {
      }
      break;
    }
    case FieldKind::D: {
      const PlaneVector d = cartesian_identifiers(eval_jet(f, p, 2));
      s.d1 = d.vx;
      s.d2 = d.vy;
      s.angle = std::atan2(d.vy, d.vx);
      break;
    }
    case FieldKind::Delta: {
      const PolarPoint q = PolarPoint::from(p);
      const PlaneVector d = polar_identifiers(eval_polar_jet(f, q, 2), q);
      s.d1 = d.vx;
      s.d2 = d.vy;
      s.angle = std::atan2(d.vy, d.vx);
      break;
    }
    case FieldKind::Hessian: {
      const WirtingerJet w = eval_wirtinger(f, p);
      const PlaneVector d = hessian_identifier_cartesian(w);
      s.d1 = d.vx;
      s.d2 = d.vy;
      try {
        s.angle = hessian_direction(w);
      } catch (const EquiDiagonalError&) {
      }
      break;
    }
    case FieldKind::HessianDelta: {
      const PolarPoint q = PolarPoint::from(p);
      const PlaneVector d = hessian_identifier_polar(eval_wirtinger(f, p), q);
      s.d1 = d.vx;
      s.d2 = d.vy;
      s.angle = std::atan2(d.vy, d.vx);
      break;
    }
  }
  return s;
}

void svg_header(std::ostream& os, real xmin, real xmax, real ymin, real ymax) {
  const real w = xmax - xmin, h = ymax - ymin;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(xmin) << ' ' << num(-ymax) << ' '
     << num(w) << ' ' << num(h) << "\" width=\"800\" height=\"" << num(800 * h / w) << "\">\n"
     << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke=\"black\" stroke-width=\"" << num(w / 800) << "\">\n";
}

void svg_glyph(std::ostream& os, FieldKind kind, Point2 p, real angle, real len) {
  if (!is_finite(angle)) return;
  const real c = std::cos(angle) * len / 2, s = std::sin(angle) * len / 2;
  if (is_line_field(kind)) {
    os << "<polyline points=\"" << num(p.x - c) << ',' << num(p.y - s) << ' ' << num(p.x + c) << ',' << num(p.y + s)
       << "\"/>\n";
    return;
  }
  // Shaft plus a two-stroke head at the tip.
  const real hx = p.x + c, hy = p.y + s;
  const real k = 0.35L;
  const real l1 = angle + kPi * 5 / 6, l2 = angle - kPi * 5 / 6;
  os << "<polyline points=\"" << num(p.x - c) << ',' << num(p.y - s) << ' ' << num(hx) << ',' << num(hy) << ' '
     << num(hx + k * len * std::cos(l1)) << ',' << num(hy + k * len * std::sin(l1)) << ' ' << num(hx) << ','
     << num(hy) << ' ' << num(hx + k * len * std::cos(l2)) << ',' << num(hy + k * len * std::sin(l2)) << "\"/>\n";
}

}  // namespace

FieldKind parse_field_kind(const std::string& s) {
  if (s == "principal") return FieldKind::Principal;
  if (s == "D") return FieldKind::D;
  if (s == "delta" || s == "Delta") return FieldKind::Delta;
  if (s == "hessian") return FieldKind::Hessian;
  if (s == "hessian-delta") return FieldKind::HessianDelta;
  throw InvalidArgument("unknown field '" + s + "' (principal, D, delta, hessian, hessian-delta)");
}

bool is_line_field(FieldKind k) { return k == FieldKind::Principal || k == FieldKind::Hessian; }

void write_field_csv(std::ostream& os, const SurfaceSpec& f, FieldKind kind, const Rect& rect, int nx, int ny) {
  if (nx < 2 || ny < 2) throw InvalidArgument("grid needs at least 2 x 2 nodes");
  os << "x,y,dir_angle,d1,d2\n";
  for (int j = 0; j < ny; ++j) {
    const real y = rect.ymin + (rect.ymax - rect.ymin) * j / (ny - 1);
    for (int i = 0; i < nx; ++i) {
      const real x = rect.xmin + (rect.xmax - rect.xmin) * i / (nx - 1);
      Sample s;
      try {
        s = sample(f, kind, {x, y});
      } catch (const DomainError&) {
      }
      os << num(x) << ',' << num(y) << ',' << num(s.angle) << ',' << num(s.d1) << ',' << num(s.d2) << '\n';
    }
  }
}

void write_field_svg(std::ostream& os, const SurfaceSpec& f, FieldKind kind, const Annulus& region, int nr,
                     int ntheta) {
  if (!(region.r0 > 0 && region.r1 > region.r0) || nr < 1 || ntheta < 1)
    throw InvalidArgument("annulus needs 0 < r0 < r1 and positive sample counts");
  const real R = region.r1 * 1.05L;
  svg_header(os, -R, R, -R, R);
  const real len = 0.8L * std::min((region.r1 - region.r0) / std::max(1, nr - 1), kTwoPi * region.r0 / ntheta);
  for (int i = 0; i < nr; ++i) {
    const real r = nr == 1 ? region.r0 : region.r0 + (region.r1 - region.r0) * i / (nr - 1);
    for (int k = 0; k < ntheta; ++k) {
      const Point2 p = PolarPoint::make(r, kTwoPi * k / ntheta).cartesian();
      svg_glyph(os, kind, p, sample(f, kind, p).angle, len);
    }
  }
  os << "</g>\n</svg>\n";
}

void write_field_svg(std::ostream& os, const SurfaceSpec& f, FieldKind kind, const Rect& region, int nx, int ny) {
  if (nx < 2 || ny < 2) throw InvalidArgument("grid needs at least 2 x 2 nodes");
  svg_header(os, region.xmin, region.xmax, region.ymin, region.ymax);
  const real hx = (region.xmax - region.xmin) / (nx - 1), hy = (region.ymax - region.ymin) / (ny - 1);
  const real len = 0.8L * std::min(hx, hy);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const Point2 p{region.xmin + i * hx, region.ymin + j * hy};
      real angle = NAN;
      try {
        angle = sample(f, kind, p).angle;
      } catch (const DomainError&) {
      }
      svg_glyph(os, kind, p, angle, len);
    }
  }
  os << "</g>\n</svg>\n";
}

void write_mesh_obj(std::ostream& os, const SurfaceSpec& f, MeshKind kind, real rmax, int n_radial, int n_theta) {
  if (!(rmax > 0) || n_radial < 1 || n_theta < 3) throw InvalidArgument("mesh needs rmax > 0, rings >= 1, sectors >= 3");
  auto vertex = [&](Point2 p) {
    Vec3 v;
    if (kind == MeshKind::Inversion) {
      v = invert_graph(f, p).xyz;
    } else {
      v = sphere_congruence_surface(f, p).P;
    }
    os << "v " << num(v[0]) << ' ' << num(v[1]) << ' ' << num(v[2]) << '\n';
  };
  os << "# " << (kind == MeshKind::Inversion ? "inversion" : "sphere congruence") << " of " << f.name << '\n';
  os << "v 0 0 0\n";
  const int cols = n_theta + 1;
  for (int i = 1; i <= n_radial; ++i) {
    const real r = rmax * i / n_radial;
    for (int k = 0; k < cols; ++k) {
      const real t = kTwoPi * (k % n_theta) / n_theta;
      vertex({r * std::cos(t), r * std::sin(t)});
    }
  }
  auto id = [&](int ring, int k) { return 2 + (ring - 1) * cols + k; };
  for (int k = 0; k < n_theta; ++k) os << "f 1 " << id(1, k) << ' ' << id(1, k + 1) << '\n';
  for (int i = 1; i < n_radial; ++i) {
    for (int k = 0; k < n_theta; ++k) {
      os << "f " << id(i, k) << ' ' << id(i + 1, k) << ' ' << id(i + 1, k + 1) << '\n';
      os << "f " << id(i, k) << ' ' << id(i + 1, k + 1) << ' ' << id(i, k + 1) << '\n';
    }
  }
}

void export_to_file(const std::string& path, const std::function<void(std::ostream&)>& write) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write(out);
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace umbilic
