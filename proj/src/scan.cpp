#include "scan.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "errors.hpp"
#include "identifiers.hpp"
#include "winding.hpp"

namespace umbilic {

namespace {

template <class Fn>
void parallel_rows(int rows, int threads, Fn&& fn) {
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, rows);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (int r = t; r < rows; r += threads) fn(r);
    });
  for (auto& th : pool) th.join();
}

bool both_signs(real a, real b, real c, real d) {
  const real lo = std::min({a, b, c, d}), hi = std::max({a, b, c, d});
  return lo <= 0 && hi >= 0;
}

}  // namespace

ScanResult scan_umbilics(const SurfaceSpec& f, const Rect& rect, int nx, int ny, int threads) {
  if (nx < 2 || ny < 2) throw InvalidArgument("scan grid needs at least 2 x 2 nodes");
  ScanResult out;
  out.rect = rect;
  out.nx = nx;
  out.ny = ny;
  const real hx = (rect.xmax - rect.xmin) / (nx - 1), hy = (rect.ymax - rect.ymin) / (ny - 1);
  auto X = [&](int i) { return rect.xmin + i * hx; };
  auto Y = [&](int j) { return rect.ymin + j * hy; };
  std::vector<PlaneVector> d(static_cast<size_t>(nx) * ny);
  parallel_rows(ny, threads, [&](int j) {
    for (int i = 0; i < nx; ++i) d[static_cast<size_t>(j) * nx + i] = cartesian_identifiers(eval_jet(f, {X(i), Y(j)}, 2));
  });
  out.min_d1 = INFINITY;
  out.max_d1 = -INFINITY;
  out.min_abs_d2 = INFINITY;
  for (const PlaneVector& v : d) {
    out.min_d1 = std::min(out.min_d1, v.vx);
    out.max_d1 = std::max(out.max_d1, v.vx);
    out.min_abs_d2 = std::min(out.min_abs_d2, std::fabs(v.vy));
  }
  auto at = [&](int i, int j) { return d[static_cast<size_t>(j) * nx + i]; };
  std::vector<ScanCell> cells;
  for (int j = 0; j + 1 < ny; ++j) {
    for (int i = 0; i + 1 < nx; ++i) {
      const PlaneVector a = at(i, j), b = at(i + 1, j), c = at(i + 1, j + 1), e = at(i, j + 1);
      if (both_signs(a.vx, b.vx, c.vx, e.vx) && both_signs(a.vy, b.vy, c.vy, e.vy))
        cells.push_back({i, j, X(i), X(i + 1), Y(j), Y(j + 1), 0, false});
    }
  }
  out.sign_cells = static_cast<long>(cells.size());
  std::vector<char> keep(cells.size(), 0);
  WindingOptions wo;
  wo.initial_samples = 64;
  parallel_rows(static_cast<int>(cells.size()), threads, [&](int k) {
    ScanCell& c = cells[k];
    // Counterclockwise square, t in [0, 2pi).
    auto corner = [&](real t) {
      const real s = 4 * t / kTwoPi;
      const int side = std::min(3, static_cast<int>(s));
      const real u = s - side;
      switch (side) {
        case 0:
          return Point2{c.x0 + u * (c.x1 - c.x0), c.y0};
        case 1:
          return Point2{c.x1, c.y0 + u * (c.y1 - c.y0)};
        case 2:
          return Point2{c.x1 - u * (c.x1 - c.x0), c.y1};
        default:
          return Point2{c.x0, c.y1 - u * (c.y1 - c.y0)};
      }
    };
    try {
      const WindingReport w =
          vector_field_index([&](real t) { return cartesian_identifiers(eval_jet(f, corner(t), 2)); }, wo);
      c.twice_index = w.index;
      keep[k] = w.index != 0;
    } catch (const ZeroOnCurveError&) {
      c.zero_on_boundary = true;
      keep[k] = 1;
    }
  });
  for (size_t k = 0; k < cells.size(); ++k)
    if (keep[k]) out.candidates.push_back(cells[k]);
  return out;
}

real min_abs_d2(const SurfaceSpec& f, const std::vector<Point2>& pts) {
  real m = INFINITY;
  for (const Point2& p : pts) m = std::min(m, std::fabs(cartesian_identifiers(eval_jet(f, p, 2)).vy));
  return m;
}

}  // namespace umbilic
