#pragma once

#include <vector>

#include "jets.hpp"
#include "surface.hpp"

namespace umbilic {

struct Rect {
  real xmin = -1, xmax = 1, ymin = -1, ymax = 1;
};

struct ScanCell {
  int i = 0, j = 0;  // column, row of the lower-left node
  real x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  int twice_index = 0;   // degree of (d1, d2) around the cell
  bool zero_on_boundary = false;
};

struct ScanResult {
  Rect rect;
  int nx = 0, ny = 0;  // nodes per axis
  std::vector<ScanCell> candidates;
  long sign_cells = 0;  // cells where both identifiers take both signs
  real min_d1 = 0, max_d1 = 0, min_abs_d2 = 0;
};

// Umbilic candidates on an nx x ny node grid: cells where d1 and d2 both
// change sign (zeros included), confirmed by a nonzero degree of (d1, d2)
// around the cell or by a zero on its boundary.
ScanResult scan_umbilics(const SurfaceSpec& f, const Rect& rect, int nx, int ny, int threads = 0);

// min |d2| over sample points.
real min_abs_d2(const SurfaceSpec& f, const std::vector<Point2>& pts);

}  // namespace umbilic
