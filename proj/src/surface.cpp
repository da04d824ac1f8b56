#include "surface.hpp"

#include <cmath>
#include <sstream>

namespace umbilic {

bool Domain::contains(real x, real y) const {
  if (!is_finite(x) || !is_finite(y)) return false;
  const real r = std::hypot(x, y);
  switch (kind) {
    case Kind::AllPlane:
      return true;
    case Kind::PuncturedPlane:
      return r > 0;
    case Kind::Exterior:
      return r > R;
    case Kind::PuncturedDisk:
      return r > 0 && r < R;
  }
  return false;
}

Domain Domain::inverted() const {
  switch (kind) {
    case Kind::AllPlane:
    case Kind::PuncturedPlane:
      return punctured_plane();
    case Kind::Exterior:
      return R > 0 ? punctured_disk(1 / R) : punctured_plane();
    case Kind::PuncturedDisk:
      return exterior(1 / R);
  }
  return punctured_plane();
}

std::string Domain::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::AllPlane:
      return "plane";
    case Kind::PuncturedPlane:
      return "punctured plane";
    case Kind::Exterior:
      os << "r > " << static_cast<double>(R);
      return os.str();
    case Kind::PuncturedDisk:
      os << "0 < r < " << static_cast<double>(R);
      return os.str();
  }
  return "";
}

}  // namespace umbilic
