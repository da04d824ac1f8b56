#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "commands.hpp"
#include "exporters.hpp"
#include "scan.hpp"
#include "support.hpp"

using namespace umbilic;

namespace {

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool contains(const ScanCell& c, Point2 p) { return c.x0 <= p.x && p.x <= c.x1 && c.y0 <= p.y && p.y <= c.y1; }

}  // namespace

TEST_CASE("scan of the paraboloid finds one cell at the origin") {
  const ScanResult s = scan_umbilics(catalog::paraboloid(), {}, 40, 40);
  REQUIRE(s.candidates.size() == 1);
  CHECK(contains(s.candidates[0], {0, 0}));
  CHECK(s.candidates[0].twice_index == 2);
}

TEST_CASE("scan of Re z^3 finds the monkey-saddle umbilic") {
  const ScanResult s = scan_umbilics(catalog::rez3(), {}, 40, 40);
  REQUIRE(s.candidates.size() == 1);
  CHECK(contains(s.candidates[0], {0, 0}));
  CHECK(s.candidates[0].twice_index == -1);
}

TEST_CASE("Bates surface has no umbilic candidates") {
  const ScanResult s = scan_umbilics(catalog::bates(), {-20, 20, -20, 20}, 100, 100);
  CHECK(s.candidates.empty());
  CHECK(s.min_d1 > 0);
}

TEST_CASE("scan results do not depend on the thread count") {
  const ScanResult a = scan_umbilics(catalog::ghomi_howard(), {-3, 3, -3, 3}, 60, 60, 1);
  const ScanResult b = scan_umbilics(catalog::ghomi_howard(), {-3, 3, -3, 3}, 60, 60, 4);
  REQUIRE(a.candidates.size() == b.candidates.size());
  for (size_t k = 0; k < a.candidates.size(); ++k) {
    CHECK(a.candidates[k].i == b.candidates[k].i);
    CHECK(a.candidates[k].j == b.candidates[k].j);
  }
  CHECK(a.min_d1 == b.min_d1);
  CHECK(a.sign_cells == b.sign_cells);
}

TEST_CASE("property: rotating the field rotates the umbilic set") {
  const real cx = 0.3L, cy = 0.1L;
  for (real alpha : {0.0L, kPi / 6, 1.0L}) {
    CAPTURE(alpha);
    const real c = std::cos(alpha), s = std::sin(alpha);
    char buf[512];
    std::snprintf(buf, sizeof buf, "(%.21Lg*x - %.21Lg*y - %.21Lg)", c, s, cx);
    const std::string X = buf;
    std::snprintf(buf, sizeof buf, "(%.21Lg*x + %.21Lg*y - %.21Lg)", s, c, cy);
    const std::string Y = buf;
    const SurfaceSpec f = catalog::expression(X + "^3 - 3*" + X + "*" + Y + "^2");
    const Point2 expected{c * cx + s * cy, -s * cx + c * cy};
    const ScanResult r = scan_umbilics(f, {}, 50, 50);
    REQUIRE(r.candidates.size() == 1);
    CHECK(contains(r.candidates[0], expected));
    CHECK(r.candidates[0].twice_index == -1);
  }
}

TEST_CASE("minimum of |d2| along sample points") {
  const std::vector<Point2> pts = {{1, 0}, {0, 1}};
  CHECK(min_abs_d2(catalog::rez3(), pts) == doctest::Approx(0).epsilon(1e-12));
  CHECK(min_abs_d2(catalog::rez3(), {{1, 0}}) == doctest::Approx(66));
}

TEST_CASE("field CSV format") {
  std::ostringstream os;
  write_field_csv(os, catalog::rez3(), FieldKind::Principal, {-0.5L, 0.5L, -0.5L, 0.5L}, 50, 50);
  const auto rows = lines_of(os.str());
  REQUIRE(rows.size() == 1 + 50 * 50);
  CHECK(rows[0] == "x,y,dir_angle,d1,d2");
  for (size_t k = 1; k < rows.size(); ++k) REQUIRE(split(rows[k], ',').size() == 5);
  const auto r1 = split(rows[1], ','), r2 = split(rows[2], ','), r51 = split(rows[51], ',');
  CHECK(std::stold(r1[0]) == -0.5L);
  CHECK(std::stold(r1[1]) == -0.5L);
  // Row-major with y outer and 17 significant digits.
  CHECK(std::fabs(std::stold(r2[0]) - (-0.5L + 1.0L / 49)) < 1e-16L);
  CHECK(std::stold(r2[1]) == -0.5L);
  CHECK(std::stold(r51[0]) == -0.5L);
  CHECK(std::fabs(std::stold(r51[1]) - (-0.5L + 1.0L / 49)) < 1e-16L);
  CHECK(r2[0].size() >= 18);
  // Angles of line fields live in [0, pi).
  for (size_t k = 1; k < rows.size(); ++k) {
    const std::string a = split(rows[k], ',')[2];
    if (a == "nan") continue;
    const real v = std::stold(a);
    CHECK(v >= 0);
    CHECK(v < kPi);
  }
  // The umbilic node is reported without a direction.
  std::ostringstream odd;
  write_field_csv(odd, catalog::rez3(), FieldKind::Principal, {-0.5L, 0.5L, -0.5L, 0.5L}, 3, 3);
  CHECK(split(lines_of(odd.str())[5], ',')[2] == "nan");
}

TEST_CASE("field SVG format") {
  const SurfaceSpec f = catalog::rez2zbar();
  std::ostringstream vec, line;
  write_field_svg(vec, f, FieldKind::Delta, Annulus{0.05L, 0.2L}, 8, 48);
  write_field_svg(line, f, FieldKind::Principal, Annulus{0.05L, 0.2L}, 8, 48);
  for (const std::string& s : {vec.str(), line.str()}) {
    CHECK(s.find("version=\"1.1\"") != std::string::npos);
    CHECK(s.find("viewBox=\"") != std::string::npos);
    CHECK(s.rfind("</svg>") != std::string::npos);
  }
  auto glyphs = [](const std::string& s, size_t* max_points) {
    size_t n = 0;
    *max_points = 0;
    for (const std::string& l : lines_of(s)) {
      if (l.rfind("<polyline", 0) != 0) continue;
      ++n;
      const size_t a = l.find('"') + 1, b = l.find('"', a);
      *max_points = std::max(*max_points, split(l.substr(a, b - a), ' ').size());
    }
    return n;
  };
  size_t pv = 0, pl = 0;
  CHECK(glyphs(vec.str(), &pv) == 8 * 48);
  CHECK(glyphs(line.str(), &pl) == 8 * 48);
  CHECK(pl == 2);
  CHECK(pv == 5);
}

TEST_CASE("mesh OBJ format") {
  std::ostringstream os;
  const int nr = 6, nt = 60;
  write_mesh_obj(os, catalog::fm(5, 0.2L), MeshKind::Inversion, 0.5L, nr, nt);
  std::vector<std::array<real, 3>> v;
  std::vector<std::array<int, 3>> f;
  for (const std::string& l : lines_of(os.str())) {
    const auto w = split(l, ' ');
    if (w[0] == "v") v.push_back({std::stold(w[1]), std::stold(w[2]), std::stold(w[3])});
    if (w[0] == "f") f.push_back({std::stoi(w[1]), std::stoi(w[2]), std::stoi(w[3])});
  }
  REQUIRE(v.size() == static_cast<size_t>(1 + nr * (nt + 1)));
  CHECK(f.size() == static_cast<size_t>(nt + 2 * nt * (nr - 1)));
  for (const auto& t : f)
    for (int i : t) CHECK((i >= 1 && i <= static_cast<int>(v.size())));
  auto at = [&](int ring, int k) { return v[1 + (ring - 1) * (nt + 1) + k]; };
  for (int i = 1; i <= nr; ++i) {
    CHECK(at(i, 0) == at(i, nt));
    // Five-fold symmetry of the inverted f_5 graph.
    for (int k = 0; k < nt; ++k) {
      const auto p = at(i, k), q = at(i, (k + nt / 5) % nt);
      const real c = std::cos(kTwoPi / 5), s = std::sin(kTwoPi / 5);
      CHECK(std::fabs(c * p[0] - s * p[1] - q[0]) < 1e-15L);
      CHECK(std::fabs(s * p[0] + c * p[1] - q[1]) < 1e-15L);
      CHECK(std::fabs(p[2] - q[2]) < 1e-15L);
    }
  }
}

TEST_CASE("unwritable export path") {
  CHECK_THROWS_AS(export_to_file("/nonexistent-dir/out.csv", [](std::ostream& os) { os << "x\n"; }), IoError);
}

TEST_CASE("index report") {
  const CommandReport r = cmd_index(catalog::rez3(), "circle:0.1", "D");
  CHECK(r.text.find("-1/2") != std::string::npos);
  for (const char* key : {"command", "surface", "curve", "indices", "diagnostics", "version"})
    CHECK(r.json.contains(key));
  REQUIRE(r.json["indices"].size() == 1);
  CHECK(r.json["indices"][0]["twice_index"] == -1);
  CHECK(r.json["indices"][0]["route"] == "D");
  const CommandReport again = cmd_index(catalog::rez3(), "circle:0.1", "D");
  CHECK(again.json.dump() == r.json.dump());
}

TEST_CASE("curve grammar") {
  const CurveSpec c = parse_curve("circle:0.3@1,-2");
  CHECK(c.kind == CurveSpec::Kind::Circle);
  CHECK(c.radius == 0.3L);
  CHECK(c.center.x == 1);
  CHECK(c.center.y == -2);
  const CurveSpec e = parse_curve("ellipse:2,0.5");
  CHECK(e.kind == CurveSpec::Kind::Ellipse);
  CHECK(e.by == 0.5L);
  for (const char* s : {"", "circle", "circle:", "circle:-1", "circle:x", "square:1", "ellipse:1", "circle:1@2"}) {
    CAPTURE(s);
    CHECK_THROWS_AS(parse_curve(s), Error);
  }
}
