#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <sstream>
#include <tuple>

#include "support.hpp"
#include "teapot/atlas.hpp"
#include "teapot/roots.hpp"

using namespace teapot;
using cd = std::complex<double>;

namespace {

GrowthRate rate(const char* text) { return GrowthRate::parse(text); }

std::vector<cd> points_of(const ConstructiveSlice& s) {
  std::vector<cd> out;
  for (const auto& p : s.points) out.push_back(p.z);
  return out;
}

bool contains_near(const ConstructiveSlice& s, cd z, double tol) {
  return std::any_of(s.points.begin(), s.points.end(), [&](const auto& p) { return std::abs(p.z - z) < tol; });
}

}  // namespace

TEST_CASE("admissible word enumeration matches the definition") {
  const auto words = admissible_words(12);
  std::set<std::string> dfs;
  for (const auto& w : words) dfs.insert(w.str());
  std::set<std::string> brute;
  for (std::size_t len = 2; len <= 12; ++len) {
    for (const auto& w : teapot::testing::all_words(len)) {
      if (is_admissible(w)) brute.insert(w.str());
    }
  }
  CHECK(dfs == brute);
  CHECK(words.size() == brute.size());
  CHECK(words.front() == Word("101"));
}

TEST_CASE("certified raster") {
  const SliceRaster r = render_slice_certified(rate("1.8"), Bounds{}, 40, 14, 1);
  REQUIRE(r.cells.size() == 1600);
  std::size_t left_out = 0;
  for (std::size_t row = 0; row < r.resolution; ++row) {
    for (std::size_t col = 0; col < r.resolution; ++col) {
      const Certificate& c = r.at(row, col);
      if (c.verdict == Verdict::CertifiedOut) {
        CHECK(c.margin > 0);
        if (c.method != Method::FastPathHalfDisk) CHECK(c.depth > 0);
        if (r.center(row, col).real() < 0) ++left_out;
      }
    }
  }
  CHECK(left_out > 0);
  CHECK(r.center(0, 0) == cd(-1.0 + 0.025, 1.0 - 0.025));
}

TEST_CASE("special pixels") {
  const SliceRaster fast = render_slice_certified(rate("1.6"), Bounds{0.1, 0.3, -0.1, 0.1}, 1, 14, 1);
  CHECK(fast.cells[0].verdict == Verdict::CertifiedOut);
  CHECK(fast.cells[0].method == Method::FastPathHalfDisk);
  const SliceRaster circle = render_slice_certified(rate("1.6"), Bounds{0.9, 1.1, -0.1, 0.1}, 1, 14, 1);
  CHECK(circle.cells[0].verdict == Verdict::Member);
  CHECK(circle.cells[0].method == Method::UnitCircle);
}

TEST_CASE("raster output does not depend on the thread count") {
  const GrowthRate l = rate("1.75");
  const SliceRaster a = render_slice_certified(l, Bounds{-1.2, 1.2, -1.2, 1.2}, 30, 12, 1);
  const SliceRaster b = render_slice_certified(l, Bounds{-1.2, 1.2, -1.2, 1.2}, 30, 12, 4);
  std::ostringstream pa, pb, ca, cb;
  write_pgm(pa, a);
  write_pgm(pb, b);
  write_raster_csv(ca, a);
  write_raster_csv(cb, b);
  CHECK(pa.str() == pb.str());
  CHECK(ca.str() == cb.str());
}

TEST_CASE("raster file formats") {
  const SliceRaster r = render_slice_certified(rate("1.8"), Bounds{}, 4, 10, 1);
  std::ostringstream pgm;
  write_pgm(pgm, r);
  const std::string s = pgm.str();
  CHECK(s.rfind("P5\n4 4\n255\n", 0) == 0);
  CHECK(s.size() == std::string("P5\n4 4\n255\n").size() + 16);
  for (std::size_t i = s.size() - 16; i < s.size(); ++i) {
    const auto v = static_cast<unsigned char>(s[i]);
    CHECK((v == 0 || v == 128 || v == 255));
  }
  std::ostringstream csv;
  write_raster_csv(csv, r);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "re,im,lambda,verdict,depth,margin");
  std::size_t rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 16);
}

TEST_CASE("constructive slices") {
  const ConstructiveSlice high = render_slice_constructive(rate("1.9"), 4);
  CHECK(contains_near(high, cd(-0.4196433776070806, 0.6062907292071994), 1e-9));
  CHECK(contains_near(high, cd(-0.4196433776070806, -0.6062907292071994), 1e-9));
  const ConstructiveSlice low = render_slice_constructive(rate("1.2"), 4);
  CHECK_FALSE(contains_near(low, cd(-0.4196433776070806, 0.6062907292071994), 1e-3));
  for (const auto& p : render_slice_constructive(rate("1.8"), 12).points) CHECK(std::abs(p.z) <= 1.0 + 1e-9);
  CHECK_THROWS(render_slice_constructive(rate("1.8"), 1));
}

TEST_CASE("constructive slices grow with lambda") {
  const ConstructiveSlice a = render_slice_constructive(rate("1.7"), 10);
  const ConstructiveSlice b = render_slice_constructive(rate("1.9"), 10);
  std::set<std::pair<std::string, std::pair<double, double>>> big;
  for (const auto& p : b.points) big.insert({p.word.str(), {p.z.real(), p.z.imag()}});
  for (const auto& p : a.points) REQUIRE(big.count({p.word.str(), {p.z.real(), p.z.imag()}}) == 1);
  CHECK(a.points.size() < b.points.size());
}

TEST_CASE("teapot cloud") {
  const TeapotCloud top = teapot_cloud(1, 30, 2.0, 2.0, 1);
  REQUIRE(top.points.size() == 1);
  CHECK(top.points[0][0] == doctest::Approx(2.0));
  CHECK(top.points[0][1] == doctest::Approx(0.0));
  CHECK(top.points[0][2] == 2.0);

  const TeapotCloud cloud = teapot_cloud(100, 60, 1.01, 2.0);
  CHECK_FALSE(cloud.points.empty());
  for (const auto& p : cloud.points) REQUIRE(std::hypot(p[0], p[1]) > 1.0);
  // Ordered by lambda, then real part, then imaginary part.
  CHECK(std::is_sorted(cloud.points.begin(), cloud.points.end(), [](const auto& a, const auto& b) {
    return std::tie(a[2], a[0], a[1]) < std::tie(b[2], b[0], b[1]);
  }));
  std::ostringstream csv;
  write_points_csv(csv, cloud.points);
  CHECK(csv.str().rfind("re,im,lambda\n", 0) == 0);
}

TEST_CASE("conflict and reflection counters") {
  SliceRaster r = render_slice_certified(rate("1.8"), Bounds{0.1, 0.3, -0.1, 0.1}, 1, 10, 1);
  REQUIRE(r.cells[0].verdict == Verdict::CertifiedOut);
  CHECK(count_conflicts(r, {cd(0.2, 0.05)}) == 1);
  CHECK(count_conflicts(r, {cd(0.2, 0.15)}) == 0);
  CHECK(reflection_defects({cd(0.3, 0.4), cd(-0.3, 0.4)}, 1e-6) == 0);
  CHECK(reflection_defects({cd(0.3, 0.4), cd(-0.3, -0.4)}, 1e-6) == 2);
  CHECK(reflection_defects({cd(0, 0.4)}, 1e-6) == 0);
}

TEST_CASE("certified complement avoids the constructive slice") {
  const GrowthRate l = rate("1.8");
  const SliceRaster r = render_slice_certified(l, Bounds{}, 100, 14);
  const ConstructiveSlice s = render_slice_constructive(l, 12);
  CHECK(count_conflicts(r, points_of(s)) == 0);
}

TEST_CASE("top constructive slice is symmetric under z -> -conj(z)") {
  const ConstructiveSlice s = render_slice_constructive(rate("2"), 12);
  CHECK(reflection_defects(points_of(s), 1e-6) == 0);
}
