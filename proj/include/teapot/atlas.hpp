#pragma once

// Pictures of slices and of the teapot: certified complement rasters,
// slices built from Parry polynomial roots, and point clouds from truncated
// kneading series. Output is canonically ordered, so files are identical
// whatever the thread count.

#include <array>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "teapot/growth_rate.hpp"
#include "teapot/membership.hpp"
#include "teapot/symbolic.hpp"

namespace teapot {

struct Bounds {
  double re_min = -1.0;
  double re_max = 1.0;
  double im_min = -1.0;
  double im_max = 1.0;
};

struct SliceRaster {
  GrowthRate lambda;
  Bounds bounds;
  std::size_t resolution = 0;
  // Row-major, row 0 at im_max.
  std::vector<Certificate> cells;
  // Pixels whose test raised an error; they are stored as Inconclusive.
  std::size_t errors = 0;

  double pixel_width() const { return (bounds.re_max - bounds.re_min) / static_cast<double>(resolution); }
  double pixel_height() const { return (bounds.im_max - bounds.im_min) / static_cast<double>(resolution); }
  std::complex<double> center(std::size_t row, std::size_t col) const;
  const Certificate& at(std::size_t row, std::size_t col) const { return cells[row * resolution + col]; }
};

// threads == 0 uses the hardware concurrency.
SliceRaster render_slice_certified(const GrowthRate& lambda, const Bounds& bounds, std::size_t resolution,
                                   std::size_t depth, unsigned threads = 0, std::size_t outside_terms = 200);

struct ConstructivePoint {
  std::complex<double> z;
  Word word;
};

struct ConstructiveSlice {
  std::vector<ConstructivePoint> points;  // sorted by (re, im, word)
  std::size_t words = 0;                  // admissible words that passed the rate filter
  std::size_t errors = 0;                 // words skipped after a solver failure
};

// Admissible words of length 2..max_len in lexicographic order, found by a
// depth-first search that drops prefixes already beaten by one of their shifts.
std::vector<Word> admissible_words(std::size_t max_len);

ConstructiveSlice render_slice_constructive(const GrowthRate& lambda, std::size_t max_word_length);

struct TeapotCloud {
  // (Re z, Im z, lambda), sorted.
  std::vector<std::array<double, 3>> points;
  std::size_t rate_count = 0;
  std::size_t degree = 0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  std::size_t errors = 0;
};

TeapotCloud teapot_cloud(std::size_t rate_count, std::size_t degree, double lambda_min, double lambda_max,
                         unsigned threads = 0);

// Shortest decimal that reads back to the same double.
std::string format_double(double v);

void write_points_csv(std::ostream& out, const std::vector<std::array<double, 3>>& points);
void write_constructive_csv(std::ostream& out, const ConstructiveSlice& slice, double lambda);
void write_raster_csv(std::ostream& out, const SliceRaster& raster);
// 8-bit binary PGM: 0 certified out, 128 inconclusive, 255 unit circle.
void write_pgm(std::ostream& out, const SliceRaster& raster);

// CertifiedOut pixels whose center is within half a pixel width of a point.
std::size_t count_conflicts(const SliceRaster& raster, const std::vector<std::complex<double>>& points);
// Points z with no point within tol of -conj(z).
std::size_t reflection_defects(const std::vector<std::complex<double>>& points, double tol);

}  // namespace teapot
