#include "teapot/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "teapot/errors.hpp"
#include "teapot/kneading.hpp"
#include "teapot/parry_series.hpp"
#include "teapot/roots.hpp"

namespace teapot {

namespace {

template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) fn(i);
  };
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

// Suffix p[k..) against prefix p[0..n-k): true when some shift is already
// known to exceed the word under <=_E.
bool beaten_by_shift(const std::vector<Letter>& p) {
  const std::size_t n = p.size();
  for (std::size_t k = 1; k < n; ++k) {
    int sign = 1;
    for (std::size_t i = 0; k + i < n; ++i) {
      const int a = p[k + i];
      const int b = p[i];
      if (a != b) {
        if (sign * (a - b) > 0) return true;
        break;
      }
      if (a) sign = -sign;
    }
  }
  return false;
}

}  // namespace

std::complex<double> SliceRaster::center(std::size_t row, std::size_t col) const {
  return {bounds.re_min + (static_cast<double>(col) + 0.5) * pixel_width(),
          bounds.im_max - (static_cast<double>(row) + 0.5) * pixel_height()};
}

SliceRaster render_slice_certified(const GrowthRate& lambda, const Bounds& bounds, std::size_t resolution,
                                   std::size_t depth, unsigned threads, std::size_t outside_terms) {
  if (resolution == 0) throw std::invalid_argument("resolution must be positive");
  if (!(bounds.re_max > bounds.re_min && bounds.im_max > bounds.im_min)) throw std::invalid_argument("empty bounds");

  SliceRaster raster{lambda, bounds, resolution, {}, 0};
  raster.cells.resize(resolution * resolution);
  const SliceTester tester(lambda, MembershipBudget{outside_terms, depth});
  const double half = std::min(raster.pixel_width(), raster.pixel_height()) / 2;
  std::atomic<std::size_t> errors{0};

  parallel_for(resolution, threads, [&](std::size_t row) {
    for (std::size_t col = 0; col < resolution; ++col) {
      const std::complex<double> c = raster.center(row, col);
      Certificate& cell = raster.cells[row * resolution + col];
      if (std::abs(std::abs(c) - 1.0) <= half) {
        cell.verdict = Verdict::Member;
        cell.method = Method::UnitCircle;
        continue;
      }
      try {
        cell = tester.test(c);
      } catch (const std::exception&) {
        cell = Certificate{};
        ++errors;
      }
    }
  });
  raster.errors = errors;
  return raster;
}

std::vector<Word> admissible_words(std::size_t max_len) {
  std::vector<Word> out;
  if (max_len < 2) return out;
  std::vector<Letter> p{1, 0};
  auto dfs = [&](auto&& self) -> void {
    const Word w{std::span<const Letter>(p)};
    if (is_admissible(w)) out.push_back(w);
    if (p.size() == max_len) return;
    for (Letter a : {Letter{0}, Letter{1}}) {
      p.push_back(a);
      if (!beaten_by_shift(p)) self(self);
      p.pop_back();
    }
  };
  dfs(dfs);
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.str() < b.str();
  });
  return out;
}

ConstructiveSlice render_slice_constructive(const GrowthRate& lambda, std::size_t max_word_length) {
  if (max_word_length < 2) throw std::invalid_argument("max word length must be at least 2");
  ConstructiveSlice slice;
  for (const Word& w : admissible_words(max_word_length)) {
    try {
      const IntPolynomial p = parry_polynomial(w);
      // No root in (1, 2] means growth rate 1, below every lambda.
      const std::optional<GrowthRate> lead = [&]() -> std::optional<GrowthRate> {
        try {
          return GrowthRate::leading_root_of(p);
        } catch (const std::invalid_argument&) {
          return std::nullopt;
        }
      }();
      if (lead && lead->compare(lambda) >= 0) continue;
      ++slice.words;
      for (const auto& z : conjugates_in_disk(p, 1.0)) slice.points.push_back({z, w});
    } catch (const std::exception&) {
      ++slice.errors;
    }
  }
  std::sort(slice.points.begin(), slice.points.end(), [](const ConstructivePoint& a, const ConstructivePoint& b) {
    if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
    if (a.z.imag() != b.z.imag()) return a.z.imag() < b.z.imag();
    return a.word.str() < b.word.str();
  });
  return slice;
}

TeapotCloud teapot_cloud(std::size_t rate_count, std::size_t degree, double lambda_min, double lambda_max,
                         unsigned threads) {
  if (rate_count == 0) throw std::invalid_argument("rate count must be positive");
  if (degree < 2) throw std::invalid_argument("series degree must be at least 2");
  if (!(lambda_min <= lambda_max)) throw std::invalid_argument("empty growth-rate range");

  TeapotCloud cloud;
  cloud.rate_count = rate_count;
  cloud.degree = degree;
  cloud.lambda_min = lambda_min;
  cloud.lambda_max = lambda_max;

  std::vector<std::vector<std::array<double, 3>>> per_rate(rate_count);
  std::vector<char> failed(rate_count, 0);
  parallel_for(rate_count, threads, [&](std::size_t i) {
    const double lam = rate_count == 1 ? lambda_min
                                       : lambda_min + (lambda_max - lambda_min) * static_cast<double>(i) /
                                                          static_cast<double>(rate_count - 1);
    try {
      const GrowthRate rate(lam);
      const Word it = itinerary_prefix(rate, degree).letters;
      // Coefficients h_0..h_degree, a polynomial in u = 1/z.
      const IntPolynomial h = h_series(it, degree + 1).polynomial();
      for (const auto& u : all_roots(h).roots) {
        if (!(std::abs(u) < 1.0) || u == 0.0) continue;
        const std::complex<double> z = 1.0 / u;
        if (std::abs(z) > 1.0) per_rate[i].push_back({z.real(), z.imag(), lam});
      }
    } catch (const std::exception&) {
      failed[i] = 1;
      per_rate[i].clear();
    }
  });
  for (std::size_t i = 0; i < rate_count; ++i) {
    cloud.errors += static_cast<std::size_t>(failed[i]);
    cloud.points.insert(cloud.points.end(), per_rate[i].begin(), per_rate[i].end());
  }
  std::sort(cloud.points.begin(), cloud.points.end(), [](const auto& a, const auto& b) {
    if (a[2] != b[2]) return a[2] < b[2];
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
  });
  return cloud;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_points_csv(std::ostream& out, const std::vector<std::array<double, 3>>& points) {
  out << "re,im,lambda\n";
  for (const auto& p : points) out << format_double(p[0]) << ',' << format_double(p[1]) << ',' << format_double(p[2]) << '\n';
}

void write_constructive_csv(std::ostream& out, const ConstructiveSlice& slice, double lambda) {
  out << "re,im,lambda\n";
  const std::string lam = format_double(lambda);
  for (const auto& p : slice.points) out << format_double(p.z.real()) << ',' << format_double(p.z.imag()) << ',' << lam << '\n';
}

void write_raster_csv(std::ostream& out, const SliceRaster& raster) {
  out << "re,im,lambda,verdict,depth,margin\n";
  const std::string lam = format_double(raster.lambda.value());
  for (std::size_t row = 0; row < raster.resolution; ++row) {
    for (std::size_t col = 0; col < raster.resolution; ++col) {
      const auto c = raster.center(row, col);
      const Certificate& cert = raster.at(row, col);
      out << format_double(c.real()) << ',' << format_double(c.imag()) << ',' << lam << ',' << to_string(cert.verdict)
          << ',' << cert.depth << ',' << format_double(cert.margin) << '\n';
    }
  }
}

void write_pgm(std::ostream& out, const SliceRaster& raster) {
  out << "P5\n" << raster.resolution << ' ' << raster.resolution << "\n255\n";
  for (const Certificate& c : raster.cells) {
    unsigned char v = 128;
    if (c.verdict == Verdict::CertifiedOut) v = 0;
    if (c.verdict == Verdict::Member) v = 255;
    out.put(static_cast<char>(v));
  }
}

std::size_t count_conflicts(const SliceRaster& raster, const std::vector<std::complex<double>>& points) {
  const double half = raster.pixel_width() / 2;
  std::size_t conflicts = 0;
  for (std::size_t row = 0; row < raster.resolution; ++row) {
    for (std::size_t col = 0; col < raster.resolution; ++col) {
      if (raster.at(row, col).verdict != Verdict::CertifiedOut) continue;
      const auto c = raster.center(row, col);
      const bool hit = std::any_of(points.begin(), points.end(), [&](const auto& p) { return std::abs(p - c) <= half; });
      if (hit) ++conflicts;
    }
  }
  return conflicts;
}

std::size_t reflection_defects(const std::vector<std::complex<double>>& points, double tol) {
  std::vector<std::complex<double>> sorted(points);
  std::sort(sorted.begin(), sorted.end(), [](auto a, auto b) { return a.real() < b.real(); });
  std::size_t defects = 0;
  for (const auto& z : points) {
    const std::complex<double> target(-z.real(), z.imag());
    auto it = std::lower_bound(sorted.begin(), sorted.end(), target.real() - tol,
                               [](const auto& p, double v) { return p.real() < v; });
    bool found = false;
    for (; it != sorted.end() && it->real() <= target.real() + tol; ++it) {
      if (std::abs(*it - target) <= tol) {
        found = true;
        break;
      }
    }
    if (!found) ++defects;
  }
  return defects;
}

}  // namespace teapot
