#include "teapot/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "teapot/errors.hpp"
#include "teapot/growth_rate.hpp"

namespace teapot {

namespace {

using cld = std::complex<long double>;

// Newton correction p(z)/p'(z); outside the unit disk the reversed
// polynomial is used so large powers of z never appear.
cld newton_ratio(const std::vector<long double>& c, cld z) {
  const int d = static_cast<int>(c.size()) - 1;
  if (std::abs(z) <= 1.0L) {
    cld p = 0, dp = 0;
    for (int i = d; i >= 0; --i) {
      dp = dp * z + p;
      p = p * z + c[static_cast<std::size_t>(i)];
    }
    if (dp == cld(0)) return p == cld(0) ? cld(0) : cld(1e-3L);
    return p / dp;
  }
  const cld y = 1.0L / z;
  cld q = 0, dq = 0;
  for (int i = 0; i <= d; ++i) {
    dq = dq * y + q;
    q = q * y + c[static_cast<std::size_t>(i)];
  }
  if (q == cld(0)) return 0;
  const cld denom = static_cast<long double>(d) - y * dq / q;
  if (denom == cld(0)) return cld(1e-3L);
  return z / denom;
}

cld eval(const std::vector<long double>& c, cld z) {
  cld p = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) p = p * z + *it;
  return p;
}

long double scale_at(const std::vector<long double>& c, long double r) {
  long double s = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * r + std::abs(*it);
  return s;
}

std::vector<cld> aberth(const std::vector<long double>& c, int max_iter) {
  const int d = static_cast<int>(c.size()) - 1;
  std::vector<cld> z(static_cast<std::size_t>(d));
  if (d == 0) return z;

  // Initial circle: geometric mean of the root moduli.
  const long double radius = std::pow(std::abs(c[0] / c[static_cast<std::size_t>(d)]), 1.0L / d);
  const long double r0 = (radius > 0 && std::isfinite(radius)) ? radius : 1.0L;
  for (int k = 0; k < d; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * k / d + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(r0, angle);
  }

  std::vector<bool> done(static_cast<std::size_t>(d), false);
  for (int iter = 0; iter < max_iter; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (done[i]) continue;
      const cld ratio = newton_ratio(c, z[i]);
      cld sum = 0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != i) sum += 1.0L / (z[i] - z[j]);
      }
      const cld step = ratio / (1.0L - ratio * sum);
      z[i] -= step;
      if (std::abs(step) <= 4 * std::numeric_limits<long double>::epsilon() * std::max(1.0L, std::abs(z[i]))) {
        done[i] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }
  return z;
}

std::vector<long double> derivative(const std::vector<long double>& c) {
  std::vector<long double> out;
  for (std::size_t i = 1; i < c.size(); ++i) out.push_back(c[i] * static_cast<long double>(i));
  return out;
}

// A multiple root of order m leaves Aberth's m copies scattered by about
// eps^(1/m). The cluster center is a simple root of the (m-1)-th derivative,
// so it is refined there and replaces the copies when p vanishes at it.
void polish_clusters(const std::vector<long double>& c, std::vector<cld>& z, double radius) {
  const std::size_t n = z.size();
  std::vector<std::size_t> group(n);
  for (std::size_t i = 0; i < n; ++i) group[i] = i;
  const auto find = [&](std::size_t i) {
    while (group[i] != i) i = group[i] = group[group[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(z[i] - z[j]) <= radius * std::max(1.0L, std::abs(z[i]))) group[find(i)] = find(j);
    }
  }
  for (std::size_t root = 0; root < n; ++root) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (find(i) == root) members.push_back(i);
    }
    if (members.size() < 2) continue;
    cld center = 0;
    for (auto i : members) center += z[i];
    center /= static_cast<long double>(members.size());

    std::vector<long double> d = c;
    for (std::size_t k = 1; k < members.size(); ++k) d = derivative(d);
    const std::vector<long double> dd = derivative(d);
    cld x = center;
    for (int iter = 0; iter < 60; ++iter) {
      const cld slope = eval(dd, x);
      if (slope == cld(0)) break;
      const cld step = eval(d, x) / slope;
      x -= step;
      if (std::abs(step) <= 4 * std::numeric_limits<long double>::epsilon() * std::max(1.0L, std::abs(x))) break;
    }
    const bool stays = std::abs(x - center) <= radius * std::max(1.0L, std::abs(center));
    const bool vanishes = std::abs(eval(c, x)) <= std::abs(eval(c, center)) ||
                          std::abs(eval(c, x)) <= 16 * std::numeric_limits<long double>::epsilon() *
                                                      scale_at(c, std::abs(x));
    if (stays && vanishes) {
      for (auto i : members) z[i] = x;
    }
  }
}

}  // namespace

RootSet all_roots(const IntPolynomial& p, double tol) {
  if (p.degree() < 1) throw std::invalid_argument("all_roots needs degree >= 1");
  const auto& coeffs = p.coefficients();

  std::size_t zeros = 0;
  while (coeffs[zeros] == 0) ++zeros;
  std::vector<long double> c(coeffs.begin() + static_cast<std::ptrdiff_t>(zeros), coeffs.end());
  const long double lead = c.back();
  for (auto& v : c) v /= lead;

  std::vector<cld> found(zeros, cld(0));
  auto rest = aberth(c, 1000);
  polish_clusters(c, rest, 10.0 * std::sqrt(tol));
  found.insert(found.end(), rest.begin(), rest.end());

  const std::vector<long double> full(coeffs.begin(), coeffs.end());
  RootSet out;
  out.polynomial = p;
  out.tolerance = tol;
  std::vector<std::complex<double>> roots;
  for (const auto& r : found) roots.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
  std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  const double cluster = 10.0 * std::sqrt(tol);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const cld z(roots[i].real(), roots[i].imag());
    const long double res = std::abs(eval(full, z));
    const long double sc = scale_at(full, std::abs(z));
    if (!std::isfinite(static_cast<double>(res)) || res > tol * sc) {
      throw NonConvergence("root " + std::to_string(roots[i].real()) + (roots[i].imag() < 0 ? "" : "+") +
                           std::to_string(roots[i].imag()) + "i of " + p.pretty() + " fails the residual test");
    }
    bool near = false;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j != i && std::abs(roots[i] - roots[j]) <= cluster * std::max(1.0, std::abs(roots[i]))) near = true;
    }
    out.roots.push_back(roots[i]);
    out.residuals.push_back(static_cast<double>(res));
    out.scales.push_back(static_cast<double>(sc));
    out.clustered.push_back(near);
  }
  return out;
}

std::optional<double> leading_root(const IntPolynomial& p) {
  if (p.degree() < 1) throw std::invalid_argument("leading_root needs degree >= 1");
  try {
    return GrowthRate::leading_root_of(p).value();
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::vector<std::complex<double>> conjugates_in_disk(const IntPolynomial& p, double radius, double tol) {
  std::vector<std::complex<double>> out;
  if (!(radius > 0)) return out;
  for (const auto& z : all_roots(p, tol).roots) {
    if (std::abs(z) <= radius * (1 + 1e-9)) out.push_back(z);
  }
  return out;
}

}  // namespace teapot
