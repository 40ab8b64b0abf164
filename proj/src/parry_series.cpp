#include "teapot/parry_series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "teapot/errors.hpp"

namespace teapot {

std::complex<double> F_eval(const Word& w, std::complex<double> z) {
  std::complex<double> x = 1.0;
  for (std::size_t i = 0; i < w.size(); ++i) x = w[i] ? 2.0 - z * x : z * x;
  return x;
}

IntPolynomial F_polynomial(const Word& w) {
  // F = sign * D with D stored in descending degree, so each step is O(1).
  std::vector<std::int64_t> desc{1};
  std::int64_t sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    desc.push_back(0);
    if (w[i]) {
      sign = -sign;
      desc.back() += 2 * sign;
    }
  }
  std::vector<std::int64_t> asc(desc.rbegin(), desc.rend());
  if (sign < 0) {
    for (auto& c : asc) c = -c;
  }
  return IntPolynomial(std::move(asc));
}

IntPolynomial parry_polynomial(const Word& w) {
  if (w.sign() != 1) throw NegativeSignWord("Parry polynomial needs positive cumulative sign, got " + w.str());
  return F_polynomial(w) - IntPolynomial({1});
}

SeriesPartial::SeriesPartial(SeriesKind kind, std::vector<int> coefficients)
    : kind_(kind), coeffs_(std::move(coefficients)) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int c = coeffs_[i];
    const bool ok = (kind_ == SeriesKind::H && i == 0) ? c == 1 : (c == 0 || c == 2 || c == -2);
    if (!ok) throw std::logic_error("kneading series coefficient out of range");
  }
}

std::complex<double> SeriesPartial::evaluate(std::complex<double> z) const {
  const std::complex<double> x = kind_ == SeriesKind::G ? z : 1.0 / z;
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + static_cast<double>(*it);
  return acc;
}

double SeriesPartial::tail_bound(std::complex<double> z) const {
  const double r = kind_ == SeriesKind::G ? std::abs(z) : 1.0 / std::abs(z);
  if (!(r < 1.0)) return std::numeric_limits<double>::infinity();
  return 2.0 * std::pow(r, static_cast<double>(coeffs_.size())) / (1.0 - r);
}

IntPolynomial SeriesPartial::polynomial() const {
  return IntPolynomial(std::vector<std::int64_t>(coeffs_.begin(), coeffs_.end()));
}

SeriesPartial g_series(const Word& letters, std::size_t n) {
  if (letters.size() < n) throw std::invalid_argument("g_series: not enough letters");
  std::vector<int> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = 2 * letters[i] * letters.prefix_sign(i);
  return SeriesPartial(SeriesKind::G, std::move(c));
}

SeriesPartial g_series(const SymbolSeq& seq, std::size_t n) { return g_series(seq.prefix(n), n); }

SeriesPartial h_series(const Word& letters, std::size_t n) {
  if (n == 0) return SeriesPartial(SeriesKind::H, {});
  if (letters.size() + 1 < n) throw std::invalid_argument("h_series: not enough letters");
  std::vector<int> c(n);
  c[0] = 1;
  for (std::size_t k = 1; k < n; ++k) c[k] = -2 * letters[k - 1] * letters.prefix_sign(k - 1);
  return SeriesPartial(SeriesKind::H, std::move(c));
}

SeriesPartial h_series(const SymbolSeq& seq, std::size_t n) { return h_series(seq.prefix(n == 0 ? 0 : n - 1), n); }

double verify_ghp(const Word& w, std::complex<double> z) {
  const IntPolynomial p = parry_polynomial(w);
  const double r = std::abs(z);
  if (r == 1.0) throw std::invalid_argument("verify_ghp: |z| = 1");
  const std::size_t n = w.size();
  const std::complex<double> pz = p(z);
  const std::complex<double> zn = std::pow(z, static_cast<double>(n));

  // Enough terms that the truncation error is far below double rounding.
  const double q = r < 1.0 ? r : 1.0 / r;
  const double terms = std::ceil(std::log(1e-20 * (1.0 - q) / 2.0) / std::log(q));
  const std::size_t m = std::max<std::size_t>(n + 1, static_cast<std::size_t>(terms) + 1);

  std::complex<double> rhs;
  if (r < 1.0) {
    const SeriesPartial g = g_series(SymbolSeq::periodic(w.reversed()), m);
    rhs = (1.0 - zn) * (g.evaluate(z) - 1.0);
  } else {
    const SeriesPartial h = h_series(SymbolSeq::periodic(w), m);
    rhs = (zn - 1.0) * h.evaluate(z);
  }
  return std::abs(pz - rhs) / std::max(1.0, std::abs(pz));
}

}  // namespace teapot
