#include "teapot/polynomial.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace teapot {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer polynomial coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer polynomial coefficient overflow");
  return r;
}

template <typename T>
T horner(const std::vector<std::int64_t>& c, T z) {
  T acc{0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + T(static_cast<typename T::value_type>(*it));
  return acc;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(std::int64_t c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<std::int64_t> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("bad polynomial coefficient '" + std::string(tok) + "'");
    }
    out.push_back(v);
    pos = end + 1;
  }
  IntPolynomial p(std::move(out));
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  return p;
}

std::complex<double> IntPolynomial::operator()(std::complex<double> z) const { return horner(coeffs_, z); }

std::complex<long double> IntPolynomial::operator()(std::complex<long double> z) const {
  return horner(coeffs_, z);
}

long double IntPolynomial::operator()(long double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + static_cast<long double>(*it);
  return acc;
}

double IntPolynomial::magnitude_at(double r) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + std::abs(static_cast<double>(*it));
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<std::int64_t> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = checked_mul(coeffs_[i], static_cast<std::int64_t>(i));
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::compose_square() const {
  if (coeffs_.empty()) return {};
  std::vector<std::int64_t> out(2 * coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[2 * i] = coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = checked_add(a[static_cast<int>(i)], b[static_cast<int>(i)]);
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> neg(b.coeffs_.size());
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = checked_mul(b.coeffs_[i], -1);
  return a + IntPolynomial(std::move(neg));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return IntPolynomial(std::move(out));
}

exact::ZPolynomial IntPolynomial::to_exact() const {
  std::vector<mpz_class> c;
  c.reserve(coeffs_.size());
  for (auto v : coeffs_) c.emplace_back(static_cast<long>(v));
  return exact::ZPolynomial(std::move(c));
}

std::string IntPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coeffs_[i]);
  }
  return s;
}

std::string IntPolynomial::pretty(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const std::int64_t c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

}  // namespace teapot
