#pragma once

// Integer polynomials with small coefficients (Parry polynomials, kneading
// partial sums). Arithmetic is overflow-checked; exact algorithms that need
// unbounded coefficients convert to exact::ZPolynomial.

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "teapot/exact.hpp"

namespace teapot {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  // Ascending degree; trailing zeros are dropped.
  explicit IntPolynomial(std::vector<std::int64_t> coeffs);
  static IntPolynomial monomial(std::int64_t c, int degree);

  // Parses "c0,c1,...,cd" (ascending degree).
  static IntPolynomial parse(std::string_view text);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  std::int64_t operator[](int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : 0;
  }
  std::int64_t leading() const { return coeffs_.back(); }

  std::complex<double> operator()(std::complex<double> z) const;
  std::complex<long double> operator()(std::complex<long double> z) const;
  long double operator()(long double x) const;
  // Sum of |c_i| |z|^i: the scale against which evaluation residuals are judged.
  double magnitude_at(double r) const;

  IntPolynomial derivative() const;
  // p(z^2).
  IntPolynomial compose_square() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  exact::ZPolynomial to_exact() const;
  // "c0,c1,...".
  std::string str() const;
  // Human-readable form such as "z^4 - 2z^3 + 1".
  std::string pretty(char var = 'z') const;

 private:
  std::vector<std::int64_t> coeffs_;
};

}  // namespace teapot
