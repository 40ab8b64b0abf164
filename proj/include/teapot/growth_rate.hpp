#pragma once

// A tent-map slope lambda in (1, 2], held exactly: either a rational number
// (decimal literals and doubles convert without rounding) or a real algebraic
// number given by a squarefree integer polynomial and an isolating interval.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "teapot/exact.hpp"
#include "teapot/polynomial.hpp"

namespace teapot {

class GrowthRate {
 public:
  // All constructors throw std::invalid_argument unless 1 < lambda <= 2.
  explicit GrowthRate(const mpq_class& value);
  explicit GrowthRate(double value);
  // Largest real root of p in (1, 2].
  static GrowthRate leading_root_of(const IntPolynomial& p);
  // "1.82", "2", "1.5e0" (exact decimal) or "poly:c0,c1,...,cd" (ascending).
  static GrowthRate parse(std::string_view text);

  bool is_rational() const { return !poly_.has_value(); }
  // Exact value; only meaningful when is_rational().
  const mpq_class& rational() const { return lo_; }
  // Squarefree polynomial with lambda as a simple root, when algebraic.
  const std::optional<exact::ZPolynomial>& defining_polynomial() const { return poly_; }
  // Polynomial the rate was parsed from, if any.
  const std::optional<IntPolynomial>& source_polynomial() const { return source_; }

  double value() const { return approx_; }

  // [lo, hi] containing lambda with hi - lo <= 2^-bits.
  std::pair<mpq_class, mpq_class> bracket(unsigned bits) const;

  // Sign of q(lambda), decided exactly.
  int sign_of(const exact::ZPolynomial& q) const;
  bool is_root_of(const exact::ZPolynomial& q) const { return sign_of(q) == 0; }
  // Sign of lambda - q.
  int compare(const mpq_class& q) const;
  // Sign of lambda - other, decided exactly.
  int compare(const GrowthRate& other) const;

  // lambda^2; throws std::invalid_argument when lambda^2 > 2.
  GrowthRate squared() const;

  std::string str() const;

 private:
  GrowthRate() = default;
  void refine_once(mpq_class& lo, mpq_class& hi) const;
  void validate();

  // Rational case: lo_ == hi_ == value. Algebraic case: lambda is the only root
  // of *poly_ in [lo_, hi_], and poly_ is nonzero at both endpoints.
  mpq_class lo_;
  mpq_class hi_;
  int sign_lo_ = 0;
  std::optional<exact::ZPolynomial> poly_;
  std::optional<IntPolynomial> source_;
  double approx_ = 0.0;
};

}  // namespace teapot
