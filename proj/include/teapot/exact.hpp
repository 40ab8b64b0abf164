#pragma once

// Exact univariate polynomial arithmetic over the integers and rationals
// (GMP-backed). Used where a decision must not depend on rounding: exact
// critical-point hits, isolating intervals of algebraic growth rates, and
// polynomial identities.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace teapot::exact {

// Coefficients in ascending degree; trailing zeros are trimmed so the zero
// polynomial is the empty vector.
struct ZPolynomial {
  std::vector<mpz_class> coeffs;

  ZPolynomial() = default;
  explicit ZPolynomial(std::vector<mpz_class> c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  const mpz_class& leading() const { return coeffs.back(); }

  friend bool operator==(const ZPolynomial& a, const ZPolynomial& b) { return a.coeffs == b.coeffs; }
  std::string str() const;
};

struct QPolynomial {
  std::vector<mpq_class> coeffs;

  QPolynomial() = default;
  explicit QPolynomial(std::vector<mpq_class> c);
  explicit QPolynomial(const ZPolynomial& p);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
};

ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b);
ZPolynomial operator-(const ZPolynomial& a, const ZPolynomial& b);
ZPolynomial derivative(const ZPolynomial& p);

// Divides out the content and makes the leading coefficient positive.
ZPolynomial primitive(const QPolynomial& p);

QPolynomial remainder(const QPolynomial& a, const QPolynomial& b);
// Primitive integer gcd; degree 0 when coprime.
ZPolynomial gcd(const ZPolynomial& a, const ZPolynomial& b);
ZPolynomial squarefree_part(const ZPolynomial& p);

// p(x)^2-root transform: the polynomial whose roots are the squares of the roots of p.
ZPolynomial graeffe(const ZPolynomial& p);

mpq_class evaluate(const ZPolynomial& p, const mpq_class& x);
int sign_at(const ZPolynomial& p, const mpq_class& x);

// Sturm chain of a squarefree polynomial.
class SturmChain {
 public:
  explicit SturmChain(const ZPolynomial& squarefree);
  // Number of distinct real roots in the half-open interval (a, b].
  int count_roots(const mpq_class& a, const mpq_class& b) const;

 private:
  int variations(const mpq_class& x) const;
  std::vector<ZPolynomial> chain_;
};

}  // namespace teapot::exact
