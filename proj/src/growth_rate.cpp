#include "teapot/growth_rate.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <charconv>
#include <stdexcept>

namespace teapot {

namespace {

mpq_class pow2_neg(unsigned bits) {
  mpz_class den = 1;
  den <<= bits;
  return mpq_class(mpz_class(1), den);
}

mpq_class parse_decimal(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  long exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    const std::string rest(text.substr(i));
    std::size_t used = 0;
    try {
      exponent = std::stol(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != rest.size()) throw std::invalid_argument("bad exponent in '" + std::string(text) + "'");
    i = text.size();
  }
  if (digits.empty() || i != text.size()) throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
  if (exponent > 1000 || exponent < -1000) throw std::invalid_argument("exponent out of range");

  mpz_class num(digits, 10);
  if (negative) num = -num;
  const long shift = exponent - frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  mpq_class q = shift < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
  q.canonicalize();
  return q;
}

double nearest_double(const mpq_class& q) {
  mpfr_t x;
  mpfr_init2(x, 53);
  mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
  const double d = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  return d;
}

}  // namespace

GrowthRate::GrowthRate(const mpq_class& value) : lo_(value) {
  lo_.canonicalize();
  hi_ = lo_;
  approx_ = nearest_double(lo_);
  validate();
}

GrowthRate::GrowthRate(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("growth rate must be finite");
  lo_ = hi_ = mpq_class(value);
  approx_ = value;
  validate();
}

void GrowthRate::validate() {
  if (compare(mpq_class(1)) <= 0 || compare(mpq_class(2)) > 0) {
    throw std::invalid_argument("growth rate must lie in (1, 2], got " + str());
  }
}

GrowthRate GrowthRate::leading_root_of(const IntPolynomial& p) {
  if (p.degree() < 1) throw std::invalid_argument("leading root of a constant polynomial");
  const exact::ZPolynomial sf = exact::squarefree_part(p.to_exact());
  if (exact::sign_at(sf, mpq_class(2)) == 0) {
    GrowthRate g(mpq_class(2));
    g.source_ = p;
    return g;
  }
  const exact::SturmChain chain(sf);
  mpq_class lo = 1;
  mpq_class hi = 2;
  if (chain.count_roots(lo, hi) == 0) {
    throw std::invalid_argument("polynomial " + p.pretty() + " has no root in (1, 2]");
  }
  // Keep the largest root in (lo, hi] until it is the only one and lo is not a root.
  while (chain.count_roots(lo, hi) > 1 || exact::sign_at(sf, lo) == 0) {
    const mpq_class mid = (lo + hi) / 2;
    if (chain.count_roots(mid, hi) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  GrowthRate g;
  g.source_ = p;
  if (exact::sign_at(sf, hi) == 0) {
    g.lo_ = g.hi_ = hi;
  } else if (sf.degree() == 1) {
    g.lo_ = mpq_class(-sf.coeffs[0], sf.coeffs[1]);
    g.lo_.canonicalize();
    g.hi_ = g.lo_;
  } else {
    g.lo_ = lo;
    g.hi_ = hi;
    g.sign_lo_ = exact::sign_at(sf, lo);
    g.poly_ = sf;
  }
  const auto [a, b] = g.bracket(64);
  g.approx_ = nearest_double((a + b) / 2);
  g.validate();
  return g;
}

GrowthRate GrowthRate::parse(std::string_view text) {
  constexpr std::string_view kPoly = "poly:";
  if (text.substr(0, kPoly.size()) == kPoly) return leading_root_of(IntPolynomial::parse(text.substr(kPoly.size())));
  return GrowthRate(parse_decimal(text));
}

void GrowthRate::refine_once(mpq_class& lo, mpq_class& hi) const {
  if (lo == hi) return;
  const mpq_class mid = (lo + hi) / 2;
  const int s = exact::sign_at(*poly_, mid);
  if (s == 0) {
    lo = hi = mid;
  } else if (s == sign_lo_) {
    lo = mid;
  } else {
    hi = mid;
  }
}

std::pair<mpq_class, mpq_class> GrowthRate::bracket(unsigned bits) const {
  mpq_class lo = lo_;
  mpq_class hi = hi_;
  if (!poly_) return {lo, hi};
  const mpq_class width = pow2_neg(bits);
  while (hi - lo > width) refine_once(lo, hi);
  return {lo, hi};
}

int GrowthRate::sign_of(const exact::ZPolynomial& q) const {
  if (q.is_zero()) return 0;
  if (!poly_) return exact::sign_at(q, lo_);

  const exact::ZPolynomial g = exact::gcd(q, *poly_);
  if (g.degree() >= 1 && exact::sign_at(g, lo_) != exact::sign_at(g, hi_)) return 0;

  // q(lambda) != 0: shrink the interval until q has no root on it.
  const exact::SturmChain chain(exact::squarefree_part(q));
  mpq_class lo = lo_;
  mpq_class hi = hi_;
  while (lo != hi && (exact::sign_at(q, lo) == 0 || chain.count_roots(lo, hi) != 0)) refine_once(lo, hi);
  return exact::sign_at(q, lo);
}

int GrowthRate::compare(const mpq_class& q) const {
  if (!poly_) return sgn(lo_ - q);
  if (q <= lo_) return 1;
  if (q >= hi_) return -1;
  const int s = exact::sign_at(*poly_, q);
  if (s == 0) return 0;
  return s == sign_lo_ ? 1 : -1;
}

int GrowthRate::compare(const GrowthRate& other) const {
  if (!other.poly_) return compare(other.lo_);
  if (!poly_) return -other.compare(lo_);
  // Equal exactly when lambda is the root of other's polynomial isolated by other's interval.
  if (sign_of(*other.poly_) == 0 && compare(other.lo_) > 0 && compare(other.hi_) < 0) return 0;
  for (unsigned bits = 64;; bits *= 2) {
    const auto [a_lo, a_hi] = bracket(bits);
    const auto [b_lo, b_hi] = other.bracket(bits);
    if (a_hi < b_lo) return -1;
    if (b_hi < a_lo) return 1;
  }
}

GrowthRate GrowthRate::squared() const {
  if (!poly_) return GrowthRate(mpq_class(lo_ * lo_));

  const exact::ZPolynomial g = exact::squarefree_part(exact::graeffe(*poly_));
  if (g.degree() == 1) return GrowthRate(mpq_class(-g.coeffs[0], g.coeffs[1]));
  const exact::SturmChain chain(g);
  mpq_class lo = lo_;
  mpq_class hi = hi_;
  for (;;) {
    if (lo == hi) return GrowthRate(mpq_class(lo * lo));
    const mpq_class sq_lo = lo * lo;
    const mpq_class sq_hi = hi * hi;
    if (exact::sign_at(g, sq_lo) != 0 && exact::sign_at(g, sq_hi) != 0 && chain.count_roots(sq_lo, sq_hi) == 1) {
      GrowthRate r;
      r.lo_ = sq_lo;
      r.hi_ = sq_hi;
      r.poly_ = g;
      r.sign_lo_ = exact::sign_at(g, sq_lo);
      const auto [a, b] = r.bracket(64);
      r.approx_ = nearest_double((a + b) / 2);
      r.validate();
      return r;
    }
    refine_once(lo, hi);
  }
}

std::string GrowthRate::str() const {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, approx_);
  *res.ptr = '\0';
  if (!poly_) {
    if (lo_.get_den() == 1 || mpq_class(approx_) == lo_) return buf;
    return std::string(buf) + " (" + lo_.get_str() + ")";
  }
  return std::string(buf) + " (root of " + (source_ ? source_->pretty() : poly_->str()) + ")";
}

}  // namespace teapot
