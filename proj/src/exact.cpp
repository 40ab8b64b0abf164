#include "teapot/exact.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace teapot::exact {

namespace {

template <typename T>
void trim(std::vector<T>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Multiplies by a positive rational so the coefficients become coprime
// integers; the sign of the polynomial is preserved.
ZPolynomial positive_primitive(const QPolynomial& p) {
  if (p.is_zero()) return {};
  mpz_class lcm_den = 1;
  for (const auto& c : p.coeffs) lcm_den = lcm(lcm_den, mpz_class(c.get_den()));
  std::vector<mpz_class> z;
  z.reserve(p.coeffs.size());
  mpz_class g = 0;
  for (const auto& c : p.coeffs) {
    mpz_class v = c.get_num() * (lcm_den / c.get_den());
    g = gcd(g, v);
    z.push_back(std::move(v));
  }
  if (g != 0 && g != 1) {
    for (auto& v : z) v /= g;
  }
  return ZPolynomial(std::move(z));
}

}  // namespace

ZPolynomial::ZPolynomial(std::vector<mpz_class> c) : coeffs(std::move(c)) { trim(coeffs); }

std::string ZPolynomial::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
  os << "]";
  return os.str();
}

QPolynomial::QPolynomial(std::vector<mpq_class> c) : coeffs(std::move(c)) { trim(coeffs); }

QPolynomial::QPolynomial(const ZPolynomial& p) {
  coeffs.reserve(p.coeffs.size());
  for (const auto& c : p.coeffs) coeffs.emplace_back(c);
}

ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return ZPolynomial(std::move(out));
}

ZPolynomial operator-(const ZPolynomial& a, const ZPolynomial& b) {
  std::vector<mpz_class> out(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) out[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out[i] -= b.coeffs[i];
  return ZPolynomial(std::move(out));
}

ZPolynomial derivative(const ZPolynomial& p) {
  if (p.coeffs.size() <= 1) return {};
  std::vector<mpz_class> out(p.coeffs.size() - 1);
  for (std::size_t i = 1; i < p.coeffs.size(); ++i) out[i - 1] = p.coeffs[i] * static_cast<unsigned long>(i);
  return ZPolynomial(std::move(out));
}

ZPolynomial primitive(const QPolynomial& p) {
  ZPolynomial z = positive_primitive(p);
  if (!z.is_zero() && z.leading() < 0) {
    for (auto& c : z.coeffs) c = -c;
  }
  return z;
}

QPolynomial remainder(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<mpq_class> r = a.coeffs;
  const int db = b.degree();
  const mpq_class& lead = b.coeffs.back();
  for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
    if (r[k] == 0) continue;
    const mpq_class factor = r[k] / lead;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= factor * b.coeffs[j];
  }
  if (static_cast<int>(r.size()) > db) r.resize(db < 0 ? 0 : db);
  return QPolynomial(std::move(r));
}

ZPolynomial gcd(const ZPolynomial& a, const ZPolynomial& b) {
  ZPolynomial x = primitive(QPolynomial(a));
  ZPolynomial y = primitive(QPolynomial(b));
  while (!y.is_zero()) {
    ZPolynomial r = primitive(remainder(QPolynomial(x), QPolynomial(y)));
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

ZPolynomial squarefree_part(const ZPolynomial& p) {
  const ZPolynomial g = gcd(p, derivative(p));
  if (g.degree() <= 0) return primitive(QPolynomial(p));
  // Exact division p / g.
  const QPolynomial num(p);
  const QPolynomial den(g);
  std::vector<mpq_class> r = num.coeffs;
  std::vector<mpq_class> q(num.coeffs.size() - den.coeffs.size() + 1, 0);
  const int dd = den.degree();
  for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
    const mpq_class factor = r[k] / den.coeffs.back();
    q[k - dd] = factor;
    for (int j = 0; j <= dd; ++j) r[k - dd + j] -= factor * den.coeffs[j];
  }
  return primitive(QPolynomial(std::move(q)));
}

ZPolynomial graeffe(const ZPolynomial& p) {
  // p(x) = e(x^2) + x o(x^2)  =>  e(y)^2 - y o(y)^2 has the squared roots.
  std::vector<mpz_class> even;
  std::vector<mpz_class> odd;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) (i % 2 == 0 ? even : odd).push_back(p.coeffs[i]);
  const ZPolynomial e(even);
  const ZPolynomial o(odd);
  ZPolynomial y_o2 = o * o;
  y_o2.coeffs.insert(y_o2.coeffs.begin(), mpz_class(0));
  return primitive(QPolynomial(e * e - ZPolynomial(y_o2.coeffs)));
}

mpq_class evaluate(const ZPolynomial& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_at(const ZPolynomial& p, const mpq_class& x) { return sgn(evaluate(p, x)); }

SturmChain::SturmChain(const ZPolynomial& squarefree) {
  if (squarefree.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
  chain_.push_back(squarefree);
  chain_.push_back(derivative(squarefree));
  while (!chain_.back().is_zero() && chain_.back().degree() > 0) {
    const QPolynomial r = remainder(QPolynomial(chain_[chain_.size() - 2]), QPolynomial(chain_.back()));
    std::vector<mpq_class> neg = r.coeffs;
    for (auto& c : neg) c = -c;
    ZPolynomial next = positive_primitive(QPolynomial(std::move(neg)));
    if (next.is_zero()) break;
    chain_.push_back(std::move(next));
  }
  if (chain_.back().is_zero()) chain_.pop_back();
}

int SturmChain::variations(const mpq_class& x) const {
  int count = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmChain::count_roots(const mpq_class& a, const mpq_class& b) const {
  return variations(a) - variations(b);
}

}  // namespace teapot::exact
