#pragma once

// F(w, z), Parry polynomials and the kneading power series G and H.
//
// f_{0,z}(x) = z x and f_{1,z}(x) = 2 - z x; F(w, z) applies f_{w_1,z} first.
// With s_k the cumulative sign of the first k letters of w:
//   G(w, z) = sum_{k>=1} 2 w_k s_{k-1} z^{k-1}        (|z| < 1)
//   H(w, z) = 1 - sum_{k>=1} 2 w_k s_{k-1} z^{-k}     (|z| > 1)
// and for a word w of length n with positive sign
//   P_w(z) = (1 - z^n)(G(Reverse(w)^inf, z) - 1) = (z^n - 1) H(w^inf, z).

#include <complex>
#include <cstddef>
#include <vector>

#include "teapot/polynomial.hpp"
#include "teapot/symbolic.hpp"

namespace teapot {

std::complex<double> F_eval(const Word& w, std::complex<double> z);
IntPolynomial F_polynomial(const Word& w);
// F(w, z) - 1; throws NegativeSignWord unless w has positive sign.
IntPolynomial parry_polynomial(const Word& w);

enum class SeriesKind { G, H };

// Truncation of G (a series in z) or H (a series in u = 1/z).
class SeriesPartial {
 public:
  SeriesPartial(SeriesKind kind, std::vector<int> coefficients);

  SeriesKind kind() const { return kind_; }
  const std::vector<int>& coefficients() const { return coeffs_; }
  std::size_t length() const { return coeffs_.size(); }

  // Partial sum at z (H is evaluated at u = 1/z).
  std::complex<double> evaluate(std::complex<double> z) const;
  // Bound on |full series - partial sum| at z; infinite outside the domain.
  double tail_bound(std::complex<double> z) const;
  // Coefficients as a polynomial in z (G) or u (H).
  IntPolynomial polynomial() const;

 private:
  SeriesKind kind_;
  std::vector<int> coeffs_;
};

// First n coefficients g_0..g_{n-1}; needs at least n letters.
SeriesPartial g_series(const Word& letters, std::size_t n);
SeriesPartial g_series(const SymbolSeq& seq, std::size_t n);
// First n coefficients h_0..h_{n-1}; needs at least n - 1 letters.
SeriesPartial h_series(const Word& letters, std::size_t n);
SeriesPartial h_series(const SymbolSeq& seq, std::size_t n);

// Relative discrepancy |P_w(z) - series side| / max(1, |P_w(z)|), using the
// G form inside the unit disk and the H form outside.
double verify_ghp(const Word& w, std::complex<double> z);

}  // namespace teapot
