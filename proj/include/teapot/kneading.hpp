#pragma once

// Orbits of the critical value 1 under the tent map f(x) = lambda x for
// x <= 1/lambda and 2 - lambda x otherwise, and their symbolic codings.
//
// Orbits are computed with MPFR at a working precision that carries a
// rigorous forward error bound. When a point cannot be separated from the
// critical point 1/lambda, the precision is doubled up to a cap; after that
// the question is settled exactly from the algebraic description of lambda.

#include <cstddef>
#include <optional>
#include <vector>

#include "teapot/growth_rate.hpp"
#include "teapot/symbolic.hpp"

namespace teapot {

struct KneadingOptions {
  // 0 selects 2n + 64 bits for an orbit of length n.
  unsigned initial_precision = 0;
  // 0 selects four times the initial precision.
  unsigned max_precision = 0;
  // Decide unresolved comparisons with exact arithmetic once the cap is hit.
  // When false, such a comparison raises PrecisionExhausted.
  bool exact_fallback = true;
};

struct OrbitPoint {
  double value;
  // |true value - value| <= error.
  double error;
};

// x_0 = 1, ..., x_n.
std::vector<OrbitPoint> tent_orbit(const GrowthRate& lambda, std::size_t n, const KneadingOptions& options = {});

struct ItineraryPrefix {
  GrowthRate lambda;
  Word letters;
  // Indices k at which x_k = 1/lambda exactly.
  std::vector<std::size_t> ambiguity_resolved_at;
  // Set when an exact critical hit was found inside the prefix; the
  // itinerary is then period^infinity.
  std::optional<Word> period;
  // The hit was confirmed by an exact Parry-polynomial test.
  bool period_confirmed_exactly = false;
  unsigned precision_bits = 0;

  std::optional<SymbolSeq> sequence() const;
};

ItineraryPrefix itinerary_prefix(const GrowthRate& lambda, std::size_t n, const KneadingOptions& options = {});

// n-prefix of the limit of It_mu as mu decreases to lambda.
Word right_limit_itinerary(const GrowthRate& lambda, std::size_t n, const KneadingOptions& options = {});

// k with It+ = 1 0^k 1 ...; requires lambda < 2.
std::size_t zero_run_bound(const GrowthRate& lambda, const KneadingOptions& options = {});

}  // namespace teapot
