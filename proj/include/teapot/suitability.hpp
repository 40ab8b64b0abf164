#pragma once

// Prefix-level lambda-suitability and the word sets M_{N,lambda}.
//
// The definition quantifies over every lambda' > lambda. Reversed prefixes
// must stay <=_E Prefix_n(It_lambda') for all such lambda'; since the
// n-prefixes of It_lambda' increase with lambda' and stabilize as lambda'
// decreases to lambda, the binding comparison is against the right-limit
// itinerary It+. Equality with that prefix is attained by nearby lambda', so
// it is allowed only when the prefix has negative sign. The leading zero run
// of It_lambda' is nondecreasing in lambda', so the zero-run condition binds
// at It+ as well.

#include <cstddef>
#include <span>
#include <vector>

#include "teapot/growth_rate.hpp"
#include "teapot/symbolic.hpp"

namespace teapot {

struct SuitabilityContext {
  GrowthRate lambda;
  Word itplus_prefix;
  // itplus_prefix_signs[i] = sign of the first i letters of It+.
  std::vector<int> itplus_prefix_signs;
  std::size_t zero_bound = 0;
};

// It+ prefix of length n; requires lambda < 2.
SuitabilityContext make_suitability_context(const GrowthRate& lambda, std::size_t n);

// Conditions at the single length n = alpha.size(): the reversed prefix test
// and the trailing zero run. Extending a passing prefix letter by letter and
// calling this at each step checks every length.
bool condition_at(std::span<const Letter> alpha, const SuitabilityContext& ctx);

// Conditions for every n <= |alpha|; throws std::length_error when alpha is
// longer than the context prefix.
bool prefix_conditions(const Word& alpha, const SuitabilityContext& ctx);

// Sorted words of length n satisfying the conditions; lambda in [sqrt 2, 2).
std::vector<Word> enumerate_M(const GrowthRate& lambda, std::size_t n);
std::vector<Word> enumerate_M(const SuitabilityContext& ctx, std::size_t n);

}  // namespace teapot
