#include "teapot/suitability.hpp"

#include <algorithm>
#include <stdexcept>

#include "teapot/kneading.hpp"

namespace teapot {

SuitabilityContext make_suitability_context(const GrowthRate& lambda, std::size_t n) {
  SuitabilityContext ctx{lambda, right_limit_itinerary(lambda, std::max<std::size_t>(n, 2)), {}, zero_run_bound(lambda)};
  ctx.itplus_prefix_signs.resize(ctx.itplus_prefix.size() + 1);
  for (std::size_t i = 0; i <= ctx.itplus_prefix.size(); ++i) ctx.itplus_prefix_signs[i] = ctx.itplus_prefix.prefix_sign(i);
  return ctx;
}

bool condition_at(std::span<const Letter> alpha, const SuitabilityContext& ctx) {
  const std::size_t n = alpha.size();
  if (n == 0) return true;
  if (n > ctx.itplus_prefix.size()) throw std::length_error("word longer than the suitability context");

  std::size_t zeros = 0;
  while (zeros < n && alpha[n - 1 - zeros] == 0) ++zeros;
  if (zeros > ctx.zero_bound) return false;

  // Reverse(alpha) against Prefix_n(It+), letter by letter.
  int sign = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const int r = alpha[n - 1 - i];
    const int t = ctx.itplus_prefix[i];
    if (r != t) return sign * (t - r) > 0;
    if (r) sign = -sign;
  }
  // Equal: allowed only when the prefix has negative cumulative sign.
  return sign < 0;
}

bool prefix_conditions(const Word& alpha, const SuitabilityContext& ctx) {
  if (alpha.size() > ctx.itplus_prefix.size()) throw std::length_error("word longer than the suitability context");
  const auto letters = alpha.letters();
  for (std::size_t n = 1; n <= letters.size(); ++n) {
    if (!condition_at(std::span<const Letter>(letters.data(), n), ctx)) return false;
  }
  return true;
}

std::vector<Word> enumerate_M(const SuitabilityContext& ctx, std::size_t n) {
  if (n > ctx.itplus_prefix.size()) throw std::length_error("depth exceeds the suitability context");
  std::vector<Word> out;
  std::vector<Letter> stack;
  stack.reserve(n);
  // Conditions are prefix-closed, so a failing prefix ends its subtree.
  auto dfs = [&](auto&& self) -> void {
    if (stack.size() == n) {
      out.emplace_back(std::span<const Letter>(stack));
      return;
    }
    for (Letter a : {Letter{0}, Letter{1}}) {
      stack.push_back(a);
      if (condition_at(stack, ctx)) self(self);
      stack.pop_back();
    }
  };
  dfs(dfs);
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return a.str() < b.str(); });
  return out;
}

std::vector<Word> enumerate_M(const GrowthRate& lambda, std::size_t n) {
  if (lambda.sign_of(exact::ZPolynomial({mpz_class(-2), mpz_class(0), mpz_class(1)})) < 0 ||
      lambda.compare(mpq_class(2)) >= 0) {
    throw std::invalid_argument("enumerate_M needs lambda in [sqrt 2, 2)");
  }
  return enumerate_M(make_suitability_context(lambda, n), n);
}

}  // namespace teapot
