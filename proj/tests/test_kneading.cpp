#include <doctest.h>

#include <cmath>
#include <gmpxx.h>

#include "teapot/atlas.hpp"
#include "teapot/errors.hpp"
#include "teapot/growth_rate.hpp"
#include "teapot/kneading.hpp"
#include "teapot/parry_series.hpp"
#include "teapot/symbolic.hpp"

using namespace teapot;

namespace {

GrowthRate rate(const char* text) { return GrowthRate::parse(text); }

const char* kSqrt2 = "poly:-2,0,1";
const char* kGolden = "poly:-1,-1,1";
const char* kTribonacci = "poly:-1,-1,-1,1";

bool near(const OrbitPoint& p, double exact) { return std::abs(p.value - exact) <= p.error + 4e-16; }

// Minimal coding of the orbit of 1, computed with exact sign tests on the
// orbit points as polynomials in lambda. Every combination of letters at
// critical hits is tried and the <=_E-least coding returned.
Word brute_force_itinerary(const GrowthRate& lambda, std::size_t n) {
  using exact::ZPolynomial;
  ZPolynomial x({mpz_class(1)});
  std::vector<int> forced(n, -1);
  for (std::size_t k = 0; k < n; ++k) {
    // lambda x - 1
    std::vector<mpz_class> lx(x.coeffs.size() + 1, 0);
    for (std::size_t i = 0; i < x.coeffs.size(); ++i) lx[i + 1] = x.coeffs[i];
    const ZPolynomial lam_x(lx);
    const int s = lambda.sign_of(lam_x - ZPolynomial({mpz_class(1)}));
    if (s == 0) {
      x = ZPolynomial({mpz_class(1)});
      continue;
    }
    forced[k] = s < 0 ? 0 : 1;
    x = s < 0 ? lam_x : ZPolynomial({mpz_class(2)}) - lam_x;
  }
  std::vector<std::size_t> free;
  for (std::size_t k = 0; k < n; ++k) {
    if (forced[k] < 0) free.push_back(k);
  }
  std::optional<Word> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    std::vector<Letter> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = static_cast<Letter>(forced[k] < 0 ? 0 : forced[k]);
    for (std::size_t j = 0; j < free.size(); ++j) v[free[j]] = static_cast<Letter>((mask >> j) & 1U);
    const Word w{std::span<const Letter>(v)};
    if (!best || twisted_compare(w, *best) == std::strong_ordering::less) best = w;
  }
  return *best;
}

}  // namespace

TEST_CASE("tent orbits") {
  const auto two = tent_orbit(rate("2"), 4);
  REQUIRE(two.size() == 5);
  CHECK(near(two[0], 1.0));
  for (std::size_t k = 1; k < two.size(); ++k) CHECK(near(two[k], 0.0));

  const double r2 = std::sqrt(2.0);
  const auto s = tent_orbit(rate(kSqrt2), 5);
  CHECK(near(s[0], 1.0));
  CHECK(near(s[1], 2.0 - r2));
  CHECK(near(s[2], 2.0 * r2 - 2.0));
  CHECK(near(s[3], 2.0 * r2 - 2.0));
  CHECK(near(s[5], 2.0 * r2 - 2.0));

  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const auto g = tent_orbit(rate(kGolden), 3);
  CHECK(near(g[2], 1.0 / phi));
  CHECK(near(g[3], 1.0));
  for (const auto& p : g) CHECK(p.error < 1e-15);
}

TEST_CASE("itinerary prefixes") {
  CHECK(itinerary_prefix(rate("2"), 5).letters == Word("10000"));
  CHECK(itinerary_prefix(rate(kSqrt2), 5).letters == Word("10111"));
  CHECK(itinerary_prefix(rate("1.4142135623730951"), 5).letters == Word("10111"));

  const auto g = itinerary_prefix(rate(kGolden), 6);
  CHECK(g.letters == Word("101101"));
  CHECK(g.ambiguity_resolved_at == std::vector<std::size_t>{2, 5});
  REQUIRE(g.sequence().has_value());
  CHECK(*g.sequence() == SymbolSeq::periodic(Word("101")));

  const auto t = itinerary_prefix(rate(kTribonacci), 12);
  CHECK(t.letters == Word("100110011001"));
  REQUIRE(t.period.has_value());
  CHECK(*t.period == Word("1001"));
  CHECK(t.period_confirmed_exactly);
  CHECK(t.precision_bits >= 2 * 12 + 64);
}

TEST_CASE("itinerary of 1.82") {
  const auto it = itinerary_prefix(rate("1.82"), 30);
  CHECK(it.letters == Word("100110110111101011011111101110"));
  CHECK_FALSE(it.period.has_value());
  CHECK(it.ambiguity_resolved_at.empty());
}

TEST_CASE("right-limit itineraries") {
  CHECK(right_limit_itinerary(rate(kTribonacci), 12) == Word("100010001000"));
  CHECK(right_limit_itinerary(rate(kGolden), 9) == Word("100100100"));
  const GrowthRate l = rate("1.82");
  const Word plus = right_limit_itinerary(l, 40);
  CHECK(plus == itinerary_prefix(l, 40).letters);
  CHECK(plus.prefix(4) == Word("1001"));
  // The critical hit lies beyond a short prefix: the prefixes still agree.
  CHECK(right_limit_itinerary(rate(kTribonacci), 3) == Word("100"));
}

TEST_CASE("zero-run bound") {
  CHECK(zero_run_bound(rate("1.82")) == 2);
  CHECK(zero_run_bound(rate("1.9")) == 3);
  CHECK(zero_run_bound(rate(kSqrt2)) == 1);
  CHECK(zero_run_bound(rate(kTribonacci)) == 3);
  CHECK_THROWS(zero_run_bound(rate("2")));
}

TEST_CASE("without the exact fallback, critical hits exhaust precision") {
  KneadingOptions opts;
  opts.exact_fallback = false;
  CHECK_THROWS_AS(itinerary_prefix(rate(kGolden), 6, opts), PrecisionExhausted);
  CHECK_THROWS_AS(right_limit_itinerary(rate(kGolden), 6, opts), PeriodUndetected);
  CHECK_NOTHROW(itinerary_prefix(rate("1.82"), 50, opts));
}

TEST_CASE("doubling carries It(lambda^2) to It(lambda)") {
  for (const char* text : {"1.15", "1.3", "1.41"}) {
    const GrowthRate l = rate(text);
    const GrowthRate l2 = l.squared();
    const Word small = itinerary_prefix(l, 64).letters;
    const Word big = itinerary_prefix(l2, 32).letters;
    CHECK_MESSAGE(small == doubling(big), text);
  }
}

TEST_CASE("itineraries increase with lambda") {
  std::vector<GrowthRate> rates;
  for (int i = 1; i <= 40; ++i) rates.emplace_back(mpq_class(100 + 2 * i + (i % 3), 100));
  rates.push_back(rate(kGolden));
  rates.push_back(rate(kTribonacci));
  rates.push_back(rate(kSqrt2));
  rates.push_back(rate("2"));
  for (std::size_t a = 0; a < rates.size(); ++a) {
    for (std::size_t b = 0; b < rates.size(); ++b) {
      if (rates[a].compare(rates[b]) >= 0) continue;
      const Word pa = itinerary_prefix(rates[a], 64).letters;
      const Word pb = itinerary_prefix(rates[b], 64).letters;
      REQUIRE(twisted_compare(pa, pb) != std::strong_ordering::greater);
    }
  }
}

TEST_CASE("itinerary prefixes dominate their shifts") {
  for (int i = 1; i <= 50; ++i) {
    const GrowthRate l(mpq_class(100 + 2 * i, 100));
    const Word p = itinerary_prefix(l, 64).letters;
    for (std::size_t k = 1; k < p.size(); ++k) {
      const std::size_t len = p.size() - k;
      REQUIRE(twisted_compare(p.substr(k, len), p.prefix(len)) != std::strong_ordering::greater);
    }
  }
}

TEST_CASE("greedy choice at critical hits matches brute force") {
  std::size_t periodic_cases = 0;
  for (const Word& w : admissible_words(10)) {
    GrowthRate l(mpq_class(2));
    try {
      l = GrowthRate::leading_root_of(parry_polynomial(w));
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (l.compare(mpq_class(2)) == 0) continue;
    const std::size_t n = 3 * w.size();
    const ItineraryPrefix it = itinerary_prefix(l, n);
    const Word oracle = brute_force_itinerary(l, n);
    REQUIRE_MESSAGE(it.letters == oracle, w.str());
    if (it.period) ++periodic_cases;
  }
  CHECK(periodic_cases > 20);
}
