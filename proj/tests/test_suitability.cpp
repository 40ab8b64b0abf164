#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "support.hpp"
#include "teapot/atlas.hpp"
#include "teapot/growth_rate.hpp"
#include "teapot/parry_series.hpp"
#include "teapot/suitability.hpp"

using namespace teapot;
using teapot::testing::all_words;

namespace {

GrowthRate rate(const char* text) { return GrowthRate::parse(text); }

std::set<std::string> as_set(const std::vector<Word>& words) {
  std::set<std::string> out;
  for (const auto& w : words) out.insert(w.str());
  return out;
}

bool subset(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_CASE("context") {
  const SuitabilityContext ctx = make_suitability_context(rate("1.82"), 20);
  CHECK(ctx.itplus_prefix.prefix(2) == Word("10"));
  CHECK(ctx.zero_bound == 2);
  REQUIRE(ctx.itplus_prefix_signs.size() == 21);
  for (std::size_t i = 0; i <= 20; ++i) CHECK(ctx.itplus_prefix_signs[i] == ctx.itplus_prefix.prefix_sign(i));
  for (const char* l : {"poly:-2,0,1", "1.5", "1.7", "1.95", "1.999"}) {
    const SuitabilityContext c = make_suitability_context(rate(l), 10);
    CHECK(c.zero_bound >= 1);
    CHECK(c.itplus_prefix.prefix(2) == Word("10"));
  }
}

TEST_CASE("prefix conditions") {
  const SuitabilityContext ctx = make_suitability_context(rate("1.85"), 20);
  const SymbolSeq rev = SymbolSeq::periodic(Word("1001").reversed());
  for (std::size_t n = 1; n <= 20; ++n) CHECK(prefix_conditions(rev.prefix(n), ctx));

  const SuitabilityContext c182 = make_suitability_context(rate("1.82"), 10);
  REQUIRE(c182.zero_bound == 2);
  CHECK_FALSE(prefix_conditions(Word("1000"), c182));
  CHECK_FALSE(prefix_conditions(Word("0001"), c182));
  CHECK(prefix_conditions(Word("1"), c182));
  CHECK(prefix_conditions(Word("0"), c182));
  CHECK_THROWS_AS(prefix_conditions(teapot::testing::random_word(11), c182), std::length_error);
}

TEST_CASE("M sets") {
  CHECK(as_set(enumerate_M(rate("1.8"), 1)) == std::set<std::string>{"0", "1"});
  CHECK(enumerate_M(rate("1.8"), 10).size() < 1024);
  CHECK(subset(as_set(enumerate_M(rate("1.7"), 14)), as_set(enumerate_M(rate("1.9"), 14))));
  CHECK_THROWS(enumerate_M(rate("1.3"), 5));
  CHECK_THROWS(enumerate_M(rate("2"), 5));
}

TEST_CASE("M sets are prefix closed") {
  for (const char* l : {"1.45", "1.8", "poly:-1,-1,-1,1"}) {
    const GrowthRate lam = rate(l);
    std::vector<std::set<std::string>> levels;
    for (std::size_t n = 1; n <= 12; ++n) levels.push_back(as_set(enumerate_M(lam, n)));
    for (std::size_t n = 2; n <= 12; ++n) {
      for (const auto& w : levels[n - 1]) REQUIRE(levels[n - 2].count(w.substr(0, n - 1)) == 1);
    }
  }
}

TEST_CASE("M sets grow with lambda") {
  const std::vector<GrowthRate> rates = {rate("poly:-2,0,1"), rate("1.5"),  rate("poly:-1,-1,1"),
                                         rate("1.7"),         rate("1.8"),  rate("poly:-1,-1,-1,1"),
                                         rate("1.9"),         rate("1.99")};
  for (std::size_t n : {4, 9, 14}) {
    std::vector<std::set<std::string>> sets;
    for (const auto& r : rates) sets.push_back(as_set(enumerate_M(r, n)));
    for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
      for (std::size_t j = i + 1; j < sets.size(); ++j) CHECK(subset(sets[i], sets[j]));
    }
  }
}

TEST_CASE("DFS enumeration equals brute-force filtering") {
  for (const char* l : {"poly:-2,0,1", "1.5", "poly:-1,-1,1", "1.82", "poly:-1,-1,-1,1", "1.95"}) {
    const SuitabilityContext ctx = make_suitability_context(rate(l), 12);
    for (std::size_t n = 1; n <= 12; ++n) {
      std::vector<Word> brute;
      for (const auto& w : all_words(n)) {
        if (prefix_conditions(w, ctx)) brute.push_back(w);
      }
      const std::vector<Word> dfs = enumerate_M(ctx, n);
      REQUIRE(as_set(dfs) == as_set(brute));
      REQUIRE(dfs.size() == brute.size());
    }
  }
}

TEST_CASE("reversed admissible words below lambda are suitable") {
  const std::vector<GrowthRate> rates = {rate("1.5"), rate("1.7"), rate("1.82"), rate("1.9"), rate("1.99")};
  std::vector<SuitabilityContext> ctxs;
  for (const auto& r : rates) ctxs.push_back(make_suitability_context(r, 14));
  std::size_t checked = 0;
  for (const Word& w : admissible_words(10)) {
    GrowthRate lead(mpq_class(2));
    try {
      lead = GrowthRate::leading_root_of(parry_polynomial(w));
    } catch (const std::invalid_argument&) {
      continue;
    }
    const SymbolSeq rev = SymbolSeq::periodic(w.reversed());
    for (const auto& ctx : ctxs) {
      if (lead.compare(ctx.lambda) >= 0) continue;
      for (std::size_t n = 1; n <= 14; ++n) REQUIRE_MESSAGE(prefix_conditions(rev.prefix(n), ctx), w.str());
      ++checked;
    }
  }
  CHECK(checked > 100);
}
