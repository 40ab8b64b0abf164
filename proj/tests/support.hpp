#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "teapot/symbolic.hpp"

namespace teapot::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline Word random_word(std::size_t len) {
  std::vector<Letter> v(len);
  std::bernoulli_distribution coin(0.5);
  for (auto& x : v) x = coin(rng()) ? 1 : 0;
  return Word(std::span<const Letter>(v));
}

// Word whose bits are those of `bits`, least significant first.
inline Word word_from_bits(std::uint64_t bits, std::size_t len) {
  std::vector<Letter> v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = static_cast<Letter>((bits >> i) & 1U);
  return Word(std::span<const Letter>(v));
}

inline std::vector<Word> all_words(std::size_t len) {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << len);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << len); ++b) out.push_back(word_from_bits(b, len));
  return out;
}

inline Word random_positive_word(std::size_t len) {
  Word w = random_word(len);
  return w.sign() == 1 ? w : w.with_flipped(len - 1);
}

}  // namespace teapot::testing
