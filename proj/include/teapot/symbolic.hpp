#pragma once

// Words and eventually periodic sequences over the alphabet {0, 1}.
//
// Letters are indexed from 0. The cumulative sign of a word is (-1)^(number of
// ones); the twisted lexicographic order compares two words at their first
// difference, reversing the usual direction when the common prefix has
// negative sign.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace teapot {

using Letter = std::uint8_t;

class Word {
 public:
  Word() = default;
  explicit Word(std::string_view bits);
  explicit Word(std::span<const Letter> letters);
  Word(std::initializer_list<int> letters);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  Letter operator[](std::size_t i) const {
    return static_cast<Letter>((blocks_[i / 64] >> (i % 64)) & 1U);
  }

  // +1 or -1.
  int sign() const { return prefix_sign(size_); }
  // Sign of the first k letters.
  int prefix_sign(std::size_t k) const;
  std::size_t ones() const { return prefix_ones(size_); }
  std::size_t prefix_ones(std::size_t k) const;

  Word prefix(std::size_t k) const;
  Word suffix(std::size_t k) const;
  Word substr(std::size_t pos, std::size_t len) const;
  Word reversed() const;
  // Rotation by k: letters k, k+1, ..., k-1.
  Word rotated(std::size_t k) const;
  Word with_flipped(std::size_t i) const;

  std::vector<Letter> letters() const;
  std::string str() const;

  friend Word operator+(const Word& a, const Word& b);
  friend Word operator+(const Word& a, Letter b);
  friend bool operator==(const Word& a, const Word& b) {
    return a.size_ == b.size_ && a.blocks_ == b.blocks_;
  }

  // Index of the first differing letter of two equal-length words, or size().
  friend std::size_t first_difference(const Word& a, const Word& b);

 private:
  void build_index();

  std::vector<std::uint64_t> blocks_;
  std::size_t size_ = 0;
  // ones_before_[b] = number of ones in blocks [0, b).
  std::vector<std::uint32_t> ones_before_;
};

Word repeat(const Word& w, std::size_t times);

// preperiod . period^infinity, kept in its unique minimal form: the period is
// primitive and, when the preperiod is nonempty, its last letter differs from
// the last letter of the period.
class SymbolSeq {
 public:
  SymbolSeq(Word preperiod, Word period);
  static SymbolSeq periodic(Word period) { return SymbolSeq(Word{}, std::move(period)); }

  const Word& preperiod() const { return pre_; }
  const Word& period() const { return per_; }
  bool is_periodic() const { return pre_.empty(); }

  Letter operator[](std::size_t i) const {
    return i < pre_.size() ? pre_[i] : per_[(i - pre_.size()) % per_.size()];
  }
  Word prefix(std::size_t n) const;
  std::string str() const;

  friend bool operator==(const SymbolSeq&, const SymbolSeq&) = default;

 private:
  Word pre_;
  Word per_;
};

// Throws std::invalid_argument when the lengths differ.
std::strong_ordering twisted_compare(const Word& a, const Word& b);
std::strong_ordering twisted_compare(const SymbolSeq& a, const SymbolSeq& b);

SymbolSeq shift(const SymbolSeq& s, std::size_t k);

bool is_admissible(const Word& w);
bool is_admissible(const SymbolSeq& s);
bool is_dominant(const Word& w);

// 1 -> 10, 0 -> 11.
Word doubling(const Word& w);
SymbolSeq doubling(const SymbolSeq& s);
// 0 -> 11, 1 -> 01.
Word doubling_prime(const Word& w);
SymbolSeq doubling_prime(const SymbolSeq& s);

// Inverse of doubling; nullopt when the input is not a doubling.
std::optional<Word> renormalize(const Word& w);
std::optional<SymbolSeq> renormalize(const SymbolSeq& s);

}  // namespace teapot
