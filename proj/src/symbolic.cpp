#include "teapot/symbolic.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace teapot {

namespace {

std::vector<std::uint64_t> pack(std::span<const Letter> letters) {
  std::vector<std::uint64_t> blocks((letters.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] > 1) throw std::invalid_argument("word letters must be 0 or 1");
    if (letters[i]) blocks[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return blocks;
}

std::vector<Letter> parse_bits(std::string_view bits) {
  std::vector<Letter> out;
  out.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("word must consist of '0' and '1', got '" + std::string(bits) + "'");
    }
    out.push_back(static_cast<Letter>(c - '0'));
  }
  return out;
}

}  // namespace

Word::Word(std::span<const Letter> letters) : blocks_(pack(letters)), size_(letters.size()) {
  build_index();
}

Word::Word(std::string_view bits) : Word(std::span<const Letter>(parse_bits(bits))) {}

Word::Word(std::initializer_list<int> letters) {
  std::vector<Letter> v;
  v.reserve(letters.size());
  for (int a : letters) {
    if (a != 0 && a != 1) throw std::invalid_argument("word letters must be 0 or 1");
    v.push_back(static_cast<Letter>(a));
  }
  *this = Word(std::span<const Letter>(v));
}

void Word::build_index() {
  ones_before_.assign(blocks_.size() + 1, 0);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    ones_before_[b + 1] = ones_before_[b] + static_cast<std::uint32_t>(std::popcount(blocks_[b]));
  }
}

std::size_t Word::prefix_ones(std::size_t k) const {
  if (k > size_) throw std::out_of_range("prefix longer than word");
  const std::size_t b = k / 64;
  const std::size_t r = k % 64;
  std::size_t ones = ones_before_[b];
  if (r != 0) ones += static_cast<std::size_t>(std::popcount(blocks_[b] & ((std::uint64_t{1} << r) - 1)));
  return ones;
}

int Word::prefix_sign(std::size_t k) const { return (prefix_ones(k) % 2 == 0) ? 1 : -1; }

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = (*this)[i];
  return out;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos + len > size_) throw std::out_of_range("substring exceeds word");
  std::vector<Letter> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = (*this)[pos + i];
  return Word(std::span<const Letter>(out));
}

Word Word::prefix(std::size_t k) const { return substr(0, k); }

Word Word::suffix(std::size_t k) const {
  if (k > size_) throw std::out_of_range("suffix longer than word");
  return substr(size_ - k, k);
}

Word Word::reversed() const {
  std::vector<Letter> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = (*this)[size_ - 1 - i];
  return Word(std::span<const Letter>(out));
}

Word Word::rotated(std::size_t k) const {
  if (size_ == 0) return *this;
  std::vector<Letter> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = (*this)[(i + k) % size_];
  return Word(std::span<const Letter>(out));
}

Word Word::with_flipped(std::size_t i) const {
  auto v = letters();
  v.at(i) ^= 1U;
  return Word(std::span<const Letter>(v));
}

std::string Word::str() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) s[i] = static_cast<char>('0' + (*this)[i]);
  return s;
}

Word operator+(const Word& a, const Word& b) {
  auto v = a.letters();
  auto w = b.letters();
  v.insert(v.end(), w.begin(), w.end());
  return Word(std::span<const Letter>(v));
}

Word operator+(const Word& a, Letter b) {
  auto v = a.letters();
  v.push_back(b);
  return Word(std::span<const Letter>(v));
}

std::size_t first_difference(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.size_, b.size_);
  for (std::size_t blk = 0; blk * 64 < n; ++blk) {
    const std::uint64_t x = a.blocks_[blk] ^ b.blocks_[blk];
    if (x != 0) return std::min(n, blk * 64 + static_cast<std::size_t>(std::countr_zero(x)));
  }
  return n;
}

Word repeat(const Word& w, std::size_t times) {
  std::vector<Letter> out;
  out.reserve(w.size() * times);
  const auto v = w.letters();
  for (std::size_t t = 0; t < times; ++t) out.insert(out.end(), v.begin(), v.end());
  return Word(std::span<const Letter>(out));
}

// ---------------------------------------------------------------------------

SymbolSeq::SymbolSeq(Word preperiod, Word period) : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) throw std::invalid_argument("period of a sequence must be nonempty");

  const std::size_t n = per_.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d == 0 && per_.rotated(d) == per_) {
      per_ = per_.prefix(d);
      break;
    }
  }
  while (!pre_.empty() && pre_[pre_.size() - 1] == per_[per_.size() - 1]) {
    per_ = per_.rotated(per_.size() - 1);
    pre_ = pre_.prefix(pre_.size() - 1);
  }
}

Word SymbolSeq::prefix(std::size_t n) const {
  std::vector<Letter> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (*this)[i];
  return Word(std::span<const Letter>(out));
}

std::string SymbolSeq::str() const { return pre_.str() + "(" + per_.str() + ")^inf"; }

// ---------------------------------------------------------------------------

std::strong_ordering twisted_compare(const Word& a, const Word& b) {
  if (a.size() != b.size()) throw std::invalid_argument("twisted_compare: words of unequal length");
  const std::size_t k = first_difference(a, b);
  if (k == a.size()) return std::strong_ordering::equal;
  const int s = a.prefix_sign(k);
  return s * (int(b[k]) - int(a[k])) > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::strong_ordering twisted_compare(const SymbolSeq& a, const SymbolSeq& b) {
  const std::size_t horizon = std::max(a.preperiod().size(), b.preperiod().size()) +
                              std::lcm(a.period().size(), b.period().size());
  int s = 1;
  for (std::size_t i = 0; i < horizon; ++i) {
    const int x = a[i];
    const int y = b[i];
    if (x != y) return s * (y - x) > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (x == 1) s = -s;
  }
  return std::strong_ordering::equal;
}

SymbolSeq shift(const SymbolSeq& s, std::size_t k) {
  const auto& pre = s.preperiod();
  if (k <= pre.size()) return SymbolSeq(pre.suffix(pre.size() - k), s.period());
  return SymbolSeq::periodic(s.period().rotated((k - pre.size()) % s.period().size()));
}

bool is_admissible(const Word& w) {
  if (w.size() < 2 || w[0] != 1 || w[1] != 0 || w.sign() != 1) return false;
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (twisted_compare(w.rotated(k), w) == std::strong_ordering::greater) return false;
  }
  return true;
}

bool is_admissible(const SymbolSeq& s) {
  if (s[0] != 1 || s[1] != 0) return false;
  const std::size_t span = s.preperiod().size() + s.period().size();
  for (std::size_t k = 1; k < span; ++k) {
    if (twisted_compare(shift(s, k), s) == std::strong_ordering::greater) return false;
  }
  return true;
}

bool is_dominant(const Word& w) {
  // The one-letter word 0 satisfies the suffix test vacuously; dominant
  // words are meant to begin with 1.
  if (w.empty() || w[0] != 1 || w.sign() != 1) return false;
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (twisted_compare(w.suffix(k) + Letter{1}, w.prefix(k + 1)) != std::strong_ordering::less) return false;
  }
  return true;
}

namespace {

template <Letter First0, Letter Second0, Letter First1, Letter Second1>
Word substitute(const Word& w) {
  std::vector<Letter> out;
  out.reserve(2 * w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) {
      out.push_back(First0);
      out.push_back(Second0);
    } else {
      out.push_back(First1);
      out.push_back(Second1);
    }
  }
  return Word(std::span<const Letter>(out));
}

}  // namespace

Word doubling(const Word& w) { return substitute<1, 1, 1, 0>(w); }
SymbolSeq doubling(const SymbolSeq& s) { return SymbolSeq(doubling(s.preperiod()), doubling(s.period())); }

Word doubling_prime(const Word& w) { return substitute<1, 1, 0, 1>(w); }
SymbolSeq doubling_prime(const SymbolSeq& s) {
  return SymbolSeq(doubling_prime(s.preperiod()), doubling_prime(s.period()));
}

std::optional<Word> renormalize(const Word& w) {
  if (w.size() % 2 != 0) return std::nullopt;
  std::vector<Letter> out(w.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (w[2 * i] != 1) return std::nullopt;
    out[i] = static_cast<Letter>(1 - w[2 * i + 1]);
  }
  return Word(std::span<const Letter>(out));
}

std::optional<SymbolSeq> renormalize(const SymbolSeq& s) {
  Word pre = s.preperiod();
  Word per = s.period();
  if (pre.size() % 2 != 0) {
    pre = pre + per[0];
    per = per.rotated(1);
  }
  if (per.size() % 2 != 0) per = per + per;
  auto pre_r = renormalize(pre);
  auto per_r = renormalize(per);
  if (!pre_r || !per_r) return std::nullopt;
  return SymbolSeq(std::move(*pre_r), std::move(*per_r));
}

}  // namespace teapot
