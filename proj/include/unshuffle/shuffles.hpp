#pragma once

// The five deck shuffles on 2n cards as explicit permutations:
//   L  left unshuffle   (deal into two piles, left pile on top)
//   R  right unshuffle  (right pile on top)
//   I  in shuffle, O  out shuffle (perfect interlacing)
//   V  reversal
// and words over them. Words are stored in performance order: the first
// symbol is the first shuffle done to the deck.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "unshuffle/permutation.hpp"

namespace unshuffle {

class DeckSize {
 public:
  static constexpr std::uint32_t kMaxCards = 1u << 20;

  /// Throws std::invalid_argument unless `two_n` is even and in [2, 2^20].
  explicit DeckSize(std::uint64_t two_n);

  std::uint32_t two_n() const { return two_n_; }
  std::uint32_t n() const { return two_n_ / 2; }
  bool is_power_of_two() const { return (two_n_ & (two_n_ - 1)) == 0; }
  /// log2 of the deck size; only meaningful when is_power_of_two().
  unsigned log2() const;

  bool operator==(const DeckSize&) const = default;

 private:
  std::uint32_t two_n_;
};

enum class Letter : char { L = 'L', R = 'R', I = 'I', O = 'O', V = 'V' };

struct ShuffleSymbol {
  Letter letter;
  bool inverted = false;

  ShuffleSymbol inverse() const { return {letter, !inverted}; }
  bool operator==(const ShuffleSymbol&) const = default;
};

class ShuffleWord {
 public:
  ShuffleWord() = default;
  explicit ShuffleWord(std::vector<ShuffleSymbol> symbols) : symbols_(std::move(symbols)) {}
  ShuffleWord(std::initializer_list<ShuffleSymbol> symbols) : symbols_(symbols) {}

  /// Letters from "LRIOV", each optionally followed by ' for the inverse.
  /// Whitespace is ignored. Throws std::invalid_argument otherwise.
  static ShuffleWord parse(std::string_view text);

  const std::vector<ShuffleSymbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }

  /// `*this` followed by `next`.
  ShuffleWord then(const ShuffleWord& next) const;
  ShuffleWord inverse() const;
  /// Repeat |e| times; negative e repeats the inverse.
  ShuffleWord power(int e) const;

  std::string to_string() const;
  bool operator==(const ShuffleWord&) const = default;

 private:
  std::vector<ShuffleSymbol> symbols_;
};

/// Product in function notation, x·y = "do y, then x".
inline ShuffleWord operator*(const ShuffleWord& x, const ShuffleWord& y) { return y.then(x); }

Permutation generator_permutation(ShuffleSymbol sym, DeckSize deck);
inline Permutation generator_permutation(Letter letter, DeckSize deck) {
  return generator_permutation(ShuffleSymbol{letter, false}, deck);
}

enum class Pile { left, right };

/// Physically deal the deck into two piles and stack `on_top` over the other.
/// Independent of the closed forms used by generator_permutation.
Permutation deal_oracle(Pile on_top, DeckSize deck);

Permutation word_to_permutation(const ShuffleWord& word, DeckSize deck);

/// Least k >= 1 with a^k = 1 mod m, by repeated multiplication.
/// Throws std::invalid_argument for m < 2 or a not a unit mod m.
std::uint64_t multiplicative_order(std::int64_t a, std::uint64_t m);

/// Order of L or R from the multiplicative order of -2 modulo 2n+1 (L) or
/// 2n-1 (R, doubled when odd). The 2-card deck is handled directly.
std::uint64_t shuffle_order(Pile unshuffle, DeckSize deck);

}  // namespace unshuffle
