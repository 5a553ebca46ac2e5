#pragma once

// Elmsley-style problems. On a deck of 2^k cards both unshuffles act on the
// k-bit index of a card as a right rotation by one bit, complementing the
// bits that move down (and, for R, also the bit that wraps to the top).
// Choosing L or R at each step therefore controls how many times each bit
// is flipped, which is enough to exchange any two positions in k shuffles.

#include <cstdint>
#include <stdexcept>

#include "unshuffle/shuffles.hpp"

namespace unshuffle {

/// Fixed-width binary index of a card in a 2^k deck.
class BitIndex {
 public:
  /// Throws std::out_of_range unless 1 <= k <= 63 and value < 2^k.
  BitIndex(unsigned k, std::uint64_t value);

  unsigned width() const { return k_; }
  std::uint64_t value() const { return value_; }
  /// Bit x_r, r = 0 is least significant.
  bool bit(unsigned r) const { return (value_ >> r) & 1u; }

  bool operator==(const BitIndex&) const = default;

 private:
  unsigned k_;
  std::uint64_t value_;
};

/// Where L or R sends the card at index i, computed on the bits alone.
BitIndex binary_shuffle_image(Pile unshuffle, BitIndex i);

/// The deck is not a power of two.
class NotPowerOfTwo : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// k-letter word over {L, R} that exchanges the cards at positions i and j
/// on a 2^k deck. Symbol r is chosen by bit r of i xor j.
/// Throws std::out_of_range if i or j is not below 2^k.
ShuffleWord unshuffle_swap_word(std::uint64_t i, std::uint64_t j, unsigned k);
/// Same, for a deck given by size. Throws NotPowerOfTwo for other decks.
ShuffleWord unshuffle_swap_word(std::uint64_t i, std::uint64_t j, DeckSize deck);

/// In/out word that brings the top card to position i: the binary digits of
/// i, most significant first, with 1 = I and 0 = O. i = 0 gives the empty
/// word. Throws std::out_of_range if i >= 2n.
ShuffleWord perfect_elmsley_word(std::uint64_t i, DeckSize deck);

}  // namespace unshuffle
