#include "unshuffle/elmsley.hpp"

#include <bit>
#include <string>

namespace unshuffle {

BitIndex::BitIndex(unsigned k, std::uint64_t value) : k_(k), value_(value) {
  if (k < 1 || k > 63) throw std::out_of_range("bit width must be in [1, 63]");
  if (value >> k) {
    throw std::out_of_range("index " + std::to_string(value) + " does not fit in " + std::to_string(k) + " bits");
  }
}

BitIndex binary_shuffle_image(Pile unshuffle, BitIndex i) {
  const unsigned k = i.width();
  const std::uint64_t low_mask = (std::uint64_t{1} << (k - 1)) - 1;
  const std::uint64_t top = unshuffle == Pile::left ? i.bit(0) : !i.bit(0);
  const std::uint64_t rest = ~(i.value() >> 1) & low_mask;
  return BitIndex(k, (top << (k - 1)) | rest);
}

ShuffleWord unshuffle_swap_word(std::uint64_t i, std::uint64_t j, unsigned k) {
  if (k < 1 || k > 63) throw std::out_of_range("bit width must be in [1, 63]");
  if ((i >> k) || (j >> k)) throw std::out_of_range("swap index outside the deck");
  const std::uint64_t diff = i ^ j;
  const bool k_odd = k % 2 == 1;
  std::vector<ShuffleSymbol> symbols;
  symbols.reserve(k);
  for (unsigned r = 0; r < k; ++r) {
    // R flips the bit k times, L flips it k-1 times.
    const bool flip = (diff >> r) & 1u;
    const bool use_right = k_odd ? flip : !flip;
    symbols.push_back({use_right ? Letter::R : Letter::L, false});
  }
  return ShuffleWord(std::move(symbols));
}

ShuffleWord unshuffle_swap_word(std::uint64_t i, std::uint64_t j, DeckSize deck) {
  if (!deck.is_power_of_two()) {
    throw NotPowerOfTwo("unshuffle swaps need a deck of 2^k cards, got " + std::to_string(deck.two_n()));
  }
  return unshuffle_swap_word(i, j, deck.log2());
}

ShuffleWord perfect_elmsley_word(std::uint64_t i, DeckSize deck) {
  if (i >= deck.two_n()) throw std::out_of_range("target position outside the deck");
  std::vector<ShuffleSymbol> symbols;
  for (int r = std::bit_width(i) - 1; r >= 0; --r) {
    symbols.push_back({((i >> r) & 1u) ? Letter::I : Letter::O, false});
  }
  return ShuffleWord(std::move(symbols));
}

}  // namespace unshuffle
