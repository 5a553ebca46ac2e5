#pragma once

// Auxiliary in/out shuffle words used to build the even-permutation
// subgroup of the shuffle group, and their rewriting into unshuffles via
// I = V L^-1, O = V R^-1.
//
// Each product is read left to right, leftmost factor performed first:
//   c    = O (I^-1 O I O^-1)^2 O^-1
//   w    = O^-1 I c^-1 O^-1 I c^2 I^-1 O c^-1 I^-1 O
//   b    = (I^k O^-k I^-1 O)^-2,  2n = 2^k v with v > 1 odd
//   c'   = O b O^-1
//   h(r) = O^-r I^r
// Read this way every word leaves the top half {0..n-1} of the deck in place.

#include <optional>
#include <utility>
#include <vector>

#include "unshuffle/shuffles.hpp"

namespace unshuffle {

/// Reads a word written as a product of functions (rightmost first) into
/// performance order.
ShuffleWord from_product_notation(std::string_view text);

ShuffleWord diaconis_c();
ShuffleWord diaconis_w();
/// Throws std::invalid_argument for k == 0.
ShuffleWord diaconis_b(unsigned k);
ShuffleWord diaconis_c_prime(unsigned k);
/// Throws std::invalid_argument for r == 0.
ShuffleWord diaconis_h(unsigned r);

/// Exponent of 2 in 2n, and the odd part.
std::pair<unsigned, std::uint32_t> two_adic_split(DeckSize deck);

struct DiaconisWords {
  unsigned k;  // 2n = 2^k v
  ShuffleWord c;
  ShuffleWord w;
  std::optional<ShuffleWord> b;        // only when v > 1
  std::optional<ShuffleWord> c_prime;  // only when v > 1
  std::vector<std::pair<unsigned, ShuffleWord>> h;
};

/// All words for a deck. Each r must satisfy 1 <= r <= k-1, otherwise
/// std::invalid_argument.
DiaconisWords diaconis_words(DeckSize deck, const std::vector<unsigned>& r_values);
/// Same with r = 1..k-1.
DiaconisWords diaconis_words(DeckSize deck);

struct Substitution {
  /// Word over {L, R} (plus a single leading V when odd_v).
  ShuffleWord word;
  bool odd_v = false;
};

/// Replaces I by V L^-1, I^-1 by L V, O by V R^-1, O^-1 by R V and cancels
/// the central involution V in pairs. L and R pass through unchanged.
Substitution substitute_unshuffles(const ShuffleWord& word);

}  // namespace unshuffle
