#include "unshuffle/diaconis.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>

namespace unshuffle {

ShuffleWord from_product_notation(std::string_view text) {
  std::vector<ShuffleSymbol> symbols = ShuffleWord::parse(text).symbols();
  std::reverse(symbols.begin(), symbols.end());
  return ShuffleWord(std::move(symbols));
}

namespace {

const ShuffleWord kI = ShuffleWord::parse("I");
const ShuffleWord kO = ShuffleWord::parse("O");

ShuffleWord seq(std::initializer_list<ShuffleWord> parts) {
  ShuffleWord out;
  for (const auto& p : parts) out = out.then(p);
  return out;
}

}  // namespace

ShuffleWord diaconis_c() { return seq({kO, ShuffleWord::parse("I'OIO'").power(2), kO.inverse()}); }

ShuffleWord diaconis_w() {
  const ShuffleWord c = diaconis_c();
  const ShuffleWord ci = c.inverse();
  return seq({kO.inverse(), kI, ci, kO.inverse(), kI, c.power(2), kI.inverse(), kO, ci, kI.inverse(), kO});
}

ShuffleWord diaconis_b(unsigned k) {
  if (k == 0) throw std::invalid_argument("b needs k >= 1");
  const int e = static_cast<int>(k);
  return seq({kI.power(e), kO.power(-e), kI.inverse(), kO}).power(-2);
}

ShuffleWord diaconis_c_prime(unsigned k) { return seq({kO, diaconis_b(k), kO.inverse()}); }

ShuffleWord diaconis_h(unsigned r) {
  if (r == 0) throw std::invalid_argument("h(r) needs r >= 1");
  const int e = static_cast<int>(r);
  return seq({kO.power(-e), kI.power(e)});
}

std::pair<unsigned, std::uint32_t> two_adic_split(DeckSize deck) {
  std::uint32_t v = deck.two_n();
  unsigned k = 0;
  while (v % 2 == 0) {
    v /= 2;
    ++k;
  }
  return {k, v};
}

DiaconisWords diaconis_words(DeckSize deck, const std::vector<unsigned>& r_values) {
  const auto [k, v] = two_adic_split(deck);
  DiaconisWords out{k, diaconis_c(), diaconis_w(), std::nullopt, std::nullopt, {}};
  if (v > 1) {
    out.b = diaconis_b(k);
    out.c_prime = diaconis_c_prime(k);
  }
  for (unsigned r : r_values) {
    if (r < 1 || r + 1 > k) {
      throw std::invalid_argument("h(r) needs 1 <= r <= k-1 (k = " + std::to_string(k) + "), got r = " +
                                  std::to_string(r));
    }
    out.h.emplace_back(r, diaconis_h(r));
  }
  return out;
}

DiaconisWords diaconis_words(DeckSize deck) {
  const unsigned k = two_adic_split(deck).first;
  std::vector<unsigned> rs;
  for (unsigned r = 1; r + 1 <= k; ++r) rs.push_back(r);
  return diaconis_words(deck, rs);
}

Substitution substitute_unshuffles(const ShuffleWord& word) {
  std::vector<ShuffleSymbol> out;
  std::size_t v_count = 0;
  for (const auto& s : word.symbols()) {
    switch (s.letter) {
      case Letter::I:
        out.push_back({Letter::L, !s.inverted});
        ++v_count;
        break;
      case Letter::O:
        out.push_back({Letter::R, !s.inverted});
        ++v_count;
        break;
      case Letter::V:
        ++v_count;
        break;
      default:
        out.push_back(s);
        break;
    }
  }
  Substitution result;
  result.odd_v = v_count % 2 == 1;
  if (result.odd_v) out.insert(out.begin(), ShuffleSymbol{Letter::V, false});
  result.word = ShuffleWord(std::move(out));
  return result;
}

}  // namespace unshuffle
