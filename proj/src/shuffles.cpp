#include "unshuffle/shuffles.hpp"

#include <bit>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace unshuffle {

DeckSize::DeckSize(std::uint64_t two_n) {
  if (two_n < 2 || two_n % 2 != 0 || two_n > kMaxCards) {
    throw std::invalid_argument("deck size must be even and in [2, 2^20], got " + std::to_string(two_n));
  }
  two_n_ = static_cast<std::uint32_t>(two_n);
}

unsigned DeckSize::log2() const { return static_cast<unsigned>(std::bit_width(two_n_) - 1); }

ShuffleWord ShuffleWord::parse(std::string_view text) {
  std::vector<ShuffleSymbol> out;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    switch (c) {
      case 'L':
      case 'R':
      case 'I':
      case 'O':
      case 'V':
        out.push_back({static_cast<Letter>(c), false});
        break;
      case '\'':
        if (out.empty()) throw std::invalid_argument("inverse mark without a letter in word");
        out.back().inverted = !out.back().inverted;
        break;
      default:
        throw std::invalid_argument(std::string("unknown shuffle symbol '") + c + "'");
    }
  }
  return ShuffleWord(std::move(out));
}

ShuffleWord ShuffleWord::then(const ShuffleWord& next) const {
  std::vector<ShuffleSymbol> out = symbols_;
  out.insert(out.end(), next.symbols_.begin(), next.symbols_.end());
  return ShuffleWord(std::move(out));
}

ShuffleWord ShuffleWord::inverse() const {
  std::vector<ShuffleSymbol> out;
  out.reserve(symbols_.size());
  for (auto it = symbols_.rbegin(); it != symbols_.rend(); ++it) out.push_back(it->inverse());
  return ShuffleWord(std::move(out));
}

ShuffleWord ShuffleWord::power(int e) const {
  const ShuffleWord base = e < 0 ? inverse() : *this;
  ShuffleWord out;
  for (int k = 0; k < (e < 0 ? -e : e); ++k) out = out.then(base);
  return out;
}

std::string ShuffleWord::to_string() const {
  std::string out;
  for (const auto& s : symbols_) {
    out += static_cast<char>(s.letter);
    if (s.inverted) out += '\'';
  }
  return out;
}

Permutation generator_permutation(ShuffleSymbol sym, DeckSize deck) {
  const std::uint64_t n = deck.n();
  const std::uint64_t two_n = deck.two_n();
  std::vector<Point> image(two_n);
  for (std::uint64_t i = 0; i < two_n; ++i) {
    std::uint64_t v = 0;
    switch (sym.letter) {
      case Letter::L:
        v = (n * i + n - 1) % (two_n + 1);
        break;
      case Letter::R:
        // Modulus 2n-1 collapses to 1 on two cards; there R is the swap.
        if (two_n == 2) v = 1 - i;
        else v = i == 0 ? two_n - 1 : ((n - 1) * i) % (two_n - 1);
        break;
      case Letter::I:
        v = (2 * i + 1) % (two_n + 1);
        break;
      case Letter::O:
        v = i == two_n - 1 ? two_n - 1 : (2 * i) % (two_n - 1);
        break;
      case Letter::V:
        v = two_n - 1 - i;
        break;
    }
    image[i] = static_cast<Point>(v);
  }
  Permutation p(std::move(image));
  return sym.inverted ? inverse(p) : p;
}

Permutation deal_oracle(Pile on_top, DeckSize deck) {
  // Piles are stored bottom-first; dealing places each card on top.
  std::vector<Point> left_pile, right_pile;
  for (Point card = 0; card < deck.two_n(); ++card) {
    (card % 2 == 0 ? left_pile : right_pile).push_back(card);
  }
  std::vector<Point> top_to_bottom;
  auto stack = [&](const std::vector<Point>& pile) {
    top_to_bottom.insert(top_to_bottom.end(), pile.rbegin(), pile.rend());
  };
  if (on_top == Pile::left) {
    stack(left_pile);
    stack(right_pile);
  } else {
    stack(right_pile);
    stack(left_pile);
  }
  return from_arrangement(std::move(top_to_bottom));
}

Permutation word_to_permutation(const ShuffleWord& word, DeckSize deck) {
  Permutation result(deck.two_n());
  for (const auto& sym : word.symbols()) result = compose(result, generator_permutation(sym, deck));
  return result;
}

std::uint64_t multiplicative_order(std::int64_t a, std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("modulus must be at least 2");
  const std::uint64_t magnitude =
      a < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
  const std::uint64_t base = a < 0 ? (m - magnitude % m) % m : magnitude % m;
  if (std::gcd(base, m) != 1) {
    throw std::invalid_argument(std::to_string(a) + " is not a unit modulo " + std::to_string(m));
  }
  std::uint64_t k = 1;
  for (std::uint64_t x = base % m; x != 1; ++k) {
    x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * base) % m);
  }
  return k;
}

std::uint64_t shuffle_order(Pile unshuffle, DeckSize deck) {
  const std::uint64_t two_n = deck.two_n();
  if (unshuffle == Pile::left) return multiplicative_order(-2, two_n + 1);
  if (two_n == 2) return 2;
  const std::uint64_t r = multiplicative_order(-2, two_n - 1);
  return r % 2 == 0 ? r : 2 * r;
}

}  // namespace unshuffle
