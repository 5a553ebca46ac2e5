#include "unshuffle/prediction.hpp"

#include <stdexcept>

namespace unshuffle {

std::string_view to_string(Family f) { return f == Family::unshuffle ? "unshuffle" : "perfect"; }

std::string_view to_string(CaseTag c) {
  switch (c) {
    case CaseTag::special12: return "special12";
    case CaseTag::special24: return "special24";
    case CaseTag::power_of_two: return "power_of_two";
    case CaseTag::mod0: return "mod0";
    case CaseTag::mod1: return "mod1";
    case CaseTag::mod2: return "mod2";
    case CaseTag::mod3: return "mod3";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "unshuffle") return Family::unshuffle;
  if (text == "perfect") return Family::perfect;
  throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

std::array<Permutation, 2> family_generators(Family family, DeckSize deck) {
  if (family == Family::unshuffle) {
    return {generator_permutation(Letter::L, deck), generator_permutation(Letter::R, deck)};
  }
  return {generator_permutation(Letter::I, deck), generator_permutation(Letter::O, deck)};
}

GroupPrediction predict_group(Family family, DeckSize deck) {
  const std::uint32_t n = deck.n();
  GroupPrediction p{family, n, CaseTag::mod0, 0, {}, {}};
  auto mod_case = [&](CaseTag tag, unsigned two_exp, std::string text) {
    p.case_tag = tag;
    p.predicted_order = factorial(n) * pow2(two_exp);
    p.characterization = std::move(text);
    p.factored_order = std::to_string(n) + "!·2^" + std::to_string(two_exp);
  };

  if (deck.two_n() == 12) {
    p.case_tag = CaseTag::special12;
    p.predicted_order = pow2(6) * 120;
    p.characterization = "Z_2^6 ⋊ S_5";
    p.factored_order = "2^6·120";
  } else if (deck.two_n() == 24) {
    p.case_tag = CaseTag::special24;
    p.predicted_order = pow2(11) * 95040;
    p.characterization = "Z_2^11 ⋊ M_12";
    p.factored_order = "2^11·95040";
  } else if (deck.is_power_of_two()) {
    const unsigned k = deck.log2();
    p.case_tag = CaseTag::power_of_two;
    p.predicted_order = pow2(k) * k;
    p.characterization = "Z_2^" + std::to_string(k) + " ⋊ Z_" + std::to_string(k);
    p.factored_order = std::to_string(k) + "·2^" + std::to_string(k);
  } else {
    switch (n % 4) {
      case 0:
        mod_case(CaseTag::mod0, n - 2, "intersection of the kernels of sgn and sgn-bar");
        break;
      case 1:
        mod_case(CaseTag::mod1, n - 1, "kernel of sgn-bar");
        break;
      case 2:
        mod_case(CaseTag::mod2, n, "B_n");
        break;
      default:
        if (family == Family::unshuffle) mod_case(CaseTag::mod3, n, "B_n");
        else mod_case(CaseTag::mod3, n - 1, "kernel of sgn·sgn-bar");
        break;
    }
  }
  return p;
}

bool satisfies_characterization(const GroupPrediction& prediction, const Permutation& g) {
  if (!is_centrally_symmetric(g)) return false;
  switch (prediction.case_tag) {
    case CaseTag::mod0: return parity(g) == Sign::plus() && sgn_bar(g) == Sign::plus();
    case CaseTag::mod1: return sgn_bar(g) == Sign::plus();
    case CaseTag::mod2: return true;
    case CaseTag::mod3:
      return prediction.family == Family::unshuffle || parity(g) * sgn_bar(g) == Sign::plus();
    default:
      throw std::logic_error("no element-level characterization for " + std::string(to_string(prediction.case_tag)));
  }
}

ParityRow parity_row(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("parity table starts at n = 2");
  const Sign p = Sign::plus(), m = Sign::minus();
  switch (n % 4) {
    case 0: return {p, p, p, p};
    case 1: return {p, m, p, p};
    case 2: return {m, m, m, p};
    default: return {m, p, p, m};
  }
}

ParityRow computed_parity_row(DeckSize deck) {
  const Permutation l = generator_permutation(Letter::L, deck);
  const Permutation r = generator_permutation(Letter::R, deck);
  return {parity(l), parity(r), sgn_bar(l), sgn_bar(r)};
}

std::optional<Natural> predicted_kernel_order(std::uint32_t n) {
  const bool power_of_two = n != 0 && (n & (n - 1)) == 0;
  if (n <= 1 || power_of_two || n == 6 || n == 12) return std::nullopt;
  return n % 4 == 0 ? pow2(n - 1) : pow2(n);
}

}  // namespace unshuffle
