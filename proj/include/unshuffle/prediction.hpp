#pragma once

// Predicted structure of the unshuffle group <L,R> and the perfect shuffle
// group <I,O> on 2n cards, and the parity table of L, R, phi(L), phi(R).

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "unshuffle/natural.hpp"
#include "unshuffle/permutation.hpp"
#include "unshuffle/shuffles.hpp"

namespace unshuffle {

enum class Family { unshuffle, perfect };

enum class CaseTag { special12, special24, power_of_two, mod0, mod1, mod2, mod3 };

std::string_view to_string(Family f);
std::string_view to_string(CaseTag c);
/// Throws std::invalid_argument for anything but "unshuffle" / "perfect".
Family parse_family(std::string_view text);

/// The two generators of a family: {L, R} or {I, O}.
std::array<Permutation, 2> family_generators(Family family, DeckSize deck);

struct GroupPrediction {
  Family family;
  std::uint32_t n;
  CaseTag case_tag;
  Natural predicted_order;
  std::string characterization;
  /// "n!·2^m" for the mod-4 cases; the special cases print their own form.
  std::string factored_order;
};

/// Special decks (12, 24, powers of two) are routed before the classes of
/// n mod 4.
GroupPrediction predict_group(Family family, DeckSize deck);

/// Whether `g` satisfies the element-level description of the predicted
/// group: the sign conditions for the mod-4 cases. Throws std::logic_error
/// for the special cases, which have no such description.
bool satisfies_characterization(const GroupPrediction& prediction, const Permutation& g);

/// Signs of L, R, phi(L), phi(R) by n mod 4.
struct ParityRow {
  Sign left, right, phi_left, phi_right;
  bool operator==(const ParityRow&) const = default;
};

/// Throws std::invalid_argument for n < 2.
ParityRow parity_row(std::uint32_t n);
/// The same four signs measured on the actual permutations.
ParityRow computed_parity_row(DeckSize deck);

/// |ker phi| for <L,R>: 2^(n-1) when n = 0 mod 4, else 2^n. Defined only for
/// n > 1, n not a power of two, n not 6 or 12.
std::optional<Natural> predicted_kernel_order(std::uint32_t n);

}  // namespace unshuffle
