#pragma once

// Computes the shuffle groups on a range of deck sizes and compares them
// with the predicted orders, parity table and kernel orders.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unshuffle/bfs.hpp"
#include "unshuffle/bsgs.hpp"
#include "unshuffle/prediction.hpp"

namespace unshuffle {

enum class Engine { automatic, bfs, schreier };

std::string_view to_string(Engine e);
Engine parse_engine(std::string_view text);

struct OrderComputation {
  Natural order;
  Engine engine_used;  // bfs or schreier
};

/// Group order with the chosen engine. `automatic` enumerates when a
/// stabilizer chain says the group has at most `cap` elements and insists
/// the two engines agree. Forcing `bfs` on a larger group throws
/// BfsCapExceeded.
OrderComputation compute_group_order(std::span<const Permutation> generators, Engine engine,
                                     std::uint64_t cap = kDefaultBfsCap);

/// |K| = |G| / |phi(G)| for K the kernel of phi on G = <generators>.
/// phi(G) is built on the n pairs from the phi-images of the generators.
/// Throws std::invalid_argument if a generator is not centrally symmetric.
Natural kernel_order(std::span<const Permutation> generators, DeckSize deck);

struct VerificationRecord {
  std::uint32_t two_n;
  Family family;
  CaseTag case_tag;
  std::optional<Engine> engine_used;   // empty when the engine was infeasible
  std::optional<Natural> computed_order;
  Natural predicted_order;
  bool match = false;                  // computed_order == predicted_order
  std::array<Sign, 4> parities{Sign::plus(), Sign::plus(), Sign::plus(), Sign::plus()};
  std::optional<bool> parities_match;  // against the parity table, unshuffle family with n >= 2
  std::optional<Natural> kernel_order_computed;
  std::optional<Natural> kernel_order_predicted;
  std::optional<std::string> error;
  bool infeasible = false;             // the forced engine could not finish

  /// Everything that was checked agreed.
  bool ok() const;
};

struct VerifyOptions {
  Engine engine = Engine::automatic;
  std::uint64_t cap = kDefaultBfsCap;
  unsigned threads = 1;
};

/// One record per (deck, family), ordered by deck size, then family name.
/// Records of the same input are identical regardless of thread count.
std::vector<VerificationRecord> verify(std::span<const DeckSize> decks, const VerifyOptions& options = {});
/// Every even deck size in [min_two_n, max_two_n].
std::vector<VerificationRecord> verify_range(std::uint32_t min_two_n, std::uint32_t max_two_n,
                                             const VerifyOptions& options = {});

}  // namespace unshuffle
