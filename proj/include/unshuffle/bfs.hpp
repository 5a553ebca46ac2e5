#pragma once

// Breadth-first closure of a generating set. Only practical for small
// groups, but it is the independent check on the stabilizer-chain orders.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "unshuffle/permutation.hpp"

namespace unshuffle {

class BfsCapExceeded : public std::runtime_error {
 public:
  BfsCapExceeded() : std::runtime_error("infeasible, use schreier_sims") {}
};

struct BfsResult {
  std::uint64_t size = 0;
  /// Sorted, present only when requested.
  std::optional<std::vector<Permutation>> elements;
};

inline constexpr std::uint64_t kDefaultBfsCap = 10'000'000;

/// Enumerates <generators> from the identity by right multiplication.
/// Throws BfsCapExceeded once more than `cap` elements are found, and
/// std::invalid_argument for an empty set, mixed degrees or cap == 0.
BfsResult bfs_enumerate(std::span<const Permutation> generators, std::uint64_t cap = kDefaultBfsCap,
                        bool keep_elements = false);

}  // namespace unshuffle
