#pragma once

// Base and strong generating set via deterministic Schreier-Sims.
//
// Level l of the chain holds a base point b_l, the strong generators that
// fix b_0..b_{l-1}, and the orbit of b_l under them with one coset
// representative u per orbit point (b_l^u = point). Base points are picked
// as the smallest point moved by the generator that opens the level.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "unshuffle/natural.hpp"
#include "unshuffle/permutation.hpp"

namespace unshuffle {

class Bsgs {
 public:
  /// Trivial group on `degree` points.
  explicit Bsgs(std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::size_t length() const { return levels_.size(); }
  std::vector<Point> base() const;
  /// Distinct strong generators (the union over all levels).
  std::vector<Permutation> strong_generators() const;
  /// Generators assigned to level l, i.e. those fixing b_0..b_{l-1}.
  const std::vector<Permutation>& level_generators(std::size_t level) const { return levels_.at(level).gens; }
  /// Orbit point -> coset representative for level l.
  std::map<Point, Permutation> transversal(std::size_t level) const;
  std::size_t orbit_size(std::size_t level) const { return levels_.at(level).orbit.size(); }

  /// Product of the orbit sizes.
  Natural order() const;

  /// Membership by sifting. Throws std::invalid_argument on degree mismatch.
  bool contains(const Permutation& p) const;

  /// Extends the chain so that it describes <current group, g>.
  void add_generator(const Permutation& g);

 private:
  struct Level {
    Point base_point;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<int> orbit_slot;  // point -> index in orbit, or -1
    std::vector<Permutation> reps;
    std::vector<Permutation> rep_inverses;
    // Schreier generators already sifted: for orbit index i, gens [0, checked[i]).
    std::vector<std::size_t> checked;
  };

  struct SiftResult {
    Permutation residue;
    std::size_t level;  // first level where sifting failed, or length()
  };

  SiftResult sift(Permutation g, std::size_t from_level) const;
  void open_level(const Permutation& first_gen);
  void push_generator(std::size_t level, const Permutation& g);
  void complete(std::size_t top_level);

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// Deterministic Schreier-Sims on the given generators (all of `degree`).
Bsgs schreier_sims(std::span<const Permutation> generators, std::size_t degree);
/// Degree taken from the first generator; throws std::invalid_argument if
/// the set is empty.
Bsgs schreier_sims(std::span<const Permutation> generators);

inline bool contains(const Bsgs& group, const Permutation& p) { return group.contains(p); }

}  // namespace unshuffle
