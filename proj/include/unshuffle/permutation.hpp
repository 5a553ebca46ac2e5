#pragma once

// Finite permutations in position-image form, plus the maps that centrally
// symmetric permutations carry onto the pairs {p, 2n-1-p}.
//
// Convention: image[i] is the new position of the card currently at
// position i. Composition is written in performance order: compose(a, b)
// performs a first, then b, so compose(a, b).image[i] == b.image[a.image[i]].
// In function notation that is the product b∘a.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unshuffle {

using Point = std::uint32_t;

/// +1 or -1.
class Sign {
 public:
  static constexpr Sign plus() { return Sign(1); }
  static constexpr Sign minus() { return Sign(-1); }
  static constexpr Sign from_int(int v) { return v < 0 ? minus() : plus(); }

  constexpr int value() const { return value_; }
  constexpr Sign operator*(Sign other) const { return Sign(value_ * other.value_); }
  constexpr bool operator==(const Sign&) const = default;

 private:
  constexpr explicit Sign(int v) : value_(v) {}
  int value_;
};

std::ostream& operator<<(std::ostream& os, Sign s);

class Permutation {
 public:
  /// Identity on `degree` points. Throws std::invalid_argument for degree 0.
  explicit Permutation(std::size_t degree);
  /// Throws std::invalid_argument unless `image` is a bijection on
  /// {0..image.size()-1} with at least one point.
  explicit Permutation(std::vector<Point> image);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const { return image_.size(); }
  Point operator()(Point i) const { return image_[i]; }
  Point operator[](std::size_t i) const { return image_[i]; }
  std::span<const Point> image() const { return image_; }

  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> image, Unchecked) : image_(std::move(image)) {}

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation power(const Permutation&, std::int64_t);

  std::vector<Point> image_;
};

/// Perform `first`, then `second`. Throws std::invalid_argument on a degree
/// mismatch.
Permutation compose(const Permutation& first, const Permutation& second);
Permutation inverse(const Permutation& p);
/// p^e for any integer e (negative exponents use the inverse).
Permutation power(const Permutation& p, std::int64_t e);

/// Disjoint cycles, each starting at its minimum element, ordered by that
/// minimum. Fixed points are included as 1-cycles.
std::vector<std::vector<Point>> cycles(const Permutation& p);

Sign parity(const Permutation& p);

/// Least k >= 1 with p^k = id. Throws std::overflow_error if the lcm of the
/// cycle lengths does not fit in 64 bits.
std::uint64_t element_order(const Permutation& p);

/// Throws std::invalid_argument for odd degree.
bool is_centrally_symmetric(const Permutation& p);

/// Permutation of the n pairs {p, 2n-1-p}, pair p indexed by its smaller
/// element p < n.
class PairPermutation {
 public:
  explicit PairPermutation(std::vector<Point> image);

  std::size_t n() const { return image_.size(); }
  std::span<const Point> image() const { return image_; }
  Permutation as_permutation() const { return Permutation(image_); }

  bool operator==(const PairPermutation&) const = default;

 private:
  std::vector<Point> image_;
};

/// The permutation a centrally symmetric permutation induces on pairs.
/// Throws std::invalid_argument if `p` is not centrally symmetric.
PairPermutation phi(const Permutation& p);

/// Parity of phi(p).
Sign sgn_bar(const Permutation& p);

// Text forms. Image form: "2,5,1,4,0,3". Cycle form: "(0 2 1 5 3 4)", with
// fixed points omitted and "()" for the identity.
std::string to_image_string(const Permutation& p);
std::string to_cycle_string(const Permutation& p);
/// Throws std::invalid_argument on malformed input.
Permutation parse_image_string(std::string_view text);
/// Cycle form needs the degree since fixed points are omitted.
Permutation parse_cycle_string(std::string_view text, std::size_t degree);

/// Top-to-bottom card labels after applying `p` to a deck whose card at
/// position i is labelled i. This is the inverse of the image map.
std::vector<Point> arrangement(const Permutation& p);
/// Permutation that takes the identity deck to `labels` (top-to-bottom).
Permutation from_arrangement(std::vector<Point> labels);
std::string to_arrangement_string(const Permutation& p);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace unshuffle
