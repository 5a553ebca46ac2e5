#include "unshuffle/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace unshuffle {

namespace {

bool is_bijection(std::span<const Point> image) {
  std::vector<bool> seen(image.size(), false);
  for (Point v : image) {
    if (v >= image.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

void require_same_degree(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("permutation degree mismatch: " + std::to_string(a.degree()) +
                                " vs " + std::to_string(b.degree()));
  }
}

Point parse_point(std::string_view token) {
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
  Point value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw std::invalid_argument("bad point '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, Sign s) { return os << (s.value() > 0 ? "+1" : "-1"); }

Permutation::Permutation(std::size_t degree) : image_(degree) {
  if (degree == 0) throw std::invalid_argument("permutation degree must be at least 1");
  std::iota(image_.begin(), image_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> image) : image_(std::move(image)) {
  if (image_.empty()) throw std::invalid_argument("permutation degree must be at least 1");
  if (!is_bijection(image_)) throw std::invalid_argument("image is not a bijection");
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

Permutation compose(const Permutation& first, const Permutation& second) {
  require_same_degree(first, second);
  std::vector<Point> out(first.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = second.image_[first.image_[i]];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[p.image_[i]] = static_cast<Point>(i);
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation power(const Permutation& p, std::int64_t e) {
  Permutation base = e < 0 ? inverse(p) : p;
  // Work on |e| without overflowing at INT64_MIN.
  std::uint64_t k = e < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(e);
  Permutation result(p.degree());
  while (k > 0) {
    if (k & 1u) result = compose(result, base);
    base = compose(base, base);
    k >>= 1u;
  }
  return result;
}

std::vector<std::vector<Point>> cycles(const Permutation& p) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Sign parity(const Permutation& p) {
  // (-1)^(degree - #cycles)
  std::size_t num_cycles = 0;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    ++num_cycles;
    for (Point x = start; !seen[x]; x = p(x)) seen[x] = true;
  }
  return ((p.degree() - num_cycles) % 2 == 0) ? Sign::plus() : Sign::minus();
}

std::uint64_t element_order(const Permutation& p) {
  std::uint64_t order = 1;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (Point x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      ++len;
    }
    const std::uint64_t factor = len / std::gcd(order, len);
    if (order > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw std::overflow_error("element order exceeds 64 bits");
    }
    order *= factor;
  }
  return order;
}

bool is_centrally_symmetric(const Permutation& p) {
  const std::size_t d = p.degree();
  if (d % 2 != 0) throw std::invalid_argument("central symmetry needs an even degree");
  const Point last = static_cast<Point>(d - 1);
  for (Point i = 0; i < d / 2; ++i) {
    if (p(i) + p(last - i) != last) return false;
  }
  return true;
}

PairPermutation::PairPermutation(std::vector<Point> image) : image_(std::move(image)) {
  if (image_.empty() || !is_bijection(image_)) {
    throw std::invalid_argument("pair image is not a bijection");
  }
}

PairPermutation phi(const Permutation& p) {
  if (!is_centrally_symmetric(p)) {
    throw std::invalid_argument("phi is only defined on centrally symmetric permutations");
  }
  const Point n = static_cast<Point>(p.degree() / 2);
  const Point last = 2 * n - 1;
  std::vector<Point> out(n);
  for (Point i = 0; i < n; ++i) out[i] = std::min(p(i), last - p(i));
  return PairPermutation(std::move(out));
}

Sign sgn_bar(const Permutation& p) { return parity(phi(p).as_permutation()); }

std::string to_image_string(const Permutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

std::string to_cycle_string(const Permutation& p) {
  std::string out;
  for (const auto& cycle : cycles(p)) {
    if (cycle.size() < 2) continue;
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation parse_image_string(std::string_view text) {
  std::vector<Point> image;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    image.push_back(parse_point(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Permutation(std::move(image));
}

Permutation parse_cycle_string(std::string_view text, std::size_t degree) {
  std::vector<Point> image(degree);
  std::iota(image.begin(), image.end(), Point{0});
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos == text.size()) throw std::invalid_argument("empty cycle string");
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle string");
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw std::invalid_argument("unterminated cycle");
    std::vector<Point> cycle;
    std::istringstream body{std::string(text.substr(pos + 1, close - pos - 1))};
    std::string token;
    while (body >> token) cycle.push_back(parse_point(token));
    for (Point x : cycle) {
      if (x >= degree || used[x]) throw std::invalid_argument("bad or repeated point in cycle string");
      used[x] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) image[cycle[i]] = cycle[(i + 1) % cycle.size()];
    pos = close + 1;
    skip_space();
  }
  return Permutation(std::move(image));
}

std::vector<Point> arrangement(const Permutation& p) {
  const Permutation inv = inverse(p);
  return {inv.image().begin(), inv.image().end()};
}

Permutation from_arrangement(std::vector<Point> labels) { return inverse(Permutation(std::move(labels))); }

std::string to_arrangement_string(const Permutation& p) { return to_image_string(inverse(p)); }

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << to_image_string(p); }

}  // namespace unshuffle
