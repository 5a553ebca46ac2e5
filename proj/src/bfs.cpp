#include "unshuffle/bfs.hpp"

#include <algorithm>
#include <unordered_set>

namespace unshuffle {

namespace {

// Elements live back to back in one flat buffer; the hash set stores row
// indices into it.
class ElementStore {
 public:
  explicit ElementStore(std::size_t degree) : degree_(degree) {}

  std::span<const Point> row(std::size_t idx) const { return {data_.data() + idx * degree_, degree_}; }
  std::size_t size() const { return data_.size() / degree_; }

  std::size_t push(std::span<const Point> image) {
    data_.insert(data_.end(), image.begin(), image.end());
    return size() - 1;
  }
  void pop() { data_.resize(data_.size() - degree_); }

 private:
  std::size_t degree_;
  std::vector<Point> data_;
};

struct RowHash {
  const ElementStore* store;
  std::size_t operator()(std::size_t idx) const {
    // FNV-1a over the image entries.
    std::uint64_t h = 1469598103934665603ull;
    for (Point p : store->row(idx)) {
      h ^= p;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct RowEqual {
  const ElementStore* store;
  bool operator()(std::size_t a, std::size_t b) const {
    auto ra = store->row(a);
    auto rb = store->row(b);
    return std::equal(ra.begin(), ra.end(), rb.begin());
  }
};

}  // namespace

BfsResult bfs_enumerate(std::span<const Permutation> generators, std::uint64_t cap, bool keep_elements) {
  if (generators.empty()) throw std::invalid_argument("bfs_enumerate needs at least one generator");
  if (cap == 0) throw std::invalid_argument("bfs cap must be positive");
  const std::size_t degree = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generators have mixed degrees");
  }

  ElementStore store(degree);
  std::unordered_set<std::size_t, RowHash, RowEqual> seen(1024, RowHash{&store}, RowEqual{&store});

  const Permutation id(degree);
  seen.insert(store.push(id.image()));

  std::vector<Point> scratch(degree);
  for (std::size_t head = 0; head < store.size(); ++head) {
    for (const auto& g : generators) {
      auto cur = store.row(head);
      for (std::size_t i = 0; i < degree; ++i) scratch[i] = g[cur[i]];
      const std::size_t idx = store.push(scratch);
      if (!seen.insert(idx).second) {
        store.pop();
        continue;
      }
      if (store.size() > cap) throw BfsCapExceeded();
    }
  }

  BfsResult result;
  result.size = store.size();
  if (keep_elements) {
    std::vector<Permutation> elems;
    elems.reserve(store.size());
    for (std::size_t i = 0; i < store.size(); ++i) {
      auto r = store.row(i);
      elems.emplace_back(std::vector<Point>(r.begin(), r.end()));
    }
    std::sort(elems.begin(), elems.end());
    result.elements = std::move(elems);
  }
  return result;
}

}  // namespace unshuffle
