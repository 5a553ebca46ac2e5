#include "unshuffle/bsgs.hpp"

#include <algorithm>
#include <stdexcept>

namespace unshuffle {

namespace {

Point smallest_moved_point(const Permutation& g) {
  for (Point i = 0; i < g.degree(); ++i) {
    if (g(i) != i) return i;
  }
  throw std::logic_error("identity has no moved point");
}

}  // namespace

Bsgs::Bsgs(std::size_t degree) : degree_(degree) {
  if (degree == 0) throw std::invalid_argument("degree must be at least 1");
}

std::vector<Point> Bsgs::base() const {
  std::vector<Point> out;
  out.reserve(levels_.size());
  for (const auto& lvl : levels_) out.push_back(lvl.base_point);
  return out;
}

std::vector<Permutation> Bsgs::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& lvl : levels_) out.insert(out.end(), lvl.gens.begin(), lvl.gens.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::map<Point, Permutation> Bsgs::transversal(std::size_t level) const {
  const Level& lvl = levels_.at(level);
  std::map<Point, Permutation> out;
  for (std::size_t i = 0; i < lvl.orbit.size(); ++i) out.emplace(lvl.orbit[i], lvl.reps[i]);
  return out;
}

Natural Bsgs::order() const {
  Natural out = 1;
  for (const auto& lvl : levels_) out *= lvl.orbit.size();
  return out;
}

Bsgs::SiftResult Bsgs::sift(Permutation g, std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level& lvl = levels_[l];
    const int slot = lvl.orbit_slot[g(lvl.base_point)];
    if (slot < 0) return {std::move(g), l};
    g = compose(g, lvl.rep_inverses[static_cast<std::size_t>(slot)]);
  }
  return {std::move(g), levels_.size()};
}

bool Bsgs::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("membership test with mismatched degree");
  return sift(p, 0).residue.is_identity();
}

void Bsgs::open_level(const Permutation& first_gen) {
  Level lvl;
  lvl.base_point = smallest_moved_point(first_gen);
  lvl.orbit = {lvl.base_point};
  lvl.orbit_slot.assign(degree_, -1);
  lvl.orbit_slot[lvl.base_point] = 0;
  lvl.reps.emplace_back(degree_);
  lvl.rep_inverses.emplace_back(degree_);
  lvl.checked = {0};
  levels_.push_back(std::move(lvl));
}

void Bsgs::push_generator(std::size_t level, const Permutation& g) {
  Level& lvl = levels_[level];
  lvl.gens.push_back(g);

  auto visit = [&](std::size_t idx, const Permutation& s) {
    const Point image = s(lvl.orbit[idx]);
    if (lvl.orbit_slot[image] >= 0) return;
    lvl.orbit_slot[image] = static_cast<int>(lvl.orbit.size());
    lvl.orbit.push_back(image);
    Permutation rep = compose(lvl.reps[idx], s);
    lvl.rep_inverses.push_back(inverse(rep));
    lvl.reps.push_back(std::move(rep));
    lvl.checked.push_back(0);
  };

  const std::size_t old_size = lvl.orbit.size();
  for (std::size_t idx = 0; idx < old_size; ++idx) visit(idx, g);
  for (std::size_t idx = old_size; idx < lvl.orbit.size(); ++idx) {
    for (std::size_t s = 0; s < lvl.gens.size(); ++s) visit(idx, lvl.gens[s]);
  }
}

void Bsgs::complete(std::size_t top_level) {
  std::size_t i = top_level;
  while (true) {
    bool restarted = false;
    Level* lvl = &levels_[i];
    for (std::size_t idx = 0; idx < lvl->orbit.size() && !restarted; ++idx) {
      while (lvl->checked[idx] < lvl->gens.size()) {
        const std::size_t gi = lvl->checked[idx]++;
        const Permutation& s = lvl->gens[gi];
        const Point target = s(lvl->orbit[idx]);
        const auto target_slot = static_cast<std::size_t>(lvl->orbit_slot[target]);
        Permutation schreier = compose(compose(lvl->reps[idx], s), lvl->rep_inverses[target_slot]);

        SiftResult r = sift(std::move(schreier), i + 1);
        if (r.residue.is_identity()) continue;

        if (r.level == levels_.size()) open_level(r.residue);
        for (std::size_t l = i + 1; l <= r.level; ++l) push_generator(l, r.residue);
        i = r.level;
        restarted = true;
        break;
      }
    }
    if (restarted) continue;
    if (i == 0) return;
    --i;
  }
}

void Bsgs::add_generator(const Permutation& g) {
  if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
  SiftResult r = sift(g, 0);
  if (r.residue.is_identity()) return;
  if (r.level == levels_.size()) open_level(r.residue);
  for (std::size_t l = 0; l <= r.level; ++l) push_generator(l, r.residue);
  complete(r.level);
}

Bsgs schreier_sims(std::span<const Permutation> generators, std::size_t degree) {
  Bsgs out(degree);
  for (const auto& g : generators) out.add_generator(g);
  return out;
}

Bsgs schreier_sims(std::span<const Permutation> generators) {
  if (generators.empty()) throw std::invalid_argument("schreier_sims needs a generator or an explicit degree");
  return schreier_sims(generators, generators.front().degree());
}

}  // namespace unshuffle
