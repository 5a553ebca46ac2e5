#include "unshuffle/verify.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace unshuffle {

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::automatic: return "auto";
    case Engine::bfs: return "bfs";
    case Engine::schreier: return "schreier";
  }
  return "?";
}

Engine parse_engine(std::string_view text) {
  if (text == "auto") return Engine::automatic;
  if (text == "bfs") return Engine::bfs;
  if (text == "schreier") return Engine::schreier;
  throw std::invalid_argument("unknown engine '" + std::string(text) + "'");
}

OrderComputation compute_group_order(std::span<const Permutation> generators, Engine engine, std::uint64_t cap) {
  if (engine == Engine::bfs) return {bfs_enumerate(generators, cap).size, Engine::bfs};

  const Natural chain_order = schreier_sims(generators).order();
  if (engine == Engine::schreier || chain_order > cap) return {chain_order, Engine::schreier};

  const Natural enumerated = bfs_enumerate(generators, cap).size;
  if (enumerated != chain_order) {
    throw std::logic_error("engines disagree: bfs " + enumerated.str() + " vs schreier " + chain_order.str());
  }
  return {enumerated, Engine::bfs};
}

Natural kernel_order(std::span<const Permutation> generators, DeckSize deck) {
  std::vector<Permutation> pair_images;
  pair_images.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.degree() != deck.two_n()) throw std::invalid_argument("generator degree does not match the deck");
    pair_images.push_back(phi(g).as_permutation());
  }
  const Natural whole = schreier_sims(generators, deck.two_n()).order();
  const Natural image = schreier_sims(pair_images, deck.n()).order();
  return whole / image;
}

bool VerificationRecord::ok() const {
  if (error || !match) return false;
  if (parities_match && !*parities_match) return false;
  if (kernel_order_predicted && kernel_order_computed != kernel_order_predicted) return false;
  return true;
}

namespace {

VerificationRecord verify_one(DeckSize deck, Family family, const VerifyOptions& options) {
  const GroupPrediction prediction = predict_group(family, deck);
  const auto gens = family_generators(family, deck);

  VerificationRecord rec;
  rec.two_n = deck.two_n();
  rec.family = family;
  rec.case_tag = prediction.case_tag;
  rec.predicted_order = prediction.predicted_order;
  rec.parities = {parity(gens[0]), parity(gens[1]), sgn_bar(gens[0]), sgn_bar(gens[1])};

  try {
    const OrderComputation computed = compute_group_order(gens, options.engine, options.cap);
    rec.engine_used = computed.engine_used;
    rec.computed_order = computed.order;
    rec.match = computed.order == prediction.predicted_order;
  } catch (const BfsCapExceeded& e) {
    rec.error = e.what();
    rec.infeasible = true;
  } catch (const std::exception& e) {
    rec.error = e.what();
  }

  if (family == Family::unshuffle) {
    if (deck.n() >= 2) {
      const ParityRow row = parity_row(deck.n());
      rec.parities_match = ParityRow{rec.parities[0], rec.parities[1], rec.parities[2], rec.parities[3]} == row;
    }
    if (auto predicted = predicted_kernel_order(deck.n())) {
      rec.kernel_order_predicted = std::move(predicted);
      rec.kernel_order_computed = kernel_order(gens, deck);
    }
  }
  return rec;
}

}  // namespace

std::vector<VerificationRecord> verify(std::span<const DeckSize> decks, const VerifyOptions& options) {
  struct Job {
    DeckSize deck;
    Family family;
  };
  std::vector<Job> jobs;
  for (const DeckSize& d : decks) {
    // Alphabetical by family name.
    jobs.push_back({d, Family::perfect});
    jobs.push_back({d, Family::unshuffle});
  }
  std::stable_sort(jobs.begin(), jobs.end(),
                   [](const Job& a, const Job& b) { return a.deck.two_n() < b.deck.two_n(); });

  std::vector<std::optional<VerificationRecord>> slots(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) slots[i] = verify_one(jobs[i].deck, jobs[i].family, options);
  };
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<VerificationRecord> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<VerificationRecord> verify_range(std::uint32_t min_two_n, std::uint32_t max_two_n,
                                             const VerifyOptions& options) {
  std::vector<DeckSize> decks;
  for (std::uint32_t d = std::max<std::uint32_t>(2, min_two_n + (min_two_n % 2)); d <= max_two_n; d += 2) {
    decks.emplace_back(d);
  }
  return verify(decks, options);
}

}  // namespace unshuffle
