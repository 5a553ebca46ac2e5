#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "unshuffle/bfs.hpp"
#include "unshuffle/bsgs.hpp"
#include "unshuffle/elmsley.hpp"
#include "unshuffle/prediction.hpp"
#include "unshuffle/report.hpp"
#include "unshuffle/shuffles.hpp"
#include "unshuffle/verify.hpp"

namespace unshuffle::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string format = "text";
  std::uint64_t deck = 0;
  std::string word;
  std::string symbol;
  bool show_steps = false;
  std::uint64_t a = 0, b = 0, position = 0;
  std::string gens = "LR";
  std::string engine = "auto";
  std::uint64_t cap = kDefaultBfsCap;
  std::string family = "unshuffle";
  std::string perm;
  std::uint32_t min_two_n = 2, max_two_n = 52;
  std::string out_path;
  unsigned threads = 1;
};

bool machine(const Options& o) { return o.format == "json"; }

std::vector<Json> arrangement_json(const Permutation& p) {
  std::vector<Json> out;
  for (Point c : arrangement(p)) out.emplace_back(c);
  return out;
}

// Deck states after each prefix of the word, starting from the ordered deck.
void render_steps(const ShuffleWord& word, DeckSize deck, std::ostream& out, Json* json) {
  Permutation state(deck.two_n());
  if (json) (*json)["steps"] = Json::array();
  if (!json) out << "start: " << to_arrangement_string(state) << "\n";
  for (const auto& sym : word.symbols()) {
    state = compose(state, generator_permutation(sym, deck));
    const std::string label = ShuffleWord({sym}).to_string();
    if (json) {
      (*json)["steps"].push_back(Json{{"symbol", label}, {"arrangement", arrangement_json(state)}});
    } else {
      out << label << ": " << to_arrangement_string(state) << "\n";
    }
  }
}

ShuffleWord word_or_symbol(const Options& o) {
  if (!o.symbol.empty() && !o.word.empty()) throw UsageError("give either --symbol or --word, not both");
  const ShuffleWord w = ShuffleWord::parse(o.symbol.empty() ? o.word : o.symbol);
  if (!o.symbol.empty() && w.size() != 1) throw UsageError("--symbol takes a single shuffle, e.g. L or I'");
  return w;
}

std::vector<Permutation> parse_gens(const std::string& text, DeckSize deck) {
  if (text == "LR") {
    auto g = family_generators(Family::unshuffle, deck);
    return {g.begin(), g.end()};
  }
  if (text == "IO") {
    auto g = family_generators(Family::perfect, deck);
    return {g.begin(), g.end()};
  }
  std::vector<Permutation> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(word_to_permutation(ShuffleWord::parse(item), deck));
  if (out.empty()) throw UsageError("--gens needs LR, IO or a comma-separated list of words");
  return out;
}

int cmd_shuffle(const Options& o, std::ostream& out) {
  const DeckSize deck(o.deck);
  const ShuffleWord word = ShuffleWord::parse(o.word);
  const Permutation p = word_to_permutation(word, deck);
  if (machine(o)) {
    Json j{{"deck", deck.two_n()}, {"word", word.to_string()}, {"arrangement", arrangement_json(p)}};
    if (o.show_steps) render_steps(word, deck, out, &j);
    out << j.dump() << "\n";
    return kSuccess;
  }
  if (o.show_steps) render_steps(word, deck, out, nullptr);
  else out << to_arrangement_string(p) << "\n";
  return kSuccess;
}

int cmd_perm(const Options& o, std::ostream& out) {
  const DeckSize deck(o.deck);
  const Permutation p = word_to_permutation(word_or_symbol(o), deck);
  if (o.format == "images") {
    out << to_image_string(p) << "\n";
  } else if (o.format == "cycles") {
    out << to_cycle_string(p) << "\n";
  } else if (machine(o)) {
    std::vector<Json> image(p.image().begin(), p.image().end());
    out << Json{{"deck", deck.two_n()}, {"image", image}, {"cycles", to_cycle_string(p)},
                {"arrangement", arrangement_json(p)}}.dump()
        << "\n";
  } else {
    out << "images: " << to_image_string(p) << "\n"
        << "cycles: " << to_cycle_string(p) << "\n"
        << "deck:   " << to_arrangement_string(p) << "\n";
  }
  return kSuccess;
}

int cmd_order(const Options& o, std::ostream& out) {
  const DeckSize deck(o.deck);
  const ShuffleWord word = word_or_symbol(o);
  const std::uint64_t order = element_order(word_to_permutation(word, deck));
  std::optional<std::uint64_t> formula;
  if (word.size() == 1 && !word.symbols()[0].inverted) {
    if (word.symbols()[0].letter == Letter::L) formula = shuffle_order(Pile::left, deck);
    if (word.symbols()[0].letter == Letter::R) formula = shuffle_order(Pile::right, deck);
  }
  if (machine(o)) {
    Json j{{"deck", deck.two_n()}, {"word", word.to_string()}, {"order", order}};
    j["formula_order"] = formula ? Json(*formula) : Json(nullptr);
    out << j.dump() << "\n";
  } else {
    out << order << "\n";
    if (formula) out << "formula: " << *formula << "\n";
  }
  return (formula && *formula != order) ? kMismatch : kSuccess;
}

int solved_word(const Options& o, DeckSize deck, const ShuffleWord& word, std::ostream& out) {
  if (machine(o)) {
    Json j{{"deck", deck.two_n()}, {"word", word.to_string()}};
    render_steps(word, deck, out, &j);
    out << j.dump() << "\n";
  } else {
    out << (word.empty() ? "(no shuffles)" : word.to_string()) << "\n";
    render_steps(word, deck, out, nullptr);
  }
  return kSuccess;
}

int cmd_swap(const Options& o, std::ostream& out) {
  const DeckSize deck(o.deck);
  return solved_word(o, deck, unshuffle_swap_word(o.a, o.b, deck), out);
}

int cmd_elmsley(const Options& o, std::ostream& out) {
  const DeckSize deck(o.deck);
  return solved_word(o, deck, perfect_elmsley_word(o.position, deck), out);
}

int cmd_group_order(const Options& o, std::ostream& out) {
  const DeckSize deck(o.deck);
  const auto gens = parse_gens(o.gens, deck);
  const OrderComputation result = compute_group_order(gens, parse_engine(o.engine), o.cap);
  if (machine(o)) {
    out << Json{{"deck", deck.two_n()}, {"gens", o.gens}, {"engine_used", std::string(to_string(result.engine_used))},
                {"order", result.order.str()}}.dump()
        << "\n";
  } else {
    out << result.order.str() << "\n";
  }
  return kSuccess;
}

int cmd_group_predict(const Options& o, std::ostream& out) {
  const DeckSize deck(o.deck);
  const GroupPrediction p = predict_group(parse_family(o.family), deck);
  if (machine(o)) {
    out << Json{{"deck", deck.two_n()},
                {"family", std::string(to_string(p.family))},
                {"n", p.n},
                {"case_tag", std::string(to_string(p.case_tag))},
                {"predicted_order", p.predicted_order.str()},
                {"factored_order", p.factored_order},
                {"characterization", p.characterization}}
               .dump()
        << "\n";
  } else {
    out << "case: " << to_string(p.case_tag) << "\n"
        << "order: " << p.predicted_order.str() << " (" << p.factored_order << ")\n"
        << "group: " << p.characterization << "\n";
  }
  return kSuccess;
}

int cmd_group_member(const Options& o, std::ostream& out) {
  const DeckSize deck(o.deck);
  if (o.perm.empty() == o.word.empty()) throw UsageError("give exactly one of --word or --perm");
  const Permutation candidate =
      o.perm.empty() ? word_to_permutation(ShuffleWord::parse(o.word), deck) : parse_image_string(o.perm);
  if (candidate.degree() != deck.two_n()) throw UsageError("--perm has the wrong degree for --deck");
  const bool member = schreier_sims(parse_gens(o.gens, deck), deck.two_n()).contains(candidate);
  if (machine(o)) {
    out << Json{{"deck", deck.two_n()}, {"gens", o.gens}, {"member", member}}.dump() << "\n";
  } else {
    out << (member ? "true" : "false") << "\n";
  }
  return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.min_two_n > o.max_two_n) throw UsageError("--min must not exceed --max");
  // Validates both ends.
  DeckSize{o.min_two_n + (o.min_two_n % 2)};
  DeckSize{o.max_two_n};
  VerifyOptions options;
  options.engine = parse_engine(o.engine);
  options.cap = o.cap;
  options.threads = o.threads;
  const auto records = verify_range(o.min_two_n, o.max_two_n, options);
  if (!o.out_path.empty()) write_report(records, o.out_path);

  bool all_ok = true, infeasible = false;
  for (const auto& r : records) {
    all_ok = all_ok && r.ok();
    infeasible = infeasible || r.infeasible;
  }
  if (machine(o)) {
    out << serialize_report(records);
  } else {
    for (const auto& r : records) {
      out << r.two_n << " " << to_string(r.family) << " " << to_string(r.case_tag) << " predicted "
          << r.predicted_order.str() << " computed " << (r.computed_order ? r.computed_order->str() : "-") << " via "
          << (r.engine_used ? to_string(*r.engine_used) : "-") << (r.ok() ? " ok" : " MISMATCH");
      if (r.error) out << " (" << *r.error << ")";
      out << "\n";
    }
  }
  if (infeasible) return kInfeasible;
  return all_ok ? kSuccess : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unshuffles, perfect shuffles and their permutation groups", "unshuffle"};
  app.require_subcommand(1, 1);
  Options o;

  const std::vector<std::string> plain_formats{"text", "json"};
  auto add_format = [&](CLI::App* sub, const std::vector<std::string>& formats) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  };
  auto add_deck = [&](CLI::App* sub) { sub->add_option("--deck", o.deck, "Number of cards (even)")->required(); };
  auto add_engine = [&](CLI::App* sub) {
    sub->add_option("--engine", o.engine, "auto, bfs or schreier")
        ->check(CLI::IsMember({"auto", "bfs", "schreier"}));
    sub->add_option("--cap", o.cap, "Largest group BFS may enumerate")->check(CLI::PositiveNumber);
  };

  auto* shuffle = app.add_subcommand("shuffle", "Apply a word to the ordered deck");
  add_deck(shuffle);
  shuffle->add_option("--word", o.word, "Shuffles in performance order, e.g. LRI'")->required();
  shuffle->add_flag("--show-steps", o.show_steps, "Print the deck after every shuffle");
  add_format(shuffle, plain_formats);

  auto* perm = app.add_subcommand("perm", "Print the permutation of a shuffle or word");
  add_deck(perm);
  perm->add_option("--symbol", o.symbol, "One of L R I O V, optionally with '");
  perm->add_option("--word", o.word, "A word instead of a single symbol");
  add_format(perm, {"text", "json", "images", "cycles"});

  auto* order = app.add_subcommand("order", "Order of a shuffle or word");
  add_deck(order);
  order->add_option("--symbol", o.symbol, "Single shuffle");
  order->add_option("--word", o.word, "Word");
  add_format(order, plain_formats);

  auto* swap = app.add_subcommand("swap", "Unshuffle word exchanging two positions on a 2^k deck");
  add_deck(swap);
  swap->add_option("--a", o.a, "First position")->required();
  swap->add_option("--b", o.b, "Second position")->required();
  add_format(swap, plain_formats);

  auto* elmsley = app.add_subcommand("elmsley", "In/out word moving the top card to a position");
  add_deck(elmsley);
  elmsley->add_option("--position", o.position, "Target position")->required();
  add_format(elmsley, plain_formats);

  auto* group_order = app.add_subcommand("group-order", "Order of the group generated by shuffles");
  add_deck(group_order);
  group_order->add_option("--gens", o.gens, "LR, IO, or comma-separated words");
  add_engine(group_order);
  add_format(group_order, plain_formats);

  auto* group_predict = app.add_subcommand("group-predict", "Predicted structure of a shuffle group");
  add_deck(group_predict);
  group_predict->add_option("--family", o.family, "unshuffle or perfect")
      ->check(CLI::IsMember({"unshuffle", "perfect"}));
  add_format(group_predict, plain_formats);

  auto* group_member = app.add_subcommand("group-member", "Membership test in a shuffle group");
  add_deck(group_member);
  group_member->add_option("--gens", o.gens, "LR, IO, or comma-separated words");
  group_member->add_option("--word", o.word, "Candidate as a word");
  group_member->add_option("--perm", o.perm, "Candidate in image form, e.g. 5,4,3,2,1,0");
  add_format(group_member, plain_formats);

  auto* verify = app.add_subcommand("verify", "Check computed groups against the predictions");
  verify->add_option("--min", o.min_two_n, "Smallest deck");
  verify->add_option("--max", o.max_two_n, "Largest deck");
  verify->add_option("--out", o.out_path, "Report file");
  verify->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  add_engine(verify);
  add_format(verify, plain_formats);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsage;
  }

  try {
    if (*shuffle) return cmd_shuffle(o, out);
    if (*perm) return cmd_perm(o, out);
    if (*order) return cmd_order(o, out);
    if (*swap) return cmd_swap(o, out);
    if (*elmsley) return cmd_elmsley(o, out);
    if (*group_order) return cmd_group_order(o, out);
    if (*group_predict) return cmd_group_predict(o, out);
    if (*group_member) return cmd_group_member(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const BfsCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const NotPowerOfTwo& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace unshuffle::cli
