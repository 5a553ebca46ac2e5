#include "unshuffle/report.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace unshuffle {

namespace {

using Json = nlohmann::ordered_json;

template <class T, class F>
Json optional_to_json(const std::optional<T>& value, F&& convert) {
  return value ? Json(convert(*value)) : Json(nullptr);
}

Json record_to_json(const VerificationRecord& r) {
  const bool unshuffle = r.family == Family::unshuffle;
  const std::string a = unshuffle ? "L" : "I";
  const std::string b = unshuffle ? "R" : "O";

  Json parities = Json::object();
  parities[a] = r.parities[0].value();
  parities[b] = r.parities[1].value();
  parities["phi(" + a + ")"] = r.parities[2].value();
  parities["phi(" + b + ")"] = r.parities[3].value();

  auto decimal = [](const Natural& x) { return x.str(); };
  Json j = Json::object();
  j["two_n"] = r.two_n;
  j["family"] = std::string(to_string(r.family));
  j["case_tag"] = std::string(to_string(r.case_tag));
  j["engine_used"] = optional_to_json(r.engine_used, [](Engine e) { return std::string(to_string(e)); });
  j["computed_order"] = optional_to_json(r.computed_order, decimal);
  j["predicted_order"] = r.predicted_order.str();
  j["match"] = r.match;
  j["parities"] = std::move(parities);
  j["parities_match"] = optional_to_json(r.parities_match, [](bool v) { return v; });
  j["kernel_order_computed"] = optional_to_json(r.kernel_order_computed, decimal);
  j["kernel_order_predicted"] = optional_to_json(r.kernel_order_predicted, decimal);
  j["error"] = optional_to_json(r.error, [](const std::string& s) { return s; });
  return j;
}

}  // namespace

std::string serialize_report(std::span<const VerificationRecord> records) {
  if (records.empty()) throw std::invalid_argument("report needs at least one record");
  std::vector<const VerificationRecord*> sorted;
  for (const auto& r : records) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto* x, const auto* y) {
    if (x->two_n != y->two_n) return x->two_n < y->two_n;
    return to_string(x->family) < to_string(y->family);
  });

  Json doc = Json::object();
  doc["format"] = std::string(kReportFormat);
  Json list = Json::array();
  for (const auto* r : sorted) list.push_back(record_to_json(*r));
  doc["records"] = std::move(list);
  return doc.dump(2) + "\n";
}

void write_report(std::span<const VerificationRecord> records, const std::filesystem::path& path) {
  const std::string text = serialize_report(records);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open report file " + path.string());
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("failed writing report file " + path.string());
}

}  // namespace unshuffle
