#pragma once

// Verification report file: JSON with a fixed key order, orders as decimal
// strings, records sorted by deck size then family name.
//
//   {
//     "format": "unshuffle-verify/1",
//     "records": [
//       {
//         "two_n": 6,
//         "family": "perfect",
//         "case_tag": "mod3",
//         "engine_used": "bfs",                // null if infeasible
//         "computed_order": "24",              // null if infeasible
//         "predicted_order": "24",
//         "match": true,
//         "parities": {"I": 1, "O": -1, "phi(I)": 1, "phi(O)": -1},
//         "parities_match": null,              // unshuffle family only
//         "kernel_order_computed": null,       // when the kernel order is predicted
//         "kernel_order_predicted": null,
//         "error": null
//       }, ...
//     ]
//   }

#include <filesystem>
#include <span>
#include <string>

#include "unshuffle/verify.hpp"

namespace unshuffle {

inline constexpr std::string_view kReportFormat = "unshuffle-verify/1";

/// Serialized report, newline terminated. Throws std::invalid_argument for
/// an empty record list.
std::string serialize_report(std::span<const VerificationRecord> records);

/// Writes serialize_report(records) to `path`. Throws std::runtime_error if
/// the file cannot be written.
void write_report(std::span<const VerificationRecord> records, const std::filesystem::path& path);

}  // namespace unshuffle
