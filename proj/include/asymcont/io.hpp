#pragma once

// State files, measure records and CSV tables.
//
// State file (JSON):
//   {"dim_a": 2, "dim_b": 2,
//    "entries": [[[re, im], [re, im], ...], ...]}   // dim_a*dim_b rows
// Rows and columns follow the A-major basis |i_A i_B> -> i_A * dim_b + i_B.
// Doubles are written with round-trip precision.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "asymcont/linalg.hpp"
#include "asymcont/measures.hpp"

namespace asymcont {

/// Parses a state document. Throws FormatError on malformed input and
/// InvalidState on invariant violations unless `force` is set.
DensityMatrix state_from_json(const nlohmann::json& doc, bool force = false);
nlohmann::json state_to_json(const DensityMatrix& rho);

DensityMatrix read_state_file(const std::filesystem::path& path, bool force = false);
void write_state_file(const std::filesystem::path& path, const DensityMatrix& rho);

nlohmann::json to_json(const MeasureValue& v);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// CSV text; each comment line is emitted first, prefixed with "# ".
std::string to_csv(const Table& table, const std::vector<std::string>& comments = {});

/// Shortest round-trip decimal form of `x`.
std::string format_double(double x);

/// Writes `content` to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace asymcont
