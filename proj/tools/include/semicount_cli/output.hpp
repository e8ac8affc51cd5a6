#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace semicount::cli {

using nlohmann::json;

/// Double rounded to 12 significant digits; null when not finite.
json fnum(double x);
/// Same rounding as text, "nan"/"inf" spelled out.
std::string fstr(double x);

struct CsvTable {
  std::string name;  // file stem
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

struct CommandResult {
  std::string command;
  /// "ok", "partial" or "failed".
  std::string status = "ok";
  json parameters = json::object();
  json result = json::object();
  json spec = nullptr;
  json seed = nullptr;
  std::vector<std::string> warnings;
  std::vector<CsvTable> tables;
  /// Human-readable report lines for standard output.
  std::vector<std::string> report;
  std::string summary;
  int exit_code = 0;

  json envelope() const;
};

std::string csv_text(const CsvTable& t);
/// Writes <dir>/<command>.json and one CSV per table; returns the paths written.
std::vector<std::filesystem::path> write_outputs(const std::filesystem::path& dir, const CommandResult& r);

}  // namespace semicount::cli
