#include "semicount_cli/output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "semicount/errors.hpp"

namespace semicount::cli {

json fnum(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

std::string fstr(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

json CommandResult::envelope() const {
  json out;
  out["schema_version"] = 1;
  out["command"] = command;
  out["status"] = status;
  out["seed"] = seed;
  out["spec"] = spec;
  out["parameters"] = parameters;
  out["result"] = result;
  out["warnings"] = warnings;
  out["summary"] = summary;
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw ResourceError("cannot write " + p.string());
  out << text;
  if (!out) throw ResourceError("write failed: " + p.string());
}

}  // namespace

std::string csv_text(const CsvTable& t) {
  std::string out;
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(row[i]);
    out += '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return out;
}

std::vector<std::filesystem::path> write_outputs(const std::filesystem::path& dir, const CommandResult& r) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ResourceError("cannot create " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  auto json_path = dir / (r.command + ".json");
  write_file(json_path, r.envelope().dump(2) + "\n");
  written.push_back(json_path);
  for (const auto& t : r.tables) {
    auto p = dir / (t.name + ".csv");
    write_file(p, csv_text(t));
    written.push_back(p);
  }
  return written;
}

}  // namespace semicount::cli
