#include "semicount_cli/config.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "semicount/errors.hpp"
#include "semicount_cli/spec_io.hpp"

namespace semicount::cli {

namespace {

enum class Kind { PosInt, NonNegInt, PosNumber, Bool, ModulusList, PosIntList, Word, Weight, ComplexPair, DigitList };

using Section = std::map<std::string, Kind>;

const std::map<std::string, Section>& sections() {
  static const std::map<std::string, Section> s = {
      {"validate", {}},
      {"delta", {{"tol", Kind::PosNumber}, {"depth", Kind::NonNegInt}, {"extrapolate", Kind::Bool}, {"gibbs", Kind::Bool}}},
      {"count",
       {{"q", Kind::ModulusList},
        {"r0", Kind::PosNumber},
        {"checkpoints", Kind::PosInt},
        {"base", Kind::Word},
        {"weight", Kind::Weight},
        {"compare_delta", Kind::Bool},
        {"group_cap", Kind::PosInt}}},
      {"spectral",
       {{"q", Kind::ModulusList},
        {"xi", Kind::ComplexPair},
        {"k_max", Kind::PosInt},
        {"trials", Kind::PosInt},
        {"depth", Kind::PosInt},
        {"control", Kind::Bool},
        {"group_cap", Kind::PosInt}}},
      {"expander",
       {{"q", Kind::ModulusList},
        {"p", Kind::PosIntList},
        {"y", Kind::NonNegInt},
        {"z", Kind::NonNegInt},
        {"group_cap", Kind::PosInt},
        {"max_size", Kind::PosInt}}},
      {"zaremba", {{"alphabet", Kind::DigitList}, {"bound", Kind::PosInt}, {"n", Kind::PosIntList}}},
      {"verify",
       {{"trace_pairs", Kind::NonNegInt},
        {"digit_bound", Kind::PosInt},
        {"length_pairs", Kind::NonNegInt},
        {"samples", Kind::NonNegInt},
        {"max_period", Kind::NonNegInt},
        {"renewal_instances", Kind::NonNegInt},
        {"renewal_q", Kind::ModulusList},
        {"renewal_radius", Kind::PosNumber}}},
      {"lnic", {{"m", Kind::PosIntList}, {"samples", Kind::PosInt}}},
  };
  return s;
}

[[noreturn]] void bad(const std::string& where, const std::string& what) { throw ConfigError(where + ": " + what); }

bool is_pos_int(const json& v) {
  return v.is_number_integer() && (v.is_number_unsigned() || v.get<std::int64_t>() > 0) &&
         !(v.is_number_unsigned() && v.get<std::uint64_t>() == 0);
}
bool is_nonneg_int(const json& v) { return v.is_number_integer() && (v.is_number_unsigned() || v.get<std::int64_t>() >= 0); }

void check_value(const json& v, Kind kind, const std::string& where) {
  switch (kind) {
    case Kind::PosInt:
      if (!is_pos_int(v)) bad(where, "expected a positive integer");
      return;
    case Kind::NonNegInt:
      if (!is_nonneg_int(v)) bad(where, "expected a nonnegative integer");
      return;
    case Kind::PosNumber:
      if (!v.is_number() || !(v.get<double>() > 0)) bad(where, "expected a positive number");
      return;
    case Kind::Bool:
      if (!v.is_boolean()) bad(where, "expected true or false");
      return;
    case Kind::ModulusList:
    case Kind::DigitList:
      if (!v.is_array() || v.empty()) bad(where, "expected a nonempty list");
      for (std::size_t i = 0; i < v.size(); ++i) {
        GaussianInteger g = parse_gaussian(v[i], where + "[" + std::to_string(i) + "]");
        if (g.is_zero()) bad(where, "zero entry");
      }
      return;
    case Kind::PosIntList:
      if (!v.is_array() || v.empty()) bad(where, "expected a nonempty list");
      for (const auto& x : v) {
        if (!is_pos_int(x)) bad(where, "expected positive integers");
      }
      return;
    case Kind::Word:
      if (!v.is_array()) bad(where, "expected a list of symbols");
      for (const auto& x : v) {
        if (!is_nonneg_int(x)) bad(where, "symbols are nonnegative integers");
      }
      return;
    case Kind::Weight:
      if (!v.is_number() && !v.is_object()) bad(where, "expected a number or an object");
      return;
    case Kind::ComplexPair:
      if (v.is_number()) return;
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) bad(where, "expected [re, im]");
      return;
  }
}

}  // namespace

void validate_config_document(const json& doc) {
  if (!doc.is_object()) bad("config", "expected an object");
  if (!doc.contains("schema_version")) bad("config", "missing schema_version");
  if (!doc.at("schema_version").is_number_integer() || doc.at("schema_version").get<int>() != kSchemaVersion) {
    bad("config.schema_version", "expected " + std::to_string(kSchemaVersion));
  }
  for (const auto& [key, value] : doc.items()) {
    const std::string where = "config." + key;
    if (key == "schema_version") continue;
    if (key == "name" || key == "description" || key == "output_dir") {
      if (!value.is_string()) bad(where, "expected a string");
    } else if (key == "spec") {
      if (!value.is_string() && !value.is_object()) bad(where, "expected a path or an inline spec");
    } else if (key == "seed") {
      if (!is_nonneg_int(value)) bad(where, "expected an unsigned 64-bit integer");
    } else if (key == "threads" || key == "budget") {
      check_value(value, Kind::PosInt, where);
    } else if (auto it = sections().find(key); it != sections().end()) {
      if (!value.is_object()) bad(where, "expected an object");
      for (const auto& [k, v] : value.items()) {
        auto kt = it->second.find(k);
        if (kt == it->second.end()) bad(where, "unknown key '" + k + "'");
        check_value(v, kt->second, where + "." + k);
      }
    } else {
      bad("config", "unknown key '" + key + "'");
    }
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": malformed JSON: " + e.what());
  }
}

RunConfig::RunConfig(json doc, std::filesystem::path base_dir, const Overrides& overrides) : doc_(std::move(doc)) {
  validate_config_document(doc_);
  if (doc_.contains("seed")) seed_ = doc_.at("seed").get<std::uint64_t>();
  if (doc_.contains("threads")) threads_ = doc_.at("threads").get<int>();
  if (doc_.contains("budget")) budget_ = doc_.at("budget").get<std::uint64_t>();
  output_dir_ = doc_.contains("output_dir") ? base_dir / doc_.at("output_dir").get<std::string>()
                                            : std::filesystem::path("semicount_out");
  if (overrides.seed) seed_ = overrides.seed;
  if (overrides.threads) {
    if (*overrides.threads < 1) throw ConfigError("--threads must be at least 1");
    threads_ = *overrides.threads;
  }
  if (overrides.budget) {
    if (*overrides.budget < 1) throw ConfigError("--budget must be at least 1");
    budget_ = *overrides.budget;
  }
  if (overrides.out) output_dir_ = *overrides.out;

  if (doc_.contains("spec")) {
    const json& s = doc_.at("spec");
    spec_doc_ = s.is_string() ? read_json_file(base_dir / s.get<std::string>()) : s;
    if (!spec_doc_.is_object()) throw ConfigError("spec: expected an object");
  }
  // record the effective values so outputs reflect them
  if (seed_) doc_["seed"] = *seed_;
  doc_["threads"] = threads_;
  doc_["budget"] = budget_;
}

json RunConfig::section(const std::string& name) const {
  if (doc_.contains(name)) return doc_.at(name);
  return json::object();
}

std::uint64_t RunConfig::require_seed(const std::string& command) const {
  if (!seed_) throw ConfigError(command + " is randomized: set \"seed\" in the config or pass --seed");
  return *seed_;
}

SemigroupSpec RunConfig::spec() const {
  if (!has_spec()) throw ConfigError("config has no spec");
  return parse_spec(spec_doc_);
}

RunConfig load_config(const std::filesystem::path& path, const Overrides& overrides) {
  json doc = read_json_file(path);
  return RunConfig(std::move(doc), path.parent_path(), overrides);
}

}  // namespace semicount::cli
