#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "semicount/semigroup.hpp"

namespace semicount::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct Overrides {
  std::optional<std::filesystem::path> out;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  std::optional<std::uint64_t> budget;
};

class RunConfig {
 public:
  /// Validates the document (ConfigError on any violation) and applies overrides.
  RunConfig(json doc, std::filesystem::path base_dir, const Overrides& overrides = {});

  const json& document() const noexcept { return doc_; }
  /// Command section, {} when absent.
  json section(const std::string& name) const;

  std::optional<std::uint64_t> seed() const noexcept { return seed_; }
  /// ConfigError naming the command when no seed is configured.
  std::uint64_t require_seed(const std::string& command) const;
  int threads() const noexcept { return threads_; }
  std::uint64_t budget() const noexcept { return budget_; }
  const std::filesystem::path& output_dir() const noexcept { return output_dir_; }

  bool has_spec() const noexcept { return !spec_doc_.is_null(); }
  const json& spec_document() const noexcept { return spec_doc_; }
  SemigroupSpec spec() const;

 private:
  json doc_;
  json spec_doc_;
  std::optional<std::uint64_t> seed_;
  int threads_ = 1;
  std::uint64_t budget_ = 10'000'000;
  std::filesystem::path output_dir_;
};

/// Reads and parses the file; malformed JSON raises ConfigError with the parser diagnostic.
json read_json_file(const std::filesystem::path& path);
RunConfig load_config(const std::filesystem::path& path, const Overrides& overrides = {});

/// Checks the document against the config schema (hand-mirrored).
void validate_config_document(const json& doc);

}  // namespace semicount::cli
