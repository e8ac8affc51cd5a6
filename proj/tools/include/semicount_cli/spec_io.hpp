#pragma once

#include "json.hpp"

#include "semicount/counting.hpp"
#include "semicount/semigroup.hpp"

namespace semicount::cli {

using nlohmann::json;

/// Integer, "1+i" style string, or [re, im].
GaussianInteger parse_gaussian(const json& v, const std::string& where);
/// Integer, "p/q" or decimal string, or a JSON number (converted exactly).
Rational parse_rational(const json& v, const std::string& where);
Word parse_word(const json& v, const SemigroupSpec& spec, const std::string& where);
TestFunction parse_weight(const json& v, const SemigroupSpec& spec);

/// Spec document:
///   {"setting": "cf", "alphabet": [1, 2, [1, 1]], "epsilon": "341/1024"}
///   {"setting": "schottky", "n": 2, "generators": [[...], ...],
///    "disks": [{"center": ["5/2"], "radius": "1/2"}, ...]}
/// Shape problems raise ConfigError; structural ones DomainError.
SemigroupSpec parse_spec(const json& doc);

json describe_spec(const SemigroupSpec& spec);
std::string rational_str(const Rational& r);

}  // namespace semicount::cli
