#include "semicount_cli/spec_io.hpp"

#include <sstream>

#include "semicount/errors.hpp"

namespace semicount::cli {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) { throw ConfigError(where + ": " + what); }

Integer parse_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? Integer(v.get<std::uint64_t>()) : Integer(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Integer::parse(v.get<std::string>());
    } catch (const Error&) {
      bad(where, "not an integer: " + v.get<std::string>());
    }
  }
  bad(where, "expected an integer");
}

Rational parse_decimal(const std::string& s, const std::string& where) {
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      Integer num = Integer::parse(s.substr(0, slash));
      Integer den = Integer::parse(s.substr(slash + 1));
      if (den.is_zero()) bad(where, "zero denominator");
      return Rational(num.to_big()) / Rational(den.to_big());
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Integer::parse(s).to_rational();
    std::string frac = s.substr(dot + 1);
    std::string whole = s.substr(0, dot);
    bool neg = !whole.empty() && whole[0] == '-';
    if (neg || (!whole.empty() && whole[0] == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) bad(where, "bad decimal " + s);
    Rational scale = Integer::parse("1" + std::string(frac.size(), '0')).to_rational();
    Rational r = Integer::parse(whole).to_rational() + Integer::parse(frac).to_rational() / scale;
    return neg ? Rational(-r) : r;
  } catch (const ConfigError&) {
    throw;
  } catch (const Error&) {
    bad(where, "not a rational: " + s);
  }
}

std::vector<Rational> parse_point(const json& v, const std::string& where) {
  if (v.is_number() || v.is_string()) return {parse_rational(v, where)};
  if (!v.is_array() || v.empty()) bad(where, "expected a coordinate list");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(parse_rational(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

GroupElement parse_generator(const json& v, const std::string& where) {
  if (!v.is_array()) bad(where, "expected a row-major entry list");
  // nested rows are accepted as well
  json flat = json::array();
  for (const auto& x : v) {
    if (x.is_array() && !(x.size() == 2 && v.size() == 4)) {
      for (const auto& y : x) flat.push_back(y);
    } else {
      flat.push_back(x);
    }
  }
  std::vector<GaussianInteger> entries;
  for (std::size_t i = 0; i < flat.size(); ++i) entries.push_back(parse_gaussian(flat[i], where + "[" + std::to_string(i) + "]"));
  const std::size_t n = entries.size();
  if (n == 4) return GroupElement::sl2(entries[0], entries[1], entries[2], entries[3]);
  int size = 0;
  while (static_cast<std::size_t>(size * size) < n) ++size;
  if (static_cast<std::size_t>(size * size) != n || size < 3) bad(where, "expected 4 or (n+1)^2 entries");
  for (const auto& e : entries) {
    if (!e.is_real()) bad(where, "SO(n,1) entries must be real integers");
  }
  return GroupElement(Setting::SOQ, size, std::move(entries));
}

void check_keys(const json& doc, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, _] : doc.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) bad(where, "unknown key '" + key + "'");
  }
}

}  // namespace

GaussianInteger parse_gaussian(const json& v, const std::string& where) {
  if (v.is_number_integer()) return GaussianInteger(parse_integer(v, where));
  if (v.is_string()) {
    try {
      return GaussianInteger::parse(v.get<std::string>());
    } catch (const Error&) {
      bad(where, "not a Gaussian integer: " + v.get<std::string>());
    }
  }
  if (v.is_array() && v.size() == 2) return GaussianInteger(parse_integer(v[0], where), parse_integer(v[1], where));
  bad(where, "expected an integer, \"a+bi\" or [re, im]");
}

Rational parse_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return parse_integer(v, where).to_rational();
  if (v.is_number_float()) {
    double d = v.get<double>();
    if (!std::isfinite(d)) bad(where, "non-finite number");
    return Rational(d);
  }
  if (v.is_string()) return parse_decimal(v.get<std::string>(), where);
  bad(where, "expected a rational");
}

Word parse_word(const json& v, const SemigroupSpec& spec, const std::string& where) {
  if (!v.is_array()) bad(where, "expected a list of symbols");
  Word w;
  for (const auto& s : v) {
    if (!s.is_number_integer()) bad(where, "symbols are integers");
    int x = s.get<int>();
    if (x < 0 || x >= spec.symbol_count()) bad(where, "symbol " + std::to_string(x) + " out of range");
    w.push_back(x);
  }
  if (!is_admissible(w, spec)) bad(where, "word is not admissible");
  return w;
}

TestFunction parse_weight(const json& v, const SemigroupSpec& spec) {
  TestFunction f;
  if (v.is_null()) return f;
  if (v.is_number()) {
    f.default_value = v.get<double>();
    return f;
  }
  if (!v.is_object()) bad("weight", "expected a number or an object");
  check_keys(v, {"default", "cylinders"}, "weight");
  if (v.contains("default")) f.default_value = v.at("default").get<double>();
  if (v.contains("cylinders")) {
    for (const auto& c : v.at("cylinders")) {
      if (!c.is_object() || !c.contains("word") || !c.contains("value")) bad("weight.cylinders", "need word and value");
      Word w = parse_word(c.at("word"), spec, "weight.cylinders.word");
      if (w.empty()) bad("weight.cylinders", "empty cylinder word");
      f.cylinders.emplace_back(std::move(w), c.at("value").get<double>());
    }
  }
  return f;
}

SemigroupSpec parse_spec(const json& doc) {
  if (!doc.is_object()) bad("spec", "expected an object");
  if (!doc.contains("setting") || !doc.at("setting").is_string()) bad("spec", "missing setting");
  const std::string setting = doc.at("setting").get<std::string>();
  if (setting == "cf") {
    check_keys(doc, {"setting", "n", "alphabet", "epsilon", "name"}, "spec");
    if (!doc.contains("alphabet") || !doc.at("alphabet").is_array() || doc.at("alphabet").empty()) {
      bad("spec.alphabet", "expected a nonempty list");
    }
    std::vector<GaussianInteger> alphabet;
    for (std::size_t i = 0; i < doc.at("alphabet").size(); ++i) {
      alphabet.push_back(parse_gaussian(doc.at("alphabet")[i], "spec.alphabet[" + std::to_string(i) + "]"));
    }
    bool real = true;
    for (const auto& a : alphabet) real = real && a.is_real();
    if (doc.contains("n")) {
      int n = doc.at("n").get<int>();
      if (n != (real ? 2 : 3)) bad("spec.n", "a " + std::string(real ? "real" : "Gaussian") + " alphabet acts on H^" +
                                                 std::to_string(real ? 2 : 3));
    }
    Rational eps = doc.contains("epsilon") ? parse_rational(doc.at("epsilon"), "spec.epsilon") : find_trim_epsilon(alphabet);
    return SemigroupSpec::continued_fractions(std::move(alphabet), eps);
  }
  if (setting == "schottky") {
    check_keys(doc, {"setting", "n", "generators", "disks", "name"}, "spec");
    if (!doc.contains("generators") || !doc.at("generators").is_array() || doc.at("generators").empty()) {
      bad("spec.generators", "expected a nonempty list");
    }
    if (!doc.contains("disks") || !doc.at("disks").is_array()) bad("spec.disks", "expected a list");
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < doc.at("generators").size(); ++i) {
      gens.push_back(parse_generator(doc.at("generators")[i], "spec.generators[" + std::to_string(i) + "]"));
    }
    std::vector<Disk> disks;
    for (std::size_t i = 0; i < doc.at("disks").size(); ++i) {
      const json& d = doc.at("disks")[i];
      const std::string where = "spec.disks[" + std::to_string(i) + "]";
      if (!d.is_object() || !d.contains("center")) bad(where, "need center and radius");
      check_keys(d, {"center", "radius", "radius_sq"}, where);
      Disk disk;
      disk.center = parse_point(d.at("center"), where + ".center");
      if (d.contains("radius_sq")) {
        disk.radius_sq = parse_rational(d.at("radius_sq"), where + ".radius_sq");
      } else if (d.contains("radius")) {
        Rational r = parse_rational(d.at("radius"), where + ".radius");
        disk.radius_sq = r * r;
      } else {
        bad(where, "need radius or radius_sq");
      }
      disks.push_back(std::move(disk));
    }
    if (doc.contains("n")) {
      int n = doc.at("n").get<int>();
      if (n != gens.front().hyperbolic_dim()) {
        bad("spec.n", "generators act on H^" + std::to_string(gens.front().hyperbolic_dim()));
      }
    }
    return SemigroupSpec::schottky(std::move(gens), std::move(disks));
  }
  bad("spec.setting", "expected \"cf\" or \"schottky\", got \"" + setting + "\"");
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

json describe_spec(const SemigroupSpec& spec) {
  json out;
  out["setting"] = spec.kind() == SpecKind::ContinuedFractions ? "cf" : "schottky";
  out["group"] = to_string(spec.setting());
  out["n"] = spec.hyperbolic_dim();
  out["symbols"] = spec.symbol_count();
  if (spec.kind() == SpecKind::ContinuedFractions) {
    json a = json::array();
    for (const auto& x : spec.alphabet()) a.push_back(x.str());
    out["alphabet"] = a;
    out["epsilon"] = rational_str(spec.epsilon());
  } else {
    out["n0"] = spec.n0();
    out["n1"] = spec.n1();
    json g = json::array();
    for (const auto& x : spec.generators()) g.push_back(x.str());
    out["generators"] = g;
  }
  out["description"] = spec.describe();
  return out;
}

}  // namespace semicount::cli
