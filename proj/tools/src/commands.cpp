#include "semicount_cli/commands.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "semicount/congruence.hpp"
#include "semicount/counting.hpp"
#include "semicount/dynamics.hpp"
#include "semicount/errors.hpp"
#include "semicount/thermo.hpp"
#include "semicount_cli/spec_io.hpp"
#include "semicount_cli/suites.hpp"

namespace semicount::cli {

namespace {

template <class T>
T get(const json& sec, const char* key, T def) {
  return sec.contains(key) ? sec.at(key).get<T>() : def;
}

std::vector<GaussianInteger> moduli(const json& sec, const char* key, std::vector<GaussianInteger> def) {
  if (!sec.contains(key)) return def;
  std::vector<GaussianInteger> out;
  for (std::size_t i = 0; i < sec.at(key).size(); ++i) {
    out.push_back(parse_gaussian(sec.at(key)[i], std::string(key) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json moduli_json(const std::vector<GaussianInteger>& qs) {
  json a = json::array();
  for (const auto& q : qs) a.push_back(q.str());
  return a;
}

std::vector<int> ints(const json& sec, const char* key, std::vector<int> def) {
  return sec.contains(key) ? sec.at(key).get<std::vector<int>>() : def;
}

std::string word_str(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
  return s;
}

json exact_integer(const Integer& x) {
  if (x.is_small()) return x.small_value();
  return x.str();
}

json exact_gaussian(const GaussianInteger& x) { return x.is_real() ? exact_integer(x.re()) : json(x.str()); }

CommandResult start(const std::string& name, const RunConfig& cfg, bool with_spec, bool randomized) {
  CommandResult r;
  r.command = name;
  if (with_spec) r.spec = describe_spec(cfg.spec());
  if (randomized) r.seed = cfg.require_seed(name);
  return r;
}

json suite_json(const SuiteResult& s) {
  return {{"name", s.name},         {"applicable", s.applicable}, {"passed", s.passed},
          {"checked", s.checked},   {"failures", s.failures},     {"max_error", fnum(s.max_error)},
          {"tolerance", fnum(s.tolerance)}, {"note", s.note}};
}

}  // namespace

CommandResult cmd_validate(const RunConfig& cfg) {
  CommandResult r = start("validate", cfg, true, false);
  SemigroupSpec spec = cfg.spec();
  PingPongReport rep = validate_ping_pong(spec);
  json overlapping = json::array();
  for (const auto& [i, j] : rep.overlapping) overlapping.push_back({i + 1, j + 1});
  r.result["passed"] = rep.passed;
  r.result["violations"] = rep.violations;
  r.result["overlapping"] = overlapping;
  r.result["irreducible"] = is_irreducible(spec);
  if (spec.kind() == SpecKind::ContinuedFractions) {
    r.result["epsilon"] = rational_str(spec.epsilon());
    r.result["trim_epsilon"] = rational_str(find_trim_epsilon(spec.alphabet()));
  }
  r.report.push_back(spec.describe());
  for (const auto& v : rep.violations) r.report.push_back("violation: " + v);
  if (rep.passed) {
    r.summary = "ping-pong conditions hold";
  } else {
    r.status = "failed";
    r.exit_code = 1;
    r.summary = std::to_string(rep.violations.size()) + " ping-pong violation(s)";
    for (const auto& [i, j] : rep.overlapping) {
      r.warnings.push_back("disks D" + std::to_string(i + 1) + " and D" + std::to_string(j + 1) + " overlap");
    }
  }
  return r;
}

CommandResult cmd_delta(const RunConfig& cfg) {
  CommandResult r = start("delta", cfg, true, false);
  SemigroupSpec spec = cfg.spec();
  const json sec = cfg.section("delta");
  const double tol = get(sec, "tol", 1e-8);
  BowenOptions opt;
  opt.depth = get(sec, "depth", 0);
  opt.extrapolate = get(sec, "extrapolate", true);
  const bool gibbs = get(sec, "gibbs", true);
  r.parameters = {{"tol", fnum(tol)}, {"depth", opt.depth}, {"extrapolate", opt.extrapolate}, {"gibbs", gibbs}};

  BowenResult b = bowen_delta(spec, tol, opt);
  CsvTable depths{"delta_depths", {"depth", "delta"}};
  json per = json::array();
  for (const auto& [d, v] : b.per_depth) {
    per.push_back({{"depth", d}, {"delta", fnum(v)}});
    depths.add({std::to_string(d), fstr(v)});
  }
  r.result = {{"delta", fnum(b.delta)},
              {"error_estimate", fnum(b.error_estimate)},
              {"depth", b.depth},
              {"residual", fnum(b.residual)},
              {"per_depth", per}};
  r.tables.push_back(std::move(depths));
  r.report.push_back("delta = " + fstr(b.delta) + "  error estimate " + fstr(b.error_estimate) + "  depth " +
                     std::to_string(b.depth));
  if (gibbs) {
    GibbsReport g = gibbs_check(spec, b.delta, b.depth);
    CsvTable t{"gibbs", {"length", "min_ratio", "max_ratio"}};
    json pl = json::array();
    for (const auto& [len, lo, hi] : g.per_length) {
      pl.push_back({{"length", len}, {"min_ratio", fnum(lo)}, {"max_ratio", fnum(hi)}});
      t.add({std::to_string(len), fstr(lo), fstr(hi)});
    }
    r.result["gibbs"] = {{"depth", b.depth}, {"c1", fnum(g.c1)}, {"c2", fnum(g.c2)}, {"ratio", fnum(g.c2 / g.c1)},
                         {"per_length", pl}};
    r.tables.push_back(std::move(t));
    r.report.push_back("Gibbs constants c1 = " + fstr(g.c1) + ", c2 = " + fstr(g.c2));
  }
  r.summary = "delta " + fstr(b.delta) + " +- " + fstr(b.error_estimate);
  return r;
}

CommandResult cmd_count(const RunConfig& cfg) {
  CommandResult r = start("count", cfg, true, false);
  SemigroupSpec spec = cfg.spec();
  const json sec = cfg.section("count");
  auto qs = moduli(sec, "q", {1, 2, 3});
  const double r0 = get(sec, "r0", 100.0);
  const int m = get(sec, "checkpoints", 10);
  Word base = sec.contains("base") ? parse_word(sec.at("base"), spec, "count.base") : Word{};
  BallCountOptions opt;
  opt.budget = cfg.budget();
  opt.threads = cfg.threads();
  opt.weight = parse_weight(sec.contains("weight") ? sec.at("weight") : json(nullptr), spec);
  opt.group_cap = get<std::size_t>(sec, "group_cap", QuotientGroup::kDefaultCap);
  const bool compare = get(sec, "compare_delta", true);
  r.parameters = {{"q", moduli_json(qs)}, {"r0", fnum(r0)},       {"checkpoints", m},
                  {"base", base},         {"budget", opt.budget}, {"compare_delta", compare}};
  if (sec.contains("weight")) r.parameters["weight"] = sec.at("weight");

  auto schedule = geometric_schedule(r0, m);
  std::optional<double> delta;
  if (compare) {
    try {
      delta = bowen_delta(spec, 1e-10).delta;
      r.result["delta"] = fnum(*delta);
    } catch (const DomainError& e) {
      r.warnings.push_back(std::string("delta unavailable: ") + e.what());
    }
  }
  json per_q = json::array();
  for (const auto& q : qs) {
    CountLedger led = ball_count(spec, q, base, schedule, opt);
    json entry;
    entry["q"] = q.str();
    entry["group_size"] = led.group_size;
    entry["enumerated"] = led.enumerated;
    entry["partial"] = led.partial;
    if (led.partial) {
      r.status = "partial";
      r.warnings.push_back("budget of " + std::to_string(opt.budget) + " nodes exhausted at q = " + q.str() +
                           ": counts are partial");
    }
    std::optional<EquidistributionReport> eq;
    if (led.group_size >= 2) eq = equidistribution_report(led);
    CsvTable t{"count_q" + q.str(),
               {"checkpoint", "radius_sq", "radius", "total", "weighted", "attained", "tv_attained", "tv_group"}};
    CsvTable classes{"count_classes_q" + q.str(), {"checkpoint", "class", "count", "weighted"}};
    json cps = json::array();
    for (std::size_t k = 0; k < led.counts.size(); ++k) {
      double w = 0.0;
      for (double x : led.weighted[k]) w += x;
      json cp = {{"radius_sq", rational_str(led.radius_sq[k])},
                 {"radius", fnum(led.radius[k])},
                 {"total", led.total(k)},
                 {"weighted", fnum(w)},
                 {"attained", led.attained(k)},
                 {"counts", led.counts[k]}};
      std::string tva = "", tvg = "";
      if (eq) {
        cp["tv_attained"] = fnum(eq->tv_attained[k]);
        cp["tv_group"] = fnum(eq->tv_group[k]);
        tva = fstr(eq->tv_attained[k]);
        tvg = fstr(eq->tv_group[k]);
      }
      cps.push_back(cp);
      t.add({std::to_string(k), rational_str(led.radius_sq[k]), fstr(led.radius[k]), std::to_string(led.total(k)),
             fstr(w), std::to_string(led.attained(k)), tva, tvg});
      for (std::size_t c = 0; c < led.counts[k].size(); ++c) {
        classes.add({std::to_string(k), std::to_string(c), std::to_string(led.counts[k][c]), fstr(led.weighted[k][c])});
      }
    }
    entry["checkpoints"] = cps;
    std::string line = "q = " + q.str() + ": total " + std::to_string(led.counts.empty() ? 0 : led.total(led.counts.size() - 1));
    try {
      ExponentFit fit = exponent_fit(led);
      entry["fit"] = {{"slope", fnum(fit.slope)},
                      {"intercept", fnum(fit.intercept)},
                      {"residual", fnum(fit.residual)},
                      {"slope_stderr", fnum(fit.slope_stderr)},
                      {"points", fit.points}};
      line += ", slope " + fstr(fit.slope);
      if (delta) {
        // ||gamma|| grows like e^{d/2} in SL2 and like e^{d} in SO(n,1)
        const double expected = spec.setting() == Setting::SOQ ? *delta : 2 * *delta;
        entry["fit"]["expected_slope"] = fnum(expected);
        entry["fit"]["slope_ratio"] = fnum(fit.slope / expected);
        line += " (expected " + fstr(expected) + ")";
      }
    } catch (const DomainError& e) {
      entry["fit"] = nullptr;
      r.warnings.push_back("q = " + q.str() + ": no exponent fit: " + e.what());
    }
    if (eq && !eq->tv_attained.empty()) line += ", final TV " + fstr(eq->tv_attained.back());
    r.report.push_back(line);
    per_q.push_back(entry);
    r.tables.push_back(std::move(t));
    r.tables.push_back(std::move(classes));
  }
  r.result["per_q"] = per_q;
  r.summary = std::to_string(qs.size()) + " moduli, " + std::to_string(m) + " checkpoints" +
              (r.status == "partial" ? ", partial" : "");
  return r;
}

CommandResult cmd_spectral(const RunConfig& cfg) {
  CommandResult r = start("spectral", cfg, true, true);
  SemigroupSpec spec = cfg.spec();
  const std::uint64_t seed = cfg.require_seed("spectral");
  const json sec = cfg.section("spectral");
  auto qs = moduli(sec, "q", {2, 3, 5});
  std::complex<double> xi = 0.0;
  if (sec.contains("xi")) {
    const json& x = sec.at("xi");
    xi = x.is_number() ? std::complex<double>(x.get<double>(), 0.0) : std::complex<double>(x[0].get<double>(), x[1].get<double>());
  }
  const int k_max = get(sec, "k_max", 12);
  const int trials = get(sec, "trials", 3);
  const bool control = get(sec, "control", true);
  DecayOptions opt;
  opt.depth = get(sec, "depth", 3);
  opt.cap = get<std::size_t>(sec, "group_cap", QuotientGroup::kDefaultCap);
  r.parameters = {{"q", moduli_json(qs)},
                  {"xi", {fnum(xi.real()), fnum(xi.imag())}},
                  {"k_max", k_max},
                  {"trials", trials},
                  {"depth", opt.depth},
                  {"control", control}};
  if (k_max < 2) throw ConfigError("spectral.k_max must be at least 2");

  CsvTable t{"spectral_norms", {"q", "k", "norm", "control_norm"}};
  json per_q = json::array();
  for (const auto& q : qs) {
    DecayReport d = congruence_decay_probe(spec, q, xi, k_max, trials, seed, opt);
    json entry = {{"q", q.str()},
                  {"eta", fnum(d.eta)},
                  {"group_size", d.group_size},
                  {"cylinders", d.cylinders},
                  {"degenerate", d.degenerate}};
    json norms = json::array();
    for (double x : d.norms) norms.push_back(fnum(x));
    entry["norms"] = norms;
    std::optional<DecayReport> c;
    if (control) {
      DecayOptions copt = opt;
      copt.constant_in_group = true;
      c = congruence_decay_probe(spec, q, xi, k_max, trials, seed, copt);
      json cn = json::array();
      for (double x : c->norms) cn.push_back(fnum(x));
      entry["control"] = {{"eta", fnum(c->eta)}, {"norms", cn}};
    }
    for (std::size_t k = 0; k < d.norms.size(); ++k) {
      t.add({q.str(), std::to_string(k), fstr(d.norms[k]), c ? fstr(c->norms[k]) : ""});
    }
    r.report.push_back("q = " + q.str() + ": eta " + fstr(d.eta) + (c ? ", control eta " + fstr(c->eta) : "") +
                       ", |G| = " + std::to_string(d.group_size));
    per_q.push_back(entry);
  }
  r.result["per_q"] = per_q;
  r.tables.push_back(std::move(t));
  r.summary = "decay probe at " + std::to_string(qs.size()) + " moduli";
  return r;
}

CommandResult cmd_expander(const RunConfig& cfg) {
  CommandResult r = start("expander", cfg, true, false);
  SemigroupSpec spec = cfg.spec();
  const json sec = cfg.section("expander");
  auto qs = moduli(sec, "q", {2, 3, 5, 7});
  auto ps = ints(sec, "p", {1, 2});
  const int y = get(sec, "y", 0), z = get(sec, "z", 0);
  const auto cap = get<std::size_t>(sec, "group_cap", QuotientGroup::kDefaultCap);
  const auto max_size = get<std::size_t>(sec, "max_size", 2000);
  r.parameters = {{"q", moduli_json(qs)}, {"p", ps}, {"y", y}, {"z", z}, {"group_cap", cap}, {"max_size", max_size}};

  bool complex_digits = false;
  if (spec.kind() == SpecKind::ContinuedFractions) {
    for (const auto& a : spec.alphabet()) complex_digits = complex_digits || !a.is_real();
  }
  CsvTable t{"expander", {"p", "q", "group_size", "generators", "lambda1", "lambda2", "constant_residual"}};
  json per_p = json::array();
  double min_gap = INFINITY;
  for (int p : ps) {
    ReturnTrajectorySet s = return_trajectory_set(spec, p, y, z);
    json entry = {{"p", p}, {"excursions", s.excursions.size()}, {"products", s.products}, {"elements", s.elements.size()}};
    DensityReport dens = zariski_density_probe(spec, p, y, z);
    entry["zariski"] = {{"verdict", to_string(dens.verdict)},
                        {"hyperbolic_elements", dens.hyperbolic_elements},
                        {"distinct_points", dens.distinct_points},
                        {"ratio", fnum(dens.ratio)}};
    if (complex_digits) {
      TraceWitness w = trace_field_witness(spec, p, y, z);
      entry["trace_witness"] = {{"case", w.case_label},  {"a", w.a.str()},
                                {"b", w.b.str()},         {"trace", w.trace.str()},
                                {"element", w.element.str()}, {"alpha", w.alpha},
                                {"alpha_tilde", w.alpha_tilde}};
    } else {
      entry["trace_witness"] = nullptr;
    }
    json gaps = json::array();
    for (const auto& q : qs) {
      QuotientGroup g(s.elements, spec_modulus(spec, q), cap);
      if (g.size() < 2) {
        gaps.push_back({{"q", q.str()}, {"group_size", g.size()}, {"generators", s.elements.size()},
                        {"lambda1", nullptr}, {"lambda2", nullptr}, {"constant_residual", nullptr}});
        t.add({std::to_string(p), q.str(), std::to_string(g.size()), std::to_string(s.elements.size()), "", "", ""});
        r.warnings.push_back("p = " + std::to_string(p) + ", q = " + q.str() + ": trivial quotient, no gap");
        continue;
      }
      std::vector<std::uint32_t> gens;
      for (const auto& h : s.elements) gens.push_back(g.index_of(h));
      GapReport gap = cayley_gap(g, gens, max_size);
      gaps.push_back({{"q", q.str()},
                      {"group_size", gap.group_size},
                      {"generators", gap.generator_count},
                      {"lambda1", fnum(gap.lambda1)},
                      {"lambda2", fnum(gap.lambda2)},
                      {"constant_residual", fnum(gap.constant_residual)}});
      t.add({std::to_string(p), q.str(), std::to_string(gap.group_size), std::to_string(gap.generator_count),
             fstr(gap.lambda1), fstr(gap.lambda2), fstr(gap.constant_residual)});
      if (g.size() > 1) min_gap = std::min(min_gap, gap.lambda2);
      r.report.push_back("p = " + std::to_string(p) + ", q = " + q.str() + ": |G| = " + std::to_string(gap.group_size) +
                         ", lambda2 = " + fstr(gap.lambda2));
    }
    entry["gaps"] = gaps;
    r.report.push_back("p = " + std::to_string(p) + ": Zariski probe " + to_string(dens.verdict));
    per_p.push_back(entry);
  }
  r.result["per_p"] = per_p;
  r.result["min_lambda2"] = fnum(min_gap);
  r.tables.push_back(std::move(t));
  r.summary = "smallest gap " + fstr(min_gap);
  return r;
}

CommandResult cmd_zaremba(const RunConfig& cfg) {
  const json sec = cfg.section("zaremba");
  std::vector<GaussianInteger> alphabet;
  if (sec.contains("alphabet")) {
    alphabet = moduli(sec, "alphabet", {});
  } else if (cfg.has_spec() && cfg.spec().kind() == SpecKind::ContinuedFractions) {
    alphabet = cfg.spec().alphabet();
  } else {
    throw ConfigError("zaremba needs an alphabet (zaremba.alphabet or a continued-fraction spec)");
  }
  CommandResult r = start("zaremba", cfg, false, false);
  const auto bound = get<std::int64_t>(sec, "bound", 500);
  std::vector<std::uint64_t> ns = sec.contains("n") ? sec.at("n").get<std::vector<std::uint64_t>>()
                                                    : std::vector<std::uint64_t>{1000, 10000};
  r.parameters = {{"alphabet", moduli_json(alphabet)}, {"bound", bound}, {"n", ns}};

  ZarembaSets sets = zaremba_sets(alphabet, Integer(bound));
  json dens = json::array();
  for (const auto& d : sets.denominators) dens.push_back(exact_gaussian(d));
  r.result["fractions"] = sets.fractions.size();
  r.result["denominators"] = dens;
  r.result["denominator_count"] = sets.denominators.size();
  CsvTable dt{"zaremba_denominators", {"d"}};
  for (const auto& d : sets.denominators) dt.add({d.str()});
  r.tables.push_back(std::move(dt));
  r.report.push_back(std::to_string(sets.denominators.size()) + " denominators with |d| <= " + std::to_string(bound));

  bool positive = true;
  for (const auto& a : alphabet) positive = positive && a.is_real() && a.re().sign() > 0;
  json density = json::array();
  if (positive) {
    CsvTable t{"zaremba_density", {"n", "count", "ratio"}};
    for (auto n : ns) {
      ZarembaDensity d = zaremba_density(alphabet, n);
      density.push_back({{"n", d.n}, {"count", d.count}, {"ratio", fnum(d.ratio)}});
      t.add({std::to_string(d.n), std::to_string(d.count), fstr(d.ratio)});
      r.report.push_back("density at N = " + std::to_string(d.n) + ": " + fstr(d.ratio));
    }
    r.tables.push_back(std::move(t));
    r.result["density"] = density;
  } else {
    r.result["density"] = nullptr;
    r.warnings.push_back("density is computed for positive integer alphabets only");
  }
  r.summary = std::to_string(sets.denominators.size()) + " denominators up to " + std::to_string(bound);
  return r;
}

CommandResult cmd_verify(const RunConfig& cfg) {
  CommandResult r = start("verify", cfg, true, true);
  SemigroupSpec spec = cfg.spec();
  const std::uint64_t seed = cfg.require_seed("verify");
  const json sec = cfg.section("verify");
  const auto trace_pairs = get<std::size_t>(sec, "trace_pairs", 1000);
  const int digit_bound = get(sec, "digit_bound", 9);
  const auto length_pairs = get<std::size_t>(sec, "length_pairs", 100);
  const auto samples = get<std::size_t>(sec, "samples", 10000);
  const int max_period = get(sec, "max_period", 5);
  const auto instances = get<std::size_t>(sec, "renewal_instances", 100);
  auto rqs = moduli(sec, "renewal_q", {2, 3});
  // preimage trees grow like N^depth; keep large alphabets at a shorter radius
  const double radius = get(sec, "renewal_radius", spec.symbol_count() <= 4 ? 6.0 : 3.0);
  r.parameters = {{"trace_pairs", trace_pairs}, {"digit_bound", digit_bound},     {"length_pairs", length_pairs},
                  {"samples", samples},         {"max_period", max_period},       {"renewal_instances", instances},
                  {"renewal_q", moduli_json(rqs)}, {"renewal_radius", fnum(radius)}};

  std::vector<SuiteResult> suites;
  suites.push_back(trace_case_suite(trace_pairs, digit_bound, seed));
  suites.push_back(product_length_suite(length_pairs, seed + 1));
  suites.push_back(sandwich_suite(spec, samples, seed + 2));
  suites.push_back(periodic_suite(spec, max_period));
  std::uint64_t k = 3;
  for (const auto& q : rqs) {
    suites.push_back(renewal_suite(spec, q, instances, seed + k++, radius, false));
    suites.push_back(renewal_suite(spec, q, instances, seed + k++, radius, true));
  }
  CsvTable t{"verify", {"suite", "applicable", "passed", "checked", "failures", "max_error", "tolerance"}};
  json arr = json::array();
  std::size_t failed = 0;
  for (const auto& s : suites) {
    arr.push_back(suite_json(s));
    t.add({s.name, s.applicable ? "true" : "false", s.passed ? "true" : "false", std::to_string(s.checked),
           std::to_string(s.failures), fstr(s.max_error), fstr(s.tolerance)});
    r.report.push_back(std::string(!s.applicable ? "skip " : s.passed ? "pass " : "FAIL ") + s.name + ": " +
                       std::to_string(s.checked) + " checks, max error " + fstr(s.max_error) +
                       (s.note.empty() ? "" : " (" + s.note + ")"));
    if (s.applicable && !s.passed) ++failed;
  }
  r.result["suites"] = arr;
  r.result["all_passed"] = failed == 0;
  r.tables.push_back(std::move(t));
  if (failed) {
    r.status = "failed";
    r.exit_code = 1;
  }
  r.summary = failed ? std::to_string(failed) + " suite(s) failed" : "all identity suites pass";
  return r;
}

CommandResult cmd_probe_lnic(const RunConfig& cfg) {
  CommandResult r = start("probe-lnic", cfg, true, true);
  SemigroupSpec spec = cfg.spec();
  const std::uint64_t seed = cfg.require_seed("probe-lnic");
  const json sec = cfg.section("lnic");
  auto ms = ints(sec, "m", {1, 2});
  const auto samples = get<std::size_t>(sec, "samples", 1000);
  r.parameters = {{"m", ms}, {"samples", samples}};
  CsvTable t{"lnic", {"m", "v1", "v2", "delta0", "section_pairs", "point_pairs"}};
  json arr = json::array();
  double best = -INFINITY;
  for (int m : ms) {
    LnicResult l = lnic_probe(spec, m, samples, seed);
    arr.push_back({{"m", m},
                   {"v1", l.v1},
                   {"v2", l.v2},
                   {"delta0", fnum(l.delta0)},
                   {"section_pairs", l.section_pairs},
                   {"point_pairs", l.point_pairs}});
    t.add({std::to_string(m), word_str(l.v1), word_str(l.v2), fstr(l.delta0), std::to_string(l.section_pairs),
           std::to_string(l.point_pairs)});
    r.report.push_back("m = " + std::to_string(m) + ": delta0 " + fstr(l.delta0) + " for sections [" + word_str(l.v1) +
                       "] vs [" + word_str(l.v2) + "]");
    best = std::max(best, l.delta0);
  }
  r.result["per_m"] = arr;
  r.result["best_delta0"] = fnum(best);
  r.result["positive"] = best > 0.0;
  r.tables.push_back(std::move(t));
  r.summary = "best delta0 " + fstr(best);
  return r;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"validate", "delta",   "count",     "spectral",
                                                 "expander", "zaremba", "verify",    "probe-lnic"};
  return names;
}

CommandResult run_command(const std::string& name, const RunConfig& cfg) {
  static const std::map<std::string, std::function<CommandResult(const RunConfig&)>> table = {
      {"validate", cmd_validate}, {"delta", cmd_delta},     {"count", cmd_count},   {"spectral", cmd_spectral},
      {"expander", cmd_expander}, {"zaremba", cmd_zaremba}, {"verify", cmd_verify}, {"probe-lnic", cmd_probe_lnic}};
  auto it = table.find(name);
  if (it == table.end()) throw ConfigError("unknown command " + name);
  return it->second(cfg);
}

int exit_code_for_current_exception(std::string& message) {
  try {
    throw;
  } catch (const ConfigError& e) {
    message = e.what();
    return 2;
  } catch (const ResourceError& e) {
    message = e.what();
    return 3;
  } catch (const DomainError& e) {
    message = e.what();
    return 1;
  } catch (const NumericError& e) {
    message = e.what();
    return 1;
  } catch (const json::exception& e) {
    message = std::string("config: ") + e.what();
    return 2;
  } catch (const std::bad_alloc&) {
    message = "out of memory";
    return 3;
  } catch (const std::exception& e) {
    message = e.what();
    return 1;
  }
}

}  // namespace semicount::cli
