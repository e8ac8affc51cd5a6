#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "semicount/errors.hpp"
#include "semicount_cli/commands.hpp"
#include "semicount_cli/spec_io.hpp"
#include "semicount_cli/suites.hpp"

using namespace semicount;
using namespace semicount::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("semicount_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

fs::path write(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "semicount");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::string kCf12 = R"({"setting": "cf", "alphabet": [1, 2], "epsilon": "341/1024"})";

}  // namespace

TEST_CASE("rationals and Gaussian integers from JSON") {
  CHECK(parse_rational(json("3/4"), "x") == Rational(3, 4));
  CHECK(parse_rational(json("-0.125"), "x") == Rational(-1, 8));
  CHECK(parse_rational(json(0.5), "x") == Rational(1, 2));
  CHECK(parse_rational(json(7), "x") == Rational(7));
  CHECK_THROWS_AS(parse_rational(json("1/0"), "x"), ConfigError);
  CHECK_THROWS_AS(parse_rational(json("abc"), "x"), ConfigError);
  CHECK(parse_gaussian(json::parse("[1, -2]"), "x") == GaussianInteger(1, -2));
  CHECK(parse_gaussian(json("2-3i"), "x") == GaussianInteger(2, -3));
  CHECK(parse_gaussian(json("123456789012345678901234567890"), "x").re().str() == "123456789012345678901234567890");
  CHECK_THROWS_AS(parse_gaussian(json(1.5), "x"), ConfigError);
}

TEST_CASE("spec documents") {
  SemigroupSpec cf = parse_spec(json::parse(kCf12));
  CHECK(cf.symbol_count() == 4);
  CHECK(cf.epsilon() == Rational(341, 1024));
  // epsilon defaults to the trimmed value
  CHECK(parse_spec(json::parse(R"({"setting": "cf", "alphabet": [1, 2]})")).epsilon() == Rational(341, 1024));
  SemigroupSpec g = parse_spec(json::parse(R"({"setting": "cf", "n": 3, "alphabet": [1, 2, [1, 1]]})"));
  CHECK(g.setting() == Setting::SL2C);
  CHECK_THROWS_AS(parse_spec(json::parse(R"({"setting": "cf", "n": 3, "alphabet": [1, 2]})")), ConfigError);
  CHECK_THROWS_AS(parse_spec(json::parse(R"({"setting": "cf", "alphabet": [1], "extra": 0})")), ConfigError);
  CHECK_THROWS_AS(parse_spec(json::parse(R"({"setting": "hyperbolic"})")), ConfigError);

  json sch = json::parse(R"({"setting": "schottky", "n": 2,
    "generators": [[5, 12, 2, 5], [[4, 3], [5, 4]]],
    "disks": [{"center": "5/2", "radius": "1/2"}, {"center": ["4/5"], "radius_sq": "1/25"},
              {"center": ["-5/2"], "radius": 0.5}, {"center": ["-4/5"], "radius": "0.2"}]})");
  SemigroupSpec s = parse_spec(sch);
  CHECK(s.setting() == Setting::SL2R);
  CHECK(s.n0() == 2);
  CHECK(s.disks()[3].radius_sq == Rational(1, 25));
  CHECK(validate_ping_pong(s).passed);
  sch["n"] = 3;
  CHECK_THROWS_AS(parse_spec(sch), ConfigError);
  // SO(2,1) generator that does not preserve the form
  json bad = json::parse(R"({"setting": "schottky", "generators": [[1,0,0, 0,2,0, 0,0,1]],
                               "disks": [{"center": 0, "radius": 1}, {"center": 5, "radius": 1}]})");
  CHECK_THROWS_AS(parse_spec(bad), DomainError);

  json d = describe_spec(cf);
  CHECK(d["setting"] == "cf");
  CHECK(d["epsilon"] == "341/1024");
}

TEST_CASE("config validation") {
  CHECK_NOTHROW(validate_config_document(json::parse(R"({"schema_version": 1, "count": {"q": [2, [1, 1]]}})")));
  CHECK_THROWS_AS(validate_config_document(json::parse(R"({"schema_version": 2})")), ConfigError);
  CHECK_THROWS_AS(validate_config_document(json::parse(R"({"count": {}})")), ConfigError);
  CHECK_THROWS_AS(validate_config_document(json::parse(R"({"schema_version": 1, "count": {"radius": 1}})")), ConfigError);
  CHECK_THROWS_AS(validate_config_document(json::parse(R"({"schema_version": 1, "delta": {"tol": -1}})")), ConfigError);
  CHECK_THROWS_AS(validate_config_document(json::parse(R"({"schema_version": 1, "lnic": {"m": []}})")), ConfigError);

  RunConfig cfg(json::parse(R"({"schema_version": 1, "seed": 4, "budget": 50})"), ".", Overrides{{}, 9, 2, {}});
  CHECK(cfg.seed() == 9u);
  CHECK(cfg.threads() == 2);
  CHECK(cfg.budget() == 50u);
  CHECK_FALSE(cfg.has_spec());
  CHECK_THROWS_AS(cfg.spec(), ConfigError);
  RunConfig unseeded(json::parse(R"({"schema_version": 1})"), ".");
  CHECK_THROWS_AS(unseeded.require_seed("spectral"), ConfigError);
}

TEST_CASE("number formatting and CSV") {
  CHECK(fnum(0.1 + 0.2).get<double>() == 0.3);
  CHECK(fnum(1.0 / 3.0).dump() == "0.333333333333");
  CHECK(fnum(std::nan("")).is_null());
  CHECK(fnum(-0.0).dump() == "0.0");
  CHECK(fstr(123456789.123456789) == "123456789.123");
  CsvTable t{"t", {"a", "b"}};
  t.add({"1,2", "x\"y"});
  CHECK(csv_text(t) == "a,b\n\"1,2\",\"x\"\"y\"\n");
}

TEST_CASE("exit codes") {
  fs::path dir = scratch("exit");
  fs::path spec = write(dir / "spec.json", kCf12);
  fs::path ok = write(dir / "ok.json", R"({"schema_version": 1, "spec": "spec.json", "zaremba": {"bound": 50, "n": [100]}})");
  Run r = run({"validate", "--config", ok.string(), "--out", (dir / "o").string()});
  CHECK(r.code == 0);
  CHECK(fs::exists(dir / "o" / "validate.json"));
  CHECK(r.out.find("semicount validate: ok") != std::string::npos);

  fs::path malformed = write(dir / "bad.json", R"({"schema_version": 1,)");
  r = run({"validate", "--config", malformed.string(), "--out", (dir / "o").string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("malformed JSON") != std::string::npos);

  fs::path overlap = write(dir / "overlap.json", R"({"schema_version": 1, "spec": {"setting": "schottky",
      "generators": [[5, 12, 2, 5], [4, 3, 5, 4]],
      "disks": [{"center": "5/2", "radius": "3/2"}, {"center": "4/5", "radius": "1/5"},
                {"center": "-5/2", "radius": "1/2"}, {"center": "-4/5", "radius": "1/5"}]}})");
  r = run({"validate", "--config", overlap.string(), "--out", (dir / "ov").string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("disks D1 and D2 overlap") != std::string::npos);
  json rep = json::parse(slurp(dir / "ov" / "validate.json"));
  CHECK(rep["status"] == "failed");
  CHECK(rep["result"]["overlapping"] == json::parse("[[1, 2]]"));

  // randomized command without a seed
  r = run({"spectral", "--config", ok.string(), "--out", (dir / "o").string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("seed") != std::string::npos);

  // modulus outside the coefficient ring: domain error
  fs::path gq = write(dir / "gq.json", R"({"schema_version": 1, "spec": "spec.json", "count": {"q": [[1, 1]]}})");
  CHECK(run({"count", "--config", gq.string(), "--out", (dir / "o").string()}).code == 1);

  // group above the cap: resource error
  fs::path cap = write(dir / "cap.json", R"({"schema_version": 1, "spec": "spec.json", "count": {"q": [7], "group_cap": 10}})");
  CHECK(run({"count", "--config", cap.string(), "--out", (dir / "o").string()}).code == 3);

  CHECK(run({"count"}).code == 2);
  CHECK(run({"nonsense", "--config", ok.string()}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("tiny budget gives a partial ledger and a warning") {
  fs::path dir = scratch("budget");
  write(dir / "spec.json", kCf12);
  fs::path cfg = write(dir / "c.json", R"({"schema_version": 1, "spec": "spec.json", "count": {"q": [3], "compare_delta": false}})");
  Run r = run({"count", "--config", cfg.string(), "--out", (dir / "o").string(), "--budget", "10"});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
  json out = json::parse(slurp(dir / "o" / "count.json"));
  CHECK(out["status"] == "partial");
  CHECK(out["result"]["per_q"][0]["partial"] == true);
}

TEST_CASE("outputs are byte-identical across runs and thread counts") {
  fs::path dir = scratch("determinism");
  write(dir / "spec.json", kCf12);
  fs::path cfg = write(dir / "c.json", R"({"schema_version": 1, "spec": "spec.json", "seed": 5,
      "count": {"q": [1, 3], "r0": 60, "checkpoints": 6},
      "spectral": {"q": [3], "k_max": 6, "trials": 2, "depth": 2},
      "verify": {"trace_pairs": 50, "length_pairs": 10, "samples": 200, "max_period": 3, "renewal_instances": 5},
      "lnic": {"m": [1], "samples": 100}})");
  for (const std::string cmd : {"count", "spectral", "verify", "probe-lnic"}) {
    Run a = run({cmd, "--config", cfg.string(), "--out", (dir / "a").string(), "--threads", "1"});
    Run b = run({cmd, "--config", cfg.string(), "--out", (dir / "b").string(), "--threads", "3"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(a.out == b.out);
    for (const auto& e : fs::directory_iterator(dir / "a")) {
      CHECK_MESSAGE(slurp(e.path()) == slurp(dir / "b" / e.path().filename()), e.path().filename().string());
    }
  }
  // a different seed changes the randomized output
  Run c = run({"spectral", "--config", cfg.string(), "--out", (dir / "c").string(), "--seed", "6"});
  REQUIRE(c.code == 0);
  CHECK(slurp(dir / "c" / "spectral.json") != slurp(dir / "a" / "spectral.json"));
}

TEST_CASE("identity suites detect planted errors") {
  auto spec = parse_spec(json::parse(kCf12));
  SuiteResult p = periodic_suite(spec, 3);
  CHECK(p.passed);
  CHECK(p.checked == 4 + 16 + 64);
  // an impossible tolerance fails
  CHECK_FALSE(periodic_suite(spec, 2, 0.0).passed);
  CHECK_FALSE(product_length_suite(5, 1, 0.0).passed);
  CHECK(trace_case_suite(20, 3, 1).checked == 80);
  SuiteResult r = renewal_suite(spec, 3, 10, 4, 3.0, false);
  CHECK(r.passed);
  CHECK(r.checked == 10);
}
