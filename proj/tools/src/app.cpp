#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "semicount_cli/commands.hpp"

namespace semicount::cli {

namespace {

const char* describe(const std::string& name) {
  if (name == "validate") return "check the ping-pong conditions of a spec";
  if (name == "delta") return "critical exponent by the Bowen root, with Gibbs constants";
  if (name == "count") return "norm-ball counts by congruence class, exponent fit, equidistribution";
  if (name == "spectral") return "decay of the congruence transfer operator";
  if (name == "expander") return "Cayley-graph gaps of return-trajectory sets mod q";
  if (name == "zaremba") return "denominator sets and densities of bounded continued fractions";
  if (name == "verify") return "exact and numeric identity suites";
  return "non-integrability constant of length-m sections";
}

}  // namespace

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"semicount: congruence counting experiments on thin semigroups"};
  app.require_subcommand(1);
  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed, budget;
  std::optional<int> threads;
  for (const auto& name : command_names()) {
    CLI::App* sub = app.add_subcommand(name, describe(name));
    sub->add_option("--config", config_path, "config file (JSON, schema_version 1)")->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--seed", seed, "seed for randomized probes");
    sub->add_option("--threads", threads, "worker threads");
    sub->add_option("--budget", budget, "enumeration budget (tree nodes)");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  const std::string name = app.get_subcommands().front()->get_name();
  try {
    Overrides ov;
    if (out_dir) ov.out = *out_dir;
    ov.seed = seed;
    ov.threads = threads;
    ov.budget = budget;
    RunConfig cfg = load_config(config_path, ov);
    CommandResult r = run_command(name, cfg);
    write_outputs(cfg.output_dir(), r);
    for (const auto& line : r.report) out << line << '\n';
    for (const auto& w : r.warnings) err << "warning: " << w << '\n';
    out << "semicount " << name << ": " << r.status << ": " << r.summary << '\n';
    return r.exit_code;
  } catch (...) {
    std::string message;
    int code = exit_code_for_current_exception(message);
    err << "semicount " << name << ": error: " << message << '\n';
    return code;
  }
}

}  // namespace semicount::cli
