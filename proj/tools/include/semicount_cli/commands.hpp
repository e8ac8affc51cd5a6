#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "semicount_cli/config.hpp"
#include "semicount_cli/output.hpp"

namespace semicount::cli {

CommandResult cmd_validate(const RunConfig& cfg);
CommandResult cmd_delta(const RunConfig& cfg);
CommandResult cmd_count(const RunConfig& cfg);
CommandResult cmd_spectral(const RunConfig& cfg);
CommandResult cmd_expander(const RunConfig& cfg);
CommandResult cmd_zaremba(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_probe_lnic(const RunConfig& cfg);

/// Subcommand names in help order.
const std::vector<std::string>& command_names();
CommandResult run_command(const std::string& name, const RunConfig& cfg);

/// Exit status for the exception in flight: 1 domain/numeric, 2 config, 3 resource.
int exit_code_for_current_exception(std::string& message);

/// Full command line entry point: parses flags, runs, writes outputs.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semicount::cli
