#pragma once

// Command implementations behind the CLI: each takes a parsed configuration
// and produces its report or CSV as a string, plus an exit status. Kept
// separate from the executable so tests can drive them directly.
//
// Exit codes: 0 success (findings included), 1 physics-invalid model,
// 2 parse/usage error.

#include "qsd/config.hpp"

namespace qsd {

struct CommandResult {
  int exit_code = 0;
  std::string output;       // report text or CSV
  std::string diagnostics;  // warnings, goes to stderr
};

// Fixed scientific formatting, 12 significant digits.
std::string format_num(double v);

CommandResult cmd_validate(const ModelConfig& cfg);
CommandResult cmd_classify(const ModelConfig& cfg);
CommandResult cmd_stationary(const ModelConfig& cfg);
CommandResult cmd_evolve(const ModelConfig& cfg);
CommandResult cmd_sweep(const ModelConfig& cfg);
CommandResult cmd_verify_paper(const ModelConfig& cfg);

CommandResult run_command(const std::string& name, const ModelConfig& cfg);

}  // namespace qsd
