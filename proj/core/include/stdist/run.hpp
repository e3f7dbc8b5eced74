#pragma once

// Command dispatch behind the stdist command-line tool.

#include <cstdint>
#include <optional>
#include <string>

#include "stdist/suite.hpp"

namespace stdist::io {

enum class Command { Growth, Period, TreeVerify, TreePeriod, Invariant, Orbit, Suite };
enum class OutputFormat { Json, Csv, Text };

Command parse_command(const std::string& text);
std::string command_name(Command command);
OutputFormat parse_format(const std::string& text);

// Exit codes of the command-line contract.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

struct RunConfig {
  Command command = Command::Suite;
  std::string family = "A";
  int rank = 1;
  std::int64_t q_F = 2;  // q_E is always q_F^2
  int depth = 4;         // tree radius
  int max_length = 8;    // K, growth truncation
  int p = 3;
  int n = 1;
  OutputFormat format = OutputFormat::Text;
  std::string cache_dir;  // empty: no cache
  std::size_t element_budget = coxeter::kDefaultElementBudget;
  std::uint64_t seed = kDefaultSeed;
  std::string tree_out;     // optional tree JSON export path
  std::string cocycle_out;  // optional Iwahori cocycle CSV export path
};

// Throws InvalidArgumentError with an actionable message.
void validate(const RunConfig& config);

struct RunOutcome {
  SuiteReport report;
  std::string output;  // rendered in the requested format
  int exit_code = kExitPass;
};

// Never throws for invalid input or budget overruns; those map to exit codes 2 and 3.
RunOutcome run(const RunConfig& config);

}  // namespace stdist::io
