#pragma once

// Command-line front end. `run` is the whole program minus process exit, so
// tests can drive it with string streams.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "shopsched/core_model.hpp"

namespace shopsched::cli {

/// Stable exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInfeasible = 2;

enum class RunStatus { Feasible, Infeasible, Error };

struct RunReport {
  RunStatus status = RunStatus::Error;
  std::string solver;
  std::optional<Duration> cmax;
  std::optional<JobSequence> sequence;
  std::optional<ChainCase> chain_case;
  std::optional<std::string> reason;
  double wall_ms = 0.0;
};

RunReport make_report(const Solution& sol, std::string solver, double wall_ms);

/// `key=value` lines, or a single JSON object when `json` is set. Job numbers
/// are printed 1-based.
void write_report(std::ostream& out, const RunReport& report, bool json);

/// n jobs forming one forced chain (job k runs k+1 then k+2 time units),
/// presented in shuffled order.
FlowShopInstance make_chain_instance(std::size_t n, std::uint64_t seed = 1);

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shopsched::cli
