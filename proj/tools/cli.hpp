#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "specneg/acl.hpp"

namespace specneg::cli {

enum class Command { kRun, kSweepPus, kSweepCost };

struct CliConfig {
  Command command = Command::kRun;
  std::string scenario_path;
  std::optional<std::string> trace_path;
  std::optional<std::string> csv_path;
  std::optional<std::size_t> n_max;
  Currency p_success = 100;
  Currency p_fail = 500;
  std::int64_t runs = 10;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitNoDeal = 1;
inline constexpr int kExitUsage = 2;

/// 0 on success, 1 when `run` ends without a deal, 2 on usage, scenario or
/// I/O errors (message on `err`).
int dispatch(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace specneg::cli
