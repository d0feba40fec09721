// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace cdlab::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2, kBudgetExceeded = 3 };

struct RunConfig {
  std::string command;  // bound, image, mu, tightness, nss, dilates, sweep
  std::string input_path;
  std::string output_path;  // stdout when empty
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;  // 0 keeps the library defaults
  unsigned parallelism = 1;
};

/// Applies CDLAB_BUDGET when set. Returns false if it does not parse.
bool apply_environment(RunConfig& config, std::string* error = nullptr);

/// Runs one command. Results go to config.output_path (or `out`); errors are
/// written to `err` as one JSON object per line.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace cdlab::cli
