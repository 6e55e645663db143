#pragma once

// Batch front end. The report and input formats are described in
// docs/schema.md.

#include "cudim/corpus.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cudim {

struct JobSpec {
  std::optional<std::string> catalog;     // catalog key
  std::optional<std::string> input;       // path to an input document
  std::vector<std::string> tasks;
  std::size_t depth = 3;
  std::size_t slack = 2;
  std::size_t r_max = 0;  // 0: per-input default
  std::size_t n_max = 3;
  std::uint64_t seed = default_seed;
  std::optional<std::string> expect;      // path to an expectation document
};

enum ExitCode : int {
  exit_ok = 0,
  exit_mismatch = 1,
  exit_input_error = 2,
  exit_cap_exceeded = 3,
};

inline constexpr int schema_version = 1;

/// Runs every task in order and writes one report document to `report`.
/// Diagnostics go to `diag`. Returns an ExitCode.
int run(const JobSpec& job, std::ostream& report, std::ostream& diag);

}  // namespace cudim
