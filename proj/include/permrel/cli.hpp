#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "permrel/word.hpp"

namespace permrel {

enum ExitCode : int {
  kExitOk        = 0,
  kExitViolation = 1,
  kExitUndecided = 2,
  kExitUsage     = 3,
};

struct RunConfig {
  std::size_t              max_len       = 0;
  std::size_t              class_cap     = 0;
  std::size_t              sample_budget = 0;
  std::vector<std::string> checks;
  std::string              out;
  unsigned                 jobs = 1;
  std::uint64_t            seed = 1;

  // Throws std::invalid_argument when a bound is zero.
  void               validate() const;
  [[nodiscard]] json to_json() const;
};

// Entry point of the permrel tool. args excludes the program name.
int run_cli(std::vector<std::string> const& args,
            std::ostream&                   out,
            std::ostream&                   err);

}  // namespace permrel
