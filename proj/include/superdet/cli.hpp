#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "superdet/error.hpp"

namespace superdet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitRejected = 3;
inline constexpr int kExitDisagreement = 4;

struct RunConfig {
  double tolerance = 1e-6;
  std::uint64_t seed = 0;
  std::size_t symbolic_cap = 8;
  std::size_t trials = 20;
  bool text = false;
  std::string output;
};

int exit_code(ErrorCode code);

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superdet::cli
