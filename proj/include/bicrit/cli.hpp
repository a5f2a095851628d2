#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bicrit {

// Exit codes of the command-line tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitVerdictFail = 1;
inline constexpr int kExitUsage = 2;

// Runs the tool on `args` (without the program name). Reports go to `out`,
// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SampleStats {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation (n - 1)
  double se = 0.0;   // std / sqrt(n)
};

SampleStats summarize(std::span<const double> values);

// FNV-1a 64 of the bytes, as 16 hex digits.
std::string digest(std::string_view bytes);

}  // namespace bicrit
