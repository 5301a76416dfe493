#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "curvenbhd/verify.hpp"

namespace curvenbhd::cli {

enum class Format { Text, Json };

/// Raw command-line literals; resolved against a RootSystem before use.
struct QueryConfig {
  std::string type;
  std::optional<int> rank;
  std::string parabolic;
  std::string root;
  std::vector<std::string> words;
  std::string degree;
  Format format = Format::Text;
  int max_rank = 3;
  int exhaustive_rank = 3;
  std::vector<std::string> suites;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 1000;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitInputError = 2;

// Each command writes its report to `out` and returns the process exit code.
// Input errors propagate as InputError / DomainError.
int cmd_cosmall(const QueryConfig& config, std::ostream& out);
int cmd_curve_nbhd(const QueryConfig& config, std::ostream& out);
int cmd_greedy(const QueryConfig& config, std::ostream& out);
int cmd_hecke(const QueryConfig& config, std::ostream& out);
int cmd_table(const QueryConfig& config, std::ostream& out);
int cmd_verify(const QueryConfig& config, std::ostream& out);

/// Full command-line entry point; maps errors to exit code 2 on `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace curvenbhd::cli
