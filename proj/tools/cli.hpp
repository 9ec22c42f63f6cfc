#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fup::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Validated settings for one invocation. Everything that influences the
/// output except `threads` enters the output file name hash.
struct RunConfig {
  std::string command;
  std::vector<double> alphas;
  int n_lo = 0;
  int n_hi = 0;
  std::optional<double> r;
  std::vector<std::string> r_grid;
  std::optional<std::int64_t> k_max;
  std::optional<double> tol;
  std::string method = "cdfsum";
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = 12345;
  std::string domain = "line";
  std::string kind;
  std::string z;
  std::string w;
  std::string point;
  std::string out_dir;
  std::string format = "csv";
  unsigned threads = 0;
};

/// "5" or "4..12"; both ends non-negative and ordered.
[[nodiscard]] std::optional<std::pair<int, int>> parse_n_range(std::string_view text);

/// "0.3,1.2" or "0.3" (imaginary part 0).
[[nodiscard]] std::optional<std::pair<double, double>> parse_complex(std::string_view text);

/// Canonical key=value text of the config, as hashed for file names.
[[nodiscard]] std::string canonical_config(const RunConfig& cfg);

/// 64-bit FNV-1a of canonical_config, as 16 hex digits.
[[nodiscard]] std::string config_hash(const RunConfig& cfg);

/// Entry point; args exclude the program name. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fup::cli
