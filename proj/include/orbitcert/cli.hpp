#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace orbitcert {

/// Every algorithm is deterministic; there is no seed.
struct RunConfig {
  std::string command;
  std::string spec_path;
  std::size_t budget = 100000;
  std::optional<std::size_t> length;
  std::size_t max_word_len = 1;
  std::optional<std::size_t> max_pieces;  // defaults to |A|
  std::optional<std::int64_t> window_radius;
  std::optional<std::int64_t> max_depth;
  bool json = false;
  bool list_vertices = false;

  std::string base;      // point literal (JSON)
  std::string center;    // window center literal (JSON)
  std::string points;    // JSON array of base points
  std::string subgroup;  // JSON array of words
  std::string set_a;     // JSON array of points
  std::string set_b;
  std::string cert_path;
  std::string ray_path;
  std::string map_path;
  std::string out_path;  // artifact output (ray, certificate, spec)
  std::string strategy = "auto";
  std::size_t node_cap = 50'000'000;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitError = 2;

const std::vector<std::string>& command_names();

/// Parses argv; on failure or --help writes to `err` and sets `exit_code`.
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out,
                                            std::ostream& err, int& exit_code);

/// Dispatches one command. Exit 0 on Pass/Some/Finite verdicts, 1 on
/// Fail/None/Unknown, 2 on errors (message on `err`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace orbitcert
