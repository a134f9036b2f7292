#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace locred {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitMalformed = 65;

struct RunConfig {
  std::string command;  // construct | verify | scan | hilbert | group-check | ffdemo

  std::uint64_t degree = 0;
  std::string mode = "padic";
  std::uint64_t search_bound = 1000000;  // r search in padic mode
  std::uint64_t scan_bound = 1000;
  std::optional<std::uint64_t> verify_scan_bound;
  int dmax = 4;
  std::uint64_t seed = 0;
  std::string out;  // empty: stdout

  std::string cert_path;
  std::string poly_path;
  std::string a = "0";
  std::string b = "1";

  std::string group;       // family descriptor
  std::string table_path;  // CSV multiplication table
  std::string subgroup;    // "i,j,k" elements of H for a table group
  std::optional<std::uint64_t> index;

  std::uint64_t p = 2;
  long e = 1;
  bool json = false;
  bool verbose = false;
};

/// Parses argv-style arguments (without the program name). Returns the exit
/// code to use instead of dispatching when parsing ends early (--help, or a
/// usage error, which is reported on err).
std::optional<int> parse_args(const std::vector<std::string>& args, RunConfig& config, std::ostream& out,
                              std::ostream& err);

/// Runs one command. Machine output (JSON) goes to out or the --out file,
/// the human summary to err.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by dispatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace locred
