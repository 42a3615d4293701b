#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

// Subcommand bodies, stream-parameterized so the test suite can drive them
// in-process. Exit codes are a stable scripting contract:
//   0  success / graph viable
//   1  operational error (missing file, parse error, bad flags, size caps)
//   2  the graph fails the viability criterion

namespace gscomm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotViable = 2;

struct CheckOptions {
  std::string path;
  bool json = false;
};
int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err);

struct DenseOptions {
  std::string path;
  bool all = false;
  std::string message;  // "<a-bits>,<b-bits>", empty unless --message given
  bool oracle = false;
  bool json = false;
};
int cmd_dense(const DenseOptions& opt, std::ostream& out, std::ostream& err);

struct TeleportOptions {
  std::string path;
  int trials = 1;
  bool all_outcomes = false;  // include the per-outcome table in human output
  std::uint64_t seed = 1;
  bool json = false;
};
int cmd_teleport(const TeleportOptions& opt, std::ostream& out, std::ostream& err);

struct LcOptions {
  std::string path;
  int vertex = 0;  // original 1-based id
  bool check_rank = false;
};
int cmd_lc(const LcOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace gscomm::cli
