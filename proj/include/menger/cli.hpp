#ifndef MENGER_CLI_HPP
#define MENGER_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace menger {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitUnknownVertex = 3;
inline constexpr int kExitAdjacentTerminals = 4;

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;
  std::string diagnostics;
};

/// Runs one `menger` invocation. `args` excludes the program name.
///
///   menger kappa      --input F --source U --target V [--method flow|brute]
///   menger mu         --input F --source U --target V [--method flow|recursive]
///   menger paths      --input F --source U --target V [--method flow|recursive]
///   menger separators --input F --source U --target V [--limit N]
///   menger verify     (--exhaustive-n N | --random N P COUNT SEED | --input F)
///                     [--checks a,b] [--pairs N] [--jobs K] [--out DIR]
///
/// Every subcommand accepts --json. Without --input the graph is read from
/// stdin.
CommandResult run_cli(const std::vector<std::string>& args);

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace menger

#endif  // MENGER_CLI_HPP
