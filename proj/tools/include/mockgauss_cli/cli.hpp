#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mockgauss::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitConfig = 2;

// Runs one command line (args excludes the program name). Data goes to the
// --out file or `out`; the summary line and diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SelftestResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// The fast invariant battery behind `mockgauss selftest`.
std::vector<SelftestResult> run_selftest();

}  // namespace mockgauss::cli
