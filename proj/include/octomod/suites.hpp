#pragma once

#include <string>
#include <vector>

namespace octomod {

struct SuiteLine {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteLine> lines;

  bool all_pass() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
};

/// Runs one of the named verification suites:
///   identities         — the four epsilon contraction identities, exhaustively
///   bimodule-theorems  — solver outcomes on (1,0), (2,0), (0,1), (1,1), (0,2)
///   cyclic-examples    — the worked cyclic decompositions on O^3
/// Throws UnknownSuite for anything else.
SuiteReport run_suite(const std::string& name);

}  // namespace octomod
