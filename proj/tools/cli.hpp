#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace glc::cli {

/// Exit statuses: decision true, decision false, bad input or failure.
inline constexpr int kTrue = 0;
inline constexpr int kFalse = 1;
inline constexpr int kError = 2;

/// Runs one command line (argv[0] excluded). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct AppendixRun {
  std::uint64_t total = 0;
  std::uint64_t successes = 0;
  /// Edge quadruples (by edge id) with no anchored arc.
  std::vector<std::vector<int>> failures;
};

/// Every 4-subset of eligible edges, one point per edge, against arcs
/// starting at one of `anchors`.
AppendixRun run_appendix(const std::string& graph_source, const std::vector<int>& anchors, int threads);

}  // namespace glc::cli
