#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "knot_table.hpp"

namespace twistspin::cli {

// Exit codes: verdicts never change the exit status.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsageError = 2;

// Entry point shared by the twistspin executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct BatchResult {
  std::string report;  // CSV with header left,right,m1,n1,m2,n2,det1,det2,outcome,rule
  std::vector<RowError> errors;
};

// One report row per pair row, in input order for any number of jobs.
// Throws std::runtime_error when the pairs header is wrong.
BatchResult run_batch(const KnotTable& table, std::istream& pairs, unsigned jobs);

}  // namespace twistspin::cli
