#pragma once

#include <cstdint>
#include <string>

#include "qmor/linalg.hpp"

namespace qmor::cli {

struct RunConfig {
  std::string command;           // certify, reduce, simulate, sample
  std::string model_file;        // --model (exclusive with builtin)
  std::string builtin;           // --builtin
  std::uint32_t n = 0;           // --n, sites for --builtin
  std::string state_spec;        // --state
  std::string lambda_spec;       // --lambda
  std::string times_spec;        // --times
  std::string schedule_file;     // --schedule
  std::string method = "burnside";  // --method
  std::string observable = "sum-x"; // --observable
  double tol = defaults::rank_tol;  // --tol
  std::uint64_t seed = 0;        // --seed (folded into schedule sampling)
  std::string out;               // --out, stdout when empty
  bool compare = false;          // --compare
  int truncate = 0;              // --truncate
};

// Exit codes: certify reports 0 reducible / 1 irreducible / 2 unknown or
// error; other commands report 0 success / 2 error.
int run(const RunConfig& config);

}  // namespace qmor::cli
