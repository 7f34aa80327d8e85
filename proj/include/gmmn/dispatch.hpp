#pragma once

#include <cstdint>
#include <exception>
#include <string>

#include "gmmn/network.hpp"
#include "gmmn/twdp.hpp"

namespace gmmn {

enum class Algorithm { Auto, Star, Tree, TreeFast, Pseudotree, Twdp, Oracle, Approx };

const char* to_string(Algorithm a);
Algorithm parse_algorithm(const std::string& name);

inline constexpr const char* kCapEnvVar = "GMMN_ORACLE_CAP";

// Oracle product cap: the environment variable when set and valid, else the built-in default.
std::uint64_t default_oracle_cap();

struct SolveOptions {
  std::uint64_t oracle_cap = 0;  // 0 means default_oracle_cap()
  TwdpOptions twdp;
};

// Runs the chosen solver and validates the result before returning it. Auto tries,
// in order: star, tree-fast, pseudotree, twdp within its caps, then the
// approximation with a warning.
Solution solve(const Instance& instance, Algorithm algorithm, const SolveOptions& options = {});
Algorithm auto_choice(const Instance& instance);

// 1 for input problems, 2 for WrongClass, 3 for CapExceeded, 4 for anything else.
int exit_code_for(const std::exception& e);

}  // namespace gmmn
