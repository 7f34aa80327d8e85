#pragma once

#include <cstdint>

#include "gmmn/network.hpp"

namespace gmmn {

inline constexpr std::uint64_t kDefaultOracleCap = 1'000'000'000'000ULL;

// Exhaustive search over M-path products. Paths of one pair that overlap the other
// boxes identically are interchangeable, so only one representative per overlap
// pattern is searched; the cap bounds the product of representative counts.
Solution solve_bruteforce(const Instance& instance, std::uint64_t product_cap = kDefaultOracleCap);

}  // namespace gmmn
