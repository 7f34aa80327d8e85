#pragma once

#include <cstdint>
#include <string>

#include "gmmn/network.hpp"

namespace gmmn {

enum class GenClass { Star, Tree, Cycle, Pseudotree, General };

const char* to_string(GenClass c);
// Throws ParseError for unknown names.
GenClass parse_gen_class(const std::string& name);

// Smallest coordinate range the generator accepts for the class and size.
Coord minimum_coord_range(GenClass cls, int n);

// Deterministic per (class, n, coord_range, seed). Coordinates lie in [0, coord_range].
// Small instances are sampled at random; larger ones use fixed layouts with random
// jitter (lattice stars, crossing caterpillars, rings). The intersection graph is
// checked before returning; GenerationFailed after the retry budget.
Instance generate_instance(GenClass cls, int n, Coord coord_range, std::uint64_t seed);

}  // namespace gmmn
