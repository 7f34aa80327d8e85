#pragma once

#include <vector>

#include "gmmn/aux_dag.hpp"
#include "gmmn/network.hpp"

namespace gmmn {

// DAG of the center with every leaf replaced by its sharable-length gadget.
// Pairs are normalized; leaves must be pairwise non-adjacent neighbours of the center.
AuxDag build_simplified_dag(const HananGrid& grid, const std::vector<TerminalPair>& pairs, int center,
                            const std::vector<int>& leaves);

// Same value, with every leaf window expanded into explicit jumps between all of
// its lower-left and upper-right boundary vertices. Only meant for small windows.
AuxDag build_reference_dag(const HananGrid& grid, const std::vector<TerminalPair>& pairs, int center,
                           const std::vector<int>& leaves);

// Accepts instances whose every component is a star or a single pair.
Solution solve_star(const Instance& instance);

}  // namespace gmmn
