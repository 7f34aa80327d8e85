#pragma once

#include <initializer_list>
#include <vector>

#include "gmmn/network.hpp"

namespace gmmn::test {

inline Instance make_instance(std::initializer_list<TerminalPair> pairs) {
  Instance inst;
  inst.name = "fixture";
  inst.pairs = pairs;
  return inst;
}

inline Length sum_of_distances(const Instance& inst) {
  Length total = 0;
  for (const auto& p : inst.pairs) total += distance(p);
  return total;
}

// A nested pair and a flipped pair crossing the same box.
inline const Instance kNested = make_instance({{{0, 0}, {10, 10}}, {{2, 2}, {6, 6}}});
inline const Instance kCrossed = make_instance({{{0, 0}, {10, 10}}, {{2, 6}, {6, 2}}});
inline const Instance kThreePath = make_instance({{{0, 0}, {6, 6}}, {{4, 4}, {10, 10}}, {{8, 8}, {14, 14}}});
inline const Instance kFourPath =
    make_instance({{{0, 0}, {6, 6}}, {{4, 4}, {10, 10}}, {{8, 8}, {14, 14}}, {{12, 12}, {18, 18}}});

}  // namespace gmmn::test
