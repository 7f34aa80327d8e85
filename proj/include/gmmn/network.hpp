#pragma once

#include <string>
#include <vector>

#include "gmmn/geometry.hpp"

namespace gmmn {

struct Instance {
  std::string name;
  std::string intended_class;
  // Coordinates are user units multiplied by 10^scale.
  int scale = 0;
  std::vector<TerminalPair> pairs;
  friend bool operator==(const Instance&, const Instance&) = default;
};

// One M-path per pair (index aligned) plus the union of their edges.
class GridNetwork {
 public:
  GridNetwork() = default;
  GridNetwork(HananGrid grid, std::vector<MPath> paths);

  const HananGrid& grid() const { return grid_; }
  const std::vector<MPath>& paths() const { return paths_; }
  const std::vector<EdgeId>& edges() const { return edges_; }
  Length total_length() const { return total_; }

 private:
  HananGrid grid_;
  std::vector<MPath> paths_;
  std::vector<EdgeId> edges_;
  Length total_ = 0;
};

Length union_length(const HananGrid& grid, const std::vector<MPath>& paths);

struct Solution {
  GridNetwork network;
  std::string solver;
  // 1 for exact solvers, the colour count for the approximation.
  Length ratio = 1;
  double wall_ms = 0.0;
  std::vector<std::string> warnings;
};

// Empty string when the path is an M-path of the pair on the grid.
std::string check_m_path(const HananGrid& grid, const TerminalPair& pair, const MPath& path);

struct Validation {
  bool ok = true;
  std::string message;
  explicit operator bool() const { return ok; }
};

// Checks every path and recomputes the union length from the edge list.
Validation validate_network(const std::vector<TerminalPair>& pairs, const GridNetwork& network);

}  // namespace gmmn
