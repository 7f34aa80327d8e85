#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gmmn/aux_dag.hpp"
#include "gmmn/instance_graph.hpp"
#include "gmmn/network.hpp"
#include "gmmn/tree_dp_fast.hpp"

namespace gmmn {

// Entry and exit of the parent's path through a child box, as global grid vertex ids.
struct InOutPair {
  VertexId p = -1;
  VertexId q = -1;
  friend bool operator==(const InOutPair&, const InOutPair&) = default;
};

// Every realizable (entry, exit) pair of a parent path crossing the child box with
// at least one shared grid edge, ordered along the parent. Pairs are normalized.
std::vector<InOutPair> enumerate_inout_pairs(const HananGrid& grid, const TerminalPair& child,
                                             const TerminalPair& parent);

struct EngineOptions {
  // Fill child tables with the closed-form case routines instead of one DAG per cell.
  bool fast = false;
  // Represent childless children by their sharable-length gadget instead of a table.
  bool leaf_gadgets = false;
};

// Bottom-up table computation and top-down reconstruction over one rooted tree
// component. The grid and pairs are shared with the caller and must outlive it.
class TreeEngine {
 public:
  TreeEngine(const HananGrid& grid, const std::vector<TerminalPair>& pairs, const RootedTree& tree,
             EngineOptions options);

  void run();

  Length shared_length() const { return root_value_; }
  Length dp_epsilon(int v) const { return nodes_.at(v).lp_eps + nodes_.at(v).kappa; }
  Length kappa(int v) const { return nodes_.at(v).kappa; }
  bool has_table(int v) const { return nodes_.count(v) && !nodes_.at(v).gadget && v != tree_.root; }
  const std::vector<InOutPair>& cells(int v) const { return nodes_.at(v).cells; }
  // dp(v, cell) from the stored table.
  Length dp_value(int v, std::size_t cell) const { return dp_epsilon(v) + nodes_.at(v).gain[cell]; }
  CaseTag cell_tag(int v, std::size_t cell) const { return nodes_.at(v).tags[cell]; }

  // dp(v, cell) by a longest-path run on the conditioned DAG, using the stored child tables.
  Length compute_dp_cell(int v, std::optional<InOutPair> cell) const;
  AuxDag build_dag(int v, std::optional<InOutPair> cell) const;

  // One M-path per tree member written into paths (indexed by pair id).
  void reconstruct(std::vector<MPath>& paths) const;

 private:
  struct Node {
    Subgrid box;
    bool flip = false;
    bool gadget = false;
    std::vector<InOutPair> cells;
    std::vector<Length> gain;
    std::vector<CaseTag> tags;
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    Length lp_eps = 0;
    Length kappa = 0;
  };

  LocalFrame frame(int v) const;
  WindowSpec child_window(const LocalFrame& f, int child) const;
  void fill_baseline(int v);
  void fill_fast(int v);
  std::vector<GridVertex> reconstruct_node(int v, std::optional<InOutPair> cell, std::vector<MPath>& paths) const;

  const HananGrid& grid_;
  const std::vector<TerminalPair>& pairs_;
  const RootedTree& tree_;
  EngineOptions options_;
  std::unordered_map<int, Node> nodes_;
  Length root_value_ = 0;
};

// Builds a network for the whole instance from per-component tree engines.
// Components that are not trees raise WrongClass.
Solution solve_with_tree_engine(const Instance& instance, EngineOptions options, const char* solver_name);

Solution solve_tree(const Instance& instance);

}  // namespace gmmn
