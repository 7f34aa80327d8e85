#pragma once

#include <string>
#include <vector>

#include "gmmn/geometry.hpp"

namespace gmmn {

enum class GraphClass { Edgeless, Star, Tree, Cycle, TriangleFreePseudotree, Forest, General };

const char* to_string(GraphClass c);

struct IntersectionGraph {
  // Sorted neighbour lists indexed by pair id.
  std::vector<std::vector<int>> adjacency;

  int size() const { return static_cast<int>(adjacency.size()); }
  std::size_t edge_count() const;
  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
};

// True when the boxes overlap in a segment or a region, not just a corner point.
bool boxes_share_edge(const BoundingBox& a, const BoundingBox& b);
IntersectionGraph build_intersection_graph(const std::vector<TerminalPair>& pairs);
// Subgraph on members, relabelled 0..k-1 in the order given.
IntersectionGraph induced_subgraph(const IntersectionGraph& g, const std::vector<int>& members);

std::vector<std::vector<int>> connected_components(const IntersectionGraph& g);
bool is_triangle_free(const IntersectionGraph& g);

struct ClassInfo {
  GraphClass cls = GraphClass::Edgeless;
  int max_degree = 0;
  bool triangle_free = true;
  int components = 0;
};

ClassInfo classify(const IntersectionGraph& g);
// Class of the subgraph induced by one connected component.
GraphClass classify_component(const IntersectionGraph& g, const std::vector<int>& component);

// One pair adjacent to all others and no further edges. Component must be sorted.
bool is_star_shaped(const IntersectionGraph& g, const std::vector<int>& component);

// Cycle vertices in cyclic order, empty when the component is acyclic.
std::vector<int> unique_cycle(const IntersectionGraph& g, const std::vector<int>& component);

struct RootedTree {
  int root = -1;
  std::vector<int> parent;  // -1 for the root and for vertices outside the tree
  std::vector<std::vector<int>> children;
  std::vector<int> preorder;
  std::vector<int> postorder;
};

RootedTree root_tree(const IntersectionGraph& g, const std::vector<int>& component);
RootedTree root_tree(const IntersectionGraph& g);

struct NiceNode {
  enum class Kind { Leaf, Introduce, Forget, Join };
  Kind kind = Kind::Leaf;
  int vertex = -1;        // introduced or forgotten pair
  std::vector<int> bag;   // sorted
  std::vector<int> children;
};

struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;
  int width = -1;
};

struct EliminationOrder {
  int width = -1;
  std::vector<int> order;
  bool exact = false;
};

// Exact for graphs with at most 12 vertices, greedy min-fill above.
EliminationOrder elimination_order(const IntersectionGraph& g);
int treewidth_estimate(const IntersectionGraph& g);

NiceTreeDecomposition nice_tree_decomposition(const IntersectionGraph& g, int width_cap);
// Empty when all decomposition and niceness conditions hold.
std::string check_nice_decomposition(const IntersectionGraph& g, const NiceTreeDecomposition& td);

}  // namespace gmmn
