#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gmmn/instance_graph.hpp"
#include "gmmn/network.hpp"

namespace gmmn {

struct TwdpOptions {
  int width_cap = 3;
  std::size_t table_cap = 200'000;
  std::size_t candidate_cap = 20'000;
};

// Staircases of pair v on the coarse grids spanned by v's corners and every choice of
// entry and exit points of its neighbours' paths, merged by vertex sequence.
// Throws CandidateCapExceeded.
std::vector<MPath> candidate_mpaths(const HananGrid& grid, const std::vector<TerminalPair>& pairs,
                                    const IntersectionGraph& ig, int v, std::size_t cap);

struct TwdpCandidate {
  MPath path;
  std::vector<EdgeId> edges;  // sorted
};

struct TwdpContext {
  HananGrid grid;
  std::vector<TerminalPair> pairs;
  std::vector<std::vector<TwdpCandidate>> candidates;
  std::size_t table_cap = 200'000;
};

// Candidate index per bag member, in bag order.
using BagKey = std::vector<std::uint32_t>;
struct TwdpEntry {
  Length value = 0;
  // Forget nodes: candidate of the forgotten pair that achieved the value.
  std::uint32_t choice = UINT32_MAX;
};
using TwdpTable = std::map<BagKey, TwdpEntry>;

TwdpTable twdp_node(const TwdpContext& ctx, const NiceNode& node, const std::vector<NiceNode>& nodes,
                    const std::vector<const TwdpTable*>& children);

TwdpContext make_twdp_context(const Instance& instance, std::size_t candidate_cap, std::size_t table_cap);

Solution solve_twdp(const Instance& instance, const NiceTreeDecomposition& td, const TwdpOptions& options = {});
// Builds the decomposition itself; WidthCapExceeded above options.width_cap.
Solution solve_twdp(const Instance& instance, const TwdpOptions& options = {});

}  // namespace gmmn
