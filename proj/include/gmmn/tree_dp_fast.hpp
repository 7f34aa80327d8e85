#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gmmn/aux_dag.hpp"
#include "gmmn/network.hpp"

namespace gmmn {

// R*/F*: the parent runs in the same / opposite diagonal direction as the child.
// *a: the parent starts or ends inside the child box, *b: it crosses two adjacent
// sides, *c: two opposite sides. Segment: the overlap is a line segment.
enum class CaseTag : std::uint8_t { Ra, Rb, Rc, Fa, Fb, Fc, Segment };
const char* to_string(CaseTag tag);

enum class Side : std::uint8_t { Source, Left, Bottom, Top, Right, Sink };
enum class Transform : std::uint8_t { Identity, Transpose, Rotate, TransposeRotate };

struct CaseDescriptor {
  CaseTag tag;
  Side entry;
  Side exit;
  Transform transform;
};

// How the parent box sits relative to the child frame (child local coordinates).
struct WindowContext {
  LocalBox window;
  bool parent_up = true;
  bool source_inside = false;
  bool sink_inside = false;
  bool extends_left = false;
  bool extends_right = false;
  bool extends_below = false;
  bool extends_above = false;
};

// Empty for degenerate windows, which are filled by fill_segment.
std::vector<CaseDescriptor> classify_inout_case(const WindowContext& ctx);

// Per local vertex: best value from the source into the vertex and from the vertex to the sink.
struct LambdaTables {
  std::vector<Length> into;
  std::vector<Length> out_of;
  Length longest = 0;
  Length kappa = 0;
};

LambdaTables precompute_lambda_kappa(const AuxDag& unconditioned, Length kappa);

// Receives local entry/exit ids and the longest-path value of the conditioned DAG.
using CellSink = std::function<void(int p, int q, Length value)>;

void fill_case(const LocalFrame& frame, const WindowContext& ctx, const CaseDescriptor& desc,
               const LambdaTables& lambda, const CellSink& sink);
void fill_segment(const LocalFrame& frame, const LocalBox& segment, const LambdaTables& lambda,
                  const std::vector<std::pair<int, int>>& cells, const CellSink& sink);

Solution solve_tree_fast(const Instance& instance);

}  // namespace gmmn
