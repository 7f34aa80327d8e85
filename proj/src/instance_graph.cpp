#include "gmmn/instance_graph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

#include "gmmn/errors.hpp"

namespace gmmn {

const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Edgeless: return "edgeless";
    case GraphClass::Star: return "star";
    case GraphClass::Tree: return "tree";
    case GraphClass::Cycle: return "cycle";
    case GraphClass::TriangleFreePseudotree: return "pseudotree";
    case GraphClass::Forest: return "forest";
    case GraphClass::General: return "general";
  }
  return "?";
}

std::size_t IntersectionGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& a : adjacency) total += a.size();
  return total / 2;
}

bool IntersectionGraph::adjacent(int u, int v) const {
  const auto& a = adjacency[u];
  return std::binary_search(a.begin(), a.end(), v);
}

bool boxes_share_edge(const BoundingBox& a, const BoundingBox& b) {
  const Coord lx = std::max(a.lo.x, b.lo.x), hx = std::min(a.hi.x, b.hi.x);
  const Coord ly = std::max(a.lo.y, b.lo.y), hy = std::min(a.hi.y, b.hi.y);
  if (lx > hx || ly > hy) return false;
  return hx > lx || hy > ly;
}

IntersectionGraph build_intersection_graph(const std::vector<TerminalPair>& pairs) {
  const int n = static_cast<int>(pairs.size());
  std::vector<BoundingBox> boxes;
  boxes.reserve(n);
  for (const auto& p : pairs) boxes.push_back(bounding_box(p));
  IntersectionGraph g;
  g.adjacency.assign(n, {});
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (boxes_share_edge(boxes[u], boxes[v])) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
      }
  for (auto& a : g.adjacency) std::sort(a.begin(), a.end());
  return g;
}

IntersectionGraph induced_subgraph(const IntersectionGraph& g, const std::vector<int>& members) {
  std::vector<int> local(g.size(), -1);
  for (int i = 0; i < static_cast<int>(members.size()); ++i) local[members[i]] = i;
  IntersectionGraph out;
  out.adjacency.assign(members.size(), {});
  for (int i = 0; i < static_cast<int>(members.size()); ++i) {
    for (int w : g.adjacency[members[i]])
      if (local[w] >= 0) out.adjacency[i].push_back(local[w]);
    std::sort(out.adjacency[i].begin(), out.adjacency[i].end());
  }
  return out;
}

std::vector<std::vector<int>> connected_components(const IntersectionGraph& g) {
  std::vector<int> seen(g.size(), 0);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < g.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> comp{start};
    seen[start] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int w : g.adjacency[comp[i]])
        if (!seen[w]) seen[w] = 1, comp.push_back(w);
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_triangle_free(const IntersectionGraph& g) {
  std::vector<char> mark(g.size(), 0);
  for (int u = 0; u < g.size(); ++u) {
    for (int w : g.adjacency[u]) mark[w] = 1;
    bool found = false;
    for (int v : g.adjacency[u]) {
      if (v <= u) continue;
      for (int w : g.adjacency[v])
        if (w > v && mark[w]) found = true;
    }
    for (int w : g.adjacency[u]) mark[w] = 0;
    if (found) return false;
  }
  return true;
}

ClassInfo classify(const IntersectionGraph& g) {
  ClassInfo info;
  const int n = g.size();
  const auto m = static_cast<long long>(g.edge_count());
  for (int v = 0; v < n; ++v) info.max_degree = std::max(info.max_degree, g.degree(v));
  info.triangle_free = is_triangle_free(g);
  info.components = static_cast<int>(connected_components(g).size());
  if (m == 0) {
    info.cls = GraphClass::Edgeless;
  } else if (info.components == 1) {
    // Paths of two or three pairs count as trees; a star needs three leaves.
    if (m == n - 1) info.cls = info.max_degree == n - 1 && n >= 4 ? GraphClass::Star : GraphClass::Tree;
    else if (m == n && info.triangle_free)
      info.cls = info.max_degree == 2 ? GraphClass::Cycle : GraphClass::TriangleFreePseudotree;
    else info.cls = GraphClass::General;
  } else {
    info.cls = m == n - info.components ? GraphClass::Forest : GraphClass::General;
  }
  return info;
}

GraphClass classify_component(const IntersectionGraph& g, const std::vector<int>& component) {
  return classify(induced_subgraph(g, component)).cls;
}

bool is_star_shaped(const IntersectionGraph& g, const std::vector<int>& component) {
  const auto k = static_cast<int>(component.size());
  if (k <= 2) return true;
  std::size_t inner = 0;
  int hub = 0;
  for (int v : component) {
    int d = 0;
    for (int w : g.adjacency[v]) d += std::binary_search(component.begin(), component.end(), w) ? 1 : 0;
    inner += d;
    hub = std::max(hub, d);
  }
  return inner == 2 * static_cast<std::size_t>(k - 1) && hub == k - 1;
}

std::vector<int> unique_cycle(const IntersectionGraph& g, const std::vector<int>& component) {
  std::vector<int> in(g.size(), 0), deg(g.size(), 0);
  for (int v : component) in[v] = 1;
  std::vector<int> stack;
  for (int v : component) {
    for (int w : g.adjacency[v]) deg[v] += in[w];
    if (deg[v] <= 1) stack.push_back(v);
  }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (!in[v]) continue;
    in[v] = 0;
    for (int w : g.adjacency[v])
      if (in[w] && --deg[w] <= 1) stack.push_back(w);
  }
  std::vector<int> rest;
  for (int v : component)
    if (in[v]) rest.push_back(v);
  if (rest.empty()) return {};
  for (int v : rest)
    if (deg[v] != 2) throw NotAPseudotree("component has more than one cycle");
  std::vector<int> cycle{rest.front()};
  int prev = -1;
  while (true) {
    const int at = cycle.back();
    int next = -1;
    for (int w : g.adjacency[at])
      if (in[w] && w != prev) {
        next = w;
        break;
      }
    if (next == cycle.front() || next < 0) break;
    prev = at;
    cycle.push_back(next);
  }
  if (cycle.size() != rest.size()) throw NotAPseudotree("component has more than one cycle");
  return cycle;
}

RootedTree root_tree(const IntersectionGraph& g, const std::vector<int>& component) {
  if (component.empty()) throw NotATree("empty component");
  std::vector<char> in(g.size(), 0);
  for (int v : component) in[v] = 1;
  std::size_t inner_edges = 0;
  int root = component.front();
  int best_degree = -1;
  for (int v : component) {
    int d = 0;
    for (int w : g.adjacency[v]) d += in[w];
    inner_edges += d;
    if (d > best_degree) best_degree = d, root = v;
  }
  if (inner_edges / 2 != component.size() - 1) throw NotATree("component is not a tree");

  RootedTree t;
  t.root = root;
  t.parent.assign(g.size(), -1);
  t.children.assign(g.size(), {});
  std::vector<char> seen(g.size(), 0);
  // Iterative DFS producing both orders.
  std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
  seen[root] = 1;
  t.preorder.push_back(root);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& adj = g.adjacency[v];
    while (next < adj.size() && (!in[adj[next]] || seen[adj[next]])) ++next;
    if (next == adj.size()) {
      t.postorder.push_back(v);
      stack.pop_back();
      continue;
    }
    const int w = adj[next++];
    seen[w] = 1;
    t.parent[w] = v;
    t.children[v].push_back(w);
    t.preorder.push_back(w);
    stack.push_back({w, 0});
  }
  if (t.preorder.size() != component.size()) throw NotATree("component is disconnected");
  return t;
}

RootedTree root_tree(const IntersectionGraph& g) {
  std::vector<int> all(g.size());
  for (int i = 0; i < g.size(); ++i) all[i] = i;
  return root_tree(g, all);
}

namespace {

EliminationOrder exact_order(const IntersectionGraph& g) {
  const int n = g.size();
  const unsigned full = (1u << n) - 1;
  std::vector<unsigned> nbr(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.adjacency[v]) nbr[v] |= 1u << w;
  // Vertices outside S + v reachable from v through S.
  auto q_size = [&](unsigned s, int v) {
    unsigned reached = 0, frontier = 1u << v, visited = 1u << v;
    while (frontier) {
      const int x = __builtin_ctz(frontier);
      frontier &= frontier - 1;
      unsigned next = nbr[x] & ~visited;
      visited |= next;
      reached |= next & ~s;
      frontier |= next & s;
    }
    return __builtin_popcount(reached);
  };
  std::vector<int> tw(full + 1, std::numeric_limits<int>::max());
  std::vector<signed char> last(full + 1, -1);
  tw[0] = -1;
  for (unsigned s = 1; s <= full; ++s) {
    for (unsigned rest = s; rest; rest &= rest - 1) {
      const int v = __builtin_ctz(rest);
      const unsigned prev = s & ~(1u << v);
      const int value = std::max(tw[prev], q_size(prev, v));
      if (value < tw[s]) tw[s] = value, last[s] = static_cast<signed char>(v);
    }
  }
  EliminationOrder out;
  out.exact = true;
  out.width = std::max(0, tw[full]);
  for (unsigned s = full; s; s &= ~(1u << last[s])) out.order.push_back(last[s]);
  std::reverse(out.order.begin(), out.order.end());
  return out;
}

EliminationOrder min_fill_order(const IntersectionGraph& g) {
  const int n = g.size();
  std::vector<std::set<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v].insert(g.adjacency[v].begin(), g.adjacency[v].end());
  std::vector<char> gone(n, 0);
  EliminationOrder out;
  out.width = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long long best_fill = 0;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long long fill = 0;
      for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
        for (auto b = std::next(a); b != adj[v].end(); ++b)
          if (!adj[*a].count(*b)) ++fill;
      if (best < 0 || fill < best_fill || (fill == best_fill && adj[v].size() < adj[best].size()))
        best = v, best_fill = fill;
    }
    out.width = std::max(out.width, static_cast<int>(adj[best].size()));
    for (int a : adj[best])
      for (int b : adj[best])
        if (a != b) adj[a].insert(b);
    for (int a : adj[best]) adj[a].erase(best);
    adj[best].clear();
    gone[best] = 1;
    out.order.push_back(best);
  }
  return out;
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

EliminationOrder elimination_order(const IntersectionGraph& g) {
  if (g.size() == 0) return {0, {}, true};
  return g.size() <= 12 ? exact_order(g) : min_fill_order(g);
}

int treewidth_estimate(const IntersectionGraph& g) { return elimination_order(g).width; }

NiceTreeDecomposition nice_tree_decomposition(const IntersectionGraph& g, int width_cap) {
  const int n = g.size();
  const EliminationOrder elim = elimination_order(g);
  if (elim.width > width_cap)
    throw WidthCapExceeded("treewidth " + std::to_string(elim.width) + " exceeds cap " + std::to_string(width_cap));

  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[elim.order[i]] = i;
  std::vector<std::set<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v].insert(g.adjacency[v].begin(), g.adjacency[v].end());
  std::vector<std::vector<int>> bag(n), td_children(n);
  std::vector<int> td_roots;
  for (int v : elim.order) {
    std::vector<int> later;
    for (int w : adj[v])
      if (pos[w] > pos[v]) later.push_back(w);
    for (int a : later)
      for (int b : later)
        if (a != b) adj[a].insert(b);
    bag[v] = later;
    bag[v].push_back(v);
    std::sort(bag[v].begin(), bag[v].end());
    if (later.empty()) {
      td_roots.push_back(v);
    } else {
      int parent = later.front();
      for (int w : later)
        if (pos[w] < pos[parent]) parent = w;
      td_children[parent].push_back(v);
    }
  }

  NiceTreeDecomposition td;
  int max_bag = 0;
  for (int v = 0; v < n; ++v) max_bag = std::max(max_bag, static_cast<int>(bag[v].size()));
  td.width = std::max(0, max_bag - 1);

  auto add = [&](NiceNode::Kind kind, int vertex, std::vector<int> b, std::vector<int> kids) {
    td.nodes.push_back({kind, vertex, std::move(b), std::move(kids)});
    return static_cast<int>(td.nodes.size()) - 1;
  };
  auto transition = [&](int node, const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> cur = from;
    for (int x : set_minus(from, to)) {
      cur.erase(std::find(cur.begin(), cur.end(), x));
      node = add(NiceNode::Kind::Forget, x, cur, {node});
    }
    for (int x : set_minus(to, from)) {
      cur.insert(std::upper_bound(cur.begin(), cur.end(), x), x);
      node = add(NiceNode::Kind::Introduce, x, cur, {node});
    }
    return node;
  };
  std::function<int(int)> build = [&](int v) {
    std::vector<int> tops;
    for (int c : td_children[v]) tops.push_back(transition(build(c), bag[c], bag[v]));
    if (tops.empty()) tops.push_back(transition(add(NiceNode::Kind::Leaf, -1, {}, {}), {}, bag[v]));
    int cur = tops.front();
    for (std::size_t i = 1; i < tops.size(); ++i) cur = add(NiceNode::Kind::Join, -1, bag[v], {cur, tops[i]});
    return cur;
  };
  std::vector<int> tops;
  for (int r : td_roots) tops.push_back(transition(build(r), bag[r], {}));
  if (tops.empty()) tops.push_back(add(NiceNode::Kind::Leaf, -1, {}, {}));
  int cur = tops.front();
  for (std::size_t i = 1; i < tops.size(); ++i) cur = add(NiceNode::Kind::Join, -1, {}, {cur, tops[i]});
  td.root = cur;
  return td;
}

std::string check_nice_decomposition(const IntersectionGraph& g, const NiceTreeDecomposition& td) {
  const int count = static_cast<int>(td.nodes.size());
  if (td.root < 0 || td.root >= count) return "missing root";
  std::vector<int> parent(count, -1);
  for (int i = 0; i < count; ++i)
    for (int c : td.nodes[i].children) {
      if (parent[c] != -1) return "node with two parents";
      parent[c] = i;
    }
  if (!td.nodes[td.root].bag.empty()) return "root bag not empty";
  int max_bag = 0;
  std::vector<int> forgets(g.size(), 0);
  for (int i = 0; i < count; ++i) {
    const auto& node = td.nodes[i];
    max_bag = std::max(max_bag, static_cast<int>(node.bag.size()));
    if (!std::is_sorted(node.bag.begin(), node.bag.end())) return "bag not sorted";
    switch (node.kind) {
      case NiceNode::Kind::Leaf:
        if (!node.children.empty() || !node.bag.empty()) return "leaf must be empty with no children";
        break;
      case NiceNode::Kind::Introduce: {
        if (node.children.size() != 1) return "introduce needs one child";
        auto b = td.nodes[node.children[0]].bag;
        if (std::find(b.begin(), b.end(), node.vertex) != b.end()) return "introduced vertex already present";
        b.insert(std::upper_bound(b.begin(), b.end(), node.vertex), node.vertex);
        if (b != node.bag) return "introduce bag mismatch";
        break;
      }
      case NiceNode::Kind::Forget: {
        if (node.children.size() != 1) return "forget needs one child";
        auto b = td.nodes[node.children[0]].bag;
        auto it = std::find(b.begin(), b.end(), node.vertex);
        if (it == b.end()) return "forgotten vertex absent from child";
        b.erase(it);
        if (b != node.bag) return "forget bag mismatch";
        ++forgets[node.vertex];
        break;
      }
      case NiceNode::Kind::Join:
        if (node.children.size() != 2) return "join needs two children";
        for (int c : node.children)
          if (td.nodes[c].bag != node.bag) return "join bag mismatch";
        break;
    }
  }
  for (int v = 0; v < g.size(); ++v)
    if (forgets[v] != 1) return "vertex " + std::to_string(v) + " not forgotten exactly once";
  // Nodes containing v must form a connected subtree: exactly one has a parent without v.
  for (int v = 0; v < g.size(); ++v) {
    int tops = 0;
    for (int i = 0; i < count; ++i) {
      const auto& b = td.nodes[i].bag;
      if (!std::binary_search(b.begin(), b.end(), v)) continue;
      const int p = parent[i];
      if (p < 0 || !std::binary_search(td.nodes[p].bag.begin(), td.nodes[p].bag.end(), v)) ++tops;
    }
    if (tops != 1) return "bags of vertex " + std::to_string(v) + " are not connected";
  }
  for (int u = 0; u < g.size(); ++u)
    for (int v : g.adjacency[u]) {
      if (v < u) continue;
      bool covered = false;
      for (const auto& node : td.nodes)
        if (std::binary_search(node.bag.begin(), node.bag.end(), u) &&
            std::binary_search(node.bag.begin(), node.bag.end(), v))
          covered = true;
      if (!covered) return "edge not covered by any bag";
    }
  if (max_bag - 1 > td.width) return "width understated";
  return {};
}

}  // namespace gmmn
