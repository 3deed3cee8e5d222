#include "truemper/cutset.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace truemper {

namespace {

struct AtomStep {
  NodeList atom_side;  // C: the component split off
  NodeList separator;  // S: clique minimal separator
};

// Clique minimal separator decomposition of a connected graph: MCS-M computes
// a minimal elimination ordering together with its separator generators, and
// the atoms are peeled off in elimination order.
std::vector<AtomStep> atom_steps(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<int> alpha(static_cast<std::size_t>(n), -1);  // elimination position
  std::vector<char> generator(static_cast<std::size_t>(n), 0);
  std::vector<std::set<Node>> higher(static_cast<std::size_t>(n));  // madj in the triangulation
  std::vector<int> cost(static_cast<std::size_t>(n));
  int last_weight = -1;
  for (int pos = n - 1; pos >= 0; --pos) {
    Node z = -1;
    for (Node v = 0; v < n; ++v) {
      if (alpha[v] < 0 && (z < 0 || weight[v] > weight[z])) z = v;
    }
    if (weight[z] <= last_weight) generator[z] = 1;
    last_weight = weight[z];
    // Bottleneck search: cost[y] = least possible maximum weight of internal
    // nodes over paths z..y through unnumbered nodes (-1 for neighbors).
    std::fill(cost.begin(), cost.end(), n + 1);
    using Item = std::pair<int, Node>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (Node y : g.neighbors(z)) {
      if (alpha[y] < 0) {
        cost[y] = -1;
        pq.emplace(-1, y);
      }
    }
    while (!pq.empty()) {
      auto [c, u] = pq.top();
      pq.pop();
      if (c != cost[u]) continue;
      const int through = std::max(c, weight[u]);
      for (Node v : g.neighbors(u)) {
        if (v == z || alpha[v] >= 0) continue;
        if (through < cost[v]) {
          cost[v] = through;
          pq.emplace(through, v);
        }
      }
    }
    NodeList reached;
    for (Node y = 0; y < n; ++y) {
      if (y != z && alpha[y] < 0 && cost[y] < weight[y]) reached.push_back(y);
    }
    for (Node y : reached) {
      ++weight[y];
      higher[y].insert(z);
    }
    alpha[z] = pos;
  }
  std::vector<Node> order(static_cast<std::size_t>(n));
  for (Node v = 0; v < n; ++v) order[alpha[v]] = v;

  std::vector<AtomStep> steps;
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  for (Node x : order) {
    if (!generator[x] || !alive[x]) continue;
    NodeList sep(higher[x].begin(), higher[x].end());
    bool usable = !sep.empty() && is_clique(g, sep);
    for (Node s : sep) usable = usable && alive[s];
    if (!usable) continue;
    std::vector<char> allowed = alive;
    for (Node s : sep) allowed[s] = 0;
    NodeList comp;
    for (auto& c : components_within(g, allowed)) {
      if (std::binary_search(c.begin(), c.end(), x)) comp = std::move(c);
    }
    int remaining = 0;
    for (Node v = 0; v < n; ++v) remaining += allowed[v] ? 1 : 0;
    if (remaining == static_cast<int>(comp.size())) continue;
    for (Node v : comp) alive[v] = 0;
    steps.push_back({std::move(comp), std::move(sep)});
  }
  return steps;
}

NodeList complement_of(int n, const NodeList& a, const NodeList& b) {
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (Node v : a) used[v] = 1;
  for (Node v : b) used[v] = 1;
  NodeList out;
  for (Node v = 0; v < n; ++v) {
    if (!used[v]) out.push_back(v);
  }
  return out;
}

CliqueSplit disconnected_split(const Graph& g, const std::vector<NodeList>& comps) {
  CliqueSplit s;
  s.a = comps.front();
  s.b = complement_of(g.order(), s.a, {});
  return s;
}

// A holds the smallest node outside K; true when the sides were swapped.
bool orient(CliqueSplit& s) {
  if (s.b.front() > s.a.front()) return false;
  std::swap(s.a, s.b);
  return true;
}

NodeList compose_map(const NodeList& outer, const NodeList& inner) {
  NodeList out;
  out.reserve(inner.size());
  for (Node v : inner) out.push_back(outer[v]);
  return out;
}

NodeList to_local(const NodeList& global, const NodeList& kept) {
  // kept is sorted; global ⊆ kept
  NodeList out;
  for (Node v : global) {
    out.push_back(static_cast<Node>(std::lower_bound(kept.begin(), kept.end(), v) - kept.begin()));
  }
  return out;
}

void build(CliqueDecompTree& tree, int index);

int add_node(CliqueDecompTree& tree, InducedSubgraph sub, const NodeList& parent_to_root) {
  CliqueTreeNode node;
  node.to_root = compose_map(parent_to_root, sub.to_parent);
  node.graph = std::move(sub.graph);
  tree.nodes.push_back(std::move(node));
  return static_cast<int>(tree.nodes.size()) - 1;
}

void split_node(CliqueDecompTree& tree, int index, CliqueSplit split) {
  auto [ga, gb] = blocks_of_clique_split(tree.nodes[index].graph, split);
  NodeList to_root = tree.nodes[index].to_root;
  tree.nodes[index].split = std::move(split);
  int a = add_node(tree, std::move(ga), to_root);
  int b = add_node(tree, std::move(gb), to_root);
  tree.nodes[index].child_a = a;
  tree.nodes[index].child_b = b;
}

void build(CliqueDecompTree& tree, int index) {
  const Graph& g = tree.nodes[index].graph;
  if (g.order() <= 1) return;
  auto comps = components(g);
  if (comps.size() > 1) {
    split_node(tree, index, disconnected_split(g, comps));
    int a = tree.nodes[index].child_a;
    int b = tree.nodes[index].child_b;
    build(tree, a);
    build(tree, b);
    return;
  }
  // One ordering serves the whole chain: each step peels an atom off the rest.
  const std::vector<AtomStep> steps = atom_steps(g);
  const int n = g.order();
  NodeList remaining(static_cast<std::size_t>(n));
  for (Node v = 0; v < n; ++v) remaining[v] = v;
  int current = index;
  for (const AtomStep& step : steps) {
    CliqueSplit s;
    s.a = to_local(step.atom_side, remaining);
    s.k = to_local(step.separator, remaining);
    std::sort(s.a.begin(), s.a.end());
    std::sort(s.k.begin(), s.k.end());
    s.b = complement_of(static_cast<int>(remaining.size()), s.a, s.k);
    const bool swapped = orient(s);
    split_node(tree, current, std::move(s));
    current = swapped ? tree.nodes[current].child_a : tree.nodes[current].child_b;
    NodeList next;
    std::set_difference(remaining.begin(), remaining.end(), step.atom_side.begin(), step.atom_side.end(),
                        std::back_inserter(next));
    remaining = std::move(next);
  }
}

}  // namespace

bool is_valid_clique_split(const Graph& g, const CliqueSplit& s) {
  const int n = g.order();
  if (s.a.empty() || s.b.empty()) return false;
  std::vector<int> part(static_cast<std::size_t>(n), -1);
  auto mark = [&](const NodeList& set, int label) {
    for (Node v : set) {
      if (v < 0 || v >= n || part[v] >= 0) return false;
      part[v] = label;
    }
    return true;
  };
  if (!mark(s.a, 0) || !mark(s.k, 1) || !mark(s.b, 2)) return false;
  if (std::count(part.begin(), part.end(), -1) != 0) return false;
  if (!is_clique(g, s.k)) return false;
  for (Node u : s.a) {
    for (Node v : g.neighbors(u)) {
      if (part[v] == 2) return false;
    }
  }
  return true;
}

std::optional<CliqueSplit> find_clique_cutset(const Graph& g) {
  if (g.order() <= 1) return std::nullopt;
  auto comps = components(g);
  if (comps.size() > 1) return disconnected_split(g, comps);
  auto steps = atom_steps(g);
  if (steps.empty()) return std::nullopt;
  CliqueSplit s;
  s.a = steps.front().atom_side;
  s.k = steps.front().separator;
  std::sort(s.a.begin(), s.a.end());
  s.b = complement_of(g.order(), s.a, s.k);
  orient(s);
  return s;
}

std::pair<InducedSubgraph, InducedSubgraph> blocks_of_clique_split(const Graph& g, const CliqueSplit& s) {
  if (!is_valid_clique_split(g, s)) throw GraphError("not a clique cutset split of this graph");
  NodeList ak = s.a;
  ak.insert(ak.end(), s.k.begin(), s.k.end());
  NodeList kb = s.k;
  kb.insert(kb.end(), s.b.begin(), s.b.end());
  return {induced_subgraph(g, ak), induced_subgraph(g, kb)};
}

std::vector<int> CliqueDecompTree::leaves() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    if (nodes[i].is_leaf()) out.push_back(i);
  }
  return out;
}

CliqueDecompTree clique_decomposition_tree(const Graph& g) {
  CliqueDecompTree tree;
  CliqueTreeNode root;
  root.graph = g;
  root.to_root.resize(static_cast<std::size_t>(g.order()));
  for (Node v = 0; v < g.order(); ++v) root.to_root[v] = v;
  tree.nodes.push_back(std::move(root));
  build(tree, 0);
  return tree;
}

}  // namespace truemper
