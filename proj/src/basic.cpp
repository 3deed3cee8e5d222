#include "truemper/basic.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace truemper {

namespace {

Edge ordered(Node a, Node b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Assigns to every node of g an edge of a growing root graph, in BFS order.
// A node meeting an already placed neighbor u = pq must share exactly one
// end with it; its other end is then forced by the remaining placed
// neighbors or is a fresh root node. Backtracks over the shared end.
class RootBuilder {
 public:
  explicit RootBuilder(const Graph& g)
      : g_(g), edge_(static_cast<std::size_t>(g.order()), Edge{-1, -1}) {
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (Node s = 0; s < g.order(); ++s) {
      if (seen[s]) continue;
      seen[s] = 1;
      std::size_t head = order_.size();
      order_.push_back(s);
      parent_.push_back(-1);
      while (head < order_.size()) {
        Node u = order_[head++];
        for (Node v : g.neighbors(u)) {
          if (!seen[v]) {
            seen[v] = 1;
            order_.push_back(v);
            parent_.push_back(u);
          }
        }
      }
    }
  }

  bool run() { return place(0); }
  const std::vector<Edge>& edges() const { return edge_; }
  int root_order() const { return static_cast<int>(at_.size()); }

 private:
  bool placed(Node w) const { return edge_[w].first >= 0; }

  bool consistent(Node v, Node p, Node q, int placed_neighbors) const {
    if (p == q || used_.count(ordered(p, q))) return false;
    int hits = 0;
    for (Node end : {p, q}) {
      if (end >= root_order()) continue;
      for (Node w : at_[end]) {
        if (!g_.adjacent(v, w)) return false;
        ++hits;
      }
    }
    return hits == placed_neighbors;
  }

  void assign(Node v, Node p, Node q) {
    while (root_order() <= std::max(p, q)) at_.emplace_back();
    edge_[v] = ordered(p, q);
    used_.insert(edge_[v]);
    at_[p].push_back(v);
    at_[q].push_back(v);
  }

  void unassign(Node v) {
    auto [p, q] = edge_[v];
    at_[p].pop_back();
    at_[q].pop_back();
    used_.erase(edge_[v]);
    edge_[v] = {-1, -1};
    while (!at_.empty() && at_.back().empty()) at_.pop_back();
  }

  bool place(std::size_t i) {
    if (i == order_.size()) return true;
    const Node v = order_[i];
    const Node u = parent_[i];
    if (u < 0) {
      const Node fresh = root_order();
      assign(v, fresh, fresh + 1);
      if (place(i + 1)) return true;
      unassign(v);
      return false;
    }
    int placed_neighbors = 0;
    for (Node w : g_.neighbors(v)) placed_neighbors += placed(w) ? 1 : 0;
    const auto [p, q] = edge_[u];
    for (Node shared : {p, q}) {
      // Placed neighbors not at `shared` must all meet the other end.
      std::vector<Node> options;
      bool first = true;
      for (Node w : g_.neighbors(v)) {
        if (!placed(w)) continue;
        auto [wp, wq] = edge_[w];
        if (wp == shared || wq == shared) continue;
        std::vector<Node> ends = {wp, wq};
        if (first) {
          options = ends;
          first = false;
        } else {
          std::erase_if(options, [&](Node x) { return x != wp && x != wq; });
        }
      }
      if (first) options = {root_order()};
      for (Node other : options) {
        if (!consistent(v, shared, other, placed_neighbors)) continue;
        assign(v, shared, other);
        if (place(i + 1)) return true;
        unassign(v);
      }
    }
    return false;
  }

  const Graph& g_;
  std::vector<Edge> edge_;
  std::vector<Node> order_;
  std::vector<Node> parent_;
  std::vector<std::vector<Node>> at_;  // placed nodes whose edge meets each root node
  std::set<Edge> used_;
};

std::vector<char> leaf_mask(const Graph& t) {
  std::vector<char> leaf(static_cast<std::size_t>(t.order()), 0);
  for (Node v = 0; v < t.order(); ++v) leaf[v] = t.degree(v) == 1;
  return leaf;
}

// Degree-1 endpoint standing for a pendant edge (the smaller one for K2).
Node leaf_end(const Graph& t, Edge e) { return t.degree(e.first) == 1 ? e.first : e.second; }

}  // namespace

Graph line_graph(const Graph& r) {
  const auto edges = r.edges();
  std::vector<NodeList> incident(static_cast<std::size_t>(r.order()));
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    incident[edges[i].first].push_back(i);
    incident[edges[i].second].push_back(i);
  }
  std::set<Edge> out;
  for (const auto& list : incident) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) out.insert(ordered(list[i], list[j]));
    }
  }
  std::vector<Edge> flat(out.begin(), out.end());
  return Graph::from_edge_list(static_cast<int>(edges.size()), flat);
}

std::optional<RootGraph> root_graph(const Graph& g) {
  if (find_claw(g)) return std::nullopt;
  RootBuilder builder(g);
  if (!builder.run()) return std::nullopt;
  RootGraph out;
  out.edge_of_node = builder.edges();
  int order = builder.root_order();
  std::vector<Edge> root_edges(out.edge_of_node.begin(), out.edge_of_node.end());
  Graph raw = Graph::from_edge_list(order, root_edges);
  for (const NodeList& comp : components(raw)) {
    if (comp.size() != 3 || !is_clique(raw, comp)) continue;
    const Node center = order++;
    for (Edge& e : out.edge_of_node) {
      if (!std::binary_search(comp.begin(), comp.end(), e.first)) continue;
      Node third = comp[0] + comp[1] + comp[2] - e.first - e.second;
      e = ordered(third, center);
    }
  }
  root_edges.assign(out.edge_of_node.begin(), out.edge_of_node.end());
  out.root = Graph::from_edge_list(order, root_edges);
  return out;
}

bool is_chordless_graph(const Graph& r) {
  const auto edges = r.edges();
  for (const Edge& uv : edges) {
    std::vector<Edge> rest;
    rest.reserve(edges.size() - 1);
    for (const Edge& e : edges) {
      if (e != uv) rest.push_back(e);
    }
    const Graph without = Graph::from_edge_list(r.order(), rest);
    for (const auto& block : biconnected_blocks(without)) {
      bool has_u = false, has_v = false;
      for (auto [a, b] : block) {
        has_u = has_u || a == uv.first || b == uv.first;
        has_v = has_v || a == uv.second || b == uv.second;
      }
      if (has_u && has_v) return false;
    }
  }
  return true;
}

std::optional<RootGraph> is_lg_tf_chordless(const Graph& g) {
  auto root = root_graph(g);
  if (!root || !is_triangle_free(root->root) || !is_chordless_graph(root->root)) return std::nullopt;
  return root;
}

char to_char(PendantLabel l) { return l == PendantLabel::x ? 'x' : 'y'; }

std::vector<Edge> pendant_edges(const Graph& t) {
  std::vector<Edge> out;
  for (const Edge& e : t.edges()) {
    if (t.degree(e.first) == 1 || t.degree(e.second) == 1) out.push_back(e);
  }
  return out;
}

std::vector<std::pair<Edge, Edge>> pendant_siblings(const Graph& t) {
  if (!is_tree(t)) throw GraphError("pendant siblings need a tree");
  const auto pendant = pendant_edges(t);
  const int n = t.order();
  std::vector<std::pair<Edge, Edge>> out;
  for (std::size_t i = 0; i < pendant.size(); ++i) {
    // Count of degree >= 3 nodes on the path from this leaf to every node.
    const Node start = leaf_end(t, pendant[i]);
    std::vector<int> heavy(static_cast<std::size_t>(n), -1);
    heavy[start] = 0;
    NodeList queue = {start};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      Node u = queue[h];
      for (Node v : t.neighbors(u)) {
        if (heavy[v] < 0) {
          heavy[v] = heavy[u] + (t.degree(v) >= 3 ? 1 : 0);
          queue.push_back(v);
        }
      }
    }
    for (std::size_t j = i + 1; j < pendant.size(); ++j) {
      if (heavy[leaf_end(t, pendant[j])] <= 1) out.emplace_back(pendant[i], pendant[j]);
    }
  }
  return out;
}

TreeCheck is_safe_tree(const Graph& t, const std::map<Edge, PendantLabel>& labels) {
  auto fail = [](std::string why) { return TreeCheck{false, std::move(why)}; };
  if (!is_tree(t)) throw GraphError("safe-tree check needs a tree");
  if (t.size() < 2) return fail("tree needs at least two edges");
  const auto leaf = leaf_mask(t);
  for (Node u = 0; u < t.order(); ++u) {
    if (leaf[u] && t.degree(t.neighbors(u).front()) > 2) {
      return fail("neighbor of a degree-1 node must have degree at most 2");
    }
  }
  const auto pendant = pendant_edges(t);
  const auto siblings = pendant_siblings(t);
  std::map<Edge, int> count;
  for (const auto& [e, f] : siblings) {
    ++count[e];
    ++count[f];
  }
  for (const auto& [e, c] : count) {
    if (c > 1) return fail("every pendant edge must have at most one sibling");
  }
  if (labels.size() != pendant.size() ||
      !std::all_of(pendant.begin(), pendant.end(), [&](const Edge& e) { return labels.count(e) == 1; })) {
    return fail("labels must be given exactly to the pendant edges");
  }
  for (const auto& [e, f] : siblings) {
    if (labels.at(e) == labels.at(f)) return fail("siblings must carry distinct labels");
  }
  return {};
}

Graph build_pyramid_basic(const LabeledSafeTree& t) {
  if (auto check = is_safe_tree(t.tree, t.labels); !check) {
    throw GraphError("not a labelled safe tree: " + check.violation);
  }
  const auto edges = t.tree.edges();
  const int m = static_cast<int>(edges.size());
  const Graph line = line_graph(t.tree);
  std::vector<Edge> out = line.edges();
  const Node x = m, y = m + 1;
  out.emplace_back(x, y);
  for (int i = 0; i < m; ++i) {
    auto it = t.labels.find(edges[i]);
    if (it != t.labels.end()) out.emplace_back(i, it->second == PendantLabel::x ? x : y);
  }
  std::vector<std::string> tags(static_cast<std::size_t>(m + 2));
  tags[x] = "x";
  tags[y] = "y";
  return Graph::from_edge_list(m + 2, out).with_tags(std::move(tags));
}

std::optional<PyramidBasicCertificate> is_pyramid_basic(const Graph& g) {
  if (g.order() < 4) return std::nullopt;
  for (const Edge& xy : g.edges()) {
    for (auto [x, y] : {xy, Edge{xy.second, xy.first}}) {
      const std::array<Node, 2> drop = {x, y};
      const InducedSubgraph h = remove_nodes(g, drop);
      auto root = root_graph(h.graph);
      if (!root || !is_tree(root->root)) continue;
      const Graph& tree = root->root;
      std::map<Edge, PendantLabel> labels;
      bool valid = true;
      for (Node i = 0; i < h.graph.order() && valid; ++i) {
        const Edge e = root->edge_of_node[i];
        const bool pendant = tree.degree(e.first) == 1 || tree.degree(e.second) == 1;
        const bool to_x = g.adjacent(x, h.to_parent[i]);
        const bool to_y = g.adjacent(y, h.to_parent[i]);
        if (pendant) {
          valid = to_x != to_y;
          labels[e] = to_x ? PendantLabel::x : PendantLabel::y;
        } else {
          valid = !to_x && !to_y;
        }
      }
      if (!valid || !is_safe_tree(tree, labels)) continue;
      PyramidBasicCertificate cert;
      cert.x = x;
      cert.y = y;
      const auto tree_edges = tree.edges();
      cert.edge_nodes.assign(tree_edges.size(), -1);
      for (Node i = 0; i < h.graph.order(); ++i) {
        auto pos = std::lower_bound(tree_edges.begin(), tree_edges.end(), root->edge_of_node[i]);
        cert.edge_nodes[pos - tree_edges.begin()] = h.to_parent[i];
      }
      cert.tree = {tree, std::move(labels)};
      return cert;
    }
  }
  return std::nullopt;
}

std::string to_string(BasicClass c) {
  switch (c) {
    case BasicClass::clique: return "clique";
    case BasicClass::hole: return "hole";
    case BasicClass::long_pyramid: return "long-pyramid";
    case BasicClass::pyramid_basic: return "pyramid-basic";
    case BasicClass::lg_tf_chordless: return "lg-tf-chordless";
    case BasicClass::none: return "none";
  }
  return "?";
}

BasicVerdict classify_basic(const Graph& g) {
  BasicVerdict v;
  if (is_clique_graph(g)) {
    v.cls = BasicClass::clique;
  } else if (is_hole_graph(g)) {
    v.cls = BasicClass::hole;
  } else if (is_long_pyramid(g)) {
    v.cls = BasicClass::long_pyramid;
    v.pyramid = is_pyramid(g);
  } else if (auto cert = is_pyramid_basic(g)) {
    v.cls = BasicClass::pyramid_basic;
    v.pyramid_basic = std::move(cert);
  } else if (auto root = is_lg_tf_chordless(g)) {
    v.cls = BasicClass::lg_tf_chordless;
    v.root = std::move(root);
  }
  return v;
}

}  // namespace truemper
