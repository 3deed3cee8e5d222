#include "truemper/graph.hpp"

#include <algorithm>
#include <string>

namespace truemper {

namespace {
const std::string kEmptyTag;
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 0 || n > kMaxNodes) {
    throw GraphError("node count " + std::to_string(n) + " outside [0, " +
                     std::to_string(kMaxNodes) + "]");
  }
  Graph g;
  g.n_ = n;
  g.words_ = static_cast<std::size_t>((n + 63) / 64);
  g.rows_.assign(static_cast<std::size_t>(n) * g.words_, 0);
  g.adj_.assign(static_cast<std::size_t>(n), {});
  g.tags_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                       " has an out-of-range endpoint");
    }
    if (u == v) throw GraphError("self-loop at node " + std::to_string(u));
    if (g.adjacent(u, v)) {
      throw GraphError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    g.rows_[static_cast<std::size_t>(u) * g.words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    g.rows_[static_cast<std::size_t>(v) * g.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    ++g.m_;
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Node u = 0; u < n_; ++u) {
    for (Node v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

const std::string& Graph::tag(Node v) const {
  return tags_.empty() ? kEmptyTag : tags_[v];
}

Graph Graph::with_tags(std::vector<std::string> tags) const {
  if (static_cast<int>(tags.size()) != n_) throw GraphError("tag vector size mismatch");
  Graph g = *this;
  g.tags_ = std::move(tags);
  return g;
}

Graph Graph::with_tag(Node v, std::string tag) const {
  Graph g = *this;
  g.tags_[v] = std::move(tag);
  return g;
}

std::optional<Node> Graph::find_tag(const std::string& tag) const {
  for (Node v = 0; v < n_; ++v) {
    if (tags_[v] == tag) return v;
  }
  return std::nullopt;
}

bool Graph::same_structure(const Graph& other) const {
  return n_ == other.n_ && rows_ == other.rows_;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Node> nodes) {
  NodeList keep(nodes.begin(), nodes.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<Node> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Node>(i);
  std::vector<Edge> edges;
  std::vector<std::string> tags;
  tags.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    Node u = keep[i];
    tags.push_back(g.tag(u));
    for (Node v : g.neighbors(u)) {
      if (v > u && index[v] >= 0) edges.emplace_back(static_cast<Node>(i), index[v]);
    }
  }
  Graph sub = Graph::from_edge_list(static_cast<int>(keep.size()), edges).with_tags(std::move(tags));
  return {std::move(sub), std::move(keep)};
}

InducedSubgraph remove_nodes(const Graph& g, std::span<const Node> nodes) {
  std::vector<char> drop(static_cast<std::size_t>(g.order()), 0);
  for (Node v : nodes) drop[v] = 1;
  NodeList keep;
  for (Node v = 0; v < g.order(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

std::vector<NodeList> components_within(const Graph& g, const std::vector<char>& allowed) {
  std::vector<NodeList> out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  NodeList stack;
  for (Node s = 0; s < g.order(); ++s) {
    if (!allowed[s] || seen[s]) continue;
    NodeList comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Node u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Node v : g.neighbors(u)) {
        if (allowed[v] && !seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<NodeList> components(const Graph& g) {
  return components_within(g, std::vector<char>(static_cast<std::size_t>(g.order()), 1));
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Edge>> blocks;
  std::vector<Edge> edge_stack;
  struct Frame {
    Node v;
    Node parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int time = 0;
  for (Node root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = time++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const NodeList& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Node w = nb[f.next++];
        if (disc[w] < 0) {
          edge_stack.emplace_back(std::min(f.v, w), std::max(f.v, w));
          disc[w] = low[w] = time++;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(std::min(f.v, w), std::max(f.v, w));
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Node v = f.v;
      Node parent = f.parent;
      stack.pop_back();
      if (parent < 0) continue;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        std::vector<Edge> block;
        Edge closing{std::min(parent, v), std::max(parent, v)};
        while (!edge_stack.empty()) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == closing) break;
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

bool is_clique(const Graph& g, std::span<const Node> nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (!g.adjacent(nodes[i], nodes[j])) return false;
    }
  }
  return true;
}

bool is_clique_graph(const Graph& g) {
  const long long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

bool is_hole_graph(const Graph& g) {
  if (g.order() < 4 || g.size() != g.order()) return false;
  for (Node v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

bool is_triangle_free(const Graph& g) {
  for (Node u = 0; u < g.order(); ++u) {
    for (Node v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Node w : g.neighbors(v)) {
        if (w > v && g.adjacent(u, w)) return false;
      }
    }
  }
  return true;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

std::optional<NodeList> find_diamond(const Graph& g) {
  // A diamond is an edge uv with two nonadjacent common neighbors.
  std::optional<NodeList> best;
  for (Node u = 0; u < g.order(); ++u) {
    for (Node v : g.neighbors(u)) {
      if (v <= u) continue;
      NodeList common;
      for (Node w : g.neighbors(u)) {
        if (w != v && g.adjacent(v, w)) common.push_back(w);
      }
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          if (g.adjacent(common[i], common[j])) continue;
          NodeList found{u, v, common[i], common[j]};
          std::sort(found.begin(), found.end());
          if (!best || found < *best) best = found;
        }
      }
    }
  }
  return best;
}

std::optional<NodeList> find_claw(const Graph& g) {
  std::optional<NodeList> best;
  for (Node c = 0; c < g.order(); ++c) {
    const NodeList& nb = g.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k) {
          if (g.adjacent(nb[i], nb[k]) || g.adjacent(nb[j], nb[k])) continue;
          NodeList found{c, nb[i], nb[j], nb[k]};
          std::sort(found.begin(), found.end());
          if (!best || found < *best) best = found;
        }
      }
    }
  }
  return best;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  std::vector<std::string> tags = a.tags();
  tags.insert(tags.end(), b.tags().begin(), b.tags().end());
  return Graph::from_edge_list(a.order() + b.order(), edges).with_tags(std::move(tags));
}

Graph relabel(const Graph& g, std::span<const Node> map, int order) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (map[u] < 0 || map[v] < 0) continue;
    edges.emplace_back(std::min(map[u], map[v]), std::max(map[u], map[v]));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edge_list(order, edges);
}

}  // namespace truemper
