#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace truemper {

using Node = int;
using Edge = std::pair<Node, Node>;
using NodeList = std::vector<Node>;

/// Raised for inputs that violate the simple-graph contract.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxNodes = 4096;

/// Immutable simple undirected graph on nodes 0..n-1.
///
/// Adjacency is kept twice: as packed bit rows for O(1) queries and as sorted
/// neighbor lists for iteration. Per-node tags are metadata; no predicate in
/// the library looks at them.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on self-loops, duplicate edges, or out-of-range ids.
  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  int size() const { return m_; }

  bool adjacent(Node u, Node v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  const NodeList& neighbors(Node v) const { return adj_[v]; }
  /// Packed adjacency row of v: bit u of word u/64 is set iff uv is an edge.
  std::span<const std::uint64_t> row(Node v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::size_t words() const { return words_; }
  int degree(Node v) const { return static_cast<int>(adj_[v].size()); }

  /// Edges as (u, v) with u < v, in ascending lexicographic order.
  std::vector<Edge> edges() const;

  const std::string& tag(Node v) const;
  const std::vector<std::string>& tags() const { return tags_; }
  /// Returns a copy carrying the given tags (size must equal order()).
  Graph with_tags(std::vector<std::string> tags) const;
  Graph with_tag(Node v, std::string tag) const;
  /// First node carrying `tag`, if any.
  std::optional<Node> find_tag(const std::string& tag) const;

  /// Structural equality: same order and identical edge sets; tags ignored.
  bool same_structure(const Graph& other) const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<NodeList> adj_;
  std::vector<std::string> tags_;
};

struct InducedSubgraph {
  Graph graph;
  NodeList to_parent;  // node i of graph is to_parent[i] in the parent
};

/// Subgraph induced by `nodes`; the result's ids follow ascending parent ids.
/// Tags are carried over.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Node> nodes);
InducedSubgraph remove_nodes(const Graph& g, std::span<const Node> nodes);

std::vector<NodeList> components(const Graph& g);
bool is_connected(const Graph& g);
/// Components of G[allowed]; `allowed` is a membership mask of size order().
std::vector<NodeList> components_within(const Graph& g, const std::vector<char>& allowed);

/// 2-connected blocks (bridges count as blocks), each as a sorted edge list.
/// Blocks are listed in ascending order of their smallest edge.
std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g);

bool is_clique(const Graph& g, std::span<const Node> nodes);
bool is_clique_graph(const Graph& g);
/// True iff g itself is a chordless cycle on at least four nodes.
bool is_hole_graph(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_tree(const Graph& g);
std::optional<NodeList> find_diamond(const Graph& g);
std::optional<NodeList> find_claw(const Graph& g);

/// Disjoint union; nodes of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
/// Graph with `order` nodes whose edges are those of g mapped through `map`
/// (map[v] is the new id of v, or -1 to drop v).
Graph relabel(const Graph& g, std::span<const Node> map, int order);

}  // namespace truemper
