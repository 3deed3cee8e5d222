#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "truemper/graph.hpp"

namespace truemper {

/// Partition (A, K, B) of the nodes: A and B nonempty, K a clique (possibly
/// empty), no edge between A and B.
struct CliqueSplit {
  NodeList a;
  NodeList k;
  NodeList b;
};

bool is_valid_clique_split(const Graph& g, const CliqueSplit& s);

/// A clique cutset split, or none. Disconnected graphs yield K = {} with A the
/// component of the smallest node. Connected graphs are split along the first
/// clique minimal separator found by the atom decomposition (MCS-M ordering,
/// smallest id wins weight ties); A is the atom side.
std::optional<CliqueSplit> find_clique_cutset(const Graph& g);

/// G[A u K] and G[K u B]. Throws GraphError when `s` is not a valid split.
std::pair<InducedSubgraph, InducedSubgraph> blocks_of_clique_split(const Graph& g, const CliqueSplit& s);

struct CliqueTreeNode {
  Graph graph;
  NodeList to_root;  // node i of graph is to_root[i] in the root graph
  std::optional<CliqueSplit> split;  // set on internal nodes (local ids)
  int child_a = -1;  // G[A u K]
  int child_b = -1;  // G[K u B]
  bool is_leaf() const { return !split.has_value(); }
};

/// Rooted tree stored as a flat array; nodes[0] is the root.
struct CliqueDecompTree {
  std::vector<CliqueTreeNode> nodes;
  std::vector<int> leaves() const;
};

CliqueDecompTree clique_decomposition_tree(const Graph& g);

}  // namespace truemper
