#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "truemper/graph.hpp"

namespace truemper {

/// (X1, X2, A1, A2, B1, B2). Every list is kept sorted.
struct TwoJoinSplit {
  NodeList x1, x2;
  NodeList a1, b1;
  NodeList a2, b2;

  NodeList c1() const;
  NodeList c2() const;
  bool operator==(const TwoJoinSplit&) const = default;
};

enum class SplitMode { almost, full };

struct SplitCheck {
  bool ok = true;
  std::string violation;  // first violated clause, empty when ok
  explicit operator bool() const { return ok; }
};

/// Checks every clause of the almost 2-join definition and, in full mode,
/// the path-existence and non-path clauses of a 2-join.
SplitCheck validate_split(const Graph& g, const TwoJoinSplit& s, SplitMode mode);

/// Special sets forced by a partition (X1, V \ X1): the crossing edges must form
/// exactly two complete bipartite bundles with disjoint sides. The A sets are
/// those containing the smallest special node. Size clauses are not checked.
std::optional<TwoJoinSplit> split_from_partition(const Graph& g, const NodeList& x1);

struct ConsistencyCheck {
  int failed_condition = 0;  // 1..8, 0 when consistent
  int side = 0;              // 1 or 2 for per-side conditions, 0 otherwise
  bool consistent() const { return failed_condition == 0; }
  explicit operator bool() const { return consistent(); }
};

/// Evaluates the eight consistency conditions in order:
///  1 each component of G[X_i] meets A_i and B_i
///  2 each node of A_i has a non-neighbor in B_i
///  3 each node of B_i has a non-neighbor in A_i
///  4 A1, A2 both cliques, or one a single node and the other a disjoint union of cliques
///  5 the same for B1, B2
///  6 G[X_i] connected
///  7 every node of X_i reaches B_i by a path with no internal node in A_i
///  8 every node of X_i reaches A_i by a path with no internal node in B_i
/// Throws GraphError when `s` is not an almost 2-join of g.
ConsistencyCheck is_consistent(const Graph& g, const TwoJoinSplit& s);

/// A 2-join of g or none. Seeds are one crossing edge for each bundle,
/// oriented so the smallest special node lies in A1; the partition is then
/// closed under the forcing rules of the complete-bipartite crossing
/// structure, branching on free nodes. Complete and deterministic.
std::optional<TwoJoinSplit> find_2join(const Graph& g);

inline const std::string kMarkerA = "marker-a";
inline const std::string kMarkerC = "marker-c";
inline const std::string kMarkerB = "marker-b";

struct TwoJoinBlock {
  Graph graph;
  NodeList to_parent;  // -1 for the three marker nodes (the last three ids)
};

/// Blocks of decomposition: G[X1] plus marker path a2-c2-b2 (a2 complete to
/// A1, b2 complete to B1), and symmetrically for X2. Marker nodes are tagged;
/// older marker tags inside X_i are cleared. Throws GraphError unless s is a
/// 2-join of g.
std::pair<TwoJoinBlock, TwoJoinBlock> blocks_of_2join(const Graph& g, const TwoJoinSplit& s);

struct MarkerPath {
  Node a = -1, c = -1, b = -1;
};

/// The tagged marker path of g; throws GraphError if tags are missing,
/// duplicated, or do not form an induced path a-c-b with deg(c) = 2.
MarkerPath marker_path(const Graph& g);

/// Consistency of the almost 2-join (V \ P, P) for an induced path P = a-c-b
/// with c of degree 2. Throws GraphError if that is not an almost 2-join.
ConsistencyCheck check_marker_path(const Graph& g, const MarkerPath& p);

class CompositionError : public std::invalid_argument {
 public:
  CompositionError(const std::string& what, int failed_condition)
      : std::invalid_argument(what), failed_condition_(failed_condition) {}
  int failed_condition() const { return failed_condition_; }

 private:
  int failed_condition_;
};

struct Composition {
  Graph graph;
  TwoJoinSplit split;
  NodeList from_first;   // id in graph of each node of the first factor, -1 for markers
  NodeList from_second;
};

/// Consistent 2-join composition of two factors carrying tagged marker paths.
/// Nodes of the first factor come first, in ascending order. Throws
/// CompositionError naming the failed consistency condition when a factor's
/// marker path does not give a consistent almost 2-join.
Composition compose_2join(const Graph& first, const Graph& second);

enum class TwoJoinNodeKind { internal, no_2join, non_consistent_2join };
std::string to_string(TwoJoinNodeKind kind);

struct TwoJoinTreeNode {
  Graph graph;
  NodeList to_root;  // -1 for marker nodes
  TwoJoinNodeKind kind = TwoJoinNodeKind::no_2join;
  std::optional<TwoJoinSplit> split;  // internal nodes and non-consistent leaves
  ConsistencyCheck consistency;       // the failing condition on non-consistent leaves
  int child1 = -1, child2 = -1;
  int calls = 1;  // construction calls spent on this subtree
  bool is_leaf() const { return kind != TwoJoinNodeKind::internal; }
};

struct TwoJoinDecompTree {
  std::vector<TwoJoinTreeNode> nodes;  // nodes[0] is the root
  int calls() const { return nodes.empty() ? 0 : nodes.front().calls; }
  std::vector<int> leaves() const;
};

TwoJoinDecompTree two_join_decomposition_tree(const Graph& g);

}  // namespace truemper
