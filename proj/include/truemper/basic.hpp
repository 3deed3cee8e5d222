#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "truemper/graph.hpp"
#include "truemper/oracle.hpp"

namespace truemper {

/// Node i of the result is edge i of r.edges().
Graph line_graph(const Graph& r);

struct RootGraph {
  Graph root;
  std::vector<Edge> edge_of_node;  // node v of the line graph is this root edge
};

/// Some R with L(R) = g under edge_of_node, or none when g is not a line
/// graph. Triangle components of R are replaced by claws.
std::optional<RootGraph> root_graph(const Graph& g);

/// Every cycle of r is chordless.
bool is_chordless_graph(const Graph& r);

/// The root graph when g is the line graph of a triangle-free chordless graph.
std::optional<RootGraph> is_lg_tf_chordless(const Graph& g);

enum class PendantLabel { x, y };
char to_char(PendantLabel l);

struct LabeledSafeTree {
  Graph tree;
  std::map<Edge, PendantLabel> labels;  // keyed by pendant edge (u < v)
};

struct TreeCheck {
  bool ok = true;
  std::string violation;
  explicit operator bool() const { return ok; }
};

/// Pendant edges, each as (u, v) with u < v, ascending.
std::vector<Edge> pendant_edges(const Graph& t);

/// Pairs of pendant edges whose degree-1 endpoints are joined by a path with
/// at most one node of degree >= 3. Throws GraphError unless t is a tree.
std::vector<std::pair<Edge, Edge>> pendant_siblings(const Graph& t);

/// Safety of t plus validity of labels: the labelled edges are exactly the
/// pendant edges and siblings carry distinct labels. t must have >= 2 edges.
/// Throws GraphError unless t is a tree.
TreeCheck is_safe_tree(const Graph& t, const std::map<Edge, PendantLabel>& labels);

/// L(T) with node i = edge i of T, then x = |E(T)| and y = |E(T)| + 1, tagged
/// "x" and "y". Throws GraphError naming the violated clause.
Graph build_pyramid_basic(const LabeledSafeTree& t);

struct PyramidBasicCertificate {
  LabeledSafeTree tree;
  Node x = -1, y = -1;   // ids in g
  NodeList edge_nodes;   // edge_nodes[i] is the node of g standing for tree edge i
};

std::optional<PyramidBasicCertificate> is_pyramid_basic(const Graph& g);

enum class BasicClass { clique, hole, long_pyramid, pyramid_basic, lg_tf_chordless, none };
std::string to_string(BasicClass c);

struct BasicVerdict {
  BasicClass cls = BasicClass::none;
  std::optional<RootGraph> root;                     // lg-tf-chordless
  std::optional<PyramidBasicCertificate> pyramid_basic;
  std::optional<ConfigWitness> pyramid;              // long-pyramid
};

/// First match in the order clique, hole, long pyramid, pyramid-basic,
/// line graph of a triangle-free chordless graph.
BasicVerdict classify_basic(const Graph& g);

}  // namespace truemper
