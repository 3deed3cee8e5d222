#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "truemper/basic.hpp"
#include "truemper/graph.hpp"
#include "truemper/oracle.hpp"
#include "truemper/twojoin.hpp"

namespace truemper {

using Rng = std::mt19937_64;

/// One recorded construction step. Each step appends one graph to the pool;
/// operands refer to earlier pool entries.
///   base:    an explicit basic graph (kind and params describe it,
///            order and edges define it)
///   glue:    glue_on_clique(pool[left], k1, pool[right], k2)
///   compose: compose_2join of pool[left] and pool[right] with the marker
///            paths m1 and m2 (a, c, b node ids) tagged first
struct SynthStep {
  enum class Op { base, glue, compose };
  Op op = Op::base;
  std::string kind;
  std::vector<int> params;
  int order = 0;
  std::vector<Edge> edges;
  int left = -1, right = -1;
  NodeList k1, k2;
  NodeList m1, m2;
};

std::string to_string(SynthStep::Op op);
std::optional<SynthStep::Op> parse_op(const std::string& name);

struct SynthRecipe {
  std::string family;  // "only-prism" or "only-pyramid"
  std::uint64_t seed = 0;
  int size = 0;
  std::vector<SynthStep> steps;  // the last step yields the output
};

struct Synthesis {
  Graph graph;
  SynthRecipe recipe;
};

/// Replays a recipe; the output equals the synthesized graph bit for bit.
Graph replay(const SynthRecipe& recipe);

Graph make_clique(int k);
Graph make_hole(int k);
/// Two ends joined by paths with the given edge counts (each >= 2).
Graph make_theta(int l1, int l2, int l3);
/// Triangles 0,1,2 and 3,4,5 joined i to i+3 by paths with these edge counts (>= 1).
Graph make_prism(int l1, int l2, int l3);
/// Apex 0 and triangle 1,2,3; path i joins 0 to i (edge counts >= 1, at most one equal to 1).
Graph make_pyramid(int l1, int l2, int l3);
/// Rim 0..k-1 in cyclic order, center k adjacent to the listed rim nodes (>= 3).
Graph make_wheel(int k, const NodeList& spokes);

/// Triangle-free chordless graph on n nodes: a random tree plus random extra
/// edges, each kept only if the graph stays triangle-free and chordless.
Graph random_tf_chordless(std::uint64_t seed, int n);
Graph random_tf_chordless(Rng& rng, int n);

/// Random safe tree with valid labels and about `edges` edges (>= 2).
LabeledSafeTree random_safe_tree(Rng& rng, int edges);

/// Union of g1 and g2 with k2[i] identified with k1[i]. Nodes of g1 keep their
/// ids; the other nodes of g2 follow in ascending order. Throws GraphError when
/// the lists differ in size or are not cliques.
Graph glue_on_clique(const Graph& g1, const NodeList& k1, const Graph& g2, const NodeList& k2);

/// Every induced path a-c-b with deg(c) = 2 whose complement side gives a
/// consistent almost 2-join, in ascending (c, a, b) order with a < b.
std::vector<MarkerPath> marker_candidates(const Graph& g);

/// g with the marker tags placed on p (older marker tags cleared).
Graph tag_marker(const Graph& g, const MarkerPath& p);

/// Grows until the order reaches `size`; steps that would pass it are redrawn,
/// and the cap is dropped only when no step of size 1 fits.
Synthesis synth_only_prism(std::uint64_t seed, int size);
Synthesis synth_only_pyramid(std::uint64_t seed, int size);

struct Planted {
  Graph graph;
  NodeList pattern;  // node set carrying the induced configuration
  ConfigKind kind = ConfigKind::theta;
};

/// Random host on `host_size` nodes containing an induced configuration of
/// the given kind. The configuration is capped by the host size; host edges
/// inside the pattern's node set are never added.
Planted plant_configuration(std::uint64_t seed, ConfigKind kind, int host_size);

struct ComposedInstance {
  Graph first, second;  // factors with tagged marker paths
  Composition composition;
};

/// Two random factors (long pyramids, holes, pyramid-basic graphs, thetas,
/// prisms, wheels, line graphs) each with a valid marker path, composed so the
/// result has a 2-join; total order at most max_order.
ComposedInstance random_composed_instance(std::uint64_t seed, int max_order);

}  // namespace truemper
