#pragma once

// Independent reference implementations used only by the tests. None of them
// calls into the library code it is meant to check.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "truemper/graph.hpp"
#include "truemper/oracle.hpp"

namespace truemper::testing {

/// Calls f on every labelled graph with n nodes (2^(n(n-1)/2) of them).
void for_each_graph(int n, const std::function<void(const Graph&)>& f);

Graph random_graph(std::mt19937_64& rng, int n, double p);

/// Plain backtracking isomorphism test with degree pruning.
bool isomorphic(const Graph& a, const Graph& b);

/// Every Truemper configuration with at most max_order nodes, one graph per
/// parameter choice (wheels: every spoke subset of every rim).
const std::vector<std::pair<ConfigKind, Graph>>& configuration_templates(int max_order);

/// Second oracle: some induced subgraph is isomorphic to a template of one of
/// the kinds. Only for graphs with at most 8 nodes.
bool contains_config_by_templates(const Graph& g, KindSet kinds);

struct BruteSplit {
  std::uint64_t x1 = 0, a1 = 0, b1 = 0, a2 = 0, b2 = 0;  // node bit masks
  bool full = false;  // also satisfies the 2-join clauses
};

/// All almost 2-joins over partitions with node 0 in X1, by direct enumeration.
std::vector<BruteSplit> brute_almost_2joins(const Graph& g);
bool brute_has_2join(const Graph& g);

/// Some clique (possibly empty) whose removal leaves a disconnected graph.
bool brute_has_clique_cutset(const Graph& g);

NodeList mask_nodes(std::uint64_t mask);

/// Random node subsets of g of size in [lo, hi] (half of them grown by BFS so
/// they tend to be connected).
std::vector<NodeList> sample_subsets(std::mt19937_64& rng, const Graph& g, int count, int lo, int hi);

}  // namespace truemper::testing
