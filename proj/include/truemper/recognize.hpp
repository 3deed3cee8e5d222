#pragma once

#include <optional>
#include <string>
#include <vector>

#include "truemper/basic.hpp"
#include "truemper/cutset.hpp"
#include "truemper/oracle.hpp"
#include "truemper/twojoin.hpp"

namespace truemper {

enum class GraphClass { only_prism, only_pyramid, universally_signable };
std::string to_string(GraphClass c);
std::optional<GraphClass> parse_class(const std::string& name);
KindSet excluded_kinds(GraphClass c);

struct LeafResult {
  int clique_node = -1;    // leaf of the clique tree
  int two_join_node = -1;  // leaf of that clique leaf's 2-join tree (only-pyramid)
  BasicVerdict verdict;
  bool ok = false;
  std::string failure;  // failed test, empty when ok
};

struct RecognitionReport {
  GraphClass cls = GraphClass::only_prism;
  bool verdict = true;
  CliqueDecompTree clique_tree;
  /// Indexed like clique_tree.nodes; set on clique leaves for only-pyramid.
  std::vector<std::optional<TwoJoinDecompTree>> two_join_trees;
  std::vector<LeafResult> leaves;
  int offending = -1;  // index into leaves of the first failing leaf
  std::optional<ConfigWitness> witness;  // root ids, re-validates against the input
};

struct RecognizeOptions {
  bool witness = true;  // search an excluded configuration on rejection
  int oracle_cap = kDefaultOracleCap;
};

RecognitionReport recognize_only_prism(const Graph& g, const RecognizeOptions& opt = {});
RecognitionReport recognize_only_pyramid(const Graph& g, const RecognizeOptions& opt = {});
RecognitionReport recognize_universally_signable(const Graph& g, const RecognizeOptions& opt = {});
RecognitionReport recognize(GraphClass c, const Graph& g, const RecognizeOptions& opt = {});

/// Witness with every node id sent through map.
ConfigWitness map_witness(const ConfigWitness& w, const NodeList& map);

}  // namespace truemper
