#include "truemper/recognize.hpp"

#include <algorithm>

namespace truemper {

namespace {

using LeafTest = bool (*)(const Graph&, BasicVerdict&);

bool lg_tf_chordless_leaf(const Graph& g, BasicVerdict& v) {
  if (auto root = is_lg_tf_chordless(g)) {
    v.cls = BasicClass::lg_tf_chordless;
    v.root = std::move(root);
    return true;
  }
  return false;
}

bool clique_or_hole_leaf(const Graph& g, BasicVerdict& v) {
  if (is_clique_graph(g)) v.cls = BasicClass::clique;
  else if (is_hole_graph(g)) v.cls = BasicClass::hole;
  return v.cls != BasicClass::none;
}

bool pyramid_basic_leaf(const Graph& g, BasicVerdict& v) {
  v = classify_basic(g);
  return v.cls == BasicClass::clique || v.cls == BasicClass::hole || v.cls == BasicClass::long_pyramid ||
         v.cls == BasicClass::pyramid_basic;
}

void attach_witness(RecognitionReport& report, const Graph& g, const RecognizeOptions& opt) {
  if (report.verdict || !opt.witness) return;
  const KindSet kinds = excluded_kinds(report.cls);
  if (g.order() <= opt.oracle_cap) {
    report.witness = contains_config(g, kinds, opt.oracle_cap);
    return;
  }
  const auto& leaf = report.clique_tree.nodes[report.leaves[report.offending].clique_node];
  if (leaf.graph.order() <= opt.oracle_cap) {
    if (auto w = contains_config(leaf.graph, kinds, opt.oracle_cap)) {
      report.witness = map_witness(*w, leaf.to_root);
    }
  }
}

void record(RecognitionReport& report, LeafResult leaf) {
  if (!leaf.ok && report.offending < 0) {
    report.offending = static_cast<int>(report.leaves.size());
    report.verdict = false;
  }
  report.leaves.push_back(std::move(leaf));
}

RecognitionReport by_clique_leaves(GraphClass cls, const Graph& g, const RecognizeOptions& opt, LeafTest test,
                                   const char* failure) {
  RecognitionReport report;
  report.cls = cls;
  report.clique_tree = clique_decomposition_tree(g);
  report.two_join_trees.resize(report.clique_tree.nodes.size());
  for (int index : report.clique_tree.leaves()) {
    LeafResult leaf;
    leaf.clique_node = index;
    const Graph& lg = report.clique_tree.nodes[index].graph;
    if (g.order() <= 2) {
      leaf.verdict = classify_basic(lg);
      leaf.ok = true;
    } else {
      leaf.ok = test(lg, leaf.verdict);
    }
    if (!leaf.ok) leaf.failure = failure;
    record(report, std::move(leaf));
  }
  attach_witness(report, g, opt);
  return report;
}

}  // namespace

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::only_prism: return "only-prism";
    case GraphClass::only_pyramid: return "only-pyramid";
    case GraphClass::universally_signable: return "universally-signable";
  }
  return "?";
}

std::optional<GraphClass> parse_class(const std::string& name) {
  for (GraphClass c : {GraphClass::only_prism, GraphClass::only_pyramid, GraphClass::universally_signable}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

KindSet excluded_kinds(GraphClass c) {
  switch (c) {
    case GraphClass::only_prism: return kOnlyPrismExcluded;
    case GraphClass::only_pyramid: return kOnlyPyramidExcluded;
    case GraphClass::universally_signable: return KindSet::all();
  }
  return KindSet::all();
}

ConfigWitness map_witness(const ConfigWitness& w, const NodeList& map) {
  ConfigWitness out = w;
  auto send = [&](NodeList& list) {
    for (Node& v : list) v = map[v];
  };
  send(out.nodes);
  std::sort(out.nodes.begin(), out.nodes.end());
  for (auto& p : out.paths) send(p);
  for (auto& t : out.triangles) send(t);
  send(out.ends);
  send(out.rim);
  if (out.center >= 0) out.center = map[out.center];
  if (out.apex >= 0) out.apex = map[out.apex];
  return out;
}

RecognitionReport recognize_only_prism(const Graph& g, const RecognizeOptions& opt) {
  return by_clique_leaves(GraphClass::only_prism, g, opt, lg_tf_chordless_leaf,
                          "not the line graph of a triangle-free chordless graph");
}

RecognitionReport recognize_universally_signable(const Graph& g, const RecognizeOptions& opt) {
  return by_clique_leaves(GraphClass::universally_signable, g, opt, clique_or_hole_leaf,
                          "neither a clique nor a hole");
}

RecognitionReport recognize_only_pyramid(const Graph& g, const RecognizeOptions& opt) {
  RecognitionReport report;
  report.cls = GraphClass::only_pyramid;
  report.clique_tree = clique_decomposition_tree(g);
  report.two_join_trees.resize(report.clique_tree.nodes.size());
  for (int index : report.clique_tree.leaves()) {
    const Graph& lg = report.clique_tree.nodes[index].graph;
    if (g.order() <= 2) {
      LeafResult leaf;
      leaf.clique_node = index;
      leaf.verdict = classify_basic(lg);
      leaf.ok = true;
      record(report, std::move(leaf));
      continue;
    }
    report.two_join_trees[index] = two_join_decomposition_tree(lg);
    const TwoJoinDecompTree& tree = *report.two_join_trees[index];
    for (int t : tree.leaves()) {
      LeafResult leaf;
      leaf.clique_node = index;
      leaf.two_join_node = t;
      if (tree.nodes[t].kind == TwoJoinNodeKind::non_consistent_2join) {
        leaf.failure = "non-consistent 2-join (condition " +
                       std::to_string(tree.nodes[t].consistency.failed_condition) + ")";
      } else {
        leaf.ok = pyramid_basic_leaf(tree.nodes[t].graph, leaf.verdict);
        if (!leaf.ok) leaf.failure = "not a clique, hole, long pyramid or pyramid-basic graph";
      }
      record(report, std::move(leaf));
    }
  }
  attach_witness(report, g, opt);
  return report;
}

RecognitionReport recognize(GraphClass c, const Graph& g, const RecognizeOptions& opt) {
  switch (c) {
    case GraphClass::only_prism: return recognize_only_prism(g, opt);
    case GraphClass::only_pyramid: return recognize_only_pyramid(g, opt);
    case GraphClass::universally_signable: return recognize_universally_signable(g, opt);
  }
  return recognize_only_prism(g, opt);
}

}  // namespace truemper
