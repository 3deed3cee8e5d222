#include "truemper/serialize.hpp"

#include <sstream>

namespace truemper {

namespace {

std::string clique_leaf_label(const Graph& g) {
  if (is_clique_graph(g)) return "clique";
  if (is_hole_graph(g)) return "hole";
  return "atom";
}

}  // namespace

Json to_json(const Graph& g) {
  Json j;
  j["n"] = g.order();
  j["edges"] = Json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  Json tags = Json::object();
  for (Node v = 0; v < g.order(); ++v) {
    if (!g.tag(v).empty()) tags[std::to_string(v)] = g.tag(v);
  }
  if (!tags.empty()) j["tags"] = tags;
  return j;
}

Graph graph_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    Graph g = Graph::from_edge_list(n, edges);
    if (j.contains("tags")) {
      std::vector<std::string> tags(static_cast<std::size_t>(n));
      for (const auto& [key, value] : j.at("tags").items()) {
        const int v = std::stoi(key);
        if (v < 0 || v >= n) throw GraphError("tag on a missing node");
        tags[v] = value.get<std::string>();
      }
      g = g.with_tags(std::move(tags));
    }
    return g;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
  }
}

Json to_json(const ConfigWitness& w) {
  Json s;
  switch (w.kind) {
    case ConfigKind::theta:
      s = {{"ends", w.ends}, {"paths", w.paths}};
      break;
    case ConfigKind::prism:
      s = {{"triangles", w.triangles}, {"paths", w.paths}};
      break;
    case ConfigKind::pyramid:
      s = {{"apex", w.apex}, {"triangle", w.triangles.empty() ? NodeList{} : w.triangles.front()},
           {"paths", w.paths}};
      break;
    case ConfigKind::wheel:
      s = {{"rim", w.rim}, {"center", w.center}};
      break;
  }
  return {{"kind", to_string(w.kind)}, {"nodes", w.nodes}, {"structure", s}};
}

Json to_json(const CliqueSplit& s) { return {{"A", s.a}, {"K", s.k}, {"B", s.b}}; }

Json to_json(const TwoJoinSplit& s) {
  return {{"X1", s.x1}, {"X2", s.x2}, {"A1", s.a1}, {"A2", s.a2}, {"B1", s.b1}, {"B2", s.b2}};
}

Json to_json(const RootGraph& r) { return {{"root", to_json(r.root)}, {"edge_of_node", r.edge_of_node}}; }

Json to_json(const LabeledSafeTree& t) {
  Json labels = Json::array();
  for (const auto& [e, l] : t.labels) labels.push_back({{"edge", e}, {"label", std::string(1, to_char(l))}});
  return {{"tree", to_json(t.tree)}, {"labels", labels}};
}

Json to_json(const BasicVerdict& v) {
  Json j = {{"class", to_string(v.cls)}};
  if (v.root) j["root"] = to_json(*v.root);
  if (v.pyramid_basic) {
    j["safe_tree"] = to_json(v.pyramid_basic->tree);
    j["x"] = v.pyramid_basic->x;
    j["y"] = v.pyramid_basic->y;
    j["edge_nodes"] = v.pyramid_basic->edge_nodes;
  }
  if (v.pyramid) j["pyramid"] = to_json(*v.pyramid);
  return j;
}

Json to_json(const CliqueDecompTree& t) {
  Json nodes = Json::array();
  for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i) {
    const auto& node = t.nodes[i];
    Json j = {{"id", i}, {"graph", to_json(node.graph)}, {"to_root", node.to_root}};
    if (node.split) {
      j["kind"] = "internal";
      j["split"] = to_json(*node.split);
      j["children"] = {node.child_a, node.child_b};
    } else {
      j["kind"] = clique_leaf_label(node.graph);
    }
    nodes.push_back(std::move(j));
  }
  return {{"type", "clique-tree"}, {"nodes", nodes}, {"leaves", t.leaves().size()}};
}

Json to_json(const TwoJoinDecompTree& t) {
  Json nodes = Json::array();
  for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i) {
    const auto& node = t.nodes[i];
    Json j = {{"id", i},
              {"graph", to_json(node.graph)},
              {"to_root", node.to_root},
              {"kind", to_string(node.kind)},
              {"calls", node.calls}};
    if (node.split) j["split"] = to_json(*node.split);
    if (node.kind == TwoJoinNodeKind::internal) j["children"] = {node.child1, node.child2};
    if (node.kind == TwoJoinNodeKind::non_consistent_2join) {
      j["failed_condition"] = node.consistency.failed_condition;
    }
    nodes.push_back(std::move(j));
  }
  return {{"type", "2join-tree"}, {"nodes", nodes}, {"calls", t.calls()}};
}

Json to_json(const RecognitionReport& r) {
  Json trees = Json::array();
  for (int i = 0; i < static_cast<int>(r.two_join_trees.size()); ++i) {
    if (r.two_join_trees[i]) trees.push_back({{"clique_node", i}, {"tree", to_json(*r.two_join_trees[i])}});
  }
  Json leaves = Json::array();
  for (const auto& leaf : r.leaves) {
    Json j = {{"clique_node", leaf.clique_node}, {"ok", leaf.ok}, {"basic", to_json(leaf.verdict)}};
    if (leaf.two_join_node >= 0) j["two_join_node"] = leaf.two_join_node;
    if (!leaf.ok) j["failure"] = leaf.failure;
    leaves.push_back(std::move(j));
  }
  return {{"class", to_string(r.cls)},
          {"verdict", r.verdict},
          {"clique_tree", to_json(r.clique_tree)},
          {"two_join_trees", trees},
          {"leaves", leaves},
          {"offending", r.offending >= 0 ? Json(r.offending) : Json(nullptr)},
          {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)}};
}

Json to_json(const SynthRecipe& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json j = {{"op", to_string(s.op)}};
    switch (s.op) {
      case SynthStep::Op::base:
        j["kind"] = s.kind;
        j["params"] = s.params;
        j["order"] = s.order;
        j["edges"] = s.edges;
        break;
      case SynthStep::Op::glue:
        j["left"] = s.left;
        j["right"] = s.right;
        j["k1"] = s.k1;
        j["k2"] = s.k2;
        break;
      case SynthStep::Op::compose:
        j["left"] = s.left;
        j["right"] = s.right;
        j["m1"] = s.m1;
        j["m2"] = s.m2;
        break;
    }
    steps.push_back(std::move(j));
  }
  return {{"family", r.family}, {"seed", r.seed}, {"size", r.size}, {"steps", steps}};
}

SynthRecipe recipe_from_json(const Json& j) {
  try {
    SynthRecipe r;
    r.family = j.at("family").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.size = j.at("size").get<int>();
    for (const auto& js : j.at("steps")) {
      SynthStep s;
      auto op = parse_op(js.at("op").get<std::string>());
      if (!op) throw std::invalid_argument("unknown recipe op");
      s.op = *op;
      switch (s.op) {
        case SynthStep::Op::base:
          s.kind = js.at("kind").get<std::string>();
          s.params = js.at("params").get<std::vector<int>>();
          s.order = js.at("order").get<int>();
          s.edges = js.at("edges").get<std::vector<Edge>>();
          break;
        case SynthStep::Op::glue:
          s.left = js.at("left").get<int>();
          s.right = js.at("right").get<int>();
          s.k1 = js.at("k1").get<NodeList>();
          s.k2 = js.at("k2").get<NodeList>();
          break;
        case SynthStep::Op::compose:
          s.left = js.at("left").get<int>();
          s.right = js.at("right").get<int>();
          s.m1 = js.at("m1").get<NodeList>();
          s.m2 = js.at("m2").get<NodeList>();
          break;
      }
      r.steps.push_back(std::move(s));
    }
    return r;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed recipe JSON: ") + e.what());
  }
}

std::string to_dot(const CliqueDecompTree& t) {
  std::ostringstream out;
  out << "digraph clique_tree {\n  node [shape=box];\n";
  for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i) {
    const auto& node = t.nodes[i];
    out << "  n" << i << " [label=\"#" << i << " n=" << node.graph.order();
    if (node.split) {
      out << "\\nK={";
      for (std::size_t k = 0; k < node.split->k.size(); ++k) {
        out << (k ? "," : "") << node.to_root[node.split->k[k]];
      }
      out << "}\"];\n";
      out << "  n" << i << " -> n" << node.child_a << ";\n  n" << i << " -> n" << node.child_b << ";\n";
    } else {
      out << "\\n" << clique_leaf_label(node.graph) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const TwoJoinDecompTree& t) {
  std::ostringstream out;
  out << "digraph two_join_tree {\n  node [shape=box];\n";
  for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i) {
    const auto& node = t.nodes[i];
    out << "  n" << i << " [label=\"#" << i << " n=" << node.graph.order() << "\\n" << to_string(node.kind)
        << "\"];\n";
    if (node.kind == TwoJoinNodeKind::internal) {
      out << "  n" << i << " -> n" << node.child1 << ";\n  n" << i << " -> n" << node.child2 << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace truemper
