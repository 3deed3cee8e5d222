#include "truemper/gen.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace truemper {

namespace {

constexpr int kAttempts = 64;

Edge ordered(Node a, Node b) { return a < b ? Edge{a, b} : Edge{b, a}; }

int uniform(Rng& rng, int lo, int hi) {  // inclusive; hi < lo yields lo
  if (hi <= lo) return lo;
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Appends a path of `length` edges from u to v (fresh internal nodes).
void add_path(std::vector<Edge>& edges, int& next, Node u, Node v, int length) {
  Node prev = u;
  for (int i = 1; i < length; ++i) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
  edges.emplace_back(prev, v);
}

Graph untagged(const Graph& g) { return g.with_tags(std::vector<std::string>(static_cast<std::size_t>(g.order()))); }

Graph random_tree(Rng& rng, int n) {
  std::vector<Edge> edges;
  for (Node v = 1; v < n; ++v) edges.emplace_back(uniform(rng, 0, v - 1), v);
  return Graph::from_edge_list(n, edges);
}

// Splits `extra` additional units randomly over `parts` slots.
std::vector<int> spread(Rng& rng, int parts, int extra) {
  std::vector<int> out(static_cast<std::size_t>(parts), 0);
  for (int i = 0; i < extra; ++i) ++out[uniform(rng, 0, parts - 1)];
  return out;
}

std::optional<NodeList> random_clique(Rng& rng, const Graph& g, int k) {
  if (k == 0) return NodeList{};
  if (g.order() < k) return std::nullopt;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    NodeList clique = {uniform(rng, 0, g.order() - 1)};
    NodeList pool = g.neighbors(clique.front());
    while (static_cast<int>(clique.size()) < k && !pool.empty()) {
      Node v = pool[uniform(rng, 0, static_cast<int>(pool.size()) - 1)];
      clique.push_back(v);
      std::erase_if(pool, [&](Node w) { return w == v || !g.adjacent(v, w); });
    }
    if (static_cast<int>(clique.size()) == k) return clique;
  }
  return std::nullopt;
}

SynthStep base_step(std::string kind, std::vector<int> params, const Graph& g) {
  SynthStep s;
  s.op = SynthStep::Op::base;
  s.kind = std::move(kind);
  s.params = std::move(params);
  s.order = g.order();
  s.edges = g.edges();
  return s;
}

Graph run_step(const std::vector<Graph>& pool, const SynthStep& s) {
  switch (s.op) {
    case SynthStep::Op::base:
      return Graph::from_edge_list(s.order, s.edges);
    case SynthStep::Op::glue:
      return glue_on_clique(pool.at(s.left), s.k1, pool.at(s.right), s.k2);
    case SynthStep::Op::compose: {
      if (s.m1.size() != 3 || s.m2.size() != 3) throw GraphError("compose step needs two marker paths");
      const Graph g1 = tag_marker(pool.at(s.left), {s.m1[0], s.m1[1], s.m1[2]});
      const Graph g2 = tag_marker(pool.at(s.right), {s.m2[0], s.m2[1], s.m2[2]});
      return untagged(compose_2join(g1, g2).graph);
    }
  }
  throw GraphError("unknown synthesis step");
}

// Records a step and returns its pool index.
int push(SynthRecipe& recipe, std::vector<Graph>& pool, SynthStep step) {
  pool.push_back(run_step(pool, step));
  recipe.steps.push_back(std::move(step));
  return static_cast<int>(pool.size()) - 1;
}

SynthStep line_graph_factor(Rng& rng, int target) {
  const int root_order = std::max(2, target + 1);
  const Graph root = random_tf_chordless(rng, root_order);
  return base_step("line-graph", {root_order}, line_graph(root));
}

SynthStep long_pyramid_factor(Rng& rng, int target) {
  // order = 1 + l1 + l2 + l3 with every l_i >= 2
  const int total = std::max(6, target - 1);
  auto extra = spread(rng, 3, total - 6);
  const int l1 = 2 + extra[0], l2 = 2 + extra[1], l3 = 2 + extra[2];
  return base_step("long-pyramid", {l1, l2, l3}, make_pyramid(l1, l2, l3));
}

SynthStep hole_factor(int target) {
  const int k = std::max(4, target);
  return base_step("hole", {k}, make_hole(k));
}

SynthStep clique_factor(Rng& rng, int target) {
  const int k = std::clamp(target, 1, uniform(rng, 2, 5));
  return base_step("clique", {k}, make_clique(k));
}

SynthStep pyramid_basic_factor(Rng& rng, int target) {
  const LabeledSafeTree t = random_safe_tree(rng, std::max(2, target - 2));
  return base_step("pyramid-basic", {t.tree.size()}, untagged(build_pyramid_basic(t)));
}

SynthStep only_pyramid_factor(Rng& rng, int target) {
  const int roll = uniform(rng, 0, 99);
  if (roll < 35) return long_pyramid_factor(rng, target);
  if (roll < 55) return hole_factor(target);
  if (roll < 90) return pyramid_basic_factor(rng, target);
  return clique_factor(rng, target);
}

int clique_size(Rng& rng) {
  const int roll = uniform(rng, 0, 99);
  if (roll < 5) return 0;
  if (roll < 50) return 1;
  if (roll < 85) return 2;
  return 3;
}

// Glues a fresh factor onto pool[current]; false when no attempt fits within
// `limit` nodes.
bool glue_step(Rng& rng, SynthRecipe& recipe, std::vector<Graph>& pool, int& current, int step, int limit,
               SynthStep (*factor)(Rng&, int)) {
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const int k = clique_size(rng);
    SynthStep f = factor(rng, step + k);
    const Graph fg = run_step(pool, f);
    if (fg.order() <= k || pool[current].order() + fg.order() - k > limit) continue;
    auto k1 = random_clique(rng, pool[current], k);
    auto k2 = random_clique(rng, fg, k);
    if (!k1 || !k2) continue;
    const int right = push(recipe, pool, std::move(f));
    SynthStep glue;
    glue.op = SynthStep::Op::glue;
    glue.left = current;
    glue.right = right;
    glue.k1 = *k1;
    glue.k2 = *k2;
    current = push(recipe, pool, std::move(glue));
    return true;
  }
  return false;
}

MarkerPath pick_marker(Rng& rng, const std::vector<MarkerPath>& options) {
  MarkerPath p = options[uniform(rng, 0, static_cast<int>(options.size()) - 1)];
  if (coin(rng, 0.5)) std::swap(p.a, p.b);
  return p;
}

bool compose_step(Rng& rng, SynthRecipe& recipe, std::vector<Graph>& pool, int& current, int step, int limit) {
  const auto here = marker_candidates(pool[current]);
  if (here.empty()) return false;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    SynthStep f = only_pyramid_factor(rng, step + 6);
    const Graph fg = run_step(pool, f);
    const auto there = marker_candidates(fg);
    if (there.empty()) continue;
    const MarkerPath p1 = pick_marker(rng, here);
    const MarkerPath p2 = pick_marker(rng, there);
    if (pool[current].order() + fg.order() - 6 > limit) continue;
    const Composition trial = compose_2join(tag_marker(pool[current], p1), tag_marker(fg, p2));
    if (!is_consistent(trial.graph, trial.split)) continue;
    const int right = push(recipe, pool, std::move(f));
    SynthStep join;
    join.op = SynthStep::Op::compose;
    join.left = current;
    join.right = right;
    join.m1 = {p1.a, p1.c, p1.b};
    join.m2 = {p2.a, p2.c, p2.b};
    current = push(recipe, pool, std::move(join));
    return true;
  }
  return false;
}

Synthesis finish(SynthRecipe recipe, const std::vector<Graph>& pool) { return {pool.back(), std::move(recipe)}; }

Graph make_config(Rng& rng, ConfigKind kind, int budget) {
  switch (kind) {
    case ConfigKind::theta: {  // order = 2 + sum(l_i - 1), l_i >= 2
      auto extra = spread(rng, 3, std::max(0, budget - 5));
      return make_theta(2 + extra[0], 2 + extra[1], 2 + extra[2]);
    }
    case ConfigKind::prism: {  // order = 6 + sum(l_i - 1), l_i >= 1
      auto extra = spread(rng, 3, std::max(0, budget - 6));
      return make_prism(1 + extra[0], 1 + extra[1], 1 + extra[2]);
    }
    case ConfigKind::pyramid: {  // order = 4 + sum(l_i - 1), at most one l_i = 1
      auto extra = spread(rng, 3, std::max(0, budget - 6));
      std::vector<int> l = {1 + extra[0], 2 + extra[1], 2 + extra[2]};
      std::shuffle(l.begin(), l.end(), rng);
      return make_pyramid(l[0], l[1], l[2]);
    }
    case ConfigKind::wheel: {
      const int k = std::max(4, budget - 1);
      NodeList rim(static_cast<std::size_t>(k));
      std::iota(rim.begin(), rim.end(), 0);
      std::shuffle(rim.begin(), rim.end(), rng);
      rim.resize(static_cast<std::size_t>(uniform(rng, 3, k)));
      std::sort(rim.begin(), rim.end());
      return make_wheel(k, rim);
    }
  }
  throw GraphError("unknown configuration kind");
}

int min_order(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::theta: return 5;
    case ConfigKind::wheel: return 5;
    case ConfigKind::prism: return 6;
    case ConfigKind::pyramid: return 6;
  }
  return 6;
}

}  // namespace

std::string to_string(SynthStep::Op op) {
  switch (op) {
    case SynthStep::Op::base: return "base";
    case SynthStep::Op::glue: return "glue";
    case SynthStep::Op::compose: return "compose";
  }
  return "?";
}

std::optional<SynthStep::Op> parse_op(const std::string& name) {
  for (auto op : {SynthStep::Op::base, SynthStep::Op::glue, SynthStep::Op::compose}) {
    if (to_string(op) == name) return op;
  }
  return std::nullopt;
}

Graph replay(const SynthRecipe& recipe) {
  if (recipe.steps.empty()) throw GraphError("empty recipe");
  std::vector<Graph> pool;
  for (const SynthStep& s : recipe.steps) {
    if ((s.left >= static_cast<int>(pool.size())) || (s.right >= static_cast<int>(pool.size()))) {
      throw GraphError("recipe step refers to a later step");
    }
    pool.push_back(run_step(pool, s));
  }
  return pool.back();
}

Graph make_clique(int k) {
  std::vector<Edge> edges;
  for (Node u = 0; u < k; ++u) {
    for (Node v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(k, edges);
}

Graph make_hole(int k) {
  if (k < 4) throw GraphError("a hole has at least four nodes");
  std::vector<Edge> edges;
  for (Node v = 0; v < k; ++v) edges.push_back(ordered(v, (v + 1) % k));
  return Graph::from_edge_list(k, edges);
}

Graph make_theta(int l1, int l2, int l3) {
  if (std::min({l1, l2, l3}) < 2) throw GraphError("theta paths have length at least 2");
  std::vector<Edge> edges;
  int next = 2;
  for (int l : {l1, l2, l3}) add_path(edges, next, 0, 1, l);
  return Graph::from_edge_list(next, edges);
}

Graph make_prism(int l1, int l2, int l3) {
  if (std::min({l1, l2, l3}) < 1) throw GraphError("prism paths have length at least 1");
  std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
  int next = 6;
  const int l[3] = {l1, l2, l3};
  for (int i = 0; i < 3; ++i) add_path(edges, next, i, i + 3, l[i]);
  return Graph::from_edge_list(next, edges);
}

Graph make_pyramid(int l1, int l2, int l3) {
  const int l[3] = {l1, l2, l3};
  if (std::min({l1, l2, l3}) < 1 || (l1 == 1) + (l2 == 1) + (l3 == 1) > 1) {
    throw GraphError("pyramid paths have length at least 1, at most one equal to 1");
  }
  std::vector<Edge> edges = {{1, 2}, {1, 3}, {2, 3}};
  int next = 4;
  for (int i = 0; i < 3; ++i) add_path(edges, next, 0, i + 1, l[i]);
  return Graph::from_edge_list(next, edges);
}

Graph make_wheel(int k, const NodeList& spokes) {
  if (spokes.size() < 3) throw GraphError("a wheel center has at least three rim neighbors");
  std::vector<Edge> edges = make_hole(k).edges();
  for (Node v : spokes) {
    if (v < 0 || v >= k) throw GraphError("spoke outside the rim");
    edges.emplace_back(v, k);
  }
  return Graph::from_edge_list(k + 1, edges);
}

Graph random_tf_chordless(Rng& rng, int n) {
  Graph g = random_tree(rng, n);
  if (n < 4) return g;
  std::vector<Edge> edges = g.edges();
  const int tries = std::max(1, n / 3);
  for (int t = 0; t < tries; ++t) {
    Node u = uniform(rng, 0, n - 1), v = uniform(rng, 0, n - 1);
    if (u == v || g.adjacent(u, v)) continue;
    bool triangle = false;
    for (Node w : g.neighbors(u)) triangle = triangle || g.adjacent(w, v);
    if (triangle) continue;
    std::vector<Edge> grown = edges;
    grown.push_back(ordered(u, v));
    Graph h = Graph::from_edge_list(n, grown);
    if (!is_chordless_graph(h)) continue;
    g = std::move(h);
    edges = std::move(grown);
  }
  return g;
}

Graph random_tf_chordless(std::uint64_t seed, int n) {
  Rng rng(seed);
  return random_tf_chordless(rng, n);
}

LabeledSafeTree random_safe_tree(Rng& rng, int edges) {
  edges = std::max(2, edges);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const int skeleton = uniform(rng, 1, std::max(1, edges / 4));
    Graph skel = random_tree(rng, skeleton);
    std::vector<Edge> tree = skel.edges();
    std::vector<Node> leg_root;
    for (Node v = 0; v < skeleton; ++v) {
      int legs;
      if (skel.degree(v) == 0) legs = 2;
      else if (skel.degree(v) == 1) legs = uniform(rng, 1, 2);
      else legs = uniform(rng, 0, 2);
      for (int i = 0; i < legs; ++i) leg_root.push_back(v);
    }
    const int budget = edges - (skeleton - 1) - 2 * static_cast<int>(leg_root.size());
    if (budget < 0) continue;
    auto extra = spread(rng, static_cast<int>(leg_root.size()), budget);
    int next = skeleton;
    for (std::size_t i = 0; i < leg_root.size(); ++i) {
      const Node end = next++;
      add_path(tree, next, leg_root[i], end, 2 + extra[i]);
    }
    const Graph t = Graph::from_edge_list(next, tree);
    std::map<Edge, PendantLabel> labels;
    for (const Edge& e : pendant_edges(t)) labels[e] = coin(rng, 0.5) ? PendantLabel::x : PendantLabel::y;
    for (const auto& [e, f] : pendant_siblings(t)) {
      labels[f] = labels[e] == PendantLabel::x ? PendantLabel::y : PendantLabel::x;
    }
    if (is_safe_tree(t, labels)) return {t, std::move(labels)};
  }
  std::vector<Edge> path;
  for (Node v = 0; v < edges; ++v) path.emplace_back(v, v + 1);
  const Graph t = Graph::from_edge_list(edges + 1, path);
  return {t, {{Edge{0, 1}, PendantLabel::x}, {Edge{edges - 1, edges}, PendantLabel::y}}};
}

Graph glue_on_clique(const Graph& g1, const NodeList& k1, const Graph& g2, const NodeList& k2) {
  if (k1.size() != k2.size()) throw GraphError("glued cliques differ in size");
  if (!is_clique(g1, k1) || !is_clique(g2, k2)) throw GraphError("gluing needs a clique on both sides");
  if (std::set<Node>(k1.begin(), k1.end()).size() != k1.size() ||
      std::set<Node>(k2.begin(), k2.end()).size() != k2.size()) {
    throw GraphError("glued clique lists repeat a node");
  }
  for (const NodeList* k : {&k1, &k2}) {
    const int n = k == &k1 ? g1.order() : g2.order();
    for (Node v : *k) {
      if (v < 0 || v >= n) throw GraphError("glued clique node out of range");
    }
  }
  NodeList map(static_cast<std::size_t>(g2.order()), -1);
  for (std::size_t i = 0; i < k2.size(); ++i) map[k2[i]] = k1[i];
  int next = g1.order();
  for (Node v = 0; v < g2.order(); ++v) {
    if (map[v] < 0) map[v] = next++;
  }
  std::set<Edge> edges;
  for (const Edge& e : g1.edges()) edges.insert(e);
  for (auto [u, v] : g2.edges()) edges.insert(ordered(map[u], map[v]));
  std::vector<Edge> flat(edges.begin(), edges.end());
  std::vector<std::string> tags = g1.tags();
  tags.resize(static_cast<std::size_t>(next));
  for (Node v = 0; v < g2.order(); ++v) {
    if (map[v] >= g1.order()) tags[map[v]] = g2.tag(v);
  }
  return Graph::from_edge_list(next, flat).with_tags(std::move(tags));
}

std::vector<MarkerPath> marker_candidates(const Graph& g) {
  std::vector<MarkerPath> out;
  for (Node c = 0; c < g.order(); ++c) {
    if (g.degree(c) != 2) continue;
    const Node a = g.neighbors(c)[0], b = g.neighbors(c)[1];
    if (g.adjacent(a, b)) continue;
    const MarkerPath p{a, c, b};
    try {
      if (check_marker_path(g, p)) out.push_back(p);
    } catch (const GraphError&) {
      // (V \ P, P) is not an almost 2-join
    }
  }
  return out;
}

Graph tag_marker(const Graph& g, const MarkerPath& p) {
  std::vector<std::string> tags = g.tags();
  for (auto& t : tags) {
    if (t == kMarkerA || t == kMarkerB || t == kMarkerC) t.clear();
  }
  tags[p.a] = kMarkerA;
  tags[p.c] = kMarkerC;
  tags[p.b] = kMarkerB;
  return g.with_tags(std::move(tags));
}

Synthesis synth_only_prism(std::uint64_t seed, int size) {
  Rng rng(seed);
  SynthRecipe recipe{"only-prism", seed, size, {}};
  std::vector<Graph> pool;
  int step = std::max(3, size / 2);
  int current = push(recipe, pool, line_graph_factor(rng, std::min(step, size)));
  int limit = size;
  while (pool[current].order() < size) {
    const int need = size - pool[current].order();
    if (!glue_step(rng, recipe, pool, current, std::min(step, need), limit, line_graph_factor)) {
      if (step == 1) limit = std::numeric_limits<int>::max();
      step = std::max(1, step / 2);
    }
  }
  return finish(std::move(recipe), pool);
}

Synthesis synth_only_pyramid(std::uint64_t seed, int size) {
  Rng rng(seed);
  SynthRecipe recipe{"only-pyramid", seed, size, {}};
  std::vector<Graph> pool;
  int step = std::max(4, size / 2);
  int current = push(recipe, pool, only_pyramid_factor(rng, std::min(step, size)));
  int limit = size;
  while (pool[current].order() < size) {
    const int need = std::min(step, size - pool[current].order());
    bool done = false;
    if (coin(rng, 0.6)) done = compose_step(rng, recipe, pool, current, need, limit);
    if (!done) done = glue_step(rng, recipe, pool, current, need, limit, only_pyramid_factor);
    if (!done) {
      if (step == 1) limit = std::numeric_limits<int>::max();
      step = std::max(1, step / 2);
    }
  }
  return finish(std::move(recipe), pool);
}

Planted plant_configuration(std::uint64_t seed, ConfigKind kind, int host_size) {
  Rng rng(seed);
  const int lo = min_order(kind);
  const int host = std::max(host_size, lo);
  const int budget = uniform(rng, lo, std::min(host, lo + 8));
  const Graph pattern = make_config(rng, kind, budget);
  NodeList perm(static_cast<std::size_t>(host));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<char> in_pattern(static_cast<std::size_t>(host), 0);
  for (Node v = 0; v < pattern.order(); ++v) in_pattern[perm[v]] = 1;
  std::vector<Edge> edges;
  for (auto [u, v] : pattern.edges()) edges.push_back(ordered(perm[u], perm[v]));
  const double density = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
  for (Node u = 0; u < host; ++u) {
    for (Node v = u + 1; v < host; ++v) {
      if (in_pattern[u] && in_pattern[v]) continue;
      if (coin(rng, density)) edges.emplace_back(u, v);
    }
  }
  Planted out;
  out.graph = Graph::from_edge_list(host, edges);
  out.kind = kind;
  for (Node v = 0; v < pattern.order(); ++v) out.pattern.push_back(perm[v]);
  std::sort(out.pattern.begin(), out.pattern.end());
  return out;
}

ComposedInstance random_composed_instance(std::uint64_t seed, int max_order) {
  Rng rng(seed);
  auto factor = [&](int target) -> Graph {
    switch (uniform(rng, 0, 6)) {
      case 0: return run_step({}, long_pyramid_factor(rng, target));
      case 1: return make_hole(std::max(6, target));
      case 2: return run_step({}, pyramid_basic_factor(rng, target));
      case 3: return make_config(rng, ConfigKind::theta, target);
      case 4: return make_config(rng, ConfigKind::prism, target);
      case 5: return make_config(rng, ConfigKind::wheel, target);
      default: return run_step({}, line_graph_factor(rng, target));
    }
  };
  const int room = std::max(12, max_order + 6);  // n1 + n2 <= max_order + 6
  for (int attempt = 0; attempt < 100 * kAttempts; ++attempt) {
    const int t1 = uniform(rng, 6, room - 6);
    const int t2 = uniform(rng, 6, room - t1);
    const Graph f1 = factor(t1);
    const Graph f2 = factor(t2);
    if (f1.order() + f2.order() - 6 > max_order) continue;
    const auto m1 = marker_candidates(f1);
    const auto m2 = marker_candidates(f2);
    if (m1.empty() || m2.empty()) continue;
    ComposedInstance out;
    out.first = tag_marker(f1, pick_marker(rng, m1));
    out.second = tag_marker(f2, pick_marker(rng, m2));
    out.composition = compose_2join(out.first, out.second);
    if (!validate_split(out.composition.graph, out.composition.split, SplitMode::full)) continue;
    if (!is_consistent(out.composition.graph, out.composition.split)) continue;
    return out;
  }
  throw GraphError("no composable factor pair found");
}

}  // namespace truemper
