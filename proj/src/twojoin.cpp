#include "truemper/twojoin.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_set>

namespace truemper {

namespace {

using Words = std::vector<std::uint64_t>;

NodeList sorted(NodeList v) {
  std::sort(v.begin(), v.end());
  return v;
}

NodeList set_minus(const NodeList& a, const NodeList& b) {
  NodeList out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<char> membership(int n, const NodeList& set) {
  std::vector<char> m(static_cast<std::size_t>(n), 0);
  for (Node v : set) m[v] = 1;
  return m;
}

// Nodes of `within` reachable from `from` inside G[within], where only nodes
// with expand[v] set are left again (the start nodes always expand).
std::vector<char> reach(const Graph& g, const std::vector<char>& within, const NodeList& from,
                        const std::vector<char>& expand) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  NodeList stack;
  for (Node v : from) {
    if (within[v] && !seen[v]) {
      seen[v] = 1;
      stack.push_back(v);
    }
  }
  std::vector<char> start = membership(g.order(), from);
  while (!stack.empty()) {
    Node u = stack.back();
    stack.pop_back();
    if (!start[u] && !expand[u]) continue;
    for (Node v : g.neighbors(u)) {
      if (within[v] && !seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

bool is_chordless_path_on(const Graph& g, const NodeList& nodes) {
  auto in = membership(g.order(), nodes);
  int edges2 = 0;
  for (Node v : nodes) {
    int d = 0;
    for (Node w : g.neighbors(v)) d += in[w];
    if (d > 2) return false;
    edges2 += d;
  }
  if (edges2 / 2 != static_cast<int>(nodes.size()) - 1) return false;
  return components_within(g, in).size() == 1;
}

// Every component of G[set] is a clique.
bool is_union_of_cliques(const Graph& g, const NodeList& set) {
  for (const auto& comp : components_within(g, membership(g.order(), set))) {
    if (!is_clique(g, comp)) return false;
  }
  return true;
}

bool special_pair_ok(const Graph& g, const NodeList& s1, const NodeList& s2) {
  if (is_clique(g, s1) && is_clique(g, s2)) return true;
  if (s1.size() == 1 && is_union_of_cliques(g, s2)) return true;
  if (s2.size() == 1 && is_union_of_cliques(g, s1)) return true;
  return false;
}

NodeList from_words(const Words& w, int n) {
  NodeList out;
  for (Node v = 0; v < n; ++v) {
    if ((w[v >> 6] >> (v & 63)) & 1U) out.push_back(v);
  }
  return out;
}

struct WordsHash {
  std::size_t operator()(const Words& w) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : w) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

// Forcing closure and branching search for a 2-join with fixed seeds
// a1, b1 in X1 and a2, b2 in X2 (a1a2, b1b2 crossing edges).
class SeededSearch {
 public:
  SeededSearch(const Graph& g, Node a1, Node b1, Node a2, Node b2)
      : g_(g), n_(g.order()), w_(g.words()), a1_(a1), b1_(b1), a2_(a2), b2_(b2) {}

  std::optional<TwoJoinSplit> run() {
    Words s1(w_, 0), s2(w_, 0);
    set(s1, a1_);
    set(s1, b1_);
    set(s2, a2_);
    set(s2, b2_);
    return search(std::move(s1), std::move(s2));
  }

 private:
  static bool test(const Words& w, Node v) { return (w[v >> 6] >> (v & 63)) & 1U; }
  static void set(Words& w, Node v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }

  void masked(Words& out, Node v, const Words& side) const {
    auto row = g_.row(v);
    for (std::size_t i = 0; i < w_; ++i) out[i] = row[i] & side[i];
  }
  static bool none(const Words& w) {
    return std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return x == 0; });
  }
  static bool intersects(const Words& a, const Words& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] & b[i]) return true;
    }
    return false;
  }

  // Moves into `side` every node whose neighborhood in `side` is not empty,
  // the A-set or the B-set (A = N(ta) & side, B = N(tb) & side), since such a
  // node cannot lie across the cut. Returns false on contradiction.
  bool close_side(Words& side, const Words& other, Node ta, Node tb, bool& changed) {
    Words a(w_), b(w_), t(w_);
    masked(a, ta, side);
    masked(b, tb, side);
    if (intersects(a, b)) return false;
    for (Node v = 0; v < n_; ++v) {
      if (test(side, v)) continue;
      masked(t, v, side);
      if (none(t) || t == a || t == b) continue;
      if (test(other, v)) return false;
      set(side, v);
      changed = true;
      masked(a, ta, side);
      masked(b, tb, side);
      if (intersects(a, b)) return false;
    }
    return true;
  }

  bool propagate(Words& s1, Words& s2) {
    bool changed = true;
    while (changed) {
      changed = false;
      if (!close_side(s1, s2, a2_, b2_, changed)) return false;
      if (!close_side(s2, s1, a1_, b1_, changed)) return false;
    }
    return true;
  }

  std::optional<TwoJoinSplit> candidate(const Words& x1) {
    if (!tried_.insert(x1).second) return std::nullopt;
    NodeList nodes = from_words(x1, n_);
    if (nodes.size() < 3 || static_cast<int>(nodes.size()) > n_ - 3) return std::nullopt;
    auto split = split_from_partition(g_, nodes);
    if (split && validate_split(g_, *split, SplitMode::full)) return split;
    return std::nullopt;
  }

  std::optional<TwoJoinSplit> search(Words s1, Words s2) {
    if (!propagate(s1, s2)) return std::nullopt;
    Words key = s1;
    key.insert(key.end(), s2.begin(), s2.end());
    if (!visited_.insert(std::move(key)).second) return std::nullopt;
    if (auto found = candidate(s1)) return found;
    Words rest(w_);
    for (std::size_t i = 0; i < w_; ++i) rest[i] = ~s2[i];
    if (n_ % 64) rest[w_ - 1] &= (std::uint64_t{1} << (n_ % 64)) - 1;
    if (auto found = candidate(rest)) return found;
    Node free = -1;
    for (Node v = 0; v < n_ && free < 0; ++v) {
      if (!test(s1, v) && !test(s2, v)) free = v;
    }
    if (free < 0) return std::nullopt;
    Words left = s1;
    set(left, free);
    if (auto found = search(std::move(left), s2)) return found;
    set(s2, free);
    return search(std::move(s1), std::move(s2));
  }

  const Graph& g_;
  int n_;
  std::size_t w_;
  Node a1_, b1_, a2_, b2_;
  std::unordered_set<Words, WordsHash> visited_;
  std::unordered_set<Words, WordsHash> tried_;
};

std::string side_name(const char* clause, int side) {
  return std::string(clause) + " (side " + std::to_string(side) + ")";
}

}  // namespace

NodeList TwoJoinSplit::c1() const { return set_minus(set_minus(x1, a1), b1); }
NodeList TwoJoinSplit::c2() const { return set_minus(set_minus(x2, a2), b2); }

SplitCheck validate_split(const Graph& g, const TwoJoinSplit& s, SplitMode mode) {
  const int n = g.order();
  auto fail = [](std::string why) { return SplitCheck{false, std::move(why)}; };
  std::vector<int> part(static_cast<std::size_t>(n), 0);
  for (auto [set, label] : {std::pair{&s.x1, 1}, std::pair{&s.x2, 2}}) {
    for (Node v : *set) {
      if (v < 0 || v >= n || part[v] != 0) return fail("X1, X2 must partition the nodes");
      part[v] = label;
    }
  }
  if (std::count(part.begin(), part.end(), 0) != 0) return fail("X1, X2 must partition the nodes");
  const NodeList x1 = sorted(s.x1), x2 = sorted(s.x2);
  const NodeList a1 = sorted(s.a1), b1 = sorted(s.b1), a2 = sorted(s.a2), b2 = sorted(s.b2);
  auto inside = [&](const NodeList& special, int label) {
    return std::all_of(special.begin(), special.end(),
                       [&](Node v) { return v >= 0 && v < n && part[v] == label; });
  };
  for (int side : {1, 2}) {
    const NodeList& a = side == 1 ? a1 : a2;
    const NodeList& b = side == 1 ? b1 : b2;
    if (a.empty() || b.empty()) return fail(side_name("special sets must be nonempty", side));
    if (!inside(a, side) || !inside(b, side)) return fail(side_name("special sets must lie in X_i", side));
    if (set_minus(a, b).size() != a.size()) {
      return fail(side_name("A_i and B_i must be disjoint", side));
    }
  }
  for (Node u : a1) {
    for (Node v : a2) {
      if (!g.adjacent(u, v)) return fail("A1 must be complete to A2");
    }
  }
  for (Node u : b1) {
    for (Node v : b2) {
      if (!g.adjacent(u, v)) return fail("B1 must be complete to B2");
    }
  }
  auto in_a1 = membership(n, a1), in_b1 = membership(n, b1);
  auto in_a2 = membership(n, a2), in_b2 = membership(n, b2);
  for (Node u : x1) {
    for (Node v : g.neighbors(u)) {
      if (part[v] != 2) continue;
      if (!((in_a1[u] && in_a2[v]) || (in_b1[u] && in_b2[v]))) {
        return fail("no X1-X2 edges other than A1-A2 and B1-B2");
      }
    }
  }
  if (x1.size() < 3) return fail(side_name("|X_i| >= 3", 1));
  if (x2.size() < 3) return fail(side_name("|X_i| >= 3", 2));
  if (mode == SplitMode::almost) return {};
  for (int side : {1, 2}) {
    const NodeList& x = side == 1 ? x1 : x2;
    const NodeList& a = side == 1 ? a1 : a2;
    const NodeList& b = side == 1 ? b1 : b2;
    auto within = membership(n, x);
    auto seen = reach(g, within, a, within);
    if (!std::any_of(b.begin(), b.end(), [&](Node v) { return seen[v] != 0; })) {
      return fail(side_name("X_i must contain an A_i-B_i path", side));
    }
    if (a.size() == 1 && b.size() == 1 && is_chordless_path_on(g, x)) {
      return fail(side_name("G[X_i] must not be a chordless path when |A_i| = |B_i| = 1", side));
    }
  }
  return {};
}

std::optional<TwoJoinSplit> split_from_partition(const Graph& g, const NodeList& x1_in) {
  const int n = g.order();
  NodeList x1 = sorted(x1_in);
  auto in1 = membership(n, x1);
  NodeList x2;
  for (Node v = 0; v < n; ++v) {
    if (!in1[v]) x2.push_back(v);
  }
  if (x1.empty() || x2.empty()) return std::nullopt;
  std::vector<NodeList> bundles;  // distinct nonempty X2-neighborhoods
  std::vector<int> bundle_of(static_cast<std::size_t>(n), -1);
  for (Node u : x1) {
    NodeList across;
    for (Node v : g.neighbors(u)) {
      if (!in1[v]) across.push_back(v);
    }
    if (across.empty()) continue;
    auto it = std::find(bundles.begin(), bundles.end(), across);
    if (it == bundles.end()) {
      if (bundles.size() == 2) return std::nullopt;
      bundles.push_back(std::move(across));
      bundle_of[u] = static_cast<int>(bundles.size()) - 1;
    } else {
      bundle_of[u] = static_cast<int>(it - bundles.begin());
    }
  }
  if (bundles.size() != 2) return std::nullopt;
  NodeList overlap;
  std::set_intersection(bundles[0].begin(), bundles[0].end(), bundles[1].begin(), bundles[1].end(),
                        std::back_inserter(overlap));
  if (!overlap.empty()) return std::nullopt;
  TwoJoinSplit s;
  s.x1 = x1;
  s.x2 = x2;
  NodeList first, second;
  for (Node u : x1) {
    if (bundle_of[u] == 0) first.push_back(u);
    if (bundle_of[u] == 1) second.push_back(u);
  }
  // Orient so that A holds the smallest special node.
  Node min_first = std::min(first.front(), bundles[0].front());
  Node min_second = std::min(second.front(), bundles[1].front());
  if (min_first < min_second) {
    s.a1 = first, s.a2 = bundles[0], s.b1 = second, s.b2 = bundles[1];
  } else {
    s.a1 = second, s.a2 = bundles[1], s.b1 = first, s.b2 = bundles[0];
  }
  return s;
}

ConsistencyCheck is_consistent(const Graph& g, const TwoJoinSplit& s) {
  if (auto check = validate_split(g, s, SplitMode::almost); !check) {
    throw GraphError("not an almost 2-join: " + check.violation);
  }
  const int n = g.order();
  struct Side {
    NodeList x, a, b;
  };
  const Side sides[2] = {{sorted(s.x1), sorted(s.a1), sorted(s.b1)}, {sorted(s.x2), sorted(s.a2), sorted(s.b2)}};
  // 1
  for (int i = 0; i < 2; ++i) {
    auto in_a = membership(n, sides[i].a), in_b = membership(n, sides[i].b);
    for (const auto& comp : components_within(g, membership(n, sides[i].x))) {
      bool meets_a = std::any_of(comp.begin(), comp.end(), [&](Node v) { return in_a[v] != 0; });
      bool meets_b = std::any_of(comp.begin(), comp.end(), [&](Node v) { return in_b[v] != 0; });
      if (!meets_a || !meets_b) return {1, i + 1};
    }
  }
  // 2, 3
  auto has_non_neighbor_in = [&](Node u, const NodeList& set) {
    return std::any_of(set.begin(), set.end(), [&](Node v) { return !g.adjacent(u, v); });
  };
  for (int cond : {2, 3}) {
    for (int i = 0; i < 2; ++i) {
      const NodeList& from = cond == 2 ? sides[i].a : sides[i].b;
      const NodeList& to = cond == 2 ? sides[i].b : sides[i].a;
      for (Node u : from) {
        if (!has_non_neighbor_in(u, to)) return {cond, i + 1};
      }
    }
  }
  // 4, 5
  if (!special_pair_ok(g, sides[0].a, sides[1].a)) return {4, 0};
  if (!special_pair_ok(g, sides[0].b, sides[1].b)) return {5, 0};
  // 6
  for (int i = 0; i < 2; ++i) {
    if (components_within(g, membership(n, sides[i].x)).size() != 1) return {6, i + 1};
  }
  // 7, 8
  for (int cond : {7, 8}) {
    for (int i = 0; i < 2; ++i) {
      const NodeList& target = cond == 7 ? sides[i].b : sides[i].a;
      const NodeList& blocked = cond == 7 ? sides[i].a : sides[i].b;
      auto within = membership(n, sides[i].x);
      auto expand = within;
      for (Node v : blocked) expand[v] = 0;
      auto seen = reach(g, within, target, expand);
      for (Node v : sides[i].x) {
        if (!seen[v]) return {cond, i + 1};
      }
    }
  }
  return {};
}

std::optional<TwoJoinSplit> find_2join(const Graph& g) {
  const int n = g.order();
  if (n < 6) return std::nullopt;
  for (Node a1 = 0; a1 < n; ++a1) {
    for (Node a2 : g.neighbors(a1)) {
      if (a2 < a1) continue;
      for (Node b1 = a1 + 1; b1 < n; ++b1) {
        if (b1 == a2 || g.adjacent(b1, a2)) continue;
        for (Node b2 : g.neighbors(b1)) {
          if (b2 < a1 || b2 == a1 || b2 == a2 || g.adjacent(b2, a1)) continue;
          SeededSearch search(g, a1, b1, a2, b2);
          if (auto found = search.run()) return found;
        }
      }
    }
  }
  return std::nullopt;
}

std::pair<TwoJoinBlock, TwoJoinBlock> blocks_of_2join(const Graph& g, const TwoJoinSplit& s) {
  if (auto check = validate_split(g, s, SplitMode::full); !check) {
    throw GraphError("not a 2-join: " + check.violation);
  }
  auto make = [&](const NodeList& x_in, const NodeList& a_in, const NodeList& b_in) {
    NodeList x = sorted(x_in);
    const int k = static_cast<int>(x.size());
    std::vector<Node> local(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < k; ++i) local[x[i]] = i;
    std::vector<Edge> edges;
    for (Node u : x) {
      for (Node v : g.neighbors(u)) {
        if (u < v && local[v] >= 0) edges.emplace_back(local[u], local[v]);
      }
    }
    const Node ma = k, mc = k + 1, mb = k + 2;
    edges.emplace_back(ma, mc);
    edges.emplace_back(mc, mb);
    for (Node u : a_in) edges.emplace_back(local[u], ma);
    for (Node u : b_in) edges.emplace_back(local[u], mb);
    std::vector<std::string> tags;
    for (Node u : x) {
      const std::string& t = g.tag(u);
      tags.push_back(t == kMarkerA || t == kMarkerB || t == kMarkerC ? std::string() : t);
    }
    tags.push_back(kMarkerA);
    tags.push_back(kMarkerC);
    tags.push_back(kMarkerB);
    TwoJoinBlock block;
    block.graph = Graph::from_edge_list(k + 3, edges).with_tags(std::move(tags));
    block.to_parent = x;
    block.to_parent.insert(block.to_parent.end(), {-1, -1, -1});
    return block;
  };
  return {make(s.x1, s.a1, s.b1), make(s.x2, s.a2, s.b2)};
}

MarkerPath marker_path(const Graph& g) {
  MarkerPath p;
  for (Node v = 0; v < g.order(); ++v) {
    const std::string& t = g.tag(v);
    Node* slot = t == kMarkerA ? &p.a : t == kMarkerC ? &p.c : t == kMarkerB ? &p.b : nullptr;
    if (!slot) continue;
    if (*slot >= 0) throw GraphError("duplicate marker tag '" + t + "'");
    *slot = v;
  }
  if (p.a < 0 || p.b < 0 || p.c < 0) throw GraphError("marker path tags missing");
  if (!g.adjacent(p.a, p.c) || !g.adjacent(p.c, p.b) || g.adjacent(p.a, p.b) || g.degree(p.c) != 2) {
    throw GraphError("tagged marker nodes do not form an induced path a-c-b with deg(c) = 2");
  }
  return p;
}

namespace {

TwoJoinSplit marker_split(const Graph& g, const MarkerPath& p) {
  TwoJoinSplit s;
  for (Node v = 0; v < g.order(); ++v) {
    if (v != p.a && v != p.b && v != p.c) s.x1.push_back(v);
  }
  s.x2 = sorted({p.a, p.c, p.b});
  s.a2 = {p.a};
  s.b2 = {p.b};
  for (Node v : g.neighbors(p.a)) {
    if (v != p.c) s.a1.push_back(v);
  }
  for (Node v : g.neighbors(p.b)) {
    if (v != p.c) s.b1.push_back(v);
  }
  return s;
}

}  // namespace

ConsistencyCheck check_marker_path(const Graph& g, const MarkerPath& p) {
  if (!g.adjacent(p.a, p.c) || !g.adjacent(p.c, p.b) || g.adjacent(p.a, p.b) || g.degree(p.c) != 2) {
    throw GraphError("marker nodes do not form an induced path a-c-b with deg(c) = 2");
  }
  return is_consistent(g, marker_split(g, p));
}

Composition compose_2join(const Graph& first, const Graph& second) {
  const MarkerPath p1 = marker_path(first);
  const MarkerPath p2 = marker_path(second);
  for (auto [g, p, name] : {std::tuple{&first, &p1, "first"}, std::tuple{&second, &p2, "second"}}) {
    ConsistencyCheck check;
    try {
      check = check_marker_path(*g, *p);
    } catch (const GraphError& e) {
      throw CompositionError(std::string(name) + " factor: " + e.what(), -1);
    }
    if (!check) {
      throw CompositionError(std::string(name) + " factor: marker path fails consistency condition " +
                                 std::to_string(check.failed_condition),
                             check.failed_condition);
    }
  }
  Composition out;
  int next = 0;
  auto number = [&](const Graph& g, const MarkerPath& p, NodeList& map) {
    map.assign(static_cast<std::size_t>(g.order()), -1);
    for (Node v = 0; v < g.order(); ++v) {
      if (v != p.a && v != p.b && v != p.c) map[v] = next++;
    }
  };
  number(first, p1, out.from_first);
  number(second, p2, out.from_second);
  std::vector<Edge> edges;
  std::vector<std::string> tags(static_cast<std::size_t>(next));
  auto inherit = [&](const Graph& g, const NodeList& map) {
    for (auto [u, v] : g.edges()) {
      if (map[u] >= 0 && map[v] >= 0) edges.emplace_back(map[u], map[v]);
    }
    for (Node v = 0; v < g.order(); ++v) {
      if (map[v] >= 0) tags[map[v]] = g.tag(v);
    }
  };
  inherit(first, out.from_first);
  inherit(second, out.from_second);
  auto attach = [](const Graph& g, Node end, Node mid, const NodeList& map) {
    NodeList out;
    for (Node v : g.neighbors(end)) {
      if (v != mid) out.push_back(map[v]);
    }
    return sorted(out);
  };
  out.split.a1 = attach(first, p1.a, p1.c, out.from_first);
  out.split.b1 = attach(first, p1.b, p1.c, out.from_first);
  out.split.a2 = attach(second, p2.a, p2.c, out.from_second);
  out.split.b2 = attach(second, p2.b, p2.c, out.from_second);
  for (Node u : out.split.a1) {
    for (Node v : out.split.a2) edges.emplace_back(u, v);
  }
  for (Node u : out.split.b1) {
    for (Node v : out.split.b2) edges.emplace_back(u, v);
  }
  for (Node v : out.from_first) {
    if (v >= 0) out.split.x1.push_back(v);
  }
  for (Node v : out.from_second) {
    if (v >= 0) out.split.x2.push_back(v);
  }
  out.graph = Graph::from_edge_list(next, edges).with_tags(std::move(tags));
  return out;
}

std::string to_string(TwoJoinNodeKind kind) {
  switch (kind) {
    case TwoJoinNodeKind::internal: return "internal";
    case TwoJoinNodeKind::no_2join: return "no-2join";
    case TwoJoinNodeKind::non_consistent_2join: return "non-consistent-2join";
  }
  return "?";
}

std::vector<int> TwoJoinDecompTree::leaves() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    if (nodes[i].is_leaf()) out.push_back(i);
  }
  return out;
}

namespace {

int build_2join(TwoJoinDecompTree& tree, int index) {
  auto split = find_2join(tree.nodes[index].graph);
  if (!split) {
    tree.nodes[index].kind = TwoJoinNodeKind::no_2join;
    return tree.nodes[index].calls = 1;
  }
  auto consistency = is_consistent(tree.nodes[index].graph, *split);
  tree.nodes[index].split = split;
  if (!consistency) {
    tree.nodes[index].kind = TwoJoinNodeKind::non_consistent_2join;
    tree.nodes[index].consistency = consistency;
    return tree.nodes[index].calls = 1;
  }
  tree.nodes[index].kind = TwoJoinNodeKind::internal;
  auto [g1, g2] = blocks_of_2join(tree.nodes[index].graph, *split);
  const NodeList parent_map = tree.nodes[index].to_root;
  int children[2];
  int k = 0;
  for (TwoJoinBlock* block : {&g1, &g2}) {
    TwoJoinTreeNode child;
    child.graph = std::move(block->graph);
    for (Node v : block->to_parent) child.to_root.push_back(v < 0 ? -1 : parent_map[v]);
    tree.nodes.push_back(std::move(child));
    children[k++] = static_cast<int>(tree.nodes.size()) - 1;
  }
  tree.nodes[index].child1 = children[0];
  tree.nodes[index].child2 = children[1];
  int calls = 1 + build_2join(tree, children[0]);
  calls += build_2join(tree, children[1]);
  return tree.nodes[index].calls = calls;
}

}  // namespace

TwoJoinDecompTree two_join_decomposition_tree(const Graph& g) {
  TwoJoinDecompTree tree;
  TwoJoinTreeNode root;
  root.graph = g;
  for (Node v = 0; v < g.order(); ++v) root.to_root.push_back(v);
  tree.nodes.push_back(std::move(root));
  build_2join(tree, 0);
  return tree;
}

}  // namespace truemper
