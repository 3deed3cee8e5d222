#include "support.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace truemper::testing {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> nb(static_cast<std::size_t>(g.order()), 0);
  for (auto [u, v] : g.edges()) {
    nb[u] |= bit(v);
    nb[v] |= bit(u);
  }
  return nb;
}

// Nodes of `within` reachable from `from` inside G[within].
Mask reach(const std::vector<Mask>& nb, Mask within, Mask from) {
  Mask seen = from & within, frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= nb[std::countr_zero(f)];
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool connected_on(const std::vector<Mask>& nb, Mask set) {
  if (!set) return true;
  return reach(nb, set, set & (~set + 1)) == set;
}

bool chordless_path_on(const std::vector<Mask>& nb, Mask set) {
  int degree_sum = 0;
  for (Mask s = set; s; s &= s - 1) {
    int d = std::popcount(nb[std::countr_zero(s)] & set);
    if (d > 2) return false;
    degree_sum += d;
  }
  return degree_sum / 2 == std::popcount(set) - 1 && connected_on(nb, set);
}

Graph build(int n, const std::vector<Edge>& edges) { return Graph::from_edge_list(n, edges); }

// Path of `length` edges from u to v with fresh internal nodes.
void path(std::vector<Edge>& e, int& next, int u, int v, int length) {
  int prev = u;
  for (int i = 1; i < length; ++i) {
    e.emplace_back(std::min(prev, next), std::max(prev, next));
    prev = next++;
  }
  e.emplace_back(std::min(prev, v), std::max(prev, v));
}

std::vector<std::pair<ConfigKind, Graph>> make_templates(int max_order) {
  std::vector<std::pair<ConfigKind, Graph>> out;
  for (int l1 = 1; l1 <= max_order; ++l1) {
    for (int l2 = l1; l2 <= max_order; ++l2) {
      for (int l3 = l2; l3 <= max_order; ++l3) {
        const int inner = (l1 - 1) + (l2 - 1) + (l3 - 1);
        if (l1 >= 2 && 2 + inner <= max_order) {
          std::vector<Edge> e;
          int next = 2;
          for (int l : {l1, l2, l3}) path(e, next, 0, 1, l);
          out.emplace_back(ConfigKind::theta, build(next, e));
        }
        if (6 + inner <= max_order) {
          std::vector<Edge> e = {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
          int next = 6;
          const int l[3] = {l1, l2, l3};
          for (int i = 0; i < 3; ++i) path(e, next, i, i + 3, l[i]);
          out.emplace_back(ConfigKind::prism, build(next, e));
        }
        if (l2 >= 2 && 4 + inner <= max_order) {
          std::vector<Edge> e = {{1, 2}, {1, 3}, {2, 3}};
          int next = 4;
          const int l[3] = {l1, l2, l3};
          for (int i = 0; i < 3; ++i) path(e, next, 0, i + 1, l[i]);
          out.emplace_back(ConfigKind::pyramid, build(next, e));
        }
      }
    }
  }
  for (int k = 4; k + 1 <= max_order; ++k) {
    for (Mask spokes = 0; spokes < bit(k); ++spokes) {
      if (std::popcount(spokes) < 3) continue;
      std::vector<Edge> e;
      for (int v = 0; v < k; ++v) e.emplace_back(std::min(v, (v + 1) % k), std::max(v, (v + 1) % k));
      for (int v = 0; v < k; ++v) {
        if (spokes & bit(v)) e.emplace_back(v, k);
      }
      out.emplace_back(ConfigKind::wheel, build(k + 1, e));
    }
  }
  return out;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (Node v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

bool extend(const Graph& a, const Graph& b, const NodeList& order, std::size_t i, NodeList& map,
            std::vector<char>& used) {
  if (i == order.size()) return true;
  const Node u = order[i];
  for (Node w = 0; w < b.order(); ++w) {
    if (used[w] || a.degree(u) != b.degree(w)) continue;
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j) {
      ok = a.adjacent(u, order[j]) == b.adjacent(w, map[order[j]]);
    }
    if (!ok) continue;
    map[u] = w;
    used[w] = 1;
    if (extend(a, b, order, i + 1, map, used)) return true;
    used[w] = 0;
  }
  return false;
}

}  // namespace

void for_each_graph(int n, const std::function<void(const Graph&)>& f) {
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  }
  std::vector<Edge> chosen;
  for (Mask m = 0; m < bit(static_cast<int>(all.size())); ++m) {
    chosen.clear();
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (m & bit(static_cast<int>(k))) chosen.push_back(all[k]);
    }
    f(Graph::from_edge_list(n, chosen));
  }
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, e);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  // BFS-like order keeps the constraint set dense early on.
  NodeList order;
  std::vector<char> taken(static_cast<std::size_t>(a.order()), 0);
  while (static_cast<int>(order.size()) < a.order()) {
    Node best = -1;
    int best_links = -1;
    for (Node v = 0; v < a.order(); ++v) {
      if (taken[v]) continue;
      int links = 0;
      for (Node w : a.neighbors(v)) links += taken[w];
      if (links > best_links || (links == best_links && a.degree(v) > a.degree(best))) {
        best = v;
        best_links = links;
      }
    }
    taken[best] = 1;
    order.push_back(best);
  }
  NodeList map(static_cast<std::size_t>(a.order()), -1);
  std::vector<char> used(static_cast<std::size_t>(b.order()), 0);
  return extend(a, b, order, 0, map, used);
}

const std::vector<std::pair<ConfigKind, Graph>>& configuration_templates(int max_order) {
  static std::map<int, std::vector<std::pair<ConfigKind, Graph>>> cache;
  auto it = cache.find(max_order);
  if (it == cache.end()) it = cache.emplace(max_order, make_templates(max_order)).first;
  return it->second;
}

bool contains_config_by_templates(const Graph& g, KindSet kinds) {
  const int n = g.order();
  const auto& templates = configuration_templates(8);
  for (Mask s = 0; s < bit(n); ++s) {
    const int k = std::popcount(s);
    if (k < 5) continue;
    NodeList nodes = mask_nodes(s);
    const InducedSubgraph sub = induced_subgraph(g, nodes);
    for (const auto& [kind, t] : templates) {
      if (kinds.contains(kind) && t.order() == k && t.size() == sub.graph.size() && isomorphic(sub.graph, t)) {
        return true;
      }
    }
  }
  return false;
}

std::vector<BruteSplit> brute_almost_2joins(const Graph& g) {
  const int n = g.order();
  std::vector<BruteSplit> out;
  if (n < 6) return out;
  const auto nb = neighbor_masks(g);
  const Mask all = bit(n) - 1;
  for (Mask x1 = 1; x1 < bit(n); x1 += 2) {
    const Mask x2 = all & ~x1;
    if (std::popcount(x1) < 3 || std::popcount(x2) < 3) continue;
    Mask na = 0, nb2 = 0;
    bool ok = true;
    for (Mask s = x1; s && ok; s &= s - 1) {
      const Mask t = nb[std::countr_zero(s)] & x2;
      if (!t) continue;
      if (!na || t == na) na = t;
      else if (!nb2 || t == nb2) nb2 = t;
      else ok = false;
    }
    if (!ok || !na || !nb2 || (na & nb2)) continue;
    BruteSplit split;
    split.x1 = x1;
    split.a2 = na;
    split.b2 = nb2;
    for (Mask s = x1; s; s &= s - 1) {
      const int u = std::countr_zero(s);
      if ((nb[u] & x2) == na) split.a1 |= bit(u);
      if ((nb[u] & x2) == nb2) split.b1 |= bit(u);
    }
    bool full = true;
    for (auto [x, a, b] : {std::tuple{x1, split.a1, split.b1}, std::tuple{x2, split.a2, split.b2}}) {
      if (!(reach(nb, x, a) & b)) full = false;
      if (std::popcount(a) == 1 && std::popcount(b) == 1 && chordless_path_on(nb, x)) full = false;
    }
    split.full = full;
    out.push_back(split);
  }
  return out;
}

bool brute_has_2join(const Graph& g) {
  for (const auto& s : brute_almost_2joins(g)) {
    if (s.full) return true;
  }
  return false;
}

bool brute_has_clique_cutset(const Graph& g) {
  const int n = g.order();
  if (n < 2) return false;
  const auto nb = neighbor_masks(g);
  const Mask all = bit(n) - 1;
  bool found = false;
  // Grow cliques in increasing node order; test each one (including {}).
  std::function<void(Mask, Mask)> grow = [&](Mask clique, Mask candidates) {
    if (found) return;
    const Mask rest = all & ~clique;
    if (rest && !connected_on(nb, rest)) {
      found = true;
      return;
    }
    for (Mask c = candidates; c; c &= c - 1) {
      const int v = std::countr_zero(c);
      grow(clique | bit(v), candidates & nb[v] & ~(bit(v + 1) - 1));
    }
  };
  grow(0, all);
  return found;
}

NodeList mask_nodes(std::uint64_t mask) {
  NodeList out;
  for (Mask s = mask; s; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

std::vector<NodeList> sample_subsets(std::mt19937_64& rng, const Graph& g, int count, int lo, int hi) {
  std::vector<NodeList> out;
  const int n = g.order();
  hi = std::min(hi, n);
  lo = std::min(lo, hi);
  for (int i = 0; i < count; ++i) {
    const int k = std::uniform_int_distribution<int>(lo, hi)(rng);
    NodeList nodes(static_cast<std::size_t>(n));
    std::iota(nodes.begin(), nodes.end(), 0);
    std::shuffle(nodes.begin(), nodes.end(), rng);
    NodeList pick;
    if (i % 2 == 0) {
      pick.assign(nodes.begin(), nodes.begin() + k);
    } else {
      std::vector<char> in(static_cast<std::size_t>(n), 0);
      NodeList frontier = {nodes.front()};
      in[nodes.front()] = 1;
      while (static_cast<int>(pick.size()) < k) {
        if (frontier.empty()) {
          for (Node v : nodes) {
            if (!in[v]) {
              in[v] = 1;
              frontier.push_back(v);
              break;
            }
          }
        }
        const std::size_t at = std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng);
        const Node v = frontier[at];
        frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(at));
        pick.push_back(v);
        for (Node w : g.neighbors(v)) {
          if (!in[w]) {
            in[w] = 1;
            frontier.push_back(w);
          }
        }
      }
    }
    std::sort(pick.begin(), pick.end());
    out.push_back(std::move(pick));
  }
  return out;
}

}  // namespace truemper::testing
