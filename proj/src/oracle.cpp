#include "truemper/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

namespace truemper {

std::string to_string(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::theta: return "theta";
    case ConfigKind::wheel: return "wheel";
    case ConfigKind::prism: return "prism";
    case ConfigKind::pyramid: return "pyramid";
  }
  return "?";
}

std::optional<ConfigKind> parse_kind(const std::string& name) {
  for (ConfigKind k : {ConfigKind::theta, ConfigKind::wheel, ConfigKind::prism, ConfigKind::pyramid}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

namespace {

// Small local graph the structural checks run on. Node i stands for ids[i].
struct Local {
  int k = 0;
  NodeList ids;
  std::vector<NodeList> nb;

  bool adjacent(int u, int v) const {
    return std::find(nb[u].begin(), nb[u].end(), v) != nb[u].end();
  }
  int degree(int v) const { return static_cast<int>(nb[v].size()); }

  void assign(const Graph& g) {
    k = g.order();
    ids.resize(static_cast<std::size_t>(k));
    nb.resize(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v) {
      ids[v] = v;
      nb[v] = g.neighbors(v);
    }
  }

  // `masks` are global adjacency masks; `subset` the chosen nodes.
  void assign(const std::vector<std::uint64_t>& masks, std::uint64_t subset) {
    k = std::popcount(subset);
    ids.clear();
    for (std::uint64_t s = subset; s; s &= s - 1) ids.push_back(std::countr_zero(s));
    std::array<int, 64> local{};
    for (int i = 0; i < k; ++i) local[ids[i]] = i;
    nb.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      nb[i].clear();
      for (std::uint64_t s = masks[ids[i]] & subset; s; s &= s - 1) nb[i].push_back(local[std::countr_zero(s)]);
    }
  }

  NodeList to_global(const NodeList& local_nodes) const {
    NodeList out;
    out.reserve(local_nodes.size());
    for (int v : local_nodes) out.push_back(ids[v]);
    return out;
  }
};

// Follows a chain of degree-2 nodes starting with the step from -> first.
// Returns the full path from `from` to the first node of degree != 2.
NodeList walk(const Local& g, int from, int first) {
  NodeList path{from, first};
  int prev = from;
  int cur = first;
  while (g.degree(cur) == 2 && cur != from) {
    int next = g.nb[cur][0] == prev ? g.nb[cur][1] : g.nb[cur][0];
    prev = cur;
    cur = next;
    path.push_back(cur);
    if (static_cast<int>(path.size()) > g.k + 1) break;
  }
  return path;
}

NodeList nodes_with_degree(const Local& g, int d) {
  NodeList out;
  for (int v = 0; v < g.k; ++v) {
    if (g.degree(v) == d) out.push_back(v);
  }
  return out;
}

bool degrees_are(const Local& g, int deg3_count) {
  int threes = 0;
  for (int v = 0; v < g.k; ++v) {
    int d = g.degree(v);
    if (d == 3) ++threes;
    else if (d != 2) return false;
  }
  return threes == deg3_count;
}

ConfigWitness finish(const Local& g, ConfigWitness w) {
  NodeList all(static_cast<std::size_t>(g.k));
  for (int v = 0; v < g.k; ++v) all[v] = g.ids[v];
  std::sort(all.begin(), all.end());
  w.nodes = std::move(all);
  for (auto& p : w.paths) p = g.to_global(p);
  for (auto& t : w.triangles) t = g.to_global(t);
  w.ends = g.to_global(w.ends);
  w.rim = g.to_global(w.rim);
  if (w.center >= 0) w.center = g.ids[w.center];
  if (w.apex >= 0) w.apex = g.ids[w.apex];
  return w;
}

std::optional<ConfigWitness> check_theta(const Local& g) {
  if (g.k < 5 || !degrees_are(g, 2)) return std::nullopt;
  NodeList ends = nodes_with_degree(g, 3);
  int a = ends[0], b = ends[1];
  if (g.adjacent(a, b)) return std::nullopt;
  ConfigWitness w;
  w.kind = ConfigKind::theta;
  w.ends = {a, b};
  int covered = 2;
  for (int first : g.nb[a]) {
    NodeList p = walk(g, a, first);
    if (p.back() != b) return std::nullopt;
    covered += static_cast<int>(p.size()) - 2;
    w.paths.push_back(std::move(p));
  }
  if (covered != g.k) return std::nullopt;
  return finish(g, std::move(w));
}

std::optional<ConfigWitness> check_prism(const Local& g) {
  if (g.k < 6 || !degrees_are(g, 6)) return std::nullopt;
  NodeList d3 = nodes_with_degree(g, 3);
  std::vector<char> is3(static_cast<std::size_t>(g.k), 0);
  for (int v : d3) is3[v] = 1;
  const int t = d3[0];
  for (std::size_t i = 0; i < g.nb[t].size(); ++i) {
    for (std::size_t j = i + 1; j < g.nb[t].size(); ++j) {
      int u = g.nb[t][i], v = g.nb[t][j];
      if (!is3[u] || !is3[v] || !g.adjacent(u, v)) continue;
      NodeList t1{t, u, v};
      std::sort(t1.begin(), t1.end());
      NodeList t2;
      for (int x : d3) {
        if (std::find(t1.begin(), t1.end(), x) == t1.end()) t2.push_back(x);
      }
      if (!g.adjacent(t2[0], t2[1]) || !g.adjacent(t2[0], t2[2]) || !g.adjacent(t2[1], t2[2])) continue;
      ConfigWitness w;
      w.kind = ConfigKind::prism;
      NodeList partners;
      int covered = 6;
      bool ok = true;
      for (int x : t1) {
        int out = -1;
        for (int y : g.nb[x]) {
          if (std::find(t1.begin(), t1.end(), y) == t1.end()) out = y;
        }
        NodeList p = walk(g, x, out);
        int end = p.back();
        if (std::find(t2.begin(), t2.end(), end) == t2.end() ||
            std::find(partners.begin(), partners.end(), end) != partners.end()) {
          ok = false;
          break;
        }
        partners.push_back(end);
        covered += static_cast<int>(p.size()) - 2;
        w.paths.push_back(std::move(p));
      }
      if (!ok || covered != g.k) continue;
      w.triangles = {t1, partners};
      return finish(g, std::move(w));
    }
  }
  return std::nullopt;
}

std::optional<ConfigWitness> check_pyramid(const Local& g) {
  if (g.k < 6 || !degrees_are(g, 4)) return std::nullopt;
  NodeList d3 = nodes_with_degree(g, 3);
  for (int apex : d3) {
    NodeList tri;
    for (int x : d3) {
      if (x != apex) tri.push_back(x);
    }
    if (!g.adjacent(tri[0], tri[1]) || !g.adjacent(tri[0], tri[2]) || !g.adjacent(tri[1], tri[2])) continue;
    ConfigWitness w;
    w.kind = ConfigKind::pyramid;
    w.apex = apex;
    NodeList partners;
    int covered = 4;
    int short_paths = 0;
    bool ok = true;
    for (int first : g.nb[apex]) {
      NodeList p = walk(g, apex, first);
      int end = p.back();
      if (std::find(tri.begin(), tri.end(), end) == tri.end() ||
          std::find(partners.begin(), partners.end(), end) != partners.end()) {
        ok = false;
        break;
      }
      partners.push_back(end);
      if (p.size() == 2) ++short_paths;
      covered += static_cast<int>(p.size()) - 2;
      w.paths.push_back(std::move(p));
    }
    if (!ok || covered != g.k || short_paths > 1) continue;
    w.triangles = {partners};
    return finish(g, std::move(w));
  }
  return std::nullopt;
}

std::optional<ConfigWitness> check_wheel(const Local& g) {
  if (g.k < 5) return std::nullopt;
  for (int c = 0; c < g.k; ++c) {
    if (g.degree(c) < 3) continue;
    bool ok = true;
    for (int v = 0; v < g.k && ok; ++v) {
      if (v != c && g.degree(v) - (g.adjacent(v, c) ? 1 : 0) != 2) ok = false;
    }
    if (!ok) continue;
    // Walk the rim from the first non-center node; it must close over k-1 nodes.
    int start = c == 0 ? 1 : 0;
    NodeList rim{start};
    int prev = -1, cur = start;
    while (true) {
      int next = -1;
      for (int y : g.nb[cur]) {
        if (y != c && y != prev) {
          next = y;
          break;
        }
      }
      if (next == start || next < 0) break;
      rim.push_back(next);
      prev = cur;
      cur = next;
      if (static_cast<int>(rim.size()) > g.k) break;
    }
    if (static_cast<int>(rim.size()) != g.k - 1) continue;
    ConfigWitness w;
    w.kind = ConfigKind::wheel;
    w.center = c;
    w.rim = std::move(rim);
    return finish(g, std::move(w));
  }
  return std::nullopt;
}

std::optional<ConfigWitness> check(const Local& g, ConfigKind kind) {
  switch (kind) {
    case ConfigKind::theta: return check_theta(g);
    case ConfigKind::wheel: return check_wheel(g);
    case ConfigKind::prism: return check_prism(g);
    case ConfigKind::pyramid: return check_pyramid(g);
  }
  return std::nullopt;
}

// Degree-sequence prefilter on a subset given as global masks.
bool plausible(const std::vector<std::uint64_t>& masks, std::uint64_t subset, int k, ConfigKind kind) {
  int threes = 0, twos = 0, high = 0;
  int edges2 = 0;
  for (std::uint64_t s = subset; s; s &= s - 1) {
    int d = std::popcount(masks[std::countr_zero(s)] & subset);
    edges2 += d;
    if (d == 2) ++twos;
    else if (d == 3) ++threes;
    else if (d > 3) ++high;
    else if (d < 2) return false;
  }
  const int m = edges2 / 2;
  switch (kind) {
    case ConfigKind::theta: return high == 0 && threes == 2 && m == k + 1;
    case ConfigKind::prism: return high == 0 && threes == 6 && m == k + 3;
    case ConfigKind::pyramid: return high == 0 && threes == 4 && m == k + 2;
    case ConfigKind::wheel: return high <= 1 && m >= k + 2 && twos + threes + high == k;
  }
  return false;
}

}  // namespace

std::optional<ConfigWitness> is_theta(const Graph& g) {
  Local l;
  l.assign(g);
  return check_theta(l);
}
std::optional<ConfigWitness> is_wheel(const Graph& g) {
  Local l;
  l.assign(g);
  return check_wheel(l);
}
std::optional<ConfigWitness> is_prism(const Graph& g) {
  Local l;
  l.assign(g);
  return check_prism(l);
}
std::optional<ConfigWitness> is_pyramid(const Graph& g) {
  Local l;
  l.assign(g);
  return check_pyramid(l);
}

bool is_long_pyramid(const Graph& g) {
  auto w = is_pyramid(g);
  if (!w) return false;
  return std::all_of(w->paths.begin(), w->paths.end(), [](const NodeList& p) { return p.size() >= 3; });
}

std::optional<ConfigWitness> contains_config(const Graph& g, KindSet kinds, int cap) {
  const int n = g.order();
  if (n > cap || n > kOracleHardLimit) {
    throw OracleScaleError("oracle scale exceeded: " + std::to_string(n) + " nodes, cap " +
                           std::to_string(std::min(cap, kOracleHardLimit)));
  }
  if (kinds.empty()) return std::nullopt;
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    masks[u] |= std::uint64_t{1} << v;
    masks[v] |= std::uint64_t{1} << u;
  }
  constexpr std::array kOrder{ConfigKind::theta, ConfigKind::wheel, ConfigKind::prism, ConfigKind::pyramid};
  Local local;
  std::vector<int> comb;
  for (int k = 5; k <= n; ++k) {
    comb.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      std::uint64_t subset = 0;
      for (int v : comb) subset |= std::uint64_t{1} << v;
      for (ConfigKind kind : kOrder) {
        if (!kinds.contains(kind) || !plausible(masks, subset, k, kind)) continue;
        local.assign(masks, subset);
        if (auto w = check(local, kind)) return w;
      }
      int i = k - 1;
      while (i >= 0 && comb[i] == n - k + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return std::nullopt;
}

bool validate_witness(const Graph& g, const ConfigWitness& w) {
  for (Node v : w.nodes) {
    if (v < 0 || v >= g.order()) return false;
  }
  auto sub = induced_subgraph(g, w.nodes);
  if (sub.graph.order() != static_cast<int>(w.nodes.size())) return false;
  std::optional<ConfigWitness> again;
  switch (w.kind) {
    case ConfigKind::theta: again = is_theta(sub.graph); break;
    case ConfigKind::wheel: again = is_wheel(sub.graph); break;
    case ConfigKind::prism: again = is_prism(sub.graph); break;
    case ConfigKind::pyramid: again = is_pyramid(sub.graph); break;
  }
  if (!again) return false;
  // The recorded pieces must be actual paths/cycles of g over the witness nodes.
  auto is_path = [&](const NodeList& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (!g.adjacent(p[i], p[i + 1])) return false;
    }
    return true;
  };
  for (const auto& p : w.paths) {
    if (p.size() < 2 || !is_path(p)) return false;
  }
  if (w.kind == ConfigKind::wheel) {
    if (w.rim.size() < 4 || !is_path(w.rim) || !g.adjacent(w.rim.front(), w.rim.back())) return false;
    int hits = 0;
    for (Node v : w.rim) hits += g.adjacent(v, w.center) ? 1 : 0;
    if (hits < 3) return false;
  } else if (w.paths.size() != 3) {
    return false;
  }
  return true;
}

std::optional<StarCutset> has_star_cutset(const Graph& g) {
  const int n = g.order();
  auto disconnects = [&](const std::vector<char>& removed) {
    std::vector<char> allowed(static_cast<std::size_t>(n));
    int left = 0;
    for (int v = 0; v < n; ++v) {
      allowed[v] = removed[v] ? 0 : 1;
      left += allowed[v];
    }
    return left >= 2 && components_within(g, allowed).size() >= 2;
  };
  for (Node x = 0; x < n; ++x) {
    std::vector<char> closed(static_cast<std::size_t>(n), 0);
    closed[x] = 1;
    for (Node y : g.neighbors(x)) closed[y] = 1;
    std::optional<std::vector<char>> removed;
    if (disconnects(closed)) {
      removed = closed;
    } else {
      bool outside = false;
      for (Node v = 0; v < n; ++v) outside = outside || !closed[v];
      for (Node y : g.neighbors(x)) {
        if (removed) break;
        bool reaches_out = false;
        for (Node z : g.neighbors(y)) reaches_out = reaches_out || !closed[z];
        if (outside && !reaches_out) {
          removed = closed;
          (*removed)[y] = 0;
        }
      }
      const NodeList& nb = g.neighbors(x);
      for (std::size_t i = 0; i < nb.size() && !removed; ++i) {
        for (std::size_t j = i + 1; j < nb.size() && !removed; ++j) {
          if (g.adjacent(nb[i], nb[j])) continue;
          auto candidate = closed;
          candidate[nb[i]] = 0;
          candidate[nb[j]] = 0;
          if (disconnects(candidate)) removed = candidate;
        }
      }
    }
    if (!removed) continue;
    // Shrink greedily, keeping the center.
    for (Node y : g.neighbors(x)) {
      if (!(*removed)[y]) continue;
      (*removed)[y] = 0;
      if (!disconnects(*removed)) (*removed)[y] = 1;
    }
    StarCutset out;
    out.center = x;
    for (Node v = 0; v < n; ++v) {
      if ((*removed)[v]) out.cutset.push_back(v);
    }
    return out;
  }
  return std::nullopt;
}

}  // namespace truemper
