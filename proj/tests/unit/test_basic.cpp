#include <bit>
#include <functional>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "truemper/basic.hpp"
#include "truemper/gen.hpp"
#include "truemper/oracle.hpp"
#include "truemper/recognize.hpp"

using namespace truemper;
namespace tt = truemper::testing;

namespace {

Graph edges(int n, std::vector<Edge> e) { return Graph::from_edge_list(n, e); }

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, e);
}

const Graph kClaw = edges(4, {{0, 1}, {0, 2}, {0, 3}});
const Graph kDiamond = edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});

LabeledSafeTree h_tree() {
  LabeledSafeTree t;
  t.tree = edges(10, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {1, 6}, {6, 7}, {1, 8}, {8, 9}});
  t.labels = {{{2, 3}, PendantLabel::x}, {{4, 5}, PendantLabel::y}, {{6, 7}, PendantLabel::x},
              {{8, 9}, PendantLabel::y}};
  return t;
}

// Every simple cycle, checked for chords by DFS from its smallest node.
bool brute_chordless(const Graph& g) {
  const int n = g.order();
  NodeList stack;
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  bool ok = true;
  std::function<void(Node, Node)> dfs = [&](Node start, Node v) {
    for (Node w : g.neighbors(v)) {
      if (!ok) return;
      if (w == start && stack.size() >= 3) {
        for (std::size_t i = 0; i < stack.size(); ++i)
          for (std::size_t j = i + 2; j < stack.size(); ++j) {
            if (i == 0 && j + 1 == stack.size()) continue;
            if (g.adjacent(stack[i], stack[j])) ok = false;
          }
      }
      if (w <= start || on[w]) continue;
      on[w] = 1;
      stack.push_back(w);
      dfs(start, w);
      stack.pop_back();
      on[w] = 0;
    }
  };
  for (Node s = 0; s < n && ok; ++s) {
    stack = {s};
    on[s] = 1;
    dfs(s, s);
    on[s] = 0;
  }
  return ok;
}

}  // namespace

TEST_SUITE("basic") {
  TEST_CASE("line_graph") {
    CHECK(is_clique_graph(line_graph(kClaw)));
    CHECK(line_graph(kClaw).order() == 3);
    CHECK(tt::isomorphic(line_graph(make_hole(5)), make_hole(5)));
    CHECK(tt::isomorphic(line_graph(path_graph(4)), path_graph(3)));
  }

  TEST_CASE("root_graph") {
    auto k3 = root_graph(make_clique(3));
    REQUIRE(k3);
    CHECK(tt::isomorphic(k3->root, kClaw));
    auto c5 = root_graph(make_hole(5));
    REQUIRE(c5);
    CHECK(tt::isomorphic(c5->root, make_hole(5)));
    CHECK_FALSE(root_graph(kClaw));
    CHECK_FALSE(root_graph(make_wheel(5, {0, 1, 2, 3, 4})));
  }

  TEST_CASE("property: root graphs round trip") {
    std::mt19937_64 rng(14);
    int lines = 0;
    for (int i = 0; i < 3000; ++i) {
      const Graph g = i % 2 ? tt::random_graph(rng, 3 + i % 8, 0.5)
                            : line_graph(tt::random_graph(rng, 3 + i % 7, 0.4));
      auto r = root_graph(g);
      if (i % 2 == 0) REQUIRE(r);
      if (!r) continue;
      ++lines;
      const Graph l = line_graph(r->root);
      CHECK(tt::isomorphic(l, g));
      REQUIRE(r->edge_of_node.size() == static_cast<std::size_t>(g.order()));
      for (Node u = 0; u < g.order(); ++u)
        for (Node v = u + 1; v < g.order(); ++v) {
          auto [a, b] = r->edge_of_node[u];
          auto [c, d] = r->edge_of_node[v];
          const bool share = a == c || a == d || b == c || b == d;
          CHECK(share == g.adjacent(u, v));
        }
    }
    CHECK(lines > 1500);
  }

  TEST_CASE("chordless graphs") {
    CHECK(is_chordless_graph(make_hole(5)));
    CHECK_FALSE(is_chordless_graph(make_clique(4)));
    CHECK_FALSE(is_chordless_graph(kDiamond));
    std::mt19937_64 rng(15);
    for (int i = 0; i < 1500; ++i) {
      const Graph g = tt::random_graph(rng, 3 + i % 7, 0.15 + 0.3 * (i % 3) / 2.0);
      CHECK(is_chordless_graph(g) == brute_chordless(g));
    }
  }

  TEST_CASE("is_lg_tf_chordless") {
    auto k4 = is_lg_tf_chordless(make_clique(4));
    REQUIRE(k4);
    CHECK(k4->root.size() == 4);
    CHECK(is_tree(k4->root));
    CHECK(is_lg_tf_chordless(make_hole(6)));
    CHECK_FALSE(is_lg_tf_chordless(make_wheel(5, {0, 1, 2, 3, 4})));
  }

  TEST_CASE("property: line graphs of triangle-free chordless graphs, three ways") {
    std::mt19937_64 rng(16);
    for (int i = 0; i < 2000; ++i) {
      const Graph g = tt::random_graph(rng, 4 + i % 4, 0.3 + 0.4 * (i % 3) / 2.0);
      const bool a = is_lg_tf_chordless(g).has_value();
      const bool wheel_free = !contains_config(g, {ConfigKind::wheel});
      const bool diamond_free = !find_diamond(g);
      const bool b = root_graph(g).has_value() && wheel_free && diamond_free;
      const bool c = wheel_free && diamond_free && !find_claw(g);
      CHECK(a == b);
      CHECK(b == c);
    }
  }

  TEST_CASE("safe trees and siblings") {
    const Graph p4 = path_graph(4);
    const auto sib = pendant_siblings(p4);
    REQUIRE(sib.size() == 1);
    CHECK(sib[0] == std::pair<Edge, Edge>{{0, 1}, {2, 3}});
    CHECK(is_safe_tree(p4, {{{0, 1}, PendantLabel::x}, {{2, 3}, PendantLabel::y}}));
    CHECK_FALSE(is_safe_tree(p4, {{{0, 1}, PendantLabel::x}, {{2, 3}, PendantLabel::x}}));

    CHECK_FALSE(is_safe_tree(kClaw, {{{0, 1}, PendantLabel::x}, {{0, 2}, PendantLabel::y}, {{0, 3}, PendantLabel::x}}));

    const Graph spider = edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK(pendant_siblings(spider).size() == 3);
    CHECK_FALSE(is_safe_tree(spider, {{{1, 2}, PendantLabel::x}, {{3, 4}, PendantLabel::y}, {{5, 6}, PendantLabel::x}}));

    CHECK_THROWS_AS(pendant_siblings(make_hole(4)), GraphError);
  }

  TEST_CASE("build_pyramid_basic") {
    LabeledSafeTree p4{path_graph(4), {{{0, 1}, PendantLabel::x}, {{2, 3}, PendantLabel::y}}};
    const Graph c5 = build_pyramid_basic(p4);
    CHECK(is_hole_graph(c5));
    CHECK(c5.order() == 5);
    CHECK(c5.tag(3) == "x");
    CHECK(c5.tag(4) == "y");

    const Graph h = build_pyramid_basic(h_tree());
    CHECK(h.order() == 11);
    CHECK_FALSE(contains_config(h, kOnlyPyramidExcluded));

    LabeledSafeTree bad = p4;
    bad.labels[{2, 3}] = PendantLabel::x;
    CHECK_THROWS_AS(build_pyramid_basic(bad), GraphError);
  }

  TEST_CASE("is_pyramid_basic") {
    auto c5 = is_pyramid_basic(make_hole(5));
    REQUIRE(c5);
    CHECK(c5->tree.tree.order() == 4);
    const Graph h = build_pyramid_basic(h_tree());
    auto hc = is_pyramid_basic(h);
    REQUIRE(hc);
    CHECK(tt::isomorphic(build_pyramid_basic(hc->tree), h));
    CHECK_FALSE(is_pyramid_basic(make_clique(4)));
  }

  TEST_CASE("property: pyramid-basic graphs are only-pyramid and round trip") {
    Rng rng(17);
    for (int i = 0; i < 300; ++i) {
      const LabeledSafeTree t = random_safe_tree(rng, 2 + i % 9);
      REQUIRE(is_safe_tree(t.tree, t.labels));
      const Graph g = build_pyramid_basic(t);
      if (g.order() <= 12) CHECK_FALSE(contains_config(g, kOnlyPyramidExcluded));
      auto cert = is_pyramid_basic(g);
      REQUIRE(cert);
      CHECK(is_safe_tree(cert->tree.tree, cert->tree.labels));
      CHECK(tt::isomorphic(build_pyramid_basic(cert->tree), g));
    }
  }

  TEST_CASE("classify_basic") {
    CHECK(classify_basic(make_clique(6)).cls == BasicClass::clique);
    CHECK(classify_basic(make_hole(5)).cls == BasicClass::hole);
    const auto lp = classify_basic(make_pyramid(2, 2, 2));
    CHECK(lp.cls == BasicClass::long_pyramid);
    REQUIRE(lp.pyramid);
    CHECK(validate_witness(make_pyramid(2, 2, 2), *lp.pyramid));
    CHECK(classify_basic(build_pyramid_basic(h_tree())).cls == BasicClass::pyramid_basic);
    CHECK(classify_basic(make_prism(1, 1, 1)).cls == BasicClass::lg_tf_chordless);
    CHECK(classify_basic(make_theta(2, 2, 2)).cls == BasicClass::none);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto r = recognize_only_prism(synth_only_prism(seed, 20).graph);
      REQUIRE(r.verdict);
      for (const auto& leaf : r.leaves) {
        const auto cls = leaf.verdict.cls;
        CHECK(cls != BasicClass::none);
        if (cls == BasicClass::lg_tf_chordless) {
          REQUIRE(leaf.verdict.root);
          CHECK(is_triangle_free(leaf.verdict.root->root));
          CHECK(is_chordless_graph(leaf.verdict.root->root));
        }
      }
    }
  }
}
