#include "doctest.h"
#include "truemper/gen.hpp"
#include "truemper/serialize.hpp"

using namespace truemper;

TEST_SUITE("serialize") {
  TEST_CASE("graph round trip keeps tags") {
    const Graph g = make_hole(5).with_tag(1, "x");
    const Json j = to_json(g);
    CHECK(j["n"] == 5);
    CHECK(j["edges"].size() == 5);
    const Graph h = graph_from_json(j);
    CHECK(h.same_structure(g));
    CHECK(h.tag(1) == "x");
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 3})")), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 0]]})")), std::invalid_argument);
  }

  TEST_CASE("witness structure") {
    const Json j = to_json(*is_wheel(make_wheel(5, {0, 1, 3})));
    CHECK(j["kind"] == "wheel");
    CHECK(j["structure"]["center"] == 5);
    CHECK(j["structure"]["rim"].size() == 5);
  }

  TEST_CASE("recipes round trip") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Synthesis s = synth_only_pyramid(seed, 20);
      const SynthRecipe r = recipe_from_json(Json::parse(to_json(s.recipe).dump()));
      CHECK(r.seed == seed);
      CHECK(replay(r).same_structure(s.graph));
    }
    CHECK_THROWS_AS(recipe_from_json(Json::parse(R"({"family": "x"})")), std::invalid_argument);
  }

  TEST_CASE("trees") {
    const Graph g = glue_on_clique(make_hole(6), {0, 1}, make_prism(1, 1, 1), {0, 1});
    const Json c = to_json(clique_decomposition_tree(g));
    CHECK(c["type"] == "clique-tree");
    CHECK(c["nodes"][0]["kind"] == "internal");
    CHECK(c["leaves"] == 2);
    CHECK(to_dot(clique_decomposition_tree(g)).find("digraph") == 0);

    const Json t = to_json(two_join_decomposition_tree(make_hole(9)));
    CHECK(t["type"] == "2join-tree");
    CHECK(t["nodes"][0]["kind"] == "no-2join");
  }

  TEST_CASE("reports") {
    const Json r = to_json(recognize_only_prism(make_wheel(4, {0, 1, 2, 3})));
    CHECK(r["verdict"] == false);
    CHECK(r["class"] == "only-prism");
    CHECK(r["witness"]["kind"] == "wheel");
    CHECK(r["offending"] == 0);
  }
}
