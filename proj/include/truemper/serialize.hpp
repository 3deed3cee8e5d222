#pragma once

#include <string>

#include "json.hpp"
#include "truemper/basic.hpp"
#include "truemper/cutset.hpp"
#include "truemper/gen.hpp"
#include "truemper/oracle.hpp"
#include "truemper/recognize.hpp"
#include "truemper/twojoin.hpp"

namespace truemper {

using Json = nlohmann::json;

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json to_json(const ConfigWitness& w);
Json to_json(const CliqueSplit& s);
Json to_json(const TwoJoinSplit& s);
Json to_json(const RootGraph& r);
Json to_json(const LabeledSafeTree& t);
Json to_json(const BasicVerdict& v);

/// Leaves are labelled "clique", "hole" or "atom".
Json to_json(const CliqueDecompTree& t);
Json to_json(const TwoJoinDecompTree& t);
Json to_json(const RecognitionReport& r);

Json to_json(const SynthRecipe& r);
/// Throws std::invalid_argument on malformed input.
SynthRecipe recipe_from_json(const Json& j);

std::string to_dot(const CliqueDecompTree& t);
std::string to_dot(const TwoJoinDecompTree& t);

}  // namespace truemper
