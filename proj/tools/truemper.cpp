// Command-line front end: recognize, decompose, generate, oracle, rerun.
//
// Exit codes: 0 in class / no configuration found / success, 1 not in class /
// configuration found, 2 input or usage error (including oracle scale).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "truemper/gen.hpp"
#include "truemper/io.hpp"
#include "truemper/recognize.hpp"
#include "truemper/serialize.hpp"

#ifndef TRUEMPER_VERSION
#define TRUEMPER_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using namespace truemper;

namespace {

constexpr int kInClass = 0;
constexpr int kNotInClass = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Manifest {
  std::string command;
  std::vector<std::string> argv;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::optional<std::uint64_t> seed;
  int oracle_cap = kDefaultOracleCap;
};

// Set by rerun so the recorded cap wins over the environment.
std::optional<int> recorded_cap;

int default_cap() {
  if (recorded_cap) return *recorded_cap;
  if (const char* env = std::getenv("TRUEMPER_ORACLE_CAP")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw InputError(std::string("TRUEMPER_ORACLE_CAP is not an integer: ") + env);
    }
  }
  return kDefaultOracleCap;
}

Graph load(const std::string& path) {
  try {
    return read_edge_list_file(path);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text, Manifest& m) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  m.outputs.push_back(path);
}

void write_manifest(const std::string& path, const Manifest& m) {
  Json j = {{"command", m.command},
            {"argv", m.argv},
            {"inputs", m.inputs},
            {"outputs", m.outputs},
            {"seed", m.seed ? Json(*m.seed) : Json(nullptr)},
            {"oracle_cap", m.oracle_cap},
            {"tool_version", TRUEMPER_VERSION}};
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << "\n";
}

// The manifest goes next to the first output unless a path was given.
void emit_manifest(const std::string& requested, const Manifest& m) {
  std::string path = requested;
  if (path.empty() && !m.outputs.empty()) {
    const fs::path first(m.outputs.front());
    path = fs::is_directory(first) ? (first / "manifest.json").string() : first.string() + ".manifest.json";
  }
  if (!path.empty()) write_manifest(path, m);
}

KindSet parse_kinds(const std::string& list) {
  if (list.empty() || list == "all") return KindSet::all();
  KindSet out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto k = parse_kind(item);
    if (!k) throw InputError("unknown configuration kind '" + item + "'");
    out = out.with(*k);
  }
  return out;
}

std::string describe_leaf(const RecognitionReport& r) {
  const LeafResult& leaf = r.leaves[r.offending];
  std::ostringstream out;
  out << "clique leaf #" << leaf.clique_node;
  if (leaf.two_join_node >= 0) out << ", 2-join leaf #" << leaf.two_join_node;
  out << ": " << leaf.failure;
  return out.str();
}

int cmd_recognize(const std::string& cls_name, const std::vector<std::string>& inputs, const std::string& json_out,
                  bool witness, int cap, Manifest& m) {
  auto cls = parse_class(cls_name);
  if (!cls) throw InputError("unknown class '" + cls_name + "'");
  RecognizeOptions opt;
  opt.witness = witness;
  opt.oracle_cap = cap;
  std::vector<Graph> graphs;
  for (const auto& path : inputs) graphs.push_back(load(path));
  int code = kInClass;
  Json reports = Json::array();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const RecognitionReport r = recognize(*cls, graphs[i], opt);
    std::cout << inputs[i] << ": " << to_string(*cls) << ": " << (r.verdict ? "yes" : "no");
    if (!r.verdict) std::cout << " (" << describe_leaf(r) << ")";
    std::cout << "\n";
    if (witness && r.witness) std::cout << "  witness: " << to_json(*r.witness).dump() << "\n";
    if (!r.verdict) code = kNotInClass;
    Json j = to_json(r);
    j["input"] = inputs[i];
    reports.push_back(std::move(j));
  }
  if (!json_out.empty()) {
    write_file(json_out, (reports.size() == 1 ? reports.front() : reports).dump(2) + "\n", m);
  }
  return code;
}

int cmd_decompose(const std::string& mode, const std::string& input, const std::string& dot_out,
                  const std::string& json_out, Manifest& m) {
  const Graph g = load(input);
  std::string dot;
  Json j;
  if (mode == "clique") {
    const CliqueDecompTree t = clique_decomposition_tree(g);
    dot = to_dot(t);
    j = to_json(t);
    std::cout << input << ": clique tree with " << t.nodes.size() << " nodes, " << t.leaves().size()
              << " leaves\n";
    for (const auto& node : j["nodes"]) {
      if (node["kind"] != "internal") {
        std::cout << "  leaf #" << node["id"] << " n=" << node["graph"]["n"] << " "
                  << node["kind"].get<std::string>() << "\n";
      }
    }
  } else if (mode == "2join") {
    const TwoJoinDecompTree t = two_join_decomposition_tree(g);
    dot = to_dot(t);
    j = to_json(t);
    std::cout << input << ": 2-join tree with " << t.nodes.size() << " nodes, " << t.calls() << " calls\n";
    for (int i : t.leaves()) {
      std::cout << "  leaf #" << i << " n=" << t.nodes[i].graph.order() << " " << to_string(t.nodes[i].kind)
                << "\n";
    }
  } else {
    throw InputError("unknown decomposition mode '" + mode + "' (clique or 2join)");
  }
  if (!dot_out.empty()) write_file(dot_out, dot, m);
  if (!json_out.empty()) write_file(json_out, j.dump(2) + "\n", m);
  return kInClass;
}

int cmd_generate(const std::string& kind, std::uint64_t seed, int size, int count, const std::string& out_dir,
                 const std::string& replay_path, Manifest& m) {
  if (!replay_path.empty()) {
    std::ifstream in(replay_path);
    if (!in) throw InputError("cannot read " + replay_path);
    Json j;
    try {
      in >> j;
    } catch (const Json::exception& e) {
      throw InputError(replay_path + ": " + e.what());
    }
    const SynthRecipe recipe = recipe_from_json(j);
    const Graph g = replay(recipe);
    const std::string target = out_dir.empty() ? "-" : out_dir;
    write_file(target, format_edge_list(g), m);
    return kInClass;
  }
  if (out_dir.empty()) throw InputError("--out is required");
  fs::create_directories(out_dir);
  m.outputs.push_back(out_dir);
  std::optional<ConfigKind> planted;
  if (kind.rfind("planted:", 0) == 0) {
    planted = parse_kind(kind.substr(8));
    if (!planted) throw InputError("unknown planted kind '" + kind.substr(8) + "'");
  } else if (kind != "only-prism" && kind != "only-pyramid") {
    throw InputError("unknown generator kind '" + kind + "'");
  }
  const std::string stem = planted ? "planted-" + to_string(*planted) : kind;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    const std::string base = (fs::path(out_dir) / (stem + "-" + std::to_string(s))).string();
    if (planted) {
      const Planted p = plant_configuration(s, *planted, size);
      write_file(base + ".txt", format_edge_list(p.graph), m);
    } else {
      const Synthesis syn = kind == "only-prism" ? synth_only_prism(s, size) : synth_only_pyramid(s, size);
      write_file(base + ".txt", format_edge_list(syn.graph), m);
      write_file(base + ".recipe.json", to_json(syn.recipe).dump(2) + "\n", m);
    }
    std::cout << base << ".txt\n";
  }
  return kInClass;
}

int cmd_oracle(const std::string& input, const std::string& kinds, int cap) {
  const Graph g = load(input);
  const KindSet set = parse_kinds(kinds);
  try {
    auto w = contains_config(g, set, cap);
    if (!w) {
      std::cout << input << ": none\n";
      return kInClass;
    }
    std::cout << to_json(*w).dump() << "\n";
    return kNotInClass;
  } catch (const OracleScaleError& e) {
    throw InputError(std::string("oracle scale exceeded: ") + e.what());
  }
}

}  // namespace

int run(int argc, char** argv);

int main(int argc, char** argv) { return run(argc, argv); }

int run(int argc, char** argv) {
  CLI::App app{"Recognition and decomposition of only-prism and only-pyramid graphs"};
  app.set_version_flag("--version", TRUEMPER_VERSION);
  app.require_subcommand(1);

  Manifest m;
  for (int i = 0; i < argc; ++i) m.argv.emplace_back(argv[i]);
  std::string manifest_path;
  int cap = -1;

  auto* rec = app.add_subcommand("recognize", "Decide membership in a graph class");
  std::string cls;
  std::vector<std::string> inputs;
  std::string json_out;
  bool witness = false;
  rec->add_option("class", cls, "only-prism | only-pyramid | universally-signable")->required();
  rec->add_option("inputs", inputs, "edge-list files")->required();
  rec->add_option("--json", json_out, "write the recognition report");
  rec->add_flag("--witness", witness, "search an excluded configuration on rejection");
  rec->add_option("--cap", cap, "oracle node cap");
  rec->add_option("--manifest", manifest_path, "run manifest path");

  auto* dec = app.add_subcommand("decompose", "Build a decomposition tree");
  std::string mode, dec_input, dot_out, dec_json;
  dec->add_option("mode", mode, "clique | 2join")->required();
  dec->add_option("input", dec_input, "edge-list file")->required();
  dec->add_option("--dot", dot_out, "write a DOT rendering");
  dec->add_option("--json", dec_json, "write the tree as JSON");
  dec->add_option("--manifest", manifest_path, "run manifest path");

  auto* gen = app.add_subcommand("generate", "Synthesize class members or planted negatives");
  std::string kind = "only-prism", out_dir, replay_path;
  std::uint64_t seed = 0;
  int size = 20, count = 1;
  gen->add_option("kind", kind, "only-prism | only-pyramid | planted:<theta|wheel|prism|pyramid>");
  gen->add_option("--seed", seed, "first RNG seed");
  gen->add_option("--size", size, "target node count")->check(CLI::Range(1, 4096));
  gen->add_option("--count", count, "number of instances")->check(CLI::Range(1, 1000000));
  gen->add_option("--out", out_dir, "output directory (output file with --replay)");
  gen->add_option("--replay", replay_path, "rebuild the graph of a recipe JSON");
  gen->add_option("--manifest", manifest_path, "run manifest path");

  auto* orc = app.add_subcommand("oracle", "Exhaustive Truemper-configuration search");
  std::string orc_input, kinds;
  orc->add_option("input", orc_input, "edge-list file")->required();
  orc->add_option("--kinds", kinds, "comma-separated kinds (default all)");
  orc->add_option("--cap", cap, "oracle node cap");
  orc->add_option("--manifest", manifest_path, "run manifest path");

  auto* rerun = app.add_subcommand("rerun", "Re-execute the command recorded in a manifest");
  std::string rerun_path;
  rerun->add_option("manifest", rerun_path, "manifest JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*rerun) {
      std::ifstream in(rerun_path);
      if (!in) throw InputError("cannot read " + rerun_path);
      Json j;
      in >> j;
      std::vector<std::string> args = j.at("argv").get<std::vector<std::string>>();
      if (j.contains("oracle_cap")) recorded_cap = j.at("oracle_cap").get<int>();
      if (args.empty()) throw InputError("manifest has no argv");
      std::vector<char*> raw;
      for (auto& a : args) raw.push_back(a.data());
      return run(static_cast<int>(raw.size()), raw.data());
    }
    m.oracle_cap = cap >= 0 ? cap : default_cap();
    int code = kInClass;
    if (*rec) {
      m.command = "recognize";
      m.inputs = inputs;
      code = cmd_recognize(cls, inputs, json_out, witness, m.oracle_cap, m);
    } else if (*dec) {
      m.command = "decompose";
      m.inputs = {dec_input};
      code = cmd_decompose(mode, dec_input, dot_out, dec_json, m);
    } else if (*gen) {
      m.command = "generate";
      m.seed = seed;
      if (!replay_path.empty()) m.inputs = {replay_path};
      code = cmd_generate(kind, seed, size, count, out_dir, replay_path, m);
    } else if (*orc) {
      m.command = "oracle";
      m.inputs = {orc_input};
      code = cmd_oracle(orc_input, kinds, m.oracle_cap);
    }
    emit_manifest(manifest_path, m);
    return code;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kInputError;
}
