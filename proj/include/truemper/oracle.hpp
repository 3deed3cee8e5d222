#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "truemper/graph.hpp"

namespace truemper {

enum class ConfigKind { theta, wheel, prism, pyramid };

/// Bit set over ConfigKind.
class KindSet {
 public:
  constexpr KindSet() = default;
  constexpr KindSet(std::initializer_list<ConfigKind> kinds) {
    for (ConfigKind k : kinds) bits_ |= bit(k);
  }
  static constexpr KindSet all() {
    return {ConfigKind::theta, ConfigKind::wheel, ConfigKind::prism, ConfigKind::pyramid};
  }
  constexpr bool contains(ConfigKind k) const { return (bits_ & bit(k)) != 0; }
  constexpr KindSet with(ConfigKind k) const {
    KindSet out = *this;
    out.bits_ |= bit(k);
    return out;
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool operator==(const KindSet&) const = default;

 private:
  static constexpr unsigned bit(ConfigKind k) { return 1U << static_cast<unsigned>(k); }
  unsigned bits_ = 0;
};

inline constexpr KindSet kOnlyPrismExcluded{ConfigKind::theta, ConfigKind::wheel, ConfigKind::pyramid};
inline constexpr KindSet kOnlyPyramidExcluded{ConfigKind::theta, ConfigKind::wheel, ConfigKind::prism};

std::string to_string(ConfigKind kind);
std::optional<ConfigKind> parse_kind(const std::string& name);

/// A Truemper configuration found in a graph, in that graph's node ids.
///
/// theta:   ends = {a, b}; paths are the three a..b paths.
/// prism:   triangles = {a1a2a3, b1b2b3}; paths[i] runs from triangles[0][i]
///          to its partner in triangles[1].
/// pyramid: apex is set; triangles = {b1b2b3}; paths[i] runs apex..b_i.
/// wheel:   rim lists the hole in cyclic order; center is set.
struct ConfigWitness {
  ConfigKind kind = ConfigKind::theta;
  NodeList nodes;
  std::vector<NodeList> paths;
  std::vector<NodeList> triangles;
  NodeList ends;
  NodeList rim;
  Node center = -1;
  Node apex = -1;
};

class OracleScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultOracleCap = 14;
/// Hard ceiling on the exhaustive search regardless of the requested cap.
inline constexpr int kOracleHardLimit = 62;

// Whole-graph structural checks: a witness iff g itself is the configuration.
std::optional<ConfigWitness> is_theta(const Graph& g);
std::optional<ConfigWitness> is_wheel(const Graph& g);
std::optional<ConfigWitness> is_prism(const Graph& g);
std::optional<ConfigWitness> is_pyramid(const Graph& g);
bool is_long_pyramid(const Graph& g);

/// Exhaustive induced search. Subsets are visited by size, then in
/// lexicographic order of their sorted node lists; within a subset kinds are
/// tried in the order theta, wheel, prism, pyramid. Throws OracleScaleError
/// when g has more than `cap` nodes.
std::optional<ConfigWitness> contains_config(const Graph& g, KindSet kinds,
                                             int cap = kDefaultOracleCap);

/// Checks a witness against g: the node set induces exactly the configuration
/// described by its structure.
bool validate_witness(const Graph& g, const ConfigWitness& w);

struct StarCutset {
  Node center = -1;
  NodeList cutset;  // contains center
};

/// A star cutset, minimal for its center, or none.
std::optional<StarCutset> has_star_cutset(const Graph& g);

}  // namespace truemper
