#include "truemper/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <set>
#include <vector>
#include <algorithm>

namespace truemper {

namespace {

// Reads the integers of one logical line; returns false at end of input.
bool next_record(std::istream& in, int& line_no, std::vector<long long>& fields) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    fields.clear();
    std::string tok;
    while (ss >> tok) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw ParseError(line_no, "expected an integer, got '" + tok + "'");
      }
      if (used != tok.size()) throw ParseError(line_no, "expected an integer, got '" + tok + "'");
      fields.push_back(value);
    }
    if (!fields.empty()) return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  int line_no = 0;
  std::vector<long long> fields;
  if (!next_record(in, line_no, fields)) throw ParseError(line_no, "missing 'n m' header");
  if (fields.size() != 2) throw ParseError(line_no, "header must be 'n m'");
  if (fields[0] < 0 || fields[0] > kMaxNodes) throw ParseError(line_no, "node count out of range");
  if (fields[1] < 0) throw ParseError(line_no, "negative edge count");
  const int n = static_cast<int>(fields[0]);
  const long long m = fields[1];
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (long long i = 0; i < m; ++i) {
    if (!next_record(in, line_no, fields)) {
      throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    if (fields.size() != 2) throw ParseError(line_no, "edge line must be 'u v'");
    if (fields[0] < 0 || fields[0] >= n || fields[1] < 0 || fields[1] >= n) {
      throw ParseError(line_no, "node id out of range");
    }
    if (fields[0] == fields[1]) throw ParseError(line_no, "self-loop");
    Edge e{static_cast<Node>(std::min(fields[0], fields[1])), static_cast<Node>(std::max(fields[0], fields[1]))};
    if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge");
    edges.push_back(e);
  }
  if (next_record(in, line_no, fields)) throw ParseError(line_no, "trailing data after edge list");
  try {
    return Graph::from_edge_list(n, edges);
  } catch (const GraphError& e) {
    throw ParseError(line_no, e.what());
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace truemper
