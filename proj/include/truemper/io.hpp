#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "truemper/graph.hpp"

namespace truemper {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Edge-list text format: a header line "n m", then m lines "u v" with 0-based
// ids. Anything after '#' on a line is ignored, as are blank lines.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
Graph parse_edge_list(const std::string& text);

void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);

}  // namespace truemper
