#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "actbij/element_set.hpp"
#include "actbij/oriented_matroid.hpp"

namespace actbij {

// Element k of the matroid is edges[k-1], oriented tail -> head.
struct OrderedDigraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;

  friend bool operator==(const OrderedDigraph&, const OrderedDigraph&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Circuits are simple cycles signed along a traversal, cocircuits are
// minimal edge cuts signed by crossing direction. A self-loop is the
// positive circuit {+e}.
OrientedMatroid om_from_digraph(const OrderedDigraph& g);

// Flips the listed edges (element indices).
OrderedDigraph reverse_edges(const OrderedDigraph& g, ElementSet a);

OrderedDigraph parse_graph_file(const std::string& text);
OrientedMatroid parse_om_file(const std::string& text);
ElementSet parse_reorientation(const std::string& token, int n);

std::string serialize_graph(const OrderedDigraph& g);
std::string serialize_om(const OrientedMatroid& m);

// Reads a graph or om file, deciding by its first keyword.
OrientedMatroid parse_matroid_file(const std::string& text);

}  // namespace actbij
