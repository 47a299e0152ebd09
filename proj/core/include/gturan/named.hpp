#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "gturan/containment.hpp"
#include "gturan/graph.hpp"

namespace gturan {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Parses one graph name:
///   K5  C7  P4  S6  M3  W5  E4     complete, cycle, path, star, matching,
///                                  wheel (hub + C_k), edgeless
///   T(7,3)                          Turán graph, 7 vertices in 3 parts
///   K(2,3)  DS(2,2)                 complete bipartite, double star
///   g6:<graph6>                     raw graph6
NamedGraph parse_graph(std::string_view text);

/// Parses a comma-separated list of graph names and covering families
/// `fp(<graph>,<p>)` into one family. Commas inside parentheses do not split.
GraphFamily parse_family(std::string_view text);

}  // namespace gturan
