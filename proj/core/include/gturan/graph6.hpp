#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gturan/graph.hpp"

namespace gturan {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Standard graph6 encoding without the ">>graph6<<" header.
std::string to_graph6(const Graph& g);

/// Decodes one graph6 string. A leading ">>graph6<<" header is tolerated;
/// trailing whitespace is ignored. Throws Graph6Error on malformed input.
Graph from_graph6(std::string_view text);

/// Reads a corpus: one graph6 string per line, blank lines and lines starting
/// with '#' skipped.
std::vector<Graph> read_graph6_corpus(std::istream& in);

}  // namespace gturan
