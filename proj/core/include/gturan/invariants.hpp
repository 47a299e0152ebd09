#pragma once

#include <cstdint>
#include <vector>

#include "gturan/graph.hpp"

namespace gturan {

/// N_r(g): number of vertex subsets of size r inducing a clique.
/// count_cliques(g, 1) == g.order(); r > g.order() gives 0.
std::int64_t count_cliques(const Graph& g, int r);

int clique_number(const Graph& g);

/// Exact chromatic number. The null graph has chromatic number 0.
int chromatic_number(const Graph& g);

/// True if g has a proper colouring with k colours.
bool is_colorable(const Graph& g, int k);

/// Exact matching number nu(g) by memoised branch and bound.
int matching_number(const Graph& g);

/// A Tutte-Berge witness: removing `barrier` leaves components whose sizes
/// give value = |barrier| + sum floor(size / 2).
struct TutteBergeCertificate {
  VertexSet barrier = 0;
  std::vector<int> component_sizes;  // sorted descending
  int value = 0;
};

/// Evaluates the Tutte-Berge expression for a given barrier.
TutteBergeCertificate tutte_berge_value(const Graph& g, VertexSet barrier);

/// Barrier minimising the Tutte-Berge expression, searched by increasing
/// size and, within a size, lexicographically; the first minimiser wins.
/// Computed without reference to matching_number.
TutteBergeCertificate tutte_berge_certificate(const Graph& g);

/// g contains no matching with s + 1 edges.
bool is_msplus1_free(const Graph& g, int s);

}  // namespace gturan
