#pragma once

#include <vector>

#include "gturan/graph.hpp"

namespace gturan {

/// Vertex permutation; perm[v] is the image of v.
using Permutation = std::vector<int>;

/// Isomorphism-invariant representative of a graph.
///
/// `labeling[v]` is the canonical position of input vertex v, and
/// `graph == relabel(input, labeling)`. Two graphs are isomorphic iff their
/// canonical graphs compare equal, so `graph` is the dictionary key.
struct CanonicalForm {
  Permutation labeling;
  Graph graph;
};

/// Canonical labelling by equitable refinement plus an individualisation
/// search tree, pruned with the automorphisms discovered along the way.
///
/// If `automorphisms` is non-null it receives the automorphisms found by the
/// search (a subset of Aut(g); never contains the identity).
CanonicalForm canonical_form(const Graph& g, std::vector<Permutation>* automorphisms = nullptr);

inline Graph canonical_graph(const Graph& g) { return canonical_form(g).graph; }

bool isomorphic(const Graph& a, const Graph& b);

/// Orbit representatives under the group generated by `generators`:
/// result[v] is the smallest vertex in v's orbit.
std::vector<int> orbits(int n, const std::vector<Permutation>& generators);

}  // namespace gturan
