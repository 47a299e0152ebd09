#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gturan {

inline constexpr int kMaxVertices = 64;

/// A set of vertices packed into one machine word; bit v is vertex v.
using VertexSet = std::uint64_t;

class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

/// All vertices {0, .., n-1}.
constexpr VertexSet first_n(int n) {
  return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest(VertexSet s) { return std::countr_zero(s); }

/// Calls fn(v) for each vertex v in s, in increasing order.
template <class Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s != 0) {
    fn(std::countr_zero(s));
    s &= s - 1;
  }
}

std::vector<int> to_vertex_list(VertexSet s);
VertexSet from_vertex_list(std::span<const int> vertices);

/// Small simple undirected graph, one adjacency bitset per vertex.
///
/// Rows at index >= order() are always zero, so defaulted comparison and
/// hashing only see the live part of the matrix.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  int size() const;

  bool has_edge(int u, int v) const;
  VertexSet neighbors(int v) const;
  int degree(int v) const { return std::popcount(neighbors(v)); }
  VertexSet vertices() const { return first_n(n_); }
  std::span<const VertexSet> rows() const { return {adj_.data(), static_cast<std::size_t>(n_)}; }

  /// In-place mutation, intended for building a value before it is shared.
  void connect(int u, int v);
  void disconnect(int u, int v);

  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;
  friend auto operator<=>(const Graph&, const Graph&) = default;

 private:
  void check_pair(int u, int v) const;

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

Graph empty(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
/// S_k: k vertices, centre 0.
Graph star(int k);
/// M_s: 2s vertices, edges {2i, 2i+1}.
Graph matching(int s);
Graph cycle(int k);
/// P_k: k vertices 0-1-..-(k-1).
Graph path(int k);
/// Complete multipartite graph on p vertices with `parts` parts of near-equal
/// size; the first p % parts parts get the extra vertex.
Graph turan_graph(int p, int parts);
/// Hub 0 joined to the rim cycle 1..k.
Graph wheel(int k);
/// Two adjacent centres 0 and 1 carrying a and b leaves respectively.
Graph double_star(int a, int b);

Graph disjoint_union(const Graph& g1, const Graph& g2);
/// Disjoint union plus every edge between g1 and g2.
Graph join_all(const Graph& g1, const Graph& g2);
/// Subgraph induced by `s`, relabelled in increasing vertex order.
Graph induced(const Graph& g, VertexSet s);
Graph add_edge(const Graph& g, int u, int v);
Graph remove_edge(const Graph& g, int u, int v);
Graph complement(const Graph& g);
/// Graph h with h.has_edge(perm[u], perm[v]) iff g.has_edge(u, v).
Graph relabel(const Graph& g, std::span<const int> perm);

/// Vertex sets of the connected components of g[within], each component
/// reported once, ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_edgeless(const Graph& g);
bool is_independent(const Graph& g, VertexSet s);

bool is_bipartite(const Graph& g);

std::string describe(const Graph& g);

}  // namespace gturan

template <>
struct std::hash<gturan::Graph> {
  std::size_t operator()(const gturan::Graph& g) const noexcept;
};
