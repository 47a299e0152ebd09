#include "gturan/graph.hpp"

#include <sstream>

namespace gturan {

namespace {

void check_order(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > kMaxVertices) {
    throw CapacityError("graph order " + std::to_string(n) + " exceeds capacity " +
                        std::to_string(kMaxVertices));
  }
}

}  // namespace

std::vector<int> to_vertex_list(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(s)));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

VertexSet from_vertex_list(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw std::out_of_range("vertex index out of range");
    s |= bit(v);
  }
  return s;
}

Graph::Graph(int n) : n_(n) { check_order(n); }

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::out_of_range("vertex pair (" + std::to_string(u) + "," + std::to_string(v) +
                            ") out of range for order " + std::to_string(n_));
  }
}

bool Graph::has_edge(int u, int v) const {
  check_pair(u, v);
  return (adj_[u] >> v) & 1U;
}

VertexSet Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  return adj_[v];
}

void Graph::connect(int u, int v) {
  check_pair(u, v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::disconnect(int u, int v) {
  check_pair(u, v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for_each_vertex(adj_[u] & ~first_n(u + 1), [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

Graph empty(int n) { return Graph(n); }

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.connect(u, v);
  return g;
}

Graph complete_bipartite(int a, int b) { return join_all(empty(a), empty(b)); }

Graph star(int k) {
  Graph g(k);
  for (int v = 1; v < k; ++v) g.connect(0, v);
  return g;
}

Graph matching(int s) {
  if (s < 0) throw std::invalid_argument("negative matching size");
  Graph g(2 * s);
  for (int i = 0; i < s; ++i) g.connect(2 * i, 2 * i + 1);
  return g;
}

Graph cycle(int k) {
  if (k == 1 || k == 2) throw std::invalid_argument("a simple cycle needs at least 3 vertices");
  Graph g(k);
  for (int v = 0; v < k; ++v) {
    if (k > 0) g.connect(v, (v + 1) % k);
  }
  return g;
}

Graph path(int k) {
  Graph g(k);
  for (int v = 0; v + 1 < k; ++v) g.connect(v, v + 1);
  return g;
}

Graph turan_graph(int p, int parts) {
  if (parts < 1) throw std::invalid_argument("turan_graph needs at least one part");
  check_order(p);
  std::vector<int> part_of(static_cast<std::size_t>(p));
  int v = 0;
  for (int i = 0; i < parts && v < p; ++i) {
    const int part_size = p / parts + (i < p % parts ? 1 : 0);
    for (int j = 0; j < part_size; ++j) part_of[static_cast<std::size_t>(v++)] = i;
  }
  Graph g(p);
  for (int a = 0; a < p; ++a)
    for (int b = a + 1; b < p; ++b)
      if (part_of[static_cast<std::size_t>(a)] != part_of[static_cast<std::size_t>(b)]) g.connect(a, b);
  return g;
}

Graph wheel(int k) {
  Graph rim = cycle(k);
  return join_all(empty(1), rim);
}

Graph double_star(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative leaf count");
  Graph g(2 + a + b);
  g.connect(0, 1);
  for (int i = 0; i < a; ++i) g.connect(0, 2 + i);
  for (int i = 0; i < b; ++i) g.connect(1, 2 + a + i);
  return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  Graph g(n1 + g2.order());
  for (auto [u, v] : g1.edges()) g.connect(u, v);
  for (auto [u, v] : g2.edges()) g.connect(n1 + u, n1 + v);
  return g;
}

Graph join_all(const Graph& g1, const Graph& g2) {
  Graph g = disjoint_union(g1, g2);
  const int n1 = g1.order();
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < g2.order(); ++v) g.connect(u, n1 + v);
  return g;
}

Graph induced(const Graph& g, VertexSet s) {
  if ((s & ~g.vertices()) != 0) throw std::out_of_range("induced: vertex set exceeds graph");
  const std::vector<int> keep = to_vertex_list(s);
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.has_edge(keep[i], keep[j])) h.connect(static_cast<int>(i), static_cast<int>(j));
  return h;
}

Graph add_edge(const Graph& g, int u, int v) {
  Graph h = g;
  h.connect(u, v);
  return h;
}

Graph remove_edge(const Graph& g, int u, int v) {
  Graph h = g;
  h.disconnect(u, v);
  return h;
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) h.connect(u, v);
  return h;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("relabel: permutation size mismatch");
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.connect(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return h;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within & g.vertices();
  while (left != 0) {
    VertexSet comp = bit(lowest(left));
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
      next &= left & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool is_edgeless(const Graph& g) {
  for (VertexSet row : g.rows())
    if (row != 0) return false;
  return true;
}

bool is_independent(const Graph& g, VertexSet s) {
  bool ok = true;
  for_each_vertex(s, [&](int v) { ok = ok && (g.neighbors(v) & s) == 0; });
  return ok;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (VertexSet comp : components(g)) {
    const int root = lowest(comp);
    side[static_cast<std::size_t>(root)] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      bool clash = false;
      for_each_vertex(g.neighbors(v), [&](int w) {
        auto& sw = side[static_cast<std::size_t>(w)];
        if (sw < 0) {
          sw = 1 - side[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (sw == side[static_cast<std::size_t>(v)]) {
          clash = true;
        }
      });
      if (clash) return false;
    }
  }
  return true;
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " E={";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    os << (first ? "" : ",") << u << "-" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace gturan

std::size_t std::hash<gturan::Graph>::operator()(const gturan::Graph& g) const noexcept {
  std::size_t h = static_cast<std::size_t>(g.order()) * 0x9e3779b97f4a7c15ULL;
  for (gturan::VertexSet row : g.rows()) {
    h ^= std::hash<std::uint64_t>{}(row) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
