#include "gturan/containment.hpp"

#include <algorithm>

#include "gturan/canonical.hpp"
#include "gturan/invariants.hpp"

namespace gturan {

namespace {

class Embedder {
 public:
  Embedder(const Graph& host, const Graph& pattern, VertexSet pattern_active) : host_(host), pattern_(pattern) {
    order_ = embedding_order(pattern_active);
    for (int d = 0; d <= kMaxVertices; ++d) {
      VertexSet m = 0;
      for (int v = 0; v < host.order(); ++v)
        if (host.degree(v) >= d) m |= bit(v);
      at_least_degree_[static_cast<std::size_t>(d)] = m;
      if (m == 0) break;
    }
    image_.fill(-1);
  }

  bool run() { return extend(0, 0); }

 private:
  // Highest degree first, then repeatedly the vertex with the most already
  // placed neighbours so candidate sets shrink early.
  std::vector<int> embedding_order(VertexSet active) const {
    std::vector<int> order;
    VertexSet placed = 0;
    while (placed != active) {
      int best = -1;
      std::pair<int, int> best_key{-1, -1};
      for_each_vertex(active & ~placed, [&](int v) {
        const std::pair<int, int> key{popcount(pattern_.neighbors(v) & placed), pattern_.degree(v)};
        if (key > best_key) {
          best_key = key;
          best = v;
        }
      });
      order.push_back(best);
      placed |= bit(best);
    }
    return order;
  }

  bool extend(std::size_t depth, VertexSet used) {
    if (depth == order_.size()) return true;
    const int u = order_[depth];
    const auto need = static_cast<std::size_t>(pattern_.degree(u));
    VertexSet candidates = host_.vertices() & ~used & (need <= kMaxVertices ? at_least_degree_[need] : 0);
    for_each_vertex(pattern_.neighbors(u), [&](int w) {
      const int img = image_[static_cast<std::size_t>(w)];
      if (img >= 0) candidates &= host_.neighbors(img);
    });
    while (candidates != 0) {
      const int v = lowest(candidates);
      candidates &= candidates - 1;
      image_[static_cast<std::size_t>(u)] = v;
      if (extend(depth + 1, used | bit(v))) return true;
    }
    image_[static_cast<std::size_t>(u)] = -1;
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<int> order_;
  std::array<VertexSet, kMaxVertices + 1> at_least_degree_{};
  std::array<int, kMaxVertices> image_{};
};

}  // namespace

bool contains_subgraph(const Graph& host, const Graph& pattern) {
  if (pattern.order() > host.order()) return false;
  VertexSet active = 0;
  int max_degree = 0;
  for (int v = 0; v < pattern.order(); ++v) {
    const int d = pattern.degree(v);
    if (d > 0) active |= bit(v);
    max_degree = std::max(max_degree, d);
  }
  if (active == 0) return true;
  const int pattern_edges = pattern.size();
  if (pattern_edges > host.size()) return false;
  if (max_degree == 1) return matching_number(host) >= pattern_edges;
  return Embedder(host, pattern, active).run();
}

GraphFamily::GraphFamily(std::string label, std::initializer_list<Graph> members) : label_(std::move(label)) {
  for (const auto& g : members) add(g);
}

GraphFamily::GraphFamily(std::string label, const std::vector<Graph>& members) : label_(std::move(label)) {
  for (const auto& g : members) add(g);
}

bool GraphFamily::add(const Graph& g) {
  Graph key = canonical_graph(g);
  if (std::find(keys_.begin(), keys_.end(), key) != keys_.end()) return false;
  members_.push_back(g);
  keys_.push_back(std::move(key));
  return true;
}

bool GraphFamily::contains_isomorphic(const Graph& g) const {
  const Graph key = canonical_graph(g);
  return std::find(keys_.begin(), keys_.end(), key) != keys_.end();
}

std::vector<Graph> GraphFamily::canonical_members() const {
  std::vector<Graph> out = keys_;
  std::sort(out.begin(), out.end());
  return out;
}

bool is_family_free(const Graph& g, const GraphFamily& fam) {
  return std::none_of(fam.members().begin(), fam.members().end(),
                      [&](const Graph& member) { return contains_subgraph(g, member); });
}

GraphFamily minimalize(const GraphFamily& fam) {
  GraphFamily out(fam.label());
  const auto& m = fam.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < m.size() && !redundant; ++j) {
      // Members are pairwise non-isomorphic, so mutual containment is impossible.
      redundant = i != j && contains_subgraph(m[i], m[j]);
    }
    if (!redundant) out.add(m[i]);
  }
  return out;
}

GraphFamily merge(const GraphFamily& a, const GraphFamily& b, std::string label) {
  GraphFamily out(label.empty() ? a.label() + " ∪ " + b.label() : std::move(label));
  for (const auto& g : a.members()) out.add(g);
  for (const auto& g : b.members()) out.add(g);
  return out;
}

}  // namespace gturan
