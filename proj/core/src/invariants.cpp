#include "gturan/invariants.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace gturan {

namespace {

std::int64_t cliques_within(std::span<const VertexSet> rows, VertexSet candidates, int k) {
  if (popcount(candidates) < k) return 0;
  if (k == 1) return popcount(candidates);
  std::int64_t total = 0;
  while (candidates != 0) {
    const int v = lowest(candidates);
    candidates &= candidates - 1;
    total += cliques_within(rows, candidates & rows[static_cast<std::size_t>(v)], k - 1);
  }
  return total;
}

void grow_clique(std::span<const VertexSet> rows, VertexSet candidates, int size, int& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  while (candidates != 0) {
    if (size + popcount(candidates) <= best) return;
    const int v = lowest(candidates);
    candidates &= candidates - 1;
    grow_clique(rows, candidates & rows[static_cast<std::size_t>(v)], size + 1, best);
  }
}

// DSATUR-ordered backtracking colouring with at most k colours.
class Colouring {
 public:
  Colouring(const Graph& g, int k) : g_(g), k_(k), colour_(static_cast<std::size_t>(g.order()), -1) {}

  bool solve() { return assign(0, 0); }

  int greedy() {
    const int n = g_.order();
    for (int step = 0; step < n; ++step) {
      const int v = most_saturated();
      const VertexSet used = used_colours(v);
      int c = 0;
      while ((used >> c) & 1U) ++c;
      colour_[static_cast<std::size_t>(v)] = c;
    }
    return n == 0 ? 0 : *std::max_element(colour_.begin(), colour_.end()) + 1;
  }

 private:
  VertexSet used_colours(int v) const {
    VertexSet used = 0;
    for_each_vertex(g_.neighbors(v), [&](int w) {
      const int c = colour_[static_cast<std::size_t>(w)];
      if (c >= 0) used |= bit(c);
    });
    return used;
  }

  int most_saturated() const {
    int best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (int v = 0; v < g_.order(); ++v) {
      if (colour_[static_cast<std::size_t>(v)] >= 0) continue;
      const int sat = popcount(used_colours(v));
      const int deg = g_.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  bool assign(int coloured, int colours_open) {
    if (coloured == g_.order()) return true;
    const int v = most_saturated();
    const VertexSet used = used_colours(v);
    // Opening more than one fresh colour at a time only permutes names.
    const int limit = std::min(k_, colours_open + 1);
    for (int c = 0; c < limit; ++c) {
      if ((used >> c) & 1U) continue;
      colour_[static_cast<std::size_t>(v)] = c;
      if (assign(coloured + 1, std::max(colours_open, c + 1))) return true;
    }
    colour_[static_cast<std::size_t>(v)] = -1;
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> colour_;
};

class MatchingSearch {
 public:
  explicit MatchingSearch(const Graph& g) : rows_(g.rows()) {}

  int solve(VertexSet alive) {
    VertexSet active = 0;
    for_each_vertex(alive, [&](int v) {
      if ((rows_[static_cast<std::size_t>(v)] & alive) != 0) active |= bit(v);
    });
    if (active == 0) return 0;
    if (auto it = memo_.find(active); it != memo_.end()) return it->second;

    // Some maximum matching covers any fixed non-isolated vertex, so branch
    // only on the partner of a minimum-degree vertex.
    int pivot = -1;
    int pivot_degree = kMaxVertices + 1;
    for_each_vertex(active, [&](int v) {
      const int d = popcount(rows_[static_cast<std::size_t>(v)] & active);
      if (d < pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    });
    const int upper = popcount(active) / 2;
    int best = 0;
    VertexSet partners = rows_[static_cast<std::size_t>(pivot)] & active;
    while (partners != 0 && best < upper) {
      const int u = lowest(partners);
      partners &= partners - 1;
      best = std::max(best, 1 + solve(active & ~bit(pivot) & ~bit(u)));
    }
    memo_.emplace(active, best);
    return best;
  }

 private:
  std::span<const VertexSet> rows_;
  std::unordered_map<VertexSet, int> memo_;
};

}  // namespace

std::int64_t count_cliques(const Graph& g, int r) {
  if (r < 1) throw std::invalid_argument("count_cliques: clique order must be at least 1");
  return cliques_within(g.rows(), g.vertices(), r);
}

int clique_number(const Graph& g) {
  int best = 0;
  grow_clique(g.rows(), g.vertices(), 0, best);
  return best;
}

bool is_colorable(const Graph& g, int k) {
  if (g.order() == 0) return k >= 0;
  if (k <= 0) return false;
  return Colouring(g, k).solve();
}

int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  const int lower = clique_number(g);
  const int upper = Colouring(g, g.order()).greedy();
  for (int k = lower; k < upper; ++k)
    if (is_colorable(g, k)) return k;
  return upper;
}

int matching_number(const Graph& g) { return MatchingSearch(g).solve(g.vertices()); }

TutteBergeCertificate tutte_berge_value(const Graph& g, VertexSet barrier) {
  TutteBergeCertificate cert;
  cert.barrier = barrier & g.vertices();
  cert.value = popcount(cert.barrier);
  for (VertexSet comp : components(g, g.vertices() & ~cert.barrier)) {
    const int size = popcount(comp);
    cert.component_sizes.push_back(size);
    cert.value += size / 2;
  }
  std::sort(cert.component_sizes.begin(), cert.component_sizes.end(), std::greater<>());
  return cert;
}

TutteBergeCertificate tutte_berge_certificate(const Graph& g) {
  const int n = g.order();
  TutteBergeCertificate best = tutte_berge_value(g, 0);
  for (int k = 1; k <= n && k < best.value; ++k) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      TutteBergeCertificate cand = tutte_berge_value(g, from_vertex_list(pick));
      if (cand.value < best.value) best = std::move(cand);
      // next k-combination in lexicographic order
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return best;
}

bool is_msplus1_free(const Graph& g, int s) {
  if (s < 0) throw std::invalid_argument("is_msplus1_free: negative s");
  return matching_number(g) <= s;
}

}  // namespace gturan
