#pragma once

// Slow reference implementations used only by the tests. None of them calls
// into the library's algorithms; Graph is used as a plain adjacency container.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "gturan/graph.hpp"

namespace oracle {

using gturan::Graph;

inline int pair_count(int n) { return n * (n - 1) / 2; }

// Edge i of the labelled enumeration, pairs ordered (0,1),(0,2),(1,2),(0,3),...
inline std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) out.emplace_back(i, j);
  return out;
}

inline Graph from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  const auto pairs = all_pairs(n);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (mask >> i & 1) g.connect(pairs[i].first, pairs[i].second);
  return g;
}

inline std::uint64_t to_mask(const Graph& g) {
  const auto pairs = all_pairs(g.order());
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (g.has_edge(pairs[i].first, pairs[i].second)) mask |= std::uint64_t{1} << i;
  return mask;
}

inline int degree(const Graph& g, int v) {
  int d = 0;
  for (int u = 0; u < g.order(); ++u) d += g.has_edge(u, v);
  return d;
}

// Canonical key: the smallest edge mask over all relabellings that list
// vertices in order of the invariant (degree, sorted neighbour degrees).
// Invariant classes map onto invariant classes, so the minimum is an
// isomorphism invariant. n <= 11.
inline std::uint64_t canonical_key(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> inv(n);
  for (int v = 0; v < n; ++v) {
    inv[v].push_back(degree(g, v));
    std::vector<int> nd;
    for (int u = 0; u < n; ++u)
      if (g.has_edge(u, v)) nd.push_back(degree(g, u));
    std::sort(nd.begin(), nd.end());
    inv[v].insert(inv[v].end(), nd.begin(), nd.end());
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] < inv[b]; });
  // blocks of equal invariant; permute inside each block
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && inv[order[j]] == inv[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  const auto pairs = all_pairs(n);
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> pos(n);  // pos[k] = input vertex placed at position k
  auto evaluate = [&] {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (g.has_edge(pos[pairs[i].first], pos[pairs[i].second])) mask |= std::uint64_t{1} << i;
    best = std::min(best, mask);
  };
  auto rec = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      evaluate();
      return;
    }
    auto [lo, hi] = blocks[b];
    std::vector<int> members(order.begin() + lo, order.begin() + hi);
    std::sort(members.begin(), members.end());
    do {
      std::copy(members.begin(), members.end(), pos.begin() + lo);
      self(self, b + 1);
    } while (std::next_permutation(members.begin(), members.end()));
  };
  rec(rec, 0);
  return best;
}

// Number of isomorphism classes on n vertices: enumerate all labelled graphs
// and deduplicate by canonical_key.
inline std::int64_t labelled_class_count(int n) {
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  std::vector<std::uint64_t> keys;
  for (std::uint64_t m = 0; m < total; ++m) {
    const Graph g = from_mask(n, m);
    const std::uint64_t k = canonical_key(g);
    if (k == m) keys.push_back(k);  // keep one labelled copy per class
  }
  return static_cast<std::int64_t>(keys.size());
}

// Burnside: (1/n!) sum over permutations of 2^(cycles on unordered pairs).
inline std::int64_t burnside_class_count(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto pairs = all_pairs(n);
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    index[pairs[i].first][pairs[i].second] = static_cast<int>(i);
    index[pairs[i].second][pairs[i].first] = static_cast<int>(i);
  }
  long double sum = 0;
  std::int64_t perms = 0;
  do {
    std::vector<char> seen(pairs.size(), 0);
    int cycles = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (seen[i]) continue;
      ++cycles;
      std::size_t j = i;
      while (!seen[j]) {
        seen[j] = 1;
        j = static_cast<std::size_t>(index[perm[pairs[j].first]][perm[pairs[j].second]]);
      }
    }
    sum += static_cast<long double>(std::uint64_t{1} << cycles);
    ++perms;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<std::int64_t>(sum / perms + 0.5L);
}

inline std::vector<std::pair<int, int>> edges(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (auto [i, j] : all_pairs(g.order()))
    if (g.has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

// Largest set of pairwise disjoint edges, by include/exclude over edges.
inline int max_matching(const Graph& g) {
  const auto es = edges(g);
  int best = 0;
  std::vector<char> used(g.order(), 0);
  auto rec = [&](auto&& self, std::size_t i, int size) -> void {
    if (size + static_cast<int>(es.size() - i) <= best) return;
    if (i == es.size()) {
      best = std::max(best, size);
      return;
    }
    auto [u, v] = es[i];
    if (!used[u] && !used[v]) {
      used[u] = used[v] = 1;
      self(self, i + 1, size + 1);
      used[u] = used[v] = 0;
    }
    self(self, i + 1, size);
  };
  rec(rec, 0, 0);
  return best;
}

// Some injection V(pattern) -> V(host) maps every pattern edge to a host edge.
inline bool contains(const Graph& host, const Graph& pattern) {
  const int n = host.order();
  const int k = pattern.order();
  if (k > n) return false;
  std::vector<int> image(k, -1);
  std::vector<char> taken(n, 0);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == k) return true;
    for (int h = 0; h < n; ++h) {
      if (taken[h]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (pattern.has_edge(u, v) && !host.has_edge(image[u], h)) ok = false;
      if (!ok) continue;
      taken[h] = 1;
      image[v] = h;
      if (self(self, v + 1)) return true;
      taken[h] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

inline bool is_clique(const Graph& g, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j])) return false;
  return true;
}

// N_r(g) by testing every vertex subset of size r.
inline std::int64_t clique_count(const Graph& g, int r) {
  const int n = g.order();
  std::int64_t count = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (std::popcount(m) != r) continue;
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1) s.push_back(v);
    count += is_clique(g, s);
  }
  return count;
}

// Smallest k admitting a proper colouring, trying all k^n assignments.
inline int chromatic(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> c(n, 0);
    while (true) {
      bool proper = true;
      for (auto [u, v] : edges(g))
        if (c[u] == c[v]) proper = false;
      if (proper) return k;
      int i = 0;
      while (i < n && ++c[i] == k) c[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

// Vertex sets of size <= p touching every edge, in increasing mask order.
inline std::vector<std::uint64_t> vertex_covers(const Graph& g, int p) {
  std::vector<std::uint64_t> out;
  const auto es = edges(g);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
    if (std::popcount(m) > p) continue;
    bool ok = true;
    for (auto [u, v] : es)
      if (!(m >> u & 1) && !(m >> v & 1)) ok = false;
    if (ok) out.push_back(m);
  }
  return out;
}

// min over B of |B| + sum floor(|C|/2) over components C of g - B.
inline int tutte_berge_min(const Graph& g) {
  const int n = g.order();
  int best = n;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    std::vector<int> comp(n, -1);
    int value = std::popcount(b);
    for (int v = 0; v < n; ++v) {
      if ((b >> v & 1) || comp[v] >= 0) continue;
      std::vector<int> stack{v};
      comp[v] = v;
      int size = 0;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        ++size;
        for (int y = 0; y < n; ++y)
          if (!(b >> y & 1) && comp[y] < 0 && g.has_edge(x, y)) {
            comp[y] = v;
            stack.push_back(y);
          }
      }
      value += size / 2;
    }
    best = std::min(best, value);
  }
  return best;
}

struct ExBrute {
  std::int64_t value = -1;
  std::set<std::uint64_t> witness_keys;  // canonical_key of each extremal class
};

// ex(n, K_r, patterns) over all labelled graphs. n <= 7.
inline ExBrute ex_brute(int n, int r, const std::vector<Graph>& patterns) {
  ExBrute out;
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t m = 0; m < total; ++m) {
    const Graph g = from_mask(n, m);
    bool free = true;
    for (const auto& p : patterns)
      if (contains(g, p)) {
        free = false;
        break;
      }
    if (!free) continue;
    const std::int64_t v = r == 2 ? std::popcount(m) : clique_count(g, r);
    if (v > out.value) {
      out.value = v;
      out.witness_keys.clear();
    }
    if (v == out.value) out.witness_keys.insert(canonical_key(g));
  }
  return out;
}

}  // namespace oracle
