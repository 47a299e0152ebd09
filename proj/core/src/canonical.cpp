#include "gturan/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace gturan {

namespace {

using Cells = std::vector<VertexSet>;
using Certificate = std::vector<VertexSet>;

/// Splits every cell by neighbour counts into every other cell until the
/// ordered partition is equitable. New parts replace the old cell in place,
/// ordered by ascending count, so the result is label-invariant.
void refine(const Graph& g, Cells& cells) {
  const auto rows = g.rows();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 0; w < cells.size(); ++w) {
      const VertexSet splitter = cells[w];
      for (std::size_t x = 0; x < cells.size(); ++x) {
        const VertexSet cell = cells[x];
        if (popcount(cell) < 2) continue;
        std::array<VertexSet, kMaxVertices + 1> by_count{};
        int lo = kMaxVertices + 1;
        int hi = -1;
        for_each_vertex(cell, [&](int v) {
          const int c = popcount(rows[static_cast<std::size_t>(v)] & splitter);
          by_count[static_cast<std::size_t>(c)] |= bit(v);
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        });
        if (lo == hi) continue;
        Cells parts;
        for (int c = lo; c <= hi; ++c)
          if (by_count[static_cast<std::size_t>(c)] != 0) parts.push_back(by_count[static_cast<std::size_t>(c)]);
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), parts.begin(), parts.end());
        changed = true;
      }
    }
  }
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run(std::vector<Permutation>* automorphisms) {
    Cells root;
    if (n_ > 0) root.push_back(g_.vertices());
    std::vector<int> path;
    explore(root, path);

    CanonicalForm out;
    out.labeling.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) out.labeling[static_cast<std::size_t>(best_lab_[static_cast<std::size_t>(i)])] = i;
    out.graph = Graph(n_);
    for (int i = 0; i < n_; ++i) {
      for_each_vertex(best_cert_[static_cast<std::size_t>(i)] & ~first_n(i + 1),
                      [&](int j) { out.graph.connect(i, j); });
    }
    if (automorphisms != nullptr) *automorphisms = generators_;
    return out;
  }

 private:
  static constexpr int kNoJump = -1;

  Certificate certificate(const std::vector<int>& lab) const {
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) pos[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])] = i;
    Certificate cert(static_cast<std::size_t>(n_), 0);
    const auto rows = g_.rows();
    for (int i = 0; i < n_; ++i) {
      VertexSet row = 0;
      for_each_vertex(rows[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])],
                      [&](int w) { row |= bit(pos[static_cast<std::size_t>(w)]); });
      cert[static_cast<std::size_t>(i)] = row;
    }
    return cert;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    const auto mm = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
    return static_cast<int>(mm.first - a.begin());
  }

  // Automorphism mapping leaf `from` onto leaf `to` (both position -> vertex).
  Permutation mapping(const std::vector<int>& from, const std::vector<int>& to) const {
    Permutation p(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) p[static_cast<std::size_t>(from[static_cast<std::size_t>(i)])] = to[static_cast<std::size_t>(i)];
    return p;
  }

  void record(Permutation p) {
    bool identity = true;
    for (int v = 0; v < n_ && identity; ++v) identity = p[static_cast<std::size_t>(v)] == v;
    if (!identity) generators_.push_back(std::move(p));
  }

  int leaf(const Cells& cells, const std::vector<int>& path) {
    std::vector<int> lab;
    lab.reserve(cells.size());
    for (VertexSet c : cells) lab.push_back(lowest(c));
    Certificate cert = certificate(lab);
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = best_lab_ = lab;
      first_cert_ = best_cert_ = cert;
      first_path_ = best_path_ = path;
      return kNoJump;
    }
    if (cert == first_cert_) {
      record(mapping(first_lab_, lab));
      return common_prefix(path, first_path_);
    }
    if (cert == best_cert_) {
      record(mapping(best_lab_, lab));
      return common_prefix(path, best_path_);
    }
    if (cert > best_cert_) {
      best_lab_ = std::move(lab);
      best_cert_ = std::move(cert);
      best_path_ = path;
    }
    return kNoJump;
  }

  bool fixes(const Permutation& p, const std::vector<int>& path) const {
    return std::all_of(path.begin(), path.end(), [&](int v) { return p[static_cast<std::size_t>(v)] == v; });
  }

  // True if v shares an orbit with an already explored sibling under the
  // automorphisms known to fix the current path pointwise.
  bool equivalent_to_explored(int v, VertexSet explored, const std::vector<int>& path) const {
    if (explored == 0 || generators_.empty()) return false;
    std::vector<Permutation> stabiliser;
    for (const auto& p : generators_)
      if (fixes(p, path)) stabiliser.push_back(p);
    if (stabiliser.empty()) return false;
    const std::vector<int> rep = orbits(n_, stabiliser);
    bool hit = false;
    for_each_vertex(explored, [&](int w) { hit = hit || rep[static_cast<std::size_t>(w)] == rep[static_cast<std::size_t>(v)]; });
    return hit;
  }

  int explore(Cells cells, std::vector<int>& path) {
    refine(g_, cells);
    if (static_cast<int>(cells.size()) == n_) return leaf(cells, path);

    const auto target = static_cast<std::size_t>(
        std::find_if(cells.begin(), cells.end(), [](VertexSet c) { return popcount(c) > 1; }) - cells.begin());
    const int level = static_cast<int>(path.size());
    const VertexSet cell = cells[target];
    VertexSet explored = 0;
    for (int v : to_vertex_list(cell)) {
      if (equivalent_to_explored(v, explored, path)) continue;
      explored |= bit(v);
      Cells child = cells;
      child[target] = bit(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, cell & ~bit(v));
      path.push_back(v);
      const int jump = explore(std::move(child), path);
      path.pop_back();
      if (jump != kNoJump && jump < level) return jump;
    }
    return kNoJump;
  }

  const Graph& g_;
  int n_;
  bool have_first_ = false;
  std::vector<int> first_lab_, best_lab_;
  Certificate first_cert_, best_cert_;
  std::vector<int> first_path_, best_path_;
  std::vector<Permutation> generators_;
};

int find_root(std::vector<int>& parent, int v) {
  while (parent[static_cast<std::size_t>(v)] != v) {
    parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    v = parent[static_cast<std::size_t>(v)];
  }
  return v;
}

}  // namespace

std::vector<int> orbits(int n, const std::vector<Permutation>& generators) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& p : generators) {
    for (int v = 0; v < n; ++v) {
      const int a = find_root(parent, v);
      const int b = find_root(parent, p[static_cast<std::size_t>(v)]);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<int> rep(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) rep[static_cast<std::size_t>(v)] = find_root(parent, v);
  return rep;
}

CanonicalForm canonical_form(const Graph& g, std::vector<Permutation>* automorphisms) {
  return Search(g).run(automorphisms);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_graph(a) == canonical_graph(b);
}

}  // namespace gturan
