#include "gturan/covering.hpp"

#include <stdexcept>

#include "gturan/invariants.hpp"

namespace gturan {

int CountOrInfinity::value() const {
  if (!value_) throw std::logic_error("CountOrInfinity: value of infinity requested");
  return *value_;
}

std::string CountOrInfinity::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

std::strong_ordering operator<=>(const CountOrInfinity& a, const CountOrInfinity& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
  return *a.value_ <=> *b.value_;
}

namespace {

bool is_covering(const Graph& f, VertexSet s) {
  const VertexSet rest = f.vertices() & ~s;
  bool ok = true;
  for_each_vertex(rest, [&](int v) { ok = ok && (f.neighbors(v) & rest) == 0; });
  return ok;
}

// Calls fn(S) for each k-subset of {0..n-1} in lexicographic order; stops
// early when fn returns false.
template <class Fn>
bool for_each_subset(int n, int k, Fn&& fn) {
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  if (k > n) return true;
  while (true) {
    if (!fn(from_vertex_list(pick))) return false;
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return true;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

std::vector<VertexSet> all_coverings(const Graph& f, int p) {
  if (p < 0) throw std::invalid_argument("all_coverings: negative size bound");
  std::vector<VertexSet> out;
  for (int k = 0; k <= std::min(p, f.order()); ++k) {
    for_each_subset(f.order(), k, [&](VertexSet s) {
      if (is_covering(f, s)) out.push_back(s);
      return true;
    });
  }
  return out;
}

CoveringReport covering_report(const Graph& f, int p, const std::string& name) {
  CoveringReport report;
  report.graph = f;
  report.p = p;
  report.covers = all_coverings(f, p);
  report.family = GraphFamily("F[" + std::to_string(p) + "] of " + name);
  if (report.covers.empty()) {
    report.fallback_used = true;
    report.family.add(complete(p + 1));
  } else {
    for (VertexSet s : report.covers) report.family.add(induced(f, s));
  }
  return report;
}

GraphFamily family_fp(const Graph& f, int p, const std::string& name) { return covering_report(f, p, name).family; }

CountOrInfinity p_of_f(const Graph& f) {
  if (!is_bipartite(f)) return CountOrInfinity::infinite();
  for (int k = 0; k <= f.order(); ++k) {
    bool found = false;
    for_each_subset(f.order(), k, [&](VertexSet s) {
      found = is_independent(f, s) && is_covering(f, s);
      return !found;
    });
    if (found) return CountOrInfinity::finite(k);
  }
  throw std::logic_error("p_of_f: bipartite graph without an independent covering");
}

bool is_color_critical(const Graph& f) {
  const int chi = chromatic_number(f);
  for (auto [u, v] : f.edges())
    if (chromatic_number(remove_edge(f, u, v)) < chi) return true;
  return false;
}

}  // namespace gturan
