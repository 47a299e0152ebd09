#include "gturan/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "gturan/canonical.hpp"
#include "gturan/invariants.hpp"

namespace gturan {

namespace {

std::int64_t lower_count(const Graph& q, int r) { return r - 1 >= 1 ? count_cliques(q, r - 1) : 1; }

}  // namespace

GnsConstruction build_g_n_s(int n, int s, const GraphFamily& fam, Objective objective, const SolverOptions& options) {
  if (s < 0 || n < s) throw std::invalid_argument("build_g_n_s: need 0 <= s <= n");
  if (n > kMaxVertices) throw CapacityError("build_g_n_s: n exceeds capacity");
  const int r = objective.clique_order();
  if (r < 2) throw std::invalid_argument("build_g_n_s: clique order must be at least 2");

  const std::vector<Graph> fillings = enumerate_free(s, fam, options);
  if (fillings.empty()) throw NoAdmissibleGraph("build_g_n_s: no " + std::to_string(s) + "-vertex graph avoids " + fam.label());

  GnsConstruction out;
  std::int64_t best = -1;
  std::vector<Graph> optimal;
  for (const Graph& q : fillings) {
    const std::int64_t low = lower_count(q, r);
    const std::int64_t high = count_cliques(q, r);
    out.separate_lower = std::max(out.separate_lower, low);
    out.separate_upper = std::max(out.separate_upper, high);
    const std::int64_t value = low * (n - s) + high;
    if (value > best) {
      best = value;
      optimal.clear();
    }
    if (value == best) optimal.push_back(canonical_graph(q));
  }
  std::sort(optimal.begin(), optimal.end());
  out.optimal_fillings = optimal;
  out.filling = optimal.front();
  out.value = best;
  out.graph = join_all(out.filling, empty(n - s));
  out.combined_matches_separate = best == out.separate_lower * (n - s) + out.separate_upper;
  return out;
}

Graph build_clique_candidate(int s) {
  if (s < 0) throw std::invalid_argument("build_clique_candidate: negative s");
  if (2 * s + 1 > kMaxVertices) throw CapacityError("build_clique_candidate: 2s+1 exceeds capacity");
  return complete(2 * s + 1);
}

Graph build_forest_extremal(int n, int p, int t, const GraphFamily& fam, const SolverOptions& options) {
  if (p < 1 || t < 0) throw std::invalid_argument("build_forest_extremal: need p >= 1 and t >= 0");
  const int clique = 2 * p - 1;
  const int core = n - t * clique;
  if (core < p - 1) throw std::invalid_argument("build_forest_extremal: need n >= (p-1) + t(2p-1)");
  if (n > kMaxVertices) throw CapacityError("build_forest_extremal: n exceeds capacity");
  Graph g = build_g_n_s(core, p - 1, fam, Objective::edges(), options).graph;
  for (int i = 0; i < t; ++i) g = disjoint_union(g, complete(clique));
  return g;
}

void validate(const ConstructionSpec& spec) {
  switch (spec.kind) {
    case ConstructionSpec::Kind::g_n_s:
      if (spec.s < 0 || spec.n < spec.s) throw std::invalid_argument("g_n_s: need 0 <= s <= n");
      break;
    case ConstructionSpec::Kind::clique_2s1:
      if (spec.s < 0) throw std::invalid_argument("clique: need s >= 0");
      break;
    case ConstructionSpec::Kind::forest_extremal:
      if (spec.p < 1 || spec.t < 0 || spec.n < (spec.p - 1) + spec.t * (2 * spec.p - 1))
        throw std::invalid_argument("forest_extremal: need p >= 1, t >= 0, n >= (p-1) + t(2p-1)");
      break;
    case ConstructionSpec::Kind::turan:
      if (spec.k < 1 || spec.n < 0) throw std::invalid_argument("turan: need k >= 1 and n >= 0");
      break;
  }
}

Graph build(const ConstructionSpec& spec, const SolverOptions& options) {
  validate(spec);
  switch (spec.kind) {
    case ConstructionSpec::Kind::g_n_s:
      return build_g_n_s(spec.n, spec.s, spec.family, spec.objective, options).graph;
    case ConstructionSpec::Kind::clique_2s1:
      return build_clique_candidate(spec.s);
    case ConstructionSpec::Kind::forest_extremal:
      return build_forest_extremal(spec.n, spec.p, spec.t, spec.family, options);
    case ConstructionSpec::Kind::turan:
      return turan_graph(spec.n, spec.k);
  }
  throw std::logic_error("unknown construction kind");
}

std::string to_string(ConstructionSpec::Kind kind) {
  switch (kind) {
    case ConstructionSpec::Kind::g_n_s: return "gns";
    case ConstructionSpec::Kind::clique_2s1: return "clique";
    case ConstructionSpec::Kind::forest_extremal: return "forest-extremal";
    case ConstructionSpec::Kind::turan: return "turan";
  }
  return "?";
}

ConstructionSpec::Kind construction_kind_from_string(const std::string& text) {
  if (text == "gns") return ConstructionSpec::Kind::g_n_s;
  if (text == "clique") return ConstructionSpec::Kind::clique_2s1;
  if (text == "forest-extremal") return ConstructionSpec::Kind::forest_extremal;
  if (text == "turan") return ConstructionSpec::Kind::turan;
  throw std::invalid_argument("unknown construction kind '" + text + "'");
}

}  // namespace gturan
