#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gturan/containment.hpp"
#include "gturan/graph.hpp"
#include "gturan/solver.hpp"

namespace gturan {

/// What a filling of the s-part maximises. For clique counts of order r the
/// objective is N_{r-1}(Q)(n - s) + N_r(Q), which is exactly N_r of the
/// assembled graph; r = 2 is the edge count.
struct Objective {
  enum class Kind { edges, clique_count };
  Kind kind = Kind::edges;
  int r = 2;

  static Objective edges() { return {Kind::edges, 2}; }
  static Objective clique_count(int r) { return {Kind::clique_count, r}; }
  int clique_order() const { return kind == Kind::edges ? 2 : r; }
};

/// G(n, s, fam) together with how its filling was chosen.
struct GnsConstruction {
  Graph graph;    // s-part is vertices 0..s-1
  Graph filling;  // canonical fam-free graph on s vertices
  std::int64_t value = 0;
  /// Every optimal filling up to isomorphism, sorted; `filling` is the first.
  std::vector<Graph> optimal_fillings;
  /// ex(s, K_{r-1}, fam) and ex(s, K_r, fam), maximised separately.
  std::int64_t separate_lower = 0;
  std::int64_t separate_upper = 0;
  /// value == separate_lower * (n - s) + separate_upper, i.e. one filling
  /// attains both maxima.
  bool combined_matches_separate = true;
};

/// K_{s, n-s} with its s-part replaced by an exhaustively optimal fam-free
/// filling. Throws NoAdmissibleGraph if no s-vertex graph avoids fam.
GnsConstruction build_g_n_s(int n, int s, const GraphFamily& fam, Objective objective,
                            const SolverOptions& options = {});

/// K_{2s+1}.
Graph build_clique_candidate(int s);

/// G(n - t(2p-1), p-1, fam) with edge objective, plus t disjoint K_{2p-1}.
Graph build_forest_extremal(int n, int p, int t, const GraphFamily& fam, const SolverOptions& options = {});

struct ConstructionSpec {
  enum class Kind { g_n_s, clique_2s1, forest_extremal, turan };
  Kind kind = Kind::g_n_s;
  int n = 0;
  int s = 0;
  int p = 0;
  int t = 0;
  int k = 0;  // parts, for turan
  GraphFamily family;
  Objective objective;
};

/// Checks the parameter constraints of a spec; throws std::invalid_argument.
void validate(const ConstructionSpec& spec);

Graph build(const ConstructionSpec& spec, const SolverOptions& options = {});

std::string to_string(ConstructionSpec::Kind kind);
ConstructionSpec::Kind construction_kind_from_string(const std::string& text);

}  // namespace gturan
