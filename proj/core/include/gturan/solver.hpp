#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gturan/containment.hpp"
#include "gturan/graph.hpp"

namespace gturan {

class CeilingError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Raised when no n-vertex graph avoids the family (e.g. it contains K_1).
class NoAdmissibleGraph : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr int kHardCeiling = 10;

struct SolverOptions {
  /// Largest n the enumerator accepts; 0 selects default_ceiling(family).
  int ceiling = 0;
  /// Worker threads; 0 uses the hardware concurrency.
  int workers = 1;
  /// Edge count at which the search tree is cut into independent jobs. Fixed
  /// independently of `workers` so the output order never depends on it.
  int split_depth = 4;
  /// Search with minimalize(family), which has identical freeness.
  bool minimalize_family = true;
};

/// 10 when the family prunes hard (a member fits inside K_3 or M_2), 9 otherwise.
int default_ceiling(const GraphFamily& fam);

/// One representative per isomorphism class of fam-free n-vertex graphs, by
/// canonical edge augmentation. The order is deterministic and the same for
/// every worker count.
std::vector<Graph> enumerate_free(int n, const GraphFamily& fam, const SolverOptions& options = {});

/// Sequential streaming form of enumerate_free.
void for_each_free(int n, const GraphFamily& fam, const std::function<void(const Graph&)>& visit,
                   const SolverOptions& options = {});

struct ExResult {
  int n = 0;
  int r = 0;
  std::string family_label;
  std::vector<Graph> family;     // canonical members, sorted
  std::int64_t value = 0;
  std::vector<Graph> witnesses;  // canonical graphs attaining value, sorted
  std::int64_t enumerated_count = 0;
  double elapsed_seconds = 0.0;  // not part of the result's identity
};

/// ex(n, K_r, fam) with every extremal graph up to isomorphism. r = 1 is
/// accepted (it counts vertices) so profiles over K_{r-1} work for r = 2.
ExResult ex_general(int n, int r, const GraphFamily& fam, const SolverOptions& options = {});

struct ExProfile {
  /// (p, ex(p, K_{r-1}, F[p])) for 1 <= p < min(s + 1, p(F)).
  std::vector<std::pair<int, std::int64_t>> values;
  /// Smallest p attaining the maximum; empty when the range is empty.
  std::optional<int> argmax;
};

ExProfile ex_profile(const Graph& f, int r, int s, const SolverOptions& options = {});

}  // namespace gturan
