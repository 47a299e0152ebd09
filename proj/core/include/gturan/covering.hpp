#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "gturan/containment.hpp"
#include "gturan/graph.hpp"

namespace gturan {

/// A count that may be infinite. Infinity is a distinct state rather than a
/// sentinel integer, so it cannot leak into arithmetic.
class CountOrInfinity {
 public:
  static CountOrInfinity infinite() { return CountOrInfinity(); }
  static CountOrInfinity finite(int value) { return CountOrInfinity(value); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::logic_error when infinite.
  int value() const;

  std::string to_string() const;

  friend bool operator==(const CountOrInfinity&, const CountOrInfinity&) = default;
  friend std::strong_ordering operator<=>(const CountOrInfinity& a, const CountOrInfinity& b);
  friend bool operator==(const CountOrInfinity& a, int b) { return a.value_ == b; }
  friend std::strong_ordering operator<=>(const CountOrInfinity& a, int b) { return a <=> finite(b); }

 private:
  CountOrInfinity() = default;
  explicit CountOrInfinity(int v) : value_(v) {}
  std::optional<int> value_;
};

/// Every vertex cover S of f with |S| <= p, by increasing size and then
/// lexicographically. S = V(f) qualifies when |V(f)| <= p.
std::vector<VertexSet> all_coverings(const Graph& f, int p);

struct CoveringReport {
  Graph graph;
  int p = 0;
  std::vector<VertexSet> covers;
  GraphFamily family;
  bool fallback_used = false;
};

/// F[p]: the graphs induced by coverings of size at most p, deduplicated up
/// to isomorphism; {K_{p+1}} when there is no such covering. Members are
/// kept un-minimalised.
CoveringReport covering_report(const Graph& f, int p, const std::string& name = "F");
GraphFamily family_fp(const Graph& f, int p, const std::string& name = "F");

/// Minimum independent covering size for bipartite f; infinite otherwise.
CountOrInfinity p_of_f(const Graph& f);

/// Some single edge deletion lowers the chromatic number.
bool is_color_critical(const Graph& f);

}  // namespace gturan
