#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gturan/named.hpp"
#include "gturan/solver.hpp"

namespace gturan {

enum class Verdict { pass, fail, small_n_exception, hypothesis_unmet, rejected };
enum class Uniqueness { pass, fail, small_n_exception, not_checked };

std::string to_string(Verdict v);
std::string to_string(Uniqueness u);

using ParamValue = std::variant<std::int64_t, std::string>;

struct ReportPoint {
  std::vector<std::pair<std::string, ParamValue>> params;
  std::optional<std::int64_t> brute;
  std::optional<std::int64_t> formula;
  Verdict verdict = Verdict::fail;
  Uniqueness uniqueness = Uniqueness::not_checked;
  std::vector<std::string> witnesses;  // graph6 of canonical witnesses
  std::string note;
  /// Extra named values, e.g. alternative closed forms.
  std::vector<std::pair<std::string, std::string>> details;

  std::optional<std::int64_t> param_int(const std::string& key) const;
  std::optional<std::string> detail(const std::string& key) const;
};

struct ReportSummary {
  int pass = 0;
  int fail = 0;
  int small_n_exception = 0;
  int hypothesis_unmet = 0;
  int rejected = 0;
  int uniqueness_fail = 0;
  int uniqueness_small_n_exception = 0;
  /// Smallest grid value of the size parameter from which every point passes.
  std::optional<std::int64_t> smallest_passing_n;
  std::vector<std::string> notes;
};

struct TheoremReport {
  std::string theorem;
  std::string grid;
  std::vector<ReportPoint> points;
  ReportSummary summary;
  /// Wall time of the run; kept out of the serialised comparison payload.
  double elapsed_seconds = 0.0;

  /// No point has a failing value or uniqueness verdict.
  bool passed() const { return summary.fail == 0 && summary.uniqueness_fail == 0; }
  std::vector<const ReportPoint*> failures() const;
};

struct VerifyOptions {
  SolverOptions solver;
};

/// Inclusive integer range a..b.
struct Range {
  int lo = 0;
  int hi = -1;
  std::vector<int> values() const;
  bool empty() const { return hi < lo; }
};

/// ex(n, M_{s+1}) against max{e(G(n,s,K_{s+1})), e(K_{2s+1})}, with the
/// extremal set checked against the candidates attaining the maximum.
TheoremReport verify_erdos_gallai(const std::vector<std::pair<int, int>>& grid, const VerifyOptions& options = {});

struct MaHouPoint {
  int n, s, r, k;
};

/// ex(n, K_r, {M_{s+1}, K_{k+1}}) against max{N_r(K_{2s+1}), N_r(G(n,s,K_k))}
/// as stated. Each point also records the Turán form with T_k(2s+1) in
/// place of K_{2s+1} under the detail key "turan_form".
TheoremReport verify_ma_hou(const std::vector<MaHouPoint>& grid, const VerifyOptions& options = {});

/// Exact form ex(s,K_{r-1},F[s])(n-s) + ex(s,K_r,F[s]) and uniqueness of
/// G(n,s,F[s]), gated on p(F) >= s+1 and on p = s attaining the maximum of
/// the profile (ties with smaller p allowed; the smallest argmax is recorded).
TheoremReport verify_main_theorem_exact(const NamedGraph& f, int s, int r, Range n_range,
                                        const VerifyOptions& options = {});

/// ex(n, {M_{s+1}, F}) - (p(F) - 1) n over the range, for bipartite F with
/// p(F) <= s. Passes when the difference is constant on a trailing run of at
/// least two grid points; earlier deviations are small-n exceptions.
TheoremReport verify_gerbner_slope(const NamedGraph& f, int s, Range n_range, const VerifyOptions& options = {});

/// Balanced forest F on 2p <= 2s vertices: value (p-1)(n-p+1) + ex(p-1, F[p-1]),
/// the perfect-matching dichotomy for ex(p-1, F[p-1]) (first point, check =
/// "perfect-matching"), and the extremal set.
TheoremReport verify_forest_theorem(const NamedGraph& f, int s, Range n_range, const VerifyOptions& options = {});

/// For every isomorphism class on n vertices, n in range (n <= 7), the
/// minimum Tutte-Berge value equals the matching number.
TheoremReport verify_tutte_berge(Range n_range, const VerifyOptions& options = {});

/// Component checks for colour-critical F with chi(F) = k+1 >= max(r+1, 4):
/// every non-fallback F[p] member has chi >= k, and
/// ex(p, K_{r-1}, F[p]) = N_{r-1}(T_{k-1}(p)).
TheoremReport verify_color_critical_components(const NamedGraph& f, int r, Range p_range,
                                               const VerifyOptions& options = {});

/// Balanced forest: acyclic, at least one edge, every component tree has
/// colour classes of equal size.
bool is_balanced_forest(const Graph& f);

}  // namespace gturan
