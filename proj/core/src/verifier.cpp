#include "gturan/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "gturan/canonical.hpp"
#include "gturan/constructions.hpp"
#include "gturan/covering.hpp"
#include "gturan/graph6.hpp"
#include "gturan/invariants.hpp"

namespace gturan {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::small_n_exception: return "small-n-exception";
    case Verdict::hypothesis_unmet: return "hypothesis-unmet";
    case Verdict::rejected: return "rejected";
  }
  return "?";
}

std::string to_string(Uniqueness u) {
  switch (u) {
    case Uniqueness::pass: return "pass";
    case Uniqueness::fail: return "fail";
    case Uniqueness::small_n_exception: return "small-n-exception";
    case Uniqueness::not_checked: return "not-checked";
  }
  return "?";
}

std::optional<std::int64_t> ReportPoint::param_int(const std::string& key) const {
  for (const auto& [k, v] : params)
    if (k == key && std::holds_alternative<std::int64_t>(v)) return std::get<std::int64_t>(v);
  return std::nullopt;
}

std::optional<std::string> ReportPoint::detail(const std::string& key) const {
  for (const auto& [k, v] : details)
    if (k == key) return v;
  return std::nullopt;
}

std::vector<const ReportPoint*> TheoremReport::failures() const {
  std::vector<const ReportPoint*> out;
  for (const auto& p : points)
    if (p.verdict == Verdict::fail || p.uniqueness == Uniqueness::fail) out.push_back(&p);
  return out;
}

std::vector<int> Range::values() const {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

bool is_balanced_forest(const Graph& f) {
  if (f.size() == 0) return false;
  const auto comps = components(f);
  if (f.size() != f.order() - static_cast<int>(comps.size())) return false;
  for (VertexSet comp : comps) {
    // BFS 2-colouring of the tree
    VertexSet side = bit(lowest(comp));
    VertexSet seen = side;
    VertexSet frontier = side;
    bool even = false;
    while (frontier != 0) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int v) { next |= f.neighbors(v); });
      next &= ~seen;
      seen |= next;
      even = !even;
      if (!even) side |= next;
      frontier = next;
    }
    if (2 * popcount(side) != popcount(comp)) return false;
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::string> g6_list(const std::vector<Graph>& graphs) {
  std::vector<std::string> out;
  out.reserve(graphs.size());
  for (const auto& g : graphs) out.push_back(to_graph6(g));
  return out;
}

std::set<Graph> canonical_set(const std::vector<Graph>& graphs) {
  std::set<Graph> out;
  for (const auto& g : graphs) out.insert(canonical_graph(g));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

void tally(TheoremReport& report) {
  auto& s = report.summary;
  s = ReportSummary{0, 0, 0, 0, 0, 0, 0, s.smallest_passing_n, s.notes};
  for (const auto& p : report.points) {
    switch (p.verdict) {
      case Verdict::pass: ++s.pass; break;
      case Verdict::fail: ++s.fail; break;
      case Verdict::small_n_exception: ++s.small_n_exception; break;
      case Verdict::hypothesis_unmet: ++s.hypothesis_unmet; break;
      case Verdict::rejected: ++s.rejected; break;
    }
    if (p.uniqueness == Uniqueness::fail) ++s.uniqueness_fail;
    if (p.uniqueness == Uniqueness::small_n_exception) ++s.uniqueness_small_n_exception;
  }
}

// Outcome of one point of a theorem that only claims validity for large n.
struct Observation {
  ReportPoint* point;
  std::int64_t n;
  bool value_ok;
  std::optional<bool> unique_ok;
};

// Points below the first n from which everything holds become small-n
// exceptions; if the top of the range fails there is no such n and every
// disagreement is a failure.
void settle_large_n(TheoremReport& report, std::vector<Observation> obs) {
  std::sort(obs.begin(), obs.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
  std::optional<std::int64_t> threshold;
  for (auto it = obs.rbegin(); it != obs.rend(); ++it) {
    if (!it->value_ok || it->unique_ok == false) break;
    threshold = it->n;
  }
  for (auto& o : obs) {
    const bool below = threshold && o.n < *threshold;
    o.point->verdict = o.value_ok ? Verdict::pass : (below ? Verdict::small_n_exception : Verdict::fail);
    if (o.unique_ok) {
      o.point->uniqueness = *o.unique_ok ? Uniqueness::pass : (below ? Uniqueness::small_n_exception : Uniqueness::fail);
    }
  }
  report.summary.smallest_passing_n = threshold;
  if (threshold && *threshold > obs.front().n) {
    report.summary.notes.push_back("small-n exceptions below n = " + std::to_string(*threshold));
  }
}

ReportPoint gated_point(std::vector<std::pair<std::string, ParamValue>> params, Verdict verdict, std::string note) {
  ReportPoint p;
  p.params = std::move(params);
  p.verdict = verdict;
  p.note = std::move(note);
  return p;
}

std::string profile_string(const ExProfile& profile) {
  std::vector<std::string> parts;
  for (auto [p, v] : profile.values) parts.push_back("(" + std::to_string(p) + "," + std::to_string(v) + ")");
  std::string out = "[" + join(parts, ",") + "]";
  if (profile.argmax.has_value()) out += ", smallest argmax t = " + std::to_string(profile.argmax.value_or(0));
  return out;
}

std::int64_t binom2(std::int64_t m) { return m * (m - 1) / 2; }

}  // namespace

TheoremReport verify_erdos_gallai(const std::vector<std::pair<int, int>>& grid, const VerifyOptions& options) {
  const auto start = Clock::now();
  TheoremReport report;
  report.theorem = "erdos-gallai";
  std::vector<std::string> g;
  for (auto [n, s] : grid) g.push_back("(" + std::to_string(n) + "," + std::to_string(s) + ")");
  report.grid = "(n,s) in {" + join(g, ",") + "}";

  for (auto [n, s] : grid) {
    std::vector<std::pair<std::string, ParamValue>> params{{"n", std::int64_t{n}}, {"s", std::int64_t{s}}};
    if (s < 1 || n < 2 * s + 1) {
      report.points.push_back(gated_point(params, Verdict::rejected, "requires s >= 1 and n >= 2s+1"));
      continue;
    }
    ReportPoint pt;
    pt.params = params;
    const ExResult brute = ex_general(n, 2, GraphFamily("M" + std::to_string(s + 1), {matching(s + 1)}), options.solver);

    const Graph split = build_g_n_s(n, s, GraphFamily("K" + std::to_string(s + 1), {complete(s + 1)}),
                                    Objective::edges(), options.solver)
                            .graph;
    const Graph clique = disjoint_union(build_clique_candidate(s), empty(n - 2 * s - 1));
    const std::int64_t formula = std::max(split.size(), clique.size());
    std::set<Graph> predicted;
    if (split.size() == formula) predicted.insert(canonical_graph(split));
    if (clique.size() == formula) predicted.insert(canonical_graph(clique));

    pt.brute = brute.value;
    pt.formula = formula;
    pt.witnesses = g6_list(brute.witnesses);
    pt.verdict = brute.value == formula ? Verdict::pass : Verdict::fail;
    pt.uniqueness = canonical_set(brute.witnesses) == predicted ? Uniqueness::pass : Uniqueness::fail;
    pt.details = {{"e(G(n,s,K_{s+1}))", std::to_string(split.size())}, {"e(K_{2s+1})", std::to_string(clique.size())}};
    report.points.push_back(std::move(pt));
  }
  tally(report);
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

TheoremReport verify_ma_hou(const std::vector<MaHouPoint>& grid, const VerifyOptions& options) {
  const auto start = Clock::now();
  TheoremReport report;
  report.theorem = "ma-hou";
  std::vector<std::string> g;
  for (const auto& q : grid)
    g.push_back("(" + std::to_string(q.n) + "," + std::to_string(q.s) + "," + std::to_string(q.r) + "," +
                std::to_string(q.k) + ")");
  report.grid = "(n,s,r,k) in {" + join(g, ",") + "}";

  int turan_mismatches = 0;
  for (const auto& q : grid) {
    std::vector<std::pair<std::string, ParamValue>> params{{"n", std::int64_t{q.n}},
                                                           {"s", std::int64_t{q.s}},
                                                           {"r", std::int64_t{q.r}},
                                                           {"k", std::int64_t{q.k}}};
    if (q.s < 1 || q.n < 2 * q.s + 1 || q.r < 2 || q.k < q.r) {
      report.points.push_back(gated_point(params, Verdict::rejected, "requires n >= 2s+1 and k >= r >= 2"));
      continue;
    }
    ReportPoint pt;
    pt.params = params;
    const GraphFamily fam("M" + std::to_string(q.s + 1) + ",K" + std::to_string(q.k + 1),
                          {matching(q.s + 1), complete(q.k + 1)});
    const ExResult brute = ex_general(q.n, q.r, fam, options.solver);

    const Graph clique = build_clique_candidate(q.s);
    const std::int64_t clique_term = count_cliques(clique, q.r);
    const std::int64_t split_term =
        build_g_n_s(q.n, q.s, GraphFamily("K" + std::to_string(q.k), {complete(q.k)}), Objective::clique_count(q.r),
                    options.solver)
            .value;
    const std::int64_t turan_term = count_cliques(turan_graph(2 * q.s + 1, q.k), q.r);
    const bool clique_admissible = !contains_subgraph(clique, complete(q.k + 1));
    const std::int64_t turan_form = std::max(turan_term, split_term);

    pt.brute = brute.value;
    pt.formula = std::max(clique_term, split_term);
    pt.witnesses = g6_list(brute.witnesses);
    pt.verdict = brute.value == *pt.formula ? Verdict::pass : Verdict::fail;
    pt.details = {{"N_r(K_{2s+1})", std::to_string(clique_term)},
                  {"N_r(G(n,s,K_k))", std::to_string(split_term)},
                  {"K_{2s+1}_admissible", clique_admissible ? "true" : "false"},
                  {"N_r(T_k(2s+1))", std::to_string(turan_term)},
                  {"turan_form", std::to_string(turan_form)},
                  {"turan_form_matches", turan_form == brute.value ? "true" : "false"}};
    if (!clique_admissible) pt.note = "K_{2s+1} contains K_{k+1}, so it is not an admissible host";
    if (turan_form != brute.value) ++turan_mismatches;
    report.points.push_back(std::move(pt));
  }
  report.summary.notes.push_back("form with T_k(2s+1) in place of K_{2s+1} disagrees at " +
                                 std::to_string(turan_mismatches) + " point(s)");
  tally(report);
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

TheoremReport verify_main_theorem_exact(const NamedGraph& f, int s, int r, Range n_range, const VerifyOptions& options) {
  const auto start = Clock::now();
  TheoremReport report;
  report.theorem = "main-exact";
  report.grid = "F=" + f.name + " s=" + std::to_string(s) + " r=" + std::to_string(r) + " n=" +
                std::to_string(n_range.lo) + ".." + std::to_string(n_range.hi);
  auto params_for = [&](int n) {
    return std::vector<std::pair<std::string, ParamValue>>{
        {"F", f.name}, {"s", std::int64_t{s}}, {"r", std::int64_t{r}}, {"n", std::int64_t{n}}};
  };

  std::string reject;
  if (f.graph.size() <= 1) reject = "degenerate forbidden graph (at most one edge)";
  if (s < 1 || r < 2) reject = "requires s >= 1 and r >= 2";
  if (!reject.empty()) {
    for (int n : n_range.values()) report.points.push_back(gated_point(params_for(n), Verdict::rejected, reject));
    tally(report);
    return report;
  }

  const CountOrInfinity pf = p_of_f(f.graph);
  std::string unmet;
  ExProfile profile{};
  if (pf < s + 1) {
    unmet = "p(F) = " + pf.to_string() + " < s+1";
  } else {
    profile = ex_profile(f.graph, r, s, options.solver);
    std::int64_t best = 0;
    for (auto [p, v] : profile.values) best = std::max(best, v);
    if (profile.values.empty() || profile.values.back().first != s || profile.values.back().second != best) {
      unmet = "profile maximum not attained at p = s";
    }
  }
  report.summary.notes.push_back("p(F) = " + pf.to_string());
  if (!profile.values.empty()) report.summary.notes.push_back("profile ex(p,K_{r-1},F[p]) = " + profile_string(profile));
  if (!unmet.empty()) {
    for (int n : n_range.values()) report.points.push_back(gated_point(params_for(n), Verdict::hypothesis_unmet, unmet));
    tally(report);
    return report;
  }

  const GraphFamily fs = family_fp(f.graph, s, f.name);
  const std::int64_t slope = profile.values.back().second;
  const std::int64_t offset = ex_general(s, r, fs, options.solver).value;
  GraphFamily host_family("M" + std::to_string(s + 1) + "," + f.name, {matching(s + 1), f.graph});

  std::vector<Observation> obs;
  report.points.reserve(n_range.values().size());
  for (int n : n_range.values()) {
    if (n < s) {
      report.points.push_back(gated_point(params_for(n), Verdict::rejected, "requires n >= s"));
      continue;
    }
    ReportPoint pt;
    pt.params = params_for(n);
    const std::int64_t formula = slope * (n - s) + offset;
    const GnsConstruction g = build_g_n_s(n, s, fs, Objective::clique_count(r), options.solver);
    const ExResult brute = ex_general(n, r, host_family, options.solver);
    pt.brute = brute.value;
    pt.formula = formula;
    pt.witnesses = g6_list(brute.witnesses);
    pt.details = {{"ex(s,K_{r-1},F[s])", std::to_string(slope)},
                  {"ex(s,K_r,F[s])", std::to_string(offset)},
                  {"N_r(G(n,s,F[s]))", std::to_string(g.value)}};
    if (!g.combined_matches_separate || g.value != formula) {
      pt.note = "no single filling attains both ex(s,K_{r-1},F[s]) and ex(s,K_r,F[s])";
    }
    const bool unique_ok = canonical_set(brute.witnesses) == std::set<Graph>{canonical_graph(g.graph)};
    if (!unique_ok && formula == 0) pt.note = "degenerate: every admissible graph attains 0";
    report.points.push_back(std::move(pt));
    obs.push_back({nullptr, n, brute.value == formula, unique_ok});
  }
  // Pointers are taken once the vector is final.
  std::size_t j = 0;
  for (auto& p : report.points)
    if (p.verdict != Verdict::rejected || p.brute) obs[j++].point = &p;
  settle_large_n(report, obs);
  tally(report);
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

TheoremReport verify_gerbner_slope(const NamedGraph& f, int s, Range n_range, const VerifyOptions& options) {
  const auto start = Clock::now();
  TheoremReport report;
  report.theorem = "gerbner";
  report.grid = "F=" + f.name + " s=" + std::to_string(s) + " n=" + std::to_string(n_range.lo) + ".." +
                std::to_string(n_range.hi);
  auto params_for = [&](int n) {
    return std::vector<std::pair<std::string, ParamValue>>{{"F", f.name}, {"s", std::int64_t{s}}, {"n", std::int64_t{n}}};
  };
  const CountOrInfinity pf = p_of_f(f.graph);
  std::string reject;
  Verdict gate = Verdict::rejected;
  if (f.graph.size() <= 1) {
    reject = "degenerate forbidden graph (at most one edge)";
  } else if (pf.is_infinite() || pf > s) {
    reject = "requires bipartite F with p(F) <= s (p(F) = " + pf.to_string() + ")";
    gate = Verdict::hypothesis_unmet;
  }
  if (!reject.empty()) {
    for (int n : n_range.values()) report.points.push_back(gated_point(params_for(n), gate, reject));
    tally(report);
    return report;
  }

  const std::int64_t slope = pf.value() - 1;
  const GraphFamily fam("M" + std::to_string(s + 1) + "," + f.name, {matching(s + 1), f.graph});
  std::vector<std::int64_t> diffs;
  for (int n : n_range.values()) {
    ReportPoint pt;
    pt.params = params_for(n);
    const ExResult brute = ex_general(n, 2, fam, options.solver);
    pt.brute = brute.value;
    pt.witnesses = g6_list(brute.witnesses);
    diffs.push_back(brute.value - slope * n);
    pt.details = {{"difference", std::to_string(diffs.back())}};
    report.points.push_back(std::move(pt));
  }
  if (!diffs.empty()) {
    const std::int64_t c = diffs.back();
    std::size_t run = 0;
    while (run < diffs.size() && diffs[diffs.size() - 1 - run] == c) ++run;
    const bool constancy = run >= 2;
    for (std::size_t i = 0; i < diffs.size(); ++i) {
      auto& pt = report.points[i];
      pt.formula = slope * *pt.param_int("n") + c;
      const bool in_run = i + run >= diffs.size();
      if (!constancy) {
        pt.verdict = Verdict::fail;
        pt.note = "no trailing run of constant differences";
      } else {
        pt.verdict = in_run ? Verdict::pass : Verdict::small_n_exception;
      }
    }
    if (constancy) {
      report.summary.smallest_passing_n = report.points[diffs.size() - run].param_int("n");
      report.summary.notes.push_back("observed constant " + std::to_string(c) + " over the last " +
                                     std::to_string(run) + " grid points");
    }
    const bool all_equal = std::all_of(diffs.begin(), diffs.end(), [&](std::int64_t d) { return d == c; });
    report.summary.notes.push_back(std::string("difference constant over the whole range: ") +
                                   (all_equal ? "yes" : "no"));
  }
  tally(report);
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

TheoremReport verify_forest_theorem(const NamedGraph& f, int s, Range n_range, const VerifyOptions& options) {
  const auto start = Clock::now();
  TheoremReport report;
  report.theorem = "forest";
  report.grid = "F=" + f.name + " s=" + std::to_string(s) + " n=" + std::to_string(n_range.lo) + ".." +
                std::to_string(n_range.hi);
  auto params_for = [&](int n) {
    return std::vector<std::pair<std::string, ParamValue>>{{"F", f.name}, {"s", std::int64_t{s}}, {"n", std::int64_t{n}}};
  };

  const int p = f.graph.order() / 2;
  std::string reject;
  Verdict gate = Verdict::rejected;
  if (f.graph.size() <= 1) {
    reject = "degenerate forbidden graph (at most one edge)";
  } else if (!is_balanced_forest(f.graph)) {
    reject = "F is not a balanced forest";
    gate = Verdict::hypothesis_unmet;
  } else if (p > s) {
    reject = "requires v(F) = 2p <= 2s";
    gate = Verdict::hypothesis_unmet;
  }
  if (!reject.empty()) {
    for (int n : n_range.values()) report.points.push_back(gated_point(params_for(n), gate, reject));
    tally(report);
    return report;
  }

  const GraphFamily fam = family_fp(f.graph, p - 1, f.name);
  const std::int64_t inner = ex_general(p - 1, 2, fam, options.solver).value;
  const bool perfect = 2 * matching_number(f.graph) == f.graph.order();
  {
    ReportPoint pt;
    pt.params = {{"F", f.name}, {"check", std::string("perfect-matching")}, {"p", std::int64_t{p}}};
    pt.brute = inner;
    pt.formula = perfect ? binom2(p - 1) : 0;
    pt.verdict = *pt.brute == *pt.formula ? Verdict::pass : Verdict::fail;
    pt.note = perfect ? "F has a perfect matching: ex(p-1,F[p-1]) = C(p-1,2)"
                      : "F has no perfect matching: ex(p-1,F[p-1]) = 0";
    report.points.push_back(std::move(pt));
  }

  const bool tree = components(f.graph).size() == 1;
  const GraphFamily host_family("M" + std::to_string(s + 1) + "," + f.name, {matching(s + 1), f.graph});
  std::vector<Observation> obs;
  for (int n : n_range.values()) {
    if (n < p - 1) {
      report.points.push_back(gated_point(params_for(n), Verdict::rejected, "requires n >= p-1"));
      continue;
    }
    ReportPoint pt;
    pt.params = params_for(n);
    const std::int64_t formula = static_cast<std::int64_t>(p - 1) * (n - p + 1) + inner;
    std::set<Graph> predicted;
    const int max_t = tree && p >= 2 ? (s - p + 1) / (p - 1) : 0;
    for (int t = 0; t <= max_t && n >= (p - 1) + t * (2 * p - 1); ++t)
      predicted.insert(canonical_graph(build_forest_extremal(n, p, t, fam, options.solver)));
    const ExResult brute = ex_general(n, 2, host_family, options.solver);
    pt.brute = brute.value;
    pt.formula = formula;
    pt.witnesses = g6_list(brute.witnesses);
    pt.details = {{"predicted_extremal_graphs", std::to_string(predicted.size())}};
    report.points.push_back(std::move(pt));
    obs.push_back({nullptr, n, brute.value == formula, canonical_set(brute.witnesses) == predicted});
  }
  std::size_t j = 0;
  for (std::size_t i = 1; i < report.points.size(); ++i)
    if (report.points[i].brute) obs[j++].point = &report.points[i];
  if (!obs.empty()) settle_large_n(report, obs);
  tally(report);
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

TheoremReport verify_tutte_berge(Range n_range, const VerifyOptions& options) {
  const auto start = Clock::now();
  if (n_range.hi > 7) throw CeilingError("verify_tutte_berge: n is limited to 7");
  TheoremReport report;
  report.theorem = "tutte-berge";
  report.grid = "n=" + std::to_string(n_range.lo) + ".." + std::to_string(n_range.hi) + ", all isomorphism classes";
  for (int n : n_range.values()) {
    ReportPoint pt;
    pt.params = {{"n", std::int64_t{n}}};
    const std::vector<Graph> graphs = enumerate_free(n, GraphFamily("none"), options.solver);
    std::int64_t agree = 0;
    std::vector<std::string> bad;
    int widest = 0;
    for (const Graph& g : graphs) {
      const TutteBergeCertificate cert = tutte_berge_certificate(g);
      const int nu = matching_number(g);
      widest = std::max(widest, popcount(cert.barrier));
      // value(B) <= s for some B  <=>  M_{s+1}-free, checked at s = nu and s = nu - 1
      const bool recomputed = tutte_berge_value(g, cert.barrier).value == cert.value;
      const bool free_at_nu = cert.value <= nu && is_msplus1_free(g, nu);
      const bool tight = cert.value > nu - 1 && (nu == 0 || contains_subgraph(g, matching(nu)));
      if (recomputed && free_at_nu && tight && cert.value == nu) {
        ++agree;
      } else {
        bad.push_back(to_graph6(g));
      }
    }
    pt.brute = static_cast<std::int64_t>(graphs.size());
    pt.formula = agree;
    pt.verdict = agree == pt.brute ? Verdict::pass : Verdict::fail;
    if (!bad.empty()) {
      bad.resize(std::min<std::size_t>(bad.size(), 5));
      pt.note = "disagreements: " + join(bad, " ");
    }
    pt.details = {{"largest_barrier", std::to_string(widest)}};
    report.points.push_back(std::move(pt));
  }
  tally(report);
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

TheoremReport verify_color_critical_components(const NamedGraph& f, int r, Range p_range, const VerifyOptions& options) {
  const auto start = Clock::now();
  TheoremReport report;
  report.theorem = "color-critical";
  report.grid = "F=" + f.name + " r=" + std::to_string(r) + " p=" + std::to_string(p_range.lo) + ".." +
                std::to_string(p_range.hi);
  auto params_for = [&](int p) {
    return std::vector<std::pair<std::string, ParamValue>>{{"F", f.name}, {"r", std::int64_t{r}}, {"p", std::int64_t{p}}};
  };
  const int chi = chromatic_number(f.graph);
  const int k = chi - 1;
  std::string unmet;
  if (r < 2) unmet = "requires r >= 2";
  else if (!is_color_critical(f.graph)) unmet = "F is not colour critical";
  else if (chi < std::max(r + 1, 4)) unmet = "requires chi(F) >= max(r+1, 4), got " + std::to_string(chi);
  report.summary.notes.push_back("chi(F) = " + std::to_string(chi));
  if (!unmet.empty()) {
    for (int p : p_range.values()) report.points.push_back(gated_point(params_for(p), Verdict::hypothesis_unmet, unmet));
    tally(report);
    return report;
  }

  std::vector<Observation> obs;
  std::vector<bool> chi_ok;
  for (int p : p_range.values()) {
    ReportPoint pt;
    pt.params = params_for(p);
    const CoveringReport cover = covering_report(f.graph, p, f.name);
    int min_chi = -1;
    if (!cover.fallback_used) {
      for (const auto& m : cover.family.members()) {
        const int c = chromatic_number(m);
        min_chi = min_chi < 0 ? c : std::min(min_chi, c);
      }
    }
    const ExResult ex = ex_general(p, r - 1, cover.family, options.solver);
    pt.brute = ex.value;
    pt.formula = count_cliques(turan_graph(p, k - 1), r - 1);
    pt.details = {{"fallback", cover.fallback_used ? "true" : "false"},
                  {"min_member_chi", cover.fallback_used ? "n/a" : std::to_string(min_chi)}};
    chi_ok.push_back(cover.fallback_used || min_chi >= k);
    if (!chi_ok.back()) pt.note = "a member of F[p] has chromatic number below k = " + std::to_string(k);
    report.points.push_back(std::move(pt));
    obs.push_back({nullptr, p, *report.points.back().brute == *report.points.back().formula, std::nullopt});
  }
  for (std::size_t i = 0; i < obs.size(); ++i) obs[i].point = &report.points[i];
  if (!obs.empty()) settle_large_n(report, obs);
  for (std::size_t i = 0; i < report.points.size(); ++i)
    if (!chi_ok[i]) report.points[i].verdict = Verdict::fail;
  tally(report);
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace gturan
