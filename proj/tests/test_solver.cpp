#include <doctest.h>

#include <random>
#include <set>

#include "gturan/canonical.hpp"
#include "gturan/covering.hpp"
#include "gturan/invariants.hpp"
#include "gturan/solver.hpp"
#include "oracles.hpp"

using namespace gturan;

namespace {

std::set<std::uint64_t> oracle_keys(const std::vector<Graph>& graphs) {
  std::set<std::uint64_t> out;
  for (const auto& g : graphs) out.insert(oracle::canonical_key(g));
  return out;
}

}  // namespace

TEST_CASE("isomorph-free counts of all graphs") {
  const std::vector<std::int64_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) {
    CAPTURE(n);
    const auto graphs = enumerate_free(n, GraphFamily{});
    CHECK(static_cast<std::int64_t>(graphs.size()) == expected[static_cast<std::size_t>(n)]);
    CHECK(static_cast<std::int64_t>(graphs.size()) == oracle::burnside_class_count(n));
    std::set<Graph> canon;
    for (const auto& g : graphs) canon.insert(canonical_graph(g));
    CHECK(canon.size() == graphs.size());
  }
  CHECK(oracle::labelled_class_count(5) == 34);
  CHECK(static_cast<std::int64_t>(enumerate_free(8, GraphFamily{}).size()) == oracle::burnside_class_count(8));
}

TEST_CASE("enumeration with forbidden families") {
  CHECK(enumerate_free(4, GraphFamily{}).size() == 11);
  const auto k2 = enumerate_free(5, GraphFamily("K2", {complete(2)}));
  REQUIRE(k2.size() == 1);
  CHECK(k2.front() == empty(5));

  std::set<Graph> filtered;
  for (const auto& g : enumerate_free(5, GraphFamily{}))
    if (matching_number(g) <= 1) filtered.insert(canonical_graph(g));
  std::set<Graph> got;
  for (const auto& g : enumerate_free(5, GraphFamily("M2", {matching(2)}))) got.insert(canonical_graph(g));
  CHECK(got == filtered);
  // empty, K2, P3, K3, K_{1,3}, K_{1,4}
  CHECK(got.size() == 6);

  CHECK(enumerate_free(3, GraphFamily("K1", {complete(1)})).empty());
}

TEST_CASE("enumeration agrees with labelled filtering") {
  const std::vector<GraphFamily> families{GraphFamily("K3", {complete(3)}), GraphFamily("P4", {path(4)}),
                                          GraphFamily("M2,K3", {matching(2), complete(3)}),
                                          GraphFamily("C4", {cycle(4)}), GraphFamily("S4", {star(4)})};
  for (const auto& fam : families) {
    for (int n = 1; n <= 6; ++n) {
      std::set<std::uint64_t> want;
      const std::uint64_t total = std::uint64_t{1} << oracle::pair_count(n);
      for (std::uint64_t m = 0; m < total; ++m) {
        const Graph g = oracle::from_mask(n, m);
        bool ok = true;
        for (const auto& f : fam.members()) ok = ok && !oracle::contains(g, f);
        if (ok) want.insert(oracle::canonical_key(g));
      }
      CAPTURE(fam.label());
      CAPTURE(n);
      const auto got = enumerate_free(n, fam);
      CHECK(got.size() == want.size());
      CHECK(oracle_keys(got) == want);
    }
  }
}

TEST_CASE("ex examples") {
  const auto a = ex_general(6, 2, GraphFamily("M3", {matching(3)}));
  CHECK(a.value == 10);
  REQUIRE(a.witnesses.size() == 1);
  CHECK(isomorphic(a.witnesses.front(), disjoint_union(complete(5), empty(1))));

  // K_5 contains K_4, so it is not admissible here; T_3(5) is the extremal graph.
  const auto b = ex_general(5, 3, GraphFamily("M3,K4", {matching(3), complete(4)}));
  CHECK(b.value == 4);
  REQUIRE(b.witnesses.size() == 1);
  CHECK(isomorphic(b.witnesses.front(), turan_graph(5, 3)));

  CHECK(ex_general(2, 2, family_fp(cycle(5), 2)).value == 1);
  for (int p = 3; p <= 4; ++p) CHECK(ex_general(p, 2, family_fp(cycle(5), p)).value == 0);
  CHECK(ex_general(4, 1, GraphFamily("K2", {complete(2)})).value == 4);
  CHECK_THROWS_AS(ex_general(3, 2, GraphFamily("K1", {complete(1)})), NoAdmissibleGraph);
  CHECK_THROWS_AS(ex_general(3, 0, GraphFamily{}), std::invalid_argument);
}

TEST_CASE("ex agrees with labelled brute force") {
  const std::vector<std::vector<Graph>> families{
      {matching(2)}, {matching(3)}, {complete(3)}, {path(4)}, {matching(3), complete(4)}, {cycle(4)}, {star(4), complete(3)}};
  for (const auto& members : families) {
    GraphFamily fam("f", members);
    for (int n = 2; n <= 6; ++n)
      for (int r = 2; r <= 3; ++r) {
        const auto want = oracle::ex_brute(n, r, members);
        const auto got = ex_general(n, r, fam);
        CAPTURE(n);
        CAPTURE(r);
        CHECK(got.value == want.value);
        CHECK(oracle_keys(got.witnesses) == want.witness_keys);
      }
  }
}

TEST_CASE("ex is monotone in n") {
  const std::vector<GraphFamily> families{GraphFamily("M3", {matching(3)}), GraphFamily("M3,K3", {matching(3), complete(3)}),
                                          GraphFamily("P5", {path(5)})};
  for (const auto& fam : families)
    for (int r = 2; r <= 3; ++r) {
      std::int64_t last = 0;
      for (int n = 1; n <= 8; ++n) {
        const std::int64_t v = ex_general(n, r, fam).value;
        CHECK(v >= last);
        last = v;
      }
    }
}

TEST_CASE("parallel runs are identical") {
  const GraphFamily fam("M4,P5", {matching(4), path(5)});
  SolverOptions one;
  const ExResult base = ex_general(8, 2, fam, one);
  const auto base_list = enumerate_free(7, fam, one);
  for (int workers : {2, 4, 8}) {
    SolverOptions o;
    o.workers = workers;
    const ExResult other = ex_general(8, 2, fam, o);
    CHECK(other.value == base.value);
    CHECK(other.witnesses == base.witnesses);
    CHECK(other.enumerated_count == base.enumerated_count);
    CHECK(enumerate_free(7, fam, o) == base_list);
  }
}

TEST_CASE("split depth does not change results") {
  const GraphFamily fam("K4", {complete(4)});
  SolverOptions a;
  a.split_depth = 0;
  SolverOptions b;
  b.split_depth = 9;
  const auto x = ex_general(7, 3, fam, a);
  const auto y = ex_general(7, 3, fam, b);
  CHECK(x.value == y.value);
  CHECK(x.witnesses == y.witnesses);
  CHECK(x.enumerated_count == y.enumerated_count);
}

TEST_CASE("minimalized search is equivalent") {
  const GraphFamily fam("K3,K4,C4", {complete(3), complete(4), cycle(4)});
  SolverOptions raw;
  raw.minimalize_family = false;
  const auto x = ex_general(7, 2, fam);
  const auto y = ex_general(7, 2, fam, raw);
  CHECK(x.value == y.value);
  CHECK(x.witnesses == y.witnesses);
}

TEST_CASE("ceilings") {
  CHECK(default_ceiling(GraphFamily("M2", {matching(2)})) == 10);
  CHECK(default_ceiling(GraphFamily("K3", {complete(3)})) == 10);
  CHECK(default_ceiling(GraphFamily("P5", {path(5)})) == 9);
  CHECK(default_ceiling(GraphFamily{}) == 9);
  CHECK_THROWS_AS(ex_general(10, 2, GraphFamily("P5", {path(5)})), CeilingError);
  SolverOptions low;
  low.ceiling = 5;
  CHECK_THROWS_AS(enumerate_free(6, GraphFamily{}, low), CeilingError);
  SolverOptions high;
  high.ceiling = 11;
  CHECK_THROWS_AS(enumerate_free(3, GraphFamily{}, high), CeilingError);
}

TEST_CASE("profiles") {
  const auto c5 = ex_profile(cycle(5), 3, 4);
  CHECK(c5.values == std::vector<std::pair<int, std::int64_t>>{{1, 0}, {2, 1}, {3, 0}, {4, 0}});
  CHECK(c5.argmax == 2);

  const auto k3 = ex_profile(complete(3), 2, 3);
  CHECK(k3.values == std::vector<std::pair<int, std::int64_t>>{{1, 1}, {2, 2}, {3, 3}});
  CHECK(k3.argmax == 3);

  const auto p4 = ex_profile(path(4), 2, 3);
  REQUIRE(p4.values.size() == 1);
  CHECK(p4.values.front().first == 1);
  CHECK(p4.argmax == 1);

  const auto none = ex_profile(star(4), 2, 3);
  CHECK(none.values.empty());
  CHECK_FALSE(none.argmax.has_value());
}
