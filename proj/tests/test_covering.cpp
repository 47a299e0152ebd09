#include <doctest.h>

#include <random>

#include "gturan/canonical.hpp"
#include "gturan/covering.hpp"
#include "gturan/invariants.hpp"
#include "oracles.hpp"

using namespace gturan;

namespace {

std::vector<Graph> canon(std::initializer_list<Graph> graphs) {
  return GraphFamily("expected", graphs).canonical_members();
}

const Graph k2k1 = disjoint_union(complete(2), empty(1));

}  // namespace

TEST_CASE("count or infinity") {
  const auto inf = CountOrInfinity::infinite();
  const auto two = CountOrInfinity::finite(2);
  CHECK(inf.is_infinite());
  CHECK_FALSE(two.is_infinite());
  CHECK(two.value() == 2);
  CHECK_THROWS_AS(inf.value(), std::logic_error);
  CHECK(inf > two);
  CHECK(inf > 1000000);
  CHECK(two == 2);
  CHECK(two < 3);
  CHECK(inf == CountOrInfinity::infinite());
  CHECK(inf.to_string() == "inf");
  CHECK(two.to_string() == "2");
}

TEST_CASE("coverings") {
  CHECK(all_coverings(cycle(5), 2).empty());
  CHECK(all_coverings(complete(2), 1) == std::vector<VertexSet>{0b01, 0b10});
  // path 0-1-2-3: {1,2}, {0,2}, {1,3}
  const auto p4 = all_coverings(path(4), 2);
  CHECK(p4.size() == 3);
  CHECK(std::set<VertexSet>(p4.begin(), p4.end()) == std::set<VertexSet>{0b0110, 0b0101, 0b1010});
  CHECK(all_coverings(empty(2), 0) == std::vector<VertexSet>{0});
}

TEST_CASE("coverings agree with subset oracle") {
  std::mt19937_64 rng(9);
  std::bernoulli_distribution coin(0.4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    Graph g(n);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (coin(rng)) g.connect(i, j);
    const int p = static_cast<int>(rng() % (n + 1));
    const auto got = all_coverings(g, p);
    const auto want = oracle::vertex_covers(g, p);
    CHECK(std::set<VertexSet>(got.begin(), got.end()) == std::set<VertexSet>(want.begin(), want.end()));
    CHECK(got.size() == want.size());
    for (std::size_t i = 1; i < got.size(); ++i) {
      const bool ordered = popcount(got[i - 1]) < popcount(got[i]) ||
                           (popcount(got[i - 1]) == popcount(got[i]) &&
                            to_vertex_list(got[i - 1]) < to_vertex_list(got[i]));
      CHECK(ordered);
    }
  }
}

TEST_CASE("covering families of C5") {
  const auto r2 = covering_report(cycle(5), 2, "C5");
  CHECK(r2.fallback_used);
  CHECK(r2.family.canonical_members() == canon({complete(3)}));
  for (int p = 3; p <= 5; ++p) {
    const GraphFamily f = family_fp(cycle(5), p);
    CAPTURE(p);
    CHECK(f.contains_isomorphic(k2k1));
  }
  CHECK(family_fp(cycle(5), 3).canonical_members() == canon({k2k1}));
}

TEST_CASE("covering families of other graphs") {
  CHECK(family_fp(complete(4), 3).canonical_members() == canon({complete(3)}));
  const auto k2 = covering_report(complete(2), 0);
  CHECK(k2.fallback_used);
  CHECK(k2.family.canonical_members() == canon({complete(1)}));
  CHECK(family_fp(complete(3), 1).canonical_members() == canon({complete(2)}));
  CHECK(family_fp(complete(3), 2).canonical_members() == canon({complete(2)}));
  CHECK(family_fp(complete(3), 3).canonical_members() == canon({complete(2), complete(3)}));
  CHECK(family_fp(star(5), 1).canonical_members() == canon({empty(1)}));
  CHECK(covering_report(cycle(5), 2, "C5").family.label() == "F[2] of C5");
}

TEST_CASE("independent covering number") {
  CHECK(p_of_f(star(5)) == 1);
  CHECK(p_of_f(cycle(5)).is_infinite());
  CHECK(p_of_f(path(4)) == 2);
  CHECK(p_of_f(path(6)) == 3);
  CHECK(p_of_f(complete_bipartite(2, 3)) == 2);
  CHECK(p_of_f(matching(3)) == 3);
  CHECK(p_of_f(cycle(6)) == 3);
}

TEST_CASE("independent covering number agrees with subset oracle") {
  std::mt19937_64 rng(13);
  std::bernoulli_distribution coin(0.35);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    Graph g(n);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (coin(rng)) g.connect(i, j);
    int best = -1;
    for (std::uint64_t m : oracle::vertex_covers(g, n)) {
      bool independent = true;
      for (auto [u, v] : oracle::edges(g))
        if ((m >> u & 1) && (m >> v & 1)) independent = false;
      if (independent && (best < 0 || std::popcount(m) < best)) best = std::popcount(m);
    }
    const CountOrInfinity got = p_of_f(g);
    if (best < 0)
      CHECK(got.is_infinite());
    else
      CHECK(got == best);
  }
}

TEST_CASE("colour criticality") {
  CHECK(is_color_critical(complete(4)));
  CHECK(is_color_critical(cycle(5)));
  CHECK_FALSE(is_color_critical(cycle(6)));
  CHECK(is_color_critical(wheel(5)));
  CHECK(chromatic_number(wheel(5)) == 4);
  CHECK_FALSE(is_color_critical(empty(3)));
}
