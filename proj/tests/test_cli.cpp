#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "gturan/canonical.hpp"
#include "gturan/graph6.hpp"

using namespace gturan;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gturan");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "gturan-cli-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("ex command") {
  CHECK(first_line(run({"ex", "--n", "6", "--r", "2", "--forbid", "M3"}).out) == "10");
  CHECK(first_line(run({"ex", "--n", "5", "--r", "3", "--forbid", "M3,K4"}).out) == "4");
  const Run r = run({"ex", "--n", "2", "--r", "2", "--forbid-family", "fp(C5,2)"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "1");
}

TEST_CASE("ex command json and files") {
  const auto stem = scratch("ex").string();
  const Run a = run({"ex", "--n", "6", "--forbid", "M3", "--format", "json", "--out", stem});
  CHECK(a.code == 0);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["value"] == 10);
  CHECK(slurp(stem + ".json") == a.out);
  CHECK(nlohmann::json::parse(slurp(stem + ".timing.json")).contains("elapsed_seconds"));
  const Run b = run({"ex", "--n", "6", "--forbid", "M3", "--format", "json", "--workers", "4"});
  CHECK(b.out == a.out);
}

TEST_CASE("family command") {
  const Run a = run({"family", "--graph", "C5", "--p", "2", "--format", "json"});
  const auto ja = nlohmann::json::parse(a.out);
  CHECK(ja["fallback_used"] == true);
  CHECK(ja["members"] == nlohmann::json::array({"Bw"}));

  const auto jb = nlohmann::json::parse(run({"family", "--graph", "C5", "--p", "3", "--format", "json"}).out);
  CHECK(jb["fallback_used"] == false);
  REQUIRE(jb["members"].size() == 1);
  CHECK(isomorphic(from_graph6(jb["members"][0].get<std::string>()), disjoint_union(complete(2), empty(1))));

  const auto jc = nlohmann::json::parse(run({"family", "--graph", "K2", "--p", "0", "--format", "json"}).out);
  CHECK(jc["fallback_used"] == true);
  CHECK(jc["members"] == nlohmann::json::array({"@"}));
}

TEST_CASE("construct command") {
  CHECK(isomorphic(from_graph6(first_line(run({"construct", "gns", "--n", "9", "--s", "2", "--forbid", "K3"}).out)),
                   add_edge(complete_bipartite(2, 7), 0, 1)));
  CHECK(first_line(run({"construct", "clique", "--s", "2"}).out) == to_graph6(complete(5)));
  const Graph g = from_graph6(first_line(run({"construct", "forest-extremal", "--n", "12", "--p", "2", "--t", "1", "--F", "P4"}).out));
  CHECK(isomorphic(g, disjoint_union(complete_bipartite(1, 8), complete(3))));
  CHECK(first_line(run({"construct", "turan", "--n", "7", "--k", "3"}).out) == to_graph6(turan_graph(7, 3)));
}

TEST_CASE("construct from a spec file") {
  const auto stem = scratch("spec").string();
  const Run a = run({"construct", "gns", "--n", "8", "--s", "3", "--F", "K4", "--r", "3", "--out", stem});
  CHECK(a.code == 0);
  const Run b = run({"construct", "--spec", stem + ".json"});
  CHECK(b.code == 0);
  CHECK(b.out == a.out);
}

TEST_CASE("verify command exit codes") {
  const Run eg = run({"verify", "erdos-gallai", "--n", "5..7", "--s", "1..2"});
  CHECK(eg.code == 0);
  CHECK(eg.err.empty());
  const Run tb = run({"verify", "tutte-berge", "--n", "1..6"});
  CHECK(tb.code == 0);
  const Run main = run({"verify", "main", "--F", "K3", "--s", "2", "--r", "2", "--n", "6..7"});
  CHECK(main.code == 0);

  const Run mh = run({"verify", "ma-hou", "--n", "5", "--s", "2", "--r", "3", "--k", "3"});
  CHECK(mh.code == 1);
  const auto fails = nlohmann::json::parse(mh.err);
  REQUIRE(fails["failures"].size() == 1);
  CHECK(fails["failures"][0]["params"] == "n=5;s=2;r=3;k=3");
}

TEST_CASE("verify command writes json and csv") {
  const auto stem = scratch("eg").string();
  const std::vector<std::string> args{"verify", "erdos-gallai", "--n", "5..6", "--s", "2", "--out", stem, "--format", "both"};
  CHECK(run(args).code == 0);
  const std::string first = slurp(stem + ".json");
  CHECK(nlohmann::json::parse(first)["schema"] == 1);
  CHECK(slurp(stem + ".csv").rfind("theorem,params,brute,formula,verdict,witnesses\n", 0) == 0);
  CHECK(run(args).code == 0);
  CHECK(slurp(stem + ".json") == first);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"ex", "--n", "6", "--forbid", "Q7"}).code == 2);
  CHECK(run({"ex", "--n", "6..7", "--forbid", "M3"}).code == 2);
  CHECK(run({"ex", "--n", "6", "--forbid", "M3", "--ceiling", "11"}).code == 2);
  const Run c = run({"ex", "--n", "9", "--forbid", "P6", "--ceiling", "8"});
  CHECK(c.code == 2);
  CHECK(c.err.find("ceiling") != std::string::npos);
  CHECK(run({"verify", "nonsense", "--n", "3"}).code == 2);
  CHECK(run({"verify", "main", "--s", "2", "--n", "6"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("integer lists") {
  CHECK(cli::parse_int_list("5..9", "--n") == std::vector<int>{5, 6, 7, 8, 9});
  CHECK(cli::parse_int_list("3", "--n") == std::vector<int>{3});
  CHECK(cli::parse_int_list("1,4..5,4", "--n") == std::vector<int>{1, 4, 5});
  CHECK_THROWS_AS(cli::parse_int_list("9..5", "--n"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_int_list("a", "--n"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_int_list("", "--n"), cli::UsageError);
}

TEST_CASE("ceiling from the environment") {
  setenv("GTURAN_CEILING", "5", 1);
  CHECK(cli::ceiling_from_env() == 5);
  CHECK(run({"ex", "--n", "6", "--forbid", "M3"}).code == 2);
  CHECK(run({"ex", "--n", "6", "--forbid", "M3", "--ceiling", "6"}).code == 0);
  setenv("GTURAN_CEILING", "12", 1);
  CHECK_THROWS_AS(cli::ceiling_from_env(), cli::UsageError);
  unsetenv("GTURAN_CEILING");
  CHECK(cli::ceiling_from_env() == 0);
}
