#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "gturan/constructions.hpp"
#include "gturan/covering.hpp"
#include "gturan/graph6.hpp"
#include "gturan/named.hpp"
#include "gturan/report.hpp"
#include "gturan/solver.hpp"

namespace gturan::cli {

namespace {

int parse_one(const std::string& text, const std::string& flag) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError(flag + ": not an integer: '" + text + "'");
  return v;
}

int single(const std::string& text, const std::string& flag) {
  if (text.empty()) throw UsageError(flag + " is required");
  const auto values = parse_int_list(text, flag);
  if (values.size() != 1) throw UsageError(flag + " takes a single value here");
  return values.front();
}

Range range_of(const std::string& text, const std::string& flag) {
  if (text.empty()) throw UsageError(flag + " is required");
  const auto values = parse_int_list(text, flag);
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] != values[i - 1] + 1) throw UsageError(flag + " must be a contiguous range here");
  return {values.front(), values.back()};
}

std::vector<int> list_or_throw(const std::string& text, const std::string& flag) {
  if (text.empty()) throw UsageError(flag + " is required");
  return parse_int_list(text, flag);
}

GraphFamily resolve_family(const RunConfig& c, bool include_f) {
  GraphFamily fam;
  std::vector<std::string> labels;
  auto absorb = [&](const GraphFamily& other) {
    for (const auto& g : other.members()) fam.add(g);
    if (!other.label().empty()) labels.push_back(other.label());
  };
  if (!c.forbid.empty()) absorb(parse_family(c.forbid));
  if (!c.forbid_family.empty()) absorb(parse_family(c.forbid_family));
  if (!c.forbid_file.empty()) {
    std::ifstream in(c.forbid_file);
    if (!in) throw UsageError("cannot open family file '" + c.forbid_file + "'");
    absorb(read_family(in));
  }
  if (include_f && !c.f.empty()) absorb(parse_family(c.f));
  std::string label;
  for (const auto& l : labels) label += (label.empty() ? "" : ",") + l;
  fam.set_label(label);
  return fam;
}

SolverOptions solver_options(const RunConfig& c) {
  SolverOptions o;
  o.ceiling = c.ceiling > 0 ? c.ceiling : ceiling_from_env();
  if (o.ceiling > kHardCeiling) throw UsageError("ceiling must be at most " + std::to_string(kHardCeiling));
  if (c.workers < 0) throw UsageError("--workers must be non-negative");
  o.workers = c.workers;
  return o;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

NamedGraph required_graph(const std::string& text, const std::string& flag) {
  if (text.empty()) throw UsageError(flag + " is required");
  return parse_graph(text);
}

int cmd_ex(const RunConfig& c, std::ostream& out) {
  const GraphFamily fam = resolve_family(c, true);
  const int n = single(c.n, "--n");
  const int r = c.r.empty() ? 2 : single(c.r, "--r");
  const ExResult res = ex_general(n, r, fam, solver_options(c));
  if (!c.out.empty()) {
    write_file(c.out + ".json", to_json(res));
    write_file(c.out + ".timing.json", timing_json(res));
  }
  if (c.format_given && c.format != Format::csv) {
    out << to_json(res);
  } else {
    out << res.value << "\n";
    for (const auto& w : res.witnesses) out << to_graph6(w) << "\n";
  }
  return 0;
}

int cmd_family(const RunConfig& c, std::ostream& out) {
  const NamedGraph f = required_graph(c.graph.empty() ? c.f : c.graph, "--graph");
  const int p = single(c.p, "--p");
  const CoveringReport rep = covering_report(f.graph, p, f.name);
  if (!c.out.empty()) write_file(c.out + ".json", to_json(rep));
  if (c.format_given && c.format != Format::csv) {
    out << to_json(rep);
  } else {
    out << rep.family.label() << (rep.fallback_used ? " (fallback)" : "") << "\n";
    for (const auto& g : rep.family.canonical_members()) out << to_graph6(g) << "  " << describe(g) << "\n";
  }
  return 0;
}

TheoremReport run_theorem(const RunConfig& c) {
  VerifyOptions vo;
  vo.solver = solver_options(c);
  const std::string& t = c.target;
  if (t == "erdos-gallai") {
    std::vector<std::pair<int, int>> grid;
    for (int s : list_or_throw(c.s, "--s"))
      for (int n : list_or_throw(c.n, "--n"))
        if (s >= 1 && n >= 2 * s + 1) grid.emplace_back(n, s);
    if (grid.empty()) throw UsageError("empty grid: need s >= 1 and n >= 2s+1");
    return verify_erdos_gallai(grid, vo);
  }
  if (t == "ma-hou") {
    std::vector<MaHouPoint> grid;
    for (int s : list_or_throw(c.s, "--s"))
      for (int r : list_or_throw(c.r, "--r"))
        for (int k : list_or_throw(c.k, "--k"))
          for (int n : list_or_throw(c.n, "--n"))
            if (s >= 1 && r >= 2 && k >= r && n >= 2 * s + 1) grid.push_back({n, s, r, k});
    if (grid.empty()) throw UsageError("empty grid: need k >= r >= 2 and n >= 2s+1");
    return verify_ma_hou(grid, vo);
  }
  if (t == "main")
    return verify_main_theorem_exact(required_graph(c.f, "--F"), single(c.s, "--s"),
                                     c.r.empty() ? 2 : single(c.r, "--r"), range_of(c.n, "--n"), vo);
  if (t == "gerbner")
    return verify_gerbner_slope(required_graph(c.f, "--F"), single(c.s, "--s"), range_of(c.n, "--n"), vo);
  if (t == "forest")
    return verify_forest_theorem(required_graph(c.f, "--F"), single(c.s, "--s"), range_of(c.n, "--n"), vo);
  if (t == "tutte-berge") return verify_tutte_berge(range_of(c.n, "--n"), vo);
  if (t == "color-critical")
    return verify_color_critical_components(required_graph(c.f, "--F"), single(c.r, "--r"), range_of(c.p, "--p"),
                                            vo);
  throw UsageError("unknown theorem '" + t + "'");
}

void print_report(const TheoremReport& rep, std::ostream& out) {
  out << rep.theorem << "  " << rep.grid << "\n";
  for (const auto& p : rep.points) {
    out << "  " << std::left << std::setw(28) << params_string(p) << " brute=" << std::setw(6)
        << (p.brute ? std::to_string(*p.brute) : "-") << " formula=" << std::setw(6)
        << (p.formula ? std::to_string(*p.formula) : "-") << " " << std::setw(18) << to_string(p.verdict)
        << " unique=" << to_string(p.uniqueness);
    if (!p.note.empty()) out << "  # " << p.note;
    out << "\n";
  }
  const auto& s = rep.summary;
  out << "summary: pass=" << s.pass << " fail=" << s.fail << " small-n=" << s.small_n_exception
      << " unmet=" << s.hypothesis_unmet << " rejected=" << s.rejected << " unique-fail=" << s.uniqueness_fail;
  if (s.smallest_passing_n) out << " smallest-passing-n=" << *s.smallest_passing_n;
  out << "\n";
  for (const auto& note : s.notes) out << "note: " << note << "\n";
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const TheoremReport rep = run_theorem(c);
  const std::vector<TheoremReport> reps{rep};
  if (!c.out.empty()) {
    if (c.format != Format::csv) write_file(c.out + ".json", to_json(rep));
    if (c.format != Format::json) write_file(c.out + ".csv", to_csv(reps));
    write_file(c.out + ".timing.json", timing_json(rep));
  }
  if (c.format_given && c.out.empty()) {
    if (c.format != Format::csv) out << to_json(rep);
    if (c.format != Format::json) out << to_csv(reps);
  } else {
    print_report(rep, out);
  }
  if (rep.passed()) return 0;
  err << failure_list_json(reps);
  return 1;
}

int cmd_construct(const RunConfig& c, std::ostream& out) {
  ConstructionSpec spec;
  if (!c.spec.empty()) {
    std::ifstream in(c.spec);
    if (!in) throw UsageError("cannot open spec '" + c.spec + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    spec = construction_spec_from_json(buf.str());
  } else {
    spec.kind = construction_kind_from_string(c.target);
    auto opt = [](const std::string& v, const std::string& flag) { return v.empty() ? 0 : single(v, flag); };
    spec.n = opt(c.n, "--n");
    spec.s = opt(c.s, "--s");
    spec.p = opt(c.p, "--p");
    spec.t = opt(c.t, "--t");
    spec.k = opt(c.k, "--k");
    const int r = c.r.empty() ? 2 : single(c.r, "--r");
    spec.objective = r == 2 ? Objective::edges() : Objective::clique_count(r);
    spec.family = resolve_family(c, false);
    if (!c.f.empty()) {
      const NamedGraph f = parse_graph(c.f);
      const int q = spec.kind == ConstructionSpec::Kind::forest_extremal ? spec.p - 1 : spec.s;
      const GraphFamily sub = family_fp(f.graph, q, f.name);
      for (const auto& g : sub.members()) spec.family.add(g);
      spec.family.set_label(spec.family.label().empty() ? "F[" + std::to_string(q) + "] of " + f.name
                                                        : spec.family.label());
    }
  }
  const Graph g = build(spec, solver_options(c));
  if (!c.out.empty()) write_file(c.out + ".json", to_json(spec));
  if (c.format_given && c.format != Format::csv) {
    out << to_json(spec);
  }
  out << to_graph6(g) << "\n";
  return 0;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::set<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      values.insert(parse_one(item, flag));
      continue;
    }
    const int lo = parse_one(item.substr(0, dots), flag);
    const int hi = parse_one(item.substr(dots + 2), flag);
    if (hi < lo) throw UsageError(flag + ": empty range '" + item + "'");
    if (hi - lo > 1000) throw UsageError(flag + ": range too long");
    for (int v = lo; v <= hi; ++v) values.insert(v);
  }
  if (values.empty()) throw UsageError(flag + ": empty list");
  return {values.begin(), values.end()};
}

int ceiling_from_env() {
  const char* v = std::getenv("GTURAN_CEILING");
  if (v == nullptr || *v == '\0') return 0;
  const int c = parse_one(v, "GTURAN_CEILING");
  if (c < 0 || c > kHardCeiling) throw UsageError("GTURAN_CEILING must be in 0.." + std::to_string(kHardCeiling));
  return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "ex") return cmd_ex(config, out);
    if (config.command == "family") return cmd_family(config, out);
    if (config.command == "verify") return cmd_verify(config, out, err);
    if (config.command == "construct") return cmd_construct(config, out);
    throw UsageError("unknown command '" + config.command + "'");
  } catch (const CeilingError& e) {
    err << "error: " << e.what() << " (raise --ceiling or GTURAN_CEILING, at most " << kHardCeiling << ")\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generalized Turán numbers under a matching constraint"};
  app.require_subcommand(1);
  RunConfig c;
  std::string format = "json";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--ceiling", c.ceiling, "Largest n the enumerator accepts (<= 10)");
    sub->add_option("--workers", c.workers, "Worker threads, 0 = hardware concurrency");
    sub->add_option("--out", c.out, "Output path stem");
    sub->add_option("--format", format, "json, csv or both")->check(CLI::IsMember({"json", "csv", "both"}));
  };
  auto family_flags = [&](CLI::App* sub) {
    sub->add_option("--forbid", c.forbid, "Forbidden graphs, e.g. M3,K4");
    sub->add_option("--forbid-family", c.forbid_family, "Family expression, e.g. fp(C5,2)");
    sub->add_option("--forbid-file", c.forbid_file, "Family file of graph6 lines");
  };

  auto* ex = app.add_subcommand("ex", "ex(n, K_r, family) with all extremal graphs");
  ex->add_option("--n", c.n)->required();
  ex->add_option("--r", c.r, "Clique order (default 2)");
  ex->add_option("--F", c.f, "Extra forbidden graph");
  family_flags(ex);
  common(ex);

  auto* fam = app.add_subcommand("family", "Covering family F[p] of a graph");
  fam->add_option("--graph", c.graph)->required();
  fam->add_option("--p", c.p)->required();
  common(fam);

  auto* ver = app.add_subcommand("verify", "Closed form against exhaustive search");
  ver->add_option("theorem", c.target, "erdos-gallai|ma-hou|main|gerbner|forest|tutte-berge|color-critical")
      ->required()
      ->check(CLI::IsMember({"erdos-gallai", "ma-hou", "main", "gerbner", "forest", "tutte-berge", "color-critical"}));
  for (auto [flag, dest] : {std::pair{"--n", &c.n}, {"--s", &c.s}, {"--r", &c.r}, {"--k", &c.k}, {"--p", &c.p}})
    ver->add_option(flag, *dest, "Integer range, e.g. 5..9");
  ver->add_option("--F", c.f, "Forbidden graph");
  common(ver);

  auto* con = app.add_subcommand("construct", "Print a construction as graph6");
  con->add_option("kind", c.target, "gns|clique|forest-extremal|turan")
      ->check(CLI::IsMember({"gns", "clique", "forest-extremal", "turan"}));
  for (auto [flag, dest] :
       {std::pair{"--n", &c.n}, {"--s", &c.s}, {"--r", &c.r}, {"--k", &c.k}, {"--p", &c.p}, {"--t", &c.t}})
    con->add_option(flag, *dest);
  con->add_option("--F", c.f, "Use F[s] (F[p-1] for forest-extremal) as the family");
  con->add_option("--spec", c.spec, "JSON construction spec");
  family_flags(con);
  common(con);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  c.command = app.get_subcommands().front()->get_name();
  if (c.command == "construct" && c.target.empty() && c.spec.empty()) {
    err << "error: construct needs a kind or --spec\n";
    return 2;
  }
  c.format = format == "csv" ? Format::csv : format == "both" ? Format::both : Format::json;
  c.format_given = app.get_subcommands().front()->count("--format") > 0;
  return run(c, out, err);
}

}  // namespace gturan::cli
