#include "gturan/report.hpp"

#include <json.hpp>

#include "gturan/canonical.hpp"
#include "gturan/graph6.hpp"

namespace gturan {

namespace {

using Json = nlohmann::ordered_json;

Json g6_array(const std::vector<Graph>& graphs) {
  Json out = Json::array();
  for (const auto& g : graphs) out.push_back(to_graph6(g));
  return out;
}

Json optional_int(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json point_json(const ReportPoint& p) {
  Json params = Json::object();
  for (const auto& [k, v] : p.params) {
    if (std::holds_alternative<std::int64_t>(v))
      params[k] = std::get<std::int64_t>(v);
    else
      params[k] = std::get<std::string>(v);
  }
  Json out;
  out["params"] = params;
  out["brute"] = optional_int(p.brute);
  out["formula"] = optional_int(p.formula);
  out["verdict"] = to_string(p.verdict);
  out["uniqueness"] = to_string(p.uniqueness);
  out["witnesses"] = p.witnesses;
  if (!p.note.empty()) out["note"] = p.note;
  if (!p.details.empty()) {
    Json d = Json::object();
    for (const auto& [k, v] : p.details) d[k] = v;
    out["details"] = d;
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json spec_family_json(const GraphFamily& fam) {
  Json out;
  out["label"] = fam.label();
  out["members"] = g6_array(fam.members());
  return out;
}

}  // namespace

std::string params_string(const ReportPoint& point) {
  std::string out;
  for (const auto& [k, v] : point.params) {
    if (!out.empty()) out += ';';
    out += k + "=";
    out += std::holds_alternative<std::int64_t>(v) ? std::to_string(std::get<std::int64_t>(v))
                                                    : std::get<std::string>(v);
  }
  return out;
}

std::string to_json(const ExResult& result) {
  Json j;
  j["schema"] = kReportSchema;
  j["kind"] = "ex";
  j["n"] = result.n;
  j["r"] = result.r;
  j["family_label"] = result.family_label;
  j["family"] = g6_array(result.family);
  j["value"] = result.value;
  j["witnesses"] = g6_array(result.witnesses);
  j["enumerated"] = result.enumerated_count;
  return dump(j);
}

std::string to_json(const TheoremReport& report) {
  Json j;
  j["schema"] = kReportSchema;
  j["kind"] = "theorem";
  j["theorem"] = report.theorem;
  j["grid"] = report.grid;
  Json points = Json::array();
  for (const auto& p : report.points) points.push_back(point_json(p));
  j["points"] = points;
  const auto& s = report.summary;
  Json sum;
  sum["pass"] = s.pass;
  sum["fail"] = s.fail;
  sum["small_n_exception"] = s.small_n_exception;
  sum["hypothesis_unmet"] = s.hypothesis_unmet;
  sum["rejected"] = s.rejected;
  sum["uniqueness_fail"] = s.uniqueness_fail;
  sum["uniqueness_small_n_exception"] = s.uniqueness_small_n_exception;
  sum["smallest_passing_n"] = optional_int(s.smallest_passing_n);
  sum["notes"] = s.notes;
  sum["passed"] = report.passed();
  j["summary"] = sum;
  return dump(j);
}

std::string to_json(const CoveringReport& report) {
  Json j;
  j["schema"] = kReportSchema;
  j["kind"] = "family";
  j["graph"] = to_graph6(report.graph);
  j["p"] = report.p;
  Json covers = Json::array();
  for (VertexSet c : report.covers) covers.push_back(to_vertex_list(c));
  j["covers"] = covers;
  j["label"] = report.family.label();
  j["members"] = g6_array(report.family.canonical_members());
  j["fallback_used"] = report.fallback_used;
  return dump(j);
}

std::string to_json(const ConstructionSpec& spec) {
  Json j;
  j["schema"] = kReportSchema;
  j["kind"] = to_string(spec.kind);
  j["n"] = spec.n;
  j["s"] = spec.s;
  j["p"] = spec.p;
  j["t"] = spec.t;
  j["k"] = spec.k;
  j["family"] = spec_family_json(spec.family);
  j["objective"] = spec.objective.kind == Objective::Kind::edges ? "edges" : "cliques";
  j["r"] = spec.objective.clique_order();
  return dump(j);
}

ConstructionSpec construction_spec_from_json(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    if (j.value("schema", kReportSchema) != kReportSchema) throw ReportError("unsupported schema version");
    ConstructionSpec spec;
    spec.kind = construction_kind_from_string(j.at("kind").get<std::string>());
    spec.n = j.value("n", 0);
    spec.s = j.value("s", 0);
    spec.p = j.value("p", 0);
    spec.t = j.value("t", 0);
    spec.k = j.value("k", 0);
    if (j.contains("family")) {
      const Json& f = j.at("family");
      spec.family.set_label(f.value("label", std::string{}));
      for (const auto& g6 : f.value("members", std::vector<std::string>{})) spec.family.add(from_graph6(g6));
    }
    const std::string objective = j.value("objective", std::string("edges"));
    if (objective == "edges")
      spec.objective = Objective::edges();
    else if (objective == "cliques")
      spec.objective = Objective::clique_count(j.value("r", 2));
    else
      throw ReportError("unknown objective '" + objective + "'");
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw ReportError(std::string("construction spec: ") + e.what());
  }
}

std::string timing_json(const ExResult& result) {
  Json j;
  j["schema"] = kReportSchema;
  j["elapsed_seconds"] = result.elapsed_seconds;
  return dump(j);
}

std::string timing_json(const TheoremReport& report) {
  Json j;
  j["schema"] = kReportSchema;
  j["theorem"] = report.theorem;
  j["elapsed_seconds"] = report.elapsed_seconds;
  return dump(j);
}

std::string failure_list_json(const std::vector<TheoremReport>& reports) {
  Json list = Json::array();
  for (const auto& r : reports) {
    for (const ReportPoint* p : r.failures()) {
      Json f;
      f["theorem"] = r.theorem;
      f["params"] = params_string(*p);
      f["brute"] = optional_int(p->brute);
      f["formula"] = optional_int(p->formula);
      f["verdict"] = to_string(p->verdict);
      f["uniqueness"] = to_string(p->uniqueness);
      list.push_back(f);
    }
  }
  Json j;
  j["schema"] = kReportSchema;
  j["failures"] = list;
  return j.dump() + "\n";
}

std::string to_csv(const std::vector<TheoremReport>& reports) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : reports) {
    for (const auto& p : r.points) {
      std::string witnesses;
      for (const auto& w : p.witnesses) witnesses += (witnesses.empty() ? "" : " ") + w;
      out += csv_field(r.theorem) + ',' + csv_field(params_string(p)) + ',' +
             (p.brute ? std::to_string(*p.brute) : "") + ',' + (p.formula ? std::to_string(*p.formula) : "") + ',' +
             to_string(p.verdict) + ',' + csv_field(witnesses) + "\n";
    }
  }
  return out;
}

void write_family(std::ostream& out, const GraphFamily& fam) {
  if (!fam.label().empty()) out << "# label: " << fam.label() << "\n";
  for (const auto& g : fam.members()) out << to_graph6(g) << "\n";
}

GraphFamily read_family(std::istream& in) {
  GraphFamily fam;
  std::string line;
  constexpr std::string_view kLabel = "# label:";
  while (std::getline(in, line)) {
    if (line.starts_with(kLabel)) {
      std::string label = line.substr(kLabel.size());
      const auto first = label.find_first_not_of(" \t");
      fam.set_label(first == std::string::npos ? "" : label.substr(first));
      continue;
    }
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    fam.add(from_graph6(std::string_view(line).substr(first)));
  }
  return fam;
}

}  // namespace gturan
