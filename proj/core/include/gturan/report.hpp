#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gturan/constructions.hpp"
#include "gturan/covering.hpp"
#include "gturan/solver.hpp"
#include "gturan/verifier.hpp"

namespace gturan {

inline constexpr int kReportSchema = 1;

class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON payloads. Key order is fixed and no wall-clock values are included,
/// so identical inputs serialise to identical bytes.
std::string to_json(const ExResult& result);
std::string to_json(const TheoremReport& report);
std::string to_json(const CoveringReport& report);
std::string to_json(const ConstructionSpec& spec);

/// Elapsed time, written next to the payload (".timing.json").
std::string timing_json(const ExResult& result);
std::string timing_json(const TheoremReport& report);

ConstructionSpec construction_spec_from_json(const std::string& text);

/// Machine-readable list of failing points across reports.
std::string failure_list_json(const std::vector<TheoremReport>& reports);

/// CSV with columns theorem,params,brute,formula,verdict,witnesses.
/// params are "k=v" joined by ';', witnesses graph6 joined by ' '.
inline constexpr const char* kCsvHeader = "theorem,params,brute,formula,verdict,witnesses";
std::string to_csv(const std::vector<TheoremReport>& reports);

/// "n=6;s=2"
std::string params_string(const ReportPoint& point);

/// Family files: optional "# label: <text>" line, then one graph6 per line.
void write_family(std::ostream& out, const GraphFamily& fam);
GraphFamily read_family(std::istream& in);

}  // namespace gturan
