#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gturan/verifier.hpp"

namespace gturan::cli {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { json, csv, both };

struct RunConfig {
  std::string command;  // ex | family | verify | construct
  std::string target;   // theorem id for verify, construction kind for construct

  std::string forbid;         // comma list of graph names
  std::string forbid_family;  // same grammar, fp(...) allowed
  std::string forbid_file;    // family file
  std::string f;              // --F
  std::string graph;          // --graph

  std::string n, s, r, p, k, t;  // integer ranges, "a..b" or "a,b,c"

  int ceiling = 0;
  int workers = 1;
  std::string out;
  std::string spec;  // construct: JSON spec file
  Format format = Format::json;
  bool format_given = false;
};

/// "5..9", "3", "1,4..6"; values ascending and distinct. Throws UsageError.
std::vector<int> parse_int_list(const std::string& text, const std::string& flag);

/// Ceiling from GTURAN_CEILING, or 0 when unset. Throws UsageError on junk.
int ceiling_from_env();

/// Runs one command and returns the process exit code: 0 when every
/// verdict passes, 1 on failing verdicts, 2 on usage or input errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gturan::cli
