#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "artin/io.hpp"

namespace artin {

inline constexpr int kSchemaVersion = 1;

struct JobConfig {
  std::string input_path;
  std::optional<FieldSpec> field;  // overrides the input file
  int kmax = -1;                   // -1: dimension of the flag complex
  std::set<std::string> methods{"snf", "ss", "forest", "resonant"};
  std::string format = "text";     // text | json
  bool cross_check = true;
  bool dump_pages = false;
  bool dump_matrices = false;

  // Throws Error(InvalidField) on an empty or unknown method set.
  void validate() const;
  bool wants(const std::string& m) const { return methods.count(m) > 0; }
};

struct CrossCheck {
  std::string left;
  std::string right;
  std::string status;  // agree | mismatch | skipped
  std::string detail;
};

struct Report {
  nlohmann::ordered_json body;    // deterministic part
  nlohmann::ordered_json timing;  // milliseconds per stage
  std::vector<CrossCheck> checks;

  bool mismatch() const;
  std::string json() const;
  std::string text() const;
};

Report run(const JobConfig& job);
Report run_input(const ParsedInput& in, const JobConfig& job);

// 0 ok, 3 cross-check mismatch. Usage (1) and input (2) errors are decided
// by the caller from the exception type.
int exit_code(const Report& r);

}  // namespace artin
