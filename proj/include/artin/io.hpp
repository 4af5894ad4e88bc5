#pragma once

#include <optional>
#include <string>

#include "artin/graph.hpp"

namespace artin {

// Line format:
//   field q | field p <prime>       (optional)
//   vertex <name> <m_v>             (declaration order is the vertex order)
//   edge <name> <name> <even label>
// '#' starts a comment.
struct ParsedInput {
  LabeledGraph graph;
  Character character;
  std::optional<FieldSpec> field;
};

// Throws ParseError with the 1-based line and column of the problem.
ParsedInput parse_input(const std::string& text);
std::string serialize(const ParsedInput& in);
std::string read_file(const std::string& path);

}  // namespace artin
