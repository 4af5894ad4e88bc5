#pragma once

#include <string>
#include <vector>

#include "artin/flag_complex.hpp"
#include "artin/graph.hpp"

namespace artin {

struct RemovalEntry {
  std::string kind;    // "edge", "vertex", "2-cell", "1-cell", "identify"
  std::string cell;    // e.g. "{v0,v2}"
  std::string reason;
};

struct ReducedGraph {
  LabeledGraph graph;
  Character character;
  std::vector<int> kept;  // original indices of the surviving vertices
  std::vector<RemovalEntry> log;
};

ReducedGraph build_gamma1(const LabeledGraph& g, const Character& c,
                          const FieldSpec& f);
// Components of the reduced graph minus one.
long h1_free_rank(const LabeledGraph& g, const Character& c, const FieldSpec& f);

// Two-dimensional CW complex left after the removals and identifications.
struct QuotientComplex {
  std::vector<std::vector<int>> vertex_classes;  // 0-cells
  std::vector<Simplex> edges;                    // 1-cells, by provenance
  std::vector<Simplex> triangles;                // 2-cells, by provenance
  IntMatrix d1;  // 0-cells x 1-cells
  IntMatrix d2;  // 1-cells x 2-cells
  std::vector<RemovalEntry> log;
};

QuotientComplex build_f2(const LabeledGraph& g, const Character& c,
                         const FieldSpec& f);
// dim of reduced H_1 of a quotient complex.
long reduced_h1(const QuotientComplex& q, const FieldSpec& f);
long h2_free_rank(const LabeledGraph& g, const Character& c, const FieldSpec& f);

}  // namespace artin
