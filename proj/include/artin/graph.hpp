#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "artin/field.hpp"

namespace artin {

struct Edge {
  int u = 0;
  int v = 0;
  long label = 2;
  long half() const { return label / 2; }
};

// Vertices are indexed 0..n-1 in declaration order; that order fixes all
// orientation signs. Construction records whatever it is given so that
// validate_graph can report problems instead of throwing.
class LabeledGraph {
 public:
  int add_vertex(const std::string& name);
  void add_edge(int u, int v, long label);
  void add_edge(const std::string& u, const std::string& v, long label);

  std::size_t vertex_count() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
  int index_of(const std::string& name) const;  // -1 if absent
  const std::vector<Edge>& edges() const { return edges_; }

  // Label of {u,v}, or 0 when not adjacent.
  long label(int u, int v) const;
  bool adjacent(int u, int v) const { return label(u, v) != 0; }
  std::vector<int> neighbours(int v) const;
  // Index into edges() of {u,v}, or -1.
  int edge_index(int u, int v) const;

  // Induced subgraph on the given vertices (kept in the given order).
  LabeledGraph induced(const std::vector<int>& vertices) const;
  std::vector<std::vector<int>> components() const;
  bool connected() const { return components().size() <= 1; }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::map<std::pair<int, int>, int> lookup_;
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

ValidationReport validate_graph(const LabeledGraph& g);
// Throws InvalidGraph listing every problem.
void require_valid(const LabeledGraph& g);

class Character {
 public:
  Character() = default;
  Character(const LabeledGraph& g, std::vector<long> weights);
  static Character from_weights(std::vector<long> weights);

  std::size_t size() const { return m_.size(); }
  long m(int v) const { return m_[static_cast<std::size_t>(v)]; }
  long m_edge(const Edge& e) const { return m(e.u) + m(e.v); }
  const std::vector<long>& weights() const { return m_; }
  bool is_zero() const;
  long content() const;  // gcd of the weights
  Character restricted(const std::vector<int>& vertices) const;

 private:
  std::vector<long> m_;
};

// Returns (c / gcd, gcd). Throws ZeroCharacter.
std::pair<Character, long> normalize_character(const Character& c);

struct SphericityResult {
  bool spherical = false;
  bool complete = false;
};

SphericityResult sphericity(const LabeledGraph& g, const std::vector<int>& x);
bool is_spherical(const LabeledGraph& g, const std::vector<int>& x);
std::vector<std::vector<int>> maximal_cliques(const LabeledGraph& g);
bool is_fc_type(const LabeledGraph& g);

struct ResonanceSets {
  std::vector<int> vertices;  // V_R
  std::vector<int> edges;     // indices into g.edges(), E_R
  bool vertex_resonant(int v) const;
  bool edge_resonant(int e) const;
  bool nonresonant() const { return vertices.empty() && edges.empty(); }
};

ResonanceSets resonance_sets(const LabeledGraph& g, const Character& c,
                             const FieldSpec& f);

enum class SupportSource { Vertex, Edge, Both };
const char* support_source_name(SupportSource s);

struct TorsionSupport {
  std::map<long, SupportSource> values;
  std::vector<long> orders() const;
  bool contains(long d) const { return values.count(d) > 0; }
};

// Needs every m_v != 0 and a normalized character.
TorsionSupport torsion_support(const LabeledGraph& g, const Character& c);

}  // namespace artin
