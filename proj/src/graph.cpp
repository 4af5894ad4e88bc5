#include "artin/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "artin/cyclotomic.hpp"
#include "artin/error.hpp"

namespace artin {

int LabeledGraph::add_vertex(const std::string& name) {
  names_.push_back(name);
  return static_cast<int>(names_.size()) - 1;
}

void LabeledGraph::add_edge(int u, int v, long label) {
  edges_.push_back({u, v, label});
  auto key = std::minmax(u, v);
  lookup_.emplace(std::make_pair(key.first, key.second),
                  static_cast<int>(edges_.size()) - 1);
}

void LabeledGraph::add_edge(const std::string& u, const std::string& v,
                            long label) {
  int a = index_of(u), b = index_of(v);
  if (a < 0 || b < 0)
    throw Error(ErrorCode::InvalidGraph, "unknown vertex in edge " + u + " " + v);
  add_edge(a, b, label);
}

int LabeledGraph::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

int LabeledGraph::edge_index(int u, int v) const {
  auto key = std::minmax(u, v);
  auto it = lookup_.find({key.first, key.second});
  return it == lookup_.end() ? -1 : it->second;
}

long LabeledGraph::label(int u, int v) const {
  if (u == v) return 0;
  int e = edge_index(u, v);
  return e < 0 ? 0 : edges_[static_cast<std::size_t>(e)].label;
}

std::vector<int> LabeledGraph::neighbours(int v) const {
  std::set<int> out;
  for (auto& e : edges_) {
    if (e.u == v && e.v != v) out.insert(e.v);
    if (e.v == v && e.u != v) out.insert(e.u);
  }
  return {out.begin(), out.end()};
}

LabeledGraph LabeledGraph::induced(const std::vector<int>& vertices) const {
  LabeledGraph h;
  std::map<int, int> remap;
  for (int v : vertices) remap[v] = h.add_vertex(name(v));
  for (auto& e : edges_) {
    auto a = remap.find(e.u), b = remap.find(e.v);
    if (a != remap.end() && b != remap.end())
      h.add_edge(a->second, b->second, e.label);
  }
  return h;
}

std::vector<std::vector<int>> LabeledGraph::components() const {
  std::size_t n = names_.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (auto& e : edges_) parent[static_cast<std::size_t>(find(e.u))] = find(e.v);
  std::map<int, std::vector<int>> groups;
  for (std::size_t v = 0; v < n; ++v)
    groups[find(static_cast<int>(v))].push_back(static_cast<int>(v));
  std::vector<std::vector<int>> out;
  for (auto& [root, vs] : groups) out.push_back(vs);
  std::sort(out.begin(), out.end());
  return out;
}

ValidationReport validate_graph(const LabeledGraph& g) {
  ValidationReport r;
  if (g.vertex_count() == 0) r.problems.push_back("empty graph");
  std::set<std::string> seen;
  for (auto& n : g.names())
    if (!seen.insert(n).second) r.problems.push_back("duplicate vertex " + n);
  std::set<std::pair<int, int>> pairs;
  int n = static_cast<int>(g.vertex_count());
  for (auto& e : g.edges()) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      r.problems.push_back("edge with unknown vertex");
      continue;
    }
    std::string tag = g.name(e.u) + "-" + g.name(e.v);
    if (e.u == e.v) r.problems.push_back("loop at " + g.name(e.u));
    if (e.label < 2)
      r.problems.push_back("label " + std::to_string(e.label) + " < 2 on " + tag);
    if (e.label % 2 != 0)
      r.problems.push_back("odd label " + std::to_string(e.label) + " on " + tag);
    if (!pairs.insert(std::minmax(e.u, e.v)).second)
      r.problems.push_back("duplicate edge " + tag);
  }
  return r;
}

void require_valid(const LabeledGraph& g) {
  ValidationReport r = validate_graph(g);
  if (r.ok()) return;
  std::string msg = "invalid graph:";
  for (auto& p : r.problems) msg += " " + p + ";";
  throw Error(ErrorCode::InvalidGraph, msg);
}

Character::Character(const LabeledGraph& g, std::vector<long> weights)
    : m_(std::move(weights)) {
  if (m_.size() != g.vertex_count())
    throw Error(ErrorCode::SizeMismatch,
                "character has " + std::to_string(m_.size()) +
                    " weights for " + std::to_string(g.vertex_count()) +
                    " vertices");
}

bool Character::is_zero() const {
  return std::all_of(m_.begin(), m_.end(), [](long x) { return x == 0; });
}

long Character::content() const {
  long g = 0;
  for (long x : m_) g = std::gcd(g, x);
  return g;
}

Character Character::restricted(const std::vector<int>& vertices) const {
  Character c;
  for (int v : vertices) c.m_.push_back(m(v));
  return c;
}

Character Character::from_weights(std::vector<long> weights) {
  Character c;
  c.m_ = std::move(weights);
  return c;
}

std::pair<Character, long> normalize_character(const Character& c) {
  if (c.is_zero()) throw Error(ErrorCode::ZeroCharacter, "character is zero");
  long d = c.content();
  std::vector<long> w = c.weights();
  for (auto& x : w) x /= d;
  return {Character::from_weights(std::move(w)), d};
}

SphericityResult sphericity(const LabeledGraph& g, const std::vector<int>& x) {
  SphericityResult r;
  std::vector<int> big_degree(g.vertex_count(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      long l = g.label(x[i], x[j]);
      if (l == 0) return r;
      if (l >= 4) {
        ++big_degree[static_cast<std::size_t>(x[i])];
        ++big_degree[static_cast<std::size_t>(x[j])];
      }
    }
  r.complete = true;
  r.spherical = std::all_of(x.begin(), x.end(), [&](int v) {
    return big_degree[static_cast<std::size_t>(v)] <= 1;
  });
  return r;
}

bool is_spherical(const LabeledGraph& g, const std::vector<int>& x) {
  return sphericity(g, x).spherical;
}

namespace {

void bron_kerbosch(const LabeledGraph& g, std::vector<int>& r,
                   std::set<int> p, std::set<int> x,
                   std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    std::vector<int> c = r;
    std::sort(c.begin(), c.end());
    out.push_back(c);
    return;
  }
  // Pivot on the vertex of P u X with most neighbours in P.
  int pivot = -1;
  std::size_t best = 0;
  for (const auto* s : {&p, &x})
    for (int u : *s) {
      std::size_t k = 0;
      for (int w : p)
        if (g.adjacent(u, w)) ++k;
      if (pivot < 0 || k > best) {
        pivot = u;
        best = k;
      }
    }
  std::vector<int> cand;
  for (int v : p)
    if (!g.adjacent(pivot, v)) cand.push_back(v);
  for (int v : cand) {
    std::set<int> np, nx;
    for (int w : p)
      if (g.adjacent(v, w)) np.insert(w);
    for (int w : x)
      if (g.adjacent(v, w)) nx.insert(w);
    r.push_back(v);
    bron_kerbosch(g, r, np, nx, out);
    r.pop_back();
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const LabeledGraph& g) {
  std::set<int> all;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) all.insert(static_cast<int>(v));
  std::vector<int> r;
  std::vector<std::vector<int>> out;
  bron_kerbosch(g, r, all, {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_fc_type(const LabeledGraph& g) {
  for (auto& c : maximal_cliques(g))
    if (!is_spherical(g, c)) return false;
  return true;
}

bool ResonanceSets::vertex_resonant(int v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool ResonanceSets::edge_resonant(int e) const {
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

ResonanceSets resonance_sets(const LabeledGraph& g, const Character& c,
                             const FieldSpec& f) {
  ResonanceSets r;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (c.m(static_cast<int>(v)) == 0) r.vertices.push_back(static_cast<int>(v));
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    bool half_vanishes = !f.is_rational() &&
                         e.half() % static_cast<long>(f.characteristic()) == 0;
    if (c.m_edge(e) == 0 && half_vanishes) r.edges.push_back(static_cast<int>(i));
  }
  return r;
}

const char* support_source_name(SupportSource s) {
  switch (s) {
    case SupportSource::Vertex: return "vertex";
    case SupportSource::Edge: return "edge";
    case SupportSource::Both: return "both";
  }
  return "?";
}

std::vector<long> TorsionSupport::orders() const {
  std::vector<long> out;
  for (auto& [d, s] : values) out.push_back(d);
  return out;
}

TorsionSupport torsion_support(const LabeledGraph& g, const Character& c) {
  if (c.is_zero()) throw Error(ErrorCode::ZeroCharacter, "character is zero");
  if (c.content() != 1)
    throw Error(ErrorCode::NotNormalized, "character is not normalized");
  TorsionSupport t;
  auto mark = [&](long d, SupportSource s) {
    auto it = t.values.find(d);
    if (it == t.values.end())
      t.values.emplace(d, s);
    else if (it->second != s)
      it->second = SupportSource::Both;
  };
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    long m = c.m(static_cast<int>(v));
    if (m == 0)
      throw Error(ErrorCode::ResonantVertex,
                  "vertex " + g.name(static_cast<int>(v)) + " has m = 0");
    for (long d : divisors(std::labs(m)))
      if (d > 1) mark(d, SupportSource::Vertex);
  }
  for (auto& e : g.edges()) {
    long me = c.m_edge(e);
    long prod = std::labs(e.half() * me);
    if (prod == 0) continue;
    for (long d : divisors(prod))
      if (d > 1 && me % d != 0) mark(d, SupportSource::Edge);
  }
  return t;
}

}  // namespace artin
