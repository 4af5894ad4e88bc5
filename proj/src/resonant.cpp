#include "artin/resonant.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <functional>
#include <set>

#include "artin/error.hpp"

namespace artin {

namespace {

void require_nonzero(const Character& c) {
  if (c.is_zero()) throw Error(ErrorCode::ZeroCharacter, "character is zero");
}

std::string edge_name(const LabeledGraph& g, int u, int v) {
  return "{" + g.name(std::min(u, v)) + "," + g.name(std::max(u, v)) + "}";
}

}  // namespace

ReducedGraph build_gamma1(const LabeledGraph& g, const Character& c,
                          const FieldSpec& f) {
  require_nonzero(c);
  ResonanceSets rs = resonance_sets(g, c, f);
  ReducedGraph out;
  std::vector<bool> drop_vertex(g.vertex_count(), false);
  for (int v : rs.vertices) {
    for (int w : g.neighbours(v))
      if (!rs.vertex_resonant(w)) drop_vertex[static_cast<std::size_t>(v)] = true;
    if (drop_vertex[static_cast<std::size_t>(v)])
      out.log.push_back({"vertex", g.name(v), "resonant vertex whose link meets V \\ V_R"});
  }
  std::map<int, int> remap;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (drop_vertex[v]) continue;
    remap[static_cast<int>(v)] = out.graph.add_vertex(g.name(static_cast<int>(v)));
    out.kept.push_back(static_cast<int>(v));
  }
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    std::string name = edge_name(g, e.u, e.v);
    if (rs.edge_resonant(static_cast<int>(i))) {
      out.log.push_back({"edge", name, "resonant edge"});
      continue;
    }
    if (rs.vertex_resonant(e.u) && rs.vertex_resonant(e.v)) {
      out.log.push_back({"edge", name, "both endpoints resonant"});
      continue;
    }
    if (drop_vertex[static_cast<std::size_t>(e.u)] ||
        drop_vertex[static_cast<std::size_t>(e.v)])
      continue;
    out.graph.add_edge(remap[e.u], remap[e.v], e.label);
  }
  out.character = c.restricted(out.kept);
  return out;
}

long h1_free_rank(const LabeledGraph& g, const Character& c, const FieldSpec& f) {
  ReducedGraph r = build_gamma1(g, c, f);
  return static_cast<long>(r.graph.components().size()) - 1;
}

QuotientComplex build_f2(const LabeledGraph& g, const Character& c,
                         const FieldSpec& f) {
  require_nonzero(c);
  ResonanceSets rs = resonance_sets(g, c, f);
  FlagComplex fc(g);
  QuotientComplex q;
  auto resonant_edge = [&](int u, int v) {
    return rs.edge_resonant(g.edge_index(u, v)) ||
           (rs.vertex_resonant(u) && rs.vertex_resonant(v));
  };

  // 2-cells listed for removal.
  std::set<Simplex> removed_triangles;
  for (auto& x : fc.simplices(2)) {
    bool all_resonant = std::all_of(x.begin(), x.end(),
                                    [&](int v) { return rs.vertex_resonant(v); });
    bool edge_and_vertex = false;
    for (std::size_t i = 0; i < 3; ++i) {
      Simplex e = facet(x, i);
      if (rs.edge_resonant(g.edge_index(e[0], e[1])) && rs.vertex_resonant(x[i]))
        edge_and_vertex = true;
    }
    if (all_resonant || edge_and_vertex) {
      removed_triangles.insert(x);
      q.log.push_back({"2-cell", fc.label(x),
                       all_resonant ? "all vertices resonant"
                                    : "resonant edge with resonant opposite vertex"});
    }
  }

  // 1-cells listed for removal: resonant ones whose link meets V \ V_R.
  std::set<Simplex> removed_edges;
  for (auto& e : fc.simplices(1)) {
    if (!resonant_edge(e[0], e[1])) continue;
    bool link_meets = false;
    for (auto& x : fc.simplices(2)) {
      if (!std::includes(x.begin(), x.end(), e.begin(), e.end())) continue;
      for (int v : x)
        if (v != e[0] && v != e[1] && !rs.vertex_resonant(v)) link_meets = true;
    }
    if (link_meets) {
      removed_edges.insert(e);
      q.log.push_back({"1-cell", fc.label(e), "resonant 1-cell whose link meets V \\ V_R"});
    }
  }

  // Faces must survive with their cofaces.
  for (auto& x : fc.simplices(2)) {
    if (removed_triangles.count(x)) continue;
    for (std::size_t i = 0; i < 3; ++i)
      if (removed_edges.count(facet(x, i))) {
        removed_triangles.insert(x);
        q.log.push_back({"2-cell", fc.label(x), "has a removed 1-cell in its boundary"});
        break;
      }
  }

  // Identify endpoints of the surviving resonant 1-cells.
  std::size_t n = g.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x
               ? x
               : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
  };
  for (auto& e : fc.simplices(1)) {
    if (removed_edges.count(e) || !resonant_edge(e[0], e[1])) continue;
    parent[static_cast<std::size_t>(find(e[1]))] = find(e[0]);
    q.log.push_back({"identify", fc.label(e), "endpoints of a surviving resonant 1-cell"});
  }
  std::map<int, int> cls;
  for (std::size_t v = 0; v < n; ++v) {
    int root = find(static_cast<int>(v));
    if (!cls.count(root)) {
      cls[root] = static_cast<int>(q.vertex_classes.size());
      q.vertex_classes.push_back({});
    }
    q.vertex_classes[static_cast<std::size_t>(cls[root])].push_back(static_cast<int>(v));
  }

  for (auto& e : fc.simplices(1))
    if (!removed_edges.count(e)) q.edges.push_back(e);
  for (auto& x : fc.simplices(2))
    if (!removed_triangles.count(x)) q.triangles.push_back(x);

  q.d1.assign(q.vertex_classes.size(), std::vector<long>(q.edges.size(), 0));
  for (std::size_t j = 0; j < q.edges.size(); ++j) {
    auto& e = q.edges[j];
    q.d1[static_cast<std::size_t>(cls[find(e[1])])][j] += 1;
    q.d1[static_cast<std::size_t>(cls[find(e[0])])][j] -= 1;
  }
  std::map<Simplex, std::size_t> edge_pos;
  for (std::size_t j = 0; j < q.edges.size(); ++j) edge_pos[q.edges[j]] = j;
  q.d2.assign(q.edges.size(), std::vector<long>(q.triangles.size(), 0));
  for (std::size_t j = 0; j < q.triangles.size(); ++j)
    for (std::size_t i = 0; i < 3; ++i)
      q.d2[edge_pos.at(facet(q.triangles[j], i))][j] += (i % 2 == 0) ? 1 : -1;
  return q;
}

long reduced_h1(const QuotientComplex& q, const FieldSpec& f) {
  long r1 = static_cast<long>(rank_over(q.d1, q.edges.size(), f));
  long r2 = static_cast<long>(rank_over(q.d2, q.triangles.size(), f));
  return static_cast<long>(q.edges.size()) - r1 - r2;
}

long h2_free_rank(const LabeledGraph& g, const Character& c, const FieldSpec& f) {
  return reduced_h1(build_f2(g, c, f), f);
}

}  // namespace artin
