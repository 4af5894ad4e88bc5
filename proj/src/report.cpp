#include "artin/report.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "artin/equivariant.hpp"
#include "artin/error.hpp"
#include "artin/flag_complex.hpp"
#include "artin/forest.hpp"
#include "artin/homology.hpp"
#include "artin/resonant.hpp"
#include "artin/spectral.hpp"

namespace artin {

using nlohmann::ordered_json;

namespace {

const std::set<std::string> kMethods{"snf", "ss", "forest", "resonant"};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// factor -> exponent -> count, summed over a list of invariant factors.
using PrimaryMap = std::map<std::string, std::map<int, int>>;

PrimaryMap primary_of(const std::vector<LaurentPoly>& factors) {
  PrimaryMap out;
  for (auto& g : factors)
    for (auto& irr : factor_invariant(g)) ++out[irr.poly.to_string()][irr.exponent];
  return out;
}

PrimaryMap primary_of(const ModuleDecomposition& d) {
  PrimaryMap out;
  for (auto& p : d.primary)
    for (auto [j, n] : p.exponents) out[p.factor.to_string()][j] += n;
  return out;
}

std::string describe(const PrimaryMap& m) {
  std::string out;
  for (auto& [f, ex] : m)
    for (auto [j, n] : ex) {
      if (!out.empty()) out += " + ";
      std::string base = "Lambda/(" + f + ")" + (j > 1 ? "^" + std::to_string(j) : "");
      out += n > 1 ? "(" + base + ")^" + std::to_string(n) : base;
    }
  return out.empty() ? "0" : out;
}

std::string module_string(const ModuleDecomposition& d) {
  std::string tors = describe(primary_of(d));
  std::string out;
  if (d.free_rank > 0) out = "Lambda" + (d.free_rank > 1 ? "^" + std::to_string(d.free_rank) : "");
  if (tors != "0") out += (out.empty() ? "" : " + ") + tors;
  return out.empty() ? "0" : out;
}

std::vector<long> trim_zeros(std::vector<long> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

ordered_json decomposition_json(const ModuleDecomposition& d) {
  ordered_json j;
  j["degree"] = d.k + 1;
  j["free_rank"] = d.free_rank;
  j["invariant_factors"] = ordered_json::array();
  for (auto& g : d.invariant_factors) j["invariant_factors"].push_back(g.to_string());
  j["primary"] = ordered_json::array();
  for (auto& p : d.primary) {
    ordered_json e;
    e["factor"] = p.factor.to_string();
    e["order"] = p.order;
    ordered_json ex = ordered_json::object();
    for (auto [jj, n] : p.exponents) ex[std::to_string(jj)] = n;
    e["exponents"] = ex;
    j["primary"].push_back(e);
  }
  j["t_minus_1_exponent"] = d.t_minus_1_exponent;
  j["module"] = module_string(d);
  return j;
}

ordered_json pages_json(const PageTable& pt) {
  ordered_json out = ordered_json::array();
  for (int s = 0; s <= pt.last_page(); ++s) {
    ordered_json page;
    page["s"] = s;
    page["entries"] = ordered_json::array();
    for (auto& [pq, h] : pt.pages[static_cast<std::size_t>(s)])
      page["entries"].push_back({{"p", pq.first}, {"q", pq.second}, {"h", h}});
    out.push_back(page);
  }
  ordered_json inf;
  inf["s"] = "infinity";
  inf["entries"] = ordered_json::array();
  for (auto& [pq, h] : pt.infinity)
    inf["entries"].push_back({{"p", pq.first}, {"q", pq.second}, {"h", h}});
  out.push_back(inf);
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

}  // namespace

void JobConfig::validate() const {
  if (methods.empty()) throw Error(ErrorCode::InvalidField, "no methods selected");
  for (auto& m : methods)
    if (!kMethods.count(m)) throw Error(ErrorCode::InvalidField, "unknown method '" + m + "'");
  if (format != "text" && format != "json")
    throw Error(ErrorCode::InvalidField, "unknown format '" + format + "'");
}

bool Report::mismatch() const {
  for (auto& c : checks)
    if (c.status == "mismatch") return true;
  return false;
}

int exit_code(const Report& r) { return r.mismatch() ? 3 : 0; }

std::string Report::json() const {
  ordered_json all = body;
  all["timing"] = timing;
  return all.dump(2) + "\n";
}

Report run(const JobConfig& job) {
  job.validate();
  return run_input(parse_input(read_file(job.input_path)), job);
}

Report run_input(const ParsedInput& in, const JobConfig& job) {
  job.validate();
  Stopwatch total;
  Report rep;
  auto& b = rep.body;
  const LabeledGraph& g = in.graph;
  require_valid(g);
  FieldSpec field = job.field ? *job.field : in.field.value_or(FieldSpec::rationals());

  auto [c, divisor] = normalize_character(in.character);
  std::vector<std::string> warnings;

  b["schema_version"] = kSchemaVersion;
  {
    ordered_json input;
    input["field"] = field.name();
    input["vertices"] = ordered_json::array();
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      input["vertices"].push_back(
          {{"name", g.name(static_cast<int>(v))}, {"m", in.character.m(static_cast<int>(v))}});
    input["edges"] = ordered_json::array();
    for (auto& e : g.edges())
      input["edges"].push_back({{"u", g.name(e.u)}, {"v", g.name(e.v)}, {"label", e.label}});
    input["normalization_divisor"] = divisor;
    input["normalized_weights"] = c.weights();
    b["input"] = input;
  }
  bool fc_type = is_fc_type(g);
  b["fc_type"] = fc_type;
  if (!fc_type)
    warnings.push_back("graph is not of FC type; results describe the complex of spherical cliques");

  ResonanceSets res = resonance_sets(g, c, field);
  bool nonresonant = res.nonresonant();
  {
    ordered_json r;
    r["nonresonant"] = nonresonant;
    r["vertices"] = ordered_json::array();
    for (int v : res.vertices) r["vertices"].push_back(g.name(v));
    r["edges"] = ordered_json::array();
    for (int e : res.edges) {
      auto& ed = g.edges()[static_cast<std::size_t>(e)];
      r["edges"].push_back({g.name(ed.u), g.name(ed.v)});
    }
    b["resonance"] = r;
  }

  TorsionSupport support;
  bool have_support = nonresonant;
  {
    ordered_json t;
    if (have_support) {
      support = torsion_support(g, c);
      t["orders"] = ordered_json::array();
      for (auto& [d, src] : support.values)
        t["orders"].push_back({{"d", d}, {"source", support_source_name(src)}});
    } else {
      t["unavailable"] = "resonant character";
    }
    b["torsion_support"] = t;
  }

  Stopwatch sw;
  FlagComplex fc(g);
  std::vector<long> im = image_dims(fc, field);
  std::vector<long> r = reduced_homology_ranks(fc, field);
  int dim = fc.dimension();
  int kmax = job.kmax < 0 ? dim : std::min(job.kmax, dim);
  if (job.kmax > dim)
    warnings.push_back("kmax lowered to the flag complex dimension " + std::to_string(dim));
  {
    ordered_json j;
    j["dimension"] = dim;
    j["f_vector"] = fc.f_vector();
    j["reduced_betti"] = r;
    j["image_dims"] = im;
    j["kmax"] = kmax;
    b["flag_complex"] = j;
  }
  rep.timing["flag_complex_ms"] = sw.ms();

  // snf
  std::vector<ModuleDecomposition> hom;
  ordered_json methods;
  bool snf_ran = job.wants("snf");
  if (snf_ran) {
    sw = Stopwatch();
    hom = homology_modules(fc, c, field, kmax);
    rep.timing["snf_ms"] = sw.ms();
    ordered_json h = ordered_json::array();
    for (auto& d : hom) h.push_back(decomposition_json(d));
    b["homology"] = h;
    methods["snf"] = {{"ran", true}};
  } else {
    methods["snf"] = {{"ran", false}, {"reason", "not requested"}};
  }

  // ss
  std::map<long, TorsionTable> ss_tables;
  std::map<long, std::map<std::pair<int, int>, long>> component_sums;
  bool ss_ran = false;
  std::string ss_failure;
  if (job.wants("ss")) {
    ordered_json j;
    if (!field.is_rational()) {
      j = {{"ran", false}, {"reason", "needs characteristic 0"}};
    } else if (!nonresonant) {
      j = {{"ran", false}, {"reason", "resonant character"}};
    } else {
      sw = Stopwatch();
      ss_ran = true;
      j["ran"] = true;
      j["orders"] = ordered_json::array();
      for (long d : support.orders()) {
        ordered_json o;
        o["d"] = d;
        WeightedComplex wc = weighted_complex(fc, c, d);
        PageTable pt = page_dims(wc, 0);
        o["max_weight"] = pt.max_weight;
        o["routes_agree"] = pt.routes_agree();
        if (!pt.routes_agree()) ss_failure += "page routes differ at d=" + std::to_string(d) + "; ";
        try {
          TorsionTable tt = solve_torsion(pt, r, kmax);
          ordered_json n = ordered_json::object();
          for (auto& [k, v] : tt.n) n[std::to_string(k)] = trim_zeros(v);
          o["n"] = n;
          o["jordan_bound"] = jordan_bound_check(tt);
          if (!jordan_bound_check(tt)) ss_failure += "Jordan bound fails at d=" + std::to_string(d) + "; ";
          ss_tables.emplace(d, tt);
        } catch (const Error& e) {
          o["error"] = e.what();
          ss_failure += "d=" + std::to_string(d) + ": " + e.what() + "; ";
        }
        if (job.dump_pages) o["pages"] = pages_json(pt);
        j["orders"].push_back(o);
      }
      // Disconnected graphs: per-component tables, summed.
      if (!g.connected()) {
        for (long d : support.orders()) {
          auto& sum = component_sums[d];
          for (auto& comp : g.components()) {
            FlagComplex part(g.induced(comp));
            try {
              TorsionTable t = solve_torsion(
                  page_dims(weighted_complex(part, c.restricted(comp), d), 0),
                  reduced_homology_ranks(part, field), std::min(kmax, part.dimension()));
              for (auto& [k, v] : t.n)
                for (std::size_t jj = 0; jj < v.size(); ++jj) sum[{k, static_cast<int>(jj) + 1}] += v[jj];
            } catch (const Error& e) {
              ss_failure += "component at d=" + std::to_string(d) + ": " + e.what() + "; ";
            }
          }
        }
      }
      rep.timing["ss_ms"] = sw.ms();
    }
    methods["ss"] = j;
  } else {
    methods["ss"] = {{"ran", false}, {"reason", "not requested"}};
  }

  // forest
  PrimaryMap forest_primary;
  bool forest_ran = false;
  if (job.wants("forest")) {
    ordered_json j;
    if (!nonresonant) {
      j = {{"ran", false}, {"reason", "resonant character"}};
    } else {
      sw = Stopwatch();
      try {
        long budget = forest_budget_from_env();
        ordered_json comps = ordered_json::array();
        for (auto& comp : g.components()) {
          LabeledGraph sub = g.induced(comp);
          ForestFitting ff = forest_fitting_h1(sub, c.restricted(comp), field, budget);
          ordered_json cj;
          std::vector<std::string> names;
          for (int v : comp) names.push_back(g.name(v));
          cj["vertices"] = names;
          cj["forests"] = ff.forests;
          cj["invariant_factors"] = ordered_json::array();
          for (auto& f : ff.invariant_factors) cj["invariant_factors"].push_back(f.to_string());
          comps.push_back(cj);
          for (auto& [f, ex] : primary_of(ff.invariant_factors))
            for (auto [e, n] : ex) forest_primary[f][e] += n;
        }
        forest_ran = true;
        j["ran"] = true;
        j["components"] = comps;
      } catch (const Error& e) {
        j = {{"ran", false}, {"reason", e.what()}};
      }
      rep.timing["forest_ms"] = sw.ms();
    }
    methods["forest"] = j;
  } else {
    methods["forest"] = {{"ran", false}, {"reason", "not requested"}};
  }

  // resonant reductions
  long h1_rank = -1, h2_rank = -1;
  if (job.wants("resonant")) {
    sw = Stopwatch();
    ordered_json j;
    j["ran"] = true;
    ReducedGraph g1 = build_gamma1(g, c, field);
    h1_rank = static_cast<long>(g1.graph.components().size()) - 1;
    ordered_json gj;
    std::vector<std::string> kept;
    for (int v : g1.kept) kept.push_back(g.name(v));
    gj["vertices"] = kept;
    gj["edges"] = g1.graph.edges().size();
    gj["removed"] = ordered_json::array();
    for (auto& e : g1.log)
      gj["removed"].push_back({{"kind", e.kind}, {"cell", e.cell}, {"reason", e.reason}});
    j["gamma1"] = gj;
    j["h1_free_rank"] = h1_rank;
    if (kmax >= 1) {
      QuotientComplex q = build_f2(g, c, field);
      h2_rank = reduced_h1(q, field);
      ordered_json qj;
      qj["vertices"] = q.vertex_classes.size();
      qj["edges"] = q.edges.size();
      qj["triangles"] = q.triangles.size();
      qj["log"] = ordered_json::array();
      for (auto& e : q.log)
        qj["log"].push_back({{"kind", e.kind}, {"cell", e.cell}, {"reason", e.reason}});
      j["f2"] = qj;
      j["h2_free_rank"] = h2_rank;
    }
    methods["resonant"] = j;
    rep.timing["resonant_ms"] = sw.ms();
  } else {
    methods["resonant"] = {{"ran", false}, {"reason", "not requested"}};
  }
  b["methods"] = methods;

  // structural shape of each degree
  if (snf_ran) {
    bool simple_roots = simple_unit_roots(in.graph, in.character, field);
    if (!simple_roots && nonresonant)
      warnings.push_back("characteristic " + std::to_string(field.characteristic()) +
                         " divides a weight or half-label; (t-1) shape clauses not applied");
    ordered_json shape = ordered_json::array();
    for (auto& d : hom) {
      ShapeReport s = verify_shape(d, support, nonresonant, im, r, simple_roots);
      ordered_json sj;
      sj["degree"] = d.k + 1;
      sj["skipped"] = s.skipped;
      if (s.skipped) sj["reason"] = s.reason;
      sj["clauses"] = ordered_json::array();
      for (auto& cl : s.clauses)
        sj["clauses"].push_back({{"name", cl.name}, {"pass", cl.pass},
                                 {"applies", cl.applies}, {"detail", cl.detail}});
      shape.push_back(sj);
      if (job.cross_check && !s.skipped) {
        std::vector<std::string> bad;
        for (auto& cl : s.clauses)
          if (!cl.pass && cl.applies) bad.push_back(cl.name + ": " + cl.detail);
        rep.checks.push_back({"snf", "shape H" + std::to_string(d.k + 1),
                              bad.empty() ? "agree" : "mismatch", join(bad, "; ")});
      }
    }
    b["shape"] = shape;
  }

  if (job.cross_check) {
    if (snf_ran && job.wants("ss")) {
      if (!ss_ran) {
        rep.checks.push_back({"snf", "ss", "skipped", methods["ss"].value("reason", "")});
      } else {
        std::vector<std::string> bad;
        if (!ss_failure.empty()) bad.push_back(ss_failure);
        for (auto& [d, tt] : ss_tables)
          for (int k = 0; k <= kmax; ++k) {
            auto snf_n = hom[static_cast<std::size_t>(k)].cyclotomic_exponents(d);
            int top = k + 2;
            for (auto [j, n] : snf_n) top = std::max(top, j);
            for (int j = 1; j <= top; ++j) {
              long a = tt.at(k, j);
              long e = snf_n.count(j) ? snf_n.at(j) : 0;
              if (a != e)
                bad.push_back("n_{" + std::to_string(k) + "," + std::to_string(j) + "}(" +
                              std::to_string(d) + "): ss " + std::to_string(a) + ", snf " +
                              std::to_string(e));
            }
          }
        rep.checks.push_back({"snf", "ss", bad.empty() ? "agree" : "mismatch", join(bad, "; ")});
      }
    }
    if (ss_ran && !g.connected()) {
      std::vector<std::string> bad;
      for (auto& [d, tt] : ss_tables)
        for (int k = 0; k <= kmax; ++k)
          for (int j = 1; j <= k + 2; ++j) {
            auto& sum = component_sums[d];
            long s = sum.count({k, j}) ? sum.at({k, j}) : 0;
            if (s != tt.at(k, j))
              bad.push_back("n_{" + std::to_string(k) + "," + std::to_string(j) + "}(" +
                            std::to_string(d) + "): whole " + std::to_string(tt.at(k, j)) +
                            ", components " + std::to_string(s));
          }
      rep.checks.push_back({"ss", "ss per component", bad.empty() ? "agree" : "mismatch", join(bad, "; ")});
    }
    if (snf_ran && job.wants("forest")) {
      if (!forest_ran) {
        rep.checks.push_back({"snf", "forest", "skipped", methods["forest"].value("reason", "")});
      } else {
        PrimaryMap s = primary_of(hom[0]);
        bool ok = s == forest_primary;
        rep.checks.push_back({"snf", "forest", ok ? "agree" : "mismatch",
                              ok ? "" : "snf " + describe(s) + ", forest " + describe(forest_primary)});
      }
    }
    if (ss_ran && forest_ran) {
      std::vector<std::string> bad;
      std::map<std::string, long> order_of;
      for (auto& [d, tt] : ss_tables) {
        std::string phi = cyclotomic(d, field).poly.to_string();
        std::map<int, int> fx = forest_primary.count(phi) ? forest_primary.at(phi) : std::map<int, int>{};
        for (int j = 1; j <= 2; ++j) {
          long a = tt.at(0, j);
          long e = fx.count(j) ? fx.at(j) : 0;
          if (a != e)
            bad.push_back("n_{0," + std::to_string(j) + "}(" + std::to_string(d) +
                          "): ss " + std::to_string(a) + ", forest " + std::to_string(e));
        }
        for (auto [j, n] : fx)
          if (j > 2) bad.push_back("forest exponent " + std::to_string(j) + " at d=" + std::to_string(d));
      }
      rep.checks.push_back({"ss", "forest", bad.empty() ? "agree" : "mismatch", join(bad, "; ")});
    }
    if (snf_ran && job.wants("resonant")) {
      std::vector<std::string> bad;
      if (hom[0].free_rank != h1_rank)
        bad.push_back("H1 free rank: snf " + std::to_string(hom[0].free_rank) +
                      ", reduction " + std::to_string(h1_rank));
      if (kmax >= 1 && hom[1].free_rank != h2_rank)
        bad.push_back("H2 free rank: snf " + std::to_string(hom[1].free_rank) +
                      ", reduction " + std::to_string(h2_rank));
      rep.checks.push_back({"snf", "resonant", bad.empty() ? "agree" : "mismatch", join(bad, "; ")});
    }
  }

  ordered_json cc = ordered_json::array();
  for (auto& ch : rep.checks)
    cc.push_back({{"left", ch.left}, {"right", ch.right}, {"status", ch.status}, {"detail", ch.detail}});
  b["cross_checks"] = job.cross_check ? cc : ordered_json("disabled");
  b["warnings"] = warnings;

  if (job.dump_matrices) {
    ordered_json m = ordered_json::object();
    for (int k = 0; k <= kmax + 1; ++k)
      m["M_" + std::to_string(k)] = dump(twisted_boundary(fc, c, field, k));
    b["matrices"] = m;
  }
  rep.timing["total_ms"] = total.ms();
  return rep;
}

std::string Report::text() const {
  std::ostringstream o;
  const auto& in = body["input"];
  o << "field " << in["field"].get<std::string>() << ", " << in["vertices"].size()
    << " vertices, " << in["edges"].size() << " edges, FC type "
    << (body["fc_type"].get<bool>() ? "yes" : "no") << "\n";
  std::vector<std::string> ws;
  for (auto& v : in["vertices"])
    ws.push_back(v["name"].get<std::string>() + "=" + std::to_string(v["m"].get<long>()));
  o << "character " << join(ws, " ");
  if (in["normalization_divisor"].get<long>() != 1)
    o << " (divided by " << in["normalization_divisor"].get<long>() << ")";
  o << "\n";
  const auto& res = body["resonance"];
  if (res["nonresonant"].get<bool>()) {
    o << "resonance: none\n";
  } else {
    std::vector<std::string> cells;
    for (auto& v : res["vertices"]) cells.push_back(v.get<std::string>());
    for (auto& e : res["edges"])
      cells.push_back("{" + e[0].get<std::string>() + "," + e[1].get<std::string>() + "}");
    o << "resonance: " << join(cells, " ") << "\n";
  }
  const auto& ts = body["torsion_support"];
  if (ts.contains("orders")) {
    std::vector<std::string> ds;
    for (auto& d : ts["orders"])
      ds.push_back(std::to_string(d["d"].get<long>()) + " (" + d["source"].get<std::string>() + ")");
    o << "torsion support: {" << join(ds, ", ") << "}\n";
  } else {
    o << "torsion support: unavailable, " << ts["unavailable"].get<std::string>() << "\n";
  }
  const auto& fc = body["flag_complex"];
  o << "flag complex: dimension " << fc["dimension"].get<int>() << ", f = "
    << fc["f_vector"].dump() << ", reduced Betti " << fc["reduced_betti"].dump() << "\n";
  if (body.contains("homology"))
    for (auto& h : body["homology"])
      o << "H" << h["degree"].get<int>() << " = " << h["module"].get<std::string>() << "\n";
  const auto& m = body["methods"];
  if (m["ss"].value("ran", false))
    for (auto& od : m["ss"]["orders"]) {
      o << "ss d=" << od["d"].get<long>() << ":";
      if (od.contains("n"))
        for (auto& [k, v] : od["n"].items()) o << " n_" << k << "=" << v.dump();
      else
        o << " " << od["error"].get<std::string>();
      o << "\n";
      if (od.contains("pages"))
        for (auto& pg : od["pages"]) {
          o << "  E^" << (pg["s"].is_string() ? std::string("inf") : std::to_string(pg["s"].get<int>())) << ":";
          for (auto& e : pg["entries"])
            o << " (" << e["p"].get<int>() << "," << e["q"].get<int>() << ")=" << e["h"].get<long>();
          o << "\n";
        }
    }
  if (m["forest"].value("ran", false))
    for (auto& c : m["forest"]["components"]) {
      std::vector<std::string> fs;
      for (auto& f : c["invariant_factors"]) fs.push_back(f.get<std::string>());
      o << "forest " << c["forests"].get<long>() << " forests: ["
        << join(fs, ", ") << "]\n";
    }
  if (m["resonant"].value("ran", false)) {
    o << "resonant reduction: H1 free rank " << m["resonant"]["h1_free_rank"].get<long>();
    if (m["resonant"].contains("h2_free_rank"))
      o << ", H2 free rank " << m["resonant"]["h2_free_rank"].get<long>();
    o << "\n";
  }
  if (body["cross_checks"].is_string()) {
    o << "cross-checks disabled\n";
  } else {
    for (auto& c : checks)
      o << "check " << c.left << " vs " << c.right << ": " << c.status
        << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
  }
  for (auto& w : body["warnings"]) o << "warning: " << w.get<std::string>() << "\n";
  if (body.contains("matrices"))
    for (auto& [k, v] : body["matrices"].items()) o << k << ":\n" << v.get<std::string>();
  return o.str();
}

}  // namespace artin
