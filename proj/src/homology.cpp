#include "artin/homology.hpp"

#include <algorithm>

#include "artin/error.hpp"

namespace artin {

std::map<int, int> ModuleDecomposition::cyclotomic_exponents(long d) const {
  for (auto& p : primary)
    if (p.factor.field().is_rational() && p.order == d) return p.exponents;
  return {};
}

std::string ModuleDecomposition::to_string() const {
  std::string out;
  if (free_rank > 0) out = "Lambda^" + std::to_string(free_rank);
  for (auto& g : invariant_factors) {
    if (!out.empty()) out += " + ";
    out += "Lambda/(" + g.to_string() + ")";
  }
  return out.empty() ? "0" : out;
}

ModuleDecomposition decompose(int k, std::size_t chain_rank,
                              const SmithForm& incoming,
                              const SmithForm& outgoing) {
  ModuleDecomposition d;
  d.k = k;
  d.free_rank = static_cast<long>(chain_rank) - static_cast<long>(incoming.rank) -
                static_cast<long>(outgoing.rank);
  d.invariant_factors = outgoing.nontrivial();
  if (d.invariant_factors.empty()) return d;
  const FieldSpec& f = d.invariant_factors.front().field();
  LaurentPoly t1 = t_power_minus_one(f, 1);
  for (auto& g : d.invariant_factors) {
    for (auto& irr : factor_invariant(g)) {
      auto it = std::find_if(d.primary.begin(), d.primary.end(),
                             [&](auto& p) { return p.factor == irr.poly; });
      if (it == d.primary.end()) {
        d.primary.push_back({irr.poly, irr.order, {}});
        it = d.primary.end() - 1;
      }
      ++it->exponents[irr.exponent];
      if (irr.poly == t1) d.t_minus_1_exponent += irr.exponent;
    }
  }
  std::sort(d.primary.begin(), d.primary.end(), [](auto& a, auto& b) {
    if (a.factor.span() != b.factor.span()) return a.factor.span() < b.factor.span();
    if (a.order != b.order) return a.order < b.order;
    return a.factor.to_string() < b.factor.to_string();
  });
  return d;
}

ModuleDecomposition homology_module(const FlagComplex& fc, const Character& c,
                                    const FieldSpec& f, int k) {
  if (k < 0) throw Error(ErrorCode::Internal, "homology_module needs k >= 0");
  SmithForm in = smith_normal_form(twisted_boundary(fc, c, f, k));
  SmithForm out = smith_normal_form(twisted_boundary(fc, c, f, k + 1));
  return decompose(k, fc.count(k), in, out);
}

std::vector<ModuleDecomposition> homology_modules(const FlagComplex& fc,
                                                  const Character& c,
                                                  const FieldSpec& f, int kmax) {
  int top = kmax + 1;
  std::vector<SmithForm> snf(static_cast<std::size_t>(top + 1));
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k <= top; ++k)
    snf[static_cast<std::size_t>(k)] =
        smith_normal_form(twisted_boundary(fc, c, f, k));
  std::vector<ModuleDecomposition> out;
  for (int k = 0; k <= kmax; ++k)
    out.push_back(decompose(k, fc.count(k), snf[static_cast<std::size_t>(k)],
                            snf[static_cast<std::size_t>(k + 1)]));
  return out;
}

bool ShapeReport::ok() const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [](auto& c) { return c.pass || !c.applies; });
}

bool simple_unit_roots(const LabeledGraph& g, const Character& c,
                       const FieldSpec& f) {
  if (f.is_rational()) return true;
  long p = f.characteristic();
  for (long m : c.weights())
    if (m % p == 0) return false;
  for (auto& e : g.edges())
    if (e.half() % p == 0) return false;
  return true;
}

namespace {

long at(const std::vector<long>& v, int i) {
  return i >= 0 && static_cast<std::size_t>(i) < v.size() ? v[static_cast<std::size_t>(i)] : 0;
}

}  // namespace

ShapeReport verify_shape(const ModuleDecomposition& d,
                         const TorsionSupport& support, bool nonresonant,
                         const std::vector<long>& image_dims,
                         const std::vector<long>& r, bool simple_roots) {
  ShapeReport rep;
  if (!nonresonant) {
    rep.skipped = true;
    rep.reason = "K-resonant character";
    return rep;
  }
  ShapeClause chain{"divisibility chain", true, ""};
  for (std::size_t i = 0; i + 1 < d.invariant_factors.size(); ++i)
    if (!divides(d.invariant_factors[i], d.invariant_factors[i + 1])) {
      chain.pass = false;
      chain.detail = "factor " + std::to_string(i) + " does not divide the next";
    }
  rep.clauses.push_back(chain);

  ShapeClause semisimple{"(t-1)-part semisimple", true, ""};
  long expected = at(image_dims, d.k + 1);
  for (auto& p : d.primary)
    if (p.factor == t_power_minus_one(p.factor.field(), 1))
      for (auto& [j, n] : p.exponents)
        if (j > 1) {
          semisimple.pass = false;
          semisimple.detail = "summand (t-1)^" + std::to_string(j);
        }
  semisimple.applies = simple_roots;
  rep.clauses.push_back(semisimple);
  rep.clauses.push_back({"(t-1)-exponent = dim im d_{k+1}",
                         d.t_minus_1_exponent == expected,
                         std::to_string(d.t_minus_1_exponent) + " vs " +
                             std::to_string(expected),
                         simple_roots});

  ShapeClause supp{"torsion support in {1} + T", true, ""};
  for (auto& p : d.primary) {
    if (p.factor == t_power_minus_one(p.factor.field(), 1)) continue;
    bool found = false;
    for (long dd : support.orders())
      if (divides(p.factor, cyclotomic(dd, p.factor.field()).poly)) found = true;
    if (!found) {
      supp.pass = false;
      supp.detail = "factor " + p.factor.to_string() + " outside T";
    }
  }
  rep.clauses.push_back(supp);
  rep.clauses.push_back({"free rank = r_k", d.free_rank == at(r, d.k),
                         std::to_string(d.free_rank) + " vs " +
                             std::to_string(at(r, d.k))});
  return rep;
}

}  // namespace artin
