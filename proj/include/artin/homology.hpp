#pragma once

#include <map>
#include <string>
#include <vector>

#include "artin/cyclotomic.hpp"
#include "artin/smith.hpp"

namespace artin {

struct PrimaryPart {
  LaurentPoly factor;  // irreducible over K
  long order = 0;      // see IrreducibleFactor::order
  std::map<int, int> exponents;  // j -> number of summands Lambda/factor^j
};

// H_{k+1}(A^chi; K) = Lambda^free_rank + sum Lambda/(g) over invariant factors.
struct ModuleDecomposition {
  int k = 0;
  long free_rank = 0;
  std::vector<LaurentPoly> invariant_factors;  // nontrivial, chain order
  std::vector<PrimaryPart> primary;
  long t_minus_1_exponent = 0;

  // j -> n_{k,j}(d), read from the primary part whose factor is Phi_d.
  std::map<int, int> cyclotomic_exponents(long d) const;
  std::string to_string() const;
};

// Assembles the decomposition from the Smith forms of M_k and M_{k+1}.
ModuleDecomposition decompose(int k, std::size_t chain_rank,
                              const SmithForm& incoming,
                              const SmithForm& outgoing);

ModuleDecomposition homology_module(const FlagComplex& fc, const Character& c,
                                    const FieldSpec& f, int k);

// Decompositions for k = 0..kmax; the Smith forms of the different degrees
// are computed concurrently.
std::vector<ModuleDecomposition> homology_modules(const FlagComplex& fc,
                                                  const Character& c,
                                                  const FieldSpec& f, int kmax);

struct ShapeClause {
  std::string name;
  bool pass = true;
  std::string detail;
  // false when the clause's hypotheses fail; it is reported but not counted
  bool applies = true;
};

struct ShapeReport {
  bool skipped = false;
  std::string reason;
  std::vector<ShapeClause> clauses;
  bool ok() const;
};

// True unless char K = p divides some weight m_v or some half-label.
// Otherwise t^m - 1 and q_l(t^m) pick up repeated factors t - 1 and the
// (t-1)-part of the torsion need not be semisimple.
bool simple_unit_roots(const LabeledGraph& g, const Character& c,
                       const FieldSpec& f);

// image_dims and r as returned by flag_complex; support may be empty when
// the character is resonant, in which case the report is skipped. With
// simple_roots false the two (t-1) clauses are evaluated but do not apply.
ShapeReport verify_shape(const ModuleDecomposition& d,
                         const TorsionSupport& support, bool nonresonant,
                         const std::vector<long>& image_dims,
                         const std::vector<long>& r, bool simple_roots = true);

}  // namespace artin
