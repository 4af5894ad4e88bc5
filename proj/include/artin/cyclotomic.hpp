#pragma once

#include <vector>

#include "artin/laurent.hpp"

namespace artin {

struct CyclotomicFactor {
  long order = 0;
  LaurentPoly poly;
};

long euler_phi(long n);
std::vector<long> divisors(long n);

// Integer coefficients of Phi_d, ascending.
const std::vector<long>& cyclotomic_coefficients(long d);
CyclotomicFactor cyclotomic(long d, const FieldSpec& f);

// Largest m with Phi_d^m | f.
int mult_d(const LaurentPoly& f, long d);

struct IrreducibleFactor {
  LaurentPoly poly;  // monic, nonzero constant term
  int exponent = 0;
  // Over Q: d with poly == Phi_d, or 0 when the factor is not cyclotomic
  // (it is then reported unfactored). Over F_p: multiplicative order of t
  // modulo poly, i.e. poly divides the reduction of Phi_d.
  long order = 0;
};

// Factorization of a monic polynomial with nonzero constant term.
std::vector<IrreducibleFactor> factor_invariant(const LaurentPoly& f);

}  // namespace artin
