#pragma once

#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "artin/laurent.hpp"

namespace artin {

// K_d = Q[z]/(Phi_d), z the class of t.
class ResidueField {
 public:
  explicit ResidueField(long d);
  long order() const { return d_; }
  long degree() const { return static_cast<long>(phi_.size()) - 1; }
  const std::vector<long>& modulus() const { return phi_; }

 private:
  long d_;
  std::vector<long> phi_;
};

class KdElement {
 public:
  using Context = std::shared_ptr<const ResidueField>;

  KdElement() = default;
  KdElement(const Context& k, long n);
  KdElement(const Context& k, std::vector<mpq_class> coeffs);

  const Context& context() const { return k_; }
  const std::vector<mpq_class>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  KdElement inverse() const;

  KdElement operator-() const;
  KdElement& operator+=(const KdElement& o);
  KdElement& operator-=(const KdElement& o);
  KdElement& operator*=(const KdElement& o);
  KdElement& operator/=(const KdElement& o) { return *this *= o.inverse(); }
  friend KdElement operator+(KdElement a, const KdElement& b) { return a += b; }
  friend KdElement operator-(KdElement a, const KdElement& b) { return a -= b; }
  friend KdElement operator*(KdElement a, const KdElement& b) { return a *= b; }
  friend KdElement operator/(KdElement a, const KdElement& b) { return a /= b; }
  bool operator==(const KdElement& o) const { return c_ == o.c_; }
  bool operator!=(const KdElement& o) const { return c_ != o.c_; }

  // Representative as a polynomial in z, displayed with variable "z".
  std::string to_string() const;

 private:
  Context k_;
  std::vector<mpq_class> c_;  // length deg Phi_d
};

std::shared_ptr<const ResidueField> residue_field(long d);

// f(zeta_d); f must have rational coefficients.
KdElement residue_eval(const LaurentPoly& f, long d);
KdElement residue_eval(const LaurentPoly& f,
                       const std::shared_ptr<const ResidueField>& k);

}  // namespace artin
