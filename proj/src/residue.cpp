#include "artin/residue.hpp"

#include "artin/cyclotomic.hpp"
#include "artin/error.hpp"

namespace artin {

ResidueField::ResidueField(long d) : d_(d), phi_(cyclotomic_coefficients(d)) {}

std::shared_ptr<const ResidueField> residue_field(long d) {
  return std::make_shared<const ResidueField>(d);
}

namespace {

// Reduce a coefficient vector modulo the monic Phi_d in place.
void reduce(std::vector<mpq_class>& c, const std::vector<long>& phi) {
  std::size_t n = phi.size() - 1;
  for (std::size_t i = c.size(); i-- > n;) {
    if (sgn(c[i]) == 0) continue;
    mpq_class a = c[i];
    for (std::size_t j = 0; j <= n; ++j) c[i - n + j] -= a * phi[j];
  }
  c.resize(n);
}

}  // namespace

KdElement::KdElement(const Context& k, long n)
    : k_(k), c_(static_cast<std::size_t>(k->degree())) {
  c_[0] = n;
  if (k->degree() == 1) reduce(c_, k->modulus());
}

KdElement::KdElement(const Context& k, std::vector<mpq_class> coeffs)
    : k_(k), c_(std::move(coeffs)) {
  if (c_.size() < static_cast<std::size_t>(k->degree()))
    c_.resize(static_cast<std::size_t>(k->degree()));
  reduce(c_, k->modulus());
}

bool KdElement::is_zero() const {
  for (auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool KdElement::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

KdElement KdElement::operator-() const {
  KdElement r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

KdElement& KdElement::operator+=(const KdElement& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

KdElement& KdElement::operator-=(const KdElement& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

KdElement& KdElement::operator*=(const KdElement& o) {
  std::vector<mpq_class> p(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) p[i + j] += c_[i] * o.c_[j];
  }
  reduce(p, k_->modulus());
  c_ = std::move(p);
  return *this;
}

KdElement KdElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::Internal, "inverse of zero in K_d");
  // Extended Euclid in Q[z] against Phi_d.
  FieldSpec q = FieldSpec::rationals();
  std::vector<Scalar> a;
  for (auto& x : c_) a.emplace_back(q, x);
  LaurentPoly r0 = LaurentPoly::from_coeffs(q, 0, k_->modulus());
  LaurentPoly r1 = LaurentPoly::from_scalars(q, 0, a);
  LaurentPoly s0(q), s1 = LaurentPoly::constant(q, 1);
  while (!r1.is_zero()) {
    auto [quo, rem] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    LaurentPoly s2 = s0 - quo * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_d is irreducible.
  LaurentPoly inv = s0.scaled(r0.coeff(0).inverse());
  std::vector<mpq_class> out(c_.size());
  for (auto& [e, c] : inv.terms()) out[static_cast<std::size_t>(e)] = c.rational();
  return KdElement(k_, std::move(out));
}

std::string KdElement::to_string() const {
  std::string s = LaurentPoly::from_scalars(
                      FieldSpec::rationals(), 0,
                      [&] {
                        std::vector<Scalar> v;
                        for (auto& x : c_) v.emplace_back(FieldSpec::rationals(), x);
                        return v;
                      }())
                      .to_string();
  for (auto& ch : s)
    if (ch == 't') ch = 'z';
  return s;
}

KdElement residue_eval(const LaurentPoly& f,
                       const std::shared_ptr<const ResidueField>& k) {
  if (!f.field().is_rational())
    throw Error(ErrorCode::InvalidField, "residue fields need char 0");
  KdElement z(k, std::vector<mpq_class>{0, 1});
  KdElement acc(k, 0);
  auto cs = f.coefficients();
  for (std::size_t i = cs.size(); i-- > 0;) {
    acc *= z;
    acc += KdElement(k, std::vector<mpq_class>{cs[i].rational()});
  }
  if (f.is_zero() || f.low() == 0) return acc;
  KdElement base = f.low() > 0 ? z : z.inverse();
  for (long i = 0; i < std::labs(f.low()); ++i) acc *= base;
  return acc;
}

KdElement residue_eval(const LaurentPoly& f, long d) {
  return residue_eval(f, residue_field(d));
}

}  // namespace artin
