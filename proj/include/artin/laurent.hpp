#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artin/field.hpp"

namespace artin {

// Element of K[t, t^-1]. Stored densely from the lowest exponent, with
// nonzero coefficients at both ends; the zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const FieldSpec& f) : field_(f) {}
  LaurentPoly(const Scalar& c, long exponent = 0);

  static LaurentPoly constant(const FieldSpec& f, long c) {
    return LaurentPoly(Scalar(f, c));
  }
  static LaurentPoly monomial(const FieldSpec& f, long c, long exponent) {
    return LaurentPoly(Scalar(f, c), exponent);
  }
  // coeffs[i] is the coefficient of t^(low + i).
  static LaurentPoly from_coeffs(const FieldSpec& f, long low,
                                 const std::vector<long>& coeffs);
  static LaurentPoly from_scalars(const FieldSpec& f, long low,
                                  std::vector<Scalar> coeffs);
  // Accepts the display format, e.g. "-1 + 2*t - 1/3*t^-2".
  static LaurentPoly parse(const FieldSpec& f, const std::string& text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  // Units of the Laurent ring: c*t^a with c != 0.
  bool is_unit() const { return c_.size() == 1; }
  bool is_polynomial() const { return c_.empty() || low_ >= 0; }

  long low() const { return low_; }
  long high() const { return low_ + static_cast<long>(c_.size()) - 1; }
  // Degree of the normalized polynomial.
  long span() const { return static_cast<long>(c_.size()) - 1; }
  Scalar coeff(long e) const;
  const Scalar& leading() const { return c_.back(); }
  const Scalar& trailing() const { return c_.front(); }
  const std::vector<Scalar>& coefficients() const { return c_; }
  std::vector<std::pair<long, Scalar>> terms() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly scaled(const Scalar& s) const;
  // t^e * f
  LaurentPoly shifted(long e) const;
  // f(t^m); m may be negative or zero.
  LaurentPoly substitute_power(long m) const;
  Scalar eval(const Scalar& x) const;

  std::string to_string() const;

 private:
  void trim();

  FieldSpec field_;
  long low_ = 0;
  std::vector<Scalar> c_;
};

// Division with remainder in K[t]; both arguments must be polynomials.
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a,
                                           const LaurentPoly& b);
// Exact quotient a/b in the Laurent ring, or nullopt when b does not divide a.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a,
                                        const LaurentPoly& b);
bool divides(const LaurentPoly& b, const LaurentPoly& a);

// Divide by the lowest t-power and the leading coefficient.
LaurentPoly normalize_unit(const LaurentPoly& f);
// Normalized gcd in the Laurent ring; gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly pow(const LaurentPoly& f, unsigned n);
LaurentPoly derivative(const LaurentPoly& f);

// t^m - 1
LaurentPoly t_power_minus_one(const FieldSpec& f, long m);
// q_k(t^m) = 1 + t^m + ... + t^((k-1)m)
LaurentPoly q_poly(const FieldSpec& f, long k, long m);

}  // namespace artin
