#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace artin {

// Q when p == 0, otherwise F_p.
class FieldSpec {
 public:
  FieldSpec() = default;
  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(std::uint32_t p);
  // "q", "Q", "p:5", "p5" or "F5".
  static FieldSpec parse(const std::string& s);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  bool operator==(const FieldSpec& o) const { return p_ == o.p_; }
  bool operator!=(const FieldSpec& o) const { return p_ != o.p_; }

 private:
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

class Scalar {
 public:
  using Context = FieldSpec;

  Scalar() = default;
  Scalar(const FieldSpec& f, long n);
  Scalar(const FieldSpec& f, const mpq_class& q);

  const FieldSpec& context() const { return field_; }
  const FieldSpec& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Q only.
  const mpq_class& rational() const { return q_; }
  // F_p only; value in [0, p).
  std::uint64_t residue() const { return r_; }

  // "a/b" over Q, the residue in [0, p) over F_p.
  std::string to_string() const;

 private:
  FieldSpec field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

}  // namespace artin
