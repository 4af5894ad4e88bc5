#include "artin/field.hpp"

#include <cassert>
#include <cctype>

#include "artin/error.hpp"

namespace artin {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p))
    throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
  FieldSpec f;
  f.p_ = p;
  return f;
}

FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "q" || s == "Q") return rationals();
  std::string digits;
  if (s.size() > 2 && (s[0] == 'p' || s[0] == 'P') && s[1] == ':')
    digits = s.substr(2);
  else if (s.size() > 1 && (s[0] == 'p' || s[0] == 'F'))
    digits = s.substr(1);
  if (digits.empty() || digits.size() > 9)
    throw Error(ErrorCode::InvalidField, "bad field selector '" + s + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(ErrorCode::InvalidField, "bad field selector '" + s + "'");
  return prime(static_cast<std::uint32_t>(std::stoul(digits)));
}

std::string FieldSpec::name() const {
  return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

namespace {

std::uint64_t mod_reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

Scalar::Scalar(const FieldSpec& f, long n) : field_(f) {
  if (f.is_rational()) {
    q_ = n;
  } else {
    long p = f.characteristic();
    long r = n % p;
    if (r < 0) r += p;
    r_ = static_cast<std::uint64_t>(r);
  }
}

Scalar::Scalar(const FieldSpec& f, const mpq_class& q) : field_(f) {
  if (f.is_rational()) {
    q_ = q;
    q_.canonicalize();
  } else {
    std::uint32_t p = f.characteristic();
    std::uint64_t den = mod_reduce(q.get_den(), p);
    if (den == 0)
      throw Error(ErrorCode::InvalidField,
                  "denominator vanishes in " + f.name());
    r_ = mod_reduce(q.get_num(), p) * mod_pow(den, p - 2, p) % p;
  }
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::Internal, "inverse of zero");
  Scalar out;
  out.field_ = field_;
  if (field_.is_rational()) {
    out.q_ = 1 / q_;
  } else {
    std::uint64_t p = field_.characteristic();
    out.r_ = mod_pow(r_, p - 2, p);
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_rational())
    out.q_ = -q_;
  else if (r_ != 0)
    out.r_ = field_.characteristic() - r_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  assert(field_ == o.field_);
  if (field_.is_rational())
    q_ += o.q_;
  else
    r_ = (r_ + o.r_) % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  assert(field_ == o.field_);
  if (field_.is_rational())
    q_ -= o.q_;
  else
    r_ = (r_ + field_.characteristic() - o.r_) % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  assert(field_ == o.field_);
  if (field_.is_rational())
    q_ *= o.q_;
  else
    r_ = r_ * o.r_ % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

}  // namespace artin
