#include "artin/laurent.hpp"

#include <cctype>
#include <cstdlib>

#include "artin/error.hpp"

namespace artin {

LaurentPoly::LaurentPoly(const Scalar& c, long exponent)
    : field_(c.field()), low_(exponent) {
  if (!c.is_zero()) c_.push_back(c);
}

LaurentPoly LaurentPoly::from_coeffs(const FieldSpec& f, long low,
                                     const std::vector<long>& coeffs) {
  std::vector<Scalar> s;
  s.reserve(coeffs.size());
  for (long c : coeffs) s.emplace_back(f, c);
  return from_scalars(f, low, std::move(s));
}

LaurentPoly LaurentPoly::from_scalars(const FieldSpec& f, long low,
                                      std::vector<Scalar> coeffs) {
  LaurentPoly p(f);
  p.low_ = low;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  std::size_t first = 0;
  while (first < c_.size() && c_[first].is_zero()) ++first;
  if (first > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(first));
    low_ += static_cast<long>(first);
  }
  if (c_.empty()) low_ = 0;
}

bool LaurentPoly::is_one() const {
  return c_.size() == 1 && low_ == 0 && c_[0].is_one();
}

Scalar LaurentPoly::coeff(long e) const {
  if (c_.empty() || e < low_ || e > high()) return Scalar(field_, 0);
  return c_[static_cast<std::size_t>(e - low_)];
}

std::vector<std::pair<long, Scalar>> LaurentPoly::terms() const {
  std::vector<std::pair<long, Scalar>> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) out.emplace_back(low_ + static_cast<long>(i), c_[i]);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  long lo = std::min(low_, o.low_);
  long hi = std::max(high(), o.high());
  if (lo < low_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo),
              Scalar(field_, 0));
    low_ = lo;
  }
  if (hi > high()) c_.resize(static_cast<std::size_t>(hi - lo + 1),
                             Scalar(field_, 0));
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[static_cast<std::size_t>(o.low_ - low_) + i] += o.c_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  return *this += -o;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly(a.field());
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(a.field(), 0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] += a.c_[i] * b.c_[j];
  }
  return LaurentPoly::from_scalars(a.field(), a.low_ + b.low_, std::move(c));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (field_ != o.field_ || c_.size() != o.c_.size()) return false;
  if (c_.empty()) return true;
  if (low_ != o.low_) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

LaurentPoly LaurentPoly::scaled(const Scalar& s) const {
  if (s.is_zero()) return LaurentPoly(field_);
  LaurentPoly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

LaurentPoly LaurentPoly::shifted(long e) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += e;
  return r;
}

LaurentPoly LaurentPoly::substitute_power(long m) const {
  LaurentPoly r(field_);
  for (auto& [e, c] : terms()) r += LaurentPoly(c, e * m);
  return r;
}

Scalar LaurentPoly::eval(const Scalar& x) const {
  Scalar acc(field_, 0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  if (low_ == 0) return acc;
  Scalar xp(field_, 1);
  Scalar base = low_ > 0 ? x : x.inverse();
  for (long i = 0; i < std::labs(low_); ++i) xp *= base;
  return acc * xp;
}

std::string LaurentPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [e, c] : terms()) {
    std::string coef = c.to_string();
    bool neg = field_.is_rational() && coef[0] == '-';
    if (neg) coef.erase(0, 1);
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (e == 0) {
      out += coef;
      continue;
    }
    if (coef != "1") out += coef + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

struct PolyParser {
  const FieldSpec& f;
  const std::string& s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(1, static_cast<int>(i) + 1, msg);
  }
  long integer() {
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || !std::isdigit(static_cast<unsigned char>(s[i - 1])))
      fail("expected integer");
    return std::stol(s.substr(start, i - start));
  }
  mpz_class natural() {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected number");
    return mpz_class(s.substr(start, i - start));
  }

  LaurentPoly run() {
    LaurentPoly out(f);
    skip();
    bool first = true;
    while (true) {
      skip();
      if (i >= s.size()) break;
      int sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      mpq_class coef = 1;
      bool have_coef = false;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        mpz_class num = natural();
        mpz_class den = 1;
        if (i < s.size() && s[i] == '/') {
          ++i;
          den = natural();
          if (den == 0) fail("zero denominator");
        }
        coef = mpq_class(num, den);
        coef.canonicalize();
        have_coef = true;
        skip();
        if (i < s.size() && s[i] == '*') {
          ++i;
          skip();
          if (i >= s.size() || s[i] != 't') fail("expected 't'");
        }
      }
      long e = 0;
      if (i < s.size() && s[i] == 't') {
        ++i;
        e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          e = integer();
        }
      } else if (!have_coef) {
        fail("expected term");
      }
      out += LaurentPoly(Scalar(f, coef * sign), e);
    }
    if (first) fail("empty polynomial");
    return out;
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const FieldSpec& f, const std::string& text) {
  PolyParser p{f, text};
  return p.run();
}

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a,
                                           const LaurentPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero");
  if (!a.is_polynomial() || !b.is_polynomial())
    throw Error(ErrorCode::Internal, "divmod needs polynomials");
  const FieldSpec& f = a.field();
  if (a.is_zero() || a.high() < b.high())
    return {LaurentPoly(f), a};
  long db = b.high();
  // Dense remainder indexed from exponent 0.
  std::vector<Scalar> r(static_cast<std::size_t>(a.high() + 1), Scalar(f, 0));
  for (auto& [e, c] : a.terms()) r[static_cast<std::size_t>(e)] = c;
  std::vector<Scalar> bc(static_cast<std::size_t>(db + 1), Scalar(f, 0));
  for (auto& [e, c] : b.terms()) bc[static_cast<std::size_t>(e)] = c;
  Scalar inv = b.leading().inverse();
  long dq = a.high() - db;
  std::vector<Scalar> q(static_cast<std::size_t>(dq + 1), Scalar(f, 0));
  for (long k = dq; k >= 0; --k) {
    Scalar c = r[static_cast<std::size_t>(k + db)];
    if (c.is_zero()) continue;
    c *= inv;
    q[static_cast<std::size_t>(k)] = c;
    for (long j = 0; j <= db; ++j)
      if (!bc[static_cast<std::size_t>(j)].is_zero())
        r[static_cast<std::size_t>(k + j)] -= c * bc[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {LaurentPoly::from_scalars(f, 0, std::move(q)),
          LaurentPoly::from_scalars(f, 0, std::move(r))};
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a,
                                        const LaurentPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero");
  if (a.is_zero()) return LaurentPoly(a.field());
  auto [q, r] = divmod(a.shifted(-a.low()), b.shifted(-b.low()));
  if (!r.is_zero()) return std::nullopt;
  return q.shifted(a.low() - b.low());
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return divide_exact(a, b).has_value();
}

LaurentPoly normalize_unit(const LaurentPoly& f) {
  if (f.is_zero())
    throw Error(ErrorCode::ZeroPolynomial, "normalize_unit of zero");
  return f.shifted(-f.low()).scaled(f.leading().inverse());
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return a;
  if (a.is_zero()) return normalize_unit(b);
  if (b.is_zero()) return normalize_unit(a);
  LaurentPoly x = normalize_unit(a);
  LaurentPoly y = normalize_unit(b);
  if (x.span() < y.span()) std::swap(x, y);
  while (!y.is_zero()) {
    LaurentPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? r : normalize_unit(r);
  }
  return normalize_unit(x);
}

LaurentPoly pow(const LaurentPoly& f, unsigned n) {
  LaurentPoly r = LaurentPoly::constant(f.field(), 1);
  LaurentPoly b = f;
  while (n) {
    if (n & 1u) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

LaurentPoly derivative(const LaurentPoly& f) {
  LaurentPoly r(f.field());
  for (auto& [e, c] : f.terms())
    if (e != 0) r += LaurentPoly(c * Scalar(f.field(), e), e - 1);
  return r;
}

LaurentPoly t_power_minus_one(const FieldSpec& f, long m) {
  return LaurentPoly::monomial(f, 1, m) - LaurentPoly::constant(f, 1);
}

LaurentPoly q_poly(const FieldSpec& f, long k, long m) {
  if (k < 1) throw Error(ErrorCode::Internal, "q_poly needs k >= 1");
  LaurentPoly r(f);
  for (long i = 0; i < k; ++i) r += LaurentPoly::monomial(f, 1, i * m);
  return r;
}

}  // namespace artin
