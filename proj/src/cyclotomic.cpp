#include "artin/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

#include "artin/error.hpp"

namespace artin {

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

const std::vector<long>& cyclotomic_coefficients(long d) {
  static std::mutex mu;
  static std::map<long, std::vector<long>> cache;
  if (d < 1) throw Error(ErrorCode::Internal, "cyclotomic order must be >= 1");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  // t^d - 1 divided by Phi_e for every proper divisor e; all divisors are
  // monic with integer coefficients, so plain integer long division is exact.
  std::vector<long> num(static_cast<std::size_t>(d + 1), 0);
  num[0] = -1;
  num[static_cast<std::size_t>(d)] = 1;
  for (long e : divisors(d)) {
    if (e == d) continue;
    const std::vector<long>& den = cyclotomic_coefficients(e);
    std::size_t dd = den.size() - 1;
    std::vector<long> q(num.size() - dd, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
      long c = num[k + dd];
      q[k] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    num = std::move(q);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(d, std::move(num)).first->second;
}

CyclotomicFactor cyclotomic(long d, const FieldSpec& f) {
  return {d, LaurentPoly::from_coeffs(f, 0, cyclotomic_coefficients(d))};
}

int mult_d(const LaurentPoly& f, long d) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "mult_d of zero");
  LaurentPoly phi = cyclotomic(d, f.field()).poly;
  LaurentPoly g = f;
  int m = 0;
  while (true) {
    auto q = divide_exact(g, phi);
    if (!q) return m;
    g = std::move(*q);
    ++m;
  }
}

namespace {

using Poly = LaurentPoly;

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) {
  return divmod(a * b, m).second;
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& m) {
  Poly r = divmod(Poly::constant(m.field(), 1), m).second;
  Poly b = divmod(base, m).second;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mulmod(r, r, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, b, m);
  }
  return r;
}

Poly monic(const Poly& f) { return f.scaled(f.leading().inverse()); }

Poly exact(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::Internal, "inexact division");
  return q;
}

// p-th root of a polynomial whose derivative vanishes over F_p.
Poly pth_root(const Poly& f) {
  long p = f.field().characteristic();
  Poly r(f.field());
  for (auto& [e, c] : f.terms()) r += Poly(c, e / p);
  return r;
}

void squarefree(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
  if (f.span() <= 0) return;
  Poly c = gcd(f, derivative(f));
  c = c.is_zero() ? f : c;
  Poly w = exact(f, c);
  int i = 1;
  while (w.span() > 0) {
    Poly y = gcd(w, c);
    Poly z = exact(w, y);
    if (z.span() > 0) out.emplace_back(monic(z), i * mult);
    ++i;
    w = y;
    c = exact(c, y);
  }
  if (c.span() > 0)
    squarefree(monic(pth_root(c)),
               mult * static_cast<int>(f.field().characteristic()), out);
}

void equal_degree(const Poly& g, long d, std::mt19937_64& rng,
                  std::vector<Poly>& out) {
  if (g.span() == d) {
    out.push_back(monic(g));
    return;
  }
  const FieldSpec& f = g.field();
  long p = f.characteristic();
  std::uniform_int_distribution<long> coin(0, p - 1);
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(d));
  while (true) {
    std::vector<long> a(static_cast<std::size_t>(g.span()));
    for (auto& x : a) x = coin(rng);
    Poly r = Poly::from_coeffs(f, 0, a);
    if (r.span() < 1) continue;
    Poly b(f);
    if (p == 2) {
      // Absolute trace from F_{2^d}.
      Poly s = r;
      b = r;
      for (long i = 1; i < d; ++i) {
        s = mulmod(s, s, g);
        b += s;
      }
    } else {
      b = powmod(r, (q - 1) / 2, g) - Poly::constant(f, 1);
    }
    Poly h = gcd(g, b);
    if (h.is_zero() || h.span() == 0 || h.span() == g.span()) continue;
    equal_degree(h, d, rng, out);
    equal_degree(exact(g, h), d, rng, out);
    return;
  }
}

// Multiplicative order of t modulo g, searched up to a bound; 0 if larger.
long order_of_t(const Poly& g) {
  const long kBound = 200000;
  const FieldSpec& f = g.field();
  Poly one = divmod(Poly::constant(f, 1), g).second;
  Poly x = divmod(Poly::monomial(f, 1, 1), g).second;
  Poly cur = x;
  for (long n = 1; n <= kBound; ++n) {
    if (cur == one) return n;
    cur = divmod(cur.shifted(1), g).second;
  }
  return 0;
}

std::vector<IrreducibleFactor> factor_mod_p(const Poly& f) {
  std::vector<std::pair<Poly, int>> sqf;
  squarefree(monic(f), 1, sqf);
  std::mt19937_64 rng(0x5eed);
  std::vector<IrreducibleFactor> out;
  const FieldSpec& k = f.field();
  mpz_class p = k.characteristic();
  for (auto& [part, e] : sqf) {
    Poly rest = part;
    Poly x = Poly::monomial(k, 1, 1);
    Poly h = divmod(x, rest).second;
    for (long i = 1; 2 * i <= rest.span(); ++i) {
      h = powmod(h, p, rest);
      Poly g = gcd(rest, h - x);
      if (g.span() > 0) {
        std::vector<Poly> irr;
        equal_degree(g, i, rng, irr);
        for (auto& q : irr) out.push_back({q, e, 0});
        rest = exact(rest, g);
        h = divmod(h, rest).second;
      }
    }
    if (rest.span() > 0) out.push_back({monic(rest), e, 0});
  }
  // Merge equal irreducibles coming from different squarefree layers.
  std::vector<IrreducibleFactor> merged;
  for (auto& fac : out) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](auto& m) { return m.poly == fac.poly; });
    if (it == merged.end())
      merged.push_back(fac);
    else
      it->exponent += fac.exponent;
  }
  for (auto& fac : merged) fac.order = order_of_t(fac.poly);
  return merged;
}

std::vector<IrreducibleFactor> factor_rational(const Poly& f) {
  std::vector<IrreducibleFactor> out;
  Poly rest = f;
  long deg = f.span();
  // phi(d) >= sqrt(d/2), so orders beyond 2 deg^2 cannot divide f.
  for (long d = 1; rest.span() > 0 && d <= 2 * deg * deg + 2; ++d) {
    if (euler_phi(d) > rest.span()) continue;
    Poly phi = cyclotomic(d, f.field()).poly;
    int e = 0;
    while (auto q = divide_exact(rest, phi)) {
      rest = std::move(*q);
      ++e;
    }
    if (e > 0) out.push_back({phi, e, d});
  }
  if (rest.span() > 0) out.push_back({monic(rest), 1, 0});
  return out;
}

}  // namespace

std::vector<IrreducibleFactor> factor_invariant(const LaurentPoly& f) {
  if (f.is_zero())
    throw Error(ErrorCode::ZeroPolynomial, "factor_invariant of zero");
  Poly g = normalize_unit(f);
  if (g.span() == 0) return {};
  std::vector<IrreducibleFactor> out = g.field().is_rational()
                                           ? factor_rational(g)
                                           : factor_mod_p(g);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.poly.span() != b.poly.span()) return a.poly.span() < b.poly.span();
    if (a.order != b.order) return a.order < b.order;
    return a.poly.to_string() < b.poly.to_string();
  });
  return out;
}

}  // namespace artin
