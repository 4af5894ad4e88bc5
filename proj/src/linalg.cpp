#include "artin/linalg.hpp"

namespace artin {

std::size_t rank_bareiss(const IntMatrix& in, std::size_t cols) {
  std::size_t rows = in.size();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = in[i][j];
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::size_t rank_mod_p(const IntMatrix& in, std::size_t cols, std::uint32_t p) {
  std::size_t rows = in.size();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      long v = in[i][j] % static_cast<long>(p);
      a[i][j] = static_cast<std::uint64_t>(v < 0 ? v + p : v);
    }
  auto inv = [p](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t q = r;
    while (q < rows && a[q][c] == 0) ++q;
    if (q == rows) continue;
    std::swap(a[q], a[r]);
    std::uint64_t iv = inv(a[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      std::uint64_t f = a[i][c] * iv % p;
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] = (a[i][j] + p - f * a[r][j] % p) % p;
    }
    ++r;
  }
  return r;
}

std::size_t rank_over(const IntMatrix& m, std::size_t cols, const FieldSpec& f) {
  return f.is_rational() ? rank_bareiss(m, cols)
                         : rank_mod_p(m, cols, f.characteristic());
}

}  // namespace artin
