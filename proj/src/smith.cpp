#include "artin/smith.hpp"

#include "artin/error.hpp"

namespace artin {

std::vector<LaurentPoly> SmithForm::nontrivial() const {
  std::vector<LaurentPoly> out;
  for (auto& d : invariant_factors)
    if (!d.is_one()) out.push_back(d);
  return out;
}

namespace {

class Eliminator {
 public:
  Eliminator(PolyMatrix a, bool track) : a_(std::move(a)), track_(track) {
    const FieldSpec& f = a_.field();
    if (track_) {
      u_ = PolyMatrix::identity(f, a_.rows());
      v_ = PolyMatrix::identity(f, a_.cols());
    }
  }

  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const LaurentPoly& q) {
    for (std::size_t c = 0; c < a_.cols(); ++c)
      if (!a_(j, c).is_zero()) a_(i, c) += q * a_(j, c);
    if (track_)
      for (std::size_t c = 0; c < u_.cols(); ++c)
        if (!u_(j, c).is_zero()) u_(i, c) += q * u_(j, c);
  }
  void add_col(std::size_t i, std::size_t j, const LaurentPoly& q) {
    for (std::size_t r = 0; r < a_.rows(); ++r)
      if (!a_(r, j).is_zero()) a_(r, i) += q * a_(r, j);
    if (track_)
      for (std::size_t r = 0; r < v_.rows(); ++r)
        if (!v_(r, j).is_zero()) v_(r, i) += q * v_(r, j);
  }
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
    if (track_)
      for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(i, c), u_(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    if (track_)
      for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, i), v_(r, j));
  }
  void scale_row(std::size_t i, const Scalar& s) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = a_(i, c).scaled(s);
    if (track_)
      for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) = u_(i, c).scaled(s);
  }

  std::size_t run() {
    std::size_t n = std::min(a_.rows(), a_.cols());
    std::size_t r = 0;
    for (; r < n; ++r) {
      if (!bring_min_to(r, r)) break;
      while (true) {
        bool dirty = false;
        for (std::size_t i = r + 1; i < a_.rows(); ++i) {
          if (a_(i, r).is_zero()) continue;
          auto [q, rem] = divmod(a_(i, r), a_(r, r));
          add_row(i, r, -q);
          if (!rem.is_zero()) dirty = true;
        }
        for (std::size_t j = r + 1; j < a_.cols(); ++j) {
          if (a_(r, j).is_zero()) continue;
          auto [q, rem] = divmod(a_(r, j), a_(r, r));
          add_col(j, r, -q);
          if (!rem.is_zero()) dirty = true;
        }
        if (dirty) {
          // A remainder of smaller degree now sits in row r or column r.
          bring_min_to(r, r, true);
          continue;
        }
        std::size_t bad_row = a_.rows();
        for (std::size_t i = r + 1; i < a_.rows() && bad_row == a_.rows(); ++i)
          for (std::size_t j = r + 1; j < a_.cols(); ++j)
            if (!a_(i, j).is_zero() && !divmod(a_(i, j), a_(r, r)).second.is_zero()) {
              bad_row = i;
              break;
            }
        if (bad_row == a_.rows()) break;
        add_row(r, bad_row, LaurentPoly::constant(a_.field(), 1));
      }
      scale_row(r, a_(r, r).leading().inverse());
    }
    return r;
  }

  PolyMatrix a_, u_, v_;

 private:
  // Moves a minimal-degree nonzero entry of the block [r0.., c0..] (or only
  // of row r0 and column c0 when cross is set) to (r0, c0).
  bool bring_min_to(std::size_t r0, std::size_t c0, bool cross = false) {
    long best = -1;
    std::size_t bi = 0, bj = 0;
    auto consider = [&](std::size_t i, std::size_t j) {
      const LaurentPoly& x = a_(i, j);
      if (x.is_zero()) return;
      if (best < 0 || x.high() < best) {
        best = x.high();
        bi = i;
        bj = j;
      }
    };
    if (cross) {
      for (std::size_t i = r0; i < a_.rows(); ++i) consider(i, c0);
      for (std::size_t j = c0; j < a_.cols(); ++j) consider(r0, j);
    } else {
      for (std::size_t i = r0; i < a_.rows(); ++i)
        for (std::size_t j = c0; j < a_.cols(); ++j) consider(i, j);
    }
    if (best < 0) return false;
    swap_rows(r0, bi);
    swap_cols(c0, bj);
    return true;
  }

  bool track_;
};

}  // namespace

SmithForm smith_normal_form(const PolyMatrix& m, bool keep_transforms) {
  SmithForm out;
  // Clear negative exponents column by column.
  PolyMatrix a = m;
  out.column_shift.assign(m.cols(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    long lo = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) lo = std::min(lo, m(i, j).low());
    out.column_shift[j] = -lo;
    if (lo != 0)
      for (std::size_t i = 0; i < m.rows(); ++i) a(i, j) = a(i, j).shifted(-lo);
  }
  Eliminator e(std::move(a), keep_transforms);
  out.rank = e.run();
  for (std::size_t i = 0; i < out.rank; ++i)
    out.invariant_factors.push_back(normalize_unit(e.a_(i, i)));
  for (std::size_t i = 0; i + 1 < out.rank; ++i)
    if (!divides(out.invariant_factors[i], out.invariant_factors[i + 1]))
      throw Error(ErrorCode::Internal, "Smith form divisibility chain broken");
  if (keep_transforms) {
    out.has_transforms = true;
    out.left = std::move(e.u_);
    out.right = std::move(e.v_);
    out.diagonal = std::move(e.a_);
  }
  return out;
}

std::size_t rank_over_fractions(const PolyMatrix& m) {
  return smith_normal_form(m).rank;
}

}  // namespace artin
