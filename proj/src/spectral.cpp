#include "artin/spectral.hpp"

#include <algorithm>

#include "artin/cyclotomic.hpp"
#include "artin/equivariant.hpp"
#include "artin/error.hpp"
#include "artin/linalg.hpp"

namespace artin {

int WeightedComplex::max_weight() const {
  int m = 0;
  for (auto& layer : weights)
    for (int w : layer) m = std::max(m, w);
  return m;
}

WeightedComplex weighted_complex(const FlagComplex& fc, const Character& c,
                                 long d) {
  FieldSpec q = FieldSpec::rationals();
  const LabeledGraph& g = fc.graph();
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (c.m(static_cast<int>(v)) == 0)
      throw Error(ErrorCode::ResonantCharacter,
                  "spectral sequence needs a nonresonant character");
  WeightedComplex wc;
  wc.d = d;
  wc.fc = fc;
  wc.field = residue_field(d);
  LaurentPoly phi = cyclotomic(d, q).poly;
  for (int k = -1; k <= fc.dimension(); ++k) {
    std::vector<int> layer;
    for (auto& x : fc.simplices(k))
      layer.push_back(mult_d(simplex_weights(fc, c, q, x).product(), d));
    wc.weights.push_back(std::move(layer));
  }
  for (int k = -1; k <= fc.dimension(); ++k) {
    std::vector<std::vector<FacetDrop>> cols;
    const auto& xs = fc.simplices(k);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      std::vector<FacetDrop> fs;
      for (std::size_t i = 0; i < xs[j].size(); ++i) {
        std::size_t row = static_cast<std::size_t>(fc.index(facet(xs[j], i)));
        int sign = (i % 2 == 0) ? 1 : -1;
        LaurentPoly coef = facet_coefficient(g, c, q, xs[j], i);
        if (sign < 0) coef = -coef;
        int drop = wc.weight(k, j) - wc.weight(k - 1, row);
        if (drop < 0 || mult_d(coef, d) != drop)
          throw Error(ErrorCode::Internal, "weight drop does not match the facet coefficient");
        LaurentPoly rest = *divide_exact(coef, pow(phi, static_cast<unsigned>(drop)));
        KdElement u = residue_eval(rest, wc.field);
        if (u.is_zero()) throw Error(ErrorCode::Internal, "vanishing leading unit");
        fs.push_back({row, sign, drop, u});
      }
      cols.push_back(std::move(fs));
    }
    wc.facets.push_back(std::move(cols));
  }
  return wc;
}

namespace {

// Filtered chain complex over a field, degrees min_degree..max.
template <class T>
struct Filtered {
  typename T::Context ctx;
  int min_degree = -1;
  std::vector<std::vector<int>> w;  // [n - min_degree]
  std::vector<Mat<T>> bd;           // C_n -> C_{n-1}, [n - min_degree]

  int max_degree() const { return min_degree + static_cast<int>(w.size()) - 1; }
  std::size_t count(int n) const {
    if (n < min_degree || n > max_degree()) return 0;
    return w[static_cast<std::size_t>(n - min_degree)].size();
  }
  int weight(int n, std::size_t i) const {
    return w[static_cast<std::size_t>(n - min_degree)][i];
  }

  // F_p C_n intersected with the preimage of F_{p-r} C_{n-1}.
  std::vector<Vec<T>> cycles(int r, int p, int n) const {
    std::size_t N = count(n);
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < N; ++j)
      if (weight(n, j) <= p) cols.push_back(j);
    std::vector<Vec<T>> out;
    if (cols.empty()) return out;
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < count(n - 1); ++i)
      if (weight(n - 1, i) > p - r) rows.push_back(i);
    const Mat<T>* b = n > min_degree ? &bd[static_cast<std::size_t>(n - min_degree)] : nullptr;
    if (b == nullptr || rows.empty()) {
      for (auto j : cols) {
        Vec<T> v(N, T(ctx, 0));
        v[j] = T(ctx, 1);
        out.push_back(std::move(v));
      }
      return out;
    }
    Mat<T> sub(ctx, rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = (*b)(rows[i], cols[j]);
    for (auto& k : kernel_basis(std::move(sub))) {
      Vec<T> v(N, T(ctx, 0));
      for (std::size_t j = 0; j < cols.size(); ++j) v[cols[j]] = k[j];
      out.push_back(std::move(v));
    }
    return out;
  }

  // Boundaries of elements of F_{p+r} C_{n+1} that land in F_p.
  std::vector<Vec<T>> boundaries(int r, int p, int n) const {
    std::vector<Vec<T>> out;
    if (n + 1 > max_degree()) return out;
    const Mat<T>& b = bd[static_cast<std::size_t>(n + 1 - min_degree)];
    for (auto& z : cycles(r, p + r, n + 1)) out.push_back(mat_vec(b, z));
    return out;
  }

  long page_entry(int r, int p, int n) const {
    auto z = cycles(r, p, n);
    if (z.empty()) return 0;
    auto denom = cycles(r - 1, p - 1, n);
    for (auto& b : boundaries(r - 1, p, n)) denom.push_back(b);
    return static_cast<long>(z.size() - span_rank<T>(ctx, denom, count(n)));
  }

  std::map<Bidegree, long> page(int r, int max_weight) const {
    std::map<Bidegree, long> out;
    for (int n = min_degree; n <= max_degree(); ++n)
      for (int p = 0; p <= max_weight; ++p) {
        long h = page_entry(r, p, n);
        if (h != 0) out[{p, n - p}] = h;
      }
    return out;
  }
};

template <class T>
void fill_pages(const Filtered<T>& fx, int max_weight, int s_max, PageTable& pt) {
  int last = std::max(s_max, max_weight + 1);
  pt.pages.clear();
  for (int s = 0; s <= last; ++s) pt.pages.push_back(fx.page(s, max_weight));
  pt.infinity = fx.page(max_weight + 2, max_weight);
}

template <class T, class Entry>
Filtered<T> make_filtered(const WeightedComplex& wc,
                          const typename T::Context& ctx, Entry entry) {
  Filtered<T> fx{ctx, -1, wc.weights, {}};
  for (int n = -1; n <= wc.fc.dimension(); ++n) {
    Mat<T> m(ctx, wc.fc.count(n - 1), wc.fc.count(n));
    const auto& cols = wc.facets[static_cast<std::size_t>(n + 1)];
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const FacetDrop& f : cols[j]) {
        T v = entry(f);
        m(f.row, j) = f.sign > 0 ? v : -v;
      }
    fx.bd.push_back(std::move(m));
  }
  return fx;
}

// dim H_n of the tau-graded complex modulo tau^s, over K_d.
std::vector<long> truncated_dims(const WeightedComplex& wc, int s) {
  int top = wc.fc.dimension();
  auto block_rank = [&](int n) -> long {
    if (n < 0 || n > top || s == 0) return 0;  // degree -1 maps to zero
    return static_cast<long>(rank(graded_boundary(wc, n, s)));
  };
  std::vector<long> out;
  for (int n = -1; n <= top; ++n)
    out.push_back(static_cast<long>(wc.fc.count(n)) * s - block_rank(n) -
                  block_rank(n + 1));
  return out;
}

PageTable table_shell(const WeightedComplex& wc) {
  PageTable pt;
  pt.d = wc.d;
  pt.min_degree = -1;
  pt.max_degree = wc.fc.dimension();
  pt.max_weight = wc.max_weight();
  return pt;
}

}  // namespace

Mat<KdElement> graded_boundary(const WeightedComplex& wc, int n, int s) {
  std::size_t su = static_cast<std::size_t>(s);
  std::size_t rows = wc.fc.count(n - 1), cols = wc.fc.count(n);
  Mat<KdElement> m(wc.field, rows * su, cols * su);
  if (n < 0 || n > wc.fc.dimension()) return m;
  const auto& cs = wc.facets[static_cast<std::size_t>(n + 1)];
  for (std::size_t j = 0; j < cs.size(); ++j)
    for (const FacetDrop& f : cs[j]) {
      KdElement v = f.sign > 0 ? f.unit : -f.unit;
      for (int l = 0; l + f.drop < s; ++l)
        m(f.row * su + static_cast<std::size_t>(l + f.drop),
          j * su + static_cast<std::size_t>(l)) = v;
    }
  return m;
}

PageTable page_dims(const WeightedComplex& wc, int s_max) {
  PageTable pt = table_shell(wc);
  auto fx = make_filtered<KdElement>(wc, wc.field,
                                     [](const FacetDrop& f) { return f.unit; });
  fill_pages(fx, pt.max_weight, s_max, pt);
  for (int s = 0; s <= pt.last_page(); ++s) pt.truncated.push_back(truncated_dims(wc, s));
  return pt;
}

PageTable page_dims_untwisted(const WeightedComplex& wc, int s_max) {
  PageTable pt = table_shell(wc);
  FieldSpec q = FieldSpec::rationals();
  auto fx = make_filtered<Scalar>(wc, q, [&](const FacetDrop&) { return Scalar(q, 1); });
  fill_pages(fx, pt.max_weight, s_max, pt);
  return pt;
}

long PageTable::h(int s, int p, int q) const {
  if (s < 0 || s > last_page()) return 0;
  auto it = pages[static_cast<std::size_t>(s)].find({p, q});
  return it == pages[static_cast<std::size_t>(s)].end() ? 0 : it->second;
}

long PageTable::h_inf(int p, int q) const {
  auto it = infinity.find({p, q});
  return it == infinity.end() ? 0 : it->second;
}

long PageTable::total(int s, int n) const {
  long t = 0;
  for (int p = 0; p <= max_weight; ++p) t += h(s, p, n - p);
  return t;
}

long PageTable::total_inf(int n) const {
  long t = 0;
  for (int p = 0; p <= max_weight; ++p) t += h_inf(p, n - p);
  return t;
}

long PageTable::total_truncated(int s, int n) const {
  if (s < 1 || s >= static_cast<int>(truncated.size()) || n < min_degree ||
      n > max_degree)
    return 0;
  std::size_t i = static_cast<std::size_t>(n - min_degree);
  return truncated[static_cast<std::size_t>(s)][i] -
         truncated[static_cast<std::size_t>(s - 1)][i];
}

bool PageTable::routes_agree() const {
  if (truncated.size() != pages.size()) return false;
  for (int s = 1; s <= last_page(); ++s)
    for (int n = min_degree; n <= max_degree; ++n)
      if (total(s, n) != total_truncated(s, n)) return false;
  return true;
}

bool PageTable::degenerates() const {
  return !pages.empty() && pages.back() == infinity;
}

long TorsionTable::at(int k, int j) const {
  auto it = n.find(k);
  if (it == n.end() || j < 1 || static_cast<std::size_t>(j) > it->second.size())
    return 0;
  return it->second[static_cast<std::size_t>(j - 1)];
}

bool stable_page_matches(const PageTable& pt, const std::vector<long>& r) {
  for (int n = pt.min_degree; n <= pt.max_degree; ++n) {
    long expect = n >= 0 && static_cast<std::size_t>(n) < r.size()
                      ? r[static_cast<std::size_t>(n)]
                      : 0;
    if (pt.total_inf(n) != expect) return false;
  }
  return true;
}

TorsionTable solve_torsion(const PageTable& pt, const std::vector<long>& r,
                           int kmax) {
  if (!stable_page_matches(pt, r))
    throw Error(ErrorCode::Internal, "stable page does not match reduced Betti numbers");
  if (!pt.degenerates())
    throw Error(ErrorCode::Internal, "last computed page is not stable");
  auto rank_at = [&](int q) -> long {
    return q >= 0 && static_cast<std::size_t>(q) < r.size() ? r[static_cast<std::size_t>(q)] : 0;
  };
  // chi_rel_k(E^s); the degree -1 term vanishes for normalized characters
  // and keeps the formula valid for restrictions that are not onto.
  auto chi = [&](int k, int s) -> long {
    if (s > pt.last_page()) s = pt.last_page();
    long sum = 0;
    for (int q = -1; q <= k; ++q) {
      long term = pt.total(s, q) - rank_at(q);
      sum += ((k - q) % 2 == 0) ? term : -term;
    }
    return sum;
  };
  TorsionTable tt;
  tt.d = pt.d;
  int last = pt.last_page();
  for (int k = 0; k <= kmax; ++k) {
    if (chi(k, last) != 0)
      throw Error(ErrorCode::Internal, "relative Euler characteristic of the stable page is nonzero");
    std::size_t len = static_cast<std::size_t>(std::max(last - 1, k + 2));
    std::vector<long> col(len, 0);
    for (int j = 1; j < last; ++j) {
      long v = chi(k, j) - chi(k, j + 1);
      if (v < 0)
        throw Error(ErrorCode::NegativeMultiplicity,
                    "n_{" + std::to_string(k) + "," + std::to_string(j) + "}(" +
                        std::to_string(pt.d) + ") = " + std::to_string(v));
      col[static_cast<std::size_t>(j - 1)] = v;
    }
    tt.n[k] = std::move(col);
  }
  return tt;
}

bool jordan_bound_check(const TorsionTable& tt) {
  for (auto& [k, col] : tt.n)
    for (std::size_t j = 1; j <= col.size(); ++j)
      if (static_cast<int>(j) > k + 2 && col[j - 1] != 0) return false;
  return true;
}

}  // namespace artin
