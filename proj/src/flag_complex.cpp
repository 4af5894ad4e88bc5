#include "artin/flag_complex.hpp"

#include <algorithm>

namespace artin {

namespace {

void extend(const LabeledGraph& g, Simplex& x,
            std::vector<std::vector<Simplex>>& layers) {
  std::size_t k = x.size();
  if (layers.size() <= k) layers.resize(k + 1);
  layers[k].push_back(x);
  int start = x.empty() ? 0 : x.back() + 1;
  for (int v = start; v < static_cast<int>(g.vertex_count()); ++v) {
    bool ok = std::all_of(x.begin(), x.end(),
                          [&](int u) { return g.adjacent(u, v); });
    if (!ok) continue;
    x.push_back(v);
    if (is_spherical(g, x)) extend(g, x, layers);
    x.pop_back();
  }
}

}  // namespace

FlagComplex::FlagComplex(const LabeledGraph& g) : g_(g) {
  Simplex x;
  extend(g, x, layers_);
  for (auto& layer : layers_) std::sort(layer.begin(), layer.end());
  index_.resize(layers_.size());
  for (std::size_t k = 0; k < layers_.size(); ++k)
    for (std::size_t i = 0; i < layers_[k].size(); ++i)
      index_[k][layers_[k][i]] = static_cast<int>(i);
}

FlagComplex build_flag_complex(const LabeledGraph& g) {
  require_valid(g);
  return FlagComplex(g);
}

const std::vector<Simplex>& FlagComplex::simplices(int k) const {
  static const std::vector<Simplex> kEmpty;
  if (k < -1 || k > dimension()) return kEmpty;
  return layers_[static_cast<std::size_t>(k + 1)];
}

int FlagComplex::index(const Simplex& s) const {
  std::size_t k = s.size();
  if (k >= index_.size()) return -1;
  auto it = index_[k].find(s);
  return it == index_[k].end() ? -1 : it->second;
}

std::vector<long> FlagComplex::f_vector() const {
  std::vector<long> f;
  for (auto& l : layers_) f.push_back(static_cast<long>(l.size()));
  return f;
}

std::string FlagComplex::label(const Simplex& s) const {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += g_.name(s[i]);
  }
  return out + "}";
}

Simplex facet(const Simplex& x, std::size_t i) {
  Simplex y = x;
  y.erase(y.begin() + static_cast<long>(i));
  return y;
}

IncidenceMatrix boundary_matrix(const FlagComplex& fc, int k) {
  IncidenceMatrix m;
  m.k = k;
  m.rows = fc.count(k - 1);
  m.cols = fc.count(k);
  m.entries.assign(m.rows, std::vector<long>(m.cols, 0));
  const auto& cols = fc.simplices(k);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) {
      int row = fc.index(facet(cols[j], i));
      m.entries[static_cast<std::size_t>(row)][j] = (i % 2 == 0) ? 1 : -1;
    }
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner,
                   std::size_t cols) {
  IntMatrix c(a.size(), std::vector<long>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t l = 0; l < inner; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

std::vector<long> image_dims(const FlagComplex& fc, const FieldSpec& f) {
  std::vector<long> out;
  for (int k = 0; k <= fc.dimension() + 1; ++k) {
    IncidenceMatrix m = boundary_matrix(fc, k);
    out.push_back(static_cast<long>(rank_over(m.entries, m.cols, f)));
  }
  return out;
}

std::vector<long> reduced_homology_ranks(const FlagComplex& fc,
                                         const FieldSpec& f) {
  std::vector<long> im = image_dims(fc, f);
  std::vector<long> r;
  for (int k = 0; k <= fc.dimension(); ++k) {
    long kernel = static_cast<long>(fc.count(k)) - im[static_cast<std::size_t>(k)];
    r.push_back(kernel - im[static_cast<std::size_t>(k + 1)]);
  }
  return r;
}

}  // namespace artin
