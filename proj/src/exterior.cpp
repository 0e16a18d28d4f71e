#include "arrkh/exterior.hpp"

#include <algorithm>
#include <bit>

namespace arrkh {

void ExteriorElement::add(WedgeMask m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

ExteriorElement exterior_unit(std::size_t dim) {
  ExteriorElement e{dim, {}};
  e.add(0, 1);
  return e;
}

ExteriorElement exterior_vector(const Vec& coords) {
  ExteriorElement e{coords.size(), {}};
  for (std::size_t i = 0; i < coords.size(); ++i) e.add(WedgeMask(1) << i, coords[i]);
  return e;
}

int wedge_sign(WedgeMask a, WedgeMask b) {
  if (a & b) return 0;
  int inv = 0;
  for (WedgeMask r = b; r; r &= r - 1) {
    int j = std::countr_zero(r);
    inv += std::popcount(a >> (j + 1));
  }
  return inv % 2 ? -1 : 1;
}

ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y) {
  if (x.dim != y.dim) throw DomainError("wedge of elements from different spaces");
  ExteriorElement out{x.dim, {}};
  for (const auto& [a, ca] : x.terms)
    for (const auto& [b, cb] : y.terms) {
      int s = wedge_sign(a, b);
      if (s != 0) out.add(a | b, Rational(s * ca * cb));
    }
  return out;
}

ExteriorElement interior(const Vec& pairings, const ExteriorElement& x) {
  if (pairings.size() != x.dim) throw DomainError("interior product dimension mismatch");
  ExteriorElement out{x.dim, {}};
  for (const auto& [m, c] : x.terms) {
    int t = 0;
    for (WedgeMask r = m; r; r &= r - 1, ++t) {
      int i = std::countr_zero(r);
      if (sgn(pairings[i]) == 0) continue;
      Rational v = c * pairings[i];
      out.add(m & ~(WedgeMask(1) << i), t % 2 ? -v : v);
    }
  }
  return out;
}

namespace {

SparseVec to_sparse(const ExteriorElement& e) {
  SparseVec v;
  v.reserve(e.terms.size());
  for (const auto& [m, c] : e.terms) v.emplace_back(m, c);
  return v;
}

ExteriorElement from_sparse(std::size_t dim, const SparseVec& v) {
  ExteriorElement e{dim, {}};
  for (const auto& [m, c] : v) e.terms.emplace(m, c);
  return e;
}

}  // namespace

Matrix ExteriorMap::block(std::size_t j) const {
  const long tj = static_cast<long>(j) + shift;
  auto cm = masks_of_weight(static_cast<unsigned>(src_dim), static_cast<unsigned>(j));
  std::vector<unsigned> rm;
  if (tj >= 0 && tj <= static_cast<long>(tgt_dim))
    rm = masks_of_weight(static_cast<unsigned>(tgt_dim), static_cast<unsigned>(tj));
  Matrix b(rm.size(), cm.size());
  for (std::size_t c = 0; c < cm.size(); ++c)
    for (const auto& [m, v] : cols[cm[c]]) {
      auto it = std::lower_bound(rm.begin(), rm.end(), m);
      if (it == rm.end() || *it != m) throw DomainError("exterior map is not homogeneous");
      b(static_cast<std::size_t>(it - rm.begin()), c) = v;
    }
  return b;
}

bool ExteriorMap::is_zero() const {
  return std::all_of(cols.begin(), cols.end(), [](const SparseVec& c) { return c.empty(); });
}

ExteriorElement ExteriorMap::apply(const ExteriorElement& x) const {
  if (x.dim != src_dim) throw DomainError("exterior map applied to wrong space");
  ExteriorElement out{tgt_dim, {}};
  for (const auto& [m, c] : x.terms)
    for (const auto& [t, v] : cols[m]) out.add(t, c * v);
  return out;
}

ExteriorMap ExteriorMap::scaled(const Rational& s) const {
  ExteriorMap r = *this;
  if (sgn(s) == 0) {
    for (auto& c : r.cols) c.clear();
    return r;
  }
  for (auto& c : r.cols)
    for (auto& e : c) e.second *= s;
  return r;
}

ExteriorMap exterior_identity(std::size_t dim) {
  ExteriorMap m{dim, dim, 0, std::vector<SparseVec>(std::size_t(1) << dim)};
  for (WedgeMask x = 0; x < (WedgeMask(1) << dim); ++x) m.cols[x] = {{x, Rational(1)}};
  return m;
}

ExteriorMap compose(const ExteriorMap& g, const ExteriorMap& f) {
  if (f.tgt_dim != g.src_dim) throw DomainError("exterior maps do not compose");
  ExteriorMap h{f.src_dim, g.tgt_dim, f.shift + g.shift, {}};
  h.cols.resize(f.cols.size());
  for (std::size_t m = 0; m < f.cols.size(); ++m)
    h.cols[m] = to_sparse(g.apply(from_sparse(f.tgt_dim, f.cols[m])));
  return h;
}

ExteriorMap induced_map(const Matrix& f) {
  const std::size_t sd = f.cols(), td = f.rows();
  ExteriorMap out{sd, td, 0, std::vector<SparseVec>(std::size_t(1) << sd)};
  std::vector<ExteriorElement> img(std::size_t(1) << sd);
  img[0] = exterior_unit(td);
  out.cols[0] = to_sparse(img[0]);
  for (WedgeMask m = 1; m < (WedgeMask(1) << sd); ++m) {
    int low = std::countr_zero(m);
    img[m] = wedge(exterior_vector(f.col(static_cast<std::size_t>(low))), img[m & (m - 1)]);
    out.cols[m] = to_sparse(img[m]);
  }
  return out;
}

ExteriorMap induced_projection(const Subspace& src, const Subspace& tgt) {
  return induced_map(projection_matrix(src, tgt));
}

ExteriorMap wedge_map(const Vec& v, const Subspace& src, const Subspace& tgt) {
  if (!tgt.contains(src)) throw DomainError("wedge map source is not inside its target");
  ExteriorElement p = exterior_vector(tgt.coordinates(tgt.project(v)));
  ExteriorMap inc = induced_projection(src, tgt);
  ExteriorMap out{src.dim(), tgt.dim(), 1, std::vector<SparseVec>(inc.cols.size())};
  for (std::size_t m = 0; m < inc.cols.size(); ++m)
    out.cols[m] = to_sparse(wedge(p, from_sparse(tgt.dim(), inc.cols[m])));
  return out;
}

ExteriorMap contraction_map(const Vec& v, const Subspace& src, const Subspace& tgt) {
  if (!src.contains(tgt)) throw DomainError("contraction target is not inside its source");
  const Vec p = src.project(v);
  Vec pairings(src.dim());
  for (std::size_t i = 0; i < src.dim(); ++i) pairings[i] = dot(p, src.basis_vector(i));
  // Left inverse of the inclusion tgt -> src: read target coordinates.
  Matrix left(tgt.dim(), src.dim());
  for (std::size_t j = 0; j < src.dim(); ++j) {
    Vec c = tgt.coordinates(src.basis_vector(j));
    for (std::size_t i = 0; i < tgt.dim(); ++i) left(i, j) = c[i];
  }
  ExteriorMap back = induced_map(left);
  ExteriorMap inc = induced_projection(tgt, src);
  ExteriorMap out{src.dim(), tgt.dim(), -1, std::vector<SparseVec>(std::size_t(1) << src.dim())};
  for (WedgeMask m = 0; m < (WedgeMask(1) << src.dim()); ++m) {
    ExteriorElement x{src.dim(), {}};
    x.add(m, 1);
    ExteriorElement y = interior(pairings, x);
    ExteriorElement z = back.apply(y);
    if (!(inc.apply(z) == y)) throw DomainError("contraction image leaves the target space");
    out.cols[m] = to_sparse(z);
  }
  return out;
}

ExteriorElement carry(const ExteriorElement& x, const Subspace& from, const Subspace& to) {
  return induced_projection(from, to).apply(x);
}

}  // namespace arrkh
