#include "arrkh/linalg.hpp"

#include <bit>
#include <utility>

namespace arrkh {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DomainError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Vec operator*(const Matrix& a, const Vec& v) {
  if (a.cols() != v.size()) throw DomainError("matrix-vector shape mismatch");
  Vec r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(v[j]) != 0) r[i] += a(i, j) * v[j];
  return r;
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DomainError("dot product length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec axpy(const Rational& s, const Vec& x, const Vec& y) {
  Vec r = y;
  for (std::size_t i = 0; i < x.size(); ++i) r[i] += s * x[i];
  return r;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

RrefResult rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  // Forward elimination only; cheaper than a full reduction.
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Matrix a = m.rows() <= m.cols() ? m : m.transpose();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

namespace {

Matrix invert(const Matrix& g) {
  const std::size_t n = g.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = g(i, j);
    aug(i, n + i) = 1;
  }
  auto r = rref(std::move(aug));
  if (r.pivots.size() < n || (n > 0 && r.pivots[n - 1] != n - 1))
    throw DomainError("singular Gram matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

}  // namespace

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::full(std::size_t ambient) {
  return from_rows(Matrix::identity(ambient));
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient) {
  return from_rows(Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::from_rows(const Matrix& rows) {
  auto r = rref(rows);
  Subspace s(rows.cols());
  const std::size_t d = r.pivots.size();
  s.basis_ = Matrix(d, rows.cols());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) s.basis_(i, j) = r.reduced(i, j);
  s.pivots_ = std::move(r.pivots);
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rational x = 0;
      for (std::size_t c = 0; c < rows.cols(); ++c) x += s.basis_(i, c) * s.basis_(j, c);
      g(i, j) = x;
      g(j, i) = x;
    }
  s.gram_inv_ = invert(g);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw DomainError("vector length does not match ambient");
  Vec r = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    Rational c = r[pivots_[i]];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) r[j] -= c * basis_(i, j);
  }
  return arrkh::is_zero(r);
}

bool Subspace::contains(const Subspace& s) const {
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (!contains(s.basis_vector(i))) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Vec Subspace::from_coordinates(const Vec& c) const {
  Vec v(ambient_);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(c[i]) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) v[j] += c[i] * basis_(i, j);
  }
  return v;
}

Vec Subspace::project(const Vec& v) const {
  if (v.size() != ambient_) throw DomainError("vector length does not match ambient");
  return from_coordinates(gram_inv_ * (basis_ * v));
}

Subspace Subspace::orthogonal_complement() const { return kernel_basis(basis_); }

Subspace kernel_basis(const Matrix& m) {
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec x(m.cols());
    x[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = -r.reduced(i, f);
    rows.push_back(std::move(x));
  }
  return Subspace::span(rows, m.cols());
}

Vec project(const Subspace& target, const Vec& v) { return target.project(v); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DomainError("ambient dimension mismatch");
  Subspace ca = a.orthogonal_complement(), cb = b.orthogonal_complement();
  Matrix stacked(ca.dim() + cb.dim(), a.ambient_dim());
  for (std::size_t i = 0; i < ca.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient_dim(); ++j) stacked(i, j) = ca.basis()(i, j);
  for (std::size_t i = 0; i < cb.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient_dim(); ++j) stacked(ca.dim() + i, j) = cb.basis()(i, j);
  return kernel_basis(stacked);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DomainError("ambient dimension mismatch");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis_vector(i));
  for (std::size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis_vector(i));
  return Subspace::span(rows, a.ambient_dim());
}

Matrix projection_matrix(const Subspace& src, const Subspace& tgt) {
  if (src.ambient_dim() != tgt.ambient_dim()) throw DomainError("ambient dimension mismatch");
  Matrix m(tgt.dim(), src.dim());
  for (std::size_t j = 0; j < src.dim(); ++j) {
    Vec c = tgt.coordinates(tgt.project(src.basis_vector(j)));
    for (std::size_t i = 0; i < tgt.dim(); ++i) m(i, j) = c[i];
  }
  return m;
}

std::vector<unsigned> masks_of_weight(unsigned n, unsigned j) {
  std::vector<unsigned> out;
  for (unsigned m = 0; m < (1u << n); ++m)
    if (static_cast<unsigned>(std::popcount(m)) == j) out.push_back(m);
  return out;
}

Matrix compound_matrix(const Matrix& m, std::size_t j) {
  if (j > m.rows() || j > m.cols()) throw DomainError("compound degree out of range");
  auto rmasks = masks_of_weight(static_cast<unsigned>(m.rows()), static_cast<unsigned>(j));
  auto cmasks = masks_of_weight(static_cast<unsigned>(m.cols()), static_cast<unsigned>(j));
  Matrix out(rmasks.size(), cmasks.size());
  for (std::size_t a = 0; a < rmasks.size(); ++a)
    for (std::size_t b = 0; b < cmasks.size(); ++b) {
      Matrix sub(j, j);
      std::size_t ii = 0;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!(rmasks[a] >> r & 1u)) continue;
        std::size_t jj = 0;
        for (std::size_t c = 0; c < m.cols(); ++c)
          if (cmasks[b] >> c & 1u) sub(ii, jj++) = m(r, c);
        ++ii;
      }
      out(a, b) = determinant(std::move(sub));
    }
  return out;
}

std::string to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw DomainError("malformed rational: " + s);
  if (q.get_den() == 0) throw DomainError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace arrkh
