#include "arrkh/arrangement.hpp"

#include <omp.h>

#include <bit>
#include <string>

namespace arrkh {

void set_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}

int max_threads() { return omp_get_max_threads(); }

VectorArrangement VectorArrangement::standard(std::size_t k, std::vector<Vec> vectors) {
  for (const auto& v : vectors)
    if (v.size() != k) throw DomainError("vector length differs from ambient dimension");
  VectorArrangement a;
  a.ambient = Subspace::full(k);
  a.frame = Matrix::identity(vectors.size());
  a.vectors = std::move(vectors);
  return a;
}

std::vector<Vec> VectorArrangement::coordinate_vectors() const {
  std::vector<Vec> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(ambient.coordinates(v));
  return out;
}

Mask SignedArrangement::positive_mask() const {
  Mask m = 0;
  for (std::size_t i = 0; i < signs.size(); ++i)
    if (signs[i] == Sign::plus) m |= Mask(1) << i;
  return m;
}

Mask SignedArrangement::negative_mask() const { return base.full_mask() & ~positive_mask(); }

namespace {

SubsetSpaces compute_spaces(const VectorArrangement& a, const Subspace& uperp, Mask S) {
  const std::size_t N = a.coord_len(), n = a.size();
  SubsetSpaces out;
  out.S = S;
  std::vector<Vec> normals;
  std::vector<std::size_t> idx;
  for (std::size_t s = 0; s < n; ++s)
    if (S >> s & 1u) {
      normals.push_back(a.vectors[s]);
      idx.push_back(s);
    }
  std::vector<Vec> hrows = normals;
  for (std::size_t i = 0; i < uperp.dim(); ++i) hrows.push_back(uperp.basis_vector(i));
  out.H = kernel_basis(Matrix::from_rows(hrows, N));
  out.V = Subspace::span(normals, N);

  Matrix cols(N, idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c)
    for (std::size_t r = 0; r < N; ++r) cols(r, c) = a.vectors[idx[c]][r];
  Subspace dep = kernel_basis(cols);
  std::vector<Vec> wrows;
  for (std::size_t i = 0; i < dep.dim(); ++i) {
    Vec y(n);
    for (std::size_t c = 0; c < idx.size(); ++c) y[idx[c]] = dep.basis()(i, c);
    wrows.push_back(a.frame * y);
  }
  out.W = Subspace::span(wrows, a.frame_len());
  return out;
}

}  // namespace

SubsetSpaces subset_spaces(const VectorArrangement& a, Mask S) {
  if (a.size() < 32 && (S >> a.size()) != 0) throw DomainError("subset outside index range");
  return compute_spaces(a, a.ambient.orthogonal_complement(), S);
}

std::vector<Vec> coordinate_functionals(const VectorArrangement& a) {
  const std::size_t n = a.size();
  Matrix gram = a.frame.transpose() * a.frame;
  // Columns of frame * gram^{-1}; solve gram * X = I.
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = gram(i, j);
    aug(i, n + i) = 1;
  }
  auto r = rref(std::move(aug));
  if (r.pivots.size() < n || (n > 0 && r.pivots[n - 1] != n - 1))
    throw DomainError("dependency frame is not injective");
  std::vector<Vec> out;
  for (std::size_t c = 0; c < n; ++c) {
    Vec y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = r.reduced(i, n + c);
    out.push_back(a.frame * y);
  }
  return out;
}

SpaceTable::SpaceTable(const VectorArrangement& a, Exec exec) : a_(&a) {
  if (a.size() > 24) throw DomainError("too many vectors for a full subset table");
  const Subspace uperp = a.ambient.orthogonal_complement();
  const long long count = 1LL << a.size();
  spaces_.resize(static_cast<std::size_t>(count));
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long long S = 0; S < count; ++S)
      spaces_[S] = compute_spaces(a, uperp, static_cast<Mask>(S));
  } else {
    for (long long S = 0; S < count; ++S)
      spaces_[S] = compute_spaces(a, uperp, static_cast<Mask>(S));
  }
  functionals_ = coordinate_functionals(a);
}

Vec SpaceTable::dual_vector_in(std::size_t r, Mask T) const {
  return spaces_[T].W.project(functionals_[r]);
}

VectorArrangement gale_dual(const VectorArrangement& a) {
  Subspace W = subset_spaces(a, a.full_mask()).W;
  auto f = coordinate_functionals(a);
  VectorArrangement d;
  d.ambient = W;
  for (const auto& v : f) d.vectors.push_back(W.project(v));
  d.frame = Matrix::identity(a.size());
  return d;
}

SignedArrangement gale_dual(const SignedArrangement& a) {
  SignedArrangement d{gale_dual(a.base), a.signs};
  for (auto& s : d.signs) s = flip(s);
  return d;
}

namespace {

Matrix drop_column(const Matrix& m, std::size_t c) {
  Matrix out(m.rows(), m.cols() - 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0, k = 0; j < m.cols(); ++j)
      if (j != c) out(i, k++) = m(i, j);
  return out;
}

void check_index(const VectorArrangement& a, std::size_t i) {
  if (i >= a.size()) throw DomainError("vector index " + std::to_string(i + 1) + " out of range");
}

}  // namespace

VectorArrangement delete_vector(const VectorArrangement& a, std::size_t i) {
  check_index(a, i);
  VectorArrangement d;
  d.ambient = a.ambient;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (j != i) d.vectors.push_back(a.vectors[j]);
  d.frame = drop_column(a.frame, i);
  return d;
}

SignedArrangement delete_vector(const SignedArrangement& a, std::size_t i) {
  SignedArrangement d{delete_vector(a.base, i), a.signs};
  d.signs.erase(d.signs.begin() + static_cast<long>(i));
  return d;
}

VectorArrangement restrict_at(const VectorArrangement& a, std::size_t i) {
  check_index(a, i);
  const Vec& nu = a.vectors[i];
  if (is_zero(nu)) return delete_vector(a, i);
  VectorArrangement r;
  Subspace line = Subspace::span({nu}, a.coord_len());
  r.ambient = intersect(a.ambient, line.orthogonal_complement());
  const Rational nn = dot(nu, nu);
  const std::size_t n = a.size();
  // Frame through phi: e_s -> e_s - (<nu_s,nu_i>/<nu_i,nu_i>) e_i.
  Matrix phi(n, n - 1);
  for (std::size_t j = 0, k = 0; j < n; ++j) {
    if (j == i) continue;
    r.vectors.push_back(r.ambient.project(a.vectors[j]));
    phi(j, k) = 1;
    phi(i, k) = -dot(a.vectors[j], nu) / nn;
    ++k;
  }
  r.frame = a.frame * phi;
  return r;
}

SignedArrangement restrict_at(const SignedArrangement& a, std::size_t i) {
  SignedArrangement r{restrict_at(a.base, i), a.signs};
  r.signs.erase(r.signs.begin() + static_cast<long>(i));
  return r;
}

VectorArrangement product(const VectorArrangement& a, const VectorArrangement& b) {
  const std::size_t N = a.coord_len(), N2 = b.coord_len();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec v = a.ambient.basis_vector(i);
    v.resize(N + N2);
    rows.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    Vec v(N);
    Vec u = b.ambient.basis_vector(i);
    v.insert(v.end(), u.begin(), u.end());
    rows.push_back(std::move(v));
  }
  VectorArrangement p;
  p.ambient = Subspace::span(rows, N + N2);
  for (const auto& x : a.vectors) {
    Vec v = x;
    v.resize(N + N2);
    p.vectors.push_back(std::move(v));
  }
  for (const auto& x : b.vectors) {
    Vec v(N);
    v.insert(v.end(), x.begin(), x.end());
    p.vectors.push_back(std::move(v));
  }
  p.frame = Matrix(a.frame.rows() + b.frame.rows(), a.size() + b.size());
  for (std::size_t i = 0; i < a.frame.rows(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) p.frame(i, j) = a.frame(i, j);
  for (std::size_t i = 0; i < b.frame.rows(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      p.frame(a.frame.rows() + i, a.size() + j) = b.frame(i, j);
  return p;
}

SignedArrangement product(const SignedArrangement& a, const SignedArrangement& b) {
  SignedArrangement p{product(a.base, b.base), a.signs};
  p.signs.insert(p.signs.end(), b.signs.begin(), b.signs.end());
  return p;
}

VectorArrangement permute(const VectorArrangement& a, const std::vector<std::size_t>& perm) {
  if (perm.size() != a.size()) throw DomainError("permutation length mismatch");
  VectorArrangement p;
  p.ambient = a.ambient;
  p.frame = Matrix(a.frame.rows(), a.size());
  for (std::size_t j = 0; j < perm.size(); ++j) {
    check_index(a, perm[j]);
    p.vectors.push_back(a.vectors[perm[j]]);
    for (std::size_t i = 0; i < a.frame.rows(); ++i) p.frame(i, j) = a.frame(i, perm[j]);
  }
  return p;
}

SignedArrangement permute(const SignedArrangement& a, const std::vector<std::size_t>& perm) {
  SignedArrangement p{permute(a.base, perm), {}};
  for (auto j : perm) p.signs.push_back(a.signs[j]);
  return p;
}

VectorArrangement negate_vector(const VectorArrangement& a, std::size_t i) {
  check_index(a, i);
  VectorArrangement p = a;
  for (auto& x : p.vectors[i]) x = -x;
  for (std::size_t r = 0; r < p.frame.rows(); ++r) p.frame(r, i) = -p.frame(r, i);
  return p;
}

VectorArrangement from_graph(const Graph& g) {
  const std::size_t k = g.vertices;
  std::vector<Vec> vs;
  for (auto [from, to] : g.edges) {
    if (from < 1 || from > k || to < 1 || to > k)
      throw DomainError("edge endpoint out of range");
    Vec v(k);
    v[from - 1] += 1;
    v[to - 1] -= 1;
    vs.push_back(std::move(v));
  }
  VectorArrangement a = VectorArrangement::standard(k, std::move(vs));
  if (g.reduced) {
    Matrix ones(1, k);
    for (std::size_t j = 0; j < k; ++j) ones(0, j) = 1;
    a.ambient = kernel_basis(ones);
  }
  return a;
}

SignedArrangement from_signed_graph(const Graph& g) {
  if (g.signs.size() != g.edges.size()) throw DomainError("one sign per edge is required");
  return {from_graph(g), g.signs};
}

Mask tilde(const SignedArrangement& a, Mask S) {
  return (S & a.positive_mask()) | (a.negative_mask() & ~S);
}

std::vector<MatroidRow> matroid_data(const VectorArrangement& a) {
  SpaceTable t(a);
  std::vector<MatroidRow> out;
  for (Mask S = 0; S <= a.full_mask(); ++S) {
    out.push_back({t[S].H.dim(), t[S].V.dim(), t[S].W.dim()});
    if (S == a.full_mask()) break;
  }
  return out;
}

bool has_zero_vector(const VectorArrangement& a) {
  for (const auto& v : a.vectors)
    if (is_zero(v)) return true;
  return false;
}

}  // namespace arrkh
