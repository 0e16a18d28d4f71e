#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrkh {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

// Raised when an operation's inputs violate a documented precondition.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  Matrix transpose() const;
  bool is_zero() const;

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vec operator*(const Matrix& a, const Vec& v);

Rational dot(const Vec& a, const Vec& b);
Vec axpy(const Rational& s, const Vec& x, const Vec& y);  // s*x + y
bool is_zero(const Vec& v);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);
Rational determinant(Matrix m);

// Subspace of Q^ambient held by its reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient);  // zero subspace

  static Subspace full(std::size_t ambient);
  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient);
  static Subspace from_rows(const Matrix& rows);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& s) const;

  // Coordinates of v in the basis; v must lie in the subspace.
  Vec coordinates(const Vec& v) const;
  Vec from_coordinates(const Vec& c) const;

  // Orthogonal projection under the standard dot product.
  Vec project(const Vec& v) const;
  Subspace orthogonal_complement() const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
  Matrix gram_inv_;  // (B B^T)^{-1}
};

Subspace kernel_basis(const Matrix& m);
Vec project(const Subspace& target, const Vec& v);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

// Matrix of the linear map src -> tgt given by orthogonal projection, in the two
// canonical bases. Inclusion is the special case src contained in tgt.
Matrix projection_matrix(const Subspace& src, const Subspace& tgt);

// Degree-j minors. Row and column subsets are enumerated by increasing bitmask.
Matrix compound_matrix(const Matrix& m, std::size_t j);

std::vector<unsigned> masks_of_weight(unsigned n, unsigned j);

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

}  // namespace arrkh
