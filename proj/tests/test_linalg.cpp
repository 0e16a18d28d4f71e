#include <doctest.h>

#include "helpers.hpp"

using namespace testing;

TEST_CASE("rref of the two baby rows") {
  const auto r = rref(Matrix::from_rows({{1, -1, 0}, {0, 1, -1}}, 3));
  CHECK(r.reduced == Matrix::from_rows({{1, 0, -1}, {0, 1, -1}}, 3));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("kernel of the braid columns is the diagonal") {
  const Matrix cols = Matrix::from_rows({{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}, 3).transpose();
  const Subspace k = kernel_basis(cols);
  REQUIRE(k.dim() == 1);
  CHECK(k.contains(Vec{1, 1, 1}));
}

TEST_CASE("projection onto the diagonal") {
  const Subspace line = Subspace::span({{1, 1, 1}}, 3);
  const Rational third(1, 3);
  CHECK(project(line, Vec{1, 0, 0}) == Vec{third, third, third});
  CHECK(line.orthogonal_complement().dim() == 2);
  CHECK(is_zero(line.orthogonal_complement().project(Vec{2, 2, 2})));
}

TEST_CASE("intersection and sum dimensions") {
  const Subspace a = Subspace::span({{1, 0, 0}, {0, 1, 0}}, 3);
  const Subspace b = Subspace::span({{0, 1, 0}, {0, 0, 1}}, 3);
  CHECK(intersect(a, b).dim() == 1);
  CHECK(intersect(a, b).contains(Vec{0, 5, 0}));
  CHECK(sum(a, b) == Subspace::full(3));
  CHECK(intersect(a, Subspace(3)).dim() == 0);
}

TEST_CASE("coordinates round trip") {
  const Subspace s = Subspace::span({{1, 2, 3}, {0, 1, 1}}, 3);
  const Vec v{2, 5, 7};
  REQUIRE(s.contains(v));
  CHECK(s.from_coordinates(s.coordinates(v)) == v);
  CHECK_FALSE(s.contains(Vec{0, 0, 1}));
}

TEST_CASE("determinant and rank") {
  CHECK(determinant(Matrix::from_rows({{2, 1}, {1, 1}}, 2)) == 1);
  CHECK(determinant(Matrix::from_rows({{1, 2}, {2, 4}}, 2)) == 0);
  CHECK(rank(Matrix::from_rows({{1, 2}, {2, 4}}, 2)) == 1);
  CHECK(rank(Matrix(0, 4)) == 0);
}

TEST_CASE("compound matrices are multiplicative") {
  const Matrix a = Matrix::from_rows({{1, 2, 0}, {0, 1, 3}, {4, 0, 1}}, 3);
  const Matrix b = Matrix::from_rows({{2, 0, 1}, {1, 1, 0}, {0, 3, 1}}, 3);
  for (std::size_t j = 0; j <= 3; ++j) CHECK(compound_matrix(a * b, j) == compound_matrix(a, j) * compound_matrix(b, j));
  CHECK(compound_matrix(a, 3)(0, 0) == determinant(a));
  CHECK(compound_matrix(a, 0) == Matrix::identity(1));
  CHECK(compound_matrix(a, 1) == a);
}

TEST_CASE("Cauchy-Binet on a rectangular pair") {
  const Matrix a = Matrix::from_rows({{1, 2, 3}, {0, 1, 1}}, 3);
  const Matrix b = a.transpose();
  CHECK(compound_matrix(a, 2) * compound_matrix(b, 2) == compound_matrix(a * b, 2));
  CHECK(compound_matrix(a * b, 2)(0, 0) == determinant(a * b));
}

TEST_CASE("masks of a given weight are increasing") {
  CHECK(masks_of_weight(4, 2) == std::vector<unsigned>{3, 5, 6, 9, 10, 12});
  CHECK(masks_of_weight(3, 0) == std::vector<unsigned>{0});
}

TEST_CASE("rational strings") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_string(Rational(0, 2)) == "0");
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}
