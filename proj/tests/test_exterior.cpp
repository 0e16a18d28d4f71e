#include <doctest.h>

#include "helpers.hpp"

using namespace testing;

namespace {

ExteriorElement basis_wedge(std::size_t dim, WedgeMask m, Rational c = 1) {
  ExteriorElement x;
  x.dim = dim;
  x.add(m, c);
  return x;
}

ExteriorElement sum_of(const ExteriorElement& a, const ExteriorElement& b, const Rational& s = 1) {
  ExteriorElement out = a;
  for (const auto& [m, c] : b.terms) out.add(m, s * c);
  return out;
}

}  // namespace

TEST_CASE("contraction removes the paired factor") {
  const ExteriorElement e12 = basis_wedge(2, 0b11);
  CHECK(interior(Vec{1, 0}, e12) == basis_wedge(2, 0b10));
  CHECK(interior(Vec{0, 1}, e12) == basis_wedge(2, 0b01, -1));
  CHECK(interior(Vec{1, 0}, exterior_unit(2)).is_zero());
}

TEST_CASE("wedge signs") {
  const ExteriorElement e1 = exterior_vector(Vec{1, 0}), s = exterior_vector(Vec{1, 1});
  CHECK(wedge(s, e1) == basis_wedge(2, 0b11, -1));
  CHECK(wedge(e1, e1).is_zero());
  CHECK(wedge_sign(0b01, 0b10) == 1);
  CHECK(wedge_sign(0b10, 0b01) == -1);
  CHECK(wedge_sign(0b11, 0b01) == 0);
}

TEST_CASE("interior product is a graded derivation") {
  const Vec p{2, -1, 3}, v{1, 4, -2};
  const ExteriorElement vv = exterior_vector(v);
  for (WedgeMask m = 0; m < 8; ++m) {
    const ExteriorElement x = basis_wedge(3, m, 1 + m);
    // i_p(v ^ x) + v ^ i_p(x) = <p, v> x
    const ExteriorElement lhs = sum_of(interior(p, wedge(vv, x)), wedge(vv, interior(p, x)));
    ExteriorElement rhs;
    rhs.dim = 3;
    for (const auto& [k, c] : x.terms) rhs.add(k, dot(p, v) * c);
    CHECK(lhs == rhs);
    CHECK(interior(p, interior(p, x)).is_zero());
  }
}

TEST_CASE("induced maps are functorial and built from minors") {
  const Matrix f = Matrix::from_rows({{1, 2}, {0, 1}, {3, 1}}, 2);
  const Matrix g = Matrix::from_rows({{1, 0, 1}, {2, 1, 0}}, 3);
  CHECK(compose(induced_map(g), induced_map(f)) == induced_map(g * f));
  for (std::size_t j = 0; j <= 2; ++j) CHECK(induced_map(f).block(j) == compound_matrix(f, j));
  CHECK(compose(exterior_identity(3), induced_map(f).scaled(1)) == induced_map(f));
}

TEST_CASE("wedge and contraction maps between subspaces") {
  const Subspace plane = Subspace::span({{1, 0, 0}, {0, 1, 0}}, 3);
  const Subspace line = Subspace::span({{0, 1, 0}}, 3);
  const ExteriorMap w = wedge_map(Vec{1, 0, 5}, line, plane);
  CHECK(w.shift == 1);
  // 1 -> projection of (1,0,5) into the plane, which is e1.
  CHECK(w.apply(exterior_unit(1)) == exterior_vector(Vec{1, 0}));
  const ExteriorMap c = contraction_map(Vec{1, 0, 0}, plane, line);
  CHECK(c.shift == -1);
  CHECK(c.apply(basis_wedge(2, 0b11)) == exterior_vector(Vec{1}));
  CHECK(compose(c, w).apply(exterior_unit(1)) == exterior_unit(1));
}

TEST_CASE("carry along an inclusion and a projection") {
  const Subspace line = Subspace::span({{1, 1}}, 2);
  const ExteriorElement x = exterior_vector(Vec{1});
  CHECK(carry(x, line, Subspace::full(2)) == exterior_vector(Vec{1, 1}));
  CHECK(carry(exterior_vector(Vec{1, 0}), Subspace::full(2), line) == exterior_vector(Vec{Rational(1, 2)}));
  CHECK(induced_projection(line, Subspace::full(2)).block(1) == Matrix::from_rows({{1}, {1}}, 1));
}
