#include <doctest.h>

#include "helpers.hpp"

using namespace testing;

namespace {

const Theory kAll[] = {Theory::d, Theory::partial, Theory::poincare, Theory::tutte_d, Theory::tutte_partial_1,
                       Theory::tutte_partial_2, Theory::tutte_partial_3, Theory::tutte_partial_4};

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Number of basis pairs (x, y) violating the graded Leibniz rule.
std::size_t leibniz_failures(const CubeComplex& cc, ProductKind kind) {
  const ChainComplex& c = cc.complex;
  std::size_t bad = 0;
  for (std::size_t g = 0; g < c.size(); ++g)
    for (std::size_t h = 0; h < c.size(); ++h) {
      const Chain x{{g, Rational(1)}}, y{{h, Rational(1)}};
      auto m = [&](const Chain& p, const Chain& s) { return dg_multiply(cc, kind, p, s); };
      auto d = [&](const Chain& p) { return apply_differential(c, p); };
      const int deg = leibniz_degree(cc, kind, g);
      if (d(m(x, y)) != chain_add(m(d(x), y), m(x, d(y)), deg % 2 ? -1 : 1)) ++bad;
    }
  return bad;
}

}  // namespace

TEST_CASE("edge signs") {
  CHECK(edge_sign(0, 2) == 1);
  CHECK(edge_sign(0b101, 1) == -1);
  CHECK(edge_sign(0b011, 2) == 1);
}

TEST_CASE("baby arrangement C_d") {
  const CubeComplex cc = build_characteristic_d(baby_arrangement());
  const ChainComplex& c = cc.complex;
  REQUIRE(c.blocks.size() == 4);
  CHECK(c.blocks[0].size() == 8);
  CHECK(c.blocks[1].size() == 4);
  CHECK(c.blocks[2].size() == 4);
  CHECK(c.blocks[3].size() == 2);
  const BettiTable b = homology(c);
  CHECK(b == BettiTable{{{0, 2}, 1}, {{0, 3}, 1}});
  // x1x2x3 and x1x3 - x1x2 - x2x3 at the empty vertex are cycles.
  ExteriorElement top, mid;
  top.dim = mid.dim = 3;
  top.add(0b111, 1);
  mid.add(0b101, 1);
  mid.add(0b011, -1);
  mid.add(0b110, -1);
  CHECK(apply_differential(c, chain_from(c, 0, top, exterior_unit(0))).empty());
  CHECK(apply_differential(c, chain_from(c, 0, mid, exterior_unit(0))).empty());
  ExteriorElement not_cycle;
  not_cycle.dim = 3;
  not_cycle.add(0b011, 1);
  CHECK_FALSE(apply_differential(c, chain_from(c, 0, not_cycle, exterior_unit(0))).empty());
}

TEST_CASE("empty arrangements give the exterior algebra") {
  for (std::size_t k = 0; k <= 4; ++k) {
    BettiTable want;
    for (std::size_t j = 0; j <= k; ++j) want[{0, static_cast<int>(j)}] = binom(k, j);
    CHECK(theory_homology(arr(k, {}), Theory::d) == want);
    const BettiTable p = theory_homology(arr(k, {}), Theory::partial);
    for (std::size_t j = 0; j <= k; ++j) {
      long dim_j = 0;
      for (const auto& [g, d] : p)
        if (g[1] == static_cast<int>(j)) dim_j += d;
      CHECK(dim_j == binom(k, j));
    }
  }
}

TEST_CASE("small homology values") {
  CHECK(total_dim(theory_homology(arr(1, {{1}}), Theory::partial)) == 1);
  CHECK(total_dim(theory_homology(arr(1, {{0}}), Theory::partial)) == 4);
  CHECK(theory_homology(arr(2, {{1, 0}, {0, 1}}), Theory::d) == BettiTable{{{0, 2}, 1}});
  CHECK(theory_homology(arr(2, {{1, 0}, {0, 0}}), Theory::d).empty());
}

TEST_CASE("zero vectors kill C_d") {
  for (const auto& [name, a] : unsigned_corpus(kCorpusSeed, 60)) {
    if (!has_zero_vector(a)) continue;
    CAPTURE(name);
    CHECK(theory_homology(a, Theory::d).empty());
  }
}

TEST_CASE("every differential squares to zero") {
  for (const auto& [name, a] : unsigned_corpus(kCorpusSeed, 30))
    for (Theory t : kAll) {
      CAPTURE(name);
      CHECK(squares_to_zero(build_complex(a, t).complex));
    }
}

TEST_CASE("Tutte variants 1 and 4 have the same Betti tables") {
  for (const auto& [name, a] : unsigned_corpus(kCorpusSeed, 30)) {
    CAPTURE(name);
    CHECK(theory_homology(a, Theory::tutte_partial_1) == theory_homology(a, Theory::tutte_partial_4));
  }
}

TEST_CASE("Kunneth for every theory") {
  const auto corpus = unsigned_corpus(kCorpusSeed, 16, 3, 2);
  for (std::size_t i = 0; i + 1 < corpus.size(); i += 2)
    for (Theory t : kAll) {
      const auto& a = corpus[i].value;
      const auto& b = corpus[i + 1].value;
      CAPTURE(corpus[i].name);
      CAPTURE(theory_name(t));
      CHECK(theory_homology(product(a, b), t) == convolve(theory_homology(a, t), theory_homology(b, t)));
    }
}

TEST_CASE("Betti tables do not depend on the vector order") {
  for (const auto& [name, a] : unsigned_corpus(kCorpusSeed, 30)) {
    if (a.size() < 2) continue;
    std::vector<std::size_t> perm(a.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = (i + 1) % perm.size();
    for (Theory t : kAll) {
      CAPTURE(name);
      CHECK(theory_homology(permute(a, perm), t) == theory_homology(a, t));
    }
  }
}

TEST_CASE("products: unit and disjointness") {
  const CubeComplex cc = build_characteristic_partial(braid());
  const ChainComplex& c = cc.complex;
  const Chain one{{c.index(0, 0, 0), Rational(1)}};
  const Chain x{{c.index(1, 0, 0), Rational(1)}};
  CHECK(dg_multiply(cc, ProductKind::char_partial, one, x) == x);
  CHECK(dg_multiply(cc, ProductKind::char_partial, x, one) == x);
  CHECK(dg_multiply(cc, ProductKind::char_partial, x, x).empty());
}

TEST_CASE("Leibniz holds for the characteristic and first Tutte products") {
  for (const auto& a : {baby_arrangement(), braid(), arr(1, {{0}}), arr(2, {{1, 1}, {0, 2}})}) {
    CHECK(leibniz_failures(build_complex(a, Theory::partial), ProductKind::char_partial) == 0);
    CHECK(leibniz_failures(build_complex(a, Theory::tutte_partial_1), ProductKind::tutte_partial_1) == 0);
    CHECK(leibniz_failures(build_complex(a, Theory::tutte_partial_3), ProductKind::tutte_partial_3) == 0);
  }
}

TEST_CASE("Leibniz fails for the second and fourth Tutte products") {
  // With the vanishing rule, x = e1 and y = 1 at the empty vertex of {Q^1; (1)}
  // multiply to zero while m(dx, y) does not.
  const CubeComplex c4 = build_complex(arr(1, {{1}}), Theory::tutte_partial_4);
  const Chain x = chain_from(c4.complex, 0, exterior_vector(Vec{1}), exterior_unit(0));
  const Chain y = chain_from(c4.complex, 0, exterior_unit(1), exterior_unit(0));
  CHECK(dg_multiply(c4, ProductKind::tutte_partial_4, x, y).empty());
  CHECK_FALSE(dg_multiply(c4, ProductKind::tutte_partial_4, apply_differential(c4.complex, x), y).empty());
  CHECK(leibniz_failures(c4, ProductKind::tutte_partial_4) > 0);
  CHECK(leibniz_failures(build_complex(arr(0, {{}}), Theory::tutte_partial_2), ProductKind::tutte_partial_2) > 0);
}

TEST_CASE("deletion-restriction sequences") {
  CHECK(verify_ses(deletion_restriction_ses(SesKind::d, baby_arrangement(), 1)).ok());
  CHECK(verify_ses(deletion_restriction_ses(SesKind::partial, arr(1, {{1}}), 0)).ok());
  CHECK(verify_ses(deletion_restriction_ses(SesKind::tutte_partial_1, braid(), 2)).ok());
  CHECK_THROWS_AS(deletion_restriction_ses(SesKind::poincare_d, arr(1, {{0}}), 0), DomainError);
}

TEST_CASE("theory names round trip") {
  for (Theory t : kAll) CHECK(parse_theory(theory_name(t)) == t);
  CHECK_THROWS_AS(parse_theory("nope"), DomainError);
}
