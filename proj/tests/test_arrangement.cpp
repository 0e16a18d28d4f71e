#include <doctest.h>

#include "helpers.hpp"

using namespace testing;

TEST_CASE("subset spaces of the baby and braid arrangements") {
  const auto baby = subset_spaces(baby_arrangement(), 0b11);
  CHECK(baby.H.dim() == 1);
  CHECK(baby.H.contains(Vec{1, 1, 1}));
  CHECK(baby.V.dim() == 2);
  CHECK(baby.W.dim() == 0);
  const auto full = subset_spaces(braid(), 0b111);
  CHECK(full.H.dim() == 1);
  CHECK(full.V.dim() == 2);
  CHECK(full.W.dim() == 1);
}

TEST_CASE("matroid data satisfies rank-nullity everywhere") {
  for (const auto& [name, a] : unsigned_corpus(kCorpusSeed, 40)) {
    const auto rows = matroid_data(a);
    for (Mask S = 0; S < rows.size(); ++S) {
      CAPTURE(name);
      CHECK(rows[S].h + rows[S].v == a.dim());
      CHECK(rows[S].v + rows[S].w == static_cast<std::size_t>(std::popcount(S)));
    }
  }
}

TEST_CASE("Gale dual of the braid arrangement") {
  const VectorArrangement d = gale_dual(braid());
  CHECK(d.dim() == 1);
  const auto c = d.coordinate_vectors();
  REQUIRE(c.size() == 3);
  CHECK(!is_zero(c[0]));
  CHECK(c[0] == c[1]);
  CHECK(c[1] == c[2]);
}

TEST_CASE("Gale dual of independent vectors is zeros in dimension zero") {
  const VectorArrangement d = gale_dual(arr(2, {{1, 0}, {1, 1}}));
  CHECK(d.dim() == 0);
  CHECK(d.size() == 2);
  const SignedArrangement kink = signed_arr(1, {{1}}, "+");
  const SignedArrangement kd = gale_dual(kink);
  CHECK(kd.base.dim() == 0);
  CHECK(kd.signs == std::vector<Sign>{Sign::minus});
}

TEST_CASE("Gale duality swaps H and W data") {
  for (const auto& [name, a] : unsigned_corpus(kCorpusSeed, 40)) {
    const auto here = matroid_data(a), there = matroid_data(gale_dual(a));
    const Mask full = a.full_mask();
    for (Mask S = 0; S < here.size(); ++S) {
      CAPTURE(name);
      CHECK(here[S].w == there[full & ~S].h);
      // The dual only sees the span of the vectors.
      CHECK(there[S].w + (a.dim() - here[full].v) == here[full & ~S].h);
    }
  }
}

TEST_CASE("delete and restrict") {
  const VectorArrangement a = delete_vector(braid(), 2);
  CHECK(matroid_data(a) == matroid_data(baby_arrangement()));
  const VectorArrangement r = restrict_at(baby_arrangement(), 0);
  CHECK(r.size() == 1);
  CHECK(r.dim() == 2);
  CHECK(!is_zero(r.vectors[0]));
  // Restricting at a zero vector changes nothing.
  const VectorArrangement z = arr(2, {{0, 0}, {1, 2}});
  CHECK(matroid_data(restrict_at(z, 0)) == matroid_data(delete_vector(z, 0)));
  CHECK(restrict_at(z, 0).dim() == 2);
}

TEST_CASE("deletion and restriction are exchanged by Gale duality") {
  for (const auto& [name, a] : unsigned_corpus(kCorpusSeed, 40)) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      CAPTURE(name);
      CHECK(matroid_data(gale_dual(delete_vector(a, i))) == matroid_data(restrict_at(gale_dual(a), i)));
      // Restricting at a zero vector keeps the rank, so the dual loses a dimension.
      if (!is_zero(a.vectors[i]))
        CHECK(matroid_data(gale_dual(restrict_at(a, i))) == matroid_data(delete_vector(gale_dual(a), i)));
    }
  }
}

TEST_CASE("products pad with zeros") {
  const VectorArrangement p = product(baby_arrangement(), arr(1, {}));
  CHECK(p.dim() == 4);
  CHECK(p.size() == 2);
  CHECK(p.coordinate_vectors()[0] == Vec{1, -1, 0, 0});
  const VectorArrangement q = product(arr(1, {{1}}), arr(1, {{2}}));
  CHECK(q.coordinate_vectors() == std::vector<Vec>{{1, 0}, {0, 2}});
}

TEST_CASE("graphical arrangements") {
  Graph tri{3, {{1, 2}, {2, 3}, {3, 1}}, {}, false};
  CHECK(matroid_data(from_graph(tri)) == matroid_data(braid()));
  tri.reduced = true;
  const VectorArrangement red = from_graph(tri);
  CHECK(red.dim() == 2);
  CHECK(matroid_data(red).back() == MatroidRow{0, 2, 1});
  Graph loop{1, {{1, 1}}, {}, true};
  CHECK(is_zero(from_graph(loop).vectors[0]));
}

TEST_CASE("tilde swaps the negative part") {
  const SignedArrangement a = signed_arr(1, {{1}, {1}, {1}}, "+-+");
  CHECK(tilde(a, 0) == 0b010);
  CHECK(tilde(a, 0b111) == 0b101);
  CHECK(tilde(a, 0b010) == 0);
}

TEST_CASE("permute and negate keep the matroid") {
  const VectorArrangement p = permute(braid(), {2, 0, 1});
  CHECK(p.coordinate_vectors()[0] == braid().coordinate_vectors()[2]);
  const VectorArrangement n = negate_vector(braid(), 1);
  CHECK(matroid_data(n) == matroid_data(braid()));
  CHECK(n.vectors[1] == Vec{0, -1, 1});
}
