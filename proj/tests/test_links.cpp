#include <doctest.h>

#include "helpers.hpp"

using namespace testing;

namespace {

const char* kTrefoil = "X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3";
const char* kHopf = "X 1 3 2 4\nX 3 1 4 2";

std::size_t shaded_count(const std::vector<bool>& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

}  // namespace

TEST_CASE("parsing") {
  const PlanarDiagram loop = parse_pd("O 1");
  CHECK(loop.crossings.empty());
  CHECK(loop.free_loops == 1);
  const PlanarDiagram t = parse_pd(kTrefoil);
  CHECK(t.crossings.size() == 3);
  CHECK(parse_pd("# comment\n" + format_pd(t)).crossings == t.crossings);
  CHECK_THROWS_AS(parse_pd("X 1 2 3 4"), DomainError);
  CHECK_THROWS_AS(parse_pd("X 1 2"), DomainError);
  CHECK_THROWS_AS(parse_pd("Y 1 1 2 2"), DomainError);
}

TEST_CASE("faces") {
  CHECK(faces(parse_pd(kTrefoil)).size() == 5);
  CHECK(faces(parse_pd(kHopf)).size() == 4);
  CHECK(faces(parse_pd("O 1")).size() == 2);
}

TEST_CASE("checkerboard shadings") {
  const auto t = checkerboard(parse_pd(kTrefoil));
  std::set<std::size_t> counts{shaded_count(t[0]), shaded_count(t[1])};
  CHECK(counts == std::set<std::size_t>{2, 3});
  const auto h = checkerboard(parse_pd(kHopf));
  CHECK(shaded_count(h[0]) == 2);
  CHECK(shaded_count(h[1]) == 2);
  const auto o = checkerboard(parse_pd("O 1"));
  CHECK(shaded_count(o[0]) == 1);
  CHECK(shaded_count(o[1]) == 1);
}

TEST_CASE("Tait graphs of the trefoil") {
  const PlanarDiagram d = parse_pd(kTrefoil);
  for (int s = 0; s < 2; ++s) {
    const Graph g = tait_graph(d, s);
    CHECK(g.edges.size() == 3);
    CHECK(std::count(g.signs.begin(), g.signs.end(), g.signs[0]) == 3);
    if (g.vertices == 2) {
      for (const auto& [u, v] : g.edges) CHECK(u != v);
      const SignedArrangement a = link_arrangement(d, s);
      CHECK(a.base.dim() == 1);
      const auto c = a.base.coordinate_vectors();
      CHECK(abs(c[0][0]) == abs(c[1][0]));
      CHECK(abs(c[1][0]) == abs(c[2][0]));
    } else {
      CHECK(g.vertices == 3);
    }
  }
  CHECK(tait_graph(d, 0).signs[0] != tait_graph(d, 1).signs[0]);
}

TEST_CASE("positive kink arrangements") {
  const PlanarDiagram kink = parse_pd("X 1 1 2 2");
  std::set<std::size_t> dims;
  for (int s = 0; s < 2; ++s) {
    const SignedArrangement a = link_arrangement(kink, s);
    REQUIRE(a.size() == 1);
    dims.insert(a.base.dim());
    if (a.base.dim() == 1) {
      CHECK(a.signs[0] == Sign::plus);
      CHECK(!is_zero(a.base.vectors[0]));
    } else {
      CHECK(a.signs[0] == Sign::minus);
    }
  }
  CHECK(dims == std::set<std::size_t>{0, 1});
}

TEST_CASE("smoothing circles") {
  CHECK(smoothing_circles(parse_pd("O 1"), 0) == 1);
  CHECK(smoothing_circles(parse_pd(kHopf), 0) == 2);
  for (const auto& [name, d] : diagram_corpus())
    for (int s = 0; s < 2; ++s) {
      CAPTURE(name);
      CHECK_FALSE(circle_identity_failure(d, s).has_value());
    }
}

TEST_CASE("writhe") {
  CHECK(writhe(parse_pd("O 1")) == 0);
  CHECK(writhe(parse_pd(kTrefoil)) == -3);
  CHECK(writhe(parse_pd("X 1 1 2 2")) == 1);
  CHECK(writhe(parse_pd("X 2 1 1 2")) == -1);
  CHECK(writhe(add_kink(parse_pd("X 1 1 2 2"), 1, -1)) == 0);
}

TEST_CASE("diagram Jones polynomial") {
  CHECK(jones_diagram(parse_pd("O 1")) == qpoly(0));
  const LaurentPoly t = jones_diagram(parse_pd(kTrefoil));
  std::multiset<long> coeffs;
  for (const auto& [e, c] : t.terms()) {
    CHECK(c.im == 0);
    coeffs.insert(c.re.get_si());
  }
  CHECK(coeffs == std::multiset<long>{-1, 1, 1});
  CHECK(jones_diagram(parse_pd("O 2")) == qpoly(2) + qpoly(-2));
}

TEST_CASE("Jones identity and shading independence on the diagram corpus") {
  for (const auto& [name, d] : diagram_corpus()) {
    CAPTURE(name);
    const LaurentPoly framed = jones_diagram(d) * framing_factor(writhe(d));
    const SignedArrangement a0 = link_arrangement(d, 0), a1 = link_arrangement(d, 1);
    CHECK(framed_jones(a0) == framed);
    CHECK(framed_jones(a1) == framed);
    CHECK(kh_homology(a0) == kh_homology(a1));
  }
}

TEST_CASE("kinks and framings") {
  const PlanarDiagram hopf = parse_pd(kHopf);
  CHECK(component_framings(hopf) == std::vector<long>{0, 0});
  CHECK(component_framings(add_kink(add_kink(hopf, 3, 1), 3, 1)) == std::vector<long>{0, 2});
  // Opposite kinks on one strand cancel in the framed theory.
  const PlanarDiagram k = add_kink(parse_pd("X 1 1 2 2"), 2, -1);
  CHECK(k.crossings.size() == 2);
  CHECK(writhe(k) == 0);
  CHECK(kh_homology(link_arrangement(k, 0)) == BettiTable{{{0, 0}, 1}});
}

TEST_CASE("link corpus face scalars are signs") {
  for (const auto& [name, d] : diagram_corpus()) {
    const SignedArrangement v = link_arrangement(d, 0);
    const SignedCube cube = build_signed_cube(v);
    for (Mask S = 0; S < (Mask(1) << v.size()); ++S)
      for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b) {
          if ((S >> a & 1u) || (S >> b & 1u)) continue;
          if (const auto alpha = face_scalar(cube, S, a, b)) {
            CAPTURE(name);
            CHECK(abs(*alpha) == 1);
          }
        }
  }
}
