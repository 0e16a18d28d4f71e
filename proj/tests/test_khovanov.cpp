#include <doctest.h>

#include "helpers.hpp"

using namespace testing;

namespace {

std::optional<BettiTable> kh_or_none(const SignedArrangement& a) {
  try {
    return kh_homology(a);
  } catch (const NoEdgeScalars&) {
    return std::nullopt;
  }
}

}  // namespace

TEST_CASE("edge types") {
  const SignedCube empty = build_signed_cube(signed_arr(2, {}, ""));
  CHECK(empty.n == 0);
  const SignedCube kink = build_signed_cube(signed_arr(1, {{1}}, "+"));
  CHECK(kink.type[kink.edge(0, 0)] == 1);
  const SignedCube pair = build_signed_cube(signed_arr(1, {{1}, {2}}, "++"));
  CHECK(pair.type[pair.edge(0b01, 1)] == 2);
  const SignedCube neg = build_signed_cube(signed_arr(1, {{1}}, "-"));
  CHECK(neg.type[neg.edge(0, 0)] == 4);
}

TEST_CASE("face scalars") {
  const SignedCube indep = build_signed_cube(signed_arr(2, {{1, 0}, {0, 1}}, "++"));
  CHECK(face_scalar(indep, 0, 0, 1) == Rational(1));
  const SignedCube three = build_signed_cube(signed_arr(1, {{1}, {1}, {1}}, "+++"));
  CHECK(three.type[three.edge(0b001, 1)] == 2);
  CHECK(three.type[three.edge(0b011, 2)] == 2);
  CHECK(face_scalar(three, 0b001, 1, 2) == Rational(-1));
  const SignedCube mixed = build_signed_cube(signed_arr(1, {{2}, {1}}, "++"));
  const auto alpha = face_scalar(mixed, 0, 0, 1);
  REQUIRE(alpha.has_value());
  CHECK((abs(*alpha) == 2 || abs(*alpha) == Rational(1, 2)));
  SignedCube solved = mixed;
  solve_edge_scalars(solved);
  CHECK(faces_anticommute(solved));
  CHECK(squares_to_zero(signed_complex(solved)));
}

TEST_CASE("small cubes get unit scalars") {
  SignedCube c = build_signed_cube(signed_arr(1, {{1}}, "+"));
  solve_edge_scalars(c);
  CHECK(c.eps[c.edge(0, 0)] == 1);
}

TEST_CASE("kh of the empty arrangement and the kinks") {
  CHECK(kh_homology(signed_arr(0, {}, "")) == BettiTable{{{0, 0}, 1}});
  CHECK(kh_homology(signed_arr(1, {{1}}, "+")) == BettiTable{{{-1, -3}, 1}});
  CHECK(kh_homology(signed_arr(1, {{1}}, "-")) == BettiTable{{{1, 3}, 1}});
}

TEST_CASE("kh Euler characteristic is the framed Jones polynomial") {
  for (const auto& [name, a] : signed_corpus(kCorpusSeed, 30)) {
    CAPTURE(name);
    const auto kh = kh_or_none(a);
    REQUIRE(kh.has_value());
    CHECK(kh_euler(*kh) == framed_jones(a));
  }
}

TEST_CASE("solve order does not change kh") {
  for (const auto& [name, a] : signed_corpus(kCorpusSeed, 20)) {
    std::vector<std::size_t> order(a.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
    CAPTURE(name);
    CHECK(kh_homology(a, order) == kh_homology(a));
  }
}

TEST_CASE("some alternating-sign cubes have no edge scalars") {
  // Around a cycle of faces the scalars multiply to 9/4 instead of 1.
  for (const auto& [name, a] : unsigned_corpus()) {
    if (name != "u122") continue;
    SignedArrangement sa{a, {}};
    for (std::size_t i = 0; i < a.size(); ++i) sa.signs.push_back(i % 2 ? Sign::minus : Sign::plus);
    SignedCube cube = build_signed_cube(sa);
    CHECK_FALSE(edge_scalars_exist(cube));
    CHECK_THROWS_AS(solve_edge_scalars(cube), NoEdgeScalars);
    return;
  }
  FAIL("corpus entry u122 missing");
}

TEST_CASE("moves on the small examples") {
  const SignedArrangement zeros = signed_arr(1, {{0}, {0}}, "+-");
  const SignedArrangement w = apply_move(zeros, {MoveKind::wR1, 0, 1, 0, 0, 0, 0});
  CHECK(w.size() == 0);
  CHECK(w.base.dim() == 1);

  const SignedArrangement r2 = signed_arr(2, {{1, 0}, {2, 0}, {0, 1}}, "+-+");
  const SignedArrangement after = apply_move(r2, {MoveKind::R2, 0, 1, 0, Rational(1, 2), 0, 0});
  CHECK(after.size() == 1);
  CHECK(after.base.coordinate_vectors()[0] == Vec{0, 1});
  CHECK(after.signs == std::vector<Sign>{Sign::plus});

  const SignedArrangement r3 = signed_arr(2, {{1, 0}, {0, 1}, {1, 1}}, "++-");
  std::optional<MoveDescriptor> mv;
  for (const auto& m : find_moves(r3))
    if (m.kind == MoveKind::R3 && m.l == 0) mv = m;
  REQUIRE(mv.has_value());
  const SignedArrangement out = apply_move(r3, *mv);
  CHECK(out.size() == 3);
  CHECK(out.base.dim() == 1);
  CHECK(out.signs == std::vector<Sign>{Sign::minus, Sign::plus, Sign::minus});
  CHECK(kh_homology(out) == kh_homology(r3));
}

TEST_CASE("find_moves") {
  auto has = [](const std::vector<MoveDescriptor>& ms, MoveKind k) {
    return std::any_of(ms.begin(), ms.end(), [&](const MoveDescriptor& m) { return m.kind == k; });
  };
  CHECK(has(find_moves(signed_arr(1, {{0}, {0}}, "+-")), MoveKind::wR1));
  CHECK(has(find_moves(signed_arr(2, {{1, 1}, {-2, -2}}, "+-")), MoveKind::R2));
  CHECK(find_moves(signed_arr(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, "+++")).empty());
}

TEST_CASE("hand-built instances of every move keep kh and framed Jones") {
  std::set<MoveKind> kinds;
  for (const auto& inst : move_instances()) {
    CAPTURE(inst.name);
    REQUIRE_FALSE(move_violation(inst.arrangement, inst.move).has_value());
    const SignedArrangement b = apply_move(inst.arrangement, inst.move);
    CHECK(kh_homology(b) == kh_homology(inst.arrangement));
    CHECK(framed_jones(b) == framed_jones(inst.arrangement));
    kinds.insert(inst.move.kind);
  }
  CHECK(kinds.size() == 6);
}

TEST_CASE("R2v is rejected on a parallel pair") {
  // Both vectors parallel: restricting at the pair would drop a factor q + 1/q.
  const SignedArrangement a = signed_arr(1, {{-1}, {-1}}, "-+");
  const MoveDescriptor mv{MoveKind::R2_dual, 0, 1, 0, -1, 0, 0};
  CHECK(move_violation(a, mv).has_value());
  CHECK(framed_jones(a) == qpoly(2) + qpoly(-2));
  CHECK(framed_jones(restrict_at(restrict_at(a, 1), 0)) == qpoly(0));
  for (const auto& m : find_moves(a)) CHECK(m.kind != MoveKind::R2_dual);
}

TEST_CASE("R3 needs the other two vectors independent") {
  const SignedArrangement a = signed_arr(1, {{1}, {1}, {1}}, "++-");
  for (const auto& m : find_moves(a)) CHECK(m.kind != MoveKind::R3);
}

TEST_CASE("kh sequences") {
  CHECK(verify_ses(kh_ses(signed_arr(1, {{1}}, "+"), 0)).ok());
  CHECK(verify_ses(kh_ses(signed_arr(1, {{1}}, "-"), 0)).ok());
  CHECK(verify_ses(kh_ses(signed_arr(1, {{1}, {2}}, "+-"), 0)).ok());
  CHECK(verify_ses(kh_ses(signed_arr(1, {{1}, {2}}, "++"), 0)).ok());
}

TEST_CASE("Gale duality of kh needs spanning vectors") {
  std::size_t spanning = 0, differ = 0;
  for (const auto& [name, v] : signed_corpus(kCorpusSeed, 50)) {
    const auto kv = kh_or_none(v);
    const auto kd = kh_or_none(gale_dual(v));
    REQUIRE(kv.has_value());
    REQUIRE(kd.has_value());
    CAPTURE(name);
    CHECK(kh_or_none(gale_dual(gale_dual(v))) == kd);
    if (static_cast<std::size_t>(subset_ranks(v.base).back()) == v.base.dim()) {
      ++spanning;
      CHECK(*kv == *kd);
      CHECK_FALSE(signed_swap_failure(gale_dual(v)).has_value());
    } else if (*kv != *kd) {
      ++differ;
    }
  }
  CHECK(spanning > 0);
  // A vector that misses a direction: {Q^2; (1,0)+} is not its dual's dual.
  const SignedArrangement thin = signed_arr(2, {{1, 0}}, "+");
  CHECK(kh_homology(thin) != kh_homology(gale_dual(thin)));
  CHECK(differ > 0);
}

TEST_CASE("move kind names") {
  CHECK(parse_move_kind("R3") == MoveKind::R3);
  CHECK(parse_move_kind("R2∨") == MoveKind::R2_dual);
  CHECK(parse_move_kind("wR1_dual") == MoveKind::wR1_dual);
  CHECK_THROWS_AS(parse_move_kind("R4"), DomainError);
}

TEST_CASE("restricting at a positive coloop shifts kh by (1/2, 3/2)") {
  std::size_t seen = 0;
  for (const auto& [name, a] : signed_corpus(kCorpusSeed, 50)) {
    const auto ranks = subset_ranks(a.base);
    const Mask full = a.base.full_mask();
    const BettiTable kh = kh_homology(a);
    for (std::size_t l = 0; l < a.size(); ++l) {
      if (a.signs[l] != Sign::plus || ranks[full & ~(Mask(1) << l)] == ranks[full]) continue;
      BettiTable shifted;
      for (const auto& [g, d] : kh) shifted[{g[0] + 1, g[1] + 3}] = d;
      CAPTURE(name);
      CHECK(kh_homology(restrict_at(a, l)) == shifted);
      ++seen;
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("moves commute with Gale duality") {
  auto dual_kind = [](MoveKind k) {
    switch (k) {
      case MoveKind::wR1: return MoveKind::wR1_dual;
      case MoveKind::wR1_dual: return MoveKind::wR1;
      case MoveKind::R2: return MoveKind::R2_dual;
      case MoveKind::R2_dual: return MoveKind::R2;
      case MoveKind::R3: return MoveKind::R3_dual;
      default: return MoveKind::R3;
    }
  };
  std::size_t seen = 0;
  for (const auto& inst : move_instances()) {
    const SignedArrangement d = gale_dual(inst.arrangement);
    for (const auto& mv : find_moves(d)) {
      if (mv.kind != dual_kind(inst.move.kind) || mv.l != inst.move.l || mv.m != inst.move.m) continue;
      if ((mv.kind == MoveKind::R3 || mv.kind == MoveKind::R3_dual) && mv.p != inst.move.p) continue;
      CAPTURE(inst.name);
      CHECK(kh_homology(gale_dual(apply_move(inst.arrangement, inst.move))) == kh_homology(apply_move(d, mv)));
      ++seen;
      break;
    }
  }
  CHECK(seen >= 4);
}
