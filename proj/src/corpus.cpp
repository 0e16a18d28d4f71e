#include "arrkh/corpus.hpp"

#include <algorithm>

namespace arrkh {

namespace {

std::vector<Vec> random_vectors(CorpusRng& rng, std::size_t n, std::size_t k) {
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < n; ++i) {
    Vec v(k, Rational(0));
    const std::size_t kind = rng.below(8);
    if (kind == 0) {
      // zero vector
    } else if (kind <= 2 && !vecs.empty()) {
      static const long mult[] = {1, -1, 2, -2};
      const Vec& src = vecs[rng.below(vecs.size())];
      const long m = mult[rng.below(4)];
      for (std::size_t c = 0; c < k; ++c) v[c] = src[c] * m;
    } else {
      for (std::size_t c = 0; c < k; ++c) v[c] = rng.between(-2, 2);
    }
    vecs.push_back(std::move(v));
  }
  return vecs;
}

std::string label(const char* prefix, std::size_t i) {
  std::string s = std::to_string(i);
  return prefix + std::string(3 - std::min<std::size_t>(3, s.size()), '0') + s;
}

std::vector<Sign> random_signs(CorpusRng& rng, std::size_t n) {
  std::vector<Sign> s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(rng.below(2) ? Sign::plus : Sign::minus);
  return s;
}

}  // namespace

VectorArrangement baby_arrangement() {
  return VectorArrangement::standard(3, {{1, -1, 0}, {0, 1, -1}});
}

std::vector<Named<VectorArrangement>> unsigned_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n,
                                                      std::size_t max_k) {
  CorpusRng rng(seed);
  std::vector<Named<VectorArrangement>> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t k = rng.below(max_k + 1), n = rng.below(max_n + 1);
    out.push_back({label("u", i), VectorArrangement::standard(k, random_vectors(rng, n, k))});
  }
  return out;
}

std::vector<Named<SignedArrangement>> signed_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n,
                                                    std::size_t max_k) {
  CorpusRng rng(seed ^ 0x5167a11eULL);
  std::vector<Named<SignedArrangement>> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (i % 2 == 0) {
      // Graphical: small multigraphs with loops and parallel edges.
      Graph g;
      g.vertices = 1 + rng.below(std::min<std::size_t>(max_k, 3) + 1);
      g.reduced = true;
      const std::size_t n = rng.below(max_n + 1);
      for (std::size_t e = 0; e < n; ++e) g.edges.emplace_back(1 + rng.below(g.vertices), 1 + rng.below(g.vertices));
      g.signs = random_signs(rng, n);
      out.push_back({label("g", i), from_signed_graph(g)});
    } else {
      const std::size_t k = rng.below(max_k + 1), n = rng.below(max_n + 1);
      SignedArrangement a{VectorArrangement::standard(k, random_vectors(rng, n, k)), random_signs(rng, n)};
      out.push_back({label("s", i), a});
    }
  }
  return out;
}

std::vector<MoveInstance> move_instances() {
  using S = Sign;
  std::vector<MoveInstance> out;
  SignedArrangement w1{VectorArrangement::standard(1, {{0}, {0}, {1}}), {S::plus, S::minus, S::plus}};
  out.push_back({"wR1 zero pair", w1, {MoveKind::wR1, 0, 1, 0, 0, 0, 0}});
  SignedArrangement w1d{VectorArrangement::standard(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 2}}),
                        {S::plus, S::minus, S::plus, S::minus}};
  out.push_back({"wR1v independent pair", w1d, {MoveKind::wR1_dual, 0, 1, 0, 0, 0, 0}});
  SignedArrangement r2{VectorArrangement::standard(2, {{1, 0}, {2, 0}, {0, 1}}), {S::plus, S::minus, S::plus}};
  out.push_back({"R2 parallel pair", r2, {MoveKind::R2, 0, 1, 0, Rational(1, 2), 0, 0}});
  SignedArrangement r2g{VectorArrangement::standard(2, {{1, 1}, {1, 1}, {1, 0}, {0, 1}}),
                        {S::minus, S::plus, S::plus, S::minus}};
  out.push_back({"R2 in a triangle", r2g, {MoveKind::R2, 0, 1, 0, 1, 0, 0}});
  SignedArrangement r2d = gale_dual(r2g);
  for (const auto& mv : find_moves(r2d))
    if (mv.kind == MoveKind::R2_dual && mv.l == 0 && mv.m == 1) out.push_back({"R2v dual of a triangle", r2d, mv});
  if (out.back().move.kind != MoveKind::R2_dual) throw DomainError("no R2v move found");
  SignedArrangement r3{VectorArrangement::standard(2, {{1, 0}, {0, 1}, {1, 1}}), {S::plus, S::plus, S::minus}};
  SignedArrangement r3g = from_signed_graph({3, {{1, 2}, {2, 3}, {1, 3}, {1, 3}}, {S::plus, S::plus, S::minus, S::plus}, true});
  SignedArrangement k4 = from_signed_graph({4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}, {2, 4}},
                                           {S::plus, S::plus, S::minus, S::plus, S::minus, S::minus}, true});
  SignedArrangement r3d = gale_dual(k4);
  for (auto [name, a] : {std::pair{"R3 triple", r3}, std::pair{"R3 triangle graph", r3g},
                         std::pair{"R3v dual of K4", r3d}}) {
    bool found = false;
    for (const auto& mv : find_moves(a))
      if (mv.kind == MoveKind::R3 || mv.kind == MoveKind::R3_dual) {
        out.push_back({name, a, mv});
        found = true;
        break;
      }
    if (!found) throw DomainError(std::string("no triple move found for ") + name);
  }
  return out;
}

PlanarDiagram add_kink(const PlanarDiagram& d, long arc, int sign, int side) {
  long top = 0;
  for (const auto& x : d.crossings)
    for (long v : x) top = std::max(top, v);
  const DiagramStructure st = analyze(d);
  // The occurrence where the arc arrives is renamed to the arc leaving the kink.
  std::size_t head = SIZE_MAX;
  for (std::size_t s = 0; s < 4 * d.crossings.size(); ++s)
    if (d.crossings[s / 4][s % 4] == arc && st.incoming[s]) head = s;
  if (head == SIZE_MAX) throw DomainError("arc not found: " + std::to_string(arc));
  PlanarDiagram out = d;
  const long loop = top + 1, next = top + 2;
  out.crossings[head / 4][head % 4] = next;
  if (side == 0)
    out.crossings.push_back(sign > 0 ? std::array<long, 4>{arc, next, loop, loop} : std::array<long, 4>{loop, arc, next, loop});
  else
    out.crossings.push_back(sign > 0 ? std::array<long, 4>{loop, loop, next, arc} : std::array<long, 4>{arc, loop, loop, next});
  return out;
}

std::vector<Named<PlanarDiagram>> diagram_corpus() {
  std::vector<Named<PlanarDiagram>> out;
  out.push_back({"unknot", parse_pd("O 1")});
  out.push_back({"positive kink", parse_pd("X 1 1 2 2")});
  out.push_back({"negative kink", parse_pd("X 2 1 1 2")});
  out.push_back({"hopf", parse_pd("X 1 3 2 4\nX 3 1 4 2")});
  out.push_back({"trefoil", parse_pd("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3")});
  out.push_back({"figure eight", parse_pd("X 4 2 5 1\nX 8 6 1 5\nX 6 3 7 4\nX 2 7 3 8")});
  out.push_back({"two unknots", parse_pd("O 2")});
  out.push_back({"kinked trefoil", add_kink(parse_pd("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3"), 2, -1)});
  out.push_back({"hopf with kinks", add_kink(add_kink(parse_pd("X 1 3 2 4\nX 3 1 4 2"), 1, 1), 3, -1)});
  return out;
}

}  // namespace arrkh
