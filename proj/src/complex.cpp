#include "arrkh/complex.hpp"

#include <algorithm>
#include <bit>

namespace arrkh {

std::size_t ChainComplex::block_of(std::size_t gen) const {
  auto it = std::upper_bound(blocks.begin(), blocks.end(), gen,
                             [](std::size_t g, const Block& b) { return g < b.offset; });
  return static_cast<std::size_t>(it - blocks.begin()) - 1;
}

ChainComplex assemble(std::vector<Block> blocks, const GradeFn& grade, const EdgeFn& edges,
                      int arity, int denominator, int axis, int step, Exec exec) {
  ChainComplex c;
  c.arity = arity;
  c.denominator = denominator;
  c.axis = axis;
  c.step = step;
  std::size_t total = 0;
  for (auto& b : blocks) {
    b.offset = total;
    total += b.size();
  }
  c.blocks = std::move(blocks);
  c.grade.resize(total);
  c.diff.resize(total);
  for (std::size_t v = 0; v < c.blocks.size(); ++v) {
    const Block& b = c.blocks[v];
    for (WedgeMask h = 0; h < (WedgeMask(1) << b.hdim); ++h)
      for (WedgeMask w = 0; w < (WedgeMask(1) << b.wdim); ++w)
        c.grade[c.index(v, h, w)] = grade(b, std::popcount(h), std::popcount(w));
  }
  auto body = [&](std::size_t v) {
    const Block& b = c.blocks[v];
    auto es = edges(v);
    for (const auto& e : es) {
      const Block& t = c.blocks[e.to];
      if (e.h.src_dim != b.hdim || e.w.src_dim != b.wdim || e.h.tgt_dim != t.hdim ||
          e.w.tgt_dim != t.wdim)
        throw DomainError("edge map does not match its blocks");
    }
    for (WedgeMask h = 0; h < (WedgeMask(1) << b.hdim); ++h)
      for (WedgeMask w = 0; w < (WedgeMask(1) << b.wdim); ++w) {
        Chain acc;
        for (const auto& e : es)
          for (const auto& [th, a] : e.h.cols[h])
            for (const auto& [tw, bb] : e.w.cols[w]) {
              Rational x = e.scalar * a * bb;
              auto [it, fresh] = acc.emplace(c.index(e.to, th, tw), x);
              if (!fresh) it->second += x;
            }
        const std::size_t g = c.index(v, h, w);
        SparseVec col;
        for (auto& [i, x] : acc)
          if (sgn(x) != 0) col.emplace_back(static_cast<std::uint32_t>(i), x);
        for (const auto& [i, x] : col)
          if (c.grade[i] != c.target_grade(c.grade[g]))
            throw DomainError("differential does not respect the grading");
        c.diff[g] = std::move(col);
      }
  };
  const long nb = static_cast<long>(c.blocks.size());
  if (exec == Exec::parallel) {
    std::vector<std::string> errors(static_cast<std::size_t>(nb));
#pragma omp parallel for schedule(dynamic, 1)
    for (long v = 0; v < nb; ++v) {
      try {
        body(static_cast<std::size_t>(v));
      } catch (const std::exception& ex) {
        errors[static_cast<std::size_t>(v)] = ex.what();
      }
    }
    for (const auto& e : errors)
      if (!e.empty()) throw DomainError(e);
  } else {
    for (long v = 0; v < nb; ++v) body(static_cast<std::size_t>(v));
  }
  return c;
}

Chain apply_differential(const ChainComplex& c, const Chain& x) {
  Chain out;
  for (const auto& [g, a] : x)
    for (const auto& [t, b] : c.diff[g]) {
      auto [it, fresh] = out.emplace(t, a * b);
      if (!fresh) {
        it->second += a * b;
        if (sgn(it->second) == 0) out.erase(it);
      }
    }
  return out;
}

Chain chain_add(const Chain& x, const Chain& y, const Rational& s) {
  Chain out = x;
  for (const auto& [g, a] : y) {
    auto [it, fresh] = out.emplace(g, s * a);
    if (!fresh) it->second += s * a;
    if (sgn(it->second) == 0) out.erase(it);
  }
  return out;
}

Chain chain_scale(const Chain& x, const Rational& s) {
  Chain out;
  if (sgn(s) == 0) return out;
  for (const auto& [g, a] : x) out.emplace(g, a * s);
  return out;
}

Chain chain_from(const ChainComplex& c, std::size_t v, const ExteriorElement& h,
                 const ExteriorElement& w) {
  Chain out;
  for (const auto& [hm, a] : h.terms)
    for (const auto& [wm, b] : w.terms) out[c.index(v, hm, wm)] = a * b;
  return out;
}

bool squares_to_zero(const ChainComplex& c, Exec exec) {
  const long n = static_cast<long>(c.size());
  bool ok = true;
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64) reduction(&& : ok)
    for (long g = 0; g < n; ++g) ok = ok && apply_differential(c, apply_differential(c, Chain{{static_cast<std::size_t>(g), Rational(1)}})).empty();
  } else {
    for (long g = 0; g < n && ok; ++g)
      ok = apply_differential(c, apply_differential(c, Chain{{static_cast<std::size_t>(g), Rational(1)}})).empty();
  }
  return ok;
}

void assert_square_zero(const ChainComplex& c, Exec exec) {
  if (!squares_to_zero(c, exec)) throw DomainError("differential does not square to zero");
}

BettiTable homology(const ChainComplex& c, Exec exec) {
  std::map<Grade, std::vector<std::size_t>> groups;
  for (std::size_t g = 0; g < c.size(); ++g) groups[c.grade[g]].push_back(g);
  std::vector<std::size_t> pos(c.size());
  for (const auto& [gr, gens] : groups)
    for (std::size_t k = 0; k < gens.size(); ++k) pos[gens[k]] = k;
  std::vector<const Grade*> keys;
  std::vector<const std::vector<std::size_t>*> members;
  for (const auto& [gr, gens] : groups) {
    keys.push_back(&gr);
    members.push_back(&gens);
  }
  std::vector<std::size_t> rank_out(keys.size(), 0);
  auto body = [&](std::size_t k) {
    auto it = groups.find(c.target_grade(*keys[k]));
    if (it == groups.end()) return;
    const auto& src = *members[k];
    Matrix m(it->second.size(), src.size());
    bool any = false;
    for (std::size_t col = 0; col < src.size(); ++col)
      for (const auto& [t, x] : c.diff[src[col]]) {
        m(pos[t], col) = x;
        any = true;
      }
    rank_out[k] = any ? rank(m) : 0;
  };
  const long nk = static_cast<long>(keys.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long k = 0; k < nk; ++k) body(static_cast<std::size_t>(k));
  } else {
    for (long k = 0; k < nk; ++k) body(static_cast<std::size_t>(k));
  }
  std::map<Grade, std::size_t> out_rank;
  for (std::size_t k = 0; k < keys.size(); ++k) out_rank[*keys[k]] = rank_out[k];
  BettiTable b;
  for (std::size_t k = 0; k < keys.size(); ++k) {
    Grade src = *keys[k];
    src[c.axis] -= c.step * c.denominator;
    auto it = out_rank.find(src);
    long in = it == out_rank.end() ? 0 : static_cast<long>(it->second);
    long d = static_cast<long>(members[k]->size()) - static_cast<long>(rank_out[k]) - in;
    if (d < 0) throw DomainError("negative homology dimension");
    if (d > 0) b[*keys[k]] = d;
  }
  return b;
}

namespace {

LaurentPoly euler_from_counts(const std::map<Grade, long>& counts, int axis, int den,
                              const std::vector<std::string>& vars) {
  LaurentPoly p(vars);
  for (const auto& [g, d] : counts) {
    GaussInt sign = den == 1 ? GaussInt(g[axis] % 2 ? -1 : 1) : i_power(g[axis]);
    LaurentPoly::Exps e;
    for (std::size_t k = 0; k < g.size(); ++k)
      if (static_cast<int>(k) != axis) e.push_back(den == 1 ? 2 * g[k] : g[k]);
    if (e.size() != vars.size()) throw DomainError("variable count does not match grading");
    p.add_term(e, sign * GaussInt(d));
  }
  return p;
}

}  // namespace

LaurentPoly euler_characteristic(const BettiTable& b, const ChainComplex& shape,
                                 const std::vector<std::string>& vars) {
  return euler_from_counts(b, shape.axis, shape.denominator, vars);
}

LaurentPoly chain_euler_characteristic(const ChainComplex& c, const std::vector<std::string>& vars) {
  std::map<Grade, long> counts;
  for (const auto& g : c.grade) ++counts[g];
  return euler_from_counts(counts, c.axis, c.denominator, vars);
}

int edge_sign(Mask S, std::size_t r) {
  if (S >> r & 1u) throw DomainError("edge direction already in subset");
  return std::popcount(S & ((Mask(1) << r) - 1)) % 2 ? -1 : 1;
}

Theory parse_theory(const std::string& s) {
  if (s == "d") return Theory::d;
  if (s == "partial") return Theory::partial;
  if (s == "poincare") return Theory::poincare;
  if (s == "tutte-d") return Theory::tutte_d;
  if (s == "tutte-partial-1") return Theory::tutte_partial_1;
  if (s == "tutte-partial-2") return Theory::tutte_partial_2;
  if (s == "tutte-partial-3") return Theory::tutte_partial_3;
  if (s == "tutte-partial-4") return Theory::tutte_partial_4;
  throw DomainError("unknown theory: " + s);
}

std::string theory_name(Theory t) {
  switch (t) {
    case Theory::d: return "d";
    case Theory::partial: return "partial";
    case Theory::poincare: return "poincare";
    case Theory::tutte_d: return "tutte-d";
    case Theory::tutte_partial_1: return "tutte-partial-1";
    case Theory::tutte_partial_2: return "tutte-partial-2";
    case Theory::tutte_partial_3: return "tutte-partial-3";
    case Theory::tutte_partial_4: return "tutte-partial-4";
  }
  return "?";
}

namespace {

CubeComplex make_context(const VectorArrangement& a, Theory t, Exec exec) {
  CubeComplex cc;
  cc.theory = t;
  auto arr = std::make_shared<const VectorArrangement>(a);
  cc.arrangement = arr;
  cc.spaces = std::make_shared<const SpaceTable>(*arr, exec);
  return cc;
}

std::vector<Block> single_blocks(const CubeComplex& cc, bool use_v) {
  const auto& t = *cc.spaces;
  std::vector<Block> blocks(std::size_t(1) << cc.arrangement->size());
  for (Mask S = 0; S < blocks.size(); ++S)
    blocks[S] = {S, use_v ? t[S].V.dim() : t[S].H.dim(), 0, 0};
  return blocks;
}

const ExteriorMap& trivial() {
  static const ExteriorMap id = exterior_identity(0);
  return id;
}

}  // namespace

CubeComplex build_characteristic_d(const VectorArrangement& a, Exec exec) {
  CubeComplex cc = make_context(a, Theory::d, exec);
  const auto& t = *cc.spaces;
  const std::size_t n = a.size();
  auto edges = [&](std::size_t v) {
    std::vector<CubeEdge> es;
    Mask S = static_cast<Mask>(v);
    for (std::size_t r = 0; r < n; ++r) {
      if (S >> r & 1u) continue;
      Mask T = S | (Mask(1) << r);
      es.push_back({S, T, induced_projection(t[S].H, t[T].H), trivial(), edge_sign(S, r)});
    }
    return es;
  };
  auto grade = [](const Block& b, int i, int) { return Grade{std::popcount(b.S), i}; };
  cc.complex = assemble(single_blocks(cc, false), grade, edges, 2, 1, 0, 1, exec);
  return cc;
}

CubeComplex build_characteristic_partial(const VectorArrangement& a, Exec exec) {
  CubeComplex cc = make_context(a, Theory::partial, exec);
  const auto& t = *cc.spaces;
  const std::size_t n = a.size();
  auto edges = [&](std::size_t v) {
    std::vector<CubeEdge> es;
    Mask S = static_cast<Mask>(v);
    for (std::size_t s = 0; s < n; ++s) {
      if (!(S >> s & 1u)) continue;
      Mask T = S & ~(Mask(1) << s);
      es.push_back({S, T, wedge_map(a.vectors[s], t[S].H, t[T].H), trivial(), 1});
    }
    return es;
  };
  auto grade = [](const Block& b, int i, int) { return Grade{std::popcount(b.S) + i, i}; };
  cc.complex = assemble(single_blocks(cc, false), grade, edges, 2, 1, 1, 1, exec);
  return cc;
}

CubeComplex build_poincare_d(const VectorArrangement& a, Exec exec) {
  CubeComplex cc = make_context(a, Theory::poincare, exec);
  const auto& t = *cc.spaces;
  const std::size_t n = a.size();
  auto edges = [&](std::size_t v) {
    std::vector<CubeEdge> es;
    Mask S = static_cast<Mask>(v);
    for (std::size_t r = 0; r < n; ++r) {
      if (S >> r & 1u) continue;
      Mask T = S | (Mask(1) << r);
      es.push_back({S, T, induced_projection(t[S].V, t[T].V), trivial(), edge_sign(S, r)});
    }
    return es;
  };
  auto grade = [](const Block& b, int i, int) { return Grade{std::popcount(b.S), i}; };
  cc.complex = assemble(single_blocks(cc, true), grade, edges, 2, 1, 0, 1, exec);
  return cc;
}

CubeComplex build_complex(const VectorArrangement& a, Theory t, Exec exec) {
  switch (t) {
    case Theory::d: return build_characteristic_d(a, exec);
    case Theory::partial: return build_characteristic_partial(a, exec);
    case Theory::poincare: return build_poincare_d(a, exec);
    case Theory::tutte_d: return build_tutte_d(a, exec);
    case Theory::tutte_partial_1: return build_tutte_partial(a, 1, exec);
    case Theory::tutte_partial_2: return build_tutte_partial(a, 2, exec);
    case Theory::tutte_partial_3: return build_tutte_partial(a, 3, exec);
    case Theory::tutte_partial_4: return build_tutte_partial(a, 4, exec);
  }
  throw DomainError("unknown theory");
}

BettiTable theory_homology(const VectorArrangement& a, Theory t, Exec exec) {
  CubeComplex cc = build_complex(a, t, exec);
  assert_square_zero(cc.complex, exec);
  return homology(cc.complex, exec);
}

BettiTable convolve(const BettiTable& a, const BettiTable& b) {
  BettiTable out;
  for (const auto& [g1, d1] : a)
    for (const auto& [g2, d2] : b) {
      if (g1.size() != g2.size()) throw DomainError("grading arity mismatch");
      Grade g = g1;
      for (std::size_t k = 0; k < g.size(); ++k) g[k] += g2[k];
      out[g] += d1 * d2;
    }
  return out;
}

long total_dim(const BettiTable& b) {
  long s = 0;
  for (const auto& [g, d] : b) s += d;
  return s;
}

}  // namespace arrkh
