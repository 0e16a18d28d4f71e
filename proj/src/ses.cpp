#include "arrkh/ses.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <queue>
#include <set>

namespace arrkh {

Mask expand_mask(Mask S, std::size_t l) {
  const Mask low = (Mask(1) << l) - 1;
  return (S & low) | ((S & ~low) << 1);
}

Mask shrink_mask(Mask S, std::size_t l) {
  const Mask low = (Mask(1) << l) - 1;
  return (S & low) | ((S >> 1) & ~low);
}

ChainComplex shifted(const ChainComplex& c, const Grade& delta) {
  if (static_cast<int>(delta.size()) != c.arity) throw DomainError("shift arity mismatch");
  ChainComplex out = c;
  for (auto& g : out.grade)
    for (std::size_t k = 0; k < g.size(); ++k) g[k] += delta[k];
  return out;
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
  if (a.arity != b.arity || a.denominator != b.denominator || a.axis != b.axis || a.step != b.step)
    throw DomainError("direct sum of differently shaped complexes");
  ChainComplex out = a;
  const std::size_t off = a.size();
  for (Block blk : b.blocks) {
    blk.offset += off;
    out.blocks.push_back(blk);
  }
  out.grade.insert(out.grade.end(), b.grade.begin(), b.grade.end());
  for (const auto& col : b.diff) {
    SparseVec moved;
    for (const auto& [i, x] : col) moved.emplace_back(static_cast<std::uint32_t>(i + off), x);
    out.diff.push_back(std::move(moved));
  }
  return out;
}

namespace {

const ExteriorMap& no_w() {
  static const ExteriorMap m = exterior_identity(0);
  return m;
}

// Adds scalar * (h tensor w) from block sv of src to block tv of tgt.
void add_block_map(ChainMap& m, const ChainComplex& src, std::size_t sv, const ChainComplex& tgt,
                   std::size_t tv, const ExteriorMap& h, const ExteriorMap& w, const Rational& s) {
  const Block &bs = src.blocks[sv], &bt = tgt.blocks[tv];
  if (h.src_dim != bs.hdim || h.tgt_dim != bt.hdim || w.src_dim != bs.wdim || w.tgt_dim != bt.wdim)
    throw DomainError("chain map block does not match its complexes");
  if (h.shift != w.shift && h.shift != 0 && w.shift != 0) throw DomainError("unexpected map shape");
  for (WedgeMask hm = 0; hm < (WedgeMask(1) << bs.hdim); ++hm)
    for (WedgeMask wm = 0; wm < (WedgeMask(1) << bs.wdim); ++wm) {
      SparseVec& col = m.cols[src.index(sv, hm, wm)];
      for (const auto& [th, a] : h.cols[hm])
        for (const auto& [tw, b] : w.cols[wm]) {
          Rational x = s * a * b;
          if (sgn(x) != 0) col.emplace_back(static_cast<std::uint32_t>(tgt.index(tv, th, tw)), x);
        }
    }
}

void normalize(ChainMap& m) {
  for (auto& col : m.cols) {
    std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseVec merged;
    for (const auto& [i, x] : col) {
      if (!merged.empty() && merged.back().first == i)
        merged.back().second += x;
      else
        merged.emplace_back(i, x);
    }
    std::erase_if(merged, [](const auto& e) { return sgn(e.second) == 0; });
    col = std::move(merged);
  }
}

Chain apply_map(const ChainMap& m, const Chain& x) {
  Chain out;
  for (const auto& [g, a] : x)
    for (const auto& [t, b] : m.cols[g]) out[t] += a * b;
  std::erase_if(out, [](const auto& e) { return sgn(e.second) == 0; });
  return out;
}

Chain unit_chain(std::size_t g) { return Chain{{g, Rational(1)}}; }

bool is_chain_map(const ChainComplex& src, const ChainComplex& tgt, const ChainMap& m) {
  for (std::size_t g = 0; g < src.size(); ++g) {
    for (const auto& [t, x] : m.cols[g])
      if (tgt.grade[t] != src.grade[g]) return false;
    if (apply_map(m, apply_differential(src, unit_chain(g))) !=
        apply_differential(tgt, apply_map(m, unit_chain(g))))
      return false;
  }
  return true;
}

std::map<Grade, std::vector<std::size_t>> by_grade(const ChainComplex& c) {
  std::map<Grade, std::vector<std::size_t>> out;
  for (std::size_t g = 0; g < c.size(); ++g) out[c.grade[g]].push_back(g);
  return out;
}

std::size_t restricted_rank(const ChainMap& m, const std::vector<std::size_t>& src,
                            const std::vector<std::size_t>& tgt) {
  if (src.empty() || tgt.empty()) return 0;
  std::map<std::size_t, std::size_t> row;
  for (std::size_t k = 0; k < tgt.size(); ++k) row[tgt[k]] = k;
  Matrix mat(tgt.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j)
    for (const auto& [t, x] : m.cols[src[j]]) mat(row.at(t), j) = x;
  return rank(mat);
}

}  // namespace

bool les_consistent(const BettiTable& sub, const BettiTable& total, const BettiTable& quotient,
                    const ChainComplex& shape) {
  const int axis = shape.axis, delta = shape.step * shape.denominator;
  std::map<Grade, std::set<int>> lines;
  auto collect = [&](const BettiTable& b) {
    for (const auto& [g, d] : b) {
      Grade key = g;
      key[axis] = 0;
      lines[key].insert(g[axis]);
    }
  };
  collect(sub);
  collect(total);
  collect(quotient);
  auto get = [](const BettiTable& b, const Grade& g) {
    auto it = b.find(g);
    return it == b.end() ? 0L : it->second;
  };
  for (const auto& [key, positions] : lines) {
    std::map<int, long> incoming;  // rank of the connecting map landing at a position
    std::vector<int> order(positions.begin(), positions.end());
    if (delta < 0) std::reverse(order.begin(), order.end());
    for (int p : order) {
      Grade g = key;
      g[axis] = p;
      const long a = get(sub, g), b = get(total, g), c = get(quotient, g);
      const long in = incoming.count(p) ? incoming[p] : 0;
      const long x = a - in;  // rank sub -> total
      const long y = b - x;   // rank total -> quotient
      const long rho = c - y; // rank of the connecting map out of the quotient
      if (x < 0 || x > std::min(a, b) || y < 0 || y > std::min(b, c) || rho < 0 || rho > c) return false;
      Grade next = g;
      next[axis] = p + delta;
      if (rho > get(sub, next)) return false;
      if (rho > 0) incoming[p + delta] = rho;
    }
  }
  return true;
}

SesReport verify_ses(const ShortExactSequence& s, Exec exec) {
  SesReport r;
  r.iota_chain = is_chain_map(s.sub, s.total, s.iota);
  r.pi_chain = is_chain_map(s.total, s.quotient, s.pi);
  if (!r.iota_chain) r.failures.push_back("inclusion is not a chain map");
  if (!r.pi_chain) r.failures.push_back("projection is not a chain map");
  r.composite_zero = true;
  for (std::size_t g = 0; g < s.sub.size(); ++g)
    if (!apply_map(s.pi, apply_map(s.iota, unit_chain(g))).empty()) r.composite_zero = false;
  if (!r.composite_zero) r.failures.push_back("projection after inclusion is nonzero");
  auto ga = by_grade(s.sub), gb = by_grade(s.total), gc = by_grade(s.quotient);
  std::set<Grade> grades;
  for (const auto* m : {&ga, &gb, &gc})
    for (const auto& [g, v] : *m) grades.insert(g);
  r.injective = r.surjective = r.exact_middle = true;
  static const std::vector<std::size_t> none;
  auto pick = [&](const std::map<Grade, std::vector<std::size_t>>& m,
                  const Grade& g) -> const std::vector<std::size_t>& {
    auto it = m.find(g);
    return it == m.end() ? none : it->second;
  };
  for (const auto& g : grades) {
    SesGradeRow row;
    row.grade = g;
    const auto &A = pick(ga, g), &B = pick(gb, g), &C = pick(gc, g);
    row.dim_sub = A.size();
    row.dim_total = B.size();
    row.dim_quotient = C.size();
    row.rank_iota = restricted_rank(s.iota, A, B);
    row.rank_pi = restricted_rank(s.pi, B, C);
    const bool inj = row.rank_iota == A.size(), sur = row.rank_pi == C.size();
    const bool mid = row.rank_iota + row.rank_pi == B.size();
    row.exact = inj && sur && mid && r.composite_zero;
    r.injective = r.injective && inj;
    r.surjective = r.surjective && sur;
    r.exact_middle = r.exact_middle && mid;
    r.rows.push_back(row);
  }
  if (!r.injective) r.failures.push_back("inclusion is not injective");
  if (!r.surjective) r.failures.push_back("projection is not surjective");
  if (!r.exact_middle) r.failures.push_back("kernel of the projection differs from the image");
  r.les_consistent = les_consistent(homology(s.sub, exec), homology(s.total, exec),
                                    homology(s.quotient, exec), s.total);
  if (!r.les_consistent) r.failures.push_back("long exact sequence dimensions are inconsistent");
  return r;
}

SesKind parse_ses_kind(const std::string& s) {
  if (s == "d") return SesKind::d;
  if (s == "partial") return SesKind::partial;
  if (s == "poincare" || s == "poincare-d") return SesKind::poincare_d;
  if (s == "tutte-d") return SesKind::tutte_d;
  if (s == "tutte-partial-1") return SesKind::tutte_partial_1;
  throw DomainError("unknown exact sequence kind: " + s);
}

std::string ses_kind_name(SesKind k) {
  switch (k) {
    case SesKind::d: return "d";
    case SesKind::partial: return "partial";
    case SesKind::poincare_d: return "poincare";
    case SesKind::tutte_d: return "tutte-d";
    case SesKind::tutte_partial_1: return "tutte-partial-1";
  }
  return "?";
}

namespace {

int above_sign(Mask S, std::size_t l) { return std::popcount(S >> (l + 1)) % 2 ? -1 : 1; }

Theory theory_of(SesKind k) {
  switch (k) {
    case SesKind::d: return Theory::d;
    case SesKind::partial: return Theory::partial;
    case SesKind::poincare_d: return Theory::poincare;
    case SesKind::tutte_d: return Theory::tutte_d;
    case SesKind::tutte_partial_1: return Theory::tutte_partial_1;
  }
  throw DomainError("unknown exact sequence kind");
}

}  // namespace

ShortExactSequence deletion_restriction_ses(SesKind kind, const VectorArrangement& a, std::size_t l,
                                            Exec exec) {
  if (l >= a.size()) throw DomainError("index out of range");
  const bool needs_nonzero = kind == SesKind::poincare_d || kind == SesKind::tutte_d ||
                             kind == SesKind::tutte_partial_1;
  if (needs_nonzero && is_zero(a.vectors[l]))
    throw DomainError("this exact sequence requires a nonzero vector at the chosen index");
  const Theory th = theory_of(kind);
  CubeComplex whole = build_complex(a, th, exec);
  CubeComplex res = build_complex(restrict_at(a, l), th, exec);
  CubeComplex del = build_complex(delete_vector(a, l), th, exec);
  const auto& t = *whole.spaces;
  const auto &tr = *res.spaces, &td = *del.spaces;
  const Mask bit = Mask(1) << l;
  const Mask sub_count = Mask(1) << (a.size() - 1);
  ShortExactSequence s;
  s.total = whole.complex;

  // Restriction-side piece sits over S containing l; deletion-side over S without l.
  const bool restriction_is_sub = kind == SesKind::d || kind == SesKind::poincare_d || kind == SesKind::tutte_d;
  if (restriction_is_sub) {
    const int arity = whole.complex.arity;
    Grade shift(arity, 0);
    shift[0] = 1;
    if (kind == SesKind::poincare_d) {
      Grade shift2 = shift;
      shift2[1] = 1;
      s.sub = direct_sum(shifted(res.complex, shift2), shifted(res.complex, shift));
    } else {
      s.sub = shifted(res.complex, shift);
    }
    s.quotient = del.complex;
    s.iota.cols.resize(s.sub.size());
    s.pi.cols.resize(s.total.size());
    for (Mask Sp = 0; Sp < sub_count; ++Sp) {
      const Mask S = expand_mask(Sp, l);
      const Mask T = S | bit;
      const Rational sign = above_sign(S, l);
      switch (kind) {
        case SesKind::d:
          add_block_map(s.iota, s.sub, Sp, s.total, T, induced_projection(tr[Sp].H, t[T].H), no_w(), sign);
          add_block_map(s.pi, s.total, S, s.quotient, Sp, induced_projection(t[S].H, td[Sp].H), no_w(), 1);
          break;
        case SesKind::poincare_d:
          add_block_map(s.iota, s.sub, Sp, s.total, T, wedge_map(a.vectors[l], tr[Sp].V, t[T].V), no_w(),
                        sign);
          add_block_map(s.iota, s.sub, Sp + sub_count, s.total, T, induced_projection(tr[Sp].V, t[T].V),
                        no_w(), sign);
          add_block_map(s.pi, s.total, S, s.quotient, Sp, induced_projection(t[S].V, td[Sp].V), no_w(), 1);
          break;
        default:
          add_block_map(s.iota, s.sub, Sp, s.total, T, induced_projection(tr[Sp].H, t[T].H),
                        induced_projection(tr[Sp].W, t[T].W), sign);
          add_block_map(s.pi, s.total, S, s.quotient, Sp, induced_projection(t[S].H, td[Sp].H),
                        induced_projection(t[S].W, td[Sp].W), 1);
      }
    }
  } else {
    Grade shift(whole.complex.arity, 0);
    shift[0] = 1;
    s.sub = del.complex;
    s.quotient = shifted(res.complex, shift);
    s.iota.cols.resize(s.sub.size());
    s.pi.cols.resize(s.total.size());
    const bool tensor = kind == SesKind::tutte_partial_1;
    for (Mask Sp = 0; Sp < sub_count; ++Sp) {
      const Mask S = expand_mask(Sp, l);
      const Mask T = S | bit;
      add_block_map(s.iota, s.sub, Sp, s.total, S, induced_projection(td[Sp].H, t[S].H),
                    tensor ? induced_projection(td[Sp].W, t[S].W) : no_w(), 1);
      add_block_map(s.pi, s.total, T, s.quotient, Sp, induced_projection(t[T].H, tr[Sp].H),
                    tensor ? induced_projection(t[T].W, tr[Sp].W) : no_w(), 1);
    }
  }
  normalize(s.iota);
  normalize(s.pi);
  return s;
}

namespace {

// Vertex scalars g with g(S+r) = (eps_total / eps_piece) * g(S) along every
// piece edge; nullopt when the ratios do not form a coboundary.
std::optional<std::vector<Rational>> vertex_scalars(const SignedCube& whole, const SignedCube& piece,
                                                    std::size_t l, bool l_in) {
  const std::size_t m = piece.n;
  std::vector<std::optional<Rational>> g(std::size_t(1) << m);
  g[0] = Rational(1);
  std::queue<Mask> todo;
  todo.push(0);
  auto ratio = [&](Mask Sp, std::size_t rp) {
    Mask S = expand_mask(Sp, l);
    if (l_in) S |= Mask(1) << l;
    const std::size_t r = rp >= l ? rp + 1 : rp;
    return whole.eps[whole.edge(S, r)] / piece.eps[piece.edge(Sp, rp)];
  };
  while (!todo.empty()) {
    const Mask v = todo.front();
    todo.pop();
    for (std::size_t r = 0; r < m; ++r) {
      const Mask bit = Mask(1) << r;
      Mask u;
      Rational val;
      if (v & bit) {
        u = v & ~bit;
        val = *g[v] / ratio(u, r);
      } else {
        u = v | bit;
        val = *g[v] * ratio(v, r);
      }
      if (!g[u]) {
        g[u] = val;
        todo.push(u);
      } else if (*g[u] != val) {
        return std::nullopt;
      }
    }
  }
  std::vector<Rational> out;
  for (auto& x : g) out.push_back(*x);
  return out;
}

void transport_scalars(const SignedCube& whole, SignedCube& piece, std::size_t l, bool l_in) {
  for (Mask Sp = 0; Sp < (Mask(1) << piece.n); ++Sp)
    for (std::size_t rp = 0; rp < piece.n; ++rp) {
      if (Sp >> rp & 1u) continue;
      Mask S = expand_mask(Sp, l);
      if (l_in) S |= Mask(1) << l;
      const std::size_t r = rp >= l ? rp + 1 : rp;
      piece.eps[piece.edge(Sp, rp)] = whole.eps[whole.edge(S, r)];
    }
}

}  // namespace

ShortExactSequence kh_ses(const SignedArrangement& a, std::size_t l, Exec exec) {
  if (l >= a.size()) throw DomainError("index out of range");
  if (is_zero(a.base.vectors[l]))
    throw DomainError("the signed exact sequence requires a nonzero vector at the chosen index");
  const bool positive = a.signs[l] == Sign::plus;
  SignedCube whole = build_signed_cube(a, exec);
  solve_edge_scalars(whole);
  // Piece over S containing l, and piece over S without l.
  SignedCube in_piece = build_signed_cube(positive ? restrict_at(a, l) : delete_vector(a, l), exec);
  SignedCube out_piece = build_signed_cube(positive ? delete_vector(a, l) : restrict_at(a, l), exec);
  solve_edge_scalars(in_piece);
  solve_edge_scalars(out_piece);
  ShortExactSequence s;
  auto scalars = [&](SignedCube& piece, bool l_in) {
    auto g = vertex_scalars(whole, piece, l, l_in);
    if (g) return *g;
    transport_scalars(whole, piece, l, l_in);
    s.note += "edge scalars transported; ";
    return std::vector<Rational>(std::size_t(1) << piece.n, Rational(1));
  };
  const auto g_in = scalars(in_piece, true);
  const auto g_out = scalars(out_piece, false);
  s.total = signed_complex(whole, exec);
  s.sub = shifted(signed_complex(in_piece, exec), {1, 1});
  s.quotient = shifted(signed_complex(out_piece, exec), {-1, -1});
  s.iota.cols.resize(s.sub.size());
  s.pi.cols.resize(s.total.size());
  const auto& t = *whole.spaces;
  const auto &ti = *in_piece.spaces, &to = *out_piece.spaces;
  const Mask bit = Mask(1) << l;
  for (Mask Sp = 0; Sp < (Mask(1) << in_piece.n); ++Sp) {
    const Mask S = expand_mask(Sp, l);
    const Mask tw = tilde(a, S | bit), ti_s = tilde(*in_piece.arrangement, Sp);
    add_block_map(s.iota, s.sub, Sp, s.total, S | bit, induced_projection(ti[ti_s].H, t[tw].H),
                  induced_projection(ti[ti_s].W, t[tw].W), g_in[Sp]);
    const Mask tw2 = tilde(a, S), to_s = tilde(*out_piece.arrangement, Sp);
    add_block_map(s.pi, s.total, S, s.quotient, Sp, induced_projection(t[tw2].H, to[to_s].H),
                  induced_projection(t[tw2].W, to[to_s].W), 1 / g_out[Sp]);
  }
  normalize(s.iota);
  normalize(s.pi);
  return s;
}

}  // namespace arrkh
