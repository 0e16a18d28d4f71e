#include "arrkh/suites.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

namespace arrkh {

void SuiteReport::expect(bool cond, const std::string& what) {
  ++checks;
  if (!cond) failures.push_back(what);
}

void SuiteReport::merge(const SuiteReport& other) {
  for (const auto& t : other.tested) tested.push_back(other.suite + ":" + t);
  for (const auto& f : other.failures) failures.push_back(other.suite + ": " + f);
  checks += other.checks;
}

namespace {

const std::vector<std::string> kVars1{"q"};
const std::vector<std::string> kVars2{"x", "y"};

std::string describe(const std::string& name, const MoveDescriptor& mv) {
  std::string s = name + " " + move_name(mv.kind) + "(" + std::to_string(mv.l + 1) + "," + std::to_string(mv.m + 1);
  if (mv.kind == MoveKind::R3 || mv.kind == MoveKind::R3_dual) s += "," + std::to_string(mv.p + 1);
  return s + ")";
}

void finish(SuiteReport& r, const std::string& good) {
  r.message = r.ok() ? good : std::to_string(r.failures.size()) + " of " + std::to_string(r.checks) + " checks failed";
}

std::vector<Named<VectorArrangement>> corpus_for(const SuiteOptions& opt) {
  return unsigned_corpus(opt.seed, 200, opt.max_n, 3);
}

std::vector<Named<SignedArrangement>> signed_for(const SuiteOptions& opt) {
  return signed_corpus(opt.seed, 50, opt.max_n, 3);
}

// Image of every generator under a block-preserving permutation of the tensor factors.
using GenMap = std::function<std::size_t(std::size_t)>;

std::optional<std::string> swap_commutes(const ChainComplex& src, const ChainComplex& tgt, const GenMap& f) {
  if (src.size() != tgt.size()) return "generator counts differ";
  for (std::size_t g = 0; g < src.size(); ++g) {
    Chain lhs;
    for (const auto& [i, c] : src.diff[g]) lhs[f(i)] += c;
    Chain rhs;
    for (const auto& [i, c] : tgt.diff[f(g)]) rhs[i] += c;
    std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
    if (lhs != rhs) return "swap does not commute with the differentials at generator " + std::to_string(g);
  }
  return std::nullopt;
}

std::size_t swapped_index(const ChainComplex& src, const ChainComplex& tgt, std::size_t g, Mask target_block) {
  const std::size_t v = src.block_of(g);
  const Block& b = src.blocks[v];
  const std::size_t local = g - b.offset;
  const WedgeMask h = static_cast<WedgeMask>(local >> b.wdim);
  const WedgeMask w = static_cast<WedgeMask>(local & ((std::size_t(1) << b.wdim) - 1));
  return tgt.index(target_block, w, h);
}

// nullopt when the cube admits no anticommuting edge scalars.
std::optional<BettiTable> kh_if_defined(const SignedArrangement& a, Exec exec) {
  try {
    return kh_homology(a, exec);
  } catch (const NoEdgeScalars&) {
    return std::nullopt;
  }
}

std::string obstructed_note(std::size_t k) {
  return k == 0 ? "" : " (" + std::to_string(k) + " arrangements without edge scalars skipped)";
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"euler", "ses", "reidemeister", "gale", "jones", "all"};
  return names;
}

LaurentPoly tutte_partial_1_expected(const VectorArrangement& a, Exec exec) {
  const LaurentPoly t = tutte_hat(a, exec);
  const LaurentPoly x = LaurentPoly::monomial(kVars2, {2, 0});
  const LaurentPoly one = LaurentPoly::constant(kVars2, 1);
  const LaurentPoly y = LaurentPoly::monomial(kVars2, {0, 2});
  const LaurentPoly inv = LaurentPoly::monomial(kVars2, {-2, 0}, -1);
  const LaurentPoly sub = t.substitute({inv, one * GaussInt(-1) - x - x * y});
  const long k = static_cast<long>(a.dim());
  return sub * LaurentPoly::monomial(kVars2, {static_cast<int>(2 * k), 0}, k % 2 ? -1 : 1);
}

bool tutte_gale_swap_holds(const VectorArrangement& a, Exec exec) {
  const LaurentPoly x = LaurentPoly::monomial(kVars2, {2, 0});
  const LaurentPoly y = LaurentPoly::monomial(kVars2, {0, 2});
  const LaurentPoly one = LaurentPoly::constant(kVars2, 1);
  const auto ranks = subset_ranks(a, exec);
  const unsigned corank = static_cast<unsigned>(a.dim() - static_cast<std::size_t>(ranks.back()));
  const LaurentPoly lhs = tutte_hat(gale_dual(a), exec) * (one + y).pow(corank);
  const LaurentPoly rhs = tutte_hat(a, exec).substitute({y, x}) * GaussInt(a.size() % 2 ? -1 : 1);
  return lhs == rhs;
}

std::optional<std::string> tutte_swap_failure(const VectorArrangement& a, Exec exec) {
  const VectorArrangement d = gale_dual(a);
  const CubeComplex c1 = build_tutte_partial(a, 1, exec);
  const CubeComplex c3 = build_tutte_partial(d, 3, exec);
  const Mask full = a.full_mask();
  for (Mask S = 0; S <= full; ++S) {
    if (!((*c1.spaces)[S].H == (*c3.spaces)[full & ~S].W) || !((*c1.spaces)[S].W == (*c3.spaces)[full & ~S].H))
      return "space tables do not match at S=" + std::to_string(S);
    if (S == full) break;
  }
  const auto& src = c1.complex;
  const auto& tgt = c3.complex;
  const int n = static_cast<int>(a.size());
  auto f = [&](std::size_t g) { return swapped_index(src, tgt, g, full & ~src.blocks[src.block_of(g)].S); };
  for (std::size_t g = 0; g < src.size(); ++g) {
    const Grade& s = src.grade[g];
    if (tgt.grade[f(g)] != Grade{n - s[0], s[2], s[1]}) return "grading not carried at generator " + std::to_string(g);
  }
  return swap_commutes(src, tgt, f);
}

std::optional<std::string> signed_swap_failure(const SignedArrangement& v, Exec exec) {
  const SignedArrangement vd = gale_dual(v);
  SignedCube cube = build_signed_cube(v, exec);
  solve_edge_scalars(cube);
  SignedCube dual = build_signed_cube(vd, exec);
  static const int exchange[] = {0, 3, 4, 1, 2};
  for (std::size_t e = 0; e < cube.type.size(); ++e)
    if (cube.type[e] != 0 && dual.type[e] != exchange[cube.type[e]])
      return "edge types not exchanged at edge " + std::to_string(e);
  const Mask full = v.base.full_mask();
  for (Mask S = 0;; ++S) {
    const auto& a = (*cube.spaces)[tilde(v, S)];
    const auto& b = (*dual.spaces)[tilde(vd, S)];
    if (!(a.H == b.W) || !(a.W == b.H)) return "space tables do not match at S=" + std::to_string(S);
    if (S == full) break;
  }
  dual.eps = cube.eps;
  if (!faces_anticommute(dual)) return "transported edge scalars do not anticommute";
  const ChainComplex src = signed_complex(cube, exec);
  const ChainComplex tgt = signed_complex(dual, exec);
  auto f = [&](std::size_t g) { return swapped_index(src, tgt, g, src.blocks[src.block_of(g)].S); };
  for (std::size_t g = 0; g < src.size(); ++g)
    if (tgt.grade[f(g)] != src.grade[g]) return "grading not preserved at generator " + std::to_string(g);
  return swap_commutes(src, tgt, f);
}

std::optional<std::string> circle_identity_failure(const PlanarDiagram& d, int shading, Exec exec) {
  const SignedArrangement v = link_arrangement(d, shading);
  const SpaceTable t(v.base, exec);
  const auto circles = all_smoothing_circles(d, exec);
  for (Mask S = 0; S < circles.size(); ++S) {
    const auto& sp = t[tilde(v, S)];
    if (circles[S] - 1 != sp.H.dim() + sp.W.dim())
      return "circle count mismatch at S=" + std::to_string(S) + " shading " + std::to_string(shading);
  }
  return std::nullopt;
}

std::vector<long> component_framings(const PlanarDiagram& d) {
  std::map<long, long> parent;
  std::function<long(long)> find = [&](long x) {
    auto it = parent.find(x);
    if (it == parent.end() || it->second == x) return parent[x] = x;
    return it->second = find(it->second);
  };
  for (const auto& x : d.crossings) {
    parent[find(x[0])] = find(x[2]);
    parent[find(x[1])] = find(x[3]);
  }
  const auto signs = crossing_signs(d);
  std::map<long, long> framing;
  for (const auto& x : d.crossings) framing[find(x[0])], framing[find(x[1])];
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const auto& x = d.crossings[c];
    if (find(x[0]) == find(x[1])) framing[find(x[0])] += signs[c];
  }
  std::vector<long> out;
  for (const auto& [root, f] : framing) out.push_back(f);
  out.insert(out.end(), d.free_loops, 0);
  std::sort(out.begin(), out.end());
  return out;
}

SuiteReport euler_suite(const SuiteOptions& opt) {
  SuiteReport r;
  r.suite = "euler";
  for (const auto& [name, a] : corpus_for(opt)) {
    r.tested.push_back(name);
    const std::pair<Theory, LaurentPoly> expected[] = {
        {Theory::d, char_poly(a, opt.exec)},
        {Theory::partial, char_poly_bar(a, opt.exec)},
        {Theory::poincare, poincare_poly(a, opt.exec)},
        {Theory::tutte_d, tutte_hat(a, opt.exec)},
        {Theory::tutte_partial_1, tutte_partial_1_expected(a, opt.exec)},
    };
    for (const auto& [t, want] : expected) {
      const CubeComplex cc = build_complex(a, t, opt.exec);
      const auto& vars = want.vars();
      const LaurentPoly chi = euler_characteristic(homology(cc.complex, opt.exec), cc.complex, vars);
      r.expect(chi == want, name + " " + theory_name(t) + ": homology chi " + chi.str() + " != " + want.str());
      r.expect(chain_euler_characteristic(cc.complex, vars) == want, name + " " + theory_name(t) + ": chain chi");
    }
    for (Theory t : {Theory::tutte_partial_2, Theory::tutte_partial_3, Theory::tutte_partial_4}) {
      const CubeComplex cc = build_complex(a, t, opt.exec);
      r.expect(euler_characteristic(homology(cc.complex, opt.exec), cc.complex, kVars2) ==
                   chain_euler_characteristic(cc.complex, kVars2),
               name + " " + theory_name(t) + ": homology chi differs from chain chi");
    }
  }
  std::size_t obstructed = 0;
  for (const auto& [name, a] : signed_for(opt)) {
    r.tested.push_back(name);
    const auto kh = kh_if_defined(a, opt.exec);
    if (!kh) {
      ++obstructed;
      continue;
    }
    const LaurentPoly chi = kh_euler(*kh);
    const LaurentPoly want = framed_jones(a, opt.exec);
    r.expect(chi == want, name + " kh: chi " + chi.str() + " != framed Jones " + want.str());
  }
  finish(r, "all Euler identities hold" + obstructed_note(obstructed));
  return r;
}

SuiteReport ses_suite(const SuiteOptions& opt) {
  SuiteReport r;
  r.suite = "ses";
  std::size_t skipped = 0, obstructed = 0;
  auto run = [&](const std::string& what, const ShortExactSequence& ses) {
    const SesReport rep = verify_ses(ses, opt.exec);
    std::string why;
    for (const auto& f : rep.failures) why += "; " + f;
    r.expect(rep.ok(), what + " not exact" + why);
  };
  for (const auto& [name, a] : corpus_for(opt)) {
    if (a.size() == 0) continue;
    r.tested.push_back(name);
    for (std::size_t l = 0; l < a.size(); ++l) {
      const bool zero = is_zero(a.vectors[l]);
      for (SesKind k : {SesKind::d, SesKind::partial, SesKind::poincare_d, SesKind::tutte_d, SesKind::tutte_partial_1}) {
        if (zero && (k == SesKind::poincare_d || k == SesKind::tutte_d || k == SesKind::tutte_partial_1)) {
          ++skipped;
          continue;
        }
        run(name + " " + ses_kind_name(k) + " l=" + std::to_string(l + 1), deletion_restriction_ses(k, a, l, opt.exec));
      }
      if (zero) {
        skipped += 2;
        continue;
      }
      for (Sign s : {Sign::plus, Sign::minus}) {
        SignedArrangement sa{a, std::vector<Sign>(a.size(), Sign::plus)};
        for (std::size_t i = 0; i < a.size(); ++i) sa.signs[i] = (i + l) % 2 ? Sign::minus : Sign::plus;
        sa.signs[l] = s;
        try {
          run(name + " kh l=" + std::to_string(l + 1) + sign_char(s), kh_ses(sa, l, opt.exec));
        } catch (const NoEdgeScalars&) {
          ++obstructed;
        }
      }
    }
  }
  finish(r, "all short exact sequences are exact (" + std::to_string(skipped) + " zero-vector cases skipped)" +
                obstructed_note(obstructed));
  return r;
}

SuiteReport reidemeister_suite(const SuiteOptions& opt) {
  SuiteReport r;
  r.suite = "reidemeister";
  std::map<MoveKind, std::size_t> seen;
  std::size_t obstructed = 0;
  auto check = [&](const std::string& name, const SignedArrangement& a, const MoveDescriptor& mv,
                   const std::optional<BettiTable>& before, const LaurentPoly& jones_before) {
    const std::string what = describe(name, mv);
    r.tested.push_back(what);
    if (auto bad = move_violation(a, mv)) {
      r.expect(false, what + ": " + *bad);
      return;
    }
    ++seen[mv.kind];
    const SignedArrangement b = apply_move(a, mv);
    r.expect(framed_jones(b, opt.exec) == jones_before, what + ": framed Jones changed");
    const auto after = kh_if_defined(b, opt.exec);
    if (!before || !after) {
      ++obstructed;
      return;
    }
    r.expect(*after == *before, what + ": kh Betti table changed");
  };
  for (const auto& [name, a] : signed_for(opt)) {
    const auto moves = find_moves(a);
    if (moves.empty()) continue;
    const auto before = kh_if_defined(a, opt.exec);
    const LaurentPoly jones = framed_jones(a, opt.exec);
    for (const auto& mv : moves) check(name, a, mv, before, jones);
  }
  for (const auto& inst : move_instances())
    check(inst.name, inst.arrangement, inst.move, kh_if_defined(inst.arrangement, opt.exec),
          framed_jones(inst.arrangement, opt.exec));
  for (MoveKind k : {MoveKind::wR1, MoveKind::wR1_dual, MoveKind::R2, MoveKind::R2_dual, MoveKind::R3, MoveKind::R3_dual})
    r.expect(seen[k] > 0, "no instance of move " + move_name(k));
  finish(r, "every move preserves kh Betti tables and framed Jones" + obstructed_note(obstructed));
  return r;
}

SuiteReport gale_suite(const SuiteOptions& opt) {
  SuiteReport r;
  r.suite = "gale";
  for (const auto& [name, a] : corpus_for(opt)) {
    r.tested.push_back(name);
    r.expect(tutte_gale_swap_holds(a, opt.exec), name + ": Tutte variable swap fails");
    const VectorArrangement d = gale_dual(a);
    if (auto bad = tutte_swap_failure(d, opt.exec)) r.expect(false, name + ": " + *bad);
    else r.expect(true, "");
    const int n = static_cast<int>(a.size());
    BettiTable moved;
    for (const auto& [g, c] : theory_homology(d, Theory::tutte_partial_1, opt.exec)) moved[{n - g[0], g[2], g[1]}] = c;
    r.expect(moved == theory_homology(gale_dual(d), Theory::tutte_partial_3, opt.exec),
             name + ": d1 and d3 Betti tables do not correspond");
  }
  std::size_t obstructed = 0, spanless = 0;
  for (const auto& [name, v] : signed_for(opt)) {
    r.tested.push_back(name);
    const SignedArrangement d = gale_dual(v);
    const auto kv = kh_if_defined(v, opt.exec), kd = kh_if_defined(d, opt.exec);
    r.expect(kv.has_value() == kd.has_value(), name + ": edge scalars exist for only one of the pair");
    if (!kv || !kd) {
      ++obstructed;
      continue;
    }
    if (auto bad = signed_swap_failure(d, opt.exec)) r.expect(false, name + ": " + *bad);
    else r.expect(true, "");
    // The dual only sees the span of the vectors, so compare against the double dual
    // when the vectors do not span the ambient space.
    if (static_cast<std::size_t>(subset_ranks(v.base, opt.exec).back()) == v.base.dim()) {
      r.expect(*kv == *kd, name + ": kh differs from its Gale dual");
    } else {
      ++spanless;
      r.expect(kh_if_defined(gale_dual(d), opt.exec) == kd, name + ": kh of the dual differs from the double dual");
    }
  }
  finish(r, "all Gale duality checks hold (" + std::to_string(spanless) + " non-spanning arrangements compared with their double duals)" + obstructed_note(obstructed));
  return r;
}

SuiteReport framing_transfer_check(Exec exec) {
  SuiteReport r;
  r.suite = "framing";
  const PlanarDiagram hopf = parse_pd("X 1 3 2 4\nX 3 1 4 2");
  // Arc 1 runs along one component and arc 3 along the other.
  const PlanarDiagram d02 = add_kink(add_kink(hopf, 3, 1), 3, 1);
  const PlanarDiagram d11 = add_kink(add_kink(hopf, 1, 1), 3, 1);
  const PlanarDiagram bridge = add_kink(add_kink(d02, 1, 1), 3, -1);
  r.tested = {"(0,2): " + format_pd(d02), "(1,1): " + format_pd(d11), "bridge: " + format_pd(bridge)};
  r.expect(component_framings(d02) == std::vector<long>{0, 2}, "first diagram framings are not (0,2)");
  r.expect(component_framings(d11) == std::vector<long>{1, 1}, "second diagram framings are not (1,1)");
  auto is_r1 = [](MoveKind k) { return k == MoveKind::wR1 || k == MoveKind::wR1_dual; };
  for (int s = 0; s < 2; ++s) {
    const std::string tag = " (shading " + std::to_string(s) + ")";
    const SignedArrangement v02 = link_arrangement(d02, s), v11 = link_arrangement(d11, s);
    const SignedArrangement vb = link_arrangement(bridge, s);
    // Crossings 4 and 5 of the bridge are the new kinks; crossing 3 is a kink of d02.
    std::optional<MoveDescriptor> back, across;
    for (const auto& mv : find_moves(vb)) {
      if (!is_r1(mv.kind)) continue;
      const std::size_t lo = std::min(mv.l, mv.m), hi = std::max(mv.l, mv.m);
      if (lo == 4 && hi == 5) back = mv;
      if (lo == 3 && hi == 5) across = mv;
    }
    r.expect(back.has_value(), "no wR1 move removes the added kink pair" + tag);
    r.expect(across.has_value(), "no wR1 move cancels the opposite kinks" + tag);
    if (back) {
      const SignedArrangement w = apply_move(vb, *back);
      r.expect(matroid_data(w.base) == matroid_data(v02.base) && w.signs == v02.signs,
               "removing the added pair does not return the (0,2) arrangement" + tag);
    }
    if (across) {
      const SignedArrangement w = permute(apply_move(vb, *across), {0, 1, 3, 2});
      r.expect(matroid_data(w.base) == matroid_data(v11.base) && w.signs == v11.signs,
               "cancelling the opposite kinks does not give the (1,1) arrangement" + tag);
    }
    const BettiTable kh = kh_homology(v02, exec);
    r.expect(kh == kh_homology(v11, exec), "kh differs between (0,2) and (1,1)" + tag);
    r.expect(kh == kh_homology(vb, exec), "kh differs on the bridging diagram" + tag);
  }
  finish(r, "framing transfer preserves kh");
  return r;
}

SuiteReport jones_suite(const SuiteOptions& opt) {
  SuiteReport r;
  r.suite = "jones";
  for (const auto& [name, d] : diagram_corpus()) {
    r.tested.push_back(name);
    const LaurentPoly framed = jones_diagram(d, opt.exec) * framing_factor(writhe(d));
    BettiTable kh[2];
    for (int s = 0; s < 2; ++s) {
      const std::string tag = name + " shading " + std::to_string(s);
      if (auto bad = circle_identity_failure(d, s, opt.exec)) r.expect(false, tag + ": " + *bad);
      else r.expect(true, "");
      const SignedArrangement v = link_arrangement(d, s);
      r.expect(framed_jones(v, opt.exec) == framed, tag + ": Jones identity fails");
      SignedCube cube = build_signed_cube(v, opt.exec);
      bool unit_scalars = true;
      for (Mask S = 0; S < (Mask(1) << v.size()); ++S)
        for (std::size_t a = 0; a < v.size(); ++a)
          for (std::size_t b = a + 1; b < v.size(); ++b) {
            if ((S >> a & 1u) || (S >> b & 1u)) continue;
            const auto alpha = face_scalar(cube, S, a, b);
            if (alpha && *alpha != 1 && *alpha != -1) unit_scalars = false;
          }
      r.expect(unit_scalars, tag + ": face scalar other than +-1");
      kh[s] = kh_homology(v, opt.exec);
    }
    r.expect(kh[0] == kh[1], name + ": kh differs between shadings");
    if (name == "unknot") r.expect(kh[0] == BettiTable{{{0, 0}, 1}}, "unknot kh is not one class at (0,0)");
    if (name == "positive kink")
      r.expect(kh[0] == BettiTable{{{-1, -3}, 1}}, "positive kink kh is not one class at (-1/2,-3/2)");
  }
  const LaurentPoly q = LaurentPoly::monomial(kVars1, {2});
  const LaurentPoly loop = q + LaurentPoly::monomial(kVars1, {-2});
  r.expect(jones_diagram(parse_pd("O 2"), opt.exec) == jones_diagram(parse_pd("O 1"), opt.exec) * loop,
           "Jones of a split unknot pair is not (q+1/q) times the unknot's");
  r.merge(framing_transfer_check(opt.exec));
  finish(r, "all diagram identities hold");
  return r;
}

SuiteReport dg_suite(const SuiteOptions& opt, std::size_t draws) {
  SuiteReport r;
  r.suite = "dg";
  std::vector<Named<VectorArrangement>> pool;
  for (auto& e : corpus_for(opt))
    if (e.value.size() >= 1 && e.value.size() <= 4) pool.push_back(std::move(e));
  CorpusRng rng(opt.seed ^ 0xd9ULL);
  const std::pair<Theory, ProductKind> kinds[] = {
      {Theory::partial, ProductKind::char_partial},
      {Theory::tutte_partial_1, ProductKind::tutte_partial_1},
      {Theory::tutte_partial_2, ProductKind::tutte_partial_2},
      {Theory::tutte_partial_3, ProductKind::tutte_partial_3},
      {Theory::tutte_partial_4, ProductKind::tutte_partial_4},
  };
  for (const auto& [theory, kind] : kinds) {
    for (std::size_t draw = 0; draw < draws; ++draw) {
      const auto& [name, a] = pool[rng.below(pool.size())];
      const CubeComplex cc = build_complex(a, theory, opt.exec);
      const ChainComplex& c = cc.complex;
      auto element = [&]() {
        const std::size_t v = rng.below(c.blocks.size());
        const Block& b = c.blocks[v];
        const std::size_t i = rng.below(b.hdim + 1), j = rng.below(b.wdim + 1);
        Chain x;
        for (unsigned h : masks_of_weight(static_cast<unsigned>(b.hdim), static_cast<unsigned>(i)))
          for (unsigned w : masks_of_weight(static_cast<unsigned>(b.wdim), static_cast<unsigned>(j))) {
            const long coef = rng.between(-2, 2);
            if (coef != 0) x[c.index(v, h, w)] = coef;
          }
        if (x.empty()) x[c.index(v, 0, 0)] = 1;
        return x;
      };
      const Chain x = element(), y = element(), z = element();
      const std::string tag = theory_name(theory) + " draw " + std::to_string(draw) + " on " + name;
      r.tested.push_back(tag);
      auto m = [&](const Chain& p, const Chain& s) { return dg_multiply(cc, kind, p, s); };
      auto d = [&](const Chain& p) { return apply_differential(c, p); };
      const int deg = leibniz_degree(cc, kind, x.begin()->first);
      r.expect(d(m(x, y)) == chain_add(m(d(x), y), m(x, d(y)), deg % 2 ? -1 : 1), tag + ": Leibniz rule fails");
      r.expect(m(m(x, y), z) == m(x, m(y, z)), tag + ": product not associative");
      const bool top = kind == ProductKind::tutte_partial_3 || kind == ProductKind::tutte_partial_4;
      const Chain one{{c.index(top ? c.blocks.size() - 1 : 0, 0, 0), Rational(1)}};
      r.expect(m(one, x) == x && m(x, one) == x, tag + ": unit fails");
    }
  }
  finish(r, "Leibniz, associativity and unit hold");
  return r;
}

SuiteReport cube_suite(const SuiteOptions& opt) {
  SuiteReport r;
  r.suite = "cube";
  std::vector<Named<SignedArrangement>> all = signed_for(opt);
  for (const auto& [name, a] : corpus_for(opt)) {
    SignedArrangement sa{a, {}};
    for (std::size_t i = 0; i < a.size(); ++i) sa.signs.push_back(i % 2 ? Sign::minus : Sign::plus);
    all.push_back({name, sa});
  }
  std::size_t obstructed = 0;
  for (const auto& [name, a] : all) {
    r.tested.push_back(name);
    SignedCube cube = build_signed_cube(a, opt.exec);
    try {
      solve_edge_scalars(cube);
    } catch (const NoEdgeScalars&) {
      // Only the alternating-sign extension may be obstructed.
      r.expect(name[0] == 'u', name + ": no edge scalars exist");
      ++obstructed;
      continue;
    } catch (const DomainError& e) {
      r.expect(false, name + ": edge scalar solver failed: " + e.what());
      continue;
    }
    r.expect(faces_anticommute(cube), name + ": faces do not anticommute");
    const ChainComplex c = signed_complex(cube, opt.exec);
    r.expect(squares_to_zero(c, opt.exec), name + ": signed differential does not square to zero");
    std::vector<std::size_t> order(a.size());
    std::iota(order.begin(), order.end(), std::size_t(0));
    std::reverse(order.begin(), order.end());
    if (a.size() > 2) std::rotate(order.begin(), order.begin() + 1, order.end());
    r.expect(homology(c, opt.exec) == kh_homology(a, order, opt.exec), name + ": Betti table depends on the solve order");
  }
  finish(r, "every signed cube is sound" + obstructed_note(obstructed));
  return r;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "euler") return euler_suite(opt);
  if (name == "ses") return ses_suite(opt);
  if (name == "reidemeister") return reidemeister_suite(opt);
  if (name == "gale") return gale_suite(opt);
  if (name == "jones") return jones_suite(opt);
  if (name == "dg") return dg_suite(opt);
  if (name == "cube") return cube_suite(opt);
  if (name == "all") {
    SuiteReport r;
    r.suite = "all";
    for (const char* s : {"euler", "ses", "reidemeister", "gale", "jones", "dg", "cube"}) r.merge(run_suite(s, opt));
    finish(r, "all suites pass");
    return r;
  }
  throw DomainError("unknown suite: " + name);
}

}  // namespace arrkh
