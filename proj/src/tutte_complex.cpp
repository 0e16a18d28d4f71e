#include <bit>
#include <map>

#include "arrkh/complex.hpp"

namespace arrkh {

namespace {

CubeComplex tutte_context(const VectorArrangement& a, Theory t, Exec exec) {
  CubeComplex cc;
  cc.theory = t;
  auto arr = std::make_shared<const VectorArrangement>(a);
  cc.arrangement = arr;
  cc.spaces = std::make_shared<const SpaceTable>(*arr, exec);
  return cc;
}

std::vector<Block> tensor_blocks(const CubeComplex& cc) {
  const auto& t = *cc.spaces;
  std::vector<Block> blocks(std::size_t(1) << cc.arrangement->size());
  for (Mask S = 0; S < blocks.size(); ++S) blocks[S] = {S, t[S].H.dim(), t[S].W.dim(), 0};
  return blocks;
}

}  // namespace

CubeComplex build_tutte_d(const VectorArrangement& a, Exec exec) {
  CubeComplex cc = tutte_context(a, Theory::tutte_d, exec);
  const auto& t = *cc.spaces;
  const std::size_t n = a.size();
  auto edges = [&](std::size_t v) {
    std::vector<CubeEdge> es;
    Mask S = static_cast<Mask>(v);
    for (std::size_t r = 0; r < n; ++r) {
      if (S >> r & 1u) continue;
      Mask T = S | (Mask(1) << r);
      es.push_back({S, T, induced_projection(t[S].H, t[T].H), induced_projection(t[S].W, t[T].W),
                    edge_sign(S, r)});
    }
    return es;
  };
  auto grade = [](const Block& b, int i, int j) { return Grade{std::popcount(b.S), i, j}; };
  cc.complex = assemble(tensor_blocks(cc), grade, edges, 3, 1, 0, 1, exec);
  return cc;
}

CubeComplex build_tutte_partial(const VectorArrangement& a, int variant, Exec exec) {
  if (variant < 1 || variant > 4) throw DomainError("Tutte boundary variant must be 1..4");
  static const Theory kinds[] = {Theory::tutte_partial_1, Theory::tutte_partial_2,
                                 Theory::tutte_partial_3, Theory::tutte_partial_4};
  CubeComplex cc = tutte_context(a, kinds[variant - 1], exec);
  const auto& t = *cc.spaces;
  const std::size_t n = a.size();
  auto edges = [&, variant](std::size_t v) {
    std::vector<CubeEdge> es;
    Mask S = static_cast<Mask>(v);
    for (std::size_t r = 0; r < n; ++r) {
      const bool in = S >> r & 1u;
      const Mask bit = Mask(1) << r;
      switch (variant) {
        case 1:
          if (in)
            es.push_back({S, S & ~bit, wedge_map(a.vectors[r], t[S].H, t[S & ~bit].H),
                          induced_projection(t[S].W, t[S & ~bit].W), 1});
          break;
        case 2:
          if (in)
            es.push_back({S, S & ~bit, induced_projection(t[S].H, t[S & ~bit].H),
                          contraction_map(t.functional(r), t[S].W, t[S & ~bit].W), 1});
          break;
        case 3:
          if (!in)
            es.push_back({S, S | bit, induced_projection(t[S].H, t[S | bit].H),
                          wedge_map(t.functional(r), t[S].W, t[S | bit].W), 1});
          break;
        default:
          if (!in)
            es.push_back({S, S | bit, contraction_map(a.vectors[r], t[S].H, t[S | bit].H),
                          induced_projection(t[S].W, t[S | bit].W), 1});
      }
    }
    return es;
  };
  GradeFn grade;
  int axis = 1, step = 1;
  if (variant == 1 || variant == 4) {
    grade = [](const Block& b, int i, int j) { return Grade{std::popcount(b.S) + i, i, j}; };
    axis = 1;
    step = variant == 1 ? 1 : -1;
  } else {
    grade = [](const Block& b, int i, int j) { return Grade{std::popcount(b.S) - j, i, j}; };
    axis = 2;
    step = variant == 3 ? 1 : -1;
  }
  cc.complex = assemble(tensor_blocks(cc), grade, edges, 3, 1, axis, step, exec);
  return cc;
}

ProductKind product_kind_for(Theory t) {
  switch (t) {
    case Theory::partial: return ProductKind::char_partial;
    case Theory::tutte_partial_1: return ProductKind::tutte_partial_1;
    case Theory::tutte_partial_2: return ProductKind::tutte_partial_2;
    case Theory::tutte_partial_3: return ProductKind::tutte_partial_3;
    case Theory::tutte_partial_4: return ProductKind::tutte_partial_4;
    default: throw DomainError("theory " + theory_name(t) + " carries no product");
  }
}

int leibniz_degree(const CubeComplex& cc, ProductKind kind, std::size_t gen) {
  const auto& c = cc.complex;
  const Block& b = c.blocks[c.block_of(gen)];
  const std::size_t local = gen - b.offset;
  const WedgeMask h = static_cast<WedgeMask>(local >> b.wdim);
  const WedgeMask w = static_cast<WedgeMask>(local & ((std::size_t(1) << b.wdim) - 1));
  if (kind == ProductKind::tutte_partial_2 || kind == ProductKind::tutte_partial_3)
    return std::popcount(w);
  return std::popcount(h);
}

Chain dg_multiply(const CubeComplex& cc, ProductKind kind, const Chain& x, const Chain& y) {
  if (product_kind_for(cc.theory) != kind) throw DomainError("product does not match complex");
  const auto& c = cc.complex;
  const auto& t = *cc.spaces;
  const Mask full = cc.arrangement->full_mask();
  const bool intersecting = kind == ProductKind::tutte_partial_3 || kind == ProductKind::tutte_partial_4;
  std::map<std::pair<Mask, Mask>, std::pair<ExteriorMap, ExteriorMap>> carriers;
  auto carrier = [&](Mask from, Mask to) -> const std::pair<ExteriorMap, ExteriorMap>& {
    auto it = carriers.find({from, to});
    if (it == carriers.end())
      it = carriers
               .emplace(std::make_pair(from, to),
                        std::make_pair(induced_projection(t[from].H, t[to].H),
                                       induced_projection(t[from].W, t[to].W)))
               .first;
    return it->second;
  };
  Chain out;
  for (const auto& [gx, ax] : x)
    for (const auto& [gy, ay] : y) {
      const std::size_t vx = c.block_of(gx), vy = c.block_of(gy);
      const Block &bx = c.blocks[vx], &by = c.blocks[vy];
      Mask U;
      if (intersecting) {
        if ((bx.S | by.S) != full) continue;
        U = bx.S & by.S;
      } else {
        if (bx.S & by.S) continue;
        U = bx.S | by.S;
      }
      const std::size_t lx = gx - bx.offset, ly = gy - by.offset;
      const auto& cx = carrier(bx.S, U);
      const auto& cy = carrier(by.S, U);
      const std::size_t hd = t[U].H.dim(), wd = t[U].W.dim();
      ExteriorElement h1{hd, {}}, h2{hd, {}}, w1{wd, {}}, w2{wd, {}};
      for (const auto& [m, v] : cx.first.cols[lx >> bx.wdim]) h1.add(m, v);
      for (const auto& [m, v] : cy.first.cols[ly >> by.wdim]) h2.add(m, v);
      for (const auto& [m, v] : cx.second.cols[lx & ((std::size_t(1) << bx.wdim) - 1)]) w1.add(m, v);
      for (const auto& [m, v] : cy.second.cols[ly & ((std::size_t(1) << by.wdim) - 1)]) w2.add(m, v);
      ExteriorElement hw = wedge(h1, h2);
      ExteriorElement ww = kind == ProductKind::char_partial ? exterior_unit(0) : wedge(w1, w2);
      Chain term = chain_from(c, U, hw, ww);
      out = chain_add(out, term, ax * ay);
    }
  return out;
}

}  // namespace arrkh
