#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "arrkh/linalg.hpp"

namespace arrkh {

using WedgeMask = std::uint32_t;
using SparseVec = std::vector<std::pair<std::uint32_t, Rational>>;  // sorted by index

// Element of the exterior algebra of a d-dimensional space, basis wedges of the
// space's canonical basis indexed by bitmask.
struct ExteriorElement {
  std::size_t dim = 0;
  std::map<WedgeMask, Rational> terms;

  void add(WedgeMask m, const Rational& c);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const ExteriorElement& o) const { return dim == o.dim && terms == o.terms; }
};

ExteriorElement exterior_unit(std::size_t dim);
ExteriorElement exterior_vector(const Vec& coords);

// Sign of e_a ^ e_b relative to e_{a|b}; 0 when a and b overlap.
int wedge_sign(WedgeMask a, WedgeMask b);

ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y);
// Interior product with a vector given by its pairings <p, b_i> against the basis.
ExteriorElement interior(const Vec& pairings, const ExteriorElement& x);

// Linear map between exterior algebras, one sparse column per source mask.
// shift is the change in exterior degree: 0 induced, +1 wedge, -1 contraction.
struct ExteriorMap {
  std::size_t src_dim = 0, tgt_dim = 0;
  int shift = 0;
  std::vector<SparseVec> cols;

  Matrix block(std::size_t j) const;
  bool is_zero() const;
  ExteriorElement apply(const ExteriorElement& x) const;
  ExteriorMap scaled(const Rational& s) const;
  bool operator==(const ExteriorMap& o) const {
    return src_dim == o.src_dim && tgt_dim == o.tgt_dim && shift == o.shift && cols == o.cols;
  }
};

ExteriorMap exterior_identity(std::size_t dim);
ExteriorMap compose(const ExteriorMap& g, const ExteriorMap& f);  // g after f

// f is tgt_dim x src_dim in the two canonical bases.
ExteriorMap induced_map(const Matrix& f);
// Induced by orthogonal projection src -> tgt (an inclusion when src is inside tgt).
ExteriorMap induced_projection(const Subspace& src, const Subspace& tgt);
// x -> p ^ x with p the projection of v into tgt; src must lie inside tgt.
ExteriorMap wedge_map(const Vec& v, const Subspace& src, const Subspace& tgt);
// x -> interior product with the projection of v into src, rewritten in tgt;
// tgt must lie inside src and the image must land in the exterior algebra of tgt.
ExteriorMap contraction_map(const Vec& v, const Subspace& src, const Subspace& tgt);

// Element of the exterior algebra of `from` carried into `to` by the induced
// orthogonal projection (inclusion when from is inside to).
ExteriorElement carry(const ExteriorElement& x, const Subspace& from, const Subspace& to);

}  // namespace arrkh
