#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "arrkh/arrangement.hpp"
#include "arrkh/exterior.hpp"
#include "arrkh/poly.hpp"

namespace arrkh {

using Grade = std::vector<int>;
using BettiTable = std::map<Grade, long>;
using Chain = std::map<std::size_t, Rational>;

// One cube vertex: exterior algebra of an H-type space tensored with an
// exterior algebra of a W-type space (wdim = 0 for single-factor complexes).
struct Block {
  Mask S = 0;
  std::size_t hdim = 0, wdim = 0, offset = 0;
  std::size_t size() const { return std::size_t(1) << (hdim + wdim); }
};

struct ChainComplex {
  int arity = 2;
  int denominator = 1;  // 2 when grades are stored doubled
  int axis = 0;         // component moved by the differential
  int step = 1;         // +1 or -1 along axis
  std::vector<Block> blocks;
  std::vector<Grade> grade;     // per generator
  std::vector<SparseVec> diff;  // image of each generator, sorted

  std::size_t size() const { return grade.size(); }
  std::size_t index(std::size_t v, WedgeMask h, WedgeMask w) const {
    return blocks[v].offset + (std::size_t(h) << blocks[v].wdim) + w;
  }
  std::size_t block_of(std::size_t gen) const;
  Grade target_grade(const Grade& g) const {
    Grade t = g;
    t[axis] += step * denominator;
    return t;
  }
};

// Edge of a cube complex: scalar * (hmap tensor wmap) from block `from` to `to`.
struct CubeEdge {
  std::size_t from = 0, to = 0;
  ExteriorMap h, w;
  Rational scalar = 1;
};

using GradeFn = std::function<Grade(const Block&, int i, int j)>;
using EdgeFn = std::function<std::vector<CubeEdge>(std::size_t v)>;

// Builds generators and differential; edges are produced per source block.
ChainComplex assemble(std::vector<Block> blocks, const GradeFn& grade, const EdgeFn& edges,
                      int arity, int denominator, int axis, int step, Exec exec);

// Throws when the differential does not square to zero.
void assert_square_zero(const ChainComplex& c, Exec exec = Exec::parallel);
bool squares_to_zero(const ChainComplex& c, Exec exec = Exec::parallel);

BettiTable homology(const ChainComplex& c, Exec exec = Exec::parallel);

// Graded Euler characteristic: sign from the homological axis, one variable per
// remaining axis. For denominator 2 the sign is i^(doubled degree).
LaurentPoly euler_characteristic(const BettiTable& b, const ChainComplex& shape,
                                 const std::vector<std::string>& vars);
LaurentPoly chain_euler_characteristic(const ChainComplex& c, const std::vector<std::string>& vars);

int edge_sign(Mask S, std::size_t r);

enum class Theory { d, partial, poincare, tutte_d, tutte_partial_1, tutte_partial_2, tutte_partial_3,
                    tutte_partial_4 };

Theory parse_theory(const std::string& s);
std::string theory_name(Theory t);

struct CubeComplex {
  Theory theory;
  std::shared_ptr<const VectorArrangement> arrangement;
  std::shared_ptr<const SpaceTable> spaces;
  ChainComplex complex;
};

CubeComplex build_complex(const VectorArrangement& a, Theory t, Exec exec = Exec::parallel);
CubeComplex build_characteristic_d(const VectorArrangement& a, Exec exec = Exec::parallel);
CubeComplex build_characteristic_partial(const VectorArrangement& a, Exec exec = Exec::parallel);
CubeComplex build_poincare_d(const VectorArrangement& a, Exec exec = Exec::parallel);
CubeComplex build_tutte_d(const VectorArrangement& a, Exec exec = Exec::parallel);
CubeComplex build_tutte_partial(const VectorArrangement& a, int variant, Exec exec = Exec::parallel);

BettiTable theory_homology(const VectorArrangement& a, Theory t, Exec exec = Exec::parallel);

// Graded tensor product of two Betti tables (sum of grades).
BettiTable convolve(const BettiTable& a, const BettiTable& b);
long total_dim(const BettiTable& b);

// Chain-level helpers.
Chain apply_differential(const ChainComplex& c, const Chain& x);
Chain chain_add(const Chain& x, const Chain& y, const Rational& s = 1);  // x + s*y
Chain chain_scale(const Chain& x, const Rational& s);
// Homogeneous single-block element from an H-side and a W-side element.
Chain chain_from(const ChainComplex& c, std::size_t v, const ExteriorElement& h,
                 const ExteriorElement& w);

enum class ProductKind { char_partial, tutte_partial_1, tutte_partial_2, tutte_partial_3,
                         tutte_partial_4 };

// Cube products; x and y are chains of cc.
Chain dg_multiply(const CubeComplex& cc, ProductKind kind, const Chain& x, const Chain& y);
// Exterior degree of the factor the differential acts on by wedge or contraction.
int leibniz_degree(const CubeComplex& cc, ProductKind kind, std::size_t gen);
ProductKind product_kind_for(Theory t);

}  // namespace arrkh
