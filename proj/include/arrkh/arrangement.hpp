#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "arrkh/linalg.hpp"
#include "arrkh/parallel.hpp"

namespace arrkh {

using Mask = std::uint32_t;

enum class Sign : int { plus = 1, minus = -1 };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

// Vectors live inside an ambient subspace U of Q^N, so restrictions and Gale
// duals stay isometric to their parents. Dependency vectors are pushed through
// an injective frame (M x n) before any inner product is taken; the identity
// frame gives the standard product on Q^n.
struct VectorArrangement {
  Subspace ambient;
  std::vector<Vec> vectors;
  Matrix frame;

  static VectorArrangement standard(std::size_t k, std::vector<Vec> vectors);

  std::size_t size() const { return vectors.size(); }
  std::size_t dim() const { return ambient.dim(); }
  std::size_t coord_len() const { return ambient.ambient_dim(); }
  std::size_t frame_len() const { return frame.rows(); }
  Mask full_mask() const { return size() == 0 ? 0 : (Mask(1) << size()) - 1; }

  // Vectors written in the RREF basis of the ambient subspace.
  std::vector<Vec> coordinate_vectors() const;
};

struct SignedArrangement {
  VectorArrangement base;
  std::vector<Sign> signs;

  std::size_t size() const { return base.size(); }
  Mask positive_mask() const;
  Mask negative_mask() const;
};

struct SubsetSpaces {
  Mask S = 0;
  Subspace H;  // inside Q^N
  Subspace V;  // inside Q^N
  Subspace W;  // inside Q^M (frame coordinates)
};

SubsetSpaces subset_spaces(const VectorArrangement& a, Mask S);

// All 2^n subset spaces, computed once.
class SpaceTable {
 public:
  explicit SpaceTable(const VectorArrangement& a, Exec exec = Exec::parallel);
  const SubsetSpaces& operator[](Mask S) const { return spaces_[S]; }
  const VectorArrangement& arrangement() const { return *a_; }
  // The dual vector of index r seen inside W_T: projection of the r-th
  // coordinate functional.
  Vec dual_vector_in(std::size_t r, Mask T) const;
  const Vec& functional(std::size_t r) const { return functionals_[r]; }

 private:
  const VectorArrangement* a_;
  std::vector<SubsetSpaces> spaces_;
  std::vector<Vec> functionals_;
};

// Column r of frame (frame^T frame)^{-1}: pairs with frame*y to give y_r.
std::vector<Vec> coordinate_functionals(const VectorArrangement& a);

VectorArrangement gale_dual(const VectorArrangement& a);
SignedArrangement gale_dual(const SignedArrangement& a);

VectorArrangement delete_vector(const VectorArrangement& a, std::size_t i);
SignedArrangement delete_vector(const SignedArrangement& a, std::size_t i);
VectorArrangement restrict_at(const VectorArrangement& a, std::size_t i);
SignedArrangement restrict_at(const SignedArrangement& a, std::size_t i);

VectorArrangement product(const VectorArrangement& a, const VectorArrangement& b);
SignedArrangement product(const SignedArrangement& a, const SignedArrangement& b);

// Reorders vectors: result vector j is input vector perm[j].
VectorArrangement permute(const VectorArrangement& a, const std::vector<std::size_t>& perm);
SignedArrangement permute(const SignedArrangement& a, const std::vector<std::size_t>& perm);

// Replaces vector i by its negative.
VectorArrangement negate_vector(const VectorArrangement& a, std::size_t i);

struct Graph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // 1-based endpoints
  std::vector<Sign> signs;                                  // empty or one per edge
  bool reduced = false;
};

VectorArrangement from_graph(const Graph& g);
SignedArrangement from_signed_graph(const Graph& g);

Mask tilde(const SignedArrangement& a, Mask S);

struct MatroidRow {
  std::size_t h, v, w;
  bool operator==(const MatroidRow&) const = default;
};
// (dim H_S, dim V_S, dim W_S) for every S in increasing mask order.
std::vector<MatroidRow> matroid_data(const VectorArrangement& a);

bool has_zero_vector(const VectorArrangement& a);

}  // namespace arrkh
