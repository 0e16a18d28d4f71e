#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arrkh/complex.hpp"

namespace arrkh {

struct SignedCube {
  std::shared_ptr<const SignedArrangement> arrangement;
  std::shared_ptr<const SpaceTable> spaces;
  std::size_t n = 0;
  // Per edge (S, r) with r not in S, stored at S * n + r.
  std::vector<int> type;
  std::vector<ExteriorMap> hmap, wmap;
  std::vector<Rational> eps;

  std::size_t edge(Mask S, std::size_t r) const { return std::size_t(S) * n + r; }
};

SignedCube build_signed_cube(const SignedArrangement& a, Exec exec = Exec::parallel);

// alpha with delta_{S+r,t} delta_{S,r} = alpha * delta_{S+t,r} delta_{S,t};
// nullopt when both composites vanish.
std::optional<Rational> face_scalar(const SignedCube& cube, Mask S, std::size_t r, std::size_t t);

// Raised when the face equations have no solution in nonzero rationals.
struct NoEdgeScalars : DomainError {
  using DomainError::DomainError;
};

// Fills eps. `order` ranks the indices (order[k] = index placed k-th); the
// default is the natural order. Throws if a face cannot be made to anticommute.
void solve_edge_scalars(SignedCube& cube, const std::vector<std::size_t>& order = {});
bool faces_anticommute(const SignedCube& cube);
// False when the face equations have no solution in nonzero rationals at all
// (possible when composites around a 3-face vanish).
bool edge_scalars_exist(const SignedCube& cube);

ChainComplex signed_complex(const SignedCube& cube, Exec exec = Exec::parallel);

BettiTable kh_homology(const SignedArrangement& a, Exec exec = Exec::parallel);
BettiTable kh_homology(const SignedArrangement& a, const std::vector<std::size_t>& order,
                       Exec exec = Exec::parallel);
LaurentPoly kh_euler(const BettiTable& b);

enum class MoveKind { wR1, wR1_dual, R2, R2_dual, R3, R3_dual };

struct MoveDescriptor {
  MoveKind kind = MoveKind::wR1;
  std::size_t l = 0, m = 0, p = 0;  // 0-based
  Rational alpha = 0, alpha_m = 0, alpha_p = 0;
};

std::string move_name(MoveKind k);
MoveKind parse_move_kind(const std::string& s);

// Checks the move's sign and dependency conditions; returns the reason on failure.
std::optional<std::string> move_violation(const SignedArrangement& a, const MoveDescriptor& mv);
SignedArrangement apply_move(const SignedArrangement& a, const MoveDescriptor& mv);
std::vector<MoveDescriptor> find_moves(const SignedArrangement& a);

}  // namespace arrkh
