#include <algorithm>

#include "arrkh/khovanov.hpp"

namespace arrkh {

std::string move_name(MoveKind k) {
  switch (k) {
    case MoveKind::wR1: return "wR1";
    case MoveKind::wR1_dual: return "wR1v";
    case MoveKind::R2: return "R2";
    case MoveKind::R2_dual: return "R2v";
    case MoveKind::R3: return "R3";
    case MoveKind::R3_dual: return "R3v";
  }
  return "?";
}

MoveKind parse_move_kind(const std::string& s) {
  std::string key = s;
  for (const char* suffix : {"\u2228", "^", "_dual", "-dual", "*"})
    if (key.size() > std::string(suffix).size() && key.ends_with(suffix)) {
      key = key.substr(0, key.size() - std::string(suffix).size()) + "v";
      break;
    }
  for (MoveKind k : {MoveKind::wR1, MoveKind::wR1_dual, MoveKind::R2, MoveKind::R2_dual, MoveKind::R3,
                     MoveKind::R3_dual})
    if (key == move_name(k)) return k;
  throw DomainError("unknown move kind: " + s);
}

namespace {

bool is_multiple(const Vec& x, const Vec& y, const Rational& alpha) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != alpha * y[i]) return false;
  return true;
}

// Scalar alpha with x = alpha * y, if any (y nonzero).
std::optional<Rational> ratio_of(const Vec& x, const Vec& y) {
  if (is_zero(y)) return std::nullopt;
  Rational alpha = dot(x, y) / dot(y, y);
  if (!is_multiple(x, y, alpha)) return std::nullopt;
  return alpha;
}

// Inserts v at slot i with a fresh frame direction orthogonal to all others.
VectorArrangement insert_vector(const VectorArrangement& a, std::size_t i, const Vec& v) {
  VectorArrangement out;
  out.ambient = a.ambient;
  out.vectors = a.vectors;
  out.vectors.insert(out.vectors.begin() + static_cast<long>(i), v);
  const std::size_t M = a.frame_len(), n = a.size();
  out.frame = Matrix(M + 1, n + 1);
  for (std::size_t r = 0; r < M; ++r)
    for (std::size_t c = 0, k = 0; c <= n; ++c) {
      if (c == i) continue;
      out.frame(r, c) = a.frame(r, k++);
    }
  out.frame(M, i) = 1;
  return out;
}

bool opposite(const SignedArrangement& a, std::size_t l, std::size_t m) { return a.signs[l] != a.signs[m]; }

// rank of {x, y} is two
bool independent(const Vec& x, const Vec& y) {
  if (is_zero(x) || is_zero(y)) return false;
  return !ratio_of(x, y).has_value();
}

Vec combination(const Rational& am, const Vec& vm, const Rational& ap, const Vec& vp) {
  return axpy(am, vm, axpy(ap, vp, Vec(vm.size(), Rational(0))));
}

// Nonzero (am, ap) with target = am * x + ap * y, preferring small coefficients.
std::optional<std::pair<Rational, Rational>> solve_pair(const Vec& target, const Vec& x, const Vec& y) {
  const bool xz = is_zero(x), yz = is_zero(y);
  auto check = [&](const Rational& am, const Rational& ap) -> std::optional<std::pair<Rational, Rational>> {
    if (sgn(am) == 0 || sgn(ap) == 0) return std::nullopt;
    if (combination(am, x, ap, y) != target) return std::nullopt;
    return std::make_pair(am, ap);
  };
  if (xz && yz) return check(1, 1);
  if (yz) {
    auto r = ratio_of(target, x);
    return r ? check(*r, 1) : std::nullopt;
  }
  if (xz) {
    auto r = ratio_of(target, y);
    return r ? check(1, *r) : std::nullopt;
  }
  if (auto beta = ratio_of(y, x)) {
    auto gamma = ratio_of(target, x);
    if (!gamma) return std::nullopt;
    if (auto s = check(1, (*gamma - 1) / *beta)) return s;
    return check(2, (*gamma - 2) / *beta);
  }
  const Rational xx = dot(x, x), xy = dot(x, y), yy = dot(y, y), xt = dot(x, target), yt = dot(y, target);
  const Rational det = xx * yy - xy * xy;
  return check((xt * yy - yt * xy) / det, (yt * xx - xt * xy) / det);
}

}  // namespace

std::optional<std::string> move_violation(const SignedArrangement& a, const MoveDescriptor& mv) {
  const std::size_t n = a.size();
  const bool triple = mv.kind == MoveKind::R3 || mv.kind == MoveKind::R3_dual;
  if (mv.l >= n || mv.m >= n || (triple && mv.p >= n)) return "move index out of range";
  if (mv.l == mv.m || (triple && (mv.p == mv.l || mv.p == mv.m))) return "move indices must be distinct";
  const auto& v = a.base.vectors;
  std::vector<Vec> dual;
  if (mv.kind != MoveKind::wR1 && mv.kind != MoveKind::R2) dual = gale_dual(a.base).vectors;
  switch (mv.kind) {
    case MoveKind::wR1:
      if (!opposite(a, mv.l, mv.m)) return "wR1 needs opposite signs";
      if (!is_zero(v[mv.l]) || !is_zero(v[mv.m])) return "wR1 needs both vectors zero";
      return std::nullopt;
    case MoveKind::wR1_dual:
      if (!opposite(a, mv.l, mv.m)) return "wR1v needs opposite signs";
      if (!is_zero(dual[mv.l]) || !is_zero(dual[mv.m])) return "wR1v needs both dual vectors zero";
      return std::nullopt;
    case MoveKind::R2:
    case MoveKind::R2_dual: {
      const auto& w = mv.kind == MoveKind::R2 ? v : dual;
      if (!opposite(a, mv.l, mv.m)) return move_name(mv.kind) + " needs opposite signs";
      if (sgn(mv.alpha) == 0) return move_name(mv.kind) + " needs a nonzero coefficient";
      if (!is_multiple(w[mv.l], w[mv.m], mv.alpha)) return move_name(mv.kind) + " dependency does not hold";
      // A pair that is also parallel is an R2 pair; restricting at it drops a free factor.
      if (mv.kind == MoveKind::R2_dual && !independent(v[mv.l], v[mv.m]))
        return "R2v needs linearly independent vectors";
      return std::nullopt;
    }
    case MoveKind::R3:
    case MoveKind::R3_dual: {
      const Sign pair = mv.kind == MoveKind::R3 ? Sign::plus : Sign::minus;
      if (a.signs[mv.l] != pair || a.signs[mv.m] != pair || a.signs[mv.p] == pair)
        return move_name(mv.kind) + " sign pattern does not hold";
      if (sgn(mv.alpha_m) == 0 || sgn(mv.alpha_p) == 0) return move_name(mv.kind) + " needs nonzero coefficients";
      if (combination(mv.alpha_m, dual[mv.m], mv.alpha_p, dual[mv.p]) != dual[mv.l])
        return move_name(mv.kind) + " dual dependency does not hold";
      if (!independent(v[mv.m], v[mv.p])) return move_name(mv.kind) + " needs the other two vectors independent";
      return std::nullopt;
    }
  }
  return "unknown move";
}

SignedArrangement apply_move(const SignedArrangement& a, const MoveDescriptor& mv) {
  if (auto why = move_violation(a, mv)) throw DomainError(*why);
  const std::size_t hi = std::max(mv.l, mv.m), lo = std::min(mv.l, mv.m);
  switch (mv.kind) {
    case MoveKind::wR1:
    case MoveKind::R2:
      return delete_vector(delete_vector(a, hi), lo);
    case MoveKind::wR1_dual:
    case MoveKind::R2_dual:
      return restrict_at(restrict_at(a, hi), lo);
    default: {
      SignedArrangement r = restrict_at(a, mv.l);
      auto slot = [&](std::size_t i) { return i > mv.l ? i - 1 : i; };
      // The new vector lies on the line through alpha_m nu_m - alpha_p nu_p.
      const Vec nv = combination(mv.alpha_m, r.base.vectors[slot(mv.m)], -mv.alpha_p, r.base.vectors[slot(mv.p)]);
      SignedArrangement out;
      out.base = insert_vector(r.base, mv.l, nv);
      out.signs = r.signs;
      out.signs.insert(out.signs.begin() + static_cast<long>(mv.l), flip(a.signs[mv.l]));
      return out;
    }
  }
}

std::vector<MoveDescriptor> find_moves(const SignedArrangement& a) {
  std::vector<MoveDescriptor> out;
  const std::size_t n = a.size();
  const auto& v = a.base.vectors;
  const auto dual = gale_dual(a.base).vectors;
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = l + 1; m < n; ++m) {
      if (!opposite(a, l, m)) continue;
      if (is_zero(v[l]) && is_zero(v[m])) out.push_back({MoveKind::wR1, l, m, 0, 0, 0, 0});
      if (is_zero(dual[l]) && is_zero(dual[m])) out.push_back({MoveKind::wR1_dual, l, m, 0, 0, 0, 0});
      if (auto r = ratio_of(v[l], v[m]); r && sgn(*r) != 0) out.push_back({MoveKind::R2, l, m, 0, *r, 0, 0});
      if (auto r = ratio_of(dual[l], dual[m]); r && sgn(*r) != 0 && independent(v[l], v[m]))
        out.push_back({MoveKind::R2_dual, l, m, 0, *r, 0, 0});
    }
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t p = 0; p < n; ++p) {
        if (l == m || l == p || m == p || a.signs[l] != a.signs[m] || a.signs[p] == a.signs[l]) continue;
        if (!independent(v[m], v[p])) continue;
        auto s = solve_pair(dual[l], dual[m], dual[p]);
        if (!s) continue;
        const MoveKind k = a.signs[l] == Sign::plus ? MoveKind::R3 : MoveKind::R3_dual;
        out.push_back({k, l, m, p, 0, s->first, s->second});
      }
  return out;
}

}  // namespace arrkh
