#include "arrkh/khovanov.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace arrkh {

SignedCube build_signed_cube(const SignedArrangement& a, Exec exec) {
  if (a.signs.size() != a.size()) throw DomainError("one sign per vector is required");
  SignedCube cube;
  auto arr = std::make_shared<const SignedArrangement>(a);
  cube.arrangement = arr;
  cube.spaces = std::make_shared<const SpaceTable>(arr->base, exec);
  const std::size_t n = cube.n = a.size();
  const std::size_t total = (std::size_t(1) << n) * n;
  cube.type.assign(total, 0);
  cube.hmap.resize(total);
  cube.wmap.resize(total);
  cube.eps.assign(total, Rational(1));
  const auto& t = *cube.spaces;
  const auto& sa = *arr;
  auto body = [&](Mask S) {
    const Mask ts = tilde(sa, S);
    for (std::size_t r = 0; r < n; ++r) {
      if (S >> r & 1u) continue;
      const std::size_t e = cube.edge(S, r);
      const Mask bit = Mask(1) << r;
      const Vec& nu = sa.base.vectors[r];
      if (sa.signs[r] == Sign::plus) {
        const Mask tt = ts | bit;
        cube.hmap[e] = induced_projection(t[ts].H, t[tt].H);
        if (!t[ts].V.contains(nu)) {
          cube.type[e] = 1;
          cube.wmap[e] = induced_projection(t[ts].W, t[tt].W);
        } else {
          cube.type[e] = 2;
          cube.wmap[e] = wedge_map(t.functional(r), t[ts].W, t[tt].W);
        }
      } else {
        const Mask tt = ts & ~bit;
        cube.wmap[e] = induced_projection(t[ts].W, t[tt].W);
        if (t[tt].V.contains(nu)) {
          cube.type[e] = 3;
          cube.hmap[e] = induced_projection(t[ts].H, t[tt].H);
        } else {
          cube.type[e] = 4;
          cube.hmap[e] = wedge_map(nu, t[ts].H, t[tt].H);
        }
      }
    }
  };
  const long count = 1L << n;
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long S = 0; S < count; ++S) body(static_cast<Mask>(S));
  } else {
    for (long S = 0; S < count; ++S) body(static_cast<Mask>(S));
  }
  return cube;
}

namespace {

// alpha with f = alpha * g, nullopt if g is zero while f is not; 0 if f is zero.
std::optional<Rational> ratio(const ExteriorMap& f, const ExteriorMap& g) {
  std::optional<Rational> alpha;
  for (std::size_t m = 0; m < f.cols.size(); ++m) {
    if (!f.cols[m].empty() && !g.cols[m].empty()) {
      alpha = f.cols[m].front().second / g.cols[m].front().second;
      break;
    }
    if (f.cols[m].empty() != g.cols[m].empty()) return f.is_zero() ? std::optional<Rational>(0) : std::nullopt;
  }
  if (!alpha) return f.is_zero() ? std::optional<Rational>(0) : std::nullopt;
  if (!(f == g.scaled(*alpha))) return std::nullopt;
  return alpha;
}

// Sparse row reduction over a field given by its operations; columns earlier
// in `rank` become pivots first, the rest are set to zero.
template <class T, class Ops>
class Echelon {
 public:
  Echelon(std::vector<std::size_t> rank, Ops ops, std::size_t rhs_count)
      : rank_(std::move(rank)), ops_(ops), rhs_count_(rhs_count) {}

  // False when the row is inconsistent with the ones added before.
  bool add(std::map<std::size_t, T> row, std::vector<T> rhs) {
    for (;;) {
      std::erase_if(row, [&](const auto& kv) { return ops_.zero(kv.second); });
      if (row.empty()) {
        for (const auto& v : rhs)
          if (!ops_.zero(v)) return false;
        return true;
      }
      auto lead = std::min_element(row.begin(), row.end(),
                                   [&](const auto& a, const auto& b) { return rank_[a.first] < rank_[b.first]; });
      auto hit = std::find_if(row.begin(), row.end(), [&](const auto& kv) { return pivot_of_.count(kv.first); });
      if (hit == row.end()) {
        const T inv = ops_.inv(lead->second);
        for (auto& [c, v] : row) v = ops_.mul(v, inv);
        for (auto& v : rhs) v = ops_.mul(v, inv);
        pivot_of_[lead->first] = rows_.size();
        rows_.push_back({lead->first, std::move(row), std::move(rhs)});
        return true;
      }
      const Row& p = rows_[pivot_of_[hit->first]];
      const T f = hit->second;
      for (const auto& [c, v] : p.coeffs) row[c] = ops_.sub(row[c], ops_.mul(f, v));
      for (std::size_t k = 0; k < rhs_count_; ++k) rhs[k] = ops_.sub(rhs[k], ops_.mul(f, p.rhs[k]));
    }
  }

  // Values per column and right-hand side; free columns are zero.
  std::vector<std::vector<T>> solve(std::size_t cols) const {
    std::vector<std::vector<T>> x(rhs_count_, std::vector<T>(cols, ops_.zero_value()));
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
      for (std::size_t k = 0; k < rhs_count_; ++k) {
        T v = it->rhs[k];
        for (const auto& [c, a] : it->coeffs)
          if (c != it->pivot) v = ops_.sub(v, ops_.mul(a, x[k][c]));
        x[k][it->pivot] = v;
      }
    return x;
  }

 private:
  struct Row {
    std::size_t pivot;
    std::map<std::size_t, T> coeffs;
    std::vector<T> rhs;
  };
  std::vector<std::size_t> rank_;
  Ops ops_;
  std::size_t rhs_count_;
  std::vector<Row> rows_;
  std::map<std::size_t, std::size_t> pivot_of_;
};

struct RationalOps {
  bool zero(const Rational& a) const { return sgn(a) == 0; }
  Rational zero_value() const { return 0; }
  Rational inv(const Rational& a) const { return 1 / a; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational sub(const Rational& a, const Rational& b) const { return a - b; }
};

struct BitOps {
  bool zero(int a) const { return a == 0; }
  int zero_value() const { return 0; }
  int inv(int a) const { return a; }
  int mul(int a, int b) const { return a & b; }
  int sub(int a, int b) const { return a ^ b; }
};

void add_prime_exponents(mpz_class z, int sign, std::map<mpz_class, long>& out) {
  if (z < 0) z = -z;
  for (mpz_class p = 2; p * p <= z; ++p)
    while (z % p == 0) {
      out[p] += sign;
      z /= p;
    }
  if (z > 1) out[z] += sign;
}

// The face conditions are multiplicative: eps(S,r) eps(S+r,t) / (eps(S,t) eps(S+t,r))
// = -1/alpha. Signs are solved over F2 and each prime exponent over Q.
enum class Elimination { solved, inconsistent, fractional };

Elimination solve_by_elimination(SignedCube& cube, const std::vector<std::size_t>& rank_of) {
  const std::size_t n = cube.n, cols = cube.eps.size();
  struct Face {
    std::array<std::size_t, 4> e;
    Rational c;
  };
  std::vector<Face> faces;
  std::set<mpz_class> primes;
  for (Mask S = 0; S < (Mask(1) << n); ++S)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t t = r + 1; t < n; ++t) {
        if ((S >> r & 1u) || (S >> t & 1u)) continue;
        auto alpha = face_scalar(cube, S, r, t);
        if (!alpha) continue;
        if (sgn(*alpha) == 0) return Elimination::inconsistent;
        const Mask Sr = S | (Mask(1) << r), St = S | (Mask(1) << t);
        Face f{{cube.edge(S, r), cube.edge(Sr, t), cube.edge(S, t), cube.edge(St, r)}, -1 / *alpha};
        std::map<mpz_class, long> ex;
        add_prime_exponents(f.c.get_num(), 1, ex);
        for (const auto& [p, v] : ex) primes.insert(p);
        faces.push_back(std::move(f));
      }
  // Edges with many elements above them are fixed first, as in the propagation.
  std::vector<std::size_t> key(cols, 0), rank(cols, 0);
  std::vector<std::size_t> idx;
  for (Mask S = 0; S < (Mask(1) << n); ++S)
    for (std::size_t r = 0; r < n; ++r) {
      if (S >> r & 1u) continue;
      std::size_t c = 0;
      for (std::size_t s = 0; s < n; ++s)
        if ((S >> s & 1u) && rank_of[s] > rank_of[r]) ++c;
      key[cube.edge(S, r)] = c;
      idx.push_back(cube.edge(S, r));
    }
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return key[a] > key[b]; });
  for (std::size_t c = 0; c < cols; ++c) rank[c] = idx.size() + c;
  for (std::size_t k = 0; k < idx.size(); ++k) rank[idx[k]] = k;
  for (const auto& f : faces) {
    std::map<mpz_class, long> ex;
    add_prime_exponents(f.c.get_den(), -1, ex);
    for (const auto& [p, v] : ex) primes.insert(p);
  }
  const std::vector<mpz_class> plist(primes.begin(), primes.end());
  Echelon<int, BitOps> bits(rank, BitOps{}, 1);
  Echelon<Rational, RationalOps> logs(rank, RationalOps{}, plist.size());
  for (const auto& f : faces) {
    std::map<std::size_t, int> brow;
    std::map<std::size_t, Rational> qrow;
    const int coef[] = {1, 1, -1, -1};
    for (int k = 0; k < 4; ++k) {
      brow[f.e[k]] ^= 1;
      qrow[f.e[k]] += coef[k];
    }
    if (!bits.add(brow, {sgn(f.c) < 0 ? 1 : 0})) return Elimination::inconsistent;
    std::map<mpz_class, long> ex;
    add_prime_exponents(f.c.get_num(), 1, ex);
    add_prime_exponents(f.c.get_den(), -1, ex);
    std::vector<Rational> rhs;
    for (const auto& p : plist) rhs.push_back(Rational(ex.count(p) ? ex[p] : 0));
    if (!logs.add(qrow, rhs)) return Elimination::inconsistent;
  }
  const auto sign = bits.solve(cols)[0];
  const auto exps = logs.solve(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    Rational v = sign[c] ? -1 : 1;
    for (std::size_t k = 0; k < plist.size(); ++k) {
      const Rational& e = exps[k][c];
      if (e.get_den() != 1) return Elimination::fractional;
      mpz_class pw;
      const long ei = e.get_num().get_si();
      mpz_pow_ui(pw.get_mpz_t(), plist[k].get_mpz_t(), static_cast<unsigned long>(ei < 0 ? -ei : ei));
      v *= ei < 0 ? Rational(1) / Rational(pw) : Rational(pw);
    }
    cube.eps[c] = v;
  }
  return Elimination::solved;
}

std::vector<std::size_t> natural_ranks(std::size_t n) {
  std::vector<std::size_t> r(n);
  std::iota(r.begin(), r.end(), std::size_t(0));
  return r;
}

}  // namespace

std::optional<Rational> face_scalar(const SignedCube& cube, Mask S, std::size_t r, std::size_t t) {
  if (r == t || (S >> r & 1u) || (S >> t & 1u)) throw DomainError("invalid face");
  const Mask Sr = S | (Mask(1) << r), St = S | (Mask(1) << t);
  const auto e1 = cube.edge(S, r), e2 = cube.edge(Sr, t), e3 = cube.edge(S, t), e4 = cube.edge(St, r);
  ExteriorMap ah = compose(cube.hmap[e2], cube.hmap[e1]);
  ExteriorMap aw = compose(cube.wmap[e2], cube.wmap[e1]);
  ExteriorMap bh = compose(cube.hmap[e4], cube.hmap[e3]);
  ExteriorMap bw = compose(cube.wmap[e4], cube.wmap[e3]);
  const bool a_zero = ah.is_zero() || aw.is_zero(), b_zero = bh.is_zero() || bw.is_zero();
  if (a_zero && b_zero) return std::nullopt;
  if (a_zero != b_zero) throw DomainError("face composites are not proportional");
  auto rh = ratio(ah, bh), rw = ratio(aw, bw);
  if (!rh || !rw) throw DomainError("face composites are not proportional");
  return *rh * *rw;
}

void solve_edge_scalars(SignedCube& cube, const std::vector<std::size_t>& order) {
  const std::size_t n = cube.n;
  std::vector<std::size_t> rank_of(n);
  if (order.empty()) {
    std::iota(rank_of.begin(), rank_of.end(), 0);
  } else {
    if (order.size() != n) throw DomainError("propagation order has wrong length");
    for (std::size_t k = 0; k < n; ++k) rank_of[order[k]] = k;
  }
  auto above = [&](Mask S, std::size_t r) {
    int c = 0;
    for (std::size_t s = 0; s < n; ++s)
      if ((S >> s & 1u) && rank_of[s] > rank_of[r]) ++c;
    return c;
  };
  struct Item {
    int count;
    Mask S;
    std::size_t r;
  };
  std::vector<Item> items;
  for (Mask S = 0; S < (Mask(1) << n); ++S)
    for (std::size_t r = 0; r < n; ++r)
      if (!(S >> r & 1u)) items.push_back({above(S, r), S, r});
  std::stable_sort(items.begin(), items.end(),
                   [](const Item& a, const Item& b) { return a.count < b.count; });
  for (const auto& it : items) {
    Rational& e = cube.eps[cube.edge(it.S, it.r)];
    e = 1;
    if (it.count == 0) continue;
    // Faces through elements of S ranked above r only involve edges fixed
    // earlier; use the highest-ranked one whose composites do not vanish.
    std::vector<std::size_t> cand;
    for (std::size_t s = 0; s < n; ++s)
      if ((it.S >> s & 1u) && rank_of[s] > rank_of[it.r]) cand.push_back(s);
    std::sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) { return rank_of[a] > rank_of[b]; });
    std::size_t m = n;
    std::optional<Rational> alpha;
    for (std::size_t s : cand) {
      alpha = face_scalar(cube, it.S & ~(Mask(1) << s), s, it.r);
      if (alpha) {
        m = s;
        break;
      }
    }
    if (!alpha) continue;
    const Mask base = it.S & ~(Mask(1) << m);
    if (sgn(*alpha) == 0) throw DomainError("degenerate face scalar");
    const Rational& e_bm = cube.eps[cube.edge(base, m)];
    const Rational& e_br = cube.eps[cube.edge(base, it.r)];
    const Rational& e_brm = cube.eps[cube.edge(base | (Mask(1) << it.r), m)];
    e = -(e_br * e_brm) / (*alpha * e_bm);
  }
  if (faces_anticommute(cube)) return;
  // Free faces can leave the propagation stuck; solve the face equations directly.
  const Elimination res = solve_by_elimination(cube, rank_of);
  if (res == Elimination::inconsistent)
    throw NoEdgeScalars("no edge scalars exist: the face equations are inconsistent");
  if (res == Elimination::fractional || !faces_anticommute(cube))
    throw DomainError("edge scalar solver failed");
}

bool edge_scalars_exist(const SignedCube& cube) {
  SignedCube copy = cube;
  return solve_by_elimination(copy, natural_ranks(cube.n)) != Elimination::inconsistent;
}

bool faces_anticommute(const SignedCube& cube) {
  const std::size_t n = cube.n;
  for (Mask S = 0; S < (Mask(1) << n); ++S)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t t = r + 1; t < n; ++t) {
        if ((S >> r & 1u) || (S >> t & 1u)) continue;
        auto alpha = face_scalar(cube, S, r, t);
        if (!alpha) continue;
        const Mask Sr = S | (Mask(1) << r), St = S | (Mask(1) << t);
        Rational lhs = cube.eps[cube.edge(S, r)] * cube.eps[cube.edge(Sr, t)] * *alpha +
                       cube.eps[cube.edge(S, t)] * cube.eps[cube.edge(St, r)];
        if (sgn(lhs) != 0) return false;
      }
  return true;
}

ChainComplex signed_complex(const SignedCube& cube, Exec exec) {
  const std::size_t n = cube.n;
  const auto& t = *cube.spaces;
  const auto& sa = *cube.arrangement;
  std::vector<Block> blocks(std::size_t(1) << n);
  for (Mask S = 0; S < blocks.size(); ++S) {
    const Mask ts = tilde(sa, S);
    blocks[S] = {S, t[ts].H.dim(), t[ts].W.dim(), 0};
  }
  const int nn = static_cast<int>(n);
  auto grade = [nn](const Block& b, int i, int j) {
    const int s = std::popcount(b.S);
    return Grade{2 * s - nn,
                 2 * s + 2 * static_cast<int>(b.hdim + b.wdim) - 4 * (i + j) - nn};
  };
  auto edges = [&](std::size_t v) {
    std::vector<CubeEdge> es;
    const Mask S = static_cast<Mask>(v);
    for (std::size_t r = 0; r < n; ++r) {
      if (S >> r & 1u) continue;
      const std::size_t e = cube.edge(S, r);
      es.push_back({S, S | (Mask(1) << r), cube.hmap[e], cube.wmap[e], cube.eps[e]});
    }
    return es;
  };
  return assemble(std::move(blocks), grade, edges, 2, 2, 0, 1, exec);
}

BettiTable kh_homology(const SignedArrangement& a, const std::vector<std::size_t>& order, Exec exec) {
  SignedCube cube = build_signed_cube(a, exec);
  solve_edge_scalars(cube, order);
  ChainComplex c = signed_complex(cube, exec);
  assert_square_zero(c, exec);
  return homology(c, exec);
}

BettiTable kh_homology(const SignedArrangement& a, Exec exec) { return kh_homology(a, {}, exec); }

LaurentPoly kh_euler(const BettiTable& b) {
  ChainComplex shape;
  shape.arity = 2;
  shape.denominator = 2;
  shape.axis = 0;
  return euler_characteristic(b, shape, {"q"});
}

}  // namespace arrkh
