#include "arrkh/poly.hpp"

#include <map>
#include <tuple>

namespace arrkh {

GaussInt i_power(long e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

std::string to_string(const GaussInt& z) {
  if (z.im == 0) return z.re.get_str();
  std::string im = z.im == 1 ? "i" : z.im == -1 ? "-i" : z.im.get_str() + "i";
  if (z.re == 0) return im;
  return z.re.get_str() + (z.im > 0 ? "+" : "") + im;
}

LaurentPoly LaurentPoly::constant(std::vector<std::string> vars, const GaussInt& c) {
  Exps zero(vars.size(), 0);
  return monomial(std::move(vars), std::move(zero), c);
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, Exps exp2, const GaussInt& c) {
  if (exp2.size() != vars.size()) throw DomainError("exponent arity mismatch");
  LaurentPoly p(std::move(vars));
  p.add_term(exp2, c);
  return p;
}

void LaurentPoly::add_term(const Exps& exp2, const GaussInt& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(exp2, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GaussInt LaurentPoly::coeff(const Exps& exp2) const {
  auto it = terms_.find(exp2);
  return it == terms_.end() ? GaussInt{} : it->second;
}

void LaurentPoly::check_vars(const LaurentPoly& o) const {
  if (vars_ != o.vars_) throw DomainError("polynomials over different variables");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_vars(o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  check_vars(o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_vars(o);
  LaurentPoly r(vars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exps e = e1;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
      r.add_term(e, c1 * c2);
    }
  return r;
}

LaurentPoly LaurentPoly::operator*(const GaussInt& c) const {
  LaurentPoly r(vars_);
  for (const auto& [e, x] : terms_) r.add_term(e, x * c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result = constant(vars_, 1), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

namespace {

bool is_unit(const GaussInt& c) {
  return (c.im == 0 && (c.re == 1 || c.re == -1)) || (c.re == 0 && (c.im == 1 || c.im == -1));
}

GaussInt unit_inverse(const GaussInt& c) { return {c.re, -c.im}; }

}  // namespace

LaurentPoly LaurentPoly::substitute(const std::vector<LaurentPoly>& values) const {
  if (values.size() != vars_.size()) throw DomainError("substitution arity mismatch");
  if (values.empty()) return *this;
  const auto& out_vars = values.front().vars();
  LaurentPoly result(out_vars);
  for (const auto& [e, c] : terms_) {
    LaurentPoly term = constant(out_vars, c);
    for (std::size_t k = 0; k < e.size(); ++k) {
      const LaurentPoly& v = values[k];
      if (e[k] >= 0 && e[k] % 2 == 0) {
        term = term * v.pow(static_cast<unsigned>(e[k] / 2));
        continue;
      }
      if (v.terms().size() != 1) throw DomainError("non-monomial value at a Laurent exponent");
      const auto& [ve, vc] = *v.terms().begin();
      GaussInt coef = 1;
      if (e[k] % 2 != 0) {
        if (!(vc == GaussInt(1))) throw DomainError("half-integer power of a non-unit");
      } else {
        long p = e[k] / 2;
        GaussInt base = p >= 0 ? vc : (is_unit(vc) ? unit_inverse(vc) : GaussInt());
        if (base.is_zero()) throw DomainError("negative power of a non-unit coefficient");
        for (long t = 0; t < (p >= 0 ? p : -p); ++t) coef = coef * base;
      }
      Exps scaled(ve.size());
      for (std::size_t j = 0; j < ve.size(); ++j) {
        if ((ve[j] * e[k]) % 2 != 0) throw DomainError("substitution leaves the half-integer lattice");
        scaled[j] = ve[j] * e[k] / 2;
      }
      term = term * monomial(out_vars, scaled, coef);
    }
    result = result + term;
  }
  return result;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[k];
      if (e[k] == 2) continue;
      if (e[k] % 2 == 0)
        mono += "^" + std::to_string(e[k] / 2);
      else
        mono += "^(" + std::to_string(e[k]) + "/2)";
    }
    std::string coef = to_string(c);
    std::string term;
    if (mono.empty())
      term = coef;
    else if (c == GaussInt(1))
      term = mono;
    else if (c == GaussInt(-1))
      term = "-" + mono;
    else if (c.im != 0 && c.re != 0)
      term = "(" + coef + ")*" + mono;
    else
      term = coef + "*" + mono;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

std::vector<int> subset_ranks(const VectorArrangement& a, Exec exec) {
  const std::size_t n = a.size();
  if (n > 26) throw DomainError("too many vectors for a state sum");
  const long long count = 1LL << n;
  std::vector<int> out(static_cast<std::size_t>(count));
  auto body = [&](long long S) {
    std::vector<Vec> rows;
    for (std::size_t s = 0; s < n; ++s)
      if (S >> s & 1) rows.push_back(a.vectors[s]);
    out[static_cast<std::size_t>(S)] =
        static_cast<int>(rank(Matrix::from_rows(rows, a.coord_len())));
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long long S = 0; S < count; ++S) body(S);
  } else {
    for (long long S = 0; S < count; ++S) body(S);
  }
  return out;
}

namespace {

// Number of subsets per (|S|, rank S).
std::map<std::pair<int, int>, long> rank_histogram(const VectorArrangement& a, Exec exec) {
  auto ranks = subset_ranks(a, exec);
  std::map<std::pair<int, int>, long> h;
  for (std::size_t S = 0; S < ranks.size(); ++S)
    ++h[{__builtin_popcountll(S), ranks[S]}];
  return h;
}

LaurentPoly q_power(int e2) { return LaurentPoly::monomial({"q"}, {e2}); }

LaurentPoly binom_q(int sign) {  // 1 + sign*q
  return LaurentPoly::constant({"q"}, 1) + q_power(2) * GaussInt(sign);
}

}  // namespace

LaurentPoly char_poly(const VectorArrangement& a, Exec exec) {
  const int k = static_cast<int>(a.dim());
  LaurentPoly p({"q"});
  for (auto [key, cnt] : rank_histogram(a, exec)) {
    auto [sz, r] = key;
    p = p + binom_q(1).pow(static_cast<unsigned>(k - r)) * GaussInt(sz % 2 ? -cnt : cnt);
  }
  return p;
}

LaurentPoly char_poly_bar(const VectorArrangement& a, Exec exec) {
  const int k = static_cast<int>(a.dim());
  LaurentPoly p({"q"});
  for (auto [key, cnt] : rank_histogram(a, exec)) {
    auto [sz, r] = key;
    p = p + q_power(2 * sz) * binom_q(-1).pow(static_cast<unsigned>(k - r)) * GaussInt(cnt);
  }
  return p;
}

LaurentPoly poincare_poly(const VectorArrangement& a, Exec exec) {
  LaurentPoly p({"q"});
  for (auto [key, cnt] : rank_histogram(a, exec)) {
    auto [sz, r] = key;
    p = p + binom_q(1).pow(static_cast<unsigned>(r)) * GaussInt(sz % 2 ? -cnt : cnt);
  }
  return p;
}

namespace {

LaurentPoly xy(int ex, int ey, long c = 1) {
  return LaurentPoly::monomial({"x", "y"}, {2 * ex, 2 * ey}, GaussInt(c));
}

}  // namespace

LaurentPoly tutte_poly(const VectorArrangement& a, Exec exec) {
  auto ranks = subset_ranks(a, exec);
  const int full = ranks.back();
  std::map<std::pair<int, int>, long> h;
  for (std::size_t S = 0; S < ranks.size(); ++S)
    ++h[{full - ranks[S], __builtin_popcountll(S) - ranks[S]}];
  LaurentPoly p({"x", "y"});
  const LaurentPoly xm = xy(1, 0) - xy(0, 0), ym = xy(0, 1) - xy(0, 0);
  for (auto [key, cnt] : h)
    p = p + xm.pow(static_cast<unsigned>(key.first)) * ym.pow(static_cast<unsigned>(key.second)) *
                GaussInt(cnt);
  return p;
}

LaurentPoly tutte_hat(const VectorArrangement& a, Exec exec) {
  const int k = static_cast<int>(a.dim());
  LaurentPoly p({"x", "y"});
  const LaurentPoly xp = xy(1, 0) + xy(0, 0), yp = xy(0, 1) + xy(0, 0);
  for (auto [key, cnt] : rank_histogram(a, exec)) {
    auto [sz, r] = key;
    p = p + xp.pow(static_cast<unsigned>(k - r)) * yp.pow(static_cast<unsigned>(sz - r)) *
                GaussInt(sz % 2 ? -cnt : cnt);
  }
  return p;
}

LaurentPoly framed_jones(const SignedArrangement& a, Exec exec) {
  const int n = static_cast<int>(a.size()), k = static_cast<int>(a.base.dim());
  auto ranks = subset_ranks(a.base, exec);
  std::map<std::tuple<int, int>, long> h;  // (|S|, dim H + dim W at tilde S)
  for (std::size_t S = 0; S < ranks.size(); ++S) {
    Mask t = tilde(a, static_cast<Mask>(S));
    int e = k - 2 * ranks[t] + __builtin_popcount(t);
    ++h[{__builtin_popcountll(S), e}];
  }
  const LaurentPoly qq = q_power(2) + q_power(-2);
  LaurentPoly p({"q"});
  for (auto [key, cnt] : h) {
    auto [sz, e] = key;
    GaussInt c = i_power(2 * sz - n) * GaussInt(cnt);
    p = p + q_power(2 * sz - n) * qq.pow(static_cast<unsigned>(e)) * c;
  }
  return p;
}

}  // namespace arrkh
