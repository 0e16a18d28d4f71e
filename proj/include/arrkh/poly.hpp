#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "arrkh/arrangement.hpp"

namespace arrkh {

struct GaussInt {
  mpz_class re = 0, im = 0;

  GaussInt() = default;
  GaussInt(long r, long i = 0) : re(r), im(i) {}
  GaussInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool operator==(const GaussInt& o) const { return re == o.re && im == o.im; }
  GaussInt operator+(const GaussInt& o) const { return {re + o.re, im + o.im}; }
  GaussInt operator-(const GaussInt& o) const { return {re - o.re, im - o.im}; }
  GaussInt operator-() const { return {-re, -im}; }
  GaussInt operator*(const GaussInt& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
};

// i^e for any integer e.
GaussInt i_power(long e);
std::string to_string(const GaussInt& z);

// Laurent polynomial with exponents stored doubled (half-integer steps).
class LaurentPoly {
 public:
  using Exps = std::vector<int>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static LaurentPoly constant(std::vector<std::string> vars, const GaussInt& c);
  // Monomial c * prod var_k^(exp2[k]/2).
  static LaurentPoly monomial(std::vector<std::string> vars, Exps exp2, const GaussInt& c = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exps, GaussInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exps& exp2, const GaussInt& c);
  GaussInt coeff(const Exps& exp2) const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const GaussInt& c) const;
  LaurentPoly pow(unsigned e) const;
  bool operator==(const LaurentPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

  // Replace variable k by values[k] (all in a common variable set). A term
  // with a negative or odd doubled exponent needs a monomial value.
  LaurentPoly substitute(const std::vector<LaurentPoly>& values) const;

  std::string str() const;

 private:
  void check_vars(const LaurentPoly& o) const;
  std::vector<std::string> vars_;
  std::map<Exps, GaussInt> terms_;
};

// rank of {nu_s : s in S} for all S in increasing mask order.
std::vector<int> subset_ranks(const VectorArrangement& a, Exec exec = Exec::parallel);

LaurentPoly char_poly(const VectorArrangement& a, Exec exec = Exec::parallel);
LaurentPoly char_poly_bar(const VectorArrangement& a, Exec exec = Exec::parallel);
LaurentPoly poincare_poly(const VectorArrangement& a, Exec exec = Exec::parallel);
LaurentPoly tutte_poly(const VectorArrangement& a, Exec exec = Exec::parallel);
LaurentPoly tutte_hat(const VectorArrangement& a, Exec exec = Exec::parallel);
LaurentPoly framed_jones(const SignedArrangement& a, Exec exec = Exec::parallel);

}  // namespace arrkh
