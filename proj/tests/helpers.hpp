#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "arrkh/io.hpp"
#include "arrkh/suites.hpp"

namespace testing {

using namespace arrkh;

inline LaurentPoly qpoly(int exp2, GaussInt c = 1) { return LaurentPoly::monomial({"q"}, {exp2}, c); }
inline LaurentPoly xy(int x2, int y2, GaussInt c = 1) { return LaurentPoly::monomial({"x", "y"}, {x2, y2}, c); }

inline VectorArrangement arr(std::size_t k, std::vector<Vec> vs) { return VectorArrangement::standard(k, std::move(vs)); }

inline SignedArrangement signed_arr(std::size_t k, std::vector<Vec> vs, const std::string& signs) {
  SignedArrangement a{arr(k, std::move(vs)), {}};
  for (char c : signs) a.signs.push_back(c == '+' ? Sign::plus : Sign::minus);
  return a;
}

inline VectorArrangement braid() { return arr(3, {{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}); }

inline std::string betti_str(const BettiTable& b, int den) { return betti_to_json(b, den).dump(); }

}  // namespace testing
