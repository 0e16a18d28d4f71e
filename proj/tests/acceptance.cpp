// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>

#include "arrkh/io.hpp"
#include "arrkh/suites.hpp"

using namespace arrkh;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

Outcome from_report(const SuiteReport& r) {
  Outcome o;
  o.ok = r.ok();
  o.detail = r.ok() ? r.message + ", " + std::to_string(r.checks) + " checks"
                    : std::to_string(r.failures.size()) + " of " + std::to_string(r.checks) +
                          " checks failed, first: " + r.failures.front();
  return o;
}

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

VectorArrangement independent(std::size_t n) {
  std::vector<Vec> vs(n, Vec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) vs[i][i] = 1;
  return VectorArrangement::standard(n, vs);
}

const Theory kTheories[] = {Theory::d, Theory::partial, Theory::poincare, Theory::tutte_d, Theory::tutte_partial_1,
                            Theory::tutte_partial_2, Theory::tutte_partial_3, Theory::tutte_partial_4};

Outcome baby() {
  Outcome o;
  const VectorArrangement a = baby_arrangement();
  const LaurentPoly q3 = LaurentPoly::monomial({"q"}, {6}), q2 = LaurentPoly::monomial({"q"}, {4});
  o.expect(char_poly(a) == q3 + q2, "char_poly is " + char_poly(a).str());
  const CubeComplex cc = build_characteristic_d(a);
  const ChainComplex& c = cc.complex;
  o.expect(homology(c) == BettiTable{{{0, 2}, 1}, {{0, 3}, 1}}, "C_d Betti table differs");
  ExteriorElement top, mid;
  top.dim = mid.dim = 3;
  top.add(0b111, 1);
  mid.add(0b101, 1);
  mid.add(0b011, -1);
  mid.add(0b110, -1);
  o.expect(apply_differential(c, chain_from(c, 0, top, exterior_unit(0))).empty(), "x1x2x3 is not a cycle");
  o.expect(apply_differential(c, chain_from(c, 0, mid, exterior_unit(0))).empty(), "x1x3-x1x2-x2x3 is not a cycle");
  // Nothing maps into the empty vertex, so nonzero cycles there are not boundaries.
  bool hit = false;
  for (const auto& col : c.diff)
    for (const auto& [row, v] : col) hit = hit || c.block_of(row) == 0;
  o.expect(!hit, "the empty vertex receives a differential");
  o.detail = o.ok ? "q^3+q^2; classes at (0,3) and (0,2) spanned by the two cycles" : o.detail;
  return o;
}

Outcome empty_arrangements() {
  Outcome o;
  for (std::size_t k = 0; k <= 4; ++k) {
    const VectorArrangement a = VectorArrangement::standard(k, {});
    BettiTable want;
    for (std::size_t j = 0; j <= k; ++j) want[{0, static_cast<int>(j)}] = binom(k, j);
    o.expect(theory_homology(a, Theory::d) == want, "H_d of empty(" + std::to_string(k) + ")");
    const BettiTable p = theory_homology(a, Theory::partial);
    for (std::size_t j = 0; j <= k; ++j) {
      long total = 0;
      for (const auto& [g, d] : p)
        if (g[1] == static_cast<int>(j)) total += d;
      o.expect(total == binom(k, j), "H_partial of empty(" + std::to_string(k) + ") in degree " + std::to_string(j));
    }
  }
  if (o.ok) o.detail = "k = 0..4 give the exterior algebra";
  return o;
}

Outcome independent_arrangements() {
  Outcome o;
  std::size_t products = 0;
  for (std::size_t n = 0; n <= 4; ++n) {
    const VectorArrangement a = independent(n);
    const std::string tag = "independent(" + std::to_string(n) + ")";
    o.expect(theory_homology(a, Theory::d) == BettiTable{{{0, static_cast<int>(n)}, 1}}, tag + " H_d");
    o.expect(total_dim(theory_homology(a, Theory::partial)) == 1, tag + " H_partial total");
    for (std::size_t m = 0; m + n <= 4; ++m) {
      const VectorArrangement e = VectorArrangement::standard(m, {});
      for (Theory t : kTheories) {
        ++products;
        o.expect(theory_homology(product(a, e), t) == convolve(theory_homology(a, t), theory_homology(e, t)),
                 tag + " x empty(" + std::to_string(m) + ") " + theory_name(t) + " breaks Kunneth");
      }
    }
  }
  if (o.ok) o.detail = "n = 0..4 concentrated as expected; " + std::to_string(products) + " Kunneth products exact";
  return o;
}

Outcome degenerate() {
  Outcome o;
  std::size_t seen = 0;
  for (const auto& [name, a] : unsigned_corpus()) {
    if (!has_zero_vector(a)) continue;
    ++seen;
    o.expect(theory_homology(a, Theory::d).empty(), name + " has nonzero H_d");
  }
  const VectorArrangement z = VectorArrangement::standard(1, {{0}});
  o.expect(total_dim(theory_homology(z, Theory::partial)) == 4, "{Q^1;(0)} H_partial total is not 4");
  if (o.ok) o.detail = std::to_string(seen) + " corpus arrangements with a zero vector have empty C_d; {Q^1;(0)} gives 4";
  return o;
}

Outcome link_end_to_end() {
  SuiteOptions opt;
  const SuiteReport r = jones_suite(opt);
  Outcome o = from_report(r);
  for (const char* need : {"unknot", "positive kink", "negative kink", "hopf", "trefoil", "figure eight"})
    o.expect(std::find(r.tested.begin(), r.tested.end(), need) != r.tested.end(), std::string("missing ") + need);
  return o;
}

}  // namespace

int main() {
  SuiteOptions opt;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"baby example", baby},
      {"empty arrangements", empty_arrangements},
      {"maximal independent arrangements", independent_arrangements},
      {"degenerate hyperplane", degenerate},
      {"Euler characteristic suite", [&] { return from_report(euler_suite(opt)); }},
      {"short exact sequence suite", [&] { return from_report(ses_suite(opt)); }},
      {"dg suite", [&] { return from_report(dg_suite(opt, 100)); }},
      {"Gale suites", [&] { return from_report(gale_suite(opt)); }},
      {"signed cube soundness", [&] { return from_report(cube_suite(opt)); }},
      {"Reidemeister suite", [&] { return from_report(reidemeister_suite(opt)); }},
      {"link end-to-end", link_end_to_end},
      {"framing transfer", [] { return from_report(framing_transfer_check()); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << " -- " << o.detail << " ["
              << static_cast<long>(secs * 1000) << " ms]\n"
              << std::flush;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
