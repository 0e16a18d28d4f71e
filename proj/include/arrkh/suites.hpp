#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arrkh/corpus.hpp"
#include "arrkh/ses.hpp"

namespace arrkh {

struct SuiteOptions {
  std::size_t max_n = 5;
  std::uint64_t seed = kCorpusSeed;
  Exec exec = Exec::parallel;
};

struct SuiteReport {
  std::string suite;
  std::vector<std::string> tested;
  std::vector<std::string> failures;
  std::size_t checks = 0;
  std::string message;

  bool ok() const { return failures.empty(); }
  void expect(bool cond, const std::string& what);
  void merge(const SuiteReport& other);
};

// Names accepted by run_suite; "all" runs every suite.
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

SuiteReport euler_suite(const SuiteOptions& opt);
SuiteReport ses_suite(const SuiteOptions& opt);
SuiteReport reidemeister_suite(const SuiteOptions& opt);
SuiteReport gale_suite(const SuiteOptions& opt);
SuiteReport jones_suite(const SuiteOptions& opt);
SuiteReport dg_suite(const SuiteOptions& opt, std::size_t draws = 100);
SuiteReport cube_suite(const SuiteOptions& opt);
SuiteReport framing_transfer_check(Exec exec = Exec::parallel);

// Individual checks, reused by the unit tests.
LaurentPoly tutte_partial_1_expected(const VectorArrangement& a, Exec exec = Exec::parallel);
bool tutte_gale_swap_holds(const VectorArrangement& a, Exec exec = Exec::parallel);
// Tensor swap from C^T_{d1}(a) to C^T_{d3}(gale_dual(a)); needs a itself to be a
// Gale dual so the two space tables coincide literally.
std::optional<std::string> tutte_swap_failure(const VectorArrangement& a, Exec exec = Exec::parallel);
// Same for the signed cube of v and gale_dual(v), with the edge scalars of v transported.
std::optional<std::string> signed_swap_failure(const SignedArrangement& v, Exec exec = Exec::parallel);
std::optional<std::string> circle_identity_failure(const PlanarDiagram& d, int shading, Exec exec = Exec::parallel);
// Self-writhe of every link component, sorted.
std::vector<long> component_framings(const PlanarDiagram& d);

}  // namespace arrkh
