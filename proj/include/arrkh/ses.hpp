#pragma once

#include <string>
#include <vector>

#include "arrkh/khovanov.hpp"

namespace arrkh {

// Degree-preserving linear map between two complexes: image of each source generator.
struct ChainMap {
  std::vector<SparseVec> cols;
};

struct ShortExactSequence {
  ChainComplex sub, total, quotient;  // sub and quotient carry the grading shifts
  ChainMap iota, pi;
  std::string note;
};

struct SesGradeRow {
  Grade grade;
  std::size_t dim_sub = 0, dim_total = 0, dim_quotient = 0, rank_iota = 0, rank_pi = 0;
  bool exact = false;
};

struct SesReport {
  bool iota_chain = false, pi_chain = false;
  bool injective = false, surjective = false, composite_zero = false, exact_middle = false;
  bool les_consistent = false;
  std::vector<SesGradeRow> rows;
  std::vector<std::string> failures;

  bool ok() const {
    return iota_chain && pi_chain && injective && surjective && composite_zero && exact_middle &&
           les_consistent;
  }
};

ChainComplex shifted(const ChainComplex& c, const Grade& delta);
ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

// Long exact sequence bookkeeping: solves for the connecting ranks along every
// line of the homological axis and checks they stay within bounds.
bool les_consistent(const BettiTable& sub, const BettiTable& total, const BettiTable& quotient,
                    const ChainComplex& shape);

SesReport verify_ses(const ShortExactSequence& ses, Exec exec = Exec::parallel);

enum class SesKind { d, partial, poincare_d, tutte_d, tutte_partial_1 };
SesKind parse_ses_kind(const std::string& s);
std::string ses_kind_name(SesKind k);

ShortExactSequence deletion_restriction_ses(SesKind kind, const VectorArrangement& a, std::size_t l,
                                            Exec exec = Exec::parallel);
ShortExactSequence kh_ses(const SignedArrangement& a, std::size_t l, Exec exec = Exec::parallel);

// Index bookkeeping between [n] - l and [n].
Mask expand_mask(Mask S, std::size_t l);
Mask shrink_mask(Mask S, std::size_t l);

}  // namespace arrkh
