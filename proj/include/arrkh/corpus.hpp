#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "arrkh/khovanov.hpp"
#include "arrkh/links.hpp"

namespace arrkh {

inline constexpr std::uint64_t kCorpusSeed = 7;

// Raw engine output only, so draws match on every standard library.
class CorpusRng {
 public:
  explicit CorpusRng(std::uint64_t seed) : eng_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1))); }

 private:
  std::mt19937_64 eng_;
};

template <class T>
struct Named {
  std::string name;
  T value;
};

// Deterministic random arrangements with small integer entries, including
// zero vectors and parallel pairs.
std::vector<Named<VectorArrangement>> unsigned_corpus(std::uint64_t seed = kCorpusSeed, std::size_t count = 200,
                                                      std::size_t max_n = 5, std::size_t max_k = 3);
std::vector<Named<SignedArrangement>> signed_corpus(std::uint64_t seed = kCorpusSeed, std::size_t count = 50,
                                                    std::size_t max_n = 5, std::size_t max_k = 3);

struct MoveInstance {
  std::string name;
  SignedArrangement arrangement;
  MoveDescriptor move;
};
// At least one instance of each of the six moves.
std::vector<MoveInstance> move_instances();

// Inserts a kink of the given sign on an arc; labels are kept unique. Kinks with
// the same side curl to the same side of the strand, whatever their sign.
PlanarDiagram add_kink(const PlanarDiagram& d, long arc, int sign, int side = 0);

std::vector<Named<PlanarDiagram>> diagram_corpus();

VectorArrangement baby_arrangement();

}  // namespace arrkh
