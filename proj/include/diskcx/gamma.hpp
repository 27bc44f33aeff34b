#pragma once

#include <string>
#include <utility>
#include <vector>

#include "diskcx/handles.hpp"
#include "diskcx/kernels.hpp"
#include "diskcx/scomplex.hpp"

namespace diskcx {

struct GammaVertex {
  CurveClass curve;
  SideSet sides;
  bool injected = false;  // supplied by the caller rather than enumerated
};

struct GammaSample {
  int genus = 0;
  int budget = 0;           // L
  long long raw_words = 0;  // reduced words of length <= L examined
  std::vector<GammaVertex> vertices;
  std::vector<std::pair<int, int>> edges;
  SimplicialComplex complex;  // vertex ids index `vertices`
};

inline constexpr long long default_candidate_cap = 1'000'000;

/// Number of freely reduced words of length 1..L on 2g generators.
long long reduced_word_count(int genus, int budget);

/// Disk-bounding classes with canonical length <= L, plus any `extra`
/// words (which must themselves be disk vertices), and the flag complex of
/// their disjointness graph. Vertices are ordered by (length, word).
/// Throws DomainError for L < 1 or when the raw word count exceeds `cap`.
GammaSample sample_gamma(const ChainSurface& s, int budget, long long cap = default_candidate_cap,
                         const std::vector<CyclicWord>& extra = {}, kernels::Exec exec = kernels::Exec::parallel);

/// Dimension of the largest simplex (clique size - 1). Throws DomainError on
/// an empty sample and InvariantError if it exceeds 3g - 4 + b.
int max_simplex_probe(const GammaSample& sample);

struct ConnectivityProbe {
  HomologyGroup h0;  // reduced
  HomologyGroup h1;
  /// H̃0 ≠ 0: the sample is disconnected, an artifact of the word budget.
  bool budget_artifact = false;
  std::string label = "probe (subcomplex homology can differ from Γ)";
};

ConnectivityProbe connectivity_probe(const GammaSample& sample);

}  // namespace diskcx
