#include "diskcx/gamma.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "diskcx/error.hpp"

namespace diskcx {

namespace {

// Appends every canonical cyclically reduced word of exactly `len` letters
// that extends `word`.
void extend(std::vector<Letter>& word, std::size_t len, int rank, std::vector<CyclicWord>& out) {
  if (word.size() == len) {
    if (word.back() == -word.front()) return;
    auto c = canonical(std::span<const Letter>(word));
    if (c.letters() == word) out.push_back(std::move(c));
    return;
  }
  for (int a = 1; a <= rank; ++a)
    for (Letter l : {a, -a}) {
      if (l == -word.back()) continue;
      word.push_back(l);
      extend(word, len, rank, out);
      word.pop_back();
    }
}

std::vector<CyclicWord> enumerate_canonical(int rank, int budget, kernels::Exec exec) {
  std::vector<Letter> firsts;
  for (int a = 1; a <= rank; ++a) firsts.insert(firsts.end(), {a, -a});
  std::vector<CyclicWord> out;
  for (int len = 1; len <= budget; ++len) {
    std::vector<std::vector<CyclicWord>> parts(firsts.size());
    const long n = static_cast<long>(firsts.size());
    auto one = [&](long i) {
      std::vector<Letter> w{firsts[static_cast<std::size_t>(i)]};
      extend(w, static_cast<std::size_t>(len), rank, parts[static_cast<std::size_t>(i)]);
    };
    if (exec == kernels::Exec::serial) {
      for (long i = 0; i < n; ++i) one(i);
    } else {
#pragma omp parallel for schedule(dynamic, 1)
      for (long i = 0; i < n; ++i) one(i);
    }
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  }
  return out;
}

bool by_length_then_word(const CyclicWord& a, const CyclicWord& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a < b;
}

}  // namespace

long long reduced_word_count(int genus, int budget) {
  const long long r2 = 4LL * genus;
  long long total = 0, level = r2;
  for (int len = 1; len <= budget; ++len) {
    total += level;
    if (total > (1LL << 60) / r2) return 1LL << 60;
    level *= r2 - 1;
  }
  return total;
}

GammaSample sample_gamma(const ChainSurface& s, int budget, long long cap, const std::vector<CyclicWord>& extra,
                         kernels::Exec exec) {
  if (budget < 1) throw DomainError("L >= 1", "word-length budget must be at least 1");
  const long long raw = reduced_word_count(s.genus(), budget);
  if (raw > cap)
    throw DomainError("candidate cap", "L = " + std::to_string(budget) + " needs " + std::to_string(raw) +
                                           " raw words, over the cap of " + std::to_string(cap));

  auto words = enumerate_canonical(s.rank(), budget, exec);
  const auto verdicts = kernels::classify_candidates(s, words, exec);
  std::vector<std::pair<CyclicWord, GammaVertex>> found;
  std::set<CyclicWord> seen;
  for (std::size_t i = 0; i < words.size(); ++i)
    if (verdicts[i].disk) {
      seen.insert(words[i]);
      found.emplace_back(words[i], GammaVertex{CurveClass::make(s, words[i]), verdicts[i].sides, false});
    }
  for (const auto& w : extra) {
    if (!is_disk_vertex(s, w))
      throw DomainError("disk-bounding injected curve", "injected word '" + render(w) + "' is not a disk vertex");
    auto c = CurveClass::make(s, w);
    if (!seen.insert(c.word()).second) continue;
    const auto sides = bounds_disk_sides(s, c);
    CyclicWord key = c.word();
    found.emplace_back(std::move(key), GammaVertex{std::move(c), sides, true});
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return by_length_then_word(a.first, b.first); });

  GammaSample out;
  out.genus = s.genus();
  out.budget = budget;
  out.raw_words = raw;
  std::vector<CyclicWord> classes;
  for (auto& [w, v] : found) {
    classes.push_back(w);
    out.vertices.push_back(std::move(v));
  }
  const auto table = kernels::intersection_table(s, classes, exec);
  const int n = static_cast<int>(classes.size());
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    ids[i] = i;
    for (int j = i + 1; j < n; ++j)
      if (table[static_cast<std::size_t>(i * n + j)] == 0) out.edges.emplace_back(i, j);
  }
  out.complex = flag_from_graph(ids, out.edges);
  return out;
}

int max_simplex_probe(const GammaSample& sample) {
  if (sample.vertices.empty()) throw DomainError("nonempty sample", "sample has no vertices");
  std::vector<int> ids(sample.vertices.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  const int dim = max_clique_size(ids, sample.edges) - 1;
  const int bound = 3 * sample.genus - 4 + 1;
  if (dim > bound) throw InvariantError("sample simplex exceeds the pants-decomposition bound");
  return dim;
}

ConnectivityProbe connectivity_probe(const GammaSample& sample) {
  ConnectivityProbe p;
  const auto h = reduced_homology(sample.complex, 1);
  if (!h.degrees.empty()) p.h0 = h.degrees[0];
  if (h.degrees.size() > 1) p.h1 = h.degrees[1];
  p.budget_artifact = !p.h0.trivial();
  return p;
}

}  // namespace diskcx
