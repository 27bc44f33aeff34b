#pragma once

// Reference computations used by the tests and the acceptance runner. They
// share nothing with the library beyond its value types.

#include <algorithm>
#include <cstdlib>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "diskcx/ribbon.hpp"

namespace oracle {

using Simplex = std::vector<int>;

// Lower Christoffel word of slope q/p in a = g1, b = g2 for coprime p, q,
// with a -> a^-1 when p < 0 and b -> b^-1 when q < 0. On the one-holed
// torus these are the simple curves, and i(p/q, r/s) = |ps - qr|.
inline std::vector<int> christoffel(int p, int q) {
  const int ap = std::abs(p), aq = std::abs(q), n = ap + aq;
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    const bool b = (i * aq) / n != ((i - 1) * aq) / n;
    out.push_back(b ? (q < 0 ? -2 : 2) : (p < 0 ? -1 : 1));
  }
  return out;
}

// Interval [j, m] of {1..2g} as the diagonal (j-1, m+1) of a polygon with
// vertices 0..2g+1; diagonals cross iff their endpoints strictly interleave.
inline bool diagonals_cross(const diskcx::Interval& a, const diskcx::Interval& b) {
  const int a0 = a.j - 1, a1 = a.m + 1, b0 = b.j - 1, b1 = b.m + 1;
  if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1) return false;
  auto inside = [&](int x) { return a0 < x && x < a1; };
  return inside(b0) != inside(b1);
}

inline long catalan(int n) {
  long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

// All cliques of a graph on n <= 16 vertices by subset enumeration, grouped
// by dimension and sorted.
inline std::vector<std::vector<Simplex>> clique_faces(int n, const std::vector<std::vector<char>>& adj) {
  std::vector<std::vector<Simplex>> by_dim;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Simplex s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    bool clique = true;
    for (std::size_t a = 0; a < s.size() && clique; ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b)
        if (!adj[s[a]][s[b]]) clique = false;
    if (!clique) continue;
    if (by_dim.size() < s.size()) by_dim.resize(s.size());
    by_dim[s.size() - 1].push_back(s);
  }
  for (auto& v : by_dim) std::sort(v.begin(), v.end());
  return by_dim;
}

// Dense boundary matrix ∂_k, with the augmentation row in degree 0.
inline std::vector<std::vector<long>> dense_boundary(const std::vector<std::vector<Simplex>>& f, std::size_t k) {
  if (k == 0) return {std::vector<long>(f[0].size(), 1)};
  std::vector<std::vector<long>> m(f[k - 1].size(), std::vector<long>(f[k].size(), 0));
  for (std::size_t j = 0; j < f[k].size(); ++j)
    for (std::size_t i = 0; i < f[k][j].size(); ++i) {
      Simplex face = f[k][j];
      face.erase(face.begin() + static_cast<long>(i));
      const auto row = std::lower_bound(f[k - 1].begin(), f[k - 1].end(), face) - f[k - 1].begin();
      m[static_cast<std::size_t>(row)][j] = i % 2 == 0 ? 1 : -1;
    }
  return m;
}

// Rank over Q by Gauss–Jordan elimination in exact rationals.
inline long rank_q(const std::vector<std::vector<long>>& a) {
  std::vector<std::vector<mpq_class>> m;
  for (const auto& row : a) m.emplace_back(row.begin(), row.end());
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return static_cast<long>(rank);
}

// Rank over F_p for a prime p.
inline long rank_mod(std::vector<std::vector<long>> m, long p) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  auto inv = [p](long a) {
    long r = 1;
    for (long e = p - 2, b = a; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const long iv = inv(m[rank][c]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const long f = m[r][c] * iv % p;
      for (std::size_t k = c; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return static_cast<long>(rank);
}

// Reduced Betti numbers over Q (index = degree) and over F_p.
struct RankProfile {
  std::vector<long> betti_q;
  std::vector<std::pair<long, std::vector<long>>> betti_mod;  // (p, dims)
};

inline RankProfile rank_profile(const std::vector<std::vector<Simplex>>& faces, std::initializer_list<long> primes) {
  RankProfile out;
  const std::size_t top = faces.size();
  auto betti = [&](auto&& rank) {
    std::vector<long> r(top + 1, 0), b(top, 0);
    for (std::size_t k = 0; k < top; ++k) r[k] = rank(dense_boundary(faces, k));
    for (std::size_t k = 0; k < top; ++k) b[k] = static_cast<long>(faces[k].size()) - r[k] - r[k + 1];
    return b;
  };
  out.betti_q = betti([](const auto& m) { return rank_q(m); });
  for (long p : primes) out.betti_mod.emplace_back(p, betti([p](const auto& m) { return rank_mod(m, p); }));
  return out;
}

}  // namespace oracle
