#include <random>

#include "doctest.h"

#include "diskcx/scomplex.hpp"
#include "oracles.hpp"

using namespace diskcx;

namespace {

long betti(const HomologyProfile& h, std::size_t k) { return k < h.degrees.size() ? h.degrees[k].betti : 0; }

SimplicialComplex octahedron() {
  std::vector<Simplex> f;
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) f.push_back({a, b, c});
  return SimplicialComplex::from_facets(f);
}

SimplicialComplex rp2() {
  return SimplicialComplex::from_facets({{1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5},
                                         {2, 3, 4}, {2, 3, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}});
}

}  // namespace

TEST_CASE("hollow triangle") {
  const auto c = SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}});
  const auto h = reduced_homology(c);
  CHECK(h.summary() == "(0, Z)");
  CHECK(h.is_homology_sphere(1));
  CHECK(c.euler_characteristic() == 0);
  CHECK(pseudomanifold_check(c, 1).pass());
}

TEST_CASE("octahedron boundary") {
  const auto c = octahedron();
  CHECK(c.f_vector() == std::vector<long>{6, 12, 8});
  const auto h = reduced_homology(c);
  CHECK(h.summary() == "(0, 0, Z)");
  CHECK(h.is_homology_sphere(2));
  CHECK(h.euler_characteristic() == 2);
  CHECK(pseudomanifold_check(c, 2).pass());
}

TEST_CASE("projective plane has 2-torsion") {
  const auto c = rp2();
  CHECK(c.euler_characteristic() == 1);
  const auto h = reduced_homology(c);
  CHECK(h.degrees[0].trivial());
  CHECK(h.degrees[1].betti == 0);
  REQUIRE(h.degrees[1].torsion.size() == 1);
  CHECK(h.degrees[1].torsion[0] == 2);
  CHECK(h.degrees[2].trivial());
  CHECK_FALSE(h.is_homology_sphere(2));
  CHECK(pseudomanifold_check(c, 2).pass());  // a pseudomanifold, just not a sphere
}

TEST_CASE("disconnected and non-pure complexes") {
  const auto two_points = SimplicialComplex::from_facets({{0}, {1}});
  CHECK(reduced_homology(two_points).is_homology_sphere(0));
  const auto c = SimplicialComplex::from_facets({{0, 1, 2}, {2, 3}, {5}});
  CHECK(c.dimension() == 2);
  const auto h = reduced_homology(c);
  CHECK(h.degrees[0].betti == 1);
  const auto pm = pseudomanifold_check(c, 2);
  CHECK_FALSE(pm.pure);
  CHECK_FALSE(pm.pass());
  // Two tetrahedron boundaries sharing a vertex: ridges fine, sphere fails.
  std::vector<Simplex> wedge;
  for (int off : {0, 3})
    for (int skip = 0; skip < 4; ++skip) {
      Simplex f;
      for (int v = 0; v < 4; ++v)
        if (v != skip) f.push_back(v + off);
      wedge.push_back(f);
    }
  const auto w = SimplicialComplex::from_facets(wedge);
  CHECK(pseudomanifold_check(w, 2).ridges_in_two_facets);
  CHECK(betti(reduced_homology(w), 2) == 2);
}

TEST_CASE("from_facets normalizes") {
  const auto c = SimplicialComplex::from_facets({{2, 1, 0}, {0, 1}, {1, 2, 0}, {3}});
  CHECK(c.facets() == std::vector<Simplex>{{0, 1, 2}, {3}});
  CHECK(c.vertices() == std::vector<int>{0, 1, 2, 3});
  const auto r = c.relabeled({{0, 10}, {1, 11}, {2, 12}, {3, 13}});
  CHECK(r.facets() == std::vector<Simplex>{{10, 11, 12}, {13}});
  CHECK(SimplicialComplex().dimension() == -1);
}

TEST_CASE("random flag complexes against rank oracle") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    CAPTURE(trial);
    const int n = 4 + trial % 5;
    std::bernoulli_distribution edge(0.35 + 0.05 * (trial % 7));
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<std::pair<int, int>> edges;
    std::vector<int> verts;
    for (int i = 0; i < n; ++i) {
      verts.push_back(i);
      for (int j = i + 1; j < n; ++j)
        if (edge(rng)) {
          adj[i][j] = adj[j][i] = 1;
          edges.emplace_back(i, j);
        }
    }
    const auto c = flag_from_graph(verts, edges);
    const auto faces = oracle::clique_faces(n, adj);
    CHECK(c.faces() == faces);
    CHECK(max_clique_size(verts, edges) == static_cast<int>(faces.size()));

    const auto h = reduced_homology(c);
    const auto ref = oracle::rank_profile(faces, {2, 3, 5, 7});
    for (std::size_t k = 0; k < faces.size(); ++k) CHECK(betti(h, k) == ref.betti_q[k]);
    // Universal coefficients: dim H̃_k(F_p) = b_k + t_p(k) + t_p(k-1).
    for (const auto& [p, dims] : ref.betti_mod) {
      auto t_p = [&](std::size_t k) {
        long count = 0;
        if (k < h.degrees.size())
          for (const auto& t : h.degrees[k].torsion) count += t % p == 0;
        return count;
      };
      for (std::size_t k = 0; k < faces.size(); ++k) CHECK(dims[k] == betti(h, k) + t_p(k) + (k ? t_p(k - 1) : 0));
    }
  }
}
