#include "doctest.h"

#include "diskcx/error.hpp"
#include "diskcx/ribbon.hpp"

using namespace diskcx;

TEST_CASE("standard chain surface") {
  for (int g = 2; g <= 6; ++g) {
    CAPTURE(g);
    const auto s = ChainSurface::standard(g);
    const auto& r = s.graph();
    CHECK(r.num_vertices() == 2 * g - 1);
    CHECK(r.num_edges() == 4 * g - 2);
    CHECK(r.euler_characteristic() == 1 - 2 * g);
    CHECK(boundary_walks(r).size() == 1);
    CHECK(r.genus() == g);
    for (int v = 0; v < r.num_vertices(); ++v) CHECK(r.degree(v) == 4);
    for (int i = 1; i <= 2 * g; ++i) {
      const auto word = s.word_of_walk(s.core_walk(i));
      REQUIRE(word.length() == 1);
      CHECK(word.letters()[0] == i);
    }
  }
  CHECK_THROWS_AS(ChainSurface::standard(1), DomainError);
}

TEST_CASE("boundary word at genus 2") {
  // Orbit trace of rot∘rev on the standard dart layout, worked by hand.
  const auto s = ChainSurface::standard(2);
  CHECK(canonical(s.boundary_word()) == canonical(parse_letters("g1 -g2 -g4 -g1 -g3 g4 g3 g2")));
  // The boundary is a product of commutators: it dies in homology.
  std::vector<int> h(4, 0);
  for (Letter l : s.boundary_word().letters()) h[std::abs(l) - 1] += l > 0 ? 1 : -1;
  CHECK(h == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("ribbon graph validation") {
  CHECK_THROWS_AS(RibbonGraph({0, 1}, {0, 1}), DomainError);        // rev has fixed points
  CHECK_THROWS_AS(RibbonGraph({1, 0}, {0, 0}), DomainError);        // rot not a permutation
  CHECK_THROWS_AS(RibbonGraph({1, 0, 3}, {0, 1, 2}), DomainError);  // odd dart count
  const RibbonGraph loop({1, 0}, {1, 0});
  CHECK(loop.num_vertices() == 1);
  CHECK(boundary_walks(loop).size() == 2);  // an annulus
  CHECK(loop.genus() == 0);
}

TEST_CASE("from_parts rejects broken labels") {
  const auto s = ChainSurface::standard(2);
  auto gen = s.dart_generators();
  auto circ = s.dart_circles();
  CHECK_NOTHROW(ChainSurface::from_parts(s.graph(), 2, gen, circ));
  auto bad = gen;
  for (auto& x : bad)
    if (x == 1) x = 2;
  CHECK_THROWS_AS(ChainSurface::from_parts(s.graph(), 2, bad, circ), DomainError);
  auto bad_circ = circ;
  bad_circ[0] = 4;
  CHECK_THROWS_AS(ChainSurface::from_parts(s.graph(), 2, gen, bad_circ), DomainError);
  CHECK_THROWS_AS(ChainSurface::from_parts(s.graph(), 3, gen, circ), DomainError);
}

TEST_CASE("intervals") {
  CHECK(proper_intervals(2).size() == 9);
  CHECK(proper_intervals(3).size() == 20);
  CHECK(proper_intervals(4).size() == 35);
  CHECK_THROWS_AS((Interval{1, 4}.validate(2)), DomainError);
  CHECK_THROWS_AS((Interval{3, 2}.validate(2)), DomainError);
  CHECK_THROWS_AS((Interval{0, 2}.validate(2)), DomainError);
  CHECK_NOTHROW((Interval{2, 4}.validate(2)));
}

TEST_CASE("neighbourhoods of intervals") {
  const auto s = ChainSurface::standard(3);
  for (const auto& J : proper_intervals(3)) {
    CAPTURE(J.j);
    CAPTURE(J.m);
    // N_J is a chain of |J| circles: one boundary for even length, two for odd.
    CHECK(s.subgraph_boundary_walks(J).size() == (J.size() % 2 == 0 ? 1u : 2u));
  }
}

TEST_CASE("path_of realizes words as reduced closed paths") {
  const auto s = ChainSurface::standard(3);
  const auto& g = s.graph();
  for (const char* text : {"g1", "g2 g5", "g1 -g2 g3 g2", "g6 -g4 g2 -g1"}) {
    const auto w = canonical(parse_letters(text));
    const auto p = s.path_of(w);
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Dart d = p[i], e = p[(i + 1) % p.size()];
      CHECK(g.head(d) == g.tail(e));
      CHECK(e != g.rev(d));
    }
    CHECK(canonical(s.word_of_walk(p)) == w);
  }
}
