#include "doctest.h"

#include "diskcx/bbm.hpp"
#include "diskcx/error.hpp"
#include "diskcx/split.hpp"

using namespace diskcx;

namespace {

std::vector<CurveClass> named(const ChainSurface& s, const std::vector<std::string>& names) {
  std::vector<CurveClass> out;
  for (const auto& n : names) out.push_back(named_curve(s, n));
  return out;
}

std::vector<std::pair<int, int>> table(const SplitReport& r) {
  std::vector<std::pair<int, int>> out;
  for (const auto& c : r.components) out.emplace_back(c.genus, c.boundary);
  return out;
}

// Rank of the span of integer vectors, by fraction-free elimination.
int rank_of(std::vector<std::vector<long>> m) {
  int rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = static_cast<std::size_t>(rank);
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[static_cast<std::size_t>(rank)]);
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < m.size(); ++r) {
      const long a = m[static_cast<std::size_t>(rank)][c], b = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = a * m[r][k] - b * m[static_cast<std::size_t>(rank)][k];
    }
    ++rank;
  }
  return rank;
}

// Independent checks of a cut:
//  * the cell graph, fed to the homology engine, has H̃0 = t - 1 and
//    rank H1 = Σ(1 - χ_i);
//  * for one boundary circle, capping it off does not change H1, and the
//    complement of k+1 disjoint curves in a closed surface has
//    1 + (k+1) - rank⟨[c_i]⟩ components.
void check_with_oracles(const ChainSurface& s, const std::vector<CurveClass>& curves, const SplitReport& r) {
  std::vector<Simplex> facets;
  int next = r.cells.nodes;
  for (auto [a, b] : r.cells.arcs) {  // subdivide: the graph may have loops and multi-edges
    facets.push_back({a, next});
    facets.push_back({b, next});
    ++next;
  }
  for (int v = 0; v < r.cells.nodes; ++v) facets.push_back({v});
  const auto h = reduced_homology(SimplicialComplex::from_facets(facets), 1);
  long expected_h1 = 0;
  for (const auto& c : r.components) expected_h1 += 1 - c.euler;
  CHECK(h.degrees[0].betti == static_cast<long>(r.components.size()) - 1);
  CHECK(h.degrees[1].betti == expected_h1);
  CHECK(h.degrees[1].torsion.empty());

  std::vector<std::vector<long>> classes;
  for (const auto& c : curves) {
    std::vector<long> v;
    for (int x : abelianize(s, c.word())) v.push_back(x);
    classes.push_back(v);
  }
  CHECK(static_cast<int>(r.components.size()) == 1 + static_cast<int>(curves.size()) - rank_of(classes));
  CHECK(bookkeeping_check(r));
}

}  // namespace

TEST_CASE("cutting the genus-2 surface") {
  const auto s = ChainSurface::standard(2);
  struct Case {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> components;
  };
  const std::vector<Case> cases = {
      {{"z1"}, {{1, 3}}},
      {{"z1", "z3"}, {{0, 5}}},
      {{"x:1-2"}, {{1, 2}, {1, 1}}},
  };
  for (const auto& c : cases) {
    const auto curves = named(s, c.names);
    const auto r = cut_along(s, curves);
    CHECK(table(r) == c.components);
    CHECK(r.euler_additive);
    CHECK(r.boundary_count);
    check_with_oracles(s, curves, r);
  }
  // The separating curve has the one-holed torus on one side only.
  const auto r = cut_along(s, named(s, {"x:1-2"}));
  CHECK(r.sides[0].first != r.sides[0].second);
}

TEST_CASE("cutting along every simplex of X") {
  for (int g = 2; g <= 3; ++g) {
    const auto s = ChainSurface::standard(g);
    const auto x = build_X(s);
    std::size_t cuts = 0;
    for (const auto& facet : x.complex.faces()) {
      for (const auto& simplex : facet) {
        std::vector<CurveClass> curves;
        for (int v : simplex) curves.push_back(x.vertices[static_cast<std::size_t>(v)].x.curve);
        const auto r = cut_along(s, curves);
        check_with_oracles(s, curves, r);
        ++cuts;
      }
    }
    CHECK(cuts == static_cast<std::size_t>(g == 2 ? 44 : 902));
  }
}

TEST_CASE("cut_along rejects bad curve systems") {
  const auto s = ChainSurface::standard(2);
  CHECK_THROWS_AS(cut_along(s, named(s, {"z1", "z2"})), DomainError);
  CHECK_THROWS_AS(cut_along(s, named(s, {"z1", "z1"})), DomainError);
  CHECK_THROWS_AS(cut_along(s, named(s, {"z3", "x:1-2"})), DomainError);
  CHECK_THROWS_AS(named_curve(s, "z5"), DomainError);
  CHECK_THROWS_AS(named_curve(s, "x:1-4"), DomainError);
  CHECK_THROWS_AS(named_curve(s, "y1"), DomainError);

  const CellSurface cs(s.graph());
  CHECK(cs.genus() == 2);
  CHECK(cs.boundary_count() == 1);
  const auto& g = s.graph();
  // A boundary-parallel curve leaves an annulus.
  CHECK_THROWS_AS(cut_along(cs, {boundary_walks(g).front().darts}), DomainError);
  // Crossing paths are caught by the realization itself.
  CHECK_THROWS_AS(cut_along(cs, {s.path_of(canonical(parse_letters("g1"))), s.path_of(canonical(parse_letters("g2")))}),
                  DomainError);
  // Not a closed reduced path.
  const Dart d = s.path_of(canonical(parse_letters("g2"))).front();
  CHECK_THROWS_AS(cut_along(cs, {{d, g.rev(d)}}), DomainError);
  CHECK_THROWS_AS(cut_along(cs, {}), DomainError);
}

TEST_CASE("bookkeeping identities") {
  SplitReport closed;
  closed.ambient_genus = 2;
  closed.ambient_boundary = 0;
  closed.curves = 1;
  closed.components = {{1, 1, -1}, {1, 1, -1}};
  CHECK(bookkeeping_check(closed));  // g = 0 - 2 + 2 + (1 + 1)

  SplitReport open;
  open.ambient_genus = 2;
  open.ambient_boundary = 1;
  open.curves = 2;
  open.components = {{0, 5, -3}};
  CHECK(bookkeeping_check(open));

  SplitReport fake = closed;
  fake.components = {{2, 2, -4}};
  CHECK_FALSE(bookkeeping_check(fake));
}

TEST_CASE("dimension and connectivity formulas") {
  struct Row {
    int g, b, d_dim, d_conn;
  };
  for (const auto& r : std::vector<Row>{{2, 0, 2, 2}, {3, 0, 4, 4}, {2, 1, 2, 2}, {0, 4, 0, 0}, {0, 5, 1, 1}, {1, 2, 1, 0}}) {
    CAPTURE(r.g);
    CAPTURE(r.b);
    const auto d = dims(r.g, r.b);
    CHECK(d.d_dim == r.d_dim);
    CHECK(d.d_conn == r.d_conn);
  }
  for (int g = 2; g <= 10; ++g) {
    CHECK(dims(g, 0).d_dim == 2 * g - 2);
    CHECK(dims(g, 0).d_conn == 2 * g - 2);
  }
  CHECK_THROWS_AS(dims(1, 0), DomainError);
  CHECK_THROWS_AS(dims(0, 3), DomainError);
  CHECK_THROWS_AS(dims(-1, 6), DomainError);
}
