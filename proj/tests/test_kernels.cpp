#ifdef _OPENMP
#include <omp.h>
#endif

#include "doctest.h"

#include "diskcx/bbm.hpp"
#include "diskcx/error.hpp"
#include "diskcx/kernels.hpp"

using namespace diskcx;
using kernels::Exec;

namespace {

struct Threads {
  explicit Threads(int n) {
#ifdef _OPENMP
    old_ = omp_get_max_threads();
    omp_set_num_threads(n);
#endif
    (void)n;
  }
  ~Threads() {
#ifdef _OPENMP
    omp_set_num_threads(old_);
#endif
  }
  int old_ = 1;
};

std::vector<CyclicWord> bbm_words(const ChainSurface& s) {
  std::vector<CyclicWord> out;
  for (const auto& v : bbm_vertices(s)) out.push_back(v.x.curve.word());
  return out;
}

}  // namespace

TEST_CASE("serial and parallel kernels agree") {
  Threads t(4);
  const auto s = ChainSurface::standard(3);
  const auto words = bbm_words(s);
  CHECK(kernels::intersection_table(s, words, Exec::serial) == kernels::intersection_table(s, words, Exec::parallel));

  std::vector<CyclicWord> mixed = words;
  for (const char* text : {"g1 g2", "g1 g1", "g2 g3 -g2 -g3", "g1 g3 g5"}) mixed.push_back(canonical(parse_letters(text)));
  const auto a = kernels::classify_candidates(s, mixed, Exec::serial);
  const auto b = kernels::classify_candidates(s, mixed, Exec::parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].disk == b[i].disk);
    CHECK(a[i].sides == b[i].sides);
  }
  CHECK_FALSE(a[words.size()].disk);      // g1 g2
  CHECK_FALSE(a[words.size() + 1].disk);  // not simple

  const auto x = build_X(s);
  const auto faces = x.complex.faces();
  for (std::size_t k = 0; k < faces.size(); ++k) {
    const auto& lower = k ? faces[k - 1] : faces[0];
    const auto ms = kernels::boundary_matrix(faces[k], lower, Exec::serial);
    const auto mp = kernels::boundary_matrix(faces[k], lower, Exec::parallel);
    CHECK(ms.rows() == mp.rows());
    REQUIRE(ms.entries().size() == mp.entries().size());
    for (std::size_t i = 0; i < ms.entries().size(); ++i) {
      CHECK(ms.entries()[i].row == mp.entries()[i].row);
      CHECK(ms.entries()[i].col == mp.entries()[i].col);
      CHECK(ms.entries()[i].value == mp.entries()[i].value);
    }
  }
}

TEST_CASE("errors inside parallel regions surface as exceptions") {
  Threads t(4);
  const auto s = ChainSurface::standard(2);
  std::vector<CyclicWord> dup = {canonical(parse_letters("g1")), canonical(parse_letters("g1"))};
  CHECK_THROWS_AS(kernels::intersection_table(s, dup, Exec::parallel), DomainError);
}
