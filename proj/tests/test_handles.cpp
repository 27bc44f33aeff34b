#include "doctest.h"

#include "diskcx/handles.hpp"

using namespace diskcx;

namespace {
CyclicWord w(const char* text) { return canonical(parse_letters(text)); }
}  // namespace

TEST_CASE("chain circles bound on their parity side") {
  const auto s = ChainSurface::standard(3);
  for (int i = 1; i <= 6; ++i) {
    const Letter l = i;
    const auto c = CurveClass::make(s, canonical(std::span<const Letter>(&l, 1)));
    const auto sides = bounds_disk_sides(s, c);
    CHECK(sides.o == (i % 2 == 1));
    CHECK(sides.e == (i % 2 == 0));
  }
}

TEST_CASE("side images") {
  CHECK(side_image(w("g1 g2 -g1 -g2"), HandleSide::O).trivial());
  CHECK(side_image(w("g1 g2 -g1 -g2"), HandleSide::E).trivial());
  CHECK(render(side_image(w("g1 g2 g3"), HandleSide::O)) == "g2");
  CHECK(side_image(w("g1 -g2 g3 g2"), HandleSide::O).trivial());
  CHECK_FALSE(side_image(w("g1 -g2 g3 g2"), HandleSide::E).trivial());
}

TEST_CASE("disk vertices") {
  const auto s = ChainSurface::standard(2);
  CHECK(is_disk_vertex(s, w("g1")));
  CHECK(is_disk_vertex(s, w("g1 g2 -g1 -g2")));
  CHECK_FALSE(is_disk_vertex(s, w("g1 g2")));                  // simple, bounds on neither side
  CHECK_FALSE(is_disk_vertex(s, w("g1 g1")));                  // not simple
  CHECK_FALSE(is_disk_vertex(s, s.boundary_word()));           // peripheral
  CHECK_FALSE(is_disk_vertex(s, CyclicWord{}));                // trivial
  CHECK(to_string(bounds_disk_sides(s, CurveClass::make(s, w("g1 g2 -g1 -g2")))) == "OE");
}

TEST_CASE("predicted side") {
  CHECK(predicted_side({1, 2}) == HandleSide::O);
  CHECK(predicted_side({2, 3}) == HandleSide::O);
  CHECK(predicted_side({1, 3}) == HandleSide::O);
  CHECK(predicted_side({3, 3}) == HandleSide::O);
  CHECK(predicted_side({2, 4}) == HandleSide::E);
  CHECK(predicted_side({2, 2}) == HandleSide::E);
  CHECK(to_char(HandleSide::E) == 'E');
}
