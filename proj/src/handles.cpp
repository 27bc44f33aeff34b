#include "diskcx/handles.hpp"

#include "diskcx/error.hpp"

namespace diskcx {

std::string to_string(SideSet s) {
  std::string out;
  if (s.o) out += 'O';
  if (s.e) out += 'E';
  return out;
}

char to_char(HandleSide s) { return s == HandleSide::O ? 'O' : 'E'; }

CyclicWord side_image(const CyclicWord& w, HandleSide side) {
  const int killed_parity = side == HandleSide::O ? 1 : 0;
  std::vector<Letter> kept;
  for (Letter l : w.letters()) {
    const int i = l < 0 ? -l : l;
    if (i % 2 != killed_parity) kept.push_back(l);
  }
  return cyclic_reduce(kept);
}

SideSet bounds_disk_sides(const ChainSurface& s, const CurveClass& c) {
  if (max_generator(c.word().letters()) > s.rank())
    throw DomainError("generators within g1..g2g", "curve uses a generator beyond the surface rank");
  return SideSet{side_image(c.word(), HandleSide::O).trivial(), side_image(c.word(), HandleSide::E).trivial()};
}

bool is_disk_vertex(const ChainSurface& s, const CyclicWord& w) {
  try {
    return !bounds_disk_sides(s, CurveClass::make(s, w)).empty();
  } catch (const DomainError&) {
    return false;
  }
}

HandleSide predicted_side(const Interval& J) {
  if (J.size() % 2 == 0) return HandleSide::O;
  return J.j % 2 == 0 ? HandleSide::E : HandleSide::O;
}

}  // namespace diskcx
