#pragma once

#include <string>

#include "diskcx/curvealg.hpp"

namespace diskcx {

/// The two handlebodies of the standard splitting of S³ along Σ_g.
/// O is where the odd-indexed chain circles bound disks, E the even side.
enum class HandleSide { O, E };

/// Subset of {O, E}.
struct SideSet {
  bool o = false;
  bool e = false;

  bool empty() const noexcept { return !o && !e; }
  bool contains(HandleSide s) const noexcept { return s == HandleSide::O ? o : e; }
  friend bool operator==(const SideSet&, const SideSet&) = default;
};

/// "O", "E", "OE" or "" for the empty set.
std::string to_string(SideSet s);
char to_char(HandleSide s);

/// Image of a word in π₁ of the handlebody: generators whose parity matches
/// the side are deleted, the rest are kept, and the result is reduced.
CyclicWord side_image(const CyclicWord& w, HandleSide side);

/// Sides on which the curve bounds a compressing disk. For a simple curve
/// on a handlebody boundary, bounding a disk is the same as dying in π₁.
SideSet bounds_disk_sides(const ChainSurface& s, const CurveClass& c);

/// Essential, simple, and bounds a disk on at least one side. Never throws
/// for malformed curves; returns false instead.
bool is_disk_vertex(const ChainSurface& s, const CyclicWord& w);

/// The side whose disks are banded together to produce x_J: O when |J| is
/// even or j is odd, E when |J| is odd and j is even.
HandleSide predicted_side(const Interval& J);

}  // namespace diskcx
