#pragma once

#include <string>
#include <utility>
#include <vector>

#include "diskcx/handles.hpp"
#include "diskcx/kernels.hpp"
#include "diskcx/scomplex.hpp"

namespace diskcx {

/// How x_J is picked among the two boundary components of N_J when |J| is
/// odd. Both rules first keep only components that bound a disk on the
/// predicted side.
enum class OddComponentRule {
  least_word,  ///< lexicographically least canonical word (default)
  other_word,  ///< the remaining component; exists to compare conventions
};

std::string to_string(OddComponentRule r);

struct XCurve {
  CurveClass curve;
  SideSet sides;
  /// Canonical words of every boundary component of N_J, in walk order.
  std::vector<CyclicWord> components;  // sorted
  /// More than one component qualified, so the rule had to choose.
  bool ambiguous = false;
};

/// The curve x_J: the boundary of N_J for |J| even, the component picked by
/// `rule` for |J| odd. Throws DomainError for invalid J and InvariantError
/// if the result is not an essential simple disk-bounding class.
XCurve x_curve(const ChainSurface& s, const Interval& J, OddComponentRule rule = OddComponentRule::least_word);

struct BBMVertex {
  Interval interval;
  XCurve x;
};

/// One vertex per nonempty proper interval, ordered by (j, m); g(2g+1) - 1
/// in total. Throws InvariantError if two intervals give the same class.
std::vector<BBMVertex> bbm_vertices(const ChainSurface& s, OddComponentRule rule = OddComponentRule::least_word);

struct BBMComplex {
  int genus = 0;
  OddComponentRule rule = OddComponentRule::least_word;
  std::vector<BBMVertex> vertices;
  std::vector<int> intersections;          // row-major, vertex order
  std::vector<std::pair<int, int>> edges;  // disjoint pairs, i < j
  SimplicialComplex complex;               // vertex ids are indices into `vertices`
  int ambiguous_choices = 0;
};

/// Flag complex on the disjointness graph of the BBM vertices.
BBMComplex build_X(const ChainSurface& s, OddComponentRule rule = OddComponentRule::least_word,
                   kernels::Exec exec = kernels::Exec::parallel);

}  // namespace diskcx
