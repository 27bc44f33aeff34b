#pragma once

#include <string>
#include <vector>

#include "diskcx/curvealg.hpp"

namespace diskcx {

/// The fattening of a ribbon graph: a disk per vertex, a band per edge, one
/// boundary circle per face orbit.
class CellSurface {
 public:
  explicit CellSurface(RibbonGraph g);
  const RibbonGraph& graph() const noexcept { return graph_; }
  int euler_characteristic() const noexcept { return graph_.euler_characteristic(); }
  int boundary_count() const noexcept { return boundary_count_; }
  int genus() const noexcept { return (2 - euler_characteristic() - boundary_count_) / 2; }

 private:
  RibbonGraph graph_;
  int boundary_count_ = 0;
};

struct SplitComponent {
  int genus = 0;
  int boundary = 0;
  int euler = 0;
  friend bool operator==(const SplitComponent&, const SplitComponent&) = default;
};

struct SplitReport {
  int ambient_genus = 0;
  int ambient_boundary = 0;
  int curves = 0;  // k + 1
  /// Sorted by (genus, boundary) descending.
  std::vector<SplitComponent> components;
  /// Per input curve: component indices on its left and right side.
  std::vector<std::pair<int, int>> sides;
  bool euler_additive = false;
  bool boundary_count = false;
  /// The cut surface as disks glued along arcs: nodes are band strips and
  /// vertex-disk regions, one edge per gluing arc. Homotopy equivalent to
  /// the cut surface.
  struct CellGraph {
    int nodes = 0;
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> component;  // per node, indexing `components`
  } cells;
};

/// Splits the surface along disjoint closed curves, each given as a closed
/// cyclically reduced dart path. Curves are realized as parallel strands in
/// the bands; a band's strands are ordered by where their lifts diverge in
/// the tree cover. Throws DomainError if the curves cross, repeat a class,
/// or a resulting component is a disk or a boundary-parallel annulus.
SplitReport cut_along(const CellSurface& s, const std::vector<std::vector<Dart>>& cycles);

/// Same, for curve classes on a chain surface. The classes must be pairwise
/// disjoint and distinct.
SplitReport cut_along(const ChainSurface& s, const std::vector<CurveClass>& curves);

/// "z<i>" for the chain circle z'_i, "x:<j>-<m>" for x_J.
CurveClass named_curve(const ChainSurface& s, const std::string& name);

/// Σχ_i = χ and Σb_i = 2(k+1) + b; for closed ambient data additionally
/// g = k - t + 2 + Σg_i.
bool bookkeeping_check(const SplitReport& r);

struct Dims {
  int d_dim = 0;   // dimension of the disk complex
  int d_conn = 0;  // the complex is (d_conn - 1)-connected
};

/// Throws DomainError unless g, b >= 0 and -χ = 2g - 2 + b >= 2.
Dims dims(int genus, int boundary);

}  // namespace diskcx
