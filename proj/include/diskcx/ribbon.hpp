#pragma once

#include <span>
#include <vector>

#include "diskcx/word.hpp"

namespace diskcx {

using Dart = int;

/// A closed walk, stored as its dart sequence. Consecutive darts satisfy
/// head(d_k) == tail(d_{k+1}), cyclically.
struct Walk {
  std::vector<Dart> darts;
};

/// Combinatorial oriented surface with boundary: darts 0..n-1, an edge
/// involution `rev` without fixed points, and a rotation `rot` whose orbits
/// are the vertices (counterclockwise dart order). Faces of the fattening
/// are the orbits of rot∘rev.
class RibbonGraph {
 public:
  RibbonGraph() = default;
  /// Throws DomainError if rev is not a fixed-point-free involution or rot
  /// is not a permutation of the same dart set.
  RibbonGraph(std::vector<Dart> rev, std::vector<Dart> rot);

  int num_darts() const noexcept { return static_cast<int>(rev_.size()); }
  int num_edges() const noexcept { return num_darts() / 2; }
  int num_vertices() const noexcept { return static_cast<int>(vertex_darts_.size()); }

  Dart rev(Dart d) const { return rev_[d]; }
  Dart rot(Dart d) const { return rot_[d]; }
  Dart face_next(Dart d) const { return rot_[rev_[d]]; }

  int tail(Dart d) const { return vertex_of_[d]; }
  int head(Dart d) const { return vertex_of_[rev_[d]]; }
  int degree(int v) const { return static_cast<int>(vertex_darts_[v].size()); }
  /// Darts at vertex v in rotation order, starting from the smallest dart.
  const std::vector<Dart>& vertex_darts(int v) const { return vertex_darts_[v]; }
  /// Number of counterclockwise steps from `from` to `to` around their
  /// common tail vertex.
  int ccw_steps(Dart from, Dart to) const;

  int euler_characteristic() const noexcept { return num_vertices() - num_edges(); }
  int genus() const;

  const std::vector<Dart>& rev_table() const noexcept { return rev_; }
  const std::vector<Dart>& rot_table() const noexcept { return rot_; }

 private:
  std::vector<Dart> rev_, rot_;
  std::vector<int> vertex_of_, slot_;
  std::vector<std::vector<Dart>> vertex_darts_;
};

/// Orbits of the face permutation rot∘rev, each started at its smallest dart,
/// ordered by that dart.
std::vector<Walk> boundary_walks(const RibbonGraph& r);

/// Boundary walks of the regular neighbourhood of the sub-ribbon graph whose
/// darts are flagged in `keep` (which must be closed under rev). At each
/// vertex the walk turns to the next kept dart in the ambient rotation.
std::vector<Walk> sub_boundary_walks(const RibbonGraph& r, std::span<const char> keep);

/// Nonempty proper interval {j, ..., m} of {1, ..., 2g}.
struct Interval {
  int j = 1;
  int m = 1;

  int size() const noexcept { return m - j + 1; }
  bool contains(int i) const noexcept { return j <= i && i <= m; }
  /// Throws DomainError unless 1 <= j <= m <= 2g and (j, m) != (1, 2g).
  void validate(int genus) const;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// All nonempty proper intervals of {1..2g}, ordered by (j, m).
std::vector<Interval> proper_intervals(int genus);

/// The surface Σ_g¹ as the fattening of a chain of 2g circles z'_1..z'_2g.
///
/// z'_1 and z'_2g are one-edge loops at p_1 and p_{2g-1}; z'_i for
/// 2 <= i <= 2g-1 is a pair of parallel edges (tree edge f_i, chord c_i)
/// joining p_{i-1} and p_i. Contracting the path f_2..f_{2g-1} leaves one
/// chord per circle, and chord c_i read in its positive direction spells g_i.
class ChainSurface {
 public:
  /// Throws DomainError for g < 2.
  static ChainSurface standard(int genus);

  /// Rebuilds a chain surface from a ribbon graph plus its labels: the signed
  /// generator carried by each dart (0 for tree darts) and the chain circle
  /// of each dart. All invariants are re-verified; throws DomainError if any
  /// fails.
  static ChainSurface from_parts(RibbonGraph graph, int genus, std::vector<int> dart_generator,
                                 std::vector<int> dart_circle);

  const RibbonGraph& graph() const noexcept { return graph_; }
  int genus() const noexcept { return genus_; }
  int rank() const noexcept { return 2 * genus_; }
  int generator_of(Dart d) const { return dart_generator_[d]; }
  int circle_of(Dart d) const { return dart_circle_[d]; }
  const std::vector<int>& dart_generators() const noexcept { return dart_generator_; }
  const std::vector<int>& dart_circles() const noexcept { return dart_circle_; }
  int base_vertex() const noexcept { return base_vertex_; }

  /// Word of the unique boundary walk, cyclically reduced.
  const CyclicWord& boundary_word() const noexcept { return boundary_word_; }

  /// Core walk of circle z'_i (1 <= i <= 2g), oriented so it spells g_i.
  Walk core_walk(int i) const;

  /// Spanning-tree contraction of a closed walk, cyclically reduced.
  CyclicWord word_of_walk(std::span<const Dart> darts) const;
  CyclicWord word_of_walk(const Walk& w) const { return word_of_walk(w.darts); }

  /// Boundary walks of the neighbourhood N_J of z'_j ∪ ... ∪ z'_m.
  std::vector<Walk> subgraph_boundary_walks(const Interval& J) const;

  /// Closed, cyclically reduced dart path realizing a word in g_1..g_2g.
  /// Throws DomainError if the word uses generators beyond 2g.
  std::vector<Dart> path_of(const CyclicWord& w) const;

 private:
  ChainSurface() = default;
  void finish();

  RibbonGraph graph_;
  int genus_ = 0;
  std::vector<int> dart_generator_;
  std::vector<int> dart_circle_;
  int base_vertex_ = 0;
  std::vector<std::vector<Dart>> tree_path_;  // base vertex -> v through tree darts
  std::vector<Dart> chord_;                   // positive chord dart of g_i, index i
  CyclicWord boundary_word_;
};

}  // namespace diskcx
