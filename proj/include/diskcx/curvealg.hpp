#pragma once

#include <vector>

#include "diskcx/ribbon.hpp"
#include "diskcx/word.hpp"

namespace diskcx {

/// Isotopy class of an essential simple closed curve on a chain surface.
class CurveClass {
 public:
  /// Canonicalizes `w` and checks essentiality and simplicity.
  /// Throws DomainError naming the failed condition.
  static CurveClass make(const ChainSurface& s, const CyclicWord& w);

  const CyclicWord& word() const noexcept { return word_; }
  int self_intersection() const noexcept { return 0; }

  friend bool operator==(const CurveClass&, const CurveClass&) = default;

 private:
  explicit CurveClass(CyclicWord w) : word_(std::move(w)) {}
  CyclicWord word_;
};

/// Minimal number of intersection points between representatives of two
/// distinct free homotopy classes, by counting linked pairs of lifts in the
/// universal cover of the ribbon graph. Symmetric; invariant under
/// inversion and conjugation of either argument. Proper powers scale
/// multiplicatively.
///
/// Throws DomainError for trivial words and for two words of the same
/// unoriented class (use self_intersection instead).
int geometric_intersection(const ChainSurface& s, const CyclicWord& u, const CyclicWord& v);

/// Minimal self-intersection number; a k-th power of a class with
/// self-intersection n has k²·n + k - 1.
int self_intersection(const ChainSurface& s, const CyclicWord& u);

/// Nontrivial and not the boundary class (in either orientation).
bool is_essential(const ChainSurface& s, const CyclicWord& u);

/// True when u and v are the same unoriented free homotopy class.
bool same_class(const CyclicWord& u, const CyclicWord& v);

/// Homology class of u in the g_1..g_2g basis.
std::vector<int> abelianize(const ChainSurface& s, const CyclicWord& u);

/// Algebraic intersection from the chain's intersection form
/// (z'_i · z'_{i+1} = 1, all other pairs 0).
int algebraic_intersection(const ChainSurface& s, const CyclicWord& u, const CyclicWord& v);

namespace detail {
/// Linked-pair count between two cyclically reduced closed dart paths of
/// primitive, distinct classes; with `same`, counts ordered pairs of
/// distinct positions of one path (twice the self-intersection).
int linked_pairs(const RibbonGraph& g, const std::vector<Dart>& u, const std::vector<Dart>& v, bool same);

/// Relative position of two lines through a common dart `d` of the tree
/// cover: negative if `a` passes to the right of `b` when looking along
/// `d`, positive if to the left. Lines are given as closed paths with a
/// position index such that path[pos] == d. Throws InvariantError when the
/// two lines cross or coincide.
int side_order(const RibbonGraph& g, const std::vector<Dart>& a, int pos_a, const std::vector<Dart>& b, int pos_b);
}  // namespace detail

}  // namespace diskcx
