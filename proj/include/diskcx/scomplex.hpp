#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "diskcx/snf.hpp"

namespace diskcx {

/// Sorted vertex ids.
using Simplex = std::vector<int>;

/// Facet-listed simplicial complex. Lower faces are generated on demand.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Sorts each facet, drops duplicates and any facet contained in another.
  static SimplicialComplex from_facets(std::vector<Simplex> facets);

  const std::vector<int>& vertices() const noexcept { return vertices_; }
  const std::vector<Simplex>& facets() const noexcept { return facets_; }
  bool empty() const noexcept { return facets_.empty(); }
  /// -1 for the empty complex.
  int dimension() const noexcept;

  /// Faces of dimension 0..max_dim (all dimensions when max_dim < 0), each
  /// list sorted lexicographically.
  std::vector<std::vector<Simplex>> faces(int max_dim = -1) const;
  std::vector<long> f_vector() const;
  long euler_characteristic() const;

  /// Applies a vertex renaming (must be injective on the vertex set).
  SimplicialComplex relabeled(const std::vector<std::pair<int, int>>& mapping) const;

 private:
  std::vector<int> vertices_;
  std::vector<Simplex> facets_;
};

/// Facets are the maximal cliques (Bron–Kerbosch with pivoting).
SimplicialComplex flag_from_graph(const std::vector<int>& vertices, const std::vector<std::pair<int, int>>& edges);

/// Size of a maximum clique; 0 for an empty graph.
int max_clique_size(const std::vector<int>& vertices, const std::vector<std::pair<int, int>>& edges);

/// Boundary operator from dimension-k faces to dimension-(k-1) faces, with
/// sign (-1)^i for deleting the i-th vertex of the sorted simplex. For k = 0
/// it is the augmentation row of ones.
IntegerMatrix boundary_matrix(const std::vector<Simplex>& k_faces, const std::vector<Simplex>& lower_faces);

struct HomologyGroup {
  long betti = 0;
  std::vector<mpz_class> torsion;  // each > 1, dividing the next

  bool trivial() const noexcept { return betti == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Reduced integral homology by degree 0..dim.
struct HomologyProfile {
  std::vector<HomologyGroup> degrees;

  /// Z in degree `dim`, zero in every other degree.
  bool is_homology_sphere(int dim) const;
  long euler_characteristic() const;  // 1 + Σ(-1)^k b̃_k
  std::string summary() const;        // e.g. "(0, 0, Z)"
};

/// Reduced homology via Smith normal forms of the boundary maps; with
/// max_degree >= 0 only degrees up to it are computed (using the
/// (max_degree+1)-skeleton).
HomologyProfile reduced_homology(const SimplicialComplex& c, int max_degree = -1);

struct PseudomanifoldReport {
  bool pure = false;
  bool ridges_in_two_facets = false;
  bool facets_connected = false;
  long bad_ridges = 0;
  long components = 0;

  bool pass() const noexcept { return pure && ridges_in_two_facets && facets_connected; }
};

/// Closed pseudomanifold test in dimension `dim`.
PseudomanifoldReport pseudomanifold_check(const SimplicialComplex& c, int dim);

}  // namespace diskcx
