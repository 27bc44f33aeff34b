#pragma once

#include <vector>

#include "diskcx/handles.hpp"
#include "diskcx/scomplex.hpp"
#include "diskcx/snf.hpp"

// Data-parallel inner loops. Each kernel has a serial reference path and an
// OpenMP path; both produce identical output regardless of scheduling.
namespace diskcx::kernels {

enum class Exec { serial, parallel };

/// Row-major n×n table: off-diagonal entries are geometric intersection
/// numbers, diagonal entries self-intersection numbers. Words must be
/// pairwise distinct classes.
std::vector<int> intersection_table(const ChainSurface& s, const std::vector<CyclicWord>& words, Exec exec);

struct DiskVerdict {
  bool disk = false;
  SideSet sides;
};

/// is_disk_vertex plus the side set, for each candidate.
std::vector<DiskVerdict> classify_candidates(const ChainSurface& s, const std::vector<CyclicWord>& words, Exec exec);

/// Boundary operator assembly (see diskcx::boundary_matrix).
IntegerMatrix boundary_matrix(const std::vector<Simplex>& k_faces, const std::vector<Simplex>& lower_faces, Exec exec);

/// Threads the parallel path will use.
int max_threads();

}  // namespace diskcx::kernels
