#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace diskcx {

/// Sparse integer matrix with arbitrary-precision entries.
class IntegerMatrix {
 public:
  struct Entry {
    int row;
    int col;
    mpz_class value;
  };

  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}
  static IntegerMatrix from_dense(const std::vector<std::vector<long>>& rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  /// Appends an entry; duplicates at the same position are summed.
  void add(int row, int col, const mpz_class& value);
  const std::vector<Entry>& entries() const noexcept { return entries_; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Entry> entries_;
};

struct SmithForm {
  /// Nonzero invariant factors d_1 | d_2 | ... | d_r, all positive.
  std::vector<mpz_class> diagonal;
  std::size_t rank = 0;
  /// True when the fixed-width pass overflowed and the computation was
  /// redone in arbitrary precision.
  bool promoted = false;

  /// Invariant factors greater than one.
  std::vector<mpz_class> torsion() const;
};

/// Smith normal form over the integers. Unit pivots are eliminated sparsely
/// first; the remainder is diagonalized densely, always pivoting on the
/// nonzero entry of least absolute value. Arithmetic starts in checked 64-bit
/// integers and is redone with GMP on any overflow.
SmithForm smith_normal_form(const IntegerMatrix& m);

/// Same, but forces arbitrary precision from the start (test hook).
SmithForm smith_normal_form_exact(const IntegerMatrix& m);

}  // namespace diskcx
