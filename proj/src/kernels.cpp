#include "diskcx/kernels.hpp"

#include <algorithm>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "diskcx/error.hpp"

namespace diskcx::kernels {

namespace {

// Exceptions must not leave an OpenMP region; keep the first and rethrow.
class FirstError {
 public:
  template <class F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mu_);
      if (!err_) err_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (err_) std::rethrow_exception(err_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr err_;
};

int face_index(const std::vector<Simplex>& sorted_faces, const Simplex& f) {
  auto it = std::lower_bound(sorted_faces.begin(), sorted_faces.end(), f);
  if (it == sorted_faces.end() || *it != f) throw InvariantError("boundary face missing from the face list");
  return static_cast<int>(it - sorted_faces.begin());
}

// Column j of ∂: (row, sign) pairs.
std::vector<std::pair<int, int>> boundary_column(const Simplex& s, const std::vector<Simplex>& lower) {
  std::vector<std::pair<int, int>> col;
  if (s.size() == 1) return {{0, 1}};
  Simplex f(s.size() - 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::copy(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i), f.begin());
    std::copy(s.begin() + static_cast<std::ptrdiff_t>(i) + 1, s.end(), f.begin() + static_cast<std::ptrdiff_t>(i));
    col.emplace_back(face_index(lower, f), i % 2 == 0 ? 1 : -1);
  }
  return col;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<int> intersection_table(const ChainSurface& s, const std::vector<CyclicWord>& words, Exec exec) {
  const long n = static_cast<long>(words.size());
  std::vector<int> table(static_cast<std::size_t>(n * n), 0);
  auto cell = [&](long i, long j) {
    table[static_cast<std::size_t>(i * n + j)] =
        i == j ? self_intersection(s, words[i]) : geometric_intersection(s, words[i], words[j]);
  };
  if (exec == Exec::serial) {
    for (long i = 0; i < n; ++i)
      for (long j = i; j < n; ++j) cell(i, j);
  } else {
    FirstError err;
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i)
      for (long j = i; j < n; ++j) err.run([&] { cell(i, j); });
    err.rethrow();
  }
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < i; ++j) table[static_cast<std::size_t>(i * n + j)] = table[static_cast<std::size_t>(j * n + i)];
  return table;
}

std::vector<DiskVerdict> classify_candidates(const ChainSurface& s, const std::vector<CyclicWord>& words, Exec exec) {
  const long n = static_cast<long>(words.size());
  std::vector<DiskVerdict> out(static_cast<std::size_t>(n));
  auto one = [&](long i) {
    DiskVerdict v;
    try {
      v.sides = bounds_disk_sides(s, CurveClass::make(s, words[i]));
      v.disk = !v.sides.empty();
    } catch (const DomainError&) {
      v = {};
    }
    out[static_cast<std::size_t>(i)] = v;
  };
  if (exec == Exec::serial) {
    for (long i = 0; i < n; ++i) one(i);
  } else {
    FirstError err;
#pragma omp parallel for schedule(dynamic, 64)
    for (long i = 0; i < n; ++i) err.run([&] { one(i); });
    err.rethrow();
  }
  return out;
}

IntegerMatrix boundary_matrix(const std::vector<Simplex>& k_faces, const std::vector<Simplex>& lower_faces, Exec exec) {
  const bool augmentation = !k_faces.empty() && k_faces.front().size() == 1;
  const int rows = augmentation ? 1 : static_cast<int>(lower_faces.size());
  const long cols = static_cast<long>(k_faces.size());
  std::vector<std::vector<std::pair<int, int>>> columns(static_cast<std::size_t>(cols));
  if (exec == Exec::serial) {
    for (long j = 0; j < cols; ++j) columns[j] = boundary_column(k_faces[j], lower_faces);
  } else {
    FirstError err;
#pragma omp parallel for schedule(static)
    for (long j = 0; j < cols; ++j) err.run([&] { columns[j] = boundary_column(k_faces[j], lower_faces); });
    err.rethrow();
  }
  IntegerMatrix m(rows, static_cast<int>(cols));
  for (long j = 0; j < cols; ++j)
    for (auto [r, sign] : columns[j]) m.add(r, static_cast<int>(j), mpz_class(sign));
  return m;
}

}  // namespace diskcx::kernels
