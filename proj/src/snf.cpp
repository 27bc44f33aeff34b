#include "diskcx/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>

#include "diskcx/error.hpp"

namespace diskcx {

namespace {

struct Overflow {};

// 64-bit integer whose arithmetic throws Overflow instead of wrapping.
struct CheckedInt {
  std::int64_t v = 0;

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    CheckedInt r;
    if (__builtin_add_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    CheckedInt r;
    if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    CheckedInt r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend CheckedInt operator/(CheckedInt a, CheckedInt b) {
    if (a.v == std::numeric_limits<std::int64_t>::min() && b.v == -1) throw Overflow{};
    return CheckedInt{a.v / b.v};
  }
  friend bool operator==(CheckedInt a, CheckedInt b) { return a.v == b.v; }
};

bool is_zero(const CheckedInt& a) { return a.v == 0; }
bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
CheckedInt magnitude(const CheckedInt& a) {
  if (a.v == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return CheckedInt{a.v < 0 ? -a.v : a.v};
}
mpz_class magnitude(const mpz_class& a) { return abs(a); }
bool mag_less(const CheckedInt& a, const CheckedInt& b) { return magnitude(a).v < magnitude(b).v; }
bool mag_less(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
bool is_unit(const CheckedInt& a) { return a.v == 1 || a.v == -1; }
bool is_unit(const mpz_class& a) { return mpz_cmpabs_ui(a.get_mpz_t(), 1) == 0; }
mpz_class to_mpz(const CheckedInt& a) { return mpz_class(static_cast<long>(a.v)); }
mpz_class to_mpz(const mpz_class& a) { return a; }

template <class T>
T from_mpz(const mpz_class& x);
template <>
CheckedInt from_mpz<CheckedInt>(const mpz_class& x) {
  if (!x.fits_slong_p()) throw Overflow{};
  return CheckedInt{x.get_si()};
}
template <>
mpz_class from_mpz<mpz_class>(const mpz_class& x) {
  return x;
}

template <class T>
using SparseRow = std::vector<std::pair<int, T>>;

// row_r -= f * row_p, dropping column `skip` and zero results.
template <class T>
SparseRow<T> axpy(const SparseRow<T>& r, const T& f, const SparseRow<T>& p, int skip) {
  SparseRow<T> out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, k = 0;
  while (i < r.size() || k < p.size()) {
    if (k == p.size() || (i < r.size() && r[i].first < p[k].first)) {
      if (r[i].first != skip) out.push_back(r[i]);
      ++i;
    } else if (i == r.size() || p[k].first < r[i].first) {
      if (p[k].first != skip) out.emplace_back(p[k].first, T{} - f * p[k].second);
      ++k;
    } else {
      if (r[i].first != skip) {
        T v = r[i].second - f * p[k].second;
        if (!is_zero(v)) out.emplace_back(r[i].first, std::move(v));
      }
      ++i;
      ++k;
    }
  }
  return out;
}

template <class T>
const T* find_entry(const SparseRow<T>& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, int c) { return e.first < c; });
  return (it != row.end() && it->first == col && !is_zero(it->second)) ? &it->second : nullptr;
}

template <class T>
std::vector<mpz_class> dense_snf(std::vector<std::vector<T>> a) {
  std::vector<mpz_class> diag;
  const std::size_t R = a.size(), C = R ? a[0].size() : 0;
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
  };
  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    // Least-magnitude pivot in the trailing block.
    std::size_t pr = R, pc = C;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (!is_zero(a[i][j]) && (pr == R || mag_less(a[i][j], a[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == R) break;
    std::swap(a[t], a[pr]);
    swap_cols(t, pc);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (is_zero(a[i][t])) continue;
        const T q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < C; ++j)
          if (!is_zero(a[t][j])) a[i][j] = a[i][j] - q * a[t][j];
        clean = clean && is_zero(a[i][t]);
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (is_zero(a[t][j])) continue;
        const T q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < R; ++i)
          if (!is_zero(a[i][t])) a[i][j] = a[i][j] - q * a[i][t];
        clean = clean && is_zero(a[t][j]);
      }
      if (clean) break;
      // A remainder is smaller than the pivot; move it into place.
      std::size_t br = t, bc = t;
      for (std::size_t i = t + 1; i < R; ++i)
        if (!is_zero(a[i][t]) && mag_less(a[i][t], a[br][bc])) {
          br = i;
          bc = t;
        }
      for (std::size_t j = t + 1; j < C; ++j)
        if (!is_zero(a[t][j]) && mag_less(a[t][j], a[br][bc])) {
          br = t;
          bc = j;
        }
      std::swap(a[t], a[br]);
      swap_cols(t, bc);
    }
    diag.push_back(to_mpz(magnitude(a[t][t])));
  }
  return diag;
}

template <class T>
SmithForm snf_impl(const IntegerMatrix& m) {
  const int R = m.rows(), C = m.cols();
  std::vector<std::map<int, mpz_class>> acc(static_cast<std::size_t>(R));
  for (const auto& e : m.entries()) acc[e.row][e.col] += e.value;
  std::vector<SparseRow<T>> rows(static_cast<std::size_t>(R));
  std::vector<std::vector<int>> col_rows(static_cast<std::size_t>(C));
  for (int r = 0; r < R; ++r)
    for (const auto& [c, v] : acc[r])
      if (sgn(v) != 0) {
        rows[r].emplace_back(c, from_mpz<T>(v));
        col_rows[c].push_back(r);
      }

  std::vector<char> row_live(static_cast<std::size_t>(R), 1), col_live(static_cast<std::size_t>(C), 1);
  std::size_t units = 0;
  std::vector<int> holders;
  for (bool progress = true; progress;) {
    progress = false;
    for (int c = 0; c < C; ++c) {
      if (!col_live[c]) continue;
      holders.clear();
      for (int r : col_rows[c])
        if (row_live[r] && find_entry(rows[r], c)) holders.push_back(r);
      std::sort(holders.begin(), holders.end());
      holders.erase(std::unique(holders.begin(), holders.end()), holders.end());
      col_rows[c] = holders;
      if (holders.empty()) {
        col_live[c] = 0;
        continue;
      }
      int p = -1;
      for (int r : holders)
        if (is_unit(*find_entry(rows[r], c)) && (p < 0 || rows[r].size() < rows[p].size())) p = r;
      if (p < 0) continue;
      const T pivot = *find_entry(rows[p], c);
      for (int r : holders) {
        if (r == p) continue;
        const T f = *find_entry(rows[r], c) * pivot;  // pivot is ±1
        rows[r] = axpy(rows[r], f, rows[p], c);
        for (const auto& e : rows[p])
          if (e.first != c) col_rows[e.first].push_back(r);
      }
      row_live[p] = 0;
      col_live[c] = 0;
      ++units;
      progress = true;
    }
  }

  // Dense remainder on the rows and columns that still carry entries.
  std::vector<int> live_rows, live_cols;
  std::vector<int> col_index(static_cast<std::size_t>(C), -1);
  for (int c = 0; c < C; ++c)
    if (col_live[c]) {
      col_index[c] = static_cast<int>(live_cols.size());
      live_cols.push_back(c);
    }
  for (int r = 0; r < R; ++r)
    if (row_live[r] && !rows[r].empty()) live_rows.push_back(r);
  std::vector<std::vector<T>> dense(live_rows.size(), std::vector<T>(live_cols.size()));
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (const auto& [c, v] : rows[live_rows[i]]) {
      if (col_index[c] < 0) throw InvariantError("sparse elimination left an entry in a retired column");
      dense[i][col_index[c]] = v;
    }
  auto rest = dense_snf(std::move(dense));

  SmithForm out;
  out.diagonal.assign(units, mpz_class(1));
  out.diagonal.insert(out.diagonal.end(), rest.begin(), rest.end());
  auto& d = out.diagonal;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[j] % d[i] == 0) continue;
      mpz_class g = gcd(d[i], d[j]);
      mpz_class l = (d[i] / g) * d[j];
      d[i] = g;
      d[j] = l;
    }
  out.rank = d.size();
  return out;
}

}  // namespace

IntegerMatrix IntegerMatrix::from_dense(const std::vector<std::vector<long>>& rows) {
  IntegerMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols()) throw DomainError("rectangular matrix", "ragged dense matrix");
    for (int c = 0; c < m.cols(); ++c)
      if (rows[r][c] != 0) m.add(r, c, mpz_class(rows[r][c]));
  }
  return m;
}

void IntegerMatrix::add(int row, int col, const mpz_class& value) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) throw DomainError("entry inside the matrix", "matrix index out of range");
  entries_.push_back({row, col, value});
}

std::vector<mpz_class> SmithForm::torsion() const {
  std::vector<mpz_class> t;
  for (const auto& d : diagonal)
    if (d > 1) t.push_back(d);
  return t;
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
  try {
    return snf_impl<CheckedInt>(m);
  } catch (const Overflow&) {
    auto out = snf_impl<mpz_class>(m);
    out.promoted = true;
    return out;
  }
}

SmithForm smith_normal_form_exact(const IntegerMatrix& m) { return snf_impl<mpz_class>(m); }

}  // namespace diskcx
