#include "gkm/linalg.hpp"

#include <algorithm>
#include <utility>

#include "gkm/errors.hpp"

namespace gkm {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.a[i][i] = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::vector<RatVec> rows_in, std::size_t cols) {
  RationalMatrix m;
  m.rows = rows_in.size();
  m.cols = cols;
  m.a = std::move(rows_in);
  for (const auto& row : m.a) {
    if (row.size() != cols) throw Error(Errc::BadArgument, "ragged matrix rows");
  }
  return m;
}

namespace {

// Pivot choice: smallest absolute numerator, then smallest denominator, then
// lowest row. Keeps entry growth down on the integer-heavy matrices we see.
std::size_t pick_pivot(const std::vector<RatVec>& a, std::size_t from_row, std::size_t col,
                       std::size_t rows) {
  std::size_t best = rows;
  for (std::size_t i = from_row; i < rows; ++i) {
    if (a[i][col] == 0) continue;
    if (best == rows) {
      best = i;
      continue;
    }
    mpz_class bn = abs(a[best][col].get_num());
    mpz_class bd = a[best][col].get_den();
    mpz_class cn = abs(a[i][col].get_num());
    mpz_class cd = a[i][col].get_den();
    if (cn < bn || (cn == bn && cd < bd)) best = i;
  }
  return best;
}

}  // namespace

RrefResult rref_kernel(const RationalMatrix& m) {
  RrefResult res;
  res.rref = m;
  auto& a = res.rref.a;
  const std::size_t rows = m.rows, cols = m.cols;

  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = pick_pivot(a, row, col, rows);
    if (p == rows) continue;
    std::swap(a[row], a[p]);
    Rat inv = 1 / a[row][col];
    for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = res.pivot_cols.size();

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : res.pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < res.rank; ++i) v[res.pivot_cols[i]] = -a[i][free];
    res.kernel.push_back(std::move(v));
  }
  return res;
}

std::size_t matrix_rank(const RationalMatrix& m) { return rref_kernel(m).rank; }

std::optional<RatVec> solve_linear(const RationalMatrix& a, const RatVec& rhs) {
  if (rhs.size() != a.rows) throw Error(Errc::BadArgument, "solve_linear: size mismatch");
  RationalMatrix aug(a.rows, a.cols + 1);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) aug.a[i][j] = a.a[i][j];
    aug.a[i][a.cols] = rhs[i];
  }
  RrefResult rr = rref_kernel(aug);
  for (std::size_t i = 0; i < rr.rank; ++i) {
    if (rr.pivot_cols[i] == a.cols) return std::nullopt;  // 0 = 1 row
  }
  RatVec x(a.cols, Rat(0));
  for (std::size_t i = 0; i < rr.rank; ++i) x[rr.pivot_cols[i]] = rr.rref.a[i][a.cols];
  return x;
}

std::vector<RatVec> intersect_spans(const std::vector<std::vector<RatVec>>& spaces,
                                    std::size_t ambient_dim) {
  if (spaces.empty()) {
    std::vector<RatVec> basis;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
      RatVec e(ambient_dim, Rat(0));
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  if (spaces.size() == 1) {
    RrefResult rr = rref_kernel(RationalMatrix::from_rows(spaces[0], ambient_dim));
    std::vector<RatVec> basis(rr.rref.a.begin(), rr.rref.a.begin() + rr.rank);
    return basis;
  }
  // span(V) equals the kernel of the kernel conditions of V; stacking those
  // conditions for every space cuts out the intersection.
  std::vector<RatVec> stacked;
  for (const auto& space : spaces) {
    RrefResult rr = rref_kernel(RationalMatrix::from_rows(space, ambient_dim));
    for (const auto& k : rr.kernel) stacked.push_back(k);
  }
  return rref_kernel(RationalMatrix::from_rows(stacked, ambient_dim)).kernel;
}

void RowReducer::reduce_in_place(RatVec& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat& f = v[pivots_[i]];
    if (f == 0) continue;
    Rat scale = f;  // rows_ have pivot 1
    for (std::size_t j = pivots_[i]; j < cols_; ++j) v[j] -= scale * rows_[i][j];
  }
}

bool RowReducer::add(RatVec v) {
  if (v.size() != cols_) throw Error(Errc::BadArgument, "RowReducer: wrong vector length");
  reduce_in_place(v);
  std::size_t p = 0;
  while (p < cols_ && v[p] == 0) ++p;
  if (p == cols_) return false;
  Rat inv = 1 / v[p];
  for (std::size_t j = p; j < cols_; ++j) v[j] *= inv;
  // Keep rows ordered by pivot column.
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return true;
}

bool RowReducer::contains(RatVec v) const {
  if (v.size() != cols_) throw Error(Errc::BadArgument, "RowReducer: wrong vector length");
  reduce_in_place(v);
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

}  // namespace gkm
