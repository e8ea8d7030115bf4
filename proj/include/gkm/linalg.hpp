#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gkm/rat.hpp"

namespace gkm {

struct RationalMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<RatVec> a;  // rows x cols

  RationalMatrix() = default;
  RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r, RatVec(c, Rat(0))) {}
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(std::vector<RatVec> rows_in, std::size_t cols);

  Rat& at(std::size_t i, std::size_t j) { return a[i][j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a[i][j]; }
};

struct RrefResult {
  std::size_t rank = 0;
  RationalMatrix rref;
  std::vector<std::size_t> pivot_cols;
  /// Kernel basis in the standard free-variable parametrization, one vector
  /// per free column, free columns ascending.
  std::vector<RatVec> kernel;
};

RrefResult rref_kernel(const RationalMatrix& m);

std::size_t matrix_rank(const RationalMatrix& m);

/// Particular solution of A x = rhs with all free variables set to zero,
/// or nullopt when the system is inconsistent.
std::optional<RatVec> solve_linear(const RationalMatrix& a, const RatVec& rhs);

/// Basis of the intersection of the row spans, computed by stacking the
/// kernel conditions of each span. A single span returns its canonical
/// (row echelon) basis; no spans return the ambient standard basis.
std::vector<RatVec> intersect_spans(const std::vector<std::vector<RatVec>>& spaces,
                                    std::size_t ambient_dim);

/// Incremental row reduction; membership and rank against everything added.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols) : cols_(cols) {}

  /// Reduces v against the rows seen so far; true iff it was independent
  /// (and is now part of the span).
  bool add(RatVec v);
  bool contains(RatVec v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  void reduce_in_place(RatVec& v) const;
  std::size_t cols_;
  std::vector<RatVec> rows_;          // pivot normalized to 1
  std::vector<std::size_t> pivots_;   // pivot column of rows_[i]
};

}  // namespace gkm
