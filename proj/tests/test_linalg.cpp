#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkm/linalg.hpp"
#include "helpers.hpp"

using namespace gkm;
using gkm::testing::Rng;

namespace {

RationalMatrix make(std::vector<std::vector<int>> rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.a[i][j] = rows[i][j];
  }
  return m;
}

RatVec ratvec(std::vector<int> v) {
  RatVec out;
  for (int x : v) out.emplace_back(x);
  return out;
}

RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (auto& row : m.a) {
    for (auto& x : row) x = Rat(testing::random_int(rng, -4, 4));
  }
  return m;
}

bool same_span(const std::vector<RatVec>& a, const std::vector<RatVec>& b, std::size_t n) {
  RowReducer ra(n), rb(n);
  for (const auto& v : a) ra.add(v);
  for (const auto& v : b) rb.add(v);
  if (ra.rank() != rb.rank()) return false;
  for (const auto& v : a) {
    if (!rb.contains(v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rref_kernel on the stock examples") {
  RrefResult id3 = rref_kernel(make({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(id3.rank == 3);
  CHECK(id3.kernel.empty());

  RrefResult zero = rref_kernel(RationalMatrix(2, 3));
  CHECK(zero.rank == 0);
  CHECK(zero.kernel.size() == 3);

  RrefResult prop = rref_kernel(make({{1, 1}, {2, 2}}));
  CHECK(prop.rank == 1);
  REQUIRE(prop.kernel.size() == 1);
  CHECK(prop.kernel[0] == ratvec({-1, 1}));  // spans the same line as (1,-1)
}

TEST_CASE("rref is idempotent and kernels annihilate exactly") {
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = static_cast<std::size_t>(testing::random_int(rng, 1, 6));
    std::size_t cols = static_cast<std::size_t>(testing::random_int(rng, 1, 6));
    RationalMatrix m = random_matrix(rng, rows, cols);
    RrefResult rr = rref_kernel(m);
    RrefResult again = rref_kernel(rr.rref);
    CHECK(again.rref.a == rr.rref.a);
    CHECK(rr.rank + rr.kernel.size() == cols);
    for (const auto& v : rr.kernel) {
      for (std::size_t i = 0; i < rows; ++i) {
        Rat acc(0);
        for (std::size_t j = 0; j < cols; ++j) acc += m.a[i][j] * v[j];
        CHECK(acc == 0);
      }
    }
  }
}

TEST_CASE("solve_linear finds a particular solution or reports none") {
  auto sol = solve_linear(make({{1, 1}, {0, 1}}), ratvec({3, 1}));
  REQUIRE(sol.has_value());
  CHECK(*sol == ratvec({2, 1}));

  auto none = solve_linear(make({{1, 1}, {1, 1}}), ratvec({0, 1}));
  CHECK(!none.has_value());

  Rng rng(123);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t rows = static_cast<std::size_t>(testing::random_int(rng, 1, 5));
    std::size_t cols = static_cast<std::size_t>(testing::random_int(rng, 1, 5));
    RationalMatrix a = random_matrix(rng, rows, cols);
    RatVec x0;
    for (std::size_t j = 0; j < cols; ++j) x0.push_back(Rat(testing::random_int(rng, -3, 3)));
    RatVec rhs(rows, Rat(0));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) rhs[i] += a.a[i][j] * x0[j];
    }
    auto x = solve_linear(a, rhs);
    REQUIRE(x.has_value());
    for (std::size_t i = 0; i < rows; ++i) {
      Rat acc(0);
      for (std::size_t j = 0; j < cols; ++j) acc += a.a[i][j] * (*x)[j];
      CHECK(acc == rhs[i]);
    }
  }
}

TEST_CASE("intersect_spans on the stock examples") {
  std::vector<RatVec> e1e2 = {ratvec({1, 0, 0}), ratvec({0, 1, 0})};
  std::vector<RatVec> e2e3 = {ratvec({0, 1, 0}), ratvec({0, 0, 1})};

  auto same = intersect_spans({e1e2, e1e2}, 3);
  CHECK(same_span(same, e1e2, 3));

  auto mid = intersect_spans({e1e2, e2e3}, 3);
  REQUIRE(mid.size() == 1);
  CHECK(same_span(mid, {ratvec({0, 1, 0})}, 3));

  auto nothing = intersect_spans({{ratvec({1, 0, 0})}, {ratvec({0, 1, 0})}}, 3);
  CHECK(nothing.empty());

  auto single = intersect_spans({e2e3}, 3);
  CHECK(same_span(single, e2e3, 3));
}

TEST_CASE("dimension formula dim(A+B) + dim(A cap B) = dim A + dim B") {
  Rng rng(2718);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = static_cast<std::size_t>(testing::random_int(rng, 2, 6));
    std::size_t da = static_cast<std::size_t>(testing::random_int(rng, 0, static_cast<int>(n)));
    std::size_t db = static_cast<std::size_t>(testing::random_int(rng, 0, static_cast<int>(n)));
    std::vector<RatVec> a, b;
    for (std::size_t i = 0; i < da; ++i) a.push_back(random_matrix(rng, 1, n).a[0]);
    for (std::size_t i = 0; i < db; ++i) b.push_back(random_matrix(rng, 1, n).a[0]);

    RowReducer ra(n), rb(n), rsum(n);
    for (const auto& v : a) {
      ra.add(v);
      rsum.add(v);
    }
    for (const auto& v : b) {
      rb.add(v);
      rsum.add(v);
    }
    auto cap = intersect_spans({a, b}, n);
    CHECK(cap.size() + rsum.rank() == ra.rank() + rb.rank());
  }
}

TEST_CASE("RowReducer membership matches explicit span checks") {
  Rng rng(31415);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 5;
    RowReducer red(n);
    std::vector<RatVec> rows;
    for (int i = 0; i < 4; ++i) {
      RatVec v = random_matrix(rng, 1, n).a[0];
      rows.push_back(v);
      red.add(v);
    }
    // Any combination of the rows is contained; a fresh independent vector is not.
    RatVec combo(n, Rat(0));
    for (const auto& v : rows) {
      Rat c = testing::random_rat(rng);
      for (std::size_t j = 0; j < n; ++j) combo[j] += c * v[j];
    }
    CHECK(red.contains(combo));
    CHECK(red.rank() == matrix_rank(RationalMatrix::from_rows(rows, n)));
  }
}
