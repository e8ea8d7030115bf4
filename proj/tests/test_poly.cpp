#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkm/poly.hpp"
#include "helpers.hpp"

using namespace gkm;
using gkm::testing::Rng;

namespace {

Polynomial x(std::size_t rank, std::size_t i) { return Polynomial::variable(rank, i); }

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

TEST_CASE("parse_polynomial canonical examples") {
  Polynomial f = parse_polynomial("x1^2 - 2*x2", 2);
  CHECK(f.coefficient({2, 0}) == 1);
  CHECK(f.coefficient({0, 1}) == -2);
  CHECK(f.terms().size() == 2);

  Polynomial square = parse_polynomial("(x1+x2)^2", 2);
  Polynomial expanded = x(2, 0) * x(2, 0) + Rat(2) * (x(2, 0) * x(2, 1)) + x(2, 1) * x(2, 1);
  CHECK(square == expanded);

  Polynomial rational = parse_polynomial("3/2*x1 - 1/2", 1);
  CHECK(rational.coefficient({1}) == Rat(3, 2));
  CHECK(rational.coefficient({0}) == Rat(-1, 2));

  CHECK(parse_polynomial("-x1^2", 1) == -(x(1, 0) * x(1, 0)));
  CHECK(parse_polynomial("0", 2).is_zero());
}

TEST_CASE("parse_polynomial rejects bad input with positions") {
  try {
    parse_polynomial("x4", 3);
    FAIL("expected UnknownVariable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownVariable);
    CHECK(e.position() == 1);
  }

  try {
    parse_polynomial("x1 + ", 2);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }

  try {
    parse_polynomial("2 x1", 2);  // juxtaposition is not multiplication
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(e.position() == 3);
  }

  try {
    parse_polynomial("x1^-2", 2);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }

  try {
    parse_polynomial("1/0", 2);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
}

TEST_CASE("print then parse is the identity") {
  Rng rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t rank = static_cast<std::size_t>(testing::random_int(rng, 1, 3));
    Polynomial f = testing::random_polynomial(rng, rank, 4, 6);
    CHECK(parse_polynomial(f.str(), rank) == f);
  }
  CHECK(parse_polynomial(Polynomial::zero(2).str(), 2).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng(555);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rank = static_cast<std::size_t>(testing::random_int(rng, 1, 3));
    Polynomial f = testing::random_polynomial(rng, rank, 3, 4);
    Polynomial g = testing::random_polynomial(rng, rank, 3, 4);
    Polynomial h = testing::random_polynomial(rng, rank, 3, 4);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("homogeneous decomposition is consistent") {
  Rng rng(808);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial f = testing::random_polynomial(rng, 2, 4, 6);
    Polynomial sum = Polynomial::zero(2);
    for (const auto& [d, comp] : f.homogeneous_components()) {
      CHECK(comp.is_homogeneous());
      CHECK(comp.total_degree() == d);
      sum += comp;
    }
    CHECK(sum == f);
  }
}

TEST_CASE("weyl_apply on the stock examples") {
  WeylElement swap12 = testing::swap_matrix(2, 0, 1);
  CHECK(weyl_apply(swap12, x(2, 0)) == x(2, 1));

  WeylElement any = testing::mat({{1, 2}, {0, 1}});
  CHECK(weyl_apply(any, Polynomial::constant(2, Rat(5))) == Polynomial::constant(2, Rat(5)));

  WeylElement flip = testing::mat({{-1}});
  CHECK(weyl_apply(flip, x(1, 0) * x(1, 0)) == x(1, 0) * x(1, 0));
}

TEST_CASE("weyl_apply is a degree-preserving ring homomorphism matching the lattice action") {
  Rng rng(909);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t rank = static_cast<std::size_t>(testing::random_int(rng, 1, 3));
    WeylElement w = testing::random_unimodular(rng, rank);
    Polynomial f = testing::random_polynomial(rng, rank, 3, 4);
    Polynomial g = testing::random_polynomial(rng, rank, 3, 4);
    CHECK(weyl_apply(w, f * g) == weyl_apply(w, f) * weyl_apply(w, g));
    CHECK(weyl_apply(w, f + g) == weyl_apply(w, f) + weyl_apply(w, g));
    if (!f.is_zero()) CHECK(weyl_apply(w, f).total_degree() == f.total_degree());

    Weight lambda = testing::random_weight(rng, rank);
    CHECK(weyl_apply(w, Polynomial::linear_form(lambda)) ==
          Polynomial::linear_form(w.apply(lambda)));
  }
}

TEST_CASE("divisibility_order on the stock examples") {
  Polynomial f = x(2, 0) * x(2, 0) - x(2, 1) * x(2, 1);
  CHECK(divisibility_order(f, Weight{1, -1}) == 1);

  Polynomial diff = x(2, 0) - x(2, 1);
  CHECK(divisibility_order(diff * diff, Weight{1, -1}) == 2);

  CHECK(!divisibility_order(Polynomial::zero(2), Weight{1, -1}).has_value());

  try {
    divisibility_order(f, Weight{2, 0});
    FAIL("expected NotPrimitive");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPrimitive);
  }
}

TEST_CASE("divisibility_order is additive on products") {
  Rng rng(616);
  int done = 0;
  while (done < 200) {
    std::size_t rank = static_cast<std::size_t>(testing::random_int(rng, 1, 3));
    Weight chi = testing::random_primitive_weight(rng, rank);
    Polynomial f = testing::random_nonzero_polynomial(rng, rank, 3, 3);
    Polynomial g = testing::random_nonzero_polynomial(rng, rank, 3, 3);
    auto of = divisibility_order(f, chi);
    auto og = divisibility_order(g, chi);
    auto ofg = divisibility_order(f * g, chi);
    REQUIRE(of.has_value());
    REQUIRE(og.has_value());
    REQUIRE(ofg.has_value());
    CHECK(*ofg == *of + *og);
    ++done;
  }
}

TEST_CASE("divisibility_order is equivariant") {
  Rng rng(717);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rank = static_cast<std::size_t>(testing::random_int(rng, 1, 3));
    Weight chi = testing::random_primitive_weight(rng, rank);
    WeylElement w = testing::random_unimodular(rng, rank);
    Polynomial f = testing::random_nonzero_polynomial(rng, rank, 3, 3);
    Weight moved = primitive_part(w.apply(chi)).first;
    CHECK(divisibility_order(weyl_apply(w, f), moved) == divisibility_order(f, chi));
  }
}

TEST_CASE("invariant_basis of S3 and of the trivial group") {
  FiniteMatrixGroup s3 =
      generate_group({testing::swap_matrix(3, 0, 1), testing::swap_matrix(3, 1, 2)});

  auto degree1 = invariant_basis(s3, 1);
  REQUIRE(degree1.size() == 1);
  Polynomial e1 = x(3, 0) + x(3, 1) + x(3, 2);
  // Equal up to the scalar fixed by row reduction: the pivot is 1.
  CHECK(degree1[0] == e1);

  CHECK(invariant_basis(s3, 2).size() == 2);

  auto all = invariant_basis(FiniteMatrixGroup::trivial(2), 3);
  CHECK(all.size() == monomials_of_degree(2, 3).size());
}

TEST_CASE("invariant_basis output is fixed by every group element") {
  auto b2_s1 = testing::mat({{0, 1}, {1, 0}});
  auto b2_s2 = testing::mat({{1, 0}, {0, -1}});
  FiniteMatrixGroup b2 = generate_group({b2_s1, b2_s2});
  for (int d = 0; d <= 4; ++d) {
    for (const auto& f : invariant_basis(b2, d)) {
      for (const auto& w : b2.elements) {
        CHECK(weyl_apply(w, f) == f);
      }
    }
  }
}

TEST_CASE("graded pieces enumerate monomials in descending graded-lex order") {
  for (std::size_t rank = 1; rank <= 4; ++rank) {
    for (int d = 0; d <= 4; ++d) {
      auto monos = monomials_of_degree(rank, d);
      CHECK(static_cast<long long>(monos.size()) ==
            binom(d + static_cast<int>(rank) - 1, static_cast<int>(rank) - 1));
      GrlexLess less;
      for (std::size_t i = 0; i + 1 < monos.size(); ++i) {
        CHECK(less(monos[i + 1], monos[i]));
      }
    }
  }
  CHECK(monomials_of_degree(2, 2).front() == Exponents{2, 0});
}

TEST_CASE("coefficient vectors round-trip through graded pieces") {
  Rng rng(141);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t rank = static_cast<std::size_t>(testing::random_int(rng, 1, 3));
    int d = testing::random_int(rng, 0, 4);
    GradedPiece piece = graded_piece(rank, d);
    Polynomial f = testing::random_polynomial(rng, rank, 4, 5).homogeneous_component(d);
    RatVec v = coefficient_vector(f, piece);
    CHECK(polynomial_from_coefficients(rank, piece, v) == f);
  }
}
