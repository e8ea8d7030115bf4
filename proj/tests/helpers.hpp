#pragma once

// Shared helpers for the randomized checks. Everything is seeded; a test
// failure always reproduces.

#include <random>
#include <vector>

#include "gkm/lattice.hpp"
#include "gkm/poly.hpp"

namespace gkm::testing {

using Rng = std::mt19937;

inline int random_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Weight random_weight(Rng& rng, std::size_t rank, int lo = -5, int hi = 5) {
  Weight w = Weight::zero(rank);
  for (auto& x : w.c) x = random_int(rng, lo, hi);
  return w;
}

inline Weight random_nonzero_weight(Rng& rng, std::size_t rank, int lo = -5, int hi = 5) {
  for (;;) {
    Weight w = random_weight(rng, rank, lo, hi);
    if (!w.is_zero()) return w;
  }
}

inline Weight random_primitive_weight(Rng& rng, std::size_t rank) {
  return primitive_part(random_nonzero_weight(rng, rank)).first;
}

inline Rat random_rat(Rng& rng) {
  int num = random_int(rng, -4, 4);
  if (num == 0) num = 1;
  int den = random_int(rng, 1, 3);
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Polynomial random_polynomial(Rng& rng, std::size_t rank, int max_degree, int max_terms) {
  Polynomial f(rank);
  int terms = random_int(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) {
    Exponents e(rank, 0);
    int degree = random_int(rng, 0, max_degree);
    for (int d = 0; d < degree; ++d) {
      e[static_cast<std::size_t>(random_int(rng, 0, static_cast<int>(rank) - 1))] += 1;
    }
    f.add_term(e, random_rat(rng));
  }
  return f;
}

inline Polynomial random_nonzero_polynomial(Rng& rng, std::size_t rank, int max_degree,
                                            int max_terms) {
  for (;;) {
    Polynomial f = random_polynomial(rng, rank, max_degree, max_terms);
    if (!f.is_zero()) return f;
  }
}

inline WeylElement random_unimodular(Rng& rng, std::size_t rank, int steps = 8) {
  WeylElement u = WeylElement::identity(rank);
  u.label.clear();
  if (rank == 1) {
    if (random_int(rng, 0, 1)) u.m[0][0] = -1;
    return u;
  }
  for (int s = 0; s < steps; ++s) {
    int kind = random_int(rng, 0, 3);
    std::size_t i = static_cast<std::size_t>(random_int(rng, 0, static_cast<int>(rank) - 1));
    std::size_t j = static_cast<std::size_t>(random_int(rng, 0, static_cast<int>(rank) - 1));
    if (kind <= 1) {
      if (i == j) continue;
      int t = random_int(rng, 0, 1) ? 1 : -1;
      if (random_int(rng, 0, 3) == 0) t *= 2;
      for (std::size_t k = 0; k < rank; ++k) u.m[i][k] += t * u.m[j][k];
    } else if (kind == 2) {
      if (i != j) std::swap(u.m[i], u.m[j]);
    } else {
      for (std::size_t k = 0; k < rank; ++k) u.m[i][k] = -u.m[i][k];
    }
  }
  return u;
}

inline WeylElement mat(std::vector<std::vector<long long>> rows) {
  return WeylElement(std::move(rows));
}

inline WeylElement permutation_matrix(const std::vector<std::size_t>& image) {
  // image[j] = i means basis vector e_j maps to e_i.
  std::size_t n = image.size();
  WeylElement w;
  w.m.assign(n, std::vector<long long>(n, 0));
  for (std::size_t j = 0; j < n; ++j) w.m[image[j]][j] = 1;
  return w;
}

inline WeylElement swap_matrix(std::size_t rank, std::size_t a, std::size_t b) {
  std::vector<std::size_t> image(rank);
  for (std::size_t i = 0; i < rank; ++i) image[i] = i;
  std::swap(image[a], image[b]);
  return permutation_matrix(image);
}

}  // namespace gkm::testing
