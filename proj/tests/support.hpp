#ifndef CYCLEREP_TESTS_SUPPORT_HPP
#define CYCLEREP_TESTS_SUPPORT_HPP

// Seeded generators shared by the property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "cyclerep/generator.hpp"
#include "cyclerep/linalg.hpp"

namespace cyclerep::testing {

template <ExactField F>
Matrix<F> random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, long bound = 3) {
  Matrix<F> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_small<F>(rng, -bound, bound);
  return m;
}

/// Random matrix of the given rank: (rows x rank) * (rank x cols).
template <ExactField F>
Matrix<F> random_rank_matrix(std::size_t rows, std::size_t cols, std::size_t rk, std::mt19937_64& rng) {
  for (;;) {
    Matrix<F> m = matmul(random_matrix<F>(rows, rk, rng, 2), random_matrix<F>(rk, cols, rng, 2));
    if (rank(m) == rk) return m;
  }
}

/// A random cycle with arbitrary (not generator-built) maps; each map has a
/// random rank so singular and regular behaviour both show up.
template <ExactField F>
Cycle<F> random_raw_cycle(std::size_t t, std::size_t max_dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> dim(0, max_dim);
  Cycle<F> c;
  c.t = t;
  for (std::size_t v = 0; v < t; ++v) c.dims.push_back(dim(rng));
  for (std::size_t v = 1; v <= t; ++v) {
    const std::size_t rows = c.dims[c.next(v) - 1];
    const std::size_t cols = c.dims[v - 1];
    std::uniform_int_distribution<std::size_t> rk(0, std::min(rows, cols));
    std::size_t r = rk(rng);
    if (rng() % 2) r = std::min(rows, cols);  // bias towards full rank
    c.maps.push_back(random_rank_matrix<F>(rows, cols, r, rng));
  }
  return c;
}

/// Random generator spec whose cycle has total dimension at most max_total.
template <ExactField F>
GeneratorSpec<F> random_spec(std::size_t t, std::size_t max_total, std::mt19937_64& rng, bool allow_regular = true) {
  GeneratorSpec<F> spec;
  spec.t = t;
  std::size_t budget = max_total;
  std::uniform_int_distribution<std::size_t> coin(0, 3);
  if (allow_regular && budget >= t && coin(rng) != 0) {
    std::uniform_int_distribution<std::size_t> reg(1, std::min<std::size_t>(3, budget / t));
    const std::size_t r = reg(rng);
    spec.regular_product = random_invertible<F>(r, rng);
    budget -= r * t;
  }
  std::uniform_int_distribution<std::size_t> end(1, t);
  while (budget > 0 && coin(rng) != 0) {
    std::uniform_int_distribution<std::size_t> len(0, budget - 1);
    const std::size_t j = len(rng);
    spec.chains.push_back({end(rng), j, 1});
    budget -= j + 1;
  }
  return spec;
}

template <ExactField F>
TransformationSystem<F> random_system(const std::vector<std::size_t>& dims, std::mt19937_64& rng) {
  TransformationSystem<F> phi;
  for (auto m : dims) phi.phis.push_back(random_invertible<F>(m, rng));
  return phi;
}

}  // namespace cyclerep::testing

#endif  // CYCLEREP_TESTS_SUPPORT_HPP
