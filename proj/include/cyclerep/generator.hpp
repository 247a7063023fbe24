#ifndef CYCLEREP_GENERATOR_HPP
#define CYCLEREP_GENERATOR_HPP

// Seeded test-data factory: canonical pieces with a known decomposition,
// hidden behind a random change of basis at every vertex.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <type_traits>
#include <vector>

#include "cyclerep/cycle.hpp"

namespace cyclerep {

template <ExactField F>
struct GeneratorSpec {
  std::size_t t = 1;
  std::vector<ChainSummand> chains;
  /// Product operator of the regular part in identity form; absent means no regular part.
  std::optional<Matrix<F>> regular_product;
};

template <ExactField F>
struct GroundTruth {
  std::vector<std::size_t> regular_dims;
  std::vector<ChainSummand> chains;  // normalized
  Matrix<F> regular_product;
  /// identity_form_cycle(regular_product) ⊕ chain_sum(chains)
  Cycle<F> canonical;
  /// Transforms `canonical` to the generated cycle.
  TransformationSystem<F> witness;
};

template <ExactField F>
struct GeneratedCycle {
  Cycle<F> cycle;
  GroundTruth<F> truth;
};

/// Small random scalar with integer parts in [lo, hi]; Gaussian entries get a random imaginary part too.
template <ExactField F>
F random_small(std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  if constexpr (std::is_same_v<F, GaussianRational>) {
    const long re = d(rng);
    const long im = d(rng);
    return GaussianRational(Rational(re), Rational(im));
  } else {
    return F(d(rng));
  }
}

/// Permutation · unit lower · unit upper with entries in [-2, 2]; determinant ±1.
template <ExactField F>
Matrix<F> random_unimodular(std::size_t n, std::mt19937_64& rng) {
  Matrix<F> lower = Matrix<F>::identity(n);
  Matrix<F> upper = Matrix<F>::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = random_small<F>(rng, -2, 2);
      upper(j, i) = random_small<F>(rng, -2, 2);
    }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix<F> p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = F(1L);
  return matmul(p, matmul(lower, upper));
}

/// Random invertible matrix with small integer entries (rejection sampling).
template <ExactField F>
Matrix<F> random_invertible(std::size_t n, std::mt19937_64& rng, long bound = 3) {
  for (;;) {
    Matrix<F> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_small<F>(rng, -bound, bound);
    if (is_invertible(m)) return m;
  }
}

template <ExactField F>
void check_spec(const GeneratorSpec<F>& spec) {
  if (spec.t == 0) throw InvalidInput("generator: t must be at least 1");
  for (const auto& c : spec.chains) {
    if (c.end_vertex < 1 || c.end_vertex > spec.t)
      throw InvalidInput("generator: chain end vertex " + std::to_string(c.end_vertex) + " outside 1.." + std::to_string(spec.t));
    if (c.multiplicity == 0) throw InvalidInput("generator: chain multiplicity must be at least 1");
  }
  if (spec.regular_product && !is_invertible(*spec.regular_product))
    throw InvalidInput("generator: regular product must be an invertible square matrix");
}

/// Builds identity_form(P) ⊕ chains, then conjugates every vertex by a seeded
/// random unimodular matrix. Deterministic in (spec, seed).
template <ExactField F>
GeneratedCycle<F> random_cycle(const GeneratorSpec<F>& spec, std::uint64_t seed) {
  check_spec(spec);
  std::mt19937_64 rng(seed);
  const Matrix<F> product = spec.regular_product.value_or(Matrix<F>());
  const auto chains = normalize_chains(spec.chains);

  GroundTruth<F> truth;
  truth.regular_dims.assign(spec.t, product.rows());
  truth.chains = chains;
  truth.regular_product = product;
  truth.canonical = direct_sum(identity_form_cycle(spec.t, product), chain_sum<F>(spec.t, chains));
  for (std::size_t v = 1; v <= spec.t; ++v) truth.witness.phis.push_back(random_unimodular<F>(truth.canonical.dim(v), rng));
  Cycle<F> cycle = apply_transformation(truth.canonical, truth.witness);
  return {std::move(cycle), std::move(truth)};
}

}  // namespace cyclerep

#endif  // CYCLEREP_GENERATOR_HPP
