#include <doctest.h>

#include <random>

#include "cyclerep/equivalence.hpp"
#include "cyclerep/oracle.hpp"
#include "support.hpp"

using namespace cyclerep;
using Q = Rational;
using M = Matrix<Q>;
using C = Cycle<Q>;

TEST_CASE("brute-force chain peeling") {
  CHECK(oracle::peel_chains_bruteforce(chain_cycle<Q>(5, 2, 8)) == std::vector<ChainSummand>{{2, 8, 1}});
  const C zero{2, {1, 1}, {M{{0}}, M{{0}}}};
  CHECK(oracle::peel_chains_bruteforce(zero) == std::vector<ChainSummand>{{1, 0, 1}, {2, 0, 1}});
  const C twice = direct_sum(chain_cycle<Q>(3, 1, 2), chain_cycle<Q>(3, 1, 2));
  CHECK(oracle::peel_chains_bruteforce(twice) == std::vector<ChainSummand>{{1, 2, 2}});
  const C reg{2, {1, 1}, {M{{2}}, M{{3}}}};
  CHECK(oracle::peel_chains_bruteforce(reg).empty());
  CHECK_THROWS_AS(oracle::peel_chains_bruteforce(chain_cycle<Q>(1, 1, 12)), InvalidInput);
}

TEST_CASE("sigma identity") {
  const C reg{2, {1, 1}, {M{{2}}, M{{3}}}};
  CHECK(oracle::verify_sigma_identity(kernel_dim_table(reg)));
  auto table = kernel_dim_table(chain_cycle<Q>(5, 2, 8));
  CHECK(oracle::verify_sigma_identity(table));
  table.k[2][4] += 1;
  CHECK_FALSE(oracle::verify_sigma_identity(table));
}

TEST_CASE("oracle agrees with the kernel-table formula on raw cycles") {
  std::mt19937_64 rng(404);
  for (int n = 0; n < 150; ++n) {
    const C c = testing::random_raw_cycle<Q>(1 + rng() % 4, 3, rng);
    if (c.total_dim() > oracle::kDefaultBound) continue;
    const auto table = kernel_dim_table(c);
    CHECK(singular_counts(table) == oracle::peel_chains_bruteforce(c));
    CHECK(oracle::verify_sigma_identity(table));
  }
}

TEST_CASE("hom-space isomorphism oracle") {
  std::mt19937_64 rng(55);
  for (int n = 0; n < 40; ++n) {
    const C c = testing::random_raw_cycle<Q>(1 + rng() % 3, 3, rng);
    const C d = apply_transformation(c, testing::random_system<Q>(c.dims, rng));
    const auto w = oracle::hom_space_isomorphism(c, d);
    REQUIRE(w);
    CHECK(check_commutes(c, d, *w));
    CHECK(is_isomorphic(c, d));
  }
  CHECK_FALSE(oracle::hom_space_isomorphism(chain_cycle<Q>(3, 1, 2), chain_cycle<Q>(3, 2, 2)));
  const C a{1, {1}, {M{{2}}}};
  const C b{1, {1}, {M{{3}}}};
  CHECK_FALSE(oracle::hom_space_isomorphism(a, b));
}
