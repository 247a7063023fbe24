#include <doctest.h>

#include <random>

#include "cyclerep/similarity.hpp"
#include "support.hpp"

using namespace cyclerep;
using cyclerep::testing::random_matrix;
using Q = Rational;
using M = Matrix<Q>;
using P = Poly<Q>;

namespace {

// Faddeev-LeVerrier: det(xI - A) from traces, independent of the Smith form.
template <ExactField F>
Poly<F> charpoly_leverrier(const Matrix<F>& a) {
  const std::size_t n = a.rows();
  std::vector<F> c(n + 1);
  c[n] = F(1L);
  Matrix<F> m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<F> next = matmul(a, m);
    for (std::size_t d = 0; d < n; ++d) next(d, d) += c[n - k + 1];
    m = next;
    const Matrix<F> am = matmul(a, m);
    F tr;
    for (std::size_t d = 0; d < n; ++d) tr += am(d, d);
    c[n - k] = -tr / F(static_cast<long>(k));
  }
  return Poly<F>(c);
}

P random_monic(std::size_t degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-3, 3);
  std::vector<Q> c(degree + 1);
  for (std::size_t k = 0; k < degree; ++k) c[k] = Q(d(rng));
  c[degree] = Q(1L);
  return P(c);
}

/// d_1 | d_2 | ... built by multiplying on random monic factors.
InvariantFactors<Q> random_invariants(std::size_t n, std::mt19937_64& rng) {
  InvariantFactors<Q> inv;
  std::size_t left = n;
  while (left > 0) {
    const std::size_t deg = inv.factors.empty() ? 1 + rng() % left : rng() % (left + 1);
    P next = inv.factors.empty() ? random_monic(deg, rng) : inv.factors.back() * random_monic(deg, rng);
    const auto add = static_cast<std::size_t>(next.degree());
    if (add > left) break;
    inv.factors.push_back(next);
    left -= add;
    if (left > 0 && static_cast<std::size_t>(next.degree()) > left) break;
  }
  return inv;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const P a(std::vector<Q>{-1, 0, 1});  // x^2 - 1
  const P b = P::linear(Q(1L));        // x - 1
  const auto [q, r] = divmod(a, b);
  CHECK(q == P::linear(Q(-1L)));
  CHECK(r.is_zero());
  CHECK(divides(b, a));
  CHECK_FALSE(divides(a, b));
  CHECK(a.str() == "x^2 - 1");
  CHECK(P(std::vector<Q>{Q(1L), Q(-3, 2), Q(1L)}).str() == "x^2 - 3/2*x + 1");
  CHECK(P().degree() == -1);
  CHECK_THROWS(divmod(a, P()));

  std::mt19937_64 rng(9);
  for (int n = 0; n < 100; ++n) {
    const P x = random_monic(rng() % 5, rng);
    const P y = random_monic(1 + rng() % 3, rng);
    const auto [qq, rr] = divmod(x, y);
    CHECK(qq * y + rr == x);
    CHECK(rr.degree() < y.degree());
  }
}

TEST_CASE("invariant factors of small matrices") {
  CHECK(poly_smith(M::identity(3)).factors == std::vector<P>(3, P::linear(Q(1L))));
  const M nil{{0, 1}, {0, 0}};
  CHECK(poly_smith(nil).factors == std::vector<P>{P::monomial(2)});
  CHECK(poly_smith(M()).factors.empty());
  CHECK_THROWS_AS(poly_smith(M(2, 3)), DimensionError);
  CHECK_FALSE(are_similar(nil, M(2, 2)));
  CHECK_FALSE(are_similar(M::identity(2), M::identity(3)));
  CHECK_THROWS_AS(are_similar(M(1, 2), M(1, 2)), DimensionError);
}

TEST_CASE("characteristic polynomial matches Faddeev-LeVerrier") {
  std::mt19937_64 rng(21);
  for (int n = 0; n < 60; ++n) {
    const M a = random_matrix<Q>(1 + rng() % 6, 0, rng);
    const M sq = random_matrix<Q>(a.rows(), a.rows(), rng);
    const auto inv = poly_smith(sq);
    CHECK(inv.characteristic_polynomial() == charpoly_leverrier(sq));
    for (std::size_t k = 0; k + 1 < inv.factors.size(); ++k) CHECK(divides(inv.factors[k], inv.factors[k + 1]));
    for (const auto& f : inv.factors) CHECK(f.is_monic());
  }
}

TEST_CASE("a matrix is similar to its transpose") {
  std::mt19937_64 rng(33);
  for (int n = 0; n < 40; ++n) {
    const M a = random_matrix<Q>(1 + rng() % 5, 1, rng);
    const M sq = random_matrix<Q>(a.rows(), a.rows(), rng);
    CHECK(are_similar(sq, sq.transpose()));
    const auto p = similarity_transform(sq, sq.transpose());
    REQUIRE(p);
    CHECK(matmul(*p, sq) == matmul(sq.transpose(), *p));
  }
}

TEST_CASE("frobenius form realizes its invariant factors") {
  std::mt19937_64 rng(44);
  for (int n = 0; n < 60; ++n) {
    const auto inv = random_invariants(1 + rng() % 6, rng);
    const M f = frobenius_matrix(inv);
    CHECK(poly_smith(f) == inv);
    const M s = random_invertible<Q>(f.rows(), rng);
    const M g = matmul(s, matmul(f, inverse(s)));
    CHECK(are_similar(f, g));
    const auto p = similarity_transform(f, g);
    REQUIRE(p);
    CHECK(is_invertible(*p));
    CHECK(matmul(*p, f) == matmul(g, *p));
  }
}

TEST_CASE("non-similar pairs are told apart") {
  // Same characteristic polynomial (x-1)^2, different invariant factors.
  const M a = M::identity(2);
  const M b{{1, 1}, {0, 1}};
  CHECK_FALSE(are_similar(a, b));
  CHECK_FALSE(similarity_transform(a, b));
  // Scalar matrices: only itself.
  const M two = Q(2L) * M::identity(3);
  CHECK_FALSE(are_similar(two, M::identity(3)));
}

TEST_CASE("similarity over Q(i)") {
  using G = GaussianRational;
  Matrix<G> rot(2, 2);  // rotation by 90 degrees, eigenvalues +-i
  rot(0, 1) = G(-1L);
  rot(1, 0) = G(1L);
  Matrix<G> diag(2, 2);
  diag(0, 0) = G::imaginary_unit();
  diag(1, 1) = -G::imaginary_unit();
  CHECK(are_similar(rot, diag));
  const auto p = similarity_transform(rot, diag);
  REQUIRE(p);
  CHECK(matmul(*p, rot) == matmul(diag, *p));
}
