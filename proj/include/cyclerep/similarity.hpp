#ifndef CYCLEREP_SIMILARITY_HPP
#define CYCLEREP_SIMILARITY_HPP

// Similarity of square matrices over the base field, decided by the
// invariant factors of xI - A (Smith form over F[x]).

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cyclerep/linalg.hpp"
#include "cyclerep/poly.hpp"

namespace cyclerep {

/// Nontrivial invariant factors d_1 | d_2 | ... of xI - A, all monic.
template <ExactField F>
struct InvariantFactors {
  std::vector<Poly<F>> factors;

  [[nodiscard]] std::size_t total_degree() const {
    std::size_t d = 0;
    for (const auto& p : factors) d += static_cast<std::size_t>(p.degree());
    return d;
  }
  /// Product of the factors.
  [[nodiscard]] Poly<F> characteristic_polynomial() const {
    Poly<F> out(F(1L));
    for (const auto& p : factors) out = out * p;
    return out;
  }
  [[nodiscard]] const Poly<F>& minimal_polynomial() const { return factors.back(); }

  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
};

template <ExactField F>
InvariantFactors<F> poly_smith(const Matrix<F>& a) {
  if (!a.is_square()) throw DimensionError("poly_smith: matrix " + a.shape() + " is not square");
  using P = Poly<F>;
  const std::size_t n = a.rows();
  std::vector<std::vector<P>> m(n, std::vector<P>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = i == j ? P::linear(a(i, j)) : P(-a(i, j));

  InvariantFactors<F> out;
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      // Pivot: minimal degree, ties broken by smallest coefficients.
      std::size_t pi = n;
      std::size_t pj = n;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j) {
          if (m[i][j].is_zero()) continue;
          if (pi == n || m[i][j].degree() < m[pi][pj].degree() ||
              (m[i][j].degree() == m[pi][pj].degree() && m[i][j].height() < m[pi][pj].height())) {
            pi = i;
            pj = j;
          }
        }
      if (pi == n) throw InternalError("poly_smith: xI - A became singular");
      std::swap(m[k], m[pi]);
      if (pj != k)
        for (std::size_t i = 0; i < n; ++i) std::swap(m[i][k], m[i][pj]);

      const P pivot = m[k][k];
      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m[i][k].is_zero()) continue;
        auto [q, r] = divmod(m[i][k], pivot);
        for (std::size_t j = k + 1; j < n; ++j)
          if (!m[k][j].is_zero()) m[i][j] -= q * m[k][j];
        clean = clean && r.is_zero();
        m[i][k] = std::move(r);
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (m[k][j].is_zero()) continue;
        auto [q, r] = divmod(m[k][j], pivot);
        for (std::size_t i = k + 1; i < n; ++i)
          if (!m[i][k].is_zero()) m[i][j] -= q * m[i][k];
        clean = clean && r.is_zero();
        m[k][j] = std::move(r);
      }
      if (!clean) continue;

      bool divisible = true;
      if (pivot.degree() > 0) {
        for (std::size_t i = k + 1; i < n && divisible; ++i)
          for (std::size_t j = k + 1; j < n; ++j)
            if (!m[i][j].is_zero() && !divides(pivot, m[i][j])) {
              for (std::size_t c = k; c < n; ++c) m[k][c] += m[i][c];
              divisible = false;
              break;
            }
      }
      if (divisible) break;
    }
    if (m[k][k].degree() > 0) out.factors.push_back(m[k][k].monic());
  }
  return out;
}

template <ExactField F>
bool are_similar(const Matrix<F>& a, const Matrix<F>& b) {
  if (!a.is_square() || !b.is_square())
    throw DimensionError("are_similar: expected square matrices, got " + a.shape() + " and " + b.shape());
  if (a.rows() != b.rows()) return false;
  return poly_smith(a) == poly_smith(b);
}

/// Companion matrix of a monic polynomial: ones on the subdiagonal, -c_k in the last column.
template <ExactField F>
Matrix<F> companion(const Poly<F>& p) {
  if (!p.is_monic()) throw InvalidInput("companion: polynomial must be monic");
  const auto d = static_cast<std::size_t>(p.degree());
  Matrix<F> c(d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) c(i + 1, i) = F(1L);
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -p.coeff(i);
  return c;
}

/// Block-diagonal companion form with the given invariant factors.
template <ExactField F>
Matrix<F> frobenius_matrix(const InvariantFactors<F>& inv) {
  Matrix<F> out;
  for (const auto& p : inv.factors) out = block_diag(out, companion(p));
  return out;
}

namespace detail {

template <ExactField F>
Matrix<F> krylov(const Matrix<F>& a, const std::vector<F>& v) {
  const std::size_t n = a.rows();
  Matrix<F> k(n, n);
  Matrix<F> cur = column_matrix<F>(v);
  for (std::size_t c = 0; c < n; ++c) {
    k.set_column(c, cur.column(0));
    if (c + 1 < n) cur = matmul(a, cur);
  }
  return k;
}

/// Krylov matrix of a vector that generates F^n under a (a must be cyclic).
template <ExactField F>
Matrix<F> cyclic_krylov(const Matrix<F>& a, std::mt19937_64& rng) {
  const std::size_t n = a.rows();
  for (std::size_t e = 0; e < n; ++e) {
    std::vector<F> v(n);
    v[e] = F(1L);
    auto k = krylov(a, v);
    if (is_invertible(k)) return k;
  }
  std::uniform_int_distribution<long> coeff(-static_cast<long>(4 * n + 8), static_cast<long>(4 * n + 8));
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<F> v(n);
    for (auto& x : v) x = F(coeff(rng));
    auto k = krylov(a, v);
    if (is_invertible(k)) return k;
  }
  throw InternalError("similarity_transform: no cyclic vector found for a cyclic matrix");
}

}  // namespace detail

/// Some invertible P with P a P^-1 == b, or nullopt when a and b are not similar.
/// Cyclic matrices map Krylov basis to Krylov basis; otherwise a generic
/// element of the solution space of X a = b X is used.
template <ExactField F>
std::optional<Matrix<F>> similarity_transform(const Matrix<F>& a, const Matrix<F>& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) return std::nullopt;
  const auto inv = poly_smith(a);
  if (!(inv == poly_smith(b))) return std::nullopt;
  const std::size_t n = a.rows();
  if (n == 0) return Matrix<F>();
  std::mt19937_64 rng(0x5eedULL + n);

  Matrix<F> p;
  if (inv.factors.size() == 1) {
    const auto ka = detail::cyclic_krylov(a, rng);
    const auto kb = detail::cyclic_krylov(b, rng);
    p = matmul(kb, inverse(ka));
  } else {
    // Unknown X(r, c) sits at index r*n + c; equation (r, c) of X a - b X = 0.
    Matrix<F> eq(n * n, n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = 0; k < n; ++k) {
          eq(r * n + c, r * n + k) += a(k, c);
          eq(r * n + c, k * n + c) -= b(r, k);
        }
    const auto sol = kernel_basis(eq);
    std::uniform_int_distribution<long> coeff(-static_cast<long>(4 * n + 8), static_cast<long>(4 * n + 8));
    bool found = false;
    for (int attempt = 0; attempt < 64 && !found; ++attempt) {
      Matrix<F> x(n, n);
      for (std::size_t s = 0; s < sol.cols(); ++s) {
        const F w(coeff(rng));
        if (w.is_zero()) continue;
        for (std::size_t k = 0; k < n * n; ++k)
          if (!sol(k, s).is_zero()) x(k / n, k % n).add_product(w, sol(k, s));
      }
      if (is_invertible(x)) {
        p = std::move(x);
        found = true;
      }
    }
    if (!found) throw InternalError("similarity_transform: no invertible intertwiner found");
  }
  if (!(matmul(p, a) == matmul(b, p))) throw InternalError("similarity_transform: witness fails P a = b P");
  return p;
}

}  // namespace cyclerep

#endif  // CYCLEREP_SIMILARITY_HPP
