#ifndef CYCLEREP_ORACLE_HPP
#define CYCLEREP_ORACLE_HPP

// Brute-force cross-checks for small cycles. None of these read the kernel
// table or call into regularize.hpp: the cycle is flattened into one block
// operator M on V_1 ⊕ ... ⊕ V_t and searched directly.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cyclerep/cycle.hpp"
#include "cyclerep/linalg.hpp"
#include "cyclerep/regularize.hpp"

namespace cyclerep::oracle {

inline constexpr std::size_t kDefaultBound = 10;

namespace detail {

template <ExactField F>
std::vector<std::size_t> offsets(const Cycle<F>& c) {
  std::vector<std::size_t> off{0};
  for (auto m : c.dims) off.push_back(off.back() + m);
  return off;
}

/// The cycle as a single operator on the direct sum of its spaces.
template <ExactField F>
Matrix<F> block_operator(const Cycle<F>& c) {
  const auto off = offsets(c);
  Matrix<F> m(off.back(), off.back());
  for (std::size_t v = 1; v <= c.t; ++v) m.set_block(off[c.next(v) - 1], off[v - 1], c.map(v));
  return m;
}

}  // namespace detail

/// Chain multiset of c found by exhaustive greedy peeling on the block
/// operator M: repeatedly take the longest-lived homogeneous candidate vector
/// whose forward orbit is independent of everything chosen so far. Candidates
/// are basis vectors of ker M^h restricted to one vertex; ties go to the lowest
/// vertex, then the lowest basis index. The regular part never enters since
/// ker M^h only holds vectors that eventually die.
template <ExactField F>
std::vector<ChainSummand> peel_chains_bruteforce(const Cycle<F>& c, std::size_t bound = kDefaultBound) {
  require_valid(c, "peel_chains_bruteforce");
  const std::size_t total = c.total_dim();
  if (total > bound)
    throw InvalidInput("peel_chains_bruteforce: total dimension " + std::to_string(total) + " exceeds bound " + std::to_string(bound));
  const auto off = detail::offsets(c);
  const Matrix<F> m = detail::block_operator(c);
  std::vector<Matrix<F>> powers{Matrix<F>::identity(total)};
  for (std::size_t h = 1; h <= total; ++h) powers.push_back(matmul_serial(m, powers.back()));

  auto apply = [&](const Matrix<F>& op, const std::vector<F>& x) { return matmul_serial(op, column_matrix<F>(x)).column(0); };
  auto is_null = [](const std::vector<F>& x) {
    for (const auto& e : x)
      if (!e.is_zero()) return false;
    return true;
  };

  std::vector<ChainSummand> chains;
  Matrix<F> chosen(total, 0);
  for (;;) {
    bool accepted = false;
    for (std::size_t h = total; h >= 1 && !accepted; --h) {
      for (std::size_t v = 1; v <= c.t && !accepted; ++v) {
        const Matrix<F> restricted = powers[h].block(0, off[v - 1], total, c.dim(v));
        const Matrix<F> cand = kernel_basis(restricted);
        for (std::size_t col = 0; col < cand.cols() && !accepted; ++col) {
          std::vector<F> x(total);
          for (std::size_t r = 0; r < c.dim(v); ++r) x[off[v - 1] + r] = cand(r, col);
          if (is_null(apply(powers[h - 1], x))) continue;  // dies before h steps
          Matrix<F> orbit(total, h);
          std::vector<F> y = x;
          for (std::size_t s = 0; s < h; ++s) {
            orbit.set_column(s, y);
            y = apply(m, y);
          }
          const Matrix<F> grown = hcat(chosen, orbit);
          if (rank(grown) != grown.cols()) continue;
          chosen = grown;
          chains.push_back({index_mod(static_cast<long long>(v + h - 1), c.t), h - 1, 1});
          accepted = true;
        }
      }
    }
    if (!accepted) break;
  }
  return normalize_chains(chains);
}

/// Rebuilds every k_ij from the stored sigma values through
/// k_ij = sigma_{i,0} + sigma_{[i+1],1} + ... + sigma_{[i+j],j}
/// and reports whether the table is reproduced exactly (with sigma >= 0).
inline bool verify_sigma_identity(const InvariantTable& table) {
  if (table.k.size() != table.t || table.sigma.size() != table.t) return false;
  for (std::size_t i = 1; i <= table.t; ++i) {
    if (table.k[i - 1].size() != table.jmax + 1 || table.sigma[i - 1].size() != table.jmax + 1) return false;
    long running = 0;
    for (std::size_t j = 0; j <= table.jmax; ++j) {
      const long s = table.sigma_at(index_mod(static_cast<long long>(i + j), table.t), j);
      if (s < 0) return false;
      running += s;
      if (running != table.k_at(i, static_cast<long>(j))) return false;
    }
  }
  return true;
}

/// Decides isomorphism from the space of all linear maps phi with
/// phi_{[i+1]} A_i = B_i phi_i: a and b are isomorphic iff a generic element
/// has every phi_i invertible. Random integer combinations from a wide range
/// make a false negative vanishingly unlikely; a positive answer is certain
/// and comes with the witness.
template <ExactField F>
std::optional<TransformationSystem<F>> hom_space_isomorphism(const Cycle<F>& a, const Cycle<F>& b, std::uint64_t seed = 1) {
  require_valid(a, "hom_space_isomorphism");
  require_valid(b, "hom_space_isomorphism");
  if (a.t != b.t || a.dims != b.dims) return std::nullopt;
  const std::size_t t = a.t;
  std::vector<std::size_t> unk_off{0};  // phi_v(r, c) at unk_off[v-1] + r*m_v + c
  for (std::size_t v = 1; v <= t; ++v) unk_off.push_back(unk_off.back() + a.dim(v) * a.dim(v));
  std::size_t eqs = 0;
  for (std::size_t v = 1; v <= t; ++v) eqs += a.dim(a.next(v)) * a.dim(v);
  Matrix<F> sys(eqs, unk_off.back());
  std::size_t row = 0;
  for (std::size_t v = 1; v <= t; ++v) {
    const std::size_t w = a.next(v);
    const std::size_t mv = a.dim(v);
    const std::size_t mw = a.dim(w);
    for (std::size_t r = 0; r < mw; ++r)
      for (std::size_t col = 0; col < mv; ++col, ++row) {
        // (phi_w A_v)(r, col) - (B_v phi_v)(r, col)
        for (std::size_t k = 0; k < mw; ++k) sys(row, unk_off[w - 1] + r * mw + k) += a.map(v)(k, col);
        for (std::size_t k = 0; k < mv; ++k) sys(row, unk_off[v - 1] + k * mv + col) -= b.map(v)(r, k);
      }
  }
  const Matrix<F> hom = kernel_basis(sys);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  for (int attempt = 0; attempt < 12; ++attempt) {
    std::vector<F> x(unk_off.back());
    for (std::size_t s = 0; s < hom.cols(); ++s) {
      const F w(coeff(rng));
      for (std::size_t k = 0; k < x.size(); ++k)
        if (!hom(k, s).is_zero()) x[k].add_product(w, hom(k, s));
    }
    TransformationSystem<F> phi;
    bool ok = true;
    for (std::size_t v = 1; v <= t && ok; ++v) {
      const std::size_t mv = a.dim(v);
      Matrix<F> p(mv, mv);
      for (std::size_t r = 0; r < mv; ++r)
        for (std::size_t col = 0; col < mv; ++col) p(r, col) = x[unk_off[v - 1] + r * mv + col];
      ok = is_invertible(p);
      phi.phis.push_back(std::move(p));
    }
    if (ok) return phi;
  }
  return std::nullopt;
}

}  // namespace cyclerep::oracle

#endif  // CYCLEREP_ORACLE_HPP
