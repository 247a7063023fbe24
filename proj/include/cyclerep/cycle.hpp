#ifndef CYCLEREP_CYCLE_HPP
#define CYCLEREP_CYCLE_HPP

// Oriented cycles V_1 -> V_2 -> ... -> V_t -> V_1 of linear maps, with
// V_i = F^{m_i}. Vertices are 1-based throughout the public API; vectors are
// columns and maps act by left multiplication, so A_i is m_{[i+1]} x m_i.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "cyclerep/errors.hpp"
#include "cyclerep/linalg.hpp"

namespace cyclerep {

/// The representative of c modulo t in 1..t.
inline std::size_t index_mod(long long c, std::size_t t) {
  if (t == 0) throw InvalidInput("index_mod: cycle length must be at least 1");
  const auto tt = static_cast<long long>(t);
  const long long r = ((c - 1) % tt + tt) % tt;
  return static_cast<std::size_t>(r + 1);
}

template <ExactField F>
struct Cycle {
  std::size_t t = 1;
  std::vector<std::size_t> dims;
  std::vector<Matrix<F>> maps;

  /// m_v for a 1-based vertex.
  [[nodiscard]] std::size_t dim(std::size_t v) const { return dims[v - 1]; }
  /// A_v : V_v -> V_{[v+1]}.
  [[nodiscard]] const Matrix<F>& map(std::size_t v) const { return maps[v - 1]; }
  [[nodiscard]] std::size_t next(std::size_t v) const { return v == t ? 1 : v + 1; }
  [[nodiscard]] std::size_t total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// An indecomposable singular summand: a chain of length `length` ending in
/// V_{end_vertex}, occurring `multiplicity` times.
struct ChainSummand {
  std::size_t end_vertex = 1;
  std::size_t length = 0;
  std::size_t multiplicity = 1;

  [[nodiscard]] std::size_t start_vertex(std::size_t t) const {
    return index_mod(static_cast<long long>(end_vertex) - static_cast<long long>(length), t);
  }
  friend auto operator<=>(const ChainSummand&, const ChainSummand&) = default;
};

/// Sorts by (end, length) and merges equal entries; drops zero multiplicities.
inline std::vector<ChainSummand> normalize_chains(std::vector<ChainSummand> chains) {
  std::sort(chains.begin(), chains.end());
  std::vector<ChainSummand> out;
  for (const auto& c : chains) {
    if (c.multiplicity == 0) continue;
    if (!out.empty() && out.back().end_vertex == c.end_vertex && out.back().length == c.length)
      out.back().multiplicity += c.multiplicity;
    else
      out.push_back(c);
  }
  return out;
}

/// phi_i : V_i -> W_i, one invertible matrix per vertex.
template <ExactField F>
struct TransformationSystem {
  std::vector<Matrix<F>> phis;

  [[nodiscard]] const Matrix<F>& at(std::size_t v) const { return phis[v - 1]; }
  friend bool operator==(const TransformationSystem&, const TransformationSystem&) = default;
};

struct ValidationReport {
  std::vector<std::string> errors;
  [[nodiscard]] bool ok() const { return errors.empty(); }
  explicit operator bool() const { return ok(); }
};

template <ExactField F>
ValidationReport validate(const Cycle<F>& c) {
  ValidationReport rep;
  if (c.t == 0) rep.errors.push_back("cycle length t must be at least 1");
  if (c.dims.size() != c.t)
    rep.errors.push_back("dims lists " + std::to_string(c.dims.size()) + " spaces, expected t = " + std::to_string(c.t));
  if (c.maps.size() != c.t)
    rep.errors.push_back("maps lists " + std::to_string(c.maps.size()) + " matrices, expected t = " + std::to_string(c.t));
  if (!rep.ok()) return rep;
  for (std::size_t v = 1; v <= c.t; ++v) {
    const auto& a = c.map(v);
    const std::size_t rows = c.dim(c.next(v));
    const std::size_t cols = c.dim(v);
    if (a.rows() != rows || a.cols() != cols)
      rep.errors.push_back("vertex " + std::to_string(v) + ": map A_" + std::to_string(v) + " has shape " + a.shape() +
                           ", expected " + shape_str(rows, cols));
  }
  return rep;
}

template <ExactField F>
void require_valid(const Cycle<F>& c, const char* who) {
  const auto rep = validate(c);
  if (!rep.ok()) throw InvalidInput(std::string(who) + ": invalid cycle: " + rep.errors.front());
}

/// A cycle of length t on zero-dimensional spaces.
template <ExactField F>
Cycle<F> zero_cycle(std::size_t t) {
  if (t == 0) throw InvalidInput("cycle length must be at least 1");
  return Cycle<F>{t, std::vector<std::size_t>(t, 0), std::vector<Matrix<F>>(t)};
}

template <ExactField F>
Cycle<F> direct_sum(const Cycle<F>& a, const Cycle<F>& b) {
  if (a.t != b.t)
    throw DimensionError("direct_sum: cycle lengths differ (" + std::to_string(a.t) + " vs " + std::to_string(b.t) + ")");
  Cycle<F> out{a.t, {}, {}};
  for (std::size_t v = 1; v <= a.t; ++v) {
    out.dims.push_back(a.dim(v) + b.dim(v));
    out.maps.push_back(block_diag(a.map(v), b.map(v)));
  }
  return out;
}

/// The indecomposable singular cycle given by the chain e_p -> ... -> e_q -> 0
/// with q - p = length and [q] = end_vertex. p is the smallest positive index
/// with [p] = [end - length]; each V_v is spanned by {e_i : [i] = v} in
/// ascending order of i.
template <ExactField F>
Cycle<F> chain_cycle(std::size_t t, std::size_t end_vertex, std::size_t length) {
  if (t == 0) throw InvalidInput("chain_cycle: cycle length must be at least 1");
  if (end_vertex < 1 || end_vertex > t)
    throw InvalidInput("chain_cycle: end vertex " + std::to_string(end_vertex) + " outside 1.." + std::to_string(t));
  const std::size_t p = index_mod(static_cast<long long>(end_vertex) - static_cast<long long>(length), t);
  std::vector<std::size_t> dims(t, 0);
  std::vector<std::size_t> local(length + 1);
  for (std::size_t k = 0; k <= length; ++k) {
    const std::size_t v = index_mod(static_cast<long long>(p + k), t);
    local[k] = dims[v - 1]++;
  }
  Cycle<F> c{t, dims, {}};
  for (std::size_t v = 1; v <= t; ++v) c.maps.emplace_back(c.dim(c.next(v)), c.dim(v));
  for (std::size_t k = 0; k < length; ++k) {
    const std::size_t v = index_mod(static_cast<long long>(p + k), t);
    c.maps[v - 1](local[k + 1], local[k]) = F(1L);
  }
  return c;
}

/// Maps (1, ..., 1, product) on F^n at every vertex.
template <ExactField F>
Cycle<F> identity_form_cycle(std::size_t t, const Matrix<F>& product) {
  if (!product.is_square()) throw DimensionError("identity_form_cycle: product " + product.shape() + " is not square");
  const std::size_t n = product.rows();
  Cycle<F> c{t, std::vector<std::size_t>(t, n), std::vector<Matrix<F>>(t, Matrix<F>::identity(n))};
  c.maps[t - 1] = product;
  return c;
}

/// Direct sum of chain cycles in the order given, each repeated by multiplicity.
template <ExactField F>
Cycle<F> chain_sum(std::size_t t, const std::vector<ChainSummand>& chains) {
  Cycle<F> out = zero_cycle<F>(t);
  for (const auto& ch : chains)
    for (std::size_t k = 0; k < ch.multiplicity; ++k) out = direct_sum(out, chain_cycle<F>(t, ch.end_vertex, ch.length));
  return out;
}

/// B_i = phi_{[i+1]} A_i phi_i^{-1}.
template <ExactField F>
Cycle<F> apply_transformation(const Cycle<F>& c, const TransformationSystem<F>& phi) {
  require_valid(c, "apply_transformation");
  if (phi.phis.size() != c.t)
    throw DimensionError("apply_transformation: " + std::to_string(phi.phis.size()) + " matrices for a cycle of length " + std::to_string(c.t));
  std::vector<Matrix<F>> inv;
  for (std::size_t v = 1; v <= c.t; ++v) {
    const auto& p = phi.at(v);
    if (!p.is_square() || p.cols() != c.dim(v))
      throw DimensionError("apply_transformation: phi_" + std::to_string(v) + " has shape " + p.shape() + ", expected " +
                           shape_str(c.dim(v), c.dim(v)));
    try {
      inv.push_back(inverse(p));
    } catch (const NotInvertibleError&) {
      throw NotInvertibleError("apply_transformation: phi_" + std::to_string(v) + " is not invertible");
    }
  }
  Cycle<F> out{c.t, c.dims, {}};
  for (std::size_t v = 1; v <= c.t; ++v) out.maps.push_back(matmul(matmul(phi.at(c.next(v)), c.map(v)), inv[v - 1]));
  return out;
}

struct CommuteCheck {
  bool ok = false;
  std::string reason;
  /// 1-based index of the first failing square, 0 when the failure is not a square.
  std::size_t failing_square = 0;
  explicit operator bool() const { return ok; }
};

/// Whether phi transforms a to b: every phi_i invertible and
/// phi_{[i+1]} A_i = B_i phi_i for every i.
template <ExactField F>
CommuteCheck check_commutes(const Cycle<F>& a, const Cycle<F>& b, const TransformationSystem<F>& phi) {
  auto fail = [](std::string why, std::size_t square = 0) { return CommuteCheck{false, std::move(why), square}; };
  if (a.t != b.t) return fail("cycle lengths differ: " + std::to_string(a.t) + " vs " + std::to_string(b.t));
  if (const auto ra = validate(a); !ra.ok()) return fail("first cycle invalid: " + ra.errors.front());
  if (const auto rb = validate(b); !rb.ok()) return fail("second cycle invalid: " + rb.errors.front());
  if (phi.phis.size() != a.t)
    return fail("witness has " + std::to_string(phi.phis.size()) + " matrices, expected " + std::to_string(a.t));
  for (std::size_t v = 1; v <= a.t; ++v) {
    const auto& p = phi.at(v);
    if (p.rows() != b.dim(v) || p.cols() != a.dim(v))
      return fail("phi_" + std::to_string(v) + " has shape " + p.shape() + ", expected " + shape_str(b.dim(v), a.dim(v)), v);
    if (!is_invertible(p)) return fail("phi_" + std::to_string(v) + " is not invertible", v);
  }
  for (std::size_t v = 1; v <= a.t; ++v) {
    if (!(matmul(phi.at(a.next(v)), a.map(v)) == matmul(b.map(v), phi.at(v))))
      return fail("square " + std::to_string(v) + " does not commute: phi_" + std::to_string(a.next(v)) + " A_" +
                      std::to_string(v) + " != B_" + std::to_string(v) + " phi_" + std::to_string(v),
                  v);
  }
  return {true, {}, 0};
}

template <ExactField F>
TransformationSystem<F> identity_system(const Cycle<F>& c) {
  TransformationSystem<F> out;
  for (auto m : c.dims) out.phis.push_back(Matrix<F>::identity(m));
  return out;
}

/// (outer ∘ inner)_v = outer_v · inner_v.
template <ExactField F>
TransformationSystem<F> compose(const TransformationSystem<F>& outer, const TransformationSystem<F>& inner) {
  if (outer.phis.size() != inner.phis.size()) throw DimensionError("compose: systems of different lengths");
  TransformationSystem<F> out;
  for (std::size_t v = 0; v < outer.phis.size(); ++v) out.phis.push_back(matmul(outer.phis[v], inner.phis[v]));
  return out;
}

template <ExactField F>
TransformationSystem<F> invert(const TransformationSystem<F>& phi) {
  TransformationSystem<F> out;
  for (const auto& p : phi.phis) out.phis.push_back(inverse(p));
  return out;
}

}  // namespace cyclerep

#endif  // CYCLEREP_CYCLE_HPP
