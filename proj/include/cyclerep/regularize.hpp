#ifndef CYCLEREP_REGULARIZE_HPP
#define CYCLEREP_REGULARIZE_HPP

// Splitting a cycle into its regular part and its chain summands.
//
// For a vertex i, the once-around operator is hat_i = A_{[i+t-1]} ... A_{[i+1]} A_i.
// Its stable image carries the regular part; its stable kernel carries the
// nilpotent part, which is a direct sum of chains e_p -> ... -> e_q -> 0.
//
// The chain counts come from the kernel dimensions
//   k_ij = dim ker(A_{[i+j]} ... A_i)
// through
//   n_lj = k_{[l-j],j} - k_{[l-j],j-1} - k_{[l-j-1],j+1} + k_{[l-j-1],j}
// with k_{i,-1} = 0. sigma_lj = n_lj + n_{l,j+1} + ... counts chains of length
// at least j ending in V_l.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "cyclerep/cycle.hpp"
#include "cyclerep/linalg.hpp"

namespace cyclerep {

/// A_{[i+steps-1]} ... A_i : V_i -> V_{[i+steps]}; the identity for steps = 0.
template <ExactField F>
Matrix<F> composite(const Cycle<F>& c, std::size_t i, std::size_t steps) {
  Matrix<F> out = Matrix<F>::identity(c.dim(i));
  std::size_t v = i;
  for (std::size_t s = 0; s < steps; ++s) {
    out = matmul(c.map(v), out);
    v = c.next(v);
  }
  return out;
}

template <ExactField F>
Matrix<F> hat_operator(const Cycle<F>& c, std::size_t i) {
  require_valid(c, "hat_operator");
  if (i < 1 || i > c.t) throw InvalidInput("hat_operator: vertex " + std::to_string(i) + " outside 1.." + std::to_string(c.t));
  return composite(c, i, c.t);
}

namespace detail {

/// Dimensions of hat^k V for k = 0, 1, ... until two consecutive powers agree.
template <ExactField F>
std::vector<std::size_t> hat_image_dims(const Matrix<F>& hat) {
  std::vector<std::size_t> dims{hat.rows()};
  Matrix<F> basis = Matrix<F>::identity(hat.rows());
  for (;;) {
    basis = column_space(matmul(hat, basis));
    dims.push_back(basis.cols());
    if (dims.back() == dims[dims.size() - 2]) return dims;
  }
}

}  // namespace detail

/// Minimal z >= 1 with rank(hat_i^z) = rank(hat_i^{z+1}) at every vertex.
template <ExactField F>
std::size_t stabilization_exponent(const Cycle<F>& c) {
  require_valid(c, "stabilization_exponent");
  std::size_t z = 1;
  for (std::size_t i = 1; i <= c.t; ++i) {
    const auto dims = detail::hat_image_dims(composite(c, i, c.t));
    // dims[k] = rank hat^k; the last two entries are equal.
    z = std::max(z, dims.size() - 2);
  }
  return z;
}

/// k_ij for 1 <= i <= t, 0 <= j <= jmax, plus sigma_lj computed on an
/// independent route as dim(im A^{(j)}_{[l-j]} ∩ ker A_l).
struct InvariantTable {
  std::size_t t = 1;
  std::size_t jmax = 0;
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::size_t>> k;  // k[i-1][j]
  std::vector<std::vector<long>> sigma;     // sigma[l-1][j]

  /// k_{i,j}, with k_{i,-1} = 0.
  [[nodiscard]] long k_at(std::size_t i, long j) const {
    if (j < 0) return 0;
    return static_cast<long>(k.at(i - 1).at(static_cast<std::size_t>(j)));
  }
  [[nodiscard]] long sigma_at(std::size_t l, std::size_t j) const { return sigma.at(l - 1).at(j); }

  /// k_{i,jmax} = k_{i,jmax-1} for every i.
  [[nodiscard]] bool stabilized() const {
    for (std::size_t i = 1; i <= t; ++i)
      if (k_at(i, static_cast<long>(jmax)) != k_at(i, static_cast<long>(jmax) - 1)) return false;
    return true;
  }

  friend bool operator==(const InvariantTable&, const InvariantTable&) = default;
};

namespace detail {

struct TableColumn {
  std::vector<std::size_t> k;
  std::vector<long> sigma_from_start;  // sigma_{[i+j], j} at index j
};

/// Pushes the image of V_i forward one map at a time.
template <ExactField F>
TableColumn table_column(const Cycle<F>& c, const std::vector<Matrix<F>>& kernels, std::size_t i, std::size_t jmax) {
  TableColumn col;
  col.k.reserve(jmax + 1);
  col.sigma_from_start.reserve(jmax + 1);
  const std::size_t m = c.dim(i);
  Matrix<F> image = Matrix<F>::identity(m);
  std::size_t v = i;
  std::size_t unchanged = 0;
  for (std::size_t j = 0; j <= jmax; ++j) {
    const Matrix<F>& ker = kernels[v - 1];
    const std::size_t meet = image.cols() + ker.cols() - rank(hcat(image, ker));
    col.sigma_from_start.push_back(static_cast<long>(meet));
    const std::size_t before = image.cols();
    image = column_space(matmul(c.map(v), image));
    v = c.next(v);
    col.k.push_back(m - image.cols());
    unchanged = image.cols() == before ? unchanged + 1 : 0;
    // Injective once around the cycle: the image is invariant and never shrinks again.
    if (unchanged >= c.t || image.cols() == 0) {
      col.k.resize(jmax + 1, col.k.back());
      col.sigma_from_start.resize(jmax + 1, 0);
      break;
    }
  }
  return col;
}

template <bool Parallel, ExactField F>
InvariantTable kernel_dim_table_impl(const Cycle<F>& c, std::optional<std::size_t> jmax_override) {
  require_valid(c, "kernel_dim_table");
  const std::size_t jmax = jmax_override.value_or(c.total_dim());
  std::vector<Matrix<F>> kernels;
  for (std::size_t v = 1; v <= c.t; ++v) kernels.push_back(kernel_basis(c.map(v)));

  std::vector<TableColumn> cols(c.t);
  std::exception_ptr failure;
  const auto t = static_cast<std::ptrdiff_t>(c.t);
#pragma omp parallel for schedule(dynamic) if (Parallel && c.t > 1)
  for (std::ptrdiff_t si = 0; si < t; ++si) {
    try {
      cols[static_cast<std::size_t>(si)] = table_column(c, kernels, static_cast<std::size_t>(si) + 1, jmax);
    } catch (...) {
#pragma omp critical(cyclerep_table_failure)
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  InvariantTable table{c.t, jmax, c.dims, {}, std::vector<std::vector<long>>(c.t, std::vector<long>(jmax + 1, 0))};
  for (std::size_t i = 1; i <= c.t; ++i) {
    auto& col = cols[i - 1];
    for (std::size_t j = 0; j <= jmax; ++j)
      table.sigma[index_mod(static_cast<long long>(i + j), c.t) - 1][j] = col.sigma_from_start[j];
    table.k.push_back(std::move(col.k));
  }
  return table;
}

}  // namespace detail

/// Default jmax = sum of dims; a chain of length j uses j+1 basis vectors, so the table is stable there.
template <ExactField F>
InvariantTable kernel_dim_table(const Cycle<F>& c, std::optional<std::size_t> jmax = std::nullopt) {
  return detail::kernel_dim_table_impl<true>(c, jmax);
}

template <ExactField F>
InvariantTable kernel_dim_table_serial(const Cycle<F>& c, std::optional<std::size_t> jmax = std::nullopt) {
  return detail::kernel_dim_table_impl<false>(c, jmax);
}

/// n_lj for every (l, j) with n_lj > 0. Throws InternalError on a negative
/// count and InvalidInput when the table has not stabilized.
inline std::vector<ChainSummand> singular_counts(const InvariantTable& table) {
  if (!table.stabilized())
    throw InvalidInput("singular_counts: table not stabilized at jmax = " + std::to_string(table.jmax) + "; increase jmax");
  std::vector<ChainSummand> out;
  // n_{l,jmax} vanishes on a stabilized table; j + 1 <= jmax keeps every lookup in range.
  for (std::size_t j = 0; j < table.jmax; ++j) {
    const auto jj = static_cast<long long>(j);
    const auto lj = static_cast<long>(j);
    for (std::size_t l = 1; l <= table.t; ++l) {
      const auto ll = static_cast<long long>(l);
      const std::size_t a = index_mod(ll - jj, table.t);
      const std::size_t b = index_mod(ll - jj - 1, table.t);
      const long n = table.k_at(a, lj) - table.k_at(a, lj - 1) - table.k_at(b, lj + 1) + table.k_at(b, lj);
      if (n < 0)
        throw InternalError("singular_counts: negative count n_{" + std::to_string(l) + "," + std::to_string(j) + "} = " + std::to_string(n));
      if (n > 0) out.push_back({l, j, static_cast<std::size_t>(n)});
    }
  }
  return normalize_chains(out);
}

/// A sub-cycle together with the bases that embed its spaces into the parent.
template <ExactField F>
struct EmbeddedCycle {
  Cycle<F> cycle;
  std::vector<Matrix<F>> embedding;  // m_v x dim_v, independent columns
};

template <ExactField F>
struct FittingSplit {
  std::size_t z = 1;
  EmbeddedCycle<F> regular;    // on im hat_i^z; all maps invertible
  EmbeddedCycle<F> nilpotent;  // on ker hat_i^z; every hat nilpotent
};

namespace detail {

template <ExactField F>
EmbeddedCycle<F> restrict_to(const Cycle<F>& c, std::vector<Matrix<F>> bases) {
  EmbeddedCycle<F> out{Cycle<F>{c.t, {}, {}}, std::move(bases)};
  for (std::size_t v = 1; v <= c.t; ++v) out.cycle.dims.push_back(out.embedding[v - 1].cols());
  for (std::size_t v = 1; v <= c.t; ++v)
    out.cycle.maps.push_back(coordinates_in(out.embedding[c.next(v) - 1], matmul(c.map(v), out.embedding[v - 1])));
  return out;
}

}  // namespace detail

template <ExactField F>
FittingSplit<F> fitting_split(const Cycle<F>& c) {
  require_valid(c, "fitting_split");
  FittingSplit<F> out;
  out.z = stabilization_exponent(c);
  std::vector<Matrix<F>> images;
  std::vector<Matrix<F>> kernels;
  for (std::size_t i = 1; i <= c.t; ++i) {
    const Matrix<F> hat = composite(c, i, c.t);
    Matrix<F> image = Matrix<F>::identity(c.dim(i));
    Matrix<F> rows = Matrix<F>::identity(c.dim(i));  // row space of hat^k, so ker hat^k = ker rows
    for (std::size_t k = 0; k < out.z; ++k) {
      image = column_space(matmul(hat, image));
      rows = row_space(matmul(rows, hat));
    }
    Matrix<F> kernel = kernel_basis(rows);
    if (image.cols() + kernel.cols() != c.dim(i) || rank(hcat(image, kernel)) != c.dim(i))
      throw InternalError("fitting_split: image and kernel of hat^z do not split V_" + std::to_string(i));
    images.push_back(std::move(image));
    kernels.push_back(std::move(kernel));
  }
  out.regular = detail::restrict_to(c, std::move(images));
  out.nilpotent = detail::restrict_to(c, std::move(kernels));
  for (std::size_t v = 1; v <= c.t; ++v)
    if (!is_invertible(out.regular.cycle.map(v)))
      throw InternalError("fitting_split: restricted map A_" + std::to_string(v) + " on the regular part is not invertible");
  return out;
}

template <ExactField F>
Cycle<F> regular_part(const Cycle<F>& c) {
  return fitting_split(c).regular.cycle;
}

/// A chain found inside a nilpotent cycle: vectors[k] lies in V_{[start+k]}.
template <ExactField F>
struct PeeledChain {
  std::size_t start_vertex = 1;
  std::vector<std::vector<F>> vectors;

  [[nodiscard]] std::size_t length() const { return vectors.size() - 1; }
  [[nodiscard]] std::size_t end_vertex(std::size_t t) const {
    return index_mod(static_cast<long long>(start_vertex + vectors.size() - 1), t);
  }
};

/// Chain basis of a cycle whose hat operators are all nilpotent, longest chains first.
/// Heads of height h at vertex v complete ker(h-fold composite) modulo
/// ker((h-1)-fold composite) plus the level-h vectors of longer chains.
template <ExactField F>
std::vector<PeeledChain<F>> peel_chains(const Cycle<F>& nil) {
  require_valid(nil, "peel_chains");
  const std::size_t t = nil.t;
  const std::size_t total = nil.total_dim();
  // rows[h][v-1] has kernel ker(A^{(h)}_v).
  std::vector<std::vector<Matrix<F>>> rows(1);
  for (std::size_t v = 1; v <= t; ++v) rows[0].push_back(Matrix<F>::identity(nil.dim(v)));
  auto all_empty = [&](const std::vector<Matrix<F>>& level) {
    return std::all_of(level.begin(), level.end(), [](const Matrix<F>& m) { return m.rows() == 0; });
  };
  while (!all_empty(rows.back())) {
    if (rows.size() > total + 1) throw InternalError("peel_chains: cycle is not nilpotent");
    std::vector<Matrix<F>> next;
    for (std::size_t v = 1; v <= t; ++v) next.push_back(row_space(matmul(rows.back()[nil.next(v) - 1], nil.map(v))));
    rows.push_back(std::move(next));
  }
  const std::size_t max_height = rows.size() - 1;

  std::vector<PeeledChain<F>> chains;
  struct LevelVector {
    std::size_t chain;
    std::vector<F> vec;
  };
  std::vector<std::vector<LevelVector>> level(t);
  for (std::size_t h = max_height; h >= 1; --h) {
    std::vector<std::vector<LevelVector>> next_level(t);
    for (std::size_t v = 1; v <= t; ++v) {
      IncrementalSpan<F> span(nil.dim(v));
      span.add_columns(kernel_basis(rows[h - 1][v - 1]));
      for (const auto& lv : level[v - 1])
        if (!span.try_add(lv.vec)) throw InternalError("peel_chains: chain vectors became dependent");
      const Matrix<F> candidates = kernel_basis(rows[h][v - 1]);
      for (std::size_t col = 0; col < candidates.cols(); ++col) {
        auto x = candidates.column(col);
        if (!span.try_add(x)) continue;
        chains.push_back({v, {x}});
        level[v - 1].push_back({chains.size() - 1, std::move(x)});
      }
      if (h == 1) continue;
      for (auto& lv : level[v - 1]) {
        auto y = matmul(nil.map(v), column_matrix<F>(lv.vec)).column(0);
        chains[lv.chain].vectors.push_back(y);
        next_level[nil.next(v) - 1].push_back({lv.chain, std::move(y)});
      }
    }
    level = std::move(next_level);
  }
  std::size_t used = 0;
  for (const auto& ch : chains) used += ch.vectors.size();
  if (used != total) throw InternalError("peel_chains: chain vectors do not span the nilpotent part");
  return chains;
}

template <ExactField F>
struct RegularizingDecomposition {
  std::size_t z = 1;
  Cycle<F> regular_part;
  std::vector<ChainSummand> chains;  // normalized
  InvariantTable table;
  /// regular_part ⊕ chain cycles in normalized order.
  Cycle<F> canonical;
  /// Transforms `canonical` to the decomposed cycle.
  TransformationSystem<F> witness;

  [[nodiscard]] std::vector<std::size_t> regular_dims() const { return regular_part.dims; }
};

template <ExactField F>
RegularizingDecomposition<F> regularizing_decomposition(const Cycle<F>& c, std::optional<std::size_t> jmax = std::nullopt) {
  require_valid(c, "regularizing_decomposition");
  const auto split = fitting_split(c);
  RegularizingDecomposition<F> out;
  out.z = split.z;
  out.regular_part = split.regular.cycle;
  out.table = kernel_dim_table(c, jmax);
  out.chains = singular_counts(out.table);

  auto peeled = peel_chains(split.nilpotent.cycle);
  std::vector<ChainSummand> found;
  for (const auto& ch : peeled) found.push_back({ch.end_vertex(c.t), ch.length(), 1});
  if (normalize_chains(found) != out.chains)
    throw InternalError("regularizing_decomposition: peeled chains disagree with the kernel-dimension counts");

  std::stable_sort(peeled.begin(), peeled.end(), [&](const PeeledChain<F>& a, const PeeledChain<F>& b) {
    const auto ka = std::make_pair(a.end_vertex(c.t), a.length());
    const auto kb = std::make_pair(b.end_vertex(c.t), b.length());
    return ka < kb;
  });

  out.canonical = out.regular_part;
  std::vector<std::vector<std::vector<F>>> columns(c.t);
  for (const auto& ch : peeled) {
    out.canonical = direct_sum(out.canonical, chain_cycle<F>(c.t, ch.end_vertex(c.t), ch.length()));
    for (std::size_t k = 0; k < ch.vectors.size(); ++k) {
      const std::size_t v = index_mod(static_cast<long long>(ch.start_vertex + k), c.t);
      columns[v - 1].push_back(matmul(split.nilpotent.embedding[v - 1], column_matrix<F>(ch.vectors[k])).column(0));
    }
  }
  for (std::size_t v = 1; v <= c.t; ++v) {
    Matrix<F> phi(c.dim(v), c.dim(v));
    phi.set_block(0, 0, split.regular.embedding[v - 1]);
    std::size_t col = split.regular.embedding[v - 1].cols();
    for (const auto& x : columns[v - 1]) phi.set_column(col++, x);
    out.witness.phis.push_back(std::move(phi));
  }
  if (const auto chk = check_commutes(out.canonical, c, out.witness); !chk)
    throw InternalError("regularizing_decomposition: witness check failed: " + chk.reason);
  return out;
}

}  // namespace cyclerep

#endif  // CYCLEREP_REGULARIZE_HPP
