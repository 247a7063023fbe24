#ifndef CYCLEREP_EQUIVALENCE_HPP
#define CYCLEREP_EQUIVALENCE_HPP

// Isomorphism and topological equivalence of cycles.
//
// Two cycles are isomorphic iff they have the same dimensions, the same chain
// summands and similar regular-part products A_t ... A_1. Dimensions and the
// kernel table are topological invariants, so a mismatch there rules out
// topological equivalence; a linear isomorphism proves it. What remains is
// a pair of non-similar regular products whose topological equivalence as
// single operators decides the question; that pair is returned as is.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclerep/cycle.hpp"
#include "cyclerep/regularize.hpp"
#include "cyclerep/similarity.hpp"

namespace cyclerep {

/// A_t ... A_2 A_1 on V_1.
template <ExactField F>
Matrix<F> product_operator(const Cycle<F>& c) {
  return hat_operator(c, 1);
}

template <ExactField F>
struct IdentityForm {
  Cycle<F> aprime;               // maps (1, ..., 1, A_t ... A_1)
  TransformationSystem<F> phis;  // transforms aprime to the input
};

/// For a regular cycle, phi = (1, A_1, A_2 A_1, ..., A_{t-1} ... A_1) transforms
/// the identity form to the cycle.
template <ExactField F>
IdentityForm<F> identity_form_witness(const Cycle<F>& c) {
  require_valid(c, "identity_form_witness");
  for (std::size_t v = 1; v <= c.t; ++v)
    if (!is_invertible(c.map(v)))
      throw InvalidInput("identity_form_witness: cycle is not regular, A_" + std::to_string(v) + " (" + c.map(v).shape() +
                         ") is not invertible");
  IdentityForm<F> out{identity_form_cycle(c.t, product_operator(c)), {}};
  Matrix<F> partial = Matrix<F>::identity(c.dim(1));
  for (std::size_t v = 1; v <= c.t; ++v) {
    out.phis.phis.push_back(partial);
    if (v < c.t) partial = matmul(c.map(v), partial);
  }
  return out;
}

namespace detail {

/// Invariants that decide isomorphism: chains from the kernel table, regular part.
template <ExactField F>
struct IsoInvariants {
  std::vector<ChainSummand> chains;
  Cycle<F> regular;
  Matrix<F> product;
};

template <ExactField F>
IsoInvariants<F> iso_invariants(const Cycle<F>& c) {
  IsoInvariants<F> out;
  out.chains = singular_counts(kernel_dim_table(c));
  out.regular = regular_part(c);
  out.product = product_operator(out.regular);
  return out;
}

}  // namespace detail

template <ExactField F>
bool is_isomorphic(const Cycle<F>& a, const Cycle<F>& b) {
  require_valid(a, "is_isomorphic");
  require_valid(b, "is_isomorphic");
  if (a.t != b.t || a.dims != b.dims) return false;
  const auto ia = detail::iso_invariants(a);
  const auto ib = detail::iso_invariants(b);
  return ia.chains == ib.chains && are_similar(ia.product, ib.product);
}

/// Linear witness transforming a to b, composed as
/// (b <- canonical_b) ∘ (canonical_b <- canonical_a) ∘ (canonical_a <- a).
template <ExactField F>
TransformationSystem<F> isomorphism_witness(const Cycle<F>& a, const Cycle<F>& b) {
  require_valid(a, "isomorphism_witness");
  require_valid(b, "isomorphism_witness");
  if (a.t != b.t || a.dims != b.dims) throw InvalidInput("isomorphism_witness: cycles are not isomorphic (dimensions differ)");
  if (a == b) return identity_system(a);
  const auto da = regularizing_decomposition(a);
  const auto db = regularizing_decomposition(b);
  if (da.chains != db.chains) throw InvalidInput("isomorphism_witness: cycles are not isomorphic (chain summands differ)");

  const auto fa = identity_form_witness(da.regular_part);
  const auto fb = identity_form_witness(db.regular_part);
  const auto s = similarity_transform(fa.aprime.map(a.t), fb.aprime.map(b.t));
  if (!s) throw InvalidInput("isomorphism_witness: cycles are not isomorphic (regular products are not similar)");

  TransformationSystem<F> middle;
  for (std::size_t v = 1; v <= a.t; ++v) {
    // regular block: fb_v · S · fa_v^{-1}; chain block: identity
    const Matrix<F> reg = matmul(fb.phis.at(v), matmul(*s, inverse(fa.phis.at(v))));
    const std::size_t chain_dim = a.dim(v) - reg.rows();
    middle.phis.push_back(block_diag(reg, Matrix<F>::identity(chain_dim)));
  }
  auto witness = compose(db.witness, compose(middle, invert(da.witness)));
  if (const auto chk = check_commutes(a, b, witness); !chk)
    throw InternalError("isomorphism_witness: composed witness fails: " + chk.reason);
  return witness;
}

enum class Verdict { NotEquivalent, Equivalent, ReducedToOperatorPair };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::NotEquivalent: return "NotEquivalent";
    case Verdict::Equivalent: return "Equivalent";
    case Verdict::ReducedToOperatorPair: return "ReducedToOperatorPair";
  }
  return "?";
}

template <ExactField F>
struct ReductionReport {
  bool dims_match = false;
  std::vector<ChainSummand> singular_chains_a;
  std::vector<ChainSummand> singular_chains_b;
  bool singular_match = false;
  Matrix<F> product_a;  // regular-part products
  Matrix<F> product_b;
  Verdict verdict = Verdict::NotEquivalent;
  /// NotEquivalent: why; Equivalent: the kind of witness; Reduced: what is left open.
  std::string reason;
  /// Present exactly when the verdict is Equivalent; checked by check_commutes.
  std::optional<TransformationSystem<F>> witness;
};

template <ExactField F>
ReductionReport<F> topological_reduction(const Cycle<F>& a, const Cycle<F>& b) {
  require_valid(a, "topological_reduction");
  require_valid(b, "topological_reduction");
  ReductionReport<F> rep;
  if (a.t != b.t) {
    rep.reason = "cycle lengths differ (" + std::to_string(a.t) + " vs " + std::to_string(b.t) + ")";
    return rep;
  }
  rep.dims_match = a.dims == b.dims;
  const auto ia = detail::iso_invariants(a);
  const auto ib = detail::iso_invariants(b);
  rep.singular_chains_a = ia.chains;
  rep.singular_chains_b = ib.chains;
  rep.singular_match = ia.chains == ib.chains;
  rep.product_a = ia.product;
  rep.product_b = ib.product;
  if (!rep.dims_match) {
    for (std::size_t v = 1; v <= a.t; ++v)
      if (a.dim(v) != b.dim(v)) {
        rep.reason = "dimension mismatch at vertex " + std::to_string(v) + " (" + std::to_string(a.dim(v)) + " vs " +
                     std::to_string(b.dim(v)) + ")";
        break;
      }
    return rep;
  }
  if (!rep.singular_match) {
    rep.reason = "singular summands differ (kernel-dimension tables differ)";
    return rep;
  }
  if (are_similar(ia.product, ib.product)) {
    rep.witness = isomorphism_witness(a, b);
    rep.verdict = Verdict::Equivalent;
    rep.reason = "linear isomorphism";
    return rep;
  }
  rep.verdict = Verdict::ReducedToOperatorPair;
  rep.reason = "regular products are not linearly similar; equivalence reduces to the operator pair (P, Q)";
  return rep;
}

}  // namespace cyclerep

#endif  // CYCLEREP_EQUIVALENCE_HPP
