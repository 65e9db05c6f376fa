#pragma once

#include "mlie/lie_algebra.hpp"

namespace mlie {

/// Pseudo-Riemannian inner product on a Lie algebra, given by its Gram
/// matrix in the defining basis. Possibly indefinite; degenerate Gram
/// matrices are only admitted for restrictions.
class Metric {
public:
  Metric(LieAlgebra alg, RatMat gram, bool allow_degenerate = false);

  const LieAlgebra& algebra() const { return alg_; }
  const RatMat& gram() const { return gram_; }
  Index dim() const { return alg_.dim(); }
  bool degenerate() const { return degenerate_; }
  /// Inverse Gram matrix; throws degenerate_metric_error when degenerate.
  const RatMat& inverse_gram() const;

private:
  LieAlgebra alg_;
  RatMat gram_;
  bool degenerate_;
  RatMat inverse_;  // empty when degenerate
};

Signature signature(const Metric& m);

/// Musical isomorphisms: v-flat = g v, alpha-sharp = g^{-1} alpha.
RatVec flat(const Metric& m, const RatVec& v);
RatVec sharp(const Metric& m, const RatVec& alpha);

/// Metric adjoint a* = g^{-1} a^T g, the unique operator with
/// g(a* x, y) = g(x, a y).
RatMat metric_adjoint(const Metric& m, const RatMat& a);
PolyMat metric_adjoint(const Metric& m, const PolyMat& a);

/// Induced inner product of 2-forms (antisymmetric matrices of values
/// alpha(e_i, e_j)); normalized so an orthonormal e^1^e^2 has norm 1.
Rat inner_2forms(const Metric& m, const RatMat& alpha, const RatMat& beta);

/// Inner product of endomorphisms: <a, b> = tr(a b*).
Rat inner_endos(const Metric& m, const RatMat& a, const RatMat& b);

/// d of a 1-form: (d alpha)(x, y) = -alpha([x, y]), as an antisymmetric
/// matrix of values on basis pairs.
RatMat one_form_differential(const LieAlgebra& alg, const RatVec& alpha);

struct RestrictResult {
  RatMat restricted_gram;               // basis^T gram basis
  std::optional<Metric> restricted;     // present when s is a subalgebra
  Subspace complement;                  // g-orthocomplement of s
  bool nondegenerate = false;
  bool definite = false;
};
RestrictResult restrict_and_complement(const Metric& m, const Subspace& s);

struct OrthoVec {
  RatVec v;
  Rat norm;
};
/// Gram-Schmidt over Q without normalization: pairwise g-orthogonal vectors,
/// integer-scaled, with exact norms. Null pivots are replaced by sum pivots.
std::vector<OrthoVec> orthogonalize(const Metric& m);
std::vector<OrthoVec> orthogonalize(const Metric& m, const RatMat& start_basis);

}  // namespace mlie
