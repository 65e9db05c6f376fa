#include "mlie/metric.hpp"

namespace mlie {

Metric::Metric(LieAlgebra alg, RatMat gram, bool allow_degenerate)
    : alg_(std::move(alg)), gram_(std::move(gram)) {
  if (gram_.rows() != alg_.dim() || gram_.cols() != alg_.dim())
    throw std::invalid_argument("Metric: Gram matrix has wrong shape");
  for (Index i = 0; i < gram_.rows(); ++i)
    for (Index j = i + 1; j < gram_.cols(); ++j)
      if (gram_(i, j) != gram_(j, i)) throw std::invalid_argument("Metric: Gram matrix not symmetric");
  degenerate_ = det(gram_).is_zero();
  if (degenerate_ && !allow_degenerate)
    throw degenerate_metric_error("Metric: Gram matrix is degenerate");
  if (!degenerate_) inverse_ = inverse(gram_);
}

const RatMat& Metric::inverse_gram() const {
  if (degenerate_) throw degenerate_metric_error("Metric: degenerate metric has no inverse");
  return inverse_;
}

Signature signature(const Metric& m) { return sym_signature(m.gram()); }

RatVec flat(const Metric& m, const RatVec& v) { return m.gram() * v; }

RatVec sharp(const Metric& m, const RatVec& alpha) { return m.inverse_gram() * alpha; }

RatMat metric_adjoint(const Metric& m, const RatMat& a) {
  return m.inverse_gram() * a.transpose() * m.gram();
}

PolyMat metric_adjoint(const Metric& m, const PolyMat& a) {
  std::vector<std::string> vars;
  for (Index i = 0; i < a.rows() && vars.empty(); ++i)
    for (Index j = 0; j < a.cols() && vars.empty(); ++j) vars = a(i, j).vars();
  return to_poly(m.inverse_gram(), vars) * a.transpose() * to_poly(m.gram(), vars);
}

Rat inner_2forms(const Metric& m, const RatMat& alpha, const RatMat& beta) {
  const RatMat& gi = m.inverse_gram();
  return (alpha.transpose() * gi * beta * gi).trace() / Rat(2);
}

Rat inner_endos(const Metric& m, const RatMat& a, const RatMat& b) {
  return (a * metric_adjoint(m, b)).trace();
}

RatMat one_form_differential(const LieAlgebra& alg, const RatVec& alpha) {
  Index n = alg.dim();
  RatMat d = RatMat::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      RatVec ei = RatVec::Zero(n), ej = RatVec::Zero(n);
      ei(i) = Rat(1);
      ej(j) = Rat(1);
      Rat v = -(alpha.transpose() * alg.bracket(ei, ej))(0, 0);
      d(i, j) = v;
      d(j, i) = -v;
    }
  return d;
}

RestrictResult restrict_and_complement(const Metric& m, const Subspace& s) {
  const RatMat& b = s.basis();
  RestrictResult out{RatMat(b.cols(), b.cols()), std::nullopt, Subspace::zero(m.algebra())};
  out.restricted_gram = b.transpose() * m.gram() * b;
  out.complement = Subspace(m.algebra(), kernel_basis(RatMat(b.transpose() * m.gram())));
  out.nondegenerate = s.dim() == 0 || !det(out.restricted_gram).is_zero();
  Signature sig = sym_signature(out.restricted_gram);
  out.definite = sig.zero == 0 && (sig.pos == s.dim() || sig.neg == s.dim());
  SubspaceFlags flags = classify_subspace(s);
  if (flags.subalgebra)
    out.restricted = Metric(induced_algebra(s), out.restricted_gram, /*allow_degenerate=*/true);
  return out;
}

std::vector<OrthoVec> orthogonalize(const Metric& m) {
  return orthogonalize(m, RatMat(RatMat::Identity(m.dim(), m.dim())));
}

std::vector<OrthoVec> orthogonalize(const Metric& m, const RatMat& start_basis) {
  if (m.degenerate()) throw degenerate_metric_error("orthogonalize: metric is degenerate");
  if (rank(start_basis) != start_basis.cols())
    throw std::invalid_argument("orthogonalize: starting vectors dependent");
  RatMat gram = start_basis.transpose() * m.gram() * start_basis;
  Diagonalization d = sym_diagonalize(gram);
  std::vector<OrthoVec> out;
  for (Index c = 0; c < start_basis.cols(); ++c) {
    RatVec v = integer_primitive(start_basis * d.transform.col(c));
    Rat norm = (v.transpose() * m.gram() * v)(0, 0);
    out.push_back({std::move(v), std::move(norm)});
  }
  return out;
}

}  // namespace mlie
