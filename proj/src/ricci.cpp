#include "mlie/ricci.hpp"

namespace mlie {

RicciData ricci_formula(const Metric& m) {
  if (m.degenerate()) throw degenerate_metric_error("ricci_formula: metric is degenerate");
  const LieAlgebra& alg = m.algebra();
  Index n = alg.dim();

  std::vector<RatMat> ad(n);
  std::vector<RatMat> dflat(n);  // d(e_i^b) as 2-form matrices
  RatVec ad_traces(n);
  for (Index i = 0; i < n; ++i) {
    ad[i] = alg.ad_basis(i);
    dflat[i] = one_form_differential(alg, RatVec(m.gram().col(i)));
    ad_traces(i) = ad[i].trace();
  }
  RatMat killing = killing_form(alg);

  RatMat ric(n, n);
  Rat half(1, 2);
  for (Index a = 0; a < n; ++a)
    for (Index b = a; b < n; ++b) {
      Rat term1 = half * inner_2forms(m, dflat[a], dflat[b]);
      Rat term2 = half * inner_endos(m, ad[a], ad[b]);
      // (v . dw^b)_j = dw^b(v, e_j): contraction picks out row a.
      RatVec contraction = dflat[b].row(a).transpose() + dflat[a].row(b).transpose();
      Rat term3 = half * (ad_traces.transpose() * sharp(m, contraction))(0, 0);
      Rat term4 = half * killing(a, b);
      ric(a, b) = term1 - term2 - term3 - term4;
      ric(b, a) = ric(a, b);
    }

  RicciData out;
  out.ric_op = m.inverse_gram() * ric;
  out.scalar = out.ric_op.trace();
  out.ric = std::move(ric);
  return out;
}

RicciData ricci_koszul(const Metric& m) {
  if (m.degenerate()) throw degenerate_metric_error("ricci_koszul: metric is degenerate");
  const LieAlgebra& alg = m.algebra();
  Index n = alg.dim();

  std::vector<RatVec> basis(n);
  for (Index i = 0; i < n; ++i) {
    basis[i] = RatVec::Zero(n);
    basis[i](i) = Rat(1);
  }
  std::vector<std::vector<RatVec>> br(n, std::vector<RatVec>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) br[i][j] = alg.bracket(basis[i], basis[j]);

  // Koszul formula for left-invariant fields:
  //   2 g(nabla_{e_i} e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j).
  Rat half(1, 2);
  std::vector<RatMat> gamma(n);  // gamma[i] * z = nabla_{e_i} z
  for (Index i = 0; i < n; ++i) {
    gamma[i] = RatMat(n, n);
    for (Index j = 0; j < n; ++j) {
      RatVec k_cov(n);
      for (Index k = 0; k < n; ++k) {
        Rat a = (br[i][j].transpose() * m.gram() * basis[k])(0, 0);
        Rat b = (br[j][k].transpose() * m.gram() * basis[i])(0, 0);
        Rat c = (br[k][i].transpose() * m.gram() * basis[j])(0, 0);
        k_cov(k) = half * (a - b + c);
      }
      gamma[i].col(j) = m.inverse_gram() * k_cov;
    }
  }

  // R(x,y) = nabla_x nabla_y - nabla_y nabla_x - nabla_{[x,y]};
  // ric(x,y) = tr(z -> R(z,x)y).
  RatMat ric(n, n);
  for (Index a = 0; a < n; ++a)
    for (Index b = a; b < n; ++b) {
      Rat sum(0);
      for (Index c = 0; c < n; ++c) {
        RatMat nabla_bracket = RatMat::Zero(n, n);
        for (Index k = 0; k < n; ++k)
          if (!br[c][a](k).is_zero()) nabla_bracket += br[c][a](k) * gamma[k];
        RatVec r = gamma[c] * (gamma[a] * basis[b]) - gamma[a] * (gamma[c] * basis[b]) -
                   nabla_bracket * basis[b];
        sum += r(c);
      }
      ric(a, b) = sum;
      ric(b, a) = sum;
    }

  RicciData out;
  out.ric_op = m.inverse_gram() * ric;
  out.scalar = out.ric_op.trace();
  out.ric = std::move(ric);
  return out;
}

EinsteinVerdict einstein_check(const Metric& m) {
  EinsteinVerdict out{EinsteinVerdict::Kind::NotEinstein, Rat(0), RatMat(), ricci_formula(m)};
  Index n = m.dim();
  out.lambda = out.data.scalar / Rat(static_cast<long long>(n));
  out.residual = out.data.ric_op;
  for (Index i = 0; i < n; ++i) out.residual(i, i) -= out.lambda;
  if (is_zero(out.data.ric)) {
    out.kind = EinsteinVerdict::Kind::RicciFlat;
    out.lambda = Rat(0);
  } else if (is_zero(out.residual)) {
    out.kind = EinsteinVerdict::Kind::Einstein;
  }
  return out;
}

}  // namespace mlie
