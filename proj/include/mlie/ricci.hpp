#pragma once

#include "mlie/metric.hpp"

namespace mlie {

struct RicciData {
  RatMat ric;     // Ricci tensor, ric(e_i, e_j)
  RatMat ric_op;  // Ricci operator, gram^{-1} ric
  Rat scalar;     // tr(ric_op)
};

/// Ricci tensor of a left-invariant metric via the algebraic formula
///   ric(v,w) = 1/2 <dv^b, dw^b> - 1/2 <ad v, ad w>
///              - 1/2 tr ad((v . dw^b + w . dv^b)^#) - 1/2 B(v,w).
RicciData ricci_formula(const Metric& m);

/// Same contract, entirely independent route: Levi-Civita connection from
/// the Koszul formula, curvature tensor, then the trace.
RicciData ricci_koszul(const Metric& m);

struct EinsteinVerdict {
  enum class Kind { Einstein, RicciFlat, NotEinstein };
  Kind kind;
  Rat lambda;       // scalar/dim
  RatMat residual;  // ric_op - lambda I (zero iff Einstein)
  RicciData data;
};
EinsteinVerdict einstein_check(const Metric& m);

}  // namespace mlie
