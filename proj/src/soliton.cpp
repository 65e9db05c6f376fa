#include "mlie/soliton.hpp"

#include <sstream>

namespace mlie {

namespace {

RatVec flatten(const RatMat& m) {
  RatVec v(m.rows() * m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

RatMat unflatten(const RatVec& v, Index n) {
  RatMat m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = v(i * n + j);
  return m;
}

// "e1 + 7/12 e3" style rendering of a coordinate vector.
std::string combo(const RatVec& v) {
  std::ostringstream os;
  bool first = true;
  for (Index k = 0; k < v.size(); ++k) {
    if (v(k).is_zero()) continue;
    Rat c = v(k);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    Rat mag = abs(c);
    if (mag != Rat(1)) os << mag.str() << " ";
    os << "e" << (k + 1);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string basis_names(const Subspace& s) {
  std::ostringstream os;
  os << "span{";
  for (Index c = 0; c < s.dim(); ++c) {
    if (c) os << ", ";
    os << combo(s.basis().col(c));
  }
  os << "}";
  return os.str();
}

}  // namespace

std::vector<RatMat> derivation_space(const LieAlgebra& alg) {
  Index n = alg.dim();
  // Unknowns d_{km}, row-major. One equation per (i, j, k):
  //   sum_m c^m_{ij} d_{km} - sum_m d_{mi} c^k_{mj} - sum_m d_{mj} c^k_{im} = 0.
  RatMat sys = RatMat::Zero(n * n * n, n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        Index row = (i * n + j) * n + k;
        for (Index m = 0; m < n; ++m) {
          sys(row, k * n + m) += alg.structure(m)(i, j);
          sys(row, m * n + i) -= alg.structure(k)(m, j);
          sys(row, m * n + j) -= alg.structure(k)(i, m);
        }
      }
  RatMat ker = kernel_basis(sys);
  std::vector<RatMat> out;
  for (Index c = 0; c < ker.cols(); ++c) out.push_back(unflatten(ker.col(c), n));
  return out;
}

bool is_derivation(const LieAlgebra& alg, const RatMat& d) {
  Index n = alg.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      RatVec ei = RatVec::Zero(n), ej = RatVec::Zero(n);
      ei(i) = Rat(1);
      ej(j) = Rat(1);
      RatVec lhs = d * alg.bracket(ei, ej);
      RatVec rhs = alg.bracket(d * ei, ej) + alg.bracket(ei, d * ej);
      if (!is_zero(RatMat(lhs - rhs))) return false;
    }
  return true;
}

NilsolitonResult nilsoliton_solve(const Metric& m) {
  if (!classify(m.algebra()).nilpotent)
    throw error("nilsoliton_solve: the algebra is not nilpotent");
  Index n = m.dim();
  RicciData ric = ricci_formula(m);
  std::vector<RatMat> ders = derivation_space(m.algebra());

  RatMat sys(n * n, 1 + static_cast<Index>(ders.size()));
  sys.col(0) = flatten(RatMat(RatMat::Identity(n, n)));
  for (size_t i = 0; i < ders.size(); ++i) sys.col(1 + static_cast<Index>(i)) = flatten(ders[i]);
  AffineSolution sol = solve_affine(sys, flatten(ric.ric_op));

  NilsolitonResult out{NilsolitonResult::Kind::None, Rat(0), RatMat::Zero(n, n), 0, ric};
  if (!sol.consistent) return out;
  out.lambda = sol.particular(0);
  out.derivation = ric.ric_op;
  for (Index i = 0; i < n; ++i) out.derivation(i, i) -= out.lambda;
  out.family_dim = sol.kernel.cols();
  out.kind = out.family_dim == 0 ? NilsolitonResult::Kind::Unique : NilsolitonResult::Kind::Family;

  // Solutions are re-verified, not assumed.
  if (!is_derivation(m.algebra(), out.derivation))
    throw error("nilsoliton_solve: solution fails the Leibniz rule");
  RatMat check = out.lambda * RatMat::Identity(n, n) + out.derivation;
  if (!same(check, ric.ric_op)) throw error("nilsoliton_solve: solution fails Ric = lambda Id + D");
  return out;
}

GenNilsolitonRhs gen_nilsoliton_rhs(const Metric& m, const RatMat& d, int tau) {
  if (tau != 1 && tau != -1) throw std::invalid_argument("gen_nilsoliton_rhs: tau must be +-1");
  if (!classify(m.algebra()).nilpotent)
    throw error("gen_nilsoliton_rhs: the equation is posed on nilpotent algebras");
  if (!is_derivation(m.algebra(), d)) throw error("gen_nilsoliton_rhs: operator is not a derivation");
  Index n = m.dim();
  RatMat dstar = metric_adjoint(m, d);
  RatMat ds = Rat(1, 2) * (d + dstar);
  RatMat rhs = -Rat((ds * ds).trace()) * RatMat::Identity(n, n) -
               Rat(1, 2) * (d * dstar - dstar * d) + Rat(d.trace()) * ds;
  GenNilsolitonRhs out;
  out.rhs = Rat(tau) * rhs;
  out.trace_residuals = RatVec(n);
  for (Index i = 0; i < n; ++i) out.trace_residuals(i) = (m.algebra().ad_basis(i) * dstar).trace();
  return out;
}

FamilySystem gen_nilsoliton_family_system(const Metric& m, const std::vector<RatMat>& generators,
                                          int tau) {
  if (generators.size() > 2)
    throw unsupported_error("gen_nilsoliton_family_system: at most 2 generators");
  if (!classify(m.algebra()).nilpotent)
    throw error("gen_nilsoliton_family_system: the equation is posed on nilpotent algebras");
  for (const auto& g : generators)
    if (!is_derivation(m.algebra(), g))
      throw error("gen_nilsoliton_family_system: generator is not a derivation");
  Index n = m.dim();

  FamilySystem out;
  out.tau = tau;
  if (generators.size() == 1) out.parameters = {"t"};
  if (generators.size() == 2) out.parameters = {"alpha", "beta"};
  const auto& vars = out.parameters;

  PolyMat d(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      d(i, j) = MPoly::constant(Rat(0), vars);
      for (size_t k = 0; k < generators.size(); ++k)
        d(i, j) += MPoly::var(vars[k], vars) * MPoly::constant(generators[k](i, j), vars);
    }
  PolyMat dstar = metric_adjoint(m, d);
  MPoly half = MPoly::constant(Rat(1, 2), vars);
  PolyMat ds(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) ds(i, j) = half * (d(i, j) + dstar(i, j));

  MPoly tr_ds2 = PolyMat(ds * ds).trace();
  MPoly tr_d = d.trace();
  PolyMat commutator = PolyMat(d * dstar) - PolyMat(dstar * d);
  PolyMat rhs(n, n);
  MPoly tau_p = MPoly::constant(Rat(tau), vars);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      MPoly v = -half * commutator(i, j) + tr_d * ds(i, j);
      if (i == j) v -= tr_ds2;
      rhs(i, j) = tau_p * v;
    }

  RicciData ric = ricci_formula(m);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      out.equations.push_back(rhs(i, j) - MPoly::constant(ric.ric_op(i, j), vars));
  for (Index i = 0; i < n; ++i) {
    PolyMat ad_i = to_poly(m.algebra().ad_basis(i), vars);
    out.equations.push_back(PolyMat(ad_i * dstar).trace());
  }
  out.d = std::move(d);
  out.rhs = std::move(rhs);
  out.verdict = solve_poly_system_2var(out.equations);
  return out;
}

std::array<FamilySystem, 2> gen_nilsoliton_family_check(const Metric& m,
                                                        const std::vector<RatMat>& generators) {
  return {gen_nilsoliton_family_system(m, generators, +1),
          gen_nilsoliton_family_system(m, generators, -1)};
}

DecompositionVerdict verify_decomposition(const Decomposition& d) {
  DecompositionVerdict out{DecompositionVerdict::Kind::Fails, {}};
  const Metric& m = d.metric;
  Index n = m.dim();

  SubspaceFlags gf = classify_subspace(d.g_part);
  if (!gf.ideal)
    out.reasons.push_back("g-part is not an ideal");
  else if (!gf.nilpotent_ideal)
    out.reasons.push_back("g-part is an ideal but not nilpotent");

  Subspace abrackets = bracket_span(d.a_part);
  if (abrackets.dim() > 0) {
    // Report one offending pair, oriented so the bracket has positive lead.
    for (Index i = 0; i < d.a_part.dim(); ++i)
      for (Index j = i + 1; j < d.a_part.dim(); ++j) {
        RatVec b = m.algebra().bracket(d.a_part.basis().col(i), d.a_part.basis().col(j));
        if (is_zero(RatMat(b))) continue;
        RatVec u = d.a_part.basis().col(i), v = d.a_part.basis().col(j);
        bool flip = false;
        for (Index k = 0; k < n; ++k)
          if (!b(k).is_zero()) {
            flip = b(k).sign() < 0;
            break;
          }
        if (flip) {
          std::swap(u, v);
          b = -b;
        }
        out.reasons.push_back("a-part is not abelian: [" + combo(u) + "," + combo(v) +
                              "] = " + combo(b));
        i = d.a_part.dim();
        break;
      }
  }

  bool orthogonal = true;
  for (Index i = 0; i < d.g_part.dim() && orthogonal; ++i)
    for (Index j = 0; j < d.a_part.dim(); ++j) {
      Rat p = (d.g_part.basis().col(i).transpose() * m.gram() * d.a_part.basis().col(j))(0, 0);
      if (!p.is_zero()) {
        out.reasons.push_back("parts are not orthogonal: g(" + combo(d.g_part.basis().col(i)) +
                              ", " + combo(d.a_part.basis().col(j)) + ") = " + p.str());
        orthogonal = false;
        break;
      }
    }

  if (d.g_part.dim() + d.a_part.dim() != n || d.g_part.sum(d.a_part).dim() != n)
    out.reasons.push_back("parts do not span the algebra directly");

  if (!out.reasons.empty()) return out;

  out.kind = DecompositionVerdict::Kind::Standard;
  bool pseudo_iwasawa = true;
  for (Index j = 0; j < d.a_part.dim(); ++j) {
    RatMat ad_x = m.algebra().ad(d.a_part.basis().col(j));
    if (!same(ad_x, metric_adjoint(m, ad_x))) {
      pseudo_iwasawa = false;
      break;
    }
  }
  if (pseudo_iwasawa) out.kind = DecompositionVerdict::Kind::StandardPseudoIwasawa;
  return out;
}

ObstructionResult standard_obstruction(const Metric& m) {
  ObstructionResult out{ObstructionResult::Kind::Unknown, {}, std::nullopt};
  NilradicalResult nr = nilradical_detail(m.algebra());
  out.trace.push_back("nilradical = " + basis_names(nr.space));

  RestrictResult rest = restrict_and_complement(m, nr.space);
  Signature sig = sym_signature(rest.restricted_gram);
  out.trace.push_back("metric restricted to the nilradical has signature (" +
                      std::to_string(sig.pos) + "," + std::to_string(sig.neg) + "," +
                      std::to_string(sig.zero) + ")");
  if (!rest.definite) {
    out.trace.push_back(
        "restriction is not definite; the obstruction argument does not decide this case");
    return out;
  }
  out.trace.push_back(std::string("nilradical restriction ") +
                      (sig.pos == nr.space.dim() ? "positive" : "negative") + " definite");
  out.trace.push_back(
      "every nilpotent ideal lies in the nilradical and meets it nondegenerately, so any "
      "abelian factor contains the nilradical's orthocomplement");
  out.trace.push_back("orthocomplement = " + basis_names(rest.complement));

  Decomposition cand{m, nr.space, rest.complement};
  DecompositionVerdict v = verify_decomposition(cand);
  Subspace hbr = bracket_span(rest.complement);
  if (hbr.dim() > 0) {
    for (const auto& r : v.reasons)
      if (r.rfind("a-part is not abelian", 0) == 0)
        out.trace.push_back(r.substr(std::string("a-part is not abelian: ").size()) +
                            " != 0: the orthocomplement is not abelian");
    out.trace.push_back("no standard decomposition exists");
    out.kind = ObstructionResult::Kind::NoneExists;
    return out;
  }
  if (v.kind != DecompositionVerdict::Kind::Fails) {
    out.trace.push_back("the pair (nilradical, orthocomplement) is a standard decomposition");
    out.kind = ObstructionResult::Kind::Found;
    out.found = cand;
    return out;
  }
  out.trace.push_back("orthocomplement abelian but the pair fails verification:");
  for (const auto& r : v.reasons) out.trace.push_back("  " + r);
  return out;
}

IwasawaFlags iwasawa_classify(const Decomposition& d, std::optional<RatVec> candidate_h) {
  IwasawaFlags out;
  const Metric& m = d.metric;
  Index n = m.dim();

  out.iw1 = bracket_span(d.a_part).dim() == 0;
  if (!out.iw1) out.notes.push_back("Iw1 fails: the complement is not abelian");

  bool symmetric = true;
  RatMat stacked(n * n, d.a_part.dim());
  for (Index j = 0; j < d.a_part.dim(); ++j) {
    RatMat ad_x = m.algebra().ad(d.a_part.basis().col(j));
    stacked.col(j) = flatten(ad_x);
    if (!same(ad_x, metric_adjoint(m, ad_x))) symmetric = false;
  }
  bool injective = rank(stacked) == d.a_part.dim();
  out.iw2 = symmetric && injective;
  if (!symmetric) out.notes.push_back("Iw2 fails: some ad X is not symmetric for the metric");
  if (!injective) out.notes.push_back("Iw2 fails: X -> ad X is not injective on the complement");

  Subspace derived = series(m.algebra()).derived[1];
  auto positive_on_derived = [&](const RatVec& h) {
    RatMat ad_h = m.algebra().ad(h);
    RatMat form = Rat(1, 2) * (ad_h.transpose() * m.gram() + m.gram() * ad_h);
    RatMat restricted = derived.basis().transpose() * form * derived.basis();
    Signature s = sym_signature(restricted);
    return s.pos == derived.dim() && s.zero == 0;
  };

  std::vector<RatVec> candidates;
  if (candidate_h) candidates.push_back(*candidate_h);
  for (Index j = 0; j < d.a_part.dim(); ++j) {
    candidates.push_back(d.a_part.basis().col(j));
    candidates.push_back(-d.a_part.basis().col(j));
  }
  if (d.a_part.dim() > 1) {
    RatVec sum = RatVec::Zero(n);
    for (Index j = 0; j < d.a_part.dim(); ++j) sum += d.a_part.basis().col(j);
    candidates.push_back(sum);
    candidates.push_back(-sum);
  }
  for (const auto& h : candidates) {
    if (positive_on_derived(h)) {
      out.iw3 = IwasawaFlags::Iw3::Established;
      out.h = h;
      out.notes.push_back("Iw3 established with H = " + combo(h));
      break;
    }
  }
  if (out.iw3 == IwasawaFlags::Iw3::NotEstablished)
    out.notes.push_back("Iw3 not established for any tested candidate");
  return out;
}

AwCorrectionResult aw_correction_solve(const Metric& m, const RatMat& commute_with,
                                       const RatMat& match_sym_of) {
  const LieAlgebra& alg = m.algebra();
  Index n = alg.dim();
  if (commute_with.rows() != n || commute_with.cols() != n || match_sym_of.rows() != n ||
      match_sym_of.cols() != n)
    throw std::invalid_argument("aw_correction_solve: operators must act on the algebra");

  // Stage 1: X in Der(n) with [X, A] = 0, as a kernel over the n^2 entries
  // of X so the free-parameter names follow matrix positions.
  Index leib_rows = n * n * n;
  RatMat sys = RatMat::Zero(leib_rows + n * n, n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        Index row = (i * n + j) * n + k;
        for (Index mm = 0; mm < n; ++mm) {
          sys(row, k * n + mm) += alg.structure(mm)(i, j);
          sys(row, mm * n + i) -= alg.structure(k)(mm, j);
          sys(row, mm * n + j) -= alg.structure(k)(i, mm);
        }
      }
  // [X, A] entries: (XA - AX)_{ij} = sum_m x_{im} A_{mj} - A_{im} x_{mj}.
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Index row = leib_rows + i * n + j;
      for (Index mm = 0; mm < n; ++mm) {
        sys(row, i * n + mm) += commute_with(mm, j);
        sys(row, mm * n + j) -= commute_with(i, mm);
      }
    }
  // Solve the kernel over reversed unknown order so the free parameters sit
  // on the earliest matrix entries (x11, x12, ... in reading order).
  Index nn = n * n;
  RatMat rev(sys.rows(), nn);
  for (Index c = 0; c < nn; ++c) rev.col(c) = sys.col(nn - 1 - c);
  RatMat ker_rev = kernel_basis(rev);
  RatMat ker(nn, ker_rev.cols());
  for (Index c = 0; c < ker_rev.cols(); ++c)
    for (Index r = 0; r < nn; ++r) ker(nn - 1 - r, ker_rev.cols() - 1 - c) = ker_rev(r, c);

  AwCorrectionResult out;
  for (Index c = 0; c < ker.cols(); ++c) out.commutant_basis.push_back(unflatten(ker.col(c), n));
  // Parameter named after the defining free entry of each basis matrix.
  {
    Rref e = rref(rev);
    std::vector<bool> pivot_rev(nn, false);
    for (Index p : e.pivot_cols) pivot_rev[p] = true;
    for (Index cr = nn - 1; cr >= 0; --cr)
      if (!pivot_rev[cr]) {
        Index idx = nn - 1 - cr;
        out.parameters.push_back("x" + std::to_string(idx / n + 1) + std::to_string(idx % n + 1));
      }
  }

  // The symbolic displays need one polynomial variable per free parameter,
  // so they are only rendered for commutants of dimension at most 3; the
  // affine solve below has no such limit.
  const auto& vars = out.parameters;
  if (vars.size() <= 3) {
    out.pattern = PolyMat(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        out.pattern(i, j) = MPoly::constant(Rat(0), vars);
        for (size_t k = 0; k < out.commutant_basis.size(); ++k)
          out.pattern(i, j) +=
              MPoly::var(vars[k], vars) * MPoly::constant(out.commutant_basis[k](i, j), vars);
      }
    PolyMat pattern_star = metric_adjoint(m, out.pattern);
    out.pattern_sym = PolyMat(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) out.pattern_sym(i, j) = out.pattern(i, j) + pattern_star(i, j);
  }
  out.target_sym = match_sym_of + metric_adjoint(m, match_sym_of);

  // Stage 2: X + X* = B + B* over the constrained space.
  RatMat sym_sys(n * n, static_cast<Index>(out.commutant_basis.size()));
  for (size_t k = 0; k < out.commutant_basis.size(); ++k)
    sym_sys.col(static_cast<Index>(k)) =
        flatten(RatMat(out.commutant_basis[k] + metric_adjoint(m, out.commutant_basis[k])));
  AffineSolution sol = solve_affine(sym_sys, flatten(out.target_sym));

  out.empty = !sol.consistent;
  if (out.empty) {
    // Witness: two single-variable equations demanding different values, or
    // a generic inconsistency note.
    std::map<std::string, std::pair<Rat, std::string>> pinned;
    bool found = false;
    for (Index i = 0; i < out.pattern_sym.rows() && !found; ++i)
      for (Index j = 0; j < out.pattern_sym.cols() && !found; ++j) {
        const MPoly& lhs = out.pattern_sym(i, j);
        auto active = lhs.active_vars();
        if (active.size() != 1 || lhs.total_degree() != 1) continue;
        MPoly::Exps e{0, 0, 0};
        for (size_t v = 0; v < vars.size(); ++v)
          if (vars[v] == active[0]) e[v] = 1;
        Rat coeff = lhs.coeff(e);
        Rat value = (out.target_sym(i, j) - lhs.coeff({0, 0, 0})) / coeff;
        std::string eqn = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " +
                          lhs.str() + " = " + out.target_sym(i, j).str() + " forces " + active[0] +
                          " = " + value.str();
        auto it = pinned.find(active[0]);
        if (it == pinned.end()) {
          pinned[active[0]] = {value, eqn};
        } else if (it->second.first != value) {
          out.witness.push_back(it->second.second);
          out.witness.push_back(eqn);
          out.witness.push_back("contradictory requirements on " + active[0] + ": no solution");
          found = true;
        }
      }
    if (!found)
      out.witness.push_back("the symmetrization equations are inconsistent over the constrained space");
    return out;
  }

  RatMat particular = RatMat::Zero(n, n);
  for (size_t k = 0; k < out.commutant_basis.size(); ++k)
    particular += sol.particular(static_cast<Index>(k)) * out.commutant_basis[k];
  out.particular = particular;
  for (Index c = 0; c < sol.kernel.cols(); ++c) {
    RatMat dir = RatMat::Zero(n, n);
    for (size_t k = 0; k < out.commutant_basis.size(); ++k)
      dir += sol.kernel(static_cast<Index>(k), c) * out.commutant_basis[k];
    out.directions.push_back(dir);
  }

  // Solutions are re-verified, not assumed.
  auto verify = [&](const RatMat& x) {
    if (!is_derivation(alg, x)) throw error("aw_correction_solve: solution fails Leibniz");
    if (!is_zero(RatMat(x * commute_with - commute_with * x)))
      throw error("aw_correction_solve: solution fails commutation");
  };
  verify(out.particular);
  if (!is_zero(RatMat(out.particular + metric_adjoint(m, out.particular) - out.target_sym)))
    throw error("aw_correction_solve: solution fails symmetrization");
  for (const auto& dir : out.directions) verify(out.particular + dir);
  return out;
}

}  // namespace mlie
