#pragma once

#include "mlie/ricci.hpp"

namespace mlie {

/// Basis of the derivation algebra {D : D[x,y] = [Dx,y] + [x,Dy]},
/// deterministic (kernel of the stacked Leibniz system).
std::vector<RatMat> derivation_space(const LieAlgebra& alg);
bool is_derivation(const LieAlgebra& alg, const RatMat& d);

/// Solutions of Ric = lambda Id + D over derivations D.
struct NilsolitonResult {
  enum class Kind { Unique, None, Family };
  Kind kind;
  Rat lambda;        // valid unless None
  RatMat derivation; // particular solution
  Index family_dim;  // 0 for Unique
  RicciData ricci;
};
NilsolitonResult nilsoliton_solve(const Metric& m);

/// Right-hand side of the generalized nilsoliton equation
///   Ric = tau( -tr((D^s)^2) Id - 1/2 [D, D*] + (tr D) D^s ),
/// plus the trace constraints tr(ad e_i D*).
struct GenNilsolitonRhs {
  RatMat rhs;
  RatVec trace_residuals;
};
GenNilsolitonRhs gen_nilsoliton_rhs(const Metric& m, const RatMat& d, int tau);

/// Symbolic version over a parameterized family D = sum c_i A_i.
struct FamilySystem {
  std::vector<std::string> parameters;
  int tau;
  PolyMat d;                    // the symbolic derivation
  PolyMat rhs;                  // symbolic right-hand side
  std::vector<MPoly> equations; // rhs - Ric entries plus trace constraints
  PolySolve verdict;
};
FamilySystem gen_nilsoliton_family_system(const Metric& m, const std::vector<RatMat>& generators,
                                          int tau);
/// Both signs tau = +1, -1.
std::array<FamilySystem, 2> gen_nilsoliton_family_check(const Metric& m,
                                                        const std::vector<RatMat>& generators);

/// Candidate orthogonal splitting of a metric Lie algebra.
struct Decomposition {
  Metric metric;
  Subspace g_part;  // nilpotent ideal candidate
  Subspace a_part;  // abelian complement candidate
};

struct DecompositionVerdict {
  enum class Kind { Standard, StandardPseudoIwasawa, Fails };
  Kind kind;
  std::vector<std::string> reasons;  // itemized failures (empty on success)
};
DecompositionVerdict verify_decomposition(const Decomposition& d);

/// Existence of any standard decomposition, by the definite-nilradical
/// obstruction argument. Unknown outside that regime.
struct ObstructionResult {
  enum class Kind { NoneExists, Found, Unknown };
  Kind kind;
  std::vector<std::string> trace;
  std::optional<Decomposition> found;
};
ObstructionResult standard_obstruction(const Metric& m);

struct IwasawaFlags {
  bool iw1 = false;           // orthocomplement abelian
  bool iw2 = false;           // ad X symmetric and injective on a_part
  enum class Iw3 { Established, NotEstablished } iw3 = Iw3::NotEstablished;
  std::optional<RatVec> h;    // certifying element when established
  std::vector<std::string> notes;
};
IwasawaFlags iwasawa_classify(const Decomposition& d, std::optional<RatVec> candidate_h = {});

/// Linear solvability of the correction equations
///   [X, A] = 0,  X + X* = B + B*   over X in Der(n).
struct AwCorrectionResult {
  std::vector<RatMat> commutant_basis;  // Der(n) cut by [X, A] = 0
  std::vector<std::string> parameters;  // one name per basis element
  PolyMat pattern;                      // symbolic constrained X
  PolyMat pattern_sym;                  // symbolic X + X*
  RatMat target_sym;                    // B + B*
  bool empty;
  RatMat particular;                    // when nonempty
  std::vector<RatMat> directions;       // affine directions when nonempty
  std::vector<std::string> witness;
};
AwCorrectionResult aw_correction_solve(const Metric& m, const RatMat& commute_with,
                                       const RatMat& match_sym_of);

}  // namespace mlie
