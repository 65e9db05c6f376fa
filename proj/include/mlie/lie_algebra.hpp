#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mlie/poly.hpp"
#include "mlie/ratmat.hpp"

namespace mlie {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct parse_error : error {
  parse_error(const std::string& msg, size_t position) : error(msg), pos(position) {}
  size_t pos;
};
struct unsupported_error : error {
  using error::error;
};
struct not_solvable_error : error {
  using error::error;
};
struct degenerate_metric_error : error {
  using error::error;
};

struct JacobiViolation {
  int i, j, k;       // 1-based basis indices
  RatVec residual;   // cyclic bracket sum
};
struct jacobi_error : error {
  jacobi_error(const std::string& msg, JacobiViolation w) : error(msg), witness(std::move(w)) {}
  JacobiViolation witness;
};

/// Finite-dimensional Lie algebra over Q given by structure constants
/// c^k_{ij} with [e_i, e_j] = sum_k c^k_{ij} e_k. Immutable after
/// construction; the checked constructors validate the Jacobi identity.
class LieAlgebra {
public:
  /// Structure equations in Salamon notation, e.g. "(0,0,e12,e13)":
  /// entry k lists d e^k as a signed sum of coeff*eij terms, and
  /// d a(x,y) = -a([x,y]) recovers the brackets.
  static LieAlgebra parse(std::string_view salamon);

  /// From explicit brackets: triples (i, j, [e_i,e_j]) with 1-based i < j.
  static LieAlgebra from_brackets(Index dim,
                                  const std::vector<std::tuple<int, int, RatVec>>& brackets);

  /// Skips the Jacobi check; exists so the validator has a negative path.
  static LieAlgebra unchecked(std::vector<RatMat> structure);

  Index dim() const { return static_cast<Index>(c_.size()); }
  /// Antisymmetric matrix of c^k_{ij} over (i,j) for fixed k.
  const RatMat& structure(Index k) const { return c_[k]; }

  RatVec bracket(const RatVec& x, const RatVec& y) const;
  /// Matrix of y -> [x, y] in the defining basis.
  RatMat ad(const RatVec& x) const;
  RatMat ad_basis(Index i) const;

  std::optional<JacobiViolation> jacobi_violation() const;

  /// Canonical Salamon string (term order by index pair i < j).
  std::string salamon() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

private:
  std::vector<RatMat> c_;
  explicit LieAlgebra(std::vector<RatMat> c) : c_(std::move(c)) {}
  void validate() const;  // antisymmetry + Jacobi, throws
};

/// New algebra in the basis given by the columns of `basis_change`
/// (coordinates of the new basis vectors in the old one).
LieAlgebra change_basis(const LieAlgebra& alg, const RatMat& basis_change);

/// Subspace of a Lie algebra, spanned by the columns of a basis matrix.
/// Construction canonicalizes the basis (RREF of the row space) so equal
/// subspaces compare equal.
class Subspace {
public:
  Subspace(LieAlgebra alg, const RatMat& spanning_vectors);
  static Subspace zero(const LieAlgebra& alg);
  static Subspace full(const LieAlgebra& alg);
  static Subspace coordinate(const LieAlgebra& alg, const std::vector<int>& indices_1based);

  const LieAlgebra& algebra() const { return alg_; }
  const RatMat& basis() const { return basis_; }
  Index dim() const { return basis_.cols(); }

  bool contains(const RatVec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in this basis; throws if v is outside.
  RatVec coordinates(const RatVec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

private:
  LieAlgebra alg_;
  RatMat basis_;
};

/// Span of all brackets [u, v] of basis vectors of s.
Subspace bracket_span(const Subspace& s);

struct SubspaceFlags {
  bool subalgebra = false;
  bool ideal = false;
  bool abelian = false;
  bool nilpotent_ideal = false;
};
SubspaceFlags classify_subspace(const Subspace& s);

/// The abstract Lie algebra structure induced on a subalgebra, expressed in
/// the subspace basis. Throws if s is not closed under the bracket.
LieAlgebra induced_algebra(const Subspace& s);

struct SeriesResult {
  std::vector<Subspace> lower_central;  // g^0 = g, g^i = [g, g^{i-1}], to stabilization
  std::vector<Subspace> derived;        // a_0 = g, a_i = [a_{i-1}, a_{i-1}]
};
SeriesResult series(const LieAlgebra& alg);

struct AlgebraProfile {
  bool nilpotent = false;
  bool solvable = false;
  bool unimodular = false;
  std::optional<int> step;
  std::vector<Index> derived_dims;
  std::vector<Index> lower_central_dims;
  Index rank = 0;  // codimension of [g, g]
};
AlgebraProfile classify(const LieAlgebra& alg);

/// Killing form B(e_i, e_j) = tr(ad e_i ad e_j).
RatMat killing_form(const LieAlgebra& alg);

struct NilradicalResult {
  Subspace space;
  Index rank = 0;       // codimension of the derived algebra
  Index locus_dim = 0;  // dimension of the nilpotent coset locus
  std::vector<std::string> trace;
};
/// Maximal nilpotent ideal of a solvable algebra. Searches the coset space
/// of the derived algebra for ad-nilpotent directions via power traces.
NilradicalResult nilradical_detail(const LieAlgebra& alg);
Subspace nilradical(const LieAlgebra& alg);

}  // namespace mlie
