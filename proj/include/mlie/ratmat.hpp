#pragma once

#include <Eigen/Dense>

#include <initializer_list>
#include <vector>

#include "mlie/rational.hpp"

namespace mlie {

using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

RatMat mat(std::initializer_list<std::initializer_list<Rat>> rows);
RatVec vec(std::initializer_list<Rat> entries);

bool is_zero(const RatMat& m);
bool same(const RatMat& a, const RatMat& b);

/// Reduced row echelon form. Pivot rule is fixed: scan columns left to
/// right, take the first row (smallest index) with a nonzero entry.
struct Rref {
  RatMat r;
  std::vector<Index> pivot_cols;
  Index rank;
};
Rref rref(RatMat m);

Index rank(const RatMat& m);

/// Basis of {v : m v = 0}, returned as columns. Deterministic: one vector
/// per free column in increasing order, unit entry at the free column.
RatMat kernel_basis(const RatMat& m);

Rat det(RatMat m);

/// Exact inverse; throws std::invalid_argument if singular or non-square.
RatMat inverse(const RatMat& m);

/// Affine solution set of a x = b.
struct AffineSolution {
  bool consistent;
  RatVec particular;  // valid iff consistent
  RatMat kernel;      // solution set = particular + span(kernel columns)
};
AffineSolution solve_affine(const RatMat& a, const RatVec& b);

/// Coefficients of the monic characteristic polynomial det(t I - m),
/// ascending order, size n+1. Faddeev-LeVerrier recursion, exact over Q.
std::vector<Rat> char_poly(const RatMat& m);

bool is_nilpotent(const RatMat& m);

struct Signature {
  Index pos = 0, neg = 0, zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Congruence diagonalization transform^T * g * transform = diag(diagonal).
/// Null diagonal pivots are replaced by sum pivots b_i += b_j on the first
/// off-diagonal nonzero entry.
struct Diagonalization {
  Signature sig;
  RatMat transform;
  RatVec diagonal;
};
Diagonalization sym_diagonalize(const RatMat& gram);

/// Sylvester inertia (positive, negative, zero) of a symmetric matrix.
Signature sym_signature(const RatMat& gram);

/// Scales a vector by a positive rational so that entries are coprime
/// integers and the first nonzero entry is positive.
RatVec integer_primitive(const RatVec& v);

}  // namespace mlie
