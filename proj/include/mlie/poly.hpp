#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mlie/ratmat.hpp"

namespace mlie {

class UniPoly;

/// Multivariate polynomial over Q in at most 3 named variables.
/// Terms are kept in a canonical (lexicographic exponent) order and zero
/// coefficients are never stored.
class MPoly {
public:
  using Exps = std::array<int, 3>;

  MPoly() = default;
  MPoly(int c) : MPoly(Rat(c)) {}
  explicit MPoly(const Rat& c);

  static MPoly constant(const Rat& c, std::vector<std::string> vars);
  static MPoly var(const std::string& name, std::vector<std::string> vars);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exps, Rat>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;
  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(const std::string& name) const;
  bool is_homogeneous() const;
  std::vector<std::string> active_vars() const;

  Rat coeff(const Exps& e) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend MPoly operator*(const Rat& c, const MPoly& p);
  friend MPoly operator*(const MPoly& p, const Rat& c) { return c * p; }
  MPoly operator/(const Rat& c) const { return Rat(1) / c * *this; }
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly substitute(const std::string& name, const MPoly& value) const;
  /// Simultaneous substitution: variable i is replaced by values[i]; the
  /// result lives in the values' variable set.
  MPoly compose(const std::vector<MPoly>& values) const;
  Rat eval(const std::map<std::string, Rat>& point) const;

  /// Extracts this polynomial as univariate in `name`; all other variables
  /// must be inactive.
  UniPoly to_univariate(const std::string& name) const;
  /// Coefficient of name^k, as a polynomial in the remaining variables.
  MPoly coeff_of_power(const std::string& name, int k) const;

  std::string str() const;

private:
  std::vector<std::string> vars_;
  std::map<Exps, Rat> terms_;

  int var_index(const std::string& name) const;
  static void unify(MPoly& a, MPoly& b);
  void prune();
};

using PolyMat = Eigen::Matrix<MPoly, Eigen::Dynamic, Eigen::Dynamic>;

PolyMat to_poly(const RatMat& m, const std::vector<std::string>& vars);

/// Univariate polynomial over Q, coefficients in ascending order.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> ascending);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : Rat(0); }
  Rat lead() const;
  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const { return eval(x).sign(); }

  UniPoly derivative() const;
  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rat& s, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
  static UniPoly gcd(UniPoly a, UniPoly b);  // monic, or zero if both zero

  /// Content-free integer form: primitive integer coefficients, positive lead.
  UniPoly primitive_integer() const;
  UniPoly square_free_part() const;

  /// Distinct real roots, exact count (Sturm).
  int count_real_roots() const;
  /// All rational roots with multiplicities, exact.
  std::vector<std::pair<Rat, int>> rational_roots() const;
  /// True iff a real irrational root exists.
  bool has_irrational_real_root() const;

  std::string str(const std::string& var) const;

private:
  std::vector<Rat> c_;
  void trim();
};

/// The rational with smallest denominator in [a, b].
Rat simplest_rational_in(Rat a, Rat b);

/// Factorization of a homogeneous binary form into rational linear factors
/// times a remainder with no rational linear factor:
///   f = constant * prod (a_i v1 + b_i v2)^m_i * remainder.
struct BinaryFormFactors {
  struct Linear {
    mpz_class a, b;  // coprime integers, sign-normalized (a > 0, or a = 0 and b > 0)
    int multiplicity;
  };
  Rat constant;
  std::vector<Linear> factors;
  MPoly remainder;  // primitive integer coefficients; the constant 1 when trivial
  bool remainder_has_real_roots;
};
BinaryFormFactors factor_binary_form(const MPoly& f);

/// Exact solver for systems of at most-quadratic equations in at most two
/// variables. Resultant elimination plus Sturm-certified root analysis.
struct PolySolve {
  enum class Kind { Points, NoRational, PositiveDim, Unsupported };
  enum class RealStatus { NoReal, IrrationalRealExists, Undetermined };
  Kind kind = Kind::Unsupported;
  RealStatus real_status = RealStatus::Undetermined;  // meaningful for NoRational
  std::vector<std::map<std::string, Rat>> points;     // for Points, sorted
  bool complete = true;  // for Points: false if irrational real solutions may remain
  std::vector<std::string> witness;
};
PolySolve solve_poly_system_2var(const std::vector<MPoly>& equations);

}  // namespace mlie

namespace Eigen {

template <>
struct NumTraits<mlie::MPoly> : GenericNumTraits<mlie::MPoly> {
  typedef mlie::MPoly Real;
  typedef mlie::MPoly NonInteger;
  typedef mlie::MPoly Nested;
  typedef mlie::MPoly Literal;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 200,
    MulCost = 400,
  };
};

}  // namespace Eigen
