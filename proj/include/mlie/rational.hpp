#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mlie {

/// Exact rational number. Always in lowest terms with positive denominator;
/// arithmetic never rounds.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(static_cast<long>(n)) {}
  Rat(long long n) : v_(std::to_string(n)) {}
  Rat(long long num, long long den);
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "-p", "p/q" (q > 0 after normalization). Throws
  /// std::invalid_argument on malformed input or zero denominator.
  static Rat parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend Rat abs(const Rat& a) { return Rat(mpq_class(::abs(a.v_))); }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Largest integer <= r.
mpz_class floor_int(const Rat& r);

}  // namespace mlie

namespace Eigen {

template <>
struct NumTraits<mlie::Rat> : GenericNumTraits<mlie::Rat> {
  typedef mlie::Rat Real;
  typedef mlie::Rat NonInteger;
  typedef mlie::Rat Nested;
  typedef mlie::Rat Literal;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
};

}  // namespace Eigen
