#pragma once

#include <random>

#include "mlie/metric.hpp"

namespace mlie::test {

// Deterministic generator for property-style tests.
class Gen {
public:
  explicit Gen(uint64_t seed = 20240527) : rng_(seed) {}

  Rat rat(long lo = -9, long hi = 9, long max_den = 9) {
    std::uniform_int_distribution<long> num(lo, hi), den(1, max_den);
    return Rat(num(rng_), den(rng_));
  }

  RatVec vec(Index n) {
    RatVec v(n);
    for (Index i = 0; i < n; ++i) v(i) = rat();
    return v;
  }

  RatMat matrix(Index r, Index c) {
    RatMat m(r, c);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j) m(i, j) = rat();
    return m;
  }

  RatMat invertible(Index n) {
    while (true) {
      RatMat m = matrix(n, n);
      if (!det(m).is_zero()) return m;
    }
  }

  RatMat symmetric(Index n, long lo = -3, long hi = 3, long max_den = 4) {
    RatMat m(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = i; j < n; ++j) {
        m(i, j) = rat(lo, hi, max_den);
        m(j, i) = m(i, j);
      }
    return m;
  }

  int integer(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng_);
  }

private:
  std::mt19937_64 rng_;
};

inline LieAlgebra paper_algebra() {
  return LieAlgebra::parse("(e42+e51-e54, -e41+e52, e12-e51+2*e53-7/12*e54, 0, 0)");
}

inline RatMat paper_gram() {
  RatMat g = RatMat::Zero(5, 5);
  g(0, 0) = Rat(497, 576);
  g(1, 1) = Rat(49, 192);
  g(2, 2) = Rat(2);
  g(0, 2) = g(2, 0) = Rat(-7, 6);
  g(3, 3) = Rat(-245, 6144);
  g(4, 4) = Rat(-1225, 6144);
  return g;
}

inline Metric paper_metric() { return Metric(paper_algebra(), paper_gram()); }

inline LieAlgebra heisenberg() { return LieAlgebra::parse("(0,0,e12)"); }

inline RatMat ghat_gram() {
  RatMat g = RatMat::Zero(3, 3);
  g(0, 0) = Rat(497, 576);
  g(1, 1) = Rat(49, 192);
  g(2, 2) = Rat(2);
  g(0, 2) = g(2, 0) = Rat(-7, 6);
  return g;
}

inline Metric heis_ghat() { return Metric(heisenberg(), ghat_gram()); }
inline Metric heis_flat() { return Metric(heisenberg(), RatMat(RatMat::Identity(3, 3))); }

}  // namespace mlie::test
