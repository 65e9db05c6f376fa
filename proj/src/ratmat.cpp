#include "mlie/ratmat.hpp"

#include <stdexcept>

namespace mlie {

RatMat mat(std::initializer_list<std::initializer_list<Rat>> rows) {
  Index nr = static_cast<Index>(rows.size());
  Index nc = nr == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  RatMat m(nr, nc);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != nc) throw std::invalid_argument("ragged matrix literal");
    Index j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

RatVec vec(std::initializer_list<Rat> entries) {
  RatVec v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (const auto& x : entries) v(i++) = x;
  return v;
}

bool is_zero(const RatMat& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

bool same(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

Rref rref(RatMat m) {
  Rref out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index piv = -1;
    for (Index r = row; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    Rat inv = Rat(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Rat f = m(r, col);
      for (Index j = col; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  out.r = std::move(m);
  return out;
}

Index rank(const RatMat& m) { return rref(m).rank; }

RatMat kernel_basis(const RatMat& m) {
  Rref e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index c : e.pivot_cols) is_pivot[c] = true;
  Index k = m.cols() - e.rank;
  RatMat basis = RatMat::Zero(m.cols(), k);
  Index out = 0;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, out) = Rat(1);
    for (Index p = 0; p < e.rank; ++p) basis(e.pivot_cols[p], out) = -e.r(p, free);
    ++out;
  }
  return basis;
}

Rat det(RatMat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  Rat result(1);
  Index n = m.rows();
  for (Index col = 0; col < n; ++col) {
    Index piv = -1;
    for (Index r = col; r < n; ++r)
      if (!m(r, col).is_zero()) { piv = r; break; }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      m.row(piv).swap(m.row(col));
      result = -result;
    }
    result *= m(col, col);
    Rat inv = Rat(1) / m(col, col);
    for (Index r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      Rat f = m(r, col) * inv;
      for (Index j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return result;
}

RatMat inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  Index n = m.rows();
  RatMat aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = RatMat::Identity(n, n);
  Rref e = rref(std::move(aug));
  if (e.rank < n || e.pivot_cols[n - 1] != n - 1)
    throw std::invalid_argument("inverse: singular matrix");
  return e.r.rightCols(n);
}

AffineSolution solve_affine(const RatMat& a, const RatVec& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_affine: size mismatch");
  RatMat aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  Rref e = rref(std::move(aug));
  AffineSolution out;
  out.consistent = e.pivot_cols.empty() || e.pivot_cols.back() < a.cols();
  out.kernel = kernel_basis(a);
  out.particular = RatVec::Zero(a.cols());
  if (out.consistent)
    for (Index p = 0; p < e.rank; ++p) out.particular(e.pivot_cols[p]) = e.r(p, a.cols());
  return out;
}

std::vector<Rat> char_poly(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix not square");
  Index n = m.rows();
  std::vector<Rat> c(n + 1);
  c[n] = Rat(1);
  RatMat mk = RatMat::Zero(n, n);
  for (Index k = 1; k <= n; ++k) {
    RatMat step = mk;
    for (Index i = 0; i < n; ++i) step(i, i) += c[n - k + 1];
    mk = m * step;
    c[n - k] = -mk.trace() / Rat(static_cast<long long>(k));
  }
  return c;
}

bool is_nilpotent(const RatMat& m) {
  auto c = char_poly(m);
  for (size_t i = 0; i + 1 < c.size(); ++i)
    if (!c[i].is_zero()) return false;
  return true;
}

Diagonalization sym_diagonalize(const RatMat& gram) {
  if (gram.rows() != gram.cols()) throw std::invalid_argument("sym_signature: matrix not square");
  Index n = gram.rows();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (gram(i, j) != gram(j, i)) throw std::invalid_argument("sym_signature: matrix not symmetric");

  RatMat g = gram;
  RatMat c = RatMat::Identity(n, n);
  Diagonalization out;
  auto add_basis = [&](Index dst, Index src) {
    // b_dst += b_src, i.e. congruence by E = I + e_src,dst.
    g.col(dst) += g.col(src);
    g.row(dst) += g.row(src);
    c.col(dst) += c.col(src);
  };
  auto swap_basis = [&](Index a, Index b) {
    g.col(a).swap(g.col(b));
    g.row(a).swap(g.row(b));
    c.col(a).swap(c.col(b));
  };
  Index k = 0;
  for (; k < n; ++k) {
    if (g(k, k).is_zero()) {
      Index diag = -1;
      for (Index j = k + 1; j < n; ++j)
        if (!g(j, j).is_zero()) { diag = j; break; }
      if (diag >= 0) {
        swap_basis(k, diag);
      } else {
        // All remaining diagonal entries vanish; pivot on b_i + b_j for the
        // first nonzero off-diagonal pair, or stop if the block is zero.
        Index pi = -1, pj = -1;
        for (Index i = k; i < n && pi < 0; ++i)
          for (Index j = i + 1; j < n; ++j)
            if (!g(i, j).is_zero()) { pi = i; pj = j; break; }
        if (pi < 0) break;
        add_basis(pi, pj);
        if (pi != k) swap_basis(k, pi);
      }
    }
    Rat p = g(k, k);
    if (p.sign() > 0) ++out.sig.pos; else ++out.sig.neg;
    for (Index r = k + 1; r < n; ++r) {
      if (g(r, k).is_zero()) continue;
      Rat f = g(r, k) / p;
      g.row(r) -= f * g.row(k);
      g.col(r) -= f * g.col(k);
      c.col(r) -= f * c.col(k);
    }
  }
  out.sig.zero = n - k;
  out.transform = std::move(c);
  out.diagonal = RatVec::Zero(n);
  for (Index i = 0; i < k; ++i) out.diagonal(i) = g(i, i);
  return out;
}

Signature sym_signature(const RatMat& gram) { return sym_diagonalize(gram).sig; }

RatVec integer_primitive(const RatVec& v) {
  mpz_class den_lcm = 1;
  for (Index i = 0; i < v.size(); ++i)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v(i).denominator().get_mpz_t());
  mpz_class num_gcd = 0;
  for (Index i = 0; i < v.size(); ++i) {
    mpz_class scaled = v(i).numerator() * (den_lcm / v(i).denominator());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num_gcd == 0) return v;
  Rat scale{mpq_class(den_lcm, num_gcd)};
  RatVec out = v * abs(scale);
  for (Index i = 0; i < out.size(); ++i) {
    if (out(i).is_zero()) continue;
    if (out(i).sign() < 0) out = -out;
    break;
  }
  return out;
}

}  // namespace mlie
