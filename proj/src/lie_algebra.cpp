#include "mlie/lie_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mlie {

// ---------------------------------------------------------------------------
// LieAlgebra

RatVec LieAlgebra::bracket(const RatVec& x, const RatVec& y) const {
  RatVec out = RatVec::Zero(dim());
  for (Index k = 0; k < dim(); ++k) out(k) = (x.transpose() * c_[k] * y)(0, 0);
  return out;
}

RatMat LieAlgebra::ad(const RatVec& x) const {
  RatMat out(dim(), dim());
  for (Index k = 0; k < dim(); ++k) out.row(k) = x.transpose() * c_[k];
  return out;
}

RatMat LieAlgebra::ad_basis(Index i) const {
  RatVec e = RatVec::Zero(dim());
  e(i) = Rat(1);
  return ad(e);
}

std::optional<JacobiViolation> LieAlgebra::jacobi_violation() const {
  Index n = dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index k = j + 1; k < n; ++k) {
        RatVec ei = RatVec::Zero(n), ej = RatVec::Zero(n), ek = RatVec::Zero(n);
        ei(i) = Rat(1);
        ej(j) = Rat(1);
        ek(k) = Rat(1);
        RatVec r = bracket(bracket(ei, ej), ek) + bracket(bracket(ej, ek), ei) +
                   bracket(bracket(ek, ei), ej);
        if (!is_zero(r))
          return JacobiViolation{static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                                 static_cast<int>(k) + 1, r};
      }
  return std::nullopt;
}

void LieAlgebra::validate() const {
  for (Index k = 0; k < dim(); ++k) {
    if (c_[k].rows() != dim() || c_[k].cols() != dim())
      throw std::invalid_argument("LieAlgebra: structure tensor shape mismatch");
    for (Index i = 0; i < dim(); ++i)
      for (Index j = 0; j < dim(); ++j)
        if (c_[k](i, j) != -c_[k](j, i))
          throw std::invalid_argument("LieAlgebra: structure tensor not antisymmetric");
  }
  if (auto w = jacobi_violation()) {
    std::ostringstream os;
    os << "Jacobi identity fails on (e" << w->i << ",e" << w->j << ",e" << w->k << ")";
    throw jacobi_error(os.str(), *w);
  }
}

LieAlgebra LieAlgebra::unchecked(std::vector<RatMat> structure) {
  return LieAlgebra(std::move(structure));
}

LieAlgebra LieAlgebra::from_brackets(Index dim,
                                     const std::vector<std::tuple<int, int, RatVec>>& brackets) {
  if (dim > 9) throw std::invalid_argument("from_brackets: dimension exceeds 9");
  std::vector<RatMat> c(dim, RatMat::Zero(dim, dim));
  for (const auto& [i1, j1, v] : brackets) {
    Index i = i1 - 1, j = j1 - 1;
    if (i < 0 || j < 0 || i >= dim || j >= dim || i == j)
      throw std::invalid_argument("from_brackets: bad index pair");
    for (Index k = 0; k < dim; ++k) {
      c[k](i, j) = v(k);
      c[k](j, i) = -v(k);
    }
  }
  LieAlgebra alg(std::move(c));
  alg.validate();
  return alg;
}

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.dim() != b.dim()) return false;
  for (Index k = 0; k < a.dim(); ++k)
    if (!same(a.c_[k], b.c_[k])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Salamon notation

namespace {

struct SalamonParser {
  std::string_view text;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg + " at position " + std::to_string(pos), pos); }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  mpz_class read_digits() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    return mpz_class(std::string(text.substr(start, pos - start)));
  }

  // coeff := integer ['/' positive-integer]
  Rat read_coeff() {
    mpz_class num = read_digits();
    mpz_class den = 1;
    if (accept('/')) {
      den = read_digits();
      if (den == 0) fail("zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Rat(std::move(q));
  }

  // term := [coeff '*'] 'e' digit digit ; returns (coeff, i, j) as written
  struct Term {
    Rat coeff;
    int i, j;
  };
  Term read_term(int sign) {
    skip_ws();
    Rat coeff(sign);
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = Rat(sign) * read_coeff();
      expect('*');
    }
    skip_ws();
    if (pos >= text.size() || text[pos] != 'e') fail("expected 'e'");
    ++pos;
    if (pos + 1 >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])) ||
        !std::isdigit(static_cast<unsigned char>(text[pos + 1])))
      fail("expected two basis indices after 'e'");
    int i = text[pos] - '0';
    int j = text[pos + 1] - '0';
    pos += 2;
    if (i == 0 || j == 0) fail("basis indices start at 1");
    return {coeff, i, j};
  }

  // entry := '0' | ['-'|'+'] term (('+'|'-') term)*
  std::vector<Term> read_entry() {
    skip_ws();
    std::vector<Term> terms;
    if (accept('0')) return terms;
    int sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    terms.push_back(read_term(sign));
    while (true) {
      skip_ws();
      if (accept('+')) terms.push_back(read_term(1));
      else if (accept('-')) terms.push_back(read_term(-1));
      else break;
    }
    return terms;
  }
};

}  // namespace

LieAlgebra LieAlgebra::parse(std::string_view salamon) {
  SalamonParser p{salamon};
  p.expect('(');
  std::vector<std::vector<SalamonParser::Term>> entries;
  entries.push_back(p.read_entry());
  while (p.accept(',')) entries.push_back(p.read_entry());
  p.expect(')');
  p.skip_ws();
  if (p.pos != salamon.size()) p.fail("trailing characters");

  Index n = static_cast<Index>(entries.size());
  if (n > 9) throw parse_error("dimension exceeds 9", 0);
  std::vector<RatMat> c(n, RatMat::Zero(n, n));
  for (Index k = 0; k < n; ++k) {
    std::vector<std::pair<int, int>> seen;
    for (const auto& t : entries[k]) {
      if (t.i > n || t.j > n)
        throw parse_error("basis index out of range in entry " + std::to_string(k + 1), 0);
      if (t.i == t.j)
        throw parse_error("repeated index in wedge e" + std::to_string(t.i) + std::to_string(t.j), 0);
      auto key = std::minmax(t.i, t.j);
      if (std::find(seen.begin(), seen.end(), std::pair<int, int>(key)) != seen.end())
        throw parse_error("duplicate index pair in entry " + std::to_string(k + 1), 0);
      seen.push_back(key);
      // d e^k contains coeff * e^i ^ e^j; brackets get c^k_{ij} = -coeff.
      Index i = t.i - 1, j = t.j - 1;
      c[k](i, j) = -t.coeff;
      c[k](j, i) = t.coeff;
    }
  }
  LieAlgebra alg(std::move(c));
  alg.validate();
  return alg;
}

std::string LieAlgebra::salamon() const {
  std::ostringstream os;
  os << "(";
  for (Index k = 0; k < dim(); ++k) {
    if (k) os << ",";
    bool first = true;
    for (Index i = 0; i < dim(); ++i)
      for (Index j = i + 1; j < dim(); ++j) {
        Rat a = -c_[k](i, j);  // coefficient of e^{ij} in d e^k
        if (a.is_zero()) continue;
        if (first) {
          if (a.sign() < 0) os << "-";
        } else {
          os << (a.sign() < 0 ? "-" : "+");
        }
        Rat mag = abs(a);
        if (mag != Rat(1)) os << mag.str() << "*";
        os << "e" << (i + 1) << (j + 1);
        first = false;
      }
    if (first) os << "0";
  }
  os << ")";
  return os.str();
}

LieAlgebra change_basis(const LieAlgebra& alg, const RatMat& basis_change) {
  Index n = alg.dim();
  if (basis_change.rows() != n || basis_change.cols() != n)
    throw std::invalid_argument("change_basis: square matrix of full size required");
  RatMat inv = inverse(basis_change);
  std::vector<RatMat> c(n, RatMat::Zero(n, n));
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      RatVec w = inv * alg.bracket(basis_change.col(i), basis_change.col(j));
      for (Index k = 0; k < n; ++k) {
        c[k](i, j) = w(k);
        c[k](j, i) = -w(k);
      }
    }
  LieAlgebra out = LieAlgebra::unchecked(std::move(c));
  if (auto w = out.jacobi_violation())
    throw jacobi_error("change_basis: Jacobi fails after transformation", *w);
  return out;
}

// ---------------------------------------------------------------------------
// Subspace

namespace {

// Canonical basis of the column span: RREF of the transposed matrix, nonzero
// rows transposed back to columns.
RatMat canonical_span(const RatMat& columns) {
  Rref e = rref(columns.transpose());
  RatMat out(columns.rows(), e.rank);
  for (Index r = 0; r < e.rank; ++r) out.col(r) = e.r.row(r).transpose();
  return out;
}

}  // namespace

Subspace::Subspace(LieAlgebra alg, const RatMat& spanning_vectors)
    : alg_(std::move(alg)), basis_(canonical_span(spanning_vectors)) {
  if (spanning_vectors.rows() != alg_.dim())
    throw std::invalid_argument("Subspace: vectors of wrong dimension");
}

Subspace Subspace::zero(const LieAlgebra& alg) { return Subspace(alg, RatMat(alg.dim(), 0)); }

Subspace Subspace::full(const LieAlgebra& alg) {
  return Subspace(alg, RatMat(RatMat::Identity(alg.dim(), alg.dim())));
}

Subspace Subspace::coordinate(const LieAlgebra& alg, const std::vector<int>& indices_1based) {
  RatMat b = RatMat::Zero(alg.dim(), static_cast<Index>(indices_1based.size()));
  for (size_t c = 0; c < indices_1based.size(); ++c) {
    int i = indices_1based[c];
    if (i < 1 || i > alg.dim()) throw std::invalid_argument("Subspace: index out of range");
    b(i - 1, static_cast<Index>(c)) = Rat(1);
  }
  return Subspace(alg, b);
}

bool Subspace::contains(const RatVec& v) const {
  if (is_zero(v)) return true;
  RatMat aug(basis_.rows(), basis_.cols() + 1);
  aug.leftCols(basis_.cols()) = basis_;
  aug.col(basis_.cols()) = v;
  return rank(aug) == basis_.cols();
}

bool Subspace::contains(const Subspace& other) const {
  for (Index c = 0; c < other.basis_.cols(); ++c)
    if (!contains(RatVec(other.basis_.col(c)))) return false;
  return true;
}

RatVec Subspace::coordinates(const RatVec& v) const {
  AffineSolution s = solve_affine(basis_, v);
  if (!s.consistent) throw std::invalid_argument("Subspace: vector not contained");
  return s.particular;
}

Subspace Subspace::sum(const Subspace& other) const {
  RatMat both(basis_.rows(), basis_.cols() + other.basis_.cols());
  both.leftCols(basis_.cols()) = basis_;
  both.rightCols(other.basis_.cols()) = other.basis_;
  return Subspace(alg_, both);
}

Subspace Subspace::intersect(const Subspace& other) const {
  Index ka = basis_.cols(), kb = other.basis_.cols();
  if (ka == 0 || kb == 0) return zero(alg_);
  RatMat both(basis_.rows(), ka + kb);
  both.leftCols(ka) = basis_;
  both.rightCols(kb) = other.basis_;
  RatMat ker = kernel_basis(both);
  RatMat vecs(basis_.rows(), ker.cols());
  for (Index c = 0; c < ker.cols(); ++c) vecs.col(c) = basis_ * ker.block(0, c, ka, 1);
  return Subspace(alg_, vecs);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.alg_ == b.alg_ && same(a.basis_, b.basis_);
}

Subspace bracket_span(const Subspace& s) {
  const LieAlgebra& alg = s.algebra();
  Index k = s.dim();
  std::vector<RatVec> brackets;
  for (Index i = 0; i < k; ++i)
    for (Index j = i + 1; j < k; ++j)
      brackets.push_back(alg.bracket(s.basis().col(i), s.basis().col(j)));
  RatMat m(alg.dim(), static_cast<Index>(brackets.size()));
  for (size_t c = 0; c < brackets.size(); ++c) m.col(static_cast<Index>(c)) = brackets[c];
  return Subspace(alg, m);
}

SubspaceFlags classify_subspace(const Subspace& s) {
  const LieAlgebra& alg = s.algebra();
  SubspaceFlags out;
  Subspace bs = bracket_span(s);
  out.abelian = bs.dim() == 0;
  out.subalgebra = s.contains(bs);
  out.ideal = true;
  for (Index i = 0; i < alg.dim() && out.ideal; ++i) {
    RatVec ei = RatVec::Zero(alg.dim());
    ei(i) = Rat(1);
    for (Index c = 0; c < s.dim(); ++c)
      if (!s.contains(alg.bracket(ei, s.basis().col(c)))) {
        out.ideal = false;
        break;
      }
  }
  if (out.ideal && s.dim() > 0) {
    out.nilpotent_ideal = classify(induced_algebra(s)).nilpotent;
  } else if (out.ideal) {
    out.nilpotent_ideal = true;  // the zero ideal
  }
  return out;
}

LieAlgebra induced_algebra(const Subspace& s) {
  const LieAlgebra& alg = s.algebra();
  Index k = s.dim();
  std::vector<std::tuple<int, int, RatVec>> brackets;
  for (Index i = 0; i < k; ++i)
    for (Index j = i + 1; j < k; ++j) {
      RatVec w = alg.bracket(s.basis().col(i), s.basis().col(j));
      if (!s.contains(w)) throw error("induced_algebra: subspace is not a subalgebra");
      brackets.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1, s.coordinates(w));
    }
  return LieAlgebra::from_brackets(k, brackets);
}

// ---------------------------------------------------------------------------
// Series and classification

namespace {

Subspace bracket_of(const Subspace& a, const Subspace& b) {
  const LieAlgebra& alg = a.algebra();
  std::vector<RatVec> brackets;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < b.dim(); ++j)
      brackets.push_back(alg.bracket(a.basis().col(i), b.basis().col(j)));
  RatMat m(alg.dim(), static_cast<Index>(brackets.size()));
  for (size_t c = 0; c < brackets.size(); ++c) m.col(static_cast<Index>(c)) = brackets[c];
  return Subspace(alg, m);
}

}  // namespace

SeriesResult series(const LieAlgebra& alg) {
  SeriesResult out;
  Subspace full = Subspace::full(alg);
  out.lower_central.push_back(full);
  while (true) {
    Subspace next = bracket_of(full, out.lower_central.back());
    Index prev = out.lower_central.back().dim();
    out.lower_central.push_back(next);
    if (next.dim() == 0 || next.dim() == prev) break;
  }
  out.derived.push_back(full);
  while (true) {
    Subspace next = bracket_span(out.derived.back());
    Index prev = out.derived.back().dim();
    out.derived.push_back(next);
    if (next.dim() == 0 || next.dim() == prev) break;
  }
  return out;
}

AlgebraProfile classify(const LieAlgebra& alg) {
  AlgebraProfile out;
  SeriesResult s = series(alg);
  for (const auto& sp : s.lower_central) out.lower_central_dims.push_back(sp.dim());
  for (const auto& sp : s.derived) out.derived_dims.push_back(sp.dim());
  out.nilpotent = out.lower_central_dims.back() == 0;
  out.solvable = out.derived_dims.back() == 0;
  if (out.nilpotent) out.step = static_cast<int>(out.lower_central_dims.size()) - 1;
  out.unimodular = true;
  for (Index i = 0; i < alg.dim(); ++i)
    if (!alg.ad_basis(i).trace().is_zero()) {
      out.unimodular = false;
      break;
    }
  out.rank = alg.dim() - (out.derived_dims.size() > 1 ? out.derived_dims[1] : 0);
  return out;
}

RatMat killing_form(const LieAlgebra& alg) {
  Index n = alg.dim();
  std::vector<RatMat> ads(n);
  for (Index i = 0; i < n; ++i) ads[i] = alg.ad_basis(i);
  RatMat b(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) {
      b(i, j) = (ads[i] * ads[j]).trace();
      b(j, i) = b(i, j);
    }
  return b;
}

// ---------------------------------------------------------------------------
// Nilradical

NilradicalResult nilradical_detail(const LieAlgebra& alg) {
  AlgebraProfile profile = classify(alg);
  if (!profile.solvable) throw not_solvable_error("nilradical: algebra is not solvable");
  Index n = alg.dim();

  if (profile.nilpotent) {
    NilradicalResult out{Subspace::full(alg), profile.rank, profile.rank, {}};
    out.trace.push_back("algebra is nilpotent: nilradical is the whole algebra");
    return out;
  }

  Subspace derived = series(alg).derived[1];
  Index r = n - derived.dim();
  if (r > 3) throw unsupported_error("nilradical: rank exceeds 3");

  // Coset representatives: complete the derived basis by standard vectors.
  std::vector<RatVec> reps;
  Subspace span = derived;
  for (Index i = 0; i < n && static_cast<Index>(reps.size()) < r; ++i) {
    RatVec ei = RatVec::Zero(n);
    ei(i) = Rat(1);
    if (span.contains(ei)) continue;
    reps.push_back(ei);
    RatMat wider(n, span.dim() + 1);
    wider.leftCols(span.dim()) = span.basis();
    wider.col(span.dim()) = ei;
    span = Subspace(alg, wider);
  }
  RatMat f(n, r);
  for (Index a = 0; a < r; ++a) f.col(a) = reps[a];

  NilradicalResult out{derived, r, 0, {}};
  out.trace.push_back("derived algebra has dimension " + std::to_string(derived.dim()) +
                      ", coset rank " + std::to_string(r));

  // Power traces of ad(sum t_a f_a); x is ad-nilpotent iff they all vanish.
  std::vector<std::string> tvars;
  for (Index a = 0; a < r; ++a) tvars.push_back("t" + std::to_string(a + 1));
  PolyMat sym = PolyMat::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) sym(i, j) = MPoly::constant(Rat(0), tvars);
  for (Index a = 0; a < r; ++a) {
    PolyMat adf = to_poly(alg.ad(f.col(a)), tvars);
    MPoly ta = MPoly::var(tvars[static_cast<size_t>(a)], tvars);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) sym(i, j) += ta * adf(i, j);
  }
  std::vector<MPoly> traces;
  PolyMat power = sym;
  for (Index k = 1; k <= n; ++k) {
    traces.push_back(power.trace());
    if (k < n) power = PolyMat(power * sym);
  }

  // Reduce by the linear trace, then analyze the residual.
  RatMat coset_dirs;  // columns: nilpotent directions in t-space
  const MPoly& p1 = traces[0];
  RatMat basis_s;  // t = basis_s * s
  if (p1.is_zero()) {
    basis_s = RatMat::Identity(r, r);
  } else {
    RatMat row(1, r);
    for (Index a = 0; a < r; ++a) {
      MPoly::Exps e{0, 0, 0};
      e[static_cast<size_t>(a)] = 1;
      row(0, a) = p1.coeff(e);
    }
    basis_s = kernel_basis(row);
    out.trace.push_back("linear trace cuts the coset space to dimension " +
                        std::to_string(basis_s.cols()));
  }

  Index sdim = basis_s.cols();
  std::vector<std::string> svars;
  for (Index a = 0; a < sdim; ++a) svars.push_back("s" + std::to_string(a + 1));
  std::vector<MPoly> reduced;
  bool all_zero = true;
  if (sdim > 0) {
    std::vector<MPoly> subst;
    for (Index a = 0; a < r; ++a) {
      MPoly lin = MPoly::constant(Rat(0), svars);
      for (Index c = 0; c < sdim; ++c)
        lin += basis_s(a, c) * MPoly::var(svars[static_cast<size_t>(c)], svars);
      subst.push_back(lin);
    }
    for (const auto& p : traces) {
      MPoly q = p.compose(subst);
      if (!q.is_zero()) all_zero = false;
      reduced.push_back(q);
    }
  }

  if (sdim == 0) {
    coset_dirs = RatMat(r, 0);
  } else if (all_zero) {
    coset_dirs = basis_s;
    out.trace.push_back("all power traces vanish on the reduced space");
  } else if (sdim == 1) {
    coset_dirs = RatMat(r, 0);
    out.trace.push_back("the single residual direction is not ad-nilpotent");
  } else if (sdim == 2) {
    // Common zero locus of binary forms = zero set of their gcd.
    UniPoly gcd_dehom;
    int min_t2 = -1;
    bool any = false;
    for (const auto& q : reduced) {
      if (q.is_zero()) continue;
      int deg = q.total_degree();
      std::vector<Rat> coeffs(deg + 1, Rat(0));
      for (const auto& [e, c] : q.terms()) coeffs[e[0]] = c;
      UniPoly u{std::move(coeffs)};
      int m2 = deg - u.degree();
      gcd_dehom = any ? UniPoly::gcd(gcd_dehom, u) : u;
      min_t2 = any ? std::min(min_t2, m2) : m2;
      any = true;
    }
    std::vector<RatVec> lines;
    if (min_t2 > 0) lines.push_back(vec({Rat(1), Rat(0)}));
    if (gcd_dehom.degree() >= 1) {
      for (const auto& [root, mult] : gcd_dehom.rational_roots())
        lines.push_back(integer_primitive(vec({root, Rat(1)})));
      if (gcd_dehom.has_irrational_real_root())
        throw unsupported_error(
            "nilradical: residual locus contains an irrational-slope real line");
    }
    // Each candidate line is re-tested against every power trace.
    for (const auto& line : lines) {
      std::map<std::string, Rat> at{{svars[0], line(0)}, {svars[1], line(1)}};
      for (const auto& q : reduced)
        if (!q.eval(at).is_zero())
          throw error("nilradical: candidate line fails a power-trace equation");
    }
    if (lines.size() > 1)
      throw unsupported_error("nilradical: residual locus is not a linear subspace");
    coset_dirs = RatMat(r, static_cast<Index>(lines.empty() ? 0 : 1));
    if (!lines.empty()) {
      coset_dirs.col(0) = basis_s * lines[0];
      out.trace.push_back("one rational nilpotent line in the residual plane");
    } else {
      out.trace.push_back("no nilpotent line in the residual plane");
    }
  } else {
    throw unsupported_error("nilradical: rank-3 residual cannot be reduced");
  }

  out.locus_dim = coset_dirs.cols();
  RatMat extra(n, coset_dirs.cols());
  for (Index c = 0; c < coset_dirs.cols(); ++c) extra.col(c) = f * coset_dirs.col(c);
  Subspace candidate = derived.sum(Subspace(alg, extra));
  out.trace.push_back("nilpotent coset locus has dimension " + std::to_string(out.locus_dim));

  // The result is re-verified rather than trusted.
  SubspaceFlags flags = classify_subspace(candidate);
  bool ads_nilpotent = true;
  for (Index c = 0; c < candidate.dim(); ++c)
    if (!is_nilpotent(alg.ad(candidate.basis().col(c)))) {
      ads_nilpotent = false;
      break;
    }
  if (!flags.nilpotent_ideal || !ads_nilpotent)
    throw error("nilradical: verification of the computed ideal failed");
  out.trace.push_back("verified: nilpotent ideal with ad-nilpotent action");
  out.space = candidate;
  return out;
}

Subspace nilradical(const LieAlgebra& alg) { return nilradical_detail(alg).space; }

}  // namespace mlie
