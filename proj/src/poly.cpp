#include "mlie/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace mlie {

// ---------------------------------------------------------------------------
// MPoly

MPoly::MPoly(const Rat& c) {
  if (!c.is_zero()) terms_[{0, 0, 0}] = c;
}

MPoly MPoly::constant(const Rat& c, std::vector<std::string> vars) {
  if (vars.size() > 3) throw std::invalid_argument("MPoly: at most 3 variables");
  MPoly p(c);
  p.vars_ = std::move(vars);
  return p;
}

MPoly MPoly::var(const std::string& name, std::vector<std::string> vars) {
  if (vars.size() > 3) throw std::invalid_argument("MPoly: at most 3 variables");
  MPoly p;
  p.vars_ = std::move(vars);
  int i = p.var_index(name);
  if (i < 0) throw std::invalid_argument("MPoly: unknown variable " + name);
  Exps e{0, 0, 0};
  e[i] = 1;
  p.terms_[e] = Rat(1);
  return p;
}

int MPoly::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exps{0, 0, 0});
}

Rat MPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("MPoly: not a constant");
  return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

int MPoly::degree_in(const std::string& name) const {
  int i = var_index(name);
  if (i < 0) return 0;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first[0] + terms_.begin()->first[1] + terms_.begin()->first[2];
  for (const auto& [e, c] : terms_)
    if (e[0] + e[1] + e[2] != d) return false;
  return true;
}

std::vector<std::string> MPoly::active_vars() const {
  std::vector<std::string> out;
  for (size_t i = 0; i < vars_.size(); ++i)
    for (const auto& [e, c] : terms_)
      if (e[i] > 0) {
        out.push_back(vars_[i]);
        break;
      }
  return out;
}

Rat MPoly::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

void MPoly::unify(MPoly& a, MPoly& b) {
  if (a.vars_ == b.vars_) return;
  if (a.vars_.empty() && a.is_constant()) {
    a.vars_ = b.vars_;
    return;
  }
  if (b.vars_.empty() && b.is_constant()) {
    b.vars_ = a.vars_;
    return;
  }
  throw std::invalid_argument("MPoly: mixing different variable sets");
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  MPoly rhs = o;
  unify(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) it->second += c;
  }
  prune();
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly x = a, y = b;
  MPoly::unify(x, y);
  MPoly out;
  out.vars_ = x.vars_;
  for (const auto& [ea, ca] : x.terms_)
    for (const auto& [eb, cb] : y.terms_) {
      MPoly::Exps e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      auto [it, fresh] = out.terms_.try_emplace(e, ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  out.prune();
  return out;
}

MPoly operator*(const Rat& c, const MPoly& p) {
  MPoly out;
  out.vars_ = p.vars_;
  if (c.is_zero()) return out;
  out.terms_ = p.terms_;
  for (auto& [e, v] : out.terms_) v *= c;
  return out;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  if (a.vars_ != b.vars_) {
    MPoly x = a, y = b;
    try {
      MPoly::unify(x, y);
    } catch (const std::invalid_argument&) {
      return false;
    }
    return x.terms_ == y.terms_;
  }
  return a.terms_ == b.terms_;
}

MPoly MPoly::substitute(const std::string& name, const MPoly& value) const {
  int i = var_index(name);
  if (i < 0) return *this;
  MPoly out = MPoly::constant(Rat(0), value.vars().empty() ? vars_ : value.vars());
  for (const auto& [e, c] : terms_) {
    MPoly term = MPoly::constant(c, out.vars_);
    for (size_t v = 0; v < vars_.size(); ++v) {
      if (e[v] == 0) continue;
      MPoly base = static_cast<int>(v) == i ? value : MPoly::var(vars_[v], out.vars_);
      for (int k = 0; k < e[v]; ++k) term = term * base;
    }
    out += term;
  }
  return out;
}

Rat MPoly::eval(const std::map<std::string, Rat>& point) const {
  Rat out(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (size_t v = 0; v < vars_.size(); ++v) {
      if (e[v] == 0) continue;
      auto it = point.find(vars_[v]);
      if (it == point.end()) throw std::invalid_argument("MPoly::eval: missing value for " + vars_[v]);
      for (int k = 0; k < e[v]; ++k) t *= it->second;
    }
    out += t;
  }
  return out;
}

UniPoly MPoly::to_univariate(const std::string& name) const {
  for (const auto& v : active_vars())
    if (v != name) throw std::invalid_argument("MPoly: not univariate in " + name);
  if (terms_.empty()) return UniPoly();
  int i = var_index(name);
  std::vector<Rat> c(i < 0 ? 1 : degree_in(name) + 1, Rat(0));
  for (const auto& [e, v] : terms_) c[i < 0 ? 0 : e[i]] = v;
  return UniPoly(std::move(c));
}

MPoly MPoly::compose(const std::vector<MPoly>& values) const {
  if (values.size() != vars_.size())
    throw std::invalid_argument("MPoly::compose: one value per variable required");
  MPoly out;
  if (!values.empty()) out = MPoly::constant(Rat(0), values[0].vars());
  for (const auto& [e, c] : terms_) {
    MPoly term = values.empty() ? MPoly(c) : MPoly::constant(c, values[0].vars());
    for (size_t v = 0; v < vars_.size(); ++v)
      for (int k = 0; k < e[v]; ++k) term = term * values[v];
    out += term;
  }
  return out;
}

MPoly MPoly::coeff_of_power(const std::string& name, int k) const {
  int i = var_index(name);
  MPoly out;
  out.vars_ = vars_;
  if (i < 0) {
    if (k == 0) return *this;
    return out;
  }
  for (const auto& [e, c] : terms_) {
    if (e[i] != k) continue;
    Exps r = e;
    r[i] = 0;
    out.terms_[r] = c;
  }
  return out;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    bool has_vars = e[0] + e[1] + e[2] > 0;
    if (!has_vars || a != Rat(1)) {
      os << a.str();
      if (has_vars) os << "*";
    }
    bool first_var = true;
    for (size_t v = 0; v < vars_.size(); ++v) {
      if (e[v] == 0) continue;
      if (!first_var) os << "*";
      os << vars_[v];
      if (e[v] > 1) os << "^" << e[v];
      first_var = false;
    }
    first = false;
  }
  return os.str();
}

PolyMat to_poly(const RatMat& m, const std::vector<std::string>& vars) {
  PolyMat out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = MPoly::constant(m(i, j), vars);
  return out;
}

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<Rat> ascending) : c_(std::move(ascending)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat UniPoly::lead() const {
  if (c_.empty()) throw std::logic_error("UniPoly: zero polynomial has no leading coefficient");
  return c_.back();
}

Rat UniPoly::eval(const Rat& x) const {
  Rat out(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * x + *it;
  return out;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rat(static_cast<long long>(k)) * c_[k];
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
  std::vector<Rat> d = c_;
  for (auto& x : d) x = -x;
  return UniPoly(std::move(d));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> d(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
  return UniPoly(std::move(d));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rat> d(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(d));
}

UniPoly operator*(const Rat& s, const UniPoly& p) {
  std::vector<Rat> d = p.c_;
  for (auto& x : d) x *= s;
  return UniPoly(std::move(d));
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  if (b.is_zero()) throw std::invalid_argument("UniPoly: division by zero polynomial");
  std::vector<Rat> rem = a.c_;
  std::vector<Rat> quo(rem.size() > b.c_.size() ? rem.size() - b.c_.size() + 1 : 1, Rat(0));
  while (rem.size() >= b.c_.size()) {
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    if (rem.size() < b.c_.size()) break;
    size_t shift = rem.size() - b.c_.size();
    Rat f = rem.back() / b.c_.back();
    quo[shift] = f;
    for (size_t i = 0; i < b.c_.size(); ++i) rem[shift + i] -= f * b.c_[i];
    rem.pop_back();
  }
  q = UniPoly(std::move(quo));
  r = UniPoly(std::move(rem));
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (Rat(1) / a.lead()) * a;
}

UniPoly UniPoly::primitive_integer() const {
  if (is_zero()) return *this;
  mpz_class den_lcm = 1;
  for (const auto& x : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.denominator().get_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& x : c_) {
    mpz_class scaled = x.numerator() * (den_lcm / x.denominator());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rat scale{mpq_class(den_lcm, num_gcd)};
  if (lead().sign() < 0) scale = -scale;
  return abs(scale).is_zero() ? *this : scale * *this;
}

UniPoly UniPoly::square_free_part() const {
  if (degree() < 1) return *this;
  UniPoly g = gcd(*this, derivative());
  UniPoly q, r;
  divmod(*this, g, q, r);
  return q;
}

namespace {

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    UniPoly q, r;
    UniPoly::divmod(chain[chain.size() - 2], chain.back(), q, r);
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

int sign_changes(const std::vector<UniPoly>& chain, const Rat& x) {
  int changes = 0, prev = 0;
  for (const auto& p : chain) {
    int s = p.is_zero() ? 0 : p.sign_at(x);
    if (s != 0) {
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
  }
  return changes;
}

int sign_changes_at_infinity(const std::vector<UniPoly>& chain, int direction) {
  int changes = 0, prev = 0;
  for (const auto& p : chain) {
    if (p.is_zero()) continue;
    int s = p.lead().sign();
    if (direction < 0 && p.degree() % 2 == 1) s = -s;
    if (s != 0) {
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
  }
  return changes;
}

Rat cauchy_bound(const UniPoly& p) {
  Rat m(0);
  Rat lead = abs(p.lead());
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, abs(p.coeff(k)) / lead);
  return m + Rat(1);
}

// Intervals (lo, hi] each containing exactly one real root of square-free p,
// plus roots found exactly along the way.
void isolate_roots(const UniPoly& p, const std::vector<UniPoly>& chain, const Rat& lo, const Rat& hi,
                   int count, std::vector<std::pair<Rat, Rat>>& intervals, std::vector<Rat>& exact) {
  if (count == 0) return;
  if (count == 1) {
    intervals.emplace_back(lo, hi);
    return;
  }
  Rat mid = (lo + hi) / Rat(2);
  if (p.eval(mid).is_zero()) {
    exact.push_back(mid);
    // Shrink a window around mid until it contains only that root and its
    // boundaries are not roots themselves.
    Rat eps = (hi - lo) / Rat(4);
    Rat a, b;
    while (true) {
      a = mid - eps;
      b = mid + eps;
      if (a > lo && b < hi && !p.eval(a).is_zero() && !p.eval(b).is_zero() &&
          sign_changes(chain, a) - sign_changes(chain, b) == 1)
        break;
      eps = eps / Rat(2);
    }
    int left = sign_changes(chain, lo) - sign_changes(chain, a);
    int right = sign_changes(chain, b) - sign_changes(chain, hi);
    isolate_roots(p, chain, lo, a, left, intervals, exact);
    isolate_roots(p, chain, b, hi, right, intervals, exact);
    return;
  }
  int left = sign_changes(chain, lo) - sign_changes(chain, mid);
  isolate_roots(p, chain, lo, mid, left, intervals, exact);
  isolate_roots(p, chain, mid, hi, count - left, intervals, exact);
}

}  // namespace

int UniPoly::count_real_roots() const {
  if (degree() < 1) return 0;
  UniPoly sf = square_free_part();
  auto chain = sturm_chain(sf);
  return sign_changes_at_infinity(chain, -1) - sign_changes_at_infinity(chain, +1);
}

Rat simplest_rational_in(Rat a, Rat b) {
  if (b < a) std::swap(a, b);
  if (a.sign() <= 0 && b.sign() >= 0) return Rat(0);
  if (b.sign() < 0) return -simplest_rational_in(-b, -a);
  mpz_class fa = floor_int(a);
  Rat ceil_a = Rat(mpq_class(a.value() == mpq_class(fa) ? fa : fa + 1));
  if (ceil_a <= b) return ceil_a;
  Rat fa_r{mpq_class(fa)};
  return fa_r + Rat(1) / simplest_rational_in(Rat(1) / (b - fa_r), Rat(1) / (a - fa_r));
}

std::vector<std::pair<Rat, int>> UniPoly::rational_roots() const {
  std::vector<std::pair<Rat, int>> out;
  if (degree() < 1) return out;
  UniPoly p = *this;

  // Roots at zero.
  int zero_mult = 0;
  while (p.degree() >= 1 && p.coeff(0).is_zero()) {
    std::vector<Rat> shifted(p.c_.begin() + 1, p.c_.end());
    p = UniPoly(std::move(shifted));
    ++zero_mult;
  }
  if (zero_mult > 0) out.emplace_back(Rat(0), zero_mult);
  if (p.degree() < 1) return out;

  UniPoly sf = p.square_free_part().primitive_integer();
  auto chain = sturm_chain(sf);
  Rat bound = cauchy_bound(sf);
  int total = sign_changes(chain, -bound) - sign_changes(chain, bound);
  std::vector<std::pair<Rat, Rat>> intervals;
  std::vector<Rat> exact;
  isolate_roots(sf, chain, -bound, bound, total, intervals, exact);

  // A rational root u/v in lowest terms has v dividing the leading
  // coefficient; two distinct rationals with denominator <= L are at least
  // 1/L^2 apart, so an interval narrower than that holds at most one.
  mpz_class lead_z = sf.lead().numerator();
  Rat min_width = Rat(1) / Rat(mpq_class(lead_z * lead_z));
  for (auto [lo, hi] : intervals) {
    while (hi - lo >= min_width) {
      Rat mid = (lo + hi) / Rat(2);
      int s = sf.sign_at(mid);
      if (s == 0) {
        exact.push_back(mid);
        break;
      }
      // Root is in (lo, mid] or (mid, hi] per Sturm count.
      if (sign_changes(chain, lo) - sign_changes(chain, mid) == 1)
        hi = mid;
      else
        lo = mid;
    }
    if (hi - lo < min_width) {
      Rat cand = simplest_rational_in(lo, hi);
      if (sf.eval(cand).is_zero()) exact.push_back(cand);
    }
  }

  for (const Rat& root : exact) {
    // Multiplicity in the original (zero-deflated) polynomial.
    int mult = 0;
    UniPoly cur = p;
    UniPoly lin(std::vector<Rat>{-root, Rat(1)});
    while (true) {
      UniPoly q, r;
      divmod(cur, lin, q, r);
      if (!r.is_zero()) break;
      cur = q;
      ++mult;
    }
    if (mult > 0) out.emplace_back(root, mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool UniPoly::has_irrational_real_root() const {
  if (degree() < 1) return false;
  UniPoly sf = square_free_part();
  UniPoly deflated = sf;
  for (const auto& [root, mult] : sf.rational_roots()) {
    UniPoly q, r;
    divmod(deflated, UniPoly(std::vector<Rat>{-root, Rat(1)}), q, r);
    deflated = q;
  }
  return deflated.count_real_roots() > 0;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rat a = coeff(k);
    if (a.is_zero()) continue;
    if (first) {
      if (a.sign() < 0) { os << "-"; a = -a; }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    if (k == 0 || a != Rat(1)) {
      os << a.str();
      if (k > 0) os << "*";
    }
    if (k > 0) {
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// factor_binary_form

BinaryFormFactors factor_binary_form(const MPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factor_binary_form: zero form");
  if (!f.is_homogeneous()) throw std::invalid_argument("factor_binary_form: form not homogeneous");
  if (f.vars().size() != 2) throw std::invalid_argument("factor_binary_form: expected exactly 2 variables");
  const std::string& v1 = f.vars()[0];
  const std::string& v2 = f.vars()[1];
  int d = f.total_degree();

  // Dehomogenize: p(s) = f(s, 1).
  std::vector<Rat> coeffs(d + 1, Rat(0));
  for (const auto& [e, c] : f.terms()) coeffs[e[0]] = c;
  UniPoly p{std::move(coeffs)};

  BinaryFormFactors out;
  out.constant = Rat(1);
  int m2 = d - p.degree();
  if (m2 > 0) out.factors.push_back({mpz_class(0), mpz_class(1), m2});

  for (const auto& [root, mult] : p.rational_roots()) {
    mpz_class a = root.denominator();
    mpz_class b = -root.numerator();
    out.factors.push_back({a, b, mult});
    UniPoly lin(std::vector<Rat>{Rat(mpq_class(b)), Rat(mpq_class(a))});  // a*s + b
    for (int k = 0; k < mult; ++k) {
      UniPoly q, r;
      UniPoly::divmod(p, lin, q, r);
      p = q;
    }
  }

  // Rehomogenize the rootless quotient; normalize to primitive integer form.
  UniPoly prim = p.primitive_integer();
  Rat scale = p.is_zero() ? Rat(1) : p.lead() / prim.lead();
  out.constant = scale;
  MPoly rem = MPoly::constant(Rat(0), f.vars());
  for (int k = 0; k <= prim.degree(); ++k) {
    if (prim.coeff(k).is_zero()) continue;
    MPoly term = MPoly::constant(prim.coeff(k), f.vars());
    for (int i = 0; i < k; ++i) term = term * MPoly::var(v1, f.vars());
    for (int i = 0; i < prim.degree() - k; ++i) term = term * MPoly::var(v2, f.vars());
    rem += term;
  }
  out.remainder = rem;
  out.remainder_has_real_roots = prim.degree() >= 1 && prim.count_real_roots() > 0;
  return out;
}

// ---------------------------------------------------------------------------
// solve_poly_system_2var

namespace {

// Sylvester resultant of p, q with respect to `name`; the result is a
// polynomial in the other variables.
MPoly resultant(const MPoly& p, const MPoly& q, const std::string& name) {
  int dp = p.degree_in(name), dq = q.degree_in(name);
  std::vector<MPoly> pc(dp + 1), qc(dq + 1);
  for (int k = 0; k <= dp; ++k) pc[k] = p.coeff_of_power(name, k);
  for (int k = 0; k <= dq; ++k) qc[k] = q.coeff_of_power(name, k);
  int n = dp + dq;
  std::vector<std::vector<MPoly>> syl(n, std::vector<MPoly>(n, MPoly(0)));
  for (int r = 0; r < dq; ++r)
    for (int k = 0; k <= dp; ++k) syl[r][r + dp - k] = pc[k];
  for (int r = 0; r < dp; ++r)
    for (int k = 0; k <= dq; ++k) syl[dq + r][r + dq - k] = qc[k];
  // Cofactor expansion; the matrices here are at most 4x4.
  std::function<MPoly(std::vector<std::vector<MPoly>>&)> det_rec =
      [&](std::vector<std::vector<MPoly>>& m) -> MPoly {
    size_t k = m.size();
    if (k == 0) return MPoly(1);
    if (k == 1) return m[0][0];
    MPoly acc(0);
    int sign = 1;
    for (size_t col = 0; col < k; ++col) {
      if (!m[0][col].is_zero()) {
        std::vector<std::vector<MPoly>> minor(k - 1, std::vector<MPoly>(k - 1));
        for (size_t i = 1; i < k; ++i) {
          size_t jj = 0;
          for (size_t j = 0; j < k; ++j) {
            if (j == col) continue;
            minor[i - 1][jj++] = m[i][j];
          }
        }
        MPoly term = m[0][col] * det_rec(minor);
        acc += sign > 0 ? term : -term;
      }
      sign = -sign;
    }
    return acc;
  };
  return det_rec(syl);
}

struct Battery {
  std::vector<Rat> roots;         // common rational roots
  bool irrational_real = false;   // common irrational real roots exist
  bool no_complex = false;        // gcd constant: no common roots at all
  bool all_zero = false;          // every polynomial vanished identically
};

Battery univariate_battery(const std::vector<UniPoly>& polys) {
  Battery out;
  UniPoly g;
  bool any = false;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    g = any ? UniPoly::gcd(g, p) : p;
    any = true;
  }
  if (!any) {
    out.all_zero = true;
    return out;
  }
  if (g.degree() == 0) {
    out.no_complex = true;
    return out;
  }
  for (const auto& [root, mult] : g.rational_roots()) out.roots.push_back(root);
  out.irrational_real = g.has_irrational_real_root();
  return out;
}

bool sign_definite_nonzero(const MPoly& p, std::string* why) {
  // All exponents even, all coefficients of one sign, nonzero constant term:
  // the polynomial is bounded away from zero on all of R^n.
  Rat c0 = p.coeff({0, 0, 0});
  if (c0.is_zero()) return false;
  int sign = c0.sign();
  for (const auto& [e, c] : p.terms()) {
    if (e[0] % 2 || e[1] % 2 || e[2] % 2) return false;
    if (c.sign() != sign) return false;
  }
  if (why)
    *why = "equation " + p.str() + " = 0 has all even exponents, uniform-sign coefficients and nonzero constant term; it has no real zeros";
  return true;
}

}  // namespace

PolySolve solve_poly_system_2var(const std::vector<MPoly>& equations) {
  PolySolve out;
  std::vector<MPoly> eqs;
  for (const auto& e : equations)
    if (!e.is_zero()) eqs.push_back(e);

  // Scope caps.
  std::vector<std::string> active;
  for (const auto& e : eqs) {
    if (e.total_degree() > 2) {
      out.kind = PolySolve::Kind::Unsupported;
      out.witness.push_back("equation of total degree > 2: " + e.str());
      return out;
    }
    for (const auto& v : e.active_vars())
      if (std::find(active.begin(), active.end(), v) == active.end()) active.push_back(v);
  }
  std::sort(active.begin(), active.end());
  if (active.size() > 2) {
    out.kind = PolySolve::Kind::Unsupported;
    out.witness.push_back("more than 2 active variables");
    return out;
  }

  if (eqs.empty()) {
    out.kind = PolySolve::Kind::PositiveDim;
    out.witness.push_back("all equations vanish identically");
    return out;
  }

  // Nonzero constants and sign-definite equations are unsatisfiable over R.
  for (const auto& e : eqs) {
    if (e.is_constant() && !e.constant_value().is_zero()) {
      out.kind = PolySolve::Kind::NoRational;
      out.real_status = PolySolve::RealStatus::NoReal;
      out.witness.push_back("constant equation " + e.constant_value().str() + " = 0");
      return out;
    }
    std::string why;
    if (sign_definite_nonzero(e, &why)) {
      out.kind = PolySolve::Kind::NoRational;
      out.real_status = PolySolve::RealStatus::NoReal;
      out.witness.push_back(why);
      return out;
    }
  }

  auto verified = [&](const std::map<std::string, Rat>& pt) {
    for (const auto& e : eqs)
      if (!e.eval(pt).is_zero()) return false;
    return true;
  };
  auto push_point = [&](std::map<std::string, Rat> pt) {
    if (!verified(pt)) return;
    if (std::find(out.points.begin(), out.points.end(), pt) == out.points.end())
      out.points.push_back(std::move(pt));
  };
  auto sort_points = [&]() {
    std::sort(out.points.begin(), out.points.end(),
              [](const auto& a, const auto& b) {
                auto ia = a.begin(); auto ib = b.begin();
                for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
                  if (ia->second != ib->second) return ia->second < ib->second;
                }
                return false;
              });
  };

  // Univariate systems.
  if (active.size() == 1) {
    const std::string& x = active[0];
    std::vector<UniPoly> polys;
    for (const auto& e : eqs) polys.push_back(e.to_univariate(x));
    Battery b = univariate_battery(polys);
    if (b.no_complex) {
      out.kind = PolySolve::Kind::NoRational;
      out.real_status = PolySolve::RealStatus::NoReal;
      out.witness.push_back("gcd of the equations in " + x + " is a nonzero constant: no common zeros");
      return out;
    }
    for (const auto& r : b.roots) push_point({{x, r}});
    sort_points();
    if (!out.points.empty()) {
      out.kind = PolySolve::Kind::Points;
      out.complete = !b.irrational_real;
      if (b.irrational_real) out.witness.push_back("irrational real roots also exist");
      return out;
    }
    out.kind = PolySolve::Kind::NoRational;
    out.real_status = b.irrational_real ? PolySolve::RealStatus::IrrationalRealExists
                                        : PolySolve::RealStatus::NoReal;
    out.witness.push_back(b.irrational_real ? "real roots exist but none is rational"
                                            : "no real roots (Sturm count 0)");
    return out;
  }

  const std::string x = active[0], y = active[1];

  // Single bivariate equation: its zero set is a curve.
  if (eqs.size() == 1) {
    out.kind = PolySolve::Kind::PositiveDim;
    out.witness.push_back("single equation in two variables: solution set is a curve");
    return out;
  }

  // Linear elimination when a degree-1 equation is available.
  for (const auto& lin : eqs) {
    if (lin.total_degree() != 1) continue;
    // lin = a x + b y + c.
    Rat a = lin.coeff_of_power(x, 1).coeff({0, 0, 0});
    Rat b = lin.coeff_of_power(y, 1).coeff({0, 0, 0});
    Rat c = lin.coeff({0, 0, 0});
    std::string elim = b.is_zero() ? x : y;
    std::string keep = b.is_zero() ? y : x;
    Rat denom = b.is_zero() ? a : b;
    Rat other = b.is_zero() ? b : a;
    // elim = -(other*keep + c)/denom
    MPoly value = (MPoly::constant(-other / denom, lin.vars()) * MPoly::var(keep, lin.vars())) +
                  MPoly::constant(-c / denom, lin.vars());
    std::vector<UniPoly> reduced;
    for (const auto& e : eqs) {
      if (&e == &lin) continue;
      reduced.push_back(e.substitute(elim, value).to_univariate(keep));
    }
    Battery bat = univariate_battery(reduced);
    out.witness.push_back("eliminated " + elim + " via linear equation " + lin.str() + " = 0");
    if (bat.all_zero) {
      out.kind = PolySolve::Kind::PositiveDim;
      out.witness.push_back("all equations vanish on the line: solution set is a line");
      return out;
    }
    if (bat.no_complex) {
      out.kind = PolySolve::Kind::NoRational;
      out.real_status = PolySolve::RealStatus::NoReal;
      out.witness.push_back("restricted to the line the equations have constant gcd: no solutions");
      return out;
    }
    for (const auto& r : bat.roots) {
      std::map<std::string, Rat> pt{{keep, r}};
      pt[elim] = value.eval(pt);
      push_point(std::move(pt));
    }
    sort_points();
    if (!out.points.empty()) {
      out.kind = PolySolve::Kind::Points;
      out.complete = !bat.irrational_real;
      return out;
    }
    out.kind = PolySolve::Kind::NoRational;
    out.real_status = bat.irrational_real ? PolySolve::RealStatus::IrrationalRealExists
                                          : PolySolve::RealStatus::NoReal;
    out.witness.push_back(bat.irrational_real
                              ? "solutions on the line are real but irrational"
                              : "no real solutions on the line (Sturm count 0)");
    return out;
  }

  // All-quadratic case: eliminate by pairwise resultants, in both directions.
  struct Direction {
    bool usable = false;
    bool no_complex = false;
    std::vector<Rat> candidates;
    bool irrational_candidates = false;
    UniPoly gcd_poly;
  };
  auto analyze = [&](const std::string& keep, const std::string& elim) {
    Direction dir;
    std::vector<UniPoly> elims;
    for (size_t i = 0; i < eqs.size(); ++i) {
      if (eqs[i].degree_in(elim) == 0) {
        elims.push_back(eqs[i].to_univariate(keep));
        continue;
      }
      for (size_t j = i + 1; j < eqs.size(); ++j) {
        if (eqs[j].degree_in(elim) == 0) continue;
        MPoly res = resultant(eqs[i], eqs[j], elim);
        if (res.is_zero()) continue;
        if (res.is_constant()) {
          dir.usable = true;
          dir.no_complex = true;
          out.witness.push_back("resultant of equations " + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + " in " + elim + " is the nonzero constant " +
                                res.constant_value().str());
          return dir;
        }
        elims.push_back(res.to_univariate(keep));
      }
    }
    UniPoly g;
    bool any = false;
    for (const auto& p : elims) {
      if (p.is_zero()) continue;
      g = any ? UniPoly::gcd(g, p) : p;
      any = true;
    }
    if (!any) return dir;  // unusable: every eliminant vanished
    dir.usable = true;
    if (g.degree() == 0) {
      dir.no_complex = true;
      out.witness.push_back("eliminants in " + keep + " have constant gcd: no common zeros");
      return dir;
    }
    dir.gcd_poly = g;
    for (const auto& [root, mult] : g.rational_roots()) dir.candidates.push_back(root);
    dir.irrational_candidates = g.has_irrational_real_root();
    return dir;
  };

  Direction dx = analyze(x, y);
  Direction dy = analyze(y, x);
  if (dx.no_complex || dy.no_complex) {
    out.kind = PolySolve::Kind::NoRational;
    out.real_status = PolySolve::RealStatus::NoReal;
    return out;
  }
  if (!dx.usable && !dy.usable) {
    // Every pair shares a component. Proportional systems degenerate to one
    // equation; anything else is outside the declared scope.
    bool proportional = true;
    for (size_t i = 1; i < eqs.size() && proportional; ++i) {
      bool found = false;
      for (const auto& [e, c] : eqs[0].terms()) {
        Rat ci = eqs[i].coeff(e);
        if (!ci.is_zero()) {
          Rat ratio = ci / c;
          proportional = ratio * eqs[0] == eqs[i];
          found = true;
          break;
        }
      }
      if (!found) proportional = false;
    }
    if (proportional) {
      out.kind = PolySolve::Kind::PositiveDim;
      out.witness.push_back("all equations are proportional: solution set is a curve");
    } else {
      out.kind = PolySolve::Kind::Unsupported;
      out.witness.push_back("equations share common components; outside the solver's scope");
    }
    return out;
  }

  auto process = [&](const Direction& dir, const std::string& keep, const std::string& elim,
                     bool& definitive_no_real, bool& irrational_real_somewhere) {
    definitive_no_real = !dir.irrational_candidates;
    for (const Rat& v : dir.candidates) {
      std::vector<UniPoly> restricted;
      bool all_vanish = true;
      for (const auto& e : eqs) {
        MPoly r = e.substitute(keep, MPoly::constant(v, e.vars()));
        if (!r.is_zero()) all_vanish = false;
        restricted.push_back(r.to_univariate(elim));
      }
      if (all_vanish) {
        out.kind = PolySolve::Kind::PositiveDim;
        out.witness.push_back("the line " + keep + " = " + v.str() + " lies in every zero set");
        return true;
      }
      Battery bat = univariate_battery(restricted);
      if (bat.all_zero) {
        out.kind = PolySolve::Kind::PositiveDim;
        out.witness.push_back("the line " + keep + " = " + v.str() + " lies in every zero set");
        return true;
      }
      for (const Rat& w : bat.roots) push_point({{keep, v}, {elim, w}});
      if (bat.irrational_real) {
        irrational_real_somewhere = true;
        definitive_no_real = false;
      }
      out.witness.push_back("at " + keep + " = " + v.str() + ": " +
                            (bat.no_complex
                                 ? "no common zeros in " + elim
                                 : std::to_string(bat.roots.size()) + " rational zero(s) in " + elim));
    }
    return false;
  };

  bool no_real_x = false, irr_x = false, no_real_y = false, irr_y = false;
  if (dx.usable) {
    if (!dx.gcd_poly.is_zero())
      out.witness.push_back("eliminant gcd in " + x + ": " + dx.gcd_poly.primitive_integer().str(x));
    if (process(dx, x, y, no_real_x, irr_x)) return out;
  }
  if (out.points.empty() && dy.usable) {
    if (!dy.gcd_poly.is_zero())
      out.witness.push_back("eliminant gcd in " + y + ": " + dy.gcd_poly.primitive_integer().str(y));
    if (process(dy, y, x, no_real_y, irr_y)) return out;
  }

  sort_points();
  if (!out.points.empty()) {
    out.kind = PolySolve::Kind::Points;
    out.complete = !(irr_x || irr_y || dx.irrational_candidates || dy.irrational_candidates);
    return out;
  }
  out.kind = PolySolve::Kind::NoRational;
  if (irr_x || irr_y) {
    out.real_status = PolySolve::RealStatus::IrrationalRealExists;
    out.witness.push_back("real solutions exist but none is rational");
  } else if ((dx.usable && no_real_x) || (dy.usable && no_real_y)) {
    out.real_status = PolySolve::RealStatus::NoReal;
    out.witness.push_back("every real candidate is excluded: no real solutions");
  } else {
    out.real_status = PolySolve::RealStatus::Undetermined;
    out.witness.push_back("no rational solutions; real solutions undetermined");
  }
  return out;
}

}  // namespace mlie
