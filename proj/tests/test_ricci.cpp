#include <doctest.h>

#include "mlie/ricci.hpp"
#include "support.hpp"

using namespace mlie;
using test::Gen;

namespace {

void check_equal(const RicciData& a, const RicciData& b) {
  CHECK(same(a.ric, b.ric));
  CHECK(same(a.ric_op, b.ric_op));
  CHECK(a.scalar == b.scalar);
}

}  // namespace

TEST_CASE("Koszul route: classical Heisenberg values") {
  RicciData r = ricci_koszul(test::heis_flat());
  RatMat expected = RatMat::Zero(3, 3);
  expected(0, 0) = Rat(-1, 2);
  expected(1, 1) = Rat(-1, 2);
  expected(2, 2) = Rat(1, 2);
  CHECK(same(r.ric, expected));
  CHECK(r.scalar == Rat(-1, 2));
}

TEST_CASE("abelian algebras are flat") {
  LieAlgebra ab = LieAlgebra::parse("(0,0,0)");
  Gen gen;
  for (int trial = 0; trial < 5; ++trial) {
    RatMat g = gen.symmetric(3);
    if (det(g).is_zero()) continue;
    Metric m(ab, g);
    CHECK(is_zero(ricci_formula(m).ric));
    CHECK(is_zero(ricci_koszul(m).ric));
    CHECK(einstein_check(m).kind == EinsteinVerdict::Kind::RicciFlat);
  }
}

TEST_CASE("the five-dimensional example is Einstein with constant 4096/175") {
  Metric m = test::paper_metric();
  RicciData f = ricci_formula(m);
  RicciData k = ricci_koszul(m);
  check_equal(f, k);
  RatMat expected_op = Rat(4096, 175) * RatMat::Identity(5, 5);
  CHECK(same(f.ric_op, expected_op));
  CHECK(same(f.ric, RatMat(Rat(4096, 175) * m.gram())));  // tensor form: ric = lambda g
  EinsteinVerdict v = einstein_check(m);
  CHECK(v.kind == EinsteinVerdict::Kind::Einstein);
  CHECK(v.lambda == Rat(4096, 175));
  CHECK(v.data.scalar == Rat(4096, 35));  // s = n lambda
}

TEST_CASE("restriction to the nilradical: pinned Ricci operator") {
  RicciData r = ricci_formula(test::heis_ghat());
  RatMat expected = RatMat::Zero(3, 3);
  expected(0, 0) = expected(1, 1) = Rat(-36864, 1715);
  expected(2, 2) = Rat(36864, 1715);
  expected(2, 0) = Rat(-6144, 245);
  CHECK(same(r.ric_op, expected));
  check_equal(r, ricci_koszul(test::heis_ghat()));
}

TEST_CASE("einstein_check verdicts") {
  // Heisenberg flat: not Einstein, exact residual
  EinsteinVerdict h = einstein_check(test::heis_flat());
  CHECK(h.kind == EinsteinVerdict::Kind::NotEinstein);
  CHECK(h.lambda == Rat(-1, 6));
  RatMat res = RatMat::Zero(3, 3);
  res(0, 0) = res(1, 1) = Rat(-1, 3);
  res(2, 2) = Rat(2, 3);
  CHECK(same(h.residual, res));
  CHECK(h.residual.trace() == Rat(0));

  // hyperbolic plane: Einstein with lambda = -1
  LieAlgebra aff = LieAlgebra::parse("(0,-e12)");
  EinsteinVerdict a = einstein_check(Metric(aff, RatMat(RatMat::Identity(2, 2))));
  CHECK(a.kind == EinsteinVerdict::Kind::Einstein);
  CHECK(a.lambda == Rat(-1));
}

TEST_CASE("formula route agrees with the connection route across the corpus") {
  std::vector<Metric> corpus;
  corpus.push_back(test::paper_metric());
  corpus.push_back(test::heis_flat());
  corpus.push_back(test::heis_ghat());
  corpus.push_back(Metric(LieAlgebra::parse("(0,-e12)"), RatMat(RatMat::Identity(2, 2))));
  corpus.push_back(
      Metric(LieAlgebra::parse("(e14,e24,e12+2*e34,0)"), RatMat(RatMat::Identity(4, 4))));
  // a non-unimodular, indefinite case exercises every term of the formula
  LieAlgebra aff = LieAlgebra::parse("(0,-e12)");
  corpus.push_back(Metric(aff, mat({{0, 1}, {1, 0}})));
  for (const auto& m : corpus) {
    RicciData f = ricci_formula(m);
    check_equal(f, ricci_koszul(m));
    CHECK(same(f.ric, RatMat(f.ric.transpose())));
    CHECK(same(RatMat(m.gram() * f.ric_op), f.ric));
  }
}

TEST_CASE("random perturbations of the example metric keep both routes equal") {
  Gen gen;
  LieAlgebra g = test::paper_algebra();
  int done = 0;
  while (done < 25) {
    RatMat gram = test::paper_gram();
    for (int touches = gen.integer(1, 4); touches > 0; --touches) {
      Index i = gen.integer(0, 4), j = gen.integer(0, 4);
      Rat delta = gen.rat(-2, 2, 6);
      gram(i, j) += delta;
      if (i != j) gram(j, i) += delta;
    }
    if (det(gram).is_zero()) continue;
    Metric m(g, gram);
    check_equal(ricci_formula(m), ricci_koszul(m));
    ++done;
  }
}

TEST_CASE("naturality: ric transforms as a tensor under basis change") {
  Gen gen;
  Metric m = test::paper_metric();
  for (int trial = 0; trial < 6; ++trial) {
    RatMat c = gen.invertible(5);
    LieAlgebra g2 = change_basis(m.algebra(), c);
    Metric m2(g2, RatMat(c.transpose() * m.gram() * c));
    RicciData before = ricci_formula(m);
    RicciData after = ricci_formula(m2);
    CHECK(same(after.ric, RatMat(c.transpose() * before.ric * c)));
    CHECK(same(after.ric_op, RatMat(inverse(c) * before.ric_op * c)));
    CHECK(after.scalar == before.scalar);
  }
}

TEST_CASE("degenerate metrics are rejected by curvature routes") {
  LieAlgebra ab2 = LieAlgebra::parse("(0,0)");
  Metric degenerate(ab2, mat({{1, 1}, {1, 1}}), /*allow_degenerate=*/true);
  CHECK_THROWS_AS(ricci_formula(degenerate), degenerate_metric_error);
  CHECK_THROWS_AS(ricci_koszul(degenerate), degenerate_metric_error);
}
