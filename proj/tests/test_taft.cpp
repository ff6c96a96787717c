#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hh/coxeter.hpp"  // OutOfRange
#include "hh/taft.hpp"

using namespace hh;

namespace {

RingElem poly_of(const RingPtr& ring, int var, const std::vector<int>& ascending) {
  RingElem out = RingElem::constant(ring, 0);
  for (size_t e = 0; e < ascending.size(); ++e)
    out = out + RingElem::variable(ring, var).pow(static_cast<int>(e))
                    .scaled(Rat(ascending[e]));
  return out;
}

}  // namespace

TEST_CASE("Gaussian binomials match the Pascal-recurrence oracle") {
  // frozen from tools/oracle/oracle.py (ascending powers of q)
  const RingPtr lr = ring_laurent({"q"});
  CHECK(qbinom(2, 1, lr, 0) == poly_of(lr, 0, {1, 1}));
  CHECK(qbinom(4, 2, lr, 0) == poly_of(lr, 0, {1, 1, 2, 1, 1}));
  CHECK(qbinom(5, 2, lr, 0) == poly_of(lr, 0, {1, 1, 2, 2, 2, 1, 1}));
  CHECK(qbinom(6, 3, lr, 0) == poly_of(lr, 0, {1, 1, 2, 3, 3, 3, 3, 2, 1, 1}));
  CHECK(qbinom(5, 0, lr, 0) == RingElem::constant(lr, 1));
  CHECK(qbinom(5, 5, lr, 0) == RingElem::constant(lr, 1));
  CHECK_THROWS_AS(qbinom(3, 4, lr, 0), OutOfRange);
}

TEST_CASE("descending factorial polynomial coefficients") {
  const RingPtr lr = ring_laurent({"a", "b"});
  const RingElem a = RingElem::variable(lr, 0), b = RingElem::variable(lr, 1);
  // f_2 = x (x - b) = -b x + x^2
  const std::vector<RingElem> f2 = f_nab(2, lr, 0, 1);
  REQUIRE(f2.size() == 3);
  CHECK(f2[0].is_zero());
  CHECK(f2[1] == -b);
  CHECK(f2[2] == RingElem::constant(lr, 1));
  // f_3 = x (x - b)(x - b(1 + a)): x coefficient is b^2 (1 + a)
  const std::vector<RingElem> f3 = f_nab(3, lr, 0, 1);
  CHECK(f3[1] == b * b * (RingElem::constant(lr, 1) + a));
  CHECK(f3[2] == -(b.scaled(2) + a * b));
  CHECK(f3[3] == RingElem::constant(lr, 1));
}

TEST_CASE("functional coefficients expand (ts + D)^i") {
  const RingPtr lr = ring_laurent({"a", "b"});
  const std::vector<RingElem> f = f_nab(2, lr, 0, 1);
  const std::vector<NCElement> y = functional_coeffs(f);
  REQUIRE(y.size() == 3);
  const NCElement s = NCElement::generator(lr, 0), d = NCElement::generator(lr, 1);
  const RingElem b = RingElem::variable(lr, 1);
  // f = x^2 - b x: y_2 = s^2, y_1 = sD + Ds - b s, y_0 = D^2 - b D
  CHECK(y[2] == s * s);
  CHECK(y[1] == s * d + d * s - s.scaled(b));
  CHECK(y[0] == d * d - d.scaled(b));
}

TEST_CASE("generalized binomial identity for small n") {
  for (int n = 0; n <= 4; ++n) {
    const VerificationReport rep = generalized_binomial_check(n);
    INFO("n = ", n);
    CHECK(rep.pass());
  }
}

TEST_CASE("order-2 algebra is the classical Taft algebra") {
  const TaftAlgebra alg(2);
  const RingPtr& ring = alg.ring();
  const RingElem one = RingElem::constant(ring, 1);
  const RingElem a = alg.a(), b = alg.b();
  CHECK(a == -one);  // a reduced modulo Phi_2

  // s^2 = 1
  CHECK(alg.equal(alg.mul(alg.s(), alg.s()), alg.unit()));
  // s D s = a D + b (1 - s)  (s is its own inverse at n = 2)
  const auto lhs = alg.mul(alg.mul(alg.s(), alg.d()), alg.s());
  auto rhs = alg.scaled(alg.d(), a);
  rhs = alg.add(rhs, alg.monomial(0, 0, b));
  rhs = alg.sub(rhs, alg.monomial(0, 1, b));
  CHECK(alg.equal(lhs, rhs));
  // the monic degree-2 relation D(aD + b) = 0 gives D^2 = b D at a = -1
  CHECK(alg.equal(alg.mul(alg.d(), alg.d()), alg.scaled(alg.d(), b)));
}

TEST_CASE("normal form reduction is consistent for n = 3") {
  const TaftAlgebra alg(3);
  const RingPtr& ring = alg.ring();
  const RingElem one = RingElem::constant(ring, 1);

  // all nine monomials are reachable as honest products
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      TaftAlgebra::Elem p = alg.unit();
      for (int r = 0; r < i; ++r) p = alg.mul(alg.d(), p);
      for (int r = 0; r < j; ++r) p = alg.mul(p, alg.s());
      CHECK(alg.equal(p, alg.monomial(i, j, one)));
    }

  // the functional relation coefficients vanish identically
  const std::vector<RingElem> f = f_nab(3, ring, 0, 1);
  const std::vector<NCElement> y = functional_coeffs(f);
  for (int k = 0; k <= 3; ++k) {
    INFO("t^", k, " coefficient");
    CHECK(alg.is_zero(alg.sub(alg.eval(y[k]), alg.monomial(0, 0, f[k]))));
  }
}

TEST_CASE("evaluation of free-algebra words matches direct products") {
  const TaftAlgebra alg(3);
  const auto direct = alg.mul(alg.mul(alg.s(), alg.d()), alg.mul(alg.d(), alg.s()));
  CHECK(alg.equal(alg.eval_word({0, 1, 1, 0}), direct));
  CHECK_THROWS_AS(alg.eval_word({2}), OutOfRange);
  CHECK_THROWS_AS(TaftAlgebra(1), OutOfRange);
}

TEST_CASE("associativity on a deterministic sample") {
  const TaftAlgebra alg(4);
  const RingPtr& ring = alg.ring();
  const auto m = [&](int i, int j, int c) {
    return alg.monomial(i, j, RingElem::constant(ring, c));
  };
  const auto x = alg.add(m(1, 2, 2), m(3, 0, -1));
  const auto y = alg.add(m(2, 3, 1), m(0, 1, 3));
  const auto z = alg.add(m(3, 3, -2), m(1, 0, 1));
  CHECK(alg.equal(alg.mul(alg.mul(x, y), z), alg.mul(x, alg.mul(y, z))));
}
