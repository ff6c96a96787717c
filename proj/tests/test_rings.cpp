#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hh/rings.hpp"

using namespace hh;

TEST_CASE("integer and rational constants") {
  const RingPtr zi = ring_integers();
  const RingElem two = RingElem::constant(zi, 2);
  const RingElem three = RingElem::constant(zi, 3);
  CHECK((two + three) == RingElem::constant(zi, 5));
  CHECK((two * three) == RingElem::constant(zi, 6));
  CHECK((two - two).is_zero());
  CHECK((-two) == RingElem::constant(zi, -2));
  CHECK(two.is_constant());
  CHECK(two.constant_coeff() == 2);

  const RingPtr qq = ring_rationals();
  const RingElem half = RingElem::constant(qq, Rat(1) / 2);
  CHECK((half + half) == RingElem::constant(qq, 1));
}

TEST_CASE("ring mismatch is rejected") {
  const RingElem a = RingElem::constant(ring_integers(), 1);
  const RingElem b = RingElem::constant(ring_laurent({"t"}), 1);
  CHECK_THROWS_AS(a + b, RingMismatch);
}

TEST_CASE("Laurent polynomials: negative exponents and units") {
  const RingPtr lr = ring_laurent({"t", "u"});
  const RingElem t = RingElem::variable(lr, 0);
  const RingElem u = RingElem::variable(lr, 1);
  const RingElem tinv = RingElem::variable(lr, 0, -1);
  CHECK((t * tinv) == RingElem::constant(lr, 1));
  CHECK(t.pow(-2) == tinv * tinv);
  CHECK((t + u).max_exponent(0) == 1);
  CHECK((tinv + u).min_exponent(0) == -1);

  // substitution must keep units invertible
  const RingElem p = tinv + u;
  const RingElem q = p.substitute({u, t});
  CHECK(q == RingElem::variable(lr, 1, -1) + t);
  CHECK_THROWS_AS(p.substitute({t + u, t}), NonUnitSubstitution);
}

TEST_CASE("exact division helpers") {
  const RingPtr lr = ring_laurent({"t", "u"});
  const RingElem t = RingElem::variable(lr, 0);
  const RingElem u = RingElem::variable(lr, 1);
  const RingElem one = RingElem::constant(lr, 1);

  // (1 - t^3) / (1 - t) = 1 + t + t^2
  CHECK((one - t.pow(3)).divide_by_one_minus_var(0) == one + t + t * t);
  // (t^2 - u^2) / (t - u) = t + u
  CHECK((t * t - u * u).divide_by_var_minus(0, u) == t + u);
  CHECK_THROWS_AS((one + t).divide_by_one_minus_var(0), NonExactDivision);

  const RingElem p = t * t * u + t * u + u;
  CHECK(p.coefficient_of(0, 1) == u);
  CHECK(p.coefficient_of(0, 0) == u);
  CHECK(p.coefficient_of(0, 2) == u);
  CHECK(p.coefficient_of(0, 3).is_zero());
}

TEST_CASE("cyclotomic moduli match the oracle") {
  // ascending coefficients frozen from tools/oracle/oracle.py
  CHECK(cyclotomic(1) == std::vector<Int>{-1, 1});
  CHECK(cyclotomic(2) == std::vector<Int>{1, 1});
  CHECK(cyclotomic(3) == std::vector<Int>{1, 1, 1});
  CHECK(cyclotomic(4) == std::vector<Int>{1, 0, 1});
  CHECK(cyclotomic(5) == std::vector<Int>{1, 1, 1, 1, 1});
  CHECK(cyclotomic(6) == std::vector<Int>{1, -1, 1});
  CHECK(cyclotomic(12) == std::vector<Int>{1, 0, -1, 0, 1});
  CHECK(golden_modulus() == std::vector<Int>{-1, -1, 1});
}

TEST_CASE("quotient ring reduction") {
  // Z[a]/Phi_3 with b adjoined: a^2 = -1 - a, a^3 = 1.
  const RingPtr ring = ring_quotient({"a", "b"}, cyclotomic(3));
  const RingElem a = RingElem::variable(ring, 0);
  const RingElem b = RingElem::variable(ring, 1);
  const RingElem one = RingElem::constant(ring, 1);
  CHECK(a * a == -one - a);
  CHECK(a.pow(3) == one);
  CHECK(a.pow(4) == a);
  // b stays a plain polynomial variable
  CHECK((a * b) * b == a * b.pow(2));
  // 1 + a + a^2 = 0
  CHECK((one + a + a * a).is_zero());
}

TEST_CASE("golden ratio ring") {
  const RingPtr ring = ring_quotient({"x"}, golden_modulus());
  const RingElem x = RingElem::variable(ring, 0);
  CHECK(x * x == x + RingElem::constant(ring, 1));
}

TEST_CASE("canonical ordering and string rendering") {
  const RingPtr lr = ring_laurent({"t"});
  const RingElem t = RingElem::variable(lr, 0);
  const RingElem p = t + RingElem::constant(lr, 1);
  CHECK(p.to_string() == (RingElem::constant(lr, 1) + t).to_string());
  CHECK_FALSE(p < p);
}
