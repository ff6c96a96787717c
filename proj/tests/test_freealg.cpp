#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hh/freealg.hpp"

using namespace hh;

TEST_CASE("word order is by length then lexicographic") {
  const NCWordOrder lt;
  CHECK(lt({}, {0}));
  CHECK(lt({1}, {0, 0}));
  CHECK(lt({0, 1}, {1, 0}));
  CHECK_FALSE(lt({1, 0}, {0, 1}));
}

TEST_CASE("concatenation product and collecting insert") {
  const RingPtr ring = ring_integers();
  const NCElement a = NCElement::generator(ring, 0);
  const NCElement b = NCElement::generator(ring, 1);
  const NCElement one = NCElement::unit(ring);

  CHECK((a * b).terms().count({0, 1}) == 1);
  CHECK((a * b) != (b * a));
  CHECK(a * one == a);
  CHECK((a + b) * (a - b) == a * a - a * b + b * a - b * b);

  NCElement x(ring);
  x.add_term({0}, RingElem::constant(ring, 2));
  x.add_term({0}, RingElem::constant(ring, -2));
  CHECK(x.is_zero());

  const NCElement scaled = a.scaled(RingElem::constant(ring, 3));
  CHECK(scaled == a + a + a);
  CHECK((a - a).is_zero());
  CHECK((-a) + a == NCElement(ring));
}

TEST_CASE("idempotent reduction contracts repeated letters") {
  const RingPtr ring = ring_integers();
  CHECK(squarefree_contract({0, 0, 1, 1, 1, 0}) == NCWord{0, 1, 0});
  CHECK(squarefree_contract({}) == NCWord{});
  CHECK(squarefree_contract({2}) == NCWord{2});

  const NCElement a = NCElement::generator(ring, 0);
  const NCElement b = NCElement::generator(ring, 1);
  // (a + b)^2 -> a + ab + ba + b under a^2 = a, b^2 = b
  const NCElement red = nc_reduce_idempotent((a + b) * (a + b));
  CHECK(red == a + b + a * b + b * a);
  // contraction happens to a fixpoint across the whole word
  const NCElement deep = nc_reduce_idempotent(
      NCElement::monomial(ring, {0, 0, 0, 1, 1, 0}, RingElem::constant(ring, 1)));
  CHECK(deep == NCElement::monomial(ring, {0, 1, 0}, RingElem::constant(ring, 1)));
}

TEST_CASE("coefficients may live in any ring") {
  const RingPtr lr = ring_laurent({"q"});
  const RingElem q = RingElem::variable(lr, 0);
  const NCElement a = NCElement::generator(lr, 0);
  const NCElement x = a.scaled(q) * a.scaled(q.pow(-1));
  CHECK(x == NCElement::monomial(lr, {0, 0}, RingElem::constant(lr, 1)));
}
