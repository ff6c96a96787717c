#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hh/qybe.hpp"

using namespace hh;

TEST_CASE("swap and Demazure matrices on the degree-1 box") {
  // U = span{1, x}; U x U indexed by x1^a x2^b, a, b in {0, 1}, index 2a + b.
  const RingPtr qr = ring_rationals();
  const HS3Structure h = demazure_hs3(1, qr);
  REQUIRE(h.dim == 2);
  const auto s = [&](int r, int c) { return h.s_mat.at(r, c).constant_coeff(); };
  const auto d = [&](int r, int c) { return h.d_mat.at(r, c).constant_coeff(); };

  // s swaps x1 and x2: fixes 1 and x1 x2, exchanges x1 and x2
  for (int c = 0; c < 4; ++c)
    for (int r = 0; r < 4; ++r) {
      const int expect_row = c == 1 ? 2 : c == 2 ? 1 : c;
      CHECK(s(r, c) == (r == expect_row ? 1 : 0));
    }
  // frozen from tools/oracle/oracle.py: D(1) = 0, D(x1) = -x2, D(x2) = x2,
  // D(x1 x2) = 0; with index 2a + b the columns 0..3 are 1, x2, x1, x1 x2
  for (int r = 0; r < 4; ++r) {
    CHECK(d(r, 0) == 0);
    CHECK(d(r, 1) == (r == 1 ? 1 : 0));   // image of x2 is x2
    CHECK(d(r, 2) == (r == 1 ? -1 : 0));  // image of x1 is -x2
    CHECK(d(r, 3) == 0);
  }
}

TEST_CASE("swap/Demazure pairs pass the structure checks for k = 0..3") {
  const RingPtr qr = ring_rationals();
  for (int k = 0; k <= 3; ++k) {
    const VerificationReport rep = check_hs3_structure(demazure_hs3(k, qr));
    INFO("k = ", k);
    CHECK(rep.pass());
  }
}

TEST_CASE("flip is a braiding exactly at q = 1") {
  const RingPtr lr = ring_laurent({"q"});
  const RingElem q = RingElem::variable(lr, 0);
  const RingElem one = RingElem::constant(lr, 1);
  const BraidingCandidate flip = swap_braiding(2, lr);
  CHECK(check_quadratic_braiding(flip, one).pass());
  CHECK_FALSE(check_quadratic_braiding(flip, q).pass());  // flip^2 = id != (1-q) flip + q
}

TEST_CASE("the two-dimensional Hecke braiding is quadratic with parameter q") {
  const RingPtr lr = ring_laurent({"q"});
  const RingElem q = RingElem::variable(lr, 0);
  CHECK(check_quadratic_braiding(hecke_braiding_dim2(lr, q), q).pass());
}

TEST_CASE("lifting preserves braid and quadratic relations") {
  // swap seed at q = 1
  {
    const RingPtr qr = ring_rationals();
    const RingElem one = RingElem::constant(qr, 1);
    const HS3Structure h = demazure_hs3(1, qr);
    const BraidingCandidate lifted = psi_u(h, swap_braiding(2, qr), one);
    CHECK(lifted.dim == 2 * 2);
    CHECK(check_quadratic_braiding(lifted, one).pass());
  }
  // Hecke seed over Z[q, q^-1]
  {
    const RingPtr lr = ring_laurent({"q"});
    const RingElem q = RingElem::variable(lr, 0);
    const HS3Structure h = demazure_hs3(2, lr);
    const BraidingCandidate lifted = psi_u(h, hecke_braiding_dim2(lr, q), q);
    CHECK(lifted.dim == 3 * 2);
    CHECK(check_quadratic_braiding(lifted, q).pass());
  }
}

TEST_CASE("a perturbed lift fails the braid equation") {
  const RingPtr qr = ring_rationals();
  const RingElem one = RingElem::constant(qr, 1);
  BraidingCandidate lifted = psi_u(demazure_hs3(1, qr), swap_braiding(2, qr), one);
  lifted.psi.set(0, 1, lifted.psi.at(0, 1) + one);
  CHECK_FALSE(check_quadratic_braiding(lifted, one).pass());
}
