#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hh/heckehopf.hpp"

using namespace hh;

namespace {
const RingPtr ring = ring_integers();

HHElement unit_of(const CoxPtr& sys) { return HHElement::unit(sys, ring); }
}  // namespace

TEST_CASE("defining relations hold in the normal form") {
  const CoxPtr sys = build_system(coxeter_matrix_a(2));
  const HHElement one = unit_of(sys);
  for (int i = 0; i < 2; ++i) {
    const HHElement s = HHElement::s(sys, ring, i);
    const HHElement d = HHElement::d(sys, ring, i);
    CHECK(s * s == one);
    CHECK(d * d == d);
    // rank-1 relation: s D + D s = s - 1
    CHECK(s * d + d * s == s - one);
  }
}

TEST_CASE("linear braid relations") {
  const CoxPtr a2 = build_system(coxeter_matrix_a(2));
  const auto S = [&](const CoxPtr& sys, int i) { return HHElement::s(sys, ring, i); };
  const auto D = [&](const CoxPtr& sys, int i) { return HHElement::d(sys, ring, i); };
  // m = 3: D1 s2 s1 = s2 s1 D2
  CHECK(D(a2, 0) * S(a2, 1) * S(a2, 0) == S(a2, 1) * S(a2, 0) * D(a2, 1));

  // m = 4: D1 s2 s1 s2 = s2 s1 s2 D1 and D2 s1 s2 s1 = s1 s2 s1 D2
  const CoxPtr b2 = build_system(coxeter_matrix_i2(4));
  CHECK(D(b2, 0) * S(b2, 1) * S(b2, 0) * S(b2, 1) ==
        S(b2, 1) * S(b2, 0) * S(b2, 1) * D(b2, 0));
  CHECK(D(b2, 1) * S(b2, 0) * S(b2, 1) * S(b2, 0) ==
        S(b2, 0) * S(b2, 1) * S(b2, 0) * D(b2, 1));
}

TEST_CASE("group terms push through D letters by the cocycle rule") {
  const CoxPtr sys = build_system(coxeter_matrix_a(2));
  const int t = sys->generator(0);
  // s1 * D_{s1}: descent, so chi = -1, sigma = 1:  -D1 s1 + s1 - 1
  const HHElement lhs = HHElement::s(sys, ring, 0) * HHElement::d(sys, ring, 0);
  const HHElement rhs = -(HHElement::d(sys, ring, 0) * HHElement::s(sys, ring, 0)) +
                        HHElement::s(sys, ring, 0) - unit_of(sys);
  CHECK(lhs == rhs);
  // ascent case: s1 * D_{s2} = D_{s1 s2 s1} s1 with no correction terms
  const HHElement lhs2 = HHElement::s(sys, ring, 0) * HHElement::d(sys, ring, 1);
  const HHElement rhs2 =
      HHElement::d_refl(sys, ring, sys->conjugate(sys->generator(0), sys->generator(1))) *
      HHElement::s(sys, ring, 0);
  CHECK(lhs2 == rhs2);
  CHECK(sys->is_reflection(t));
}

TEST_CASE("normal form keys are square-free D-words times one group element") {
  const CoxPtr sys = build_system(coxeter_matrix_i2(4));
  std::mt19937_64 rng(99);
  for (int k = 0; k < 20; ++k) {
    const HHElement x = random_element(sys, ring, rng) * random_element(sys, ring, rng);
    for (const auto& [key, c] : x.terms()) {
      for (size_t p = 0; p + 1 < key.u.size(); ++p) CHECK(key.u[p] != key.u[p + 1]);
      CHECK_FALSE(c.is_zero());
    }
  }
}

TEST_CASE("coproduct, counit, antipode on generators") {
  const CoxPtr sys = build_system(coxeter_matrix_a(2));
  const HHElement s = HHElement::s(sys, ring, 0);
  const HHElement d = HHElement::d(sys, ring, 0);

  // Delta(D) = D x 1 + s x D
  HHTensor expected(sys, ring, 2);
  const HHKey kd{{0}, sys->identity()};
  const HHKey ks{{}, sys->generator(0)};
  const HHKey k1{{}, sys->identity()};
  expected.add_term({kd, k1}, RingElem::constant(ring, 1));
  expected.add_term({ks, kd}, RingElem::constant(ring, 1));
  CHECK(hh_coproduct(d) == expected);

  // Delta(w) = w x w, eps(w) = 1, eps(D) = 0
  HHTensor grouplike(sys, ring, 2);
  grouplike.add_term({ks, ks}, RingElem::constant(ring, 1));
  CHECK(hh_coproduct(s) == grouplike);
  CHECK(hh_counit(s) == RingElem::constant(ring, 1));
  CHECK(hh_counit(d).is_zero());

  // antipode identities m (S x id) Delta = unit eps on both generators
  for (const HHElement& x : {s, d, s * d, d * s * d}) {
    const HHTensor dx = hh_coproduct(x);
    const HHTensor left = dx.map_component(0, 1, [](const HHElement& y) {
      return as_tensor(hh_antipode(y));
    });
    CHECK(left.multiply_out() == unit_of(sys).scaled(hh_counit(x)));
  }
}

TEST_CASE("full Hopf axioms on seeded random elements") {
  const CoxPtr sys = build_system(coxeter_matrix_i2(4));
  std::mt19937_64 rng(7);
  std::vector<HHElement> samples;
  for (int k = 0; k < 10; ++k) samples.push_back(random_element(sys, ring, rng));
  CHECK(check_hopf_axioms(sys, ring, samples).pass());
}

TEST_CASE("bar and theta are involutive symmetries") {
  const CoxPtr sys = build_system(coxeter_matrix_a(2));
  std::mt19937_64 rng(3);
  for (int k = 0; k < 10; ++k) {
    const HHElement x = random_element(sys, ring, rng);
    const HHElement y = random_element(sys, ring, rng);
    CHECK(hh_bar(hh_bar(x)) == x);
    CHECK(hh_theta(hh_theta(x)) == x);
    // bar is an algebra anti-involution
    CHECK(hh_bar(x * y) == hh_bar(y) * hh_bar(x));
    // theta is an algebra involution
    CHECK(hh_theta(x * y) == hh_theta(x) * hh_theta(y));
  }
  CHECK(hh_bar(HHElement::d(sys, ring, 0)) == HHElement::d(sys, ring, 0));
  CHECK(hh_theta(HHElement::d(sys, ring, 0)) ==
        unit_of(sys) - HHElement::d(sys, ring, 0));
}

TEST_CASE("W-action and twisted derivations") {
  const CoxPtr sys = build_system(coxeter_matrix_a(2));
  const int s1 = sys->generator(0), s2 = sys->generator(1);
  // ascent: s1(D_{s2}) = D_{s1 s2 s1}
  CHECK(w_action(s1, HHElement::d(sys, ring, 1)) ==
        HHElement::d_refl(sys, ring, sys->conjugate(s1, s2)));
  // descent: s1(D_{s1}) = 1 - D_{s1}
  CHECK(w_action(s1, HHElement::d(sys, ring, 0)) ==
        unit_of(sys) - HHElement::d(sys, ring, 0));
  // d_s(D_s') = delta_{s,s'}
  for (int s : sys->reflections())
    for (int t : sys->reflections()) {
      const HHElement v = ds_derivation(s, HHElement::d_refl(sys, ring, t));
      if (s == t)
        CHECK(v == unit_of(sys));
      else
        CHECK(v.is_zero());
    }
}

TEST_CASE("dihedral coideal: commutator basis at m = 2") {
  const CoxPtr sys = build_system(coxeter_matrix_a1a1());
  const std::vector<HHElement> basis = kij_nullspace(sys, ring, 2);
  REQUIRE(basis.size() == 1);
  const HHElement comm = HHElement::d(sys, ring, 0) * HHElement::d(sys, ring, 1) -
                         HHElement::d(sys, ring, 1) * HHElement::d(sys, ring, 0);
  CHECK((basis[0] == comm || basis[0] == -comm));
  CHECK(kij_contains(basis[0]));
  CHECK_FALSE(kij_contains(HHElement::d(sys, ring, 0)));
}

TEST_CASE("quartic element lies in the coideal of the order-10 dihedral") {
  const CoxPtr sys = build_system(coxeter_matrix_i2(5));
  const HHElement q4 = rank2_qij4(sys, ring, 0, 1);
  CHECK_FALSE(q4.is_zero());
  CHECK(q4.degree() == 4);
  CHECK(kij_contains(q4));
  CHECK_THROWS_AS(rank2_qij4(build_system(coxeter_matrix_i2(4)), ring, 0, 1), BadIndices);
}

TEST_CASE("Q/R conjugation identities at m = 4") {
  const CoxPtr sys = build_system(coxeter_matrix_i2(4));
  CHECK(check_dij2_identities(sys, ring, 0, 1).pass());
}

TEST_CASE("Q/R parameter grids") {
  // m = 4: divisors 1, 2, 4
  const auto qp = rank2_q_params(4);
  for (const auto& [n, r, p] : qp) {
    CHECK(4 % n == 0);
    CHECK(r >= 1);
    CHECK(r <= n);
    CHECK(p >= 1);
    CHECK(2 * n * p < 4);
  }
  const auto rp = rank2_r_params(4);
  for (const auto& [n, r, t] : rp) {
    CHECK(4 % n == 0);
    CHECK(r >= 1);
    CHECK(r <= n);
    CHECK(t >= 0);
    CHECK(t <= 4 / n);
  }
}

TEST_CASE("Hecke generators satisfy the quadratic relation") {
  const CoxPtr sys = build_system(coxeter_matrix_a(2));
  const RingPtr lr = ring_laurent({"q"});
  const RingElem q = RingElem::variable(lr, 0);
  const RingElem one = RingElem::constant(lr, 1);
  for (int i = 0; i < 2; ++i) {
    const HHElement T = hecke_T(sys, i, q);
    CHECK(T * T == T.scaled(one - q) + HHElement::unit(sys, lr).scaled(q));
  }
}

TEST_CASE("braid difference is an ideal member; triangularity holds in S3") {
  const CoxPtr sys = build_system(coxeter_matrix_a(2));
  const RingPtr lr = ring_laurent({"q"});
  const std::vector<RingElem> qs(2, RingElem::variable(lr, 0));
  const HHElement diff = hecke_Tw(sys, {0, 1, 0}, qs) - hecke_Tw(sys, {1, 0, 1}, qs);
  const RelationSet rels{kij_basis_embedded(sys, lr, 0, 1), "coideal"};
  CHECK(ideal_member(diff, rels, 3, 0).member);
  // a generator is not in the ideal at any small bound
  const IdealMemberResult neg = ideal_member(HHElement::d(sys, lr, 0), rels, 3, 1);
  CHECK_FALSE(neg.member);
  CHECK(neg.bound_used == 4);

  for (int w = 0; w < sys->size(); ++w) CHECK(tw_triangularity(sys, w, qs).pass);
}

TEST_CASE("odd-edge Hecke parameters must agree") {
  const CoxPtr sys = build_system(coxeter_matrix_a(2));
  const RingPtr lr = ring_laurent({"q1", "q2"});
  const std::vector<RingElem> qs{RingElem::variable(lr, 0), RingElem::variable(lr, 1)};
  CHECK_THROWS_AS(hecke_Tw(sys, {0, 1}, qs), OddConstraintViolation);
}

TEST_CASE("random elements are reproducible under a fixed seed") {
  const CoxPtr sys = build_system(coxeter_matrix_a(2));
  std::mt19937_64 r1(42), r2(42);
  for (int k = 0; k < 5; ++k)
    CHECK(random_element(sys, ring, r1) == random_element(sys, ring, r2));
}
