#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hh/demazure.hpp"

using namespace hh;

namespace {

RingElem mono(const ModuleAction& a, const std::vector<int>& e) {
  return a.monomial(Expo(e.begin(), e.end()));
}

}  // namespace

TEST_CASE("polynomial carrier examples match the divided-difference oracle") {
  // frozen from tools/oracle/oracle.py (Demazure polynomial examples)
  const CoxPtr sys = build_system(coxeter_matrix_a(2));
  const ModuleAction a = ModuleAction::polynomial(sys);
  REQUIRE(a.is_polynomial());
  REQUIRE(a.nvars() == 3);

  const RingElem x1 = mono(a, {1, 0, 0}), x2 = mono(a, {0, 1, 0}), x3 = mono(a, {0, 0, 1});

  CHECK(a.apply_d(0, x1) == -x2);                             // D1(x1) = -x2
  CHECK(a.apply_d(0, x2) == x2);                              // D1(x2) = x2
  CHECK(a.apply_d(0, x1 * x1) == -x1 * x2 - x2 * x2);         // D1(x1^2)
  CHECK(a.apply_d(0, x1 * x2).is_zero());                     // D1(x1 x2) = 0
  CHECK(a.apply_d(0, x1 * x1 * x2) == -x1 * x2 * x2);         // D1(x1^2 x2)
  CHECK(a.apply_d(1, x2 * x2) == -x2 * x3 - x3 * x3);         // D2(x2^2)
  CHECK(a.apply_d(0, a.apply_d(1, x1 * x2 * x2)) == x2 * x3 * x3);

  // idempotence and the braid identity on a witness polynomial
  const RingElem p = x1 * x1 * x1;
  CHECK(a.apply_d(0, a.apply_d(0, p)) == a.apply_d(0, p));
  const RingElem w = x1 * x1 * x2;
  CHECK(a.apply_d(0, a.apply_d(1, a.apply_d(0, w))) ==
        a.apply_d(1, a.apply_d(0, a.apply_d(1, w))));

  CHECK(a.apply_s(0, x1) == x2);
  CHECK(a.apply_s(0, x3) == x3);
}

TEST_CASE("Laurent carrier examples match the oracle") {
  // frozen from tools/oracle/oracle.py (Laurent Demazure, B2 Cartan)
  const CoxPtr sys = build_system(coxeter_matrix_i2(4), cartan_b2());
  const ModuleAction a = ModuleAction::laurent(sys, cartan_b2());
  REQUIRE_FALSE(a.is_polynomial());
  REQUIRE(a.nvars() == 2);

  const RingElem t1 = mono(a, {1, 0}), t2 = mono(a, {0, 1});
  const RingElem one = RingElem::constant(a.carrier(), 1);

  CHECK(a.apply_s(0, t1) == mono(a, {-1, 0}));       // s1(t1) = 1/t1
  CHECK(a.apply_s(0, t2) == t1 * t2);                // s1(t2) = t1 t2
  CHECK(a.apply_s(1, t1) == t1 * t2 * t2);           // s2(t1) = t1 t2^2
  CHECK(a.apply_d(0, t1) == -one - mono(a, {-1, 0}));  // D1(t1) = -1 - 1/t1
  CHECK(a.apply_d(0, t2) == t2);                     // D1(t2) = t2
  CHECK(a.apply_d(1, t1 * t2).is_zero());            // D2(t1 t2) = 0
  CHECK(a.apply_d(0, a.apply_d(0, t1 * t2)) == a.apply_d(0, t1 * t2));
}

TEST_CASE("group elements act through reduced words") {
  const CoxPtr sys = build_system(coxeter_matrix_a(2));
  const ModuleAction a = ModuleAction::polynomial(sys);
  const RingElem p = mono(a, {2, 1, 0});
  for (int w = 0; w < sys->size(); ++w) {
    RingElem byword = p;
    const std::vector<int>& word = sys->word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) byword = a.apply_s(*it, byword);
    CHECK(a.apply_group(w, p) == byword);
  }
}

TEST_CASE("non-simple reflections act through conjugated decompositions") {
  const CoxPtr sys = build_system(coxeter_matrix_a(2));
  const ModuleAction a = ModuleAction::polynomial(sys);
  const int t = sys->conjugate(sys->generator(0), sys->generator(1));  // s1 s2 s1
  const RingElem p = mono(a, {1, 1, 0});
  // D_t = s1 D2 s1 as operators (length-additive decomposition)
  const RingElem expected = a.apply_s(0, a.apply_d(1, a.apply_s(0, p)));
  CHECK(a.apply_d_reflection(t, p) == expected);
  // D_t is idempotent too
  const RingElem q = a.apply_d_reflection(t, p);
  CHECK(a.apply_d_reflection(t, q) == q);
}

TEST_CASE("whole elements act with the group part first") {
  const CoxPtr sys = build_system(coxeter_matrix_a(2));
  const ModuleAction a = ModuleAction::polynomial(sys);
  const RingPtr ring = ring_integers();
  const RingElem p = mono(a, {2, 0, 0});
  const HHElement x = HHElement::d(sys, ring, 0) * HHElement::s(sys, ring, 1);
  CHECK(a.act(x, p) == a.apply_d(0, a.apply_s(1, p)));
  // the action is linear and respects the algebra product
  const HHElement y = HHElement::d(sys, ring, 1);
  CHECK(a.act(x * y, p) == a.act(x, a.act(y, p)));
}

TEST_CASE("invariant windows close under all generator maps") {
  const CoxPtr sys = build_system(coxeter_matrix_i2(4), cartan_b2());
  const ModuleAction a = ModuleAction::laurent(sys, cartan_b2());
  const std::vector<Expo> window = window_through_degree(a, 2);
  // every generator image stays inside (operator_matrix would throw)
  for (int i = 0; i < 2; ++i) {
    (void)operator_matrix(a, HHElement::d(sys, ring_integers(), i), window);
    (void)operator_matrix(a, HHElement::s(sys, ring_integers(), i), window);
  }
  // a raw non-closed window is detected
  const std::vector<Expo> bad{{1, 0}};
  CHECK_THROWS_AS(operator_matrix(a, HHElement::d(sys, ring_integers(), 0), bad),
                  WindowNotInvariant);
}

TEST_CASE("operator matrices represent composition") {
  const CoxPtr sys = build_system(coxeter_matrix_a(2));
  const ModuleAction a = ModuleAction::polynomial(sys);
  const std::vector<Expo> window = window_through_degree(a, 2);
  const RingPtr ring = ring_integers();
  const HHElement d0 = HHElement::d(sys, ring, 0), d1 = HHElement::d(sys, ring, 1);
  const GradedMatrix m0 = operator_matrix(a, d0, window);
  const GradedMatrix m1 = operator_matrix(a, d1, window);
  const GradedMatrix m01 = operator_matrix(a, d0 * d1, window);
  CHECK(m0.matrix * m1.matrix == m01.matrix);
  CHECK(m0.matrix * m0.matrix == m0.matrix);  // idempotent
}

TEST_CASE("defining relations vanish on windows; corrupted relations fail") {
  const CoxPtr sys = build_system(coxeter_matrix_a(2));
  const ModuleAction a = ModuleAction::laurent(sys, cartan_a(2));
  for (const RelationCheck& c : verify_defining_relations(a, 3)) {
    INFO(c.label, ": ", c.witness);
    CHECK(c.pass);
  }

  // the relation list covers involutions (2), idempotents (2), rank-1 (2),
  // one Coxeter power for the single edge, and linear braids (2)
  const std::vector<FreeRelation> rels = defining_relations(sys);
  CHECK(rels.size() == 2 + 2 + 2 + 1 + 2);

  // a corrupted idempotent D0^2 = -D0 must be caught
  FreeRelation bad{"corrupted idempotent",
                   {{Rat(1), {{GenKind::D, 0}, {GenKind::D, 0}}}, {Rat(1), {{GenKind::D, 0}}}}};
  const RingPtr ring = ring_integers();
  const HHElement probe = HHElement::d(sys, ring, 0) + HHElement::d(sys, ring, 0);
  bool found_failure = false;
  const std::vector<Expo> window = window_through_degree(a, 2);
  for (const Expo& e : window) {
    RingElem img = RingElem::constant(a.carrier(), 0);
    for (const auto& [coeff, word] : bad.terms) {
      RingElem term = a.monomial(e);
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        term = act_generator(a, it->kind, it->i, term);
      img = img + term.scaled(coeff);
    }
    if (!img.is_zero()) found_failure = true;
  }
  CHECK(found_failure);
  (void)probe;
}

TEST_CASE("coideal basis annihilates the Laurent carrier") {
  const CoxPtr sys = build_system(coxeter_matrix_a(2));
  const ModuleAction a = ModuleAction::laurent(sys, cartan_a(2));
  const std::vector<HHElement> basis = kij_nullspace(sys, ring_integers(), 3);
  REQUIRE(basis.size() == 5);
  for (const RelationCheck& c : verify_relations(a, basis, 3)) {
    INFO(c.label, ": ", c.witness);
    CHECK(c.pass);
  }
  // a non-coideal element does not annihilate
  const std::vector<HHElement> bogus{HHElement::d(sys, ring_integers(), 0)};
  bool all_pass = true;
  for (const RelationCheck& c : verify_relations(a, bogus, 2)) all_pass = all_pass && c.pass;
  CHECK_FALSE(all_pass);
}

TEST_CASE("carrier construction validates its inputs") {
  CHECK_THROWS(ModuleAction::polynomial(build_system(coxeter_matrix_i2(4))));
  CHECK_THROWS(ModuleAction::laurent(build_system(coxeter_matrix_i2(4)), cartan_g2()));
}
