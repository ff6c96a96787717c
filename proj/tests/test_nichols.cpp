#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hh/nichols.hpp"

using namespace hh;

TEST_CASE("quadratic relations on the three transpositions") {
  const CoxPtr sys = build_system(coxeter_matrix_a(2));
  const QuadraticAlgebraSpec spec = d0_relations(sys);
  CHECK(spec.ngens == 3);
  // 3 squares + one mixed relation per compatible ordered pair; frozen from
  // tools/oracle/oracle.py, the compatible pairs are (s1, s2) and (s2, s1)
  CHECK(spec.relations.size() == 5);

  int squares = 0, mixed = 0;
  for (const NCElement& rel : spec.relations) {
    if (rel.terms().size() == 1)
      ++squares;
    else if (rel.terms().size() == 3)
      ++mixed;
  }
  CHECK(squares == 3);
  CHECK(mixed == 2);
}

TEST_CASE("graded dimensions of the transposition algebra") {
  // frozen from tools/oracle/oracle.py: dims 1, 3, 4, 3, 1, 0
  const CoxPtr sys = build_system(coxeter_matrix_a(2));
  const QuadraticAlgebraSpec spec = d0_relations(sys);
  const std::vector<int> expected{1, 3, 4, 3, 1, 0};
  for (int d = 0; d < static_cast<int>(expected.size()); ++d) {
    INFO("degree ", d);
    CHECK(graded_dimension(spec, d) == expected[d]);
  }
  CHECK_THROWS_AS(graded_dimension(spec, 7), DegreeBoundExceeded);
  CHECK_THROWS_AS(graded_dimension(spec, -1), DegreeBoundExceeded);
}

TEST_CASE("graded dimensions for two commuting reflections") {
  // frozen from tools/oracle/oracle.py: dims 1, 2, 1, 0
  const CoxPtr sys = build_system(coxeter_matrix_a1a1());
  const QuadraticAlgebraSpec spec = d0_relations(sys);
  CHECK(spec.ngens == 2);
  CHECK(spec.relations.size() == 3);  // two squares and one commutator
  const std::vector<int> expected{1, 2, 1, 0};
  for (int d = 0; d < static_cast<int>(expected.size()); ++d) {
    INFO("degree ", d);
    CHECK(graded_dimension(spec, d) == expected[d]);
  }
}

TEST_CASE("dimensions are independent of the generator ordering") {
  const CoxPtr sys = build_system(coxeter_matrix_a(2));
  const QuadraticAlgebraSpec spec = d0_relations(sys);
  for (const std::vector<int>& perm :
       {std::vector<int>{2, 0, 1}, std::vector<int>{1, 0, 2}, std::vector<int>{2, 1, 0}}) {
    const QuadraticAlgebraSpec rel = permuted_spec(spec, perm);
    for (int d = 0; d <= 5; ++d) {
      INFO("degree ", d);
      CHECK(graded_dimension(rel, d) == graded_dimension(spec, d));
    }
  }
}

TEST_CASE("only order-2 and order-3 edges are admitted") {
  CHECK_THROWS_AS(d0_relations(build_system(coxeter_matrix_i2(4))), NotSimplyLaced);
  CHECK_THROWS_AS(d0_relations(build_system(coxeter_matrix_i2(6))), NotSimplyLaced);
  CHECK_NOTHROW(d0_relations(build_system(coxeter_matrix_a(3))));
}

TEST_CASE("operator relations hold in the derivative representation") {
  const CoxPtr sys = build_system(coxeter_matrix_a(2));
  const RingPtr ring = ring_integers();
  const HHElement d0 = HHElement::d(sys, ring, 0), d1 = HHElement::d(sys, ring, 1);
  const std::vector<HHElement> samples{
      HHElement::unit(sys, ring), d0, d1, d0 * d1, d1 * d0,
      d0 * d1 * d0, d0 * d1 - d1 * d0 + d0.scaled(RingElem::constant(ring, 2))};
  const VerificationReport rep = check_nichols_operator_relations(sys, samples);
  for (const auto& rec : rep.records) {
    INFO(rec.check, " [", rec.instance, "]: ", rec.witness);
    CHECK(rec.status == "pass");
  }
}
