#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "hh/coxeter.hpp"

using namespace hh;

TEST_CASE("orders and reflection counts match the permutation oracle") {
  // frozen from tools/oracle/oracle.py (Coxeter group / dihedral data)
  for (const auto& [n, order, nrefl] :
       {std::tuple{2, 6, 3}, {3, 24, 6}, {4, 120, 10}}) {
    const CoxPtr sys = build_system(coxeter_matrix_a(n));
    CHECK(sys->size() == order);
    CHECK(static_cast<int>(sys->reflections().size()) == nrefl);
  }
  for (int m = 2; m <= 7; ++m) {
    const CoxPtr sys = build_system(coxeter_matrix_i2(m));
    CHECK(sys->size() == 2 * m);
    CHECK(static_cast<int>(sys->reflections().size()) == m);
  }
  CHECK(build_system(coxeter_matrix_i2(4), cartan_b2())->size() == 8);
  CHECK(build_system(coxeter_matrix_i2(6), cartan_g2())->size() == 12);
  CHECK(build_system(coxeter_matrix_a1a1())->size() == 4);
}

TEST_CASE("identity, generators, lengths, words") {
  const CoxPtr sys = build_system(coxeter_matrix_a(2));
  CHECK(sys->identity() == 0);
  CHECK(sys->length(sys->identity()) == 0);
  for (int i = 0; i < 2; ++i) {
    const int s = sys->generator(i);
    CHECK(sys->length(s) == 1);
    CHECK(sys->word(s) == std::vector<int>{i});
    CHECK(sys->multiply(s, s) == sys->identity());
    CHECK(sys->inverse(s) == s);
  }
  // longest element of A2 has length 3; of I2(m), length m
  int maxlen = 0;
  for (int w = 0; w < sys->size(); ++w) maxlen = std::max(maxlen, sys->length(w));
  CHECK(maxlen == 3);
  const CoxPtr dih = build_system(coxeter_matrix_i2(5));
  maxlen = 0;
  for (int w = 0; w < dih->size(); ++w) maxlen = std::max(maxlen, dih->length(w));
  CHECK(maxlen == 5);
}

TEST_CASE("multiplication agrees with generator tables") {
  const CoxPtr sys = build_system(coxeter_matrix_a(3));
  for (int w = 0; w < sys->size(); ++w) {
    CHECK(sys->multiply(w, sys->identity()) == w);
    CHECK(sys->multiply(sys->inverse(w), w) == sys->identity());
    for (int i = 0; i < sys->rank(); ++i)
      CHECK(sys->multiply(w, sys->generator(i)) == sys->mult_gen(w, i));
  }
}

TEST_CASE("reflections are exactly the conjugates of generators") {
  const CoxPtr sys = build_system(coxeter_matrix_i2(4));
  std::set<int> conj;
  for (int w = 0; w < sys->size(); ++w)
    for (int i = 0; i < sys->rank(); ++i)
      conj.insert(sys->conjugate(w, sys->generator(i)));
  std::set<int> listed(sys->reflections().begin(), sys->reflections().end());
  CHECK(conj == listed);
  for (int t : sys->reflections()) {
    CHECK(sys->is_reflection(t));
    CHECK(sys->multiply(t, t) == sys->identity());
    CHECK(sys->reflections()[sys->reflection_index(t)] == t);
  }
  CHECK_FALSE(sys->is_reflection(sys->identity()));
}

TEST_CASE("conjugation cocycle: descent rule and cocycle identity") {
  const CoxPtr sys = build_system(coxeter_matrix_a(2));
  for (int w = 0; w < sys->size(); ++w)
    for (int t : sys->reflections()) {
      const auto [chi, sigma] = sys->chi_sigma(w, t);
      CHECK(chi == (sys->length(sys->multiply(w, t)) > sys->length(w) ? 1 : -1));
      CHECK(sigma == (1 - chi) / 2);
    }
  // chi_{w1 w2, t} = chi_{w2, t} * chi_{w1, w2 t w2^-1}
  for (int w1 = 0; w1 < sys->size(); ++w1)
    for (int w2 = 0; w2 < sys->size(); ++w2)
      for (int t : sys->reflections()) {
        const int lhs = sys->chi_sigma(sys->multiply(w1, w2), t).first;
        const int rhs = sys->chi_sigma(w2, t).first *
                        sys->chi_sigma(w1, sys->conjugate(w2, t)).first;
        CHECK(lhs == rhs);
      }
}

TEST_CASE("Bruhat order agrees with the exhaustive subword oracle") {
  for (const auto& matrix : {coxeter_matrix_a(3), coxeter_matrix_i2(4)}) {
    const CoxPtr sys = build_system(matrix);
    for (int w = 0; w < sys->size(); ++w) {
      // v <= w iff v is the product of some subword (subsequence) of a fixed
      // reduced word of w; enumerate all 2^l subsequences of the ShortLex word
      const std::vector<int>& word = sys->word(w);
      std::set<int> below;
      for (unsigned mask = 0; mask < (1u << word.size()); ++mask) {
        int p = sys->identity();
        for (size_t k = 0; k < word.size(); ++k)
          if (mask & (1u << k)) p = sys->mult_gen(p, word[k]);
        below.insert(p);
      }
      for (int v = 0; v < sys->size(); ++v)
        CHECK(sys->bruhat_leq(v, w) == (below.count(v) == 1));
    }
  }
}

TEST_CASE("alternating dihedral reflections") {
  const CoxPtr sys = build_system(coxeter_matrix_i2(5));
  std::set<int> seen;
  for (int k = 1; k <= 5; ++k) {
    const int t = sys->dihedral_dk(0, 1, k);
    CHECK(sys->is_reflection(t));
    CHECK(sys->length(t) == std::min(2 * k - 1, 2 * (5 - k) + 1));
    seen.insert(t);
  }
  CHECK(seen.size() == 5);  // all reflections of I2(5)
  CHECK(sys->dihedral_dk(0, 1, 1) == sys->generator(0));
  CHECK(sys->dihedral_dk(0, 1, 5) == sys->generator(1));
  CHECK_THROWS_AS(sys->dihedral_dk(0, 1, 6), OutOfRange);
}

TEST_CASE("malformed and infinite inputs are rejected") {
  CHECK_THROWS_AS(build_system({{1, 2}}), InvalidMatrix);        // not square
  CHECK_THROWS_AS(build_system({{1, 3}, {4, 1}}), InvalidMatrix);  // asymmetric
  CHECK_THROWS_AS(build_system({{2, 3}, {3, 1}}), InvalidMatrix);  // diagonal != 1
  CHECK_THROWS_AS(CoxeterSystem::build(coxeter_matrix_a(3), std::nullopt, 5), InfiniteGroup);
}

TEST_CASE("describe renders reduced words") {
  const CoxPtr sys = build_system(coxeter_matrix_a(2));
  CHECK(sys->describe(sys->identity()) == "e");
  CHECK(sys->describe(sys->generator(0)) == "s1");
  CHECK(sys->describe(sys->mult_gen(sys->generator(0), 1)) == "s1*s2");
}
