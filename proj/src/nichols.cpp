#include "hh/nichols.hpp"

#include <algorithm>
#include <set>

namespace hh {

namespace {

int element_order(const CoxeterSystem& sys, int w) {
  int p = w, k = 1;
  while (p != sys.identity()) {
    p = sys.multiply(p, w);
    ++k;
  }
  return k;
}

}  // namespace

QuadraticAlgebraSpec d0_relations(const CoxPtr& sys) {
  for (int i = 0; i < sys->rank(); ++i)
    for (int j = 0; j < i; ++j)
      if (sys->m(i, j) != 2 && sys->m(i, j) != 3) throw NotSimplyLaced();

  const RingPtr ring = ring_integers();
  QuadraticAlgebraSpec spec;
  spec.sys = sys;
  spec.ngens = static_cast<int>(sys->reflections().size());

  for (int g = 0; g < spec.ngens; ++g)
    spec.relations.push_back(NCElement::monomial(ring, {g, g}, RingElem::constant(ring, 1)));

  // Compatible ordered pairs (s, s'): s = w s_i w^{-1}, s' = w s_j w^{-1},
  // both lengths increasing.
  std::set<std::pair<int, int>> pairs;
  for (int w = 0; w < sys->size(); ++w)
    for (int i = 0; i < sys->rank(); ++i)
      for (int j = 0; j < sys->rank(); ++j) {
        if (i == j) continue;
        if (sys->length(sys->mult_gen(w, i)) <= sys->length(w)) continue;
        if (sys->length(sys->mult_gen(w, j)) <= sys->length(w)) continue;
        pairs.emplace(sys->conjugate(w, sys->generator(i)), sys->conjugate(w, sys->generator(j)));
      }

  for (const auto& [s, sp] : pairs) {
    const int m = element_order(*sys, sys->multiply(s, sp));
    const int gs = sys->reflection_index(s), gp = sys->reflection_index(sp);
    if (m == 2) {
      if (s >= sp) continue;  // one relation per unordered pair
      NCElement rel = NCElement::monomial(ring, {gs, gp}, RingElem::constant(ring, 1));
      rel.add_term({gp, gs}, RingElem::constant(ring, -1));
      spec.relations.push_back(rel);
    } else {
      const int gm = sys->reflection_index(sys->multiply(sys->multiply(s, sp), s));
      NCElement rel = NCElement::monomial(ring, {gs, gp}, RingElem::constant(ring, 1));
      rel.add_term({gm, gs}, RingElem::constant(ring, -1));
      rel.add_term({gp, gm}, RingElem::constant(ring, -1));
      spec.relations.push_back(rel);
    }
  }
  return spec;
}

QuadraticAlgebraSpec permuted_spec(const QuadraticAlgebraSpec& spec,
                                   const std::vector<int>& perm) {
  QuadraticAlgebraSpec out;
  out.sys = spec.sys;
  out.ngens = spec.ngens;
  for (const NCElement& rel : spec.relations) {
    NCElement mapped(rel.ring());
    for (const auto& [w, c] : rel.terms()) {
      NCWord mw;
      for (int g : w) mw.push_back(perm.at(g));
      mapped.add_term(mw, c);
    }
    out.relations.push_back(mapped);
  }
  return out;
}

int graded_dimension(const QuadraticAlgebraSpec& spec, int d, int max_d) {
  if (d < 0 || d > max_d) throw DegreeBoundExceeded();
  if (d == 0) return 1;
  if (d == 1) return spec.ngens;

  const auto encode = [&](const NCWord& w) {
    long long code = 0;
    for (int g : w) code = code * spec.ngens + g;
    return static_cast<int>(code);
  };
  // All words of a given length, in counter order.
  const auto words = [&](int len) {
    std::vector<NCWord> out;
    NCWord w(len, 0);
    while (true) {
      out.push_back(w);
      int pos = len - 1;
      while (pos >= 0 && ++w[pos] == spec.ngens) w[pos--] = 0;
      if (pos < 0) break;
    }
    return out;
  };

  IncrementalSpan span;
  for (int lu = 0; lu + 2 <= d; ++lu) {
    const auto us = words(lu), vs = words(d - 2 - lu);
    for (const NCWord& u : us)
      for (const NCElement& rel : spec.relations)
        for (const NCWord& v : vs) {
          IncrementalSpan::Vec vec;
          for (const auto& [w, c] : rel.terms()) {
            NCWord full = u;
            full.insert(full.end(), w.begin(), w.end());
            full.insert(full.end(), v.begin(), v.end());
            vec[encode(full)] += c.constant_coeff();
          }
          span.insert(std::move(vec));
        }
  }
  long long total = 1;
  for (int k = 0; k < d; ++k) total *= spec.ngens;
  return static_cast<int>(total) - span.dimension();
}

VerificationReport check_nichols_operator_relations(const CoxPtr& sys,
                                                    const std::vector<HHElement>& samples) {
  VerificationReport rep;
  const auto sample_name = [&](size_t k) { return "sample " + std::to_string(k + 1); };

  for (int i = 0; i < sys->rank(); ++i) {
    const int si = sys->generator(i), e = sys->identity();
    bool ok = true;
    std::string witness;
    for (size_t k = 0; k < samples.size() && ok; ++k) {
      const HHElement& x = samples[k];
      const HHElement sum = partial_derivative(si, e, partial_derivative(si, si, x)) +
                            partial_derivative(si, si, partial_derivative(si, e, x));
      if (!sum.is_zero()) {
        ok = false;
        witness = sample_name(k) + ": " + sum.to_string();
      }
    }
    rep.add("anticommutation of partial_{s,1} and partial_{s,s}",
            "i = " + std::to_string(i + 1), ok, witness);
  }

  for (int i = 0; i < sys->rank(); ++i)
    for (int j = 0; j < sys->rank(); ++j) {
      if (i == j) continue;
      const int m = sys->m(i, j);
      const int ip = (m % 2 == 0) ? i : j;
      // Operator letters (g, h), leftmost applied last.
      using Op = std::pair<int, int>;
      std::vector<Op> lhs{{sys->generator(i), sys->identity()}};
      std::vector<Op> rhs;
      for (int k = 0; k < m - 1; ++k) {
        const int g = sys->generator(k % 2 == 0 ? j : i);
        lhs.emplace_back(g, g);
        rhs.emplace_back(g, g);
      }
      rhs.emplace_back(sys->generator(ip), sys->identity());
      const auto apply = [&](const std::vector<Op>& ops, HHElement x) {
        for (auto it = ops.rbegin(); it != ops.rend(); ++it)
          x = partial_derivative(it->first, it->second, x);
        return x;
      };
      bool ok = true;
      std::string witness;
      for (size_t k = 0; k < samples.size() && ok; ++k) {
        const HHElement diff = apply(lhs, samples[k]) - apply(rhs, samples[k]);
        if (!diff.is_zero()) {
          ok = false;
          witness = sample_name(k) + ": " + diff.to_string();
        }
      }
      rep.add("linear braid alternation",
              "(i, j) = (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")", ok,
              witness);
    }

  // Composition law partial_{gh,w} = sum_{w1 w2 = w} partial_{g,w1} o
  // partial_{h,w2}, for g, h ranging over the generators.
  bool ok = true;
  std::string witness;
  for (int i = 0; i < sys->rank() && ok; ++i)
    for (int j = 0; j < sys->rank() && ok; ++j) {
      const int g = sys->generator(i), h = sys->generator(j);
      const int gh = sys->multiply(g, h);
      for (int w = 0; w < sys->size() && ok; ++w)
        for (size_t k = 0; k < samples.size() && ok; ++k) {
          HHElement sum = partial_derivative(gh, w, samples[k]).scaled(Rat(-1));
          for (int w1 = 0; w1 < sys->size(); ++w1) {
            const int w2 = sys->multiply(sys->inverse(w1), w);
            sum = sum + partial_derivative(g, w1, partial_derivative(h, w2, samples[k]));
          }
          if (!sum.is_zero()) {
            ok = false;
            witness = "g = " + sys->describe(g) + ", h = " + sys->describe(h) +
                      ", w = " + sys->describe(w) + ", " + sample_name(k);
          }
        }
    }
  rep.add("composition law for products of group elements", "generator pairs", ok, witness);
  return rep;
}

}  // namespace hh
