#pragma once

/**
 * Graded quadratic algebras on the reflections of a simply-laced Coxeter
 * group (Fomin-Kirillov type): relation generation from compatible pairs,
 * graded dimensions by exact elimination, and verification of the
 * universal-operator relations in the partial-derivative representation.
 *
 * A pair of distinct reflections (s, s') is compatible if s = w s_i w^{-1},
 * s' = w s_j w^{-1} with both lengths increasing; the quadratic relations
 * are d_s^2 = 0, commutation for m(s,s') = 2, and
 * d_s d_{s'} = d_{s s' s} d_s + d_{s'} d_{s s' s} for m(s,s') = 3.
 */

#include "hh/heckehopf.hpp"
#include "hh/report.hpp"

namespace hh {

struct NotSimplyLaced : HHError {
  NotSimplyLaced() : HHError("all m_ij must lie in {2, 3}") {}
};

/// T(V)/<relations> with V spanned by the reflections (generator g =
/// reflection_index); every relation is homogeneous of degree 2.
struct QuadraticAlgebraSpec {
  CoxPtr sys;
  int ngens = 0;
  std::vector<NCElement> relations;  ///< deterministic order, deduplicated
};

/// Relations of the degree-graded quotient D_0(W): enumerates compatible
/// pairs by scanning all (w, i, j) with both lengths increasing.
QuadraticAlgebraSpec d0_relations(const CoxPtr& sys);

/// dim of the degree-d component: (#words of length d) - rank of the span
/// of {u r v} in that degree, by exact incremental elimination.
int graded_dimension(const QuadraticAlgebraSpec& spec, int d, int max_d = 6);

/// The same algebra with generators relabeled by a permutation (for the
/// ordering-independence property of graded_dimension).
QuadraticAlgebraSpec permuted_spec(const QuadraticAlgebraSpec& spec,
                                   const std::vector<int>& perm);

/// In the operator realization d_{g,h} = partial_{g,h} on the D-part:
/// the composition law partial_{gh,w} = sum_{w1 w2 = w} partial_{g,w1} o
/// partial_{h,w2}, the anticommutation of partial_{s_i,1} with
/// partial_{s_i,s_i}, and the linear-braid alternation
/// (d_{s_i,1} d_{s_j,s_j} d_{s_i,s_i} ...)_m = (d_{s_j,s_j} ...
/// d_{s_{j'},s_{j'}} d_{s_{i'},1})_m, each evaluated on every sample.
VerificationReport check_nichols_operator_relations(const CoxPtr& sys,
                                                    const std::vector<HHElement>& samples);

}  // namespace hh
