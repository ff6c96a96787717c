#pragma once

/**
 * Module actions of the Hecke-Hopf algebra by Demazure-type operators.
 *
 * Two carriers:
 *  - polynomial(n): Z[x_1..x_n] for a type-A chain, s_i swapping x_i and
 *    x_{i+1}, D_i = (1 - s_i) / (1 - x_i x_{i+1}^{-1});
 *  - laurent(A): Z[t_i^{+-1}] for any Cartan matrix A, s_i(t_j) =
 *    t_i^{-a_ij} t_j, D_i = (1 - s_i) / (1 - t_i).
 *
 * Divisions are exact by construction; a remainder raises NonExactDivision
 * (a bug, never a data condition).  Arbitrary algebra elements act with
 * D-words composing left-to-right and group parts acting through reduced
 * words; D_s for a non-simple reflection acts through a length-additive
 * conjugated decomposition s = v s_i v^{-1}.
 *
 * Finite invariant monomial windows are produced by saturation under all
 * generator maps, giving exact operator matrices and exhaustive relation
 * verification at bounded degree.
 */

#include "hh/heckehopf.hpp"
#include "hh/linalg.hpp"

namespace hh {

struct WindowNotInvariant : HHError {
  explicit WindowNotInvariant(const std::string& what)
      : HHError("window not invariant: " + what) {}
};

class ModuleAction {
 public:
  /// Z[x_1..x_{rank+1}] carrier; requires a type-A chain system.
  static ModuleAction polynomial(CoxPtr sys);
  /// Laurent carrier over t_1..t_rank; the Cartan matrix must be compatible
  /// with the Coxeter matrix (a_ii = 2, a_ij a_ji realizing m_ij).
  static ModuleAction laurent(CoxPtr sys, std::vector<std::vector<int>> cartan);

  const CoxPtr& system() const { return sys_; }
  const RingPtr& carrier() const { return carrier_; }
  bool is_polynomial() const { return poly_; }
  int nvars() const;

  /// The basis monomial with exponent vector e.
  RingElem monomial(const Expo& e) const;

  RingElem apply_s(int i, const RingElem& p) const;  ///< generator index
  RingElem apply_d(int i, const RingElem& p) const;
  RingElem apply_group(int w, const RingElem& p) const;  ///< element id
  /// D_s for any reflection element id, via s = v s_i v^{-1} with
  /// l(v s_i) = l(v) + 1 and l(s) = 2 l(v) + 1.
  RingElem apply_d_reflection(int t, const RingElem& p) const;

  /// Action of a normal-form element: per term, the group part acts first,
  /// then the D-letters compose right-to-left; coefficients must be
  /// constants of the element's ring.
  RingElem act(const HHElement& x, const RingElem& p) const;

 private:
  ModuleAction() = default;
  CoxPtr sys_;
  RingPtr carrier_;
  bool poly_ = false;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::pair<int, int>> refl_decomp_;  ///< reflection id -> (v, i)
  mutable std::map<std::pair<int, Expo>, RingElem> d_cache_;  ///< (refl, mono)
};

enum class GenKind { S, D };

/// Single-generator action (spec entry point).
RingElem act_generator(const ModuleAction& a, GenKind kind, int i, const RingElem& p);
/// Whole-element action (alias of ModuleAction::act).
inline RingElem act_element(const ModuleAction& a, const HHElement& x, const RingElem& p) {
  return a.act(x, p);
}

/// Smallest superset of `seeds` closed under every apply_s / apply_d image
/// monomial (finite: saturation stays inside the convex hull of the W-orbit).
std::vector<Expo> invariant_window(const ModuleAction& a, const std::vector<Expo>& seeds);
/// invariant_window seeded with all nonnegative monomials of total degree
/// <= maxdeg (for the polynomial carrier those are already invariant).
std::vector<Expo> window_through_degree(const ModuleAction& a, int maxdeg);

struct GradedMatrix {
  int degree = 0;               ///< max total seed degree (informational)
  std::vector<Expo> basis;      ///< ordered monomial window
  ExactMatrix matrix;           ///< column c = image of basis[c], over Q
};

/// Exact matrix of act(x, .) on the window; throws WindowNotInvariant if an
/// image leaves the span.
GradedMatrix operator_matrix(const ModuleAction& a, const HHElement& x,
                             const std::vector<Expo>& window);

/// One formal generator word with a coefficient; words act right-to-left.
struct FreeGen {
  GenKind kind;
  int i;
};
struct FreeRelation {
  std::string label;
  std::vector<std::pair<Rat, std::vector<FreeGen>>> terms;
};

/// The presentation relations of the algebra: involutions, idempotents, the
/// rank-1 relation, Coxeter relations, and the linear braid relations
/// D_i (s_j s_i ...)_{m-1} = (s_j s_i ...)_{m-1} D_{i'} with i' = i for even
/// m_ij and i' = j for odd m_ij.
std::vector<FreeRelation> defining_relations(const CoxPtr& sys);

struct RelationCheck {
  std::string label;
  bool pass = true;
  std::string witness;  ///< failing monomial / relation, empty on pass
};

/// Evaluate every defining relation on every monomial of the saturated
/// window through maxdeg; pass iff all differences vanish identically.
std::vector<RelationCheck> verify_defining_relations(const ModuleAction& a, int maxdeg);

/// Check that each given element annihilates the whole window through
/// maxdeg (the coideal / rank-2 relation elements acting by zero).
std::vector<RelationCheck> verify_relations(const ModuleAction& a,
                                            const std::vector<HHElement>& rels, int maxdeg);

}  // namespace hh
