#pragma once

/**
 * Exact arithmetic in the Hecke-Hopf algebra of a finite Coxeter system, in
 * the normal form  sum c * (square-free word in D_s, s a reflection) * w.
 *
 * Group elements commute past D-letters by the cocycle rule
 *   w * D_s = (chi_{w,s} D_{wsw^-1} + sigma_{w,s} (1 - wsw^-1)) * w,
 * with chi/sigma always recomputed from lengths.  On top of the product sit
 * the Hopf operations, the symmetry operators (bar, theta, W-action, the
 * s-derivations, partial derivatives), the rank-2 relation families, the
 * coideal K_ij, bounded-degree ideal membership, and the Hecke embedding.
 */

#include <functional>
#include <optional>
#include <random>

#include "hh/coxeter.hpp"
#include "hh/freealg.hpp"
#include "hh/linalg.hpp"
#include "hh/report.hpp"
#include "hh/rings.hpp"

namespace hh {

struct HHError : std::runtime_error {
  explicit HHError(const std::string& what) : std::runtime_error(what) {}
};
struct NotInDPart : HHError {
  NotInDPart() : HHError("operand must lie in the D-part (trivial group components)") {}
};
struct InvalidGenerator : HHError {
  explicit InvalidGenerator(const std::string& what) : HHError("invalid generator: " + what) {}
};
struct BadIndices : HHError {
  explicit BadIndices(const std::string& what) : HHError("bad indices: " + what) {}
};
struct OddConstraintViolation : HHError {
  OddConstraintViolation() : HHError("parameters must agree when m_ij is odd") {}
};
struct DegreeBoundExceeded : HHError {
  DegreeBoundExceeded() : HHError("degree bound exceeded") {}
};

/// Normal-form key: square-free word of reflection indices plus a group id.
struct HHKey {
  NCWord u;  ///< indices into CoxeterSystem::reflections()
  int w = 0;
  bool operator<(const HHKey& o) const {
    if (NCWordOrder{}(u, o.u)) return true;
    if (NCWordOrder{}(o.u, u)) return false;
    return w < o.w;
  }
  bool operator==(const HHKey& o) const { return u == o.u && w == o.w; }
};

class HHElement {
 public:
  HHElement() = default;
  HHElement(CoxPtr sys, RingPtr ring) : sys_(std::move(sys)), ring_(std::move(ring)) {}

  static HHElement zero(const CoxPtr& sys, const RingPtr& ring);
  static HHElement unit(const CoxPtr& sys, const RingPtr& ring);
  /// The generator s_i.
  static HHElement s(const CoxPtr& sys, const RingPtr& ring, int i);
  /// The generator D_i = D_{s_i}.
  static HHElement d(const CoxPtr& sys, const RingPtr& ring, int i);
  /// A group element.
  static HHElement group(const CoxPtr& sys, const RingPtr& ring, int w);
  /// D_s for an arbitrary reflection (element id).
  static HHElement d_refl(const CoxPtr& sys, const RingPtr& ring, int t);
  static HHElement monomial(const CoxPtr& sys, const RingPtr& ring, HHKey key, RingElem c);

  const CoxPtr& system() const { return sys_; }
  const RingPtr& ring() const { return ring_; }
  const std::map<HHKey, RingElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Number of D-letters of the largest term (group part contributes 0).
  int degree() const;
  bool in_d_part() const;

  HHElement operator+(const HHElement& o) const;
  HHElement operator-(const HHElement& o) const;
  HHElement operator-() const;
  HHElement operator*(const HHElement& o) const;  ///< normal-form product
  HHElement scaled(const RingElem& c) const;
  HHElement scaled(const Rat& c) const;
  bool operator==(const HHElement& o) const;
  bool operator!=(const HHElement& o) const { return !(*this == o); }

  void add_term(const HHKey& k, const RingElem& c);
  std::string to_string() const;

 private:
  CoxPtr sys_;
  RingPtr ring_;
  std::map<HHKey, RingElem> terms_;
};

inline HHElement hh_mul(const HHElement& x, const HHElement& y) { return x * y; }

/// Tensor power of the algebra (componentwise product), used for the Hopf
/// axioms.  Keys are tuples of normal-form keys.
class HHTensor {
 public:
  HHTensor() = default;
  HHTensor(CoxPtr sys, RingPtr ring, int arity)
      : sys_(std::move(sys)), ring_(std::move(ring)), arity_(arity) {}
  static HHTensor unit(const CoxPtr& sys, const RingPtr& ring, int arity);

  int arity() const { return arity_; }
  const std::map<std::vector<HHKey>, RingElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  HHTensor operator+(const HHTensor& o) const;
  HHTensor operator-(const HHTensor& o) const;
  HHTensor operator*(const HHTensor& o) const;  ///< componentwise
  bool operator==(const HHTensor& o) const { return terms_ == o.terms_; }
  bool operator!=(const HHTensor& o) const { return !(*this == o); }

  void add_term(const std::vector<HHKey>& k, const RingElem& c);

  /// Apply f to component `slot`, splicing the resulting tensor factors in
  /// place of it (f returns an arity-k tensor; the result has arity
  /// arity-1+k).  Backbone of (Delta x id), (id x eps), (S x id) etc.
  HHTensor map_component(int slot, int out_arity,
                         const std::function<HHTensor(const HHElement&)>& f) const;

  /// Multiply all components together left-to-right (arity -> 1 element).
  HHElement multiply_out() const;

 private:
  CoxPtr sys_;
  RingPtr ring_;
  int arity_ = 1;
  std::map<std::vector<HHKey>, RingElem> terms_;
};

/// Wrap an element as an arity-1 tensor.
HHTensor as_tensor(const HHElement& x);

// --- Hopf structure ---------------------------------------------------------
HHTensor hh_coproduct(const HHElement& x);        ///< Delta
RingElem hh_counit(const HHElement& x);           ///< eps
HHElement hh_antipode(const HHElement& x);        ///< S
/// Coassociativity, both counit identities, and both antipode identities,
/// checked exactly on every sample element (all from one system and ring).
VerificationReport check_hopf_axioms(const CoxPtr& sys, const RingPtr& ring,
                                     const std::vector<HHElement>& samples);
// --- Symmetries -------------------------------------------------------------
HHElement hh_bar(const HHElement& x);             ///< anti-involution, fixes s_i and D_i
HHElement hh_theta(const HHElement& x);           ///< theta(w)=(-1)^l(w) w, theta(D_s)=1-D_s
/// W-action on the D-part: w(D_s) = D_{wsw^-1} if l(ws) > l(w) else 1 - D_{wsw^-1}.
HHElement w_action(int w, const HHElement& x);
/// Twisted derivation with d_s(D_s') = delta_{s,s'} (s a reflection element id).
HHElement ds_derivation(int s, const HHElement& x);
/// partial_{g,h}(x): coefficient of h in the normal form of g*x.
HHElement partial_derivative(int g, int h, const HHElement& x);
/// Same via the descent recursion; must agree with partial_derivative.
HHElement partial_recursive(int g, int h, const HHElement& x);

// --- Rank-2 relation families ----------------------------------------------
/// Q_{ij}^{(n,r,p)} built from the alternating reflections of the (i,j)
/// dihedral; n | m, 1 <= r <= n, 1 <= p < m/(2n).
HHElement rank2_Q(const CoxPtr& sys, const RingPtr& ring, int i, int j, int n, int r, int p);
/// R_{ij}^{(n,r,t)}; n | m, 1 <= r <= n, 0 <= t <= m/n.
HHElement rank2_R(const CoxPtr& sys, const RingPtr& ring, int i, int j, int n, int r, int t);
/// Legal (n,p) / (n,t) parameter lists for a given m.
std::vector<std::array<int, 3>> rank2_q_params(int m);  ///< (n, r, p)
std::vector<std::array<int, 3>> rank2_r_params(int m);  ///< (n, r, t)
/// The ordered-product difference (1-c_{i1}D_1)...(1-c_{im}D_m) - reverse.
HHElement delta_ij(const CoxPtr& sys, int i, int j, const RingElem& ci, const RingElem& cj);
/// The degree-4 element for m_ij = 5 (written with the alternating-reflection
/// D_1..D_5):  D1 D2 D3 D4 + (D1 D2 D4 + D2 D3 D4 - D2 D4)(D5 - 1)
///           - (D5 D4 D3 D1 + D5 D3 D2 D1 - D5 D3 D1);  lies in K_ij.
HHElement rank2_qij4(const CoxPtr& sys, const RingPtr& ring, int i, int j);
/// Conjugation identities of the Q/R families under s_i and s_j (index
/// shifts in r, boundary wrap into t, and the two sign-flip corner cases),
/// verified verbatim over every legal parameter.
VerificationReport check_dij2_identities(const CoxPtr& sys, const RingPtr& ring, int i, int j);

// --- The coideal K_ij -------------------------------------------------------
/// True iff x has degree <= m, zero counit, and every conjugate w x w^-1
/// stays in the D-part: the defining constraints of K_ij (intersected with
/// the counit kernel).  Works for any dihedral system.
bool kij_contains(const HHElement& x);
/// Explicit HNF-echelonized integer basis of K_ij for a dihedral system;
/// feasible through m = max_m (default 4; larger m use kij_contains).
std::vector<HHElement> kij_nullspace(const CoxPtr& sys, const RingPtr& ring, int max_m = 4);
/// kij_nullspace of the (i, j) dihedral parabolic, transported into `sys`
/// by mapping each alternating reflection word through the letters i, j.
std::vector<HHElement> kij_basis_embedded(const CoxPtr& sys, const RingPtr& ring, int i, int j);

// --- Ideal membership -------------------------------------------------------
struct RelationSet {
  std::vector<HHElement> gens;
  std::string label;
};

struct MemberCertificate {
  /// Summands (coeff, left monomial key, relation index, right monomial key)
  /// with x = sum coeff * left * rel * right.
  struct Summand {
    RingElem coeff;
    HHKey left;
    int rel = 0;
    HHKey right;
  };
  std::vector<Summand> summands;
};

struct IdealMemberResult {
  bool member = false;
  int bound_used = 0;
  std::optional<MemberCertificate> certificate;
};

/// Decide by exact linear algebra whether x lies in the span of
/// {monomial * r * monomial} of normal-form degree <= degree_bound.
/// Member is definitive; a negative is only "not found up to the bound";
/// the bound escalates degree_bound, +1, +2 per the escalation schedule.
IdealMemberResult ideal_member(const HHElement& x, const RelationSet& rels, int degree_bound,
                               int escalation_steps = 2);

// --- Hecke embedding --------------------------------------------------------
/// T_i = s_i + (1 - q_i) D_i.
HHElement hecke_T(const CoxPtr& sys, int i, const RingElem& qi);
/// Product of hecke_T along a word; qs[i] is the parameter of generator i
/// (must agree when m_ij is odd).
HHElement hecke_Tw(const CoxPtr& sys, const std::vector<int>& word,
                   const std::vector<RingElem>& qs);

struct TriangularityResult {
  bool pass = false;
  std::string witness;  ///< offending term, empty on pass
};
/// Check T_w = w + (span of D(W) * w' with w' strictly below w in Bruhat
/// order): leading coefficient 1 on (empty word, w), nothing else at w.
TriangularityResult tw_triangularity(const CoxPtr& sys, int w, const std::vector<RingElem>& qs);

// --- Random elements (seeded, reproducible) ---------------------------------
/// Uniform degree <= 3 square-free D-word, uniform group element, integer
/// coefficients in {-2..2}; `terms` summands.
HHElement random_element(const CoxPtr& sys, const RingPtr& ring, std::mt19937_64& rng,
                         int max_degree = 3, int terms = 3);

}  // namespace hh
