#pragma once

/**
 * Cyclic-group Hecke-Hopf algebras and generalized Taft algebras.
 *
 * H_f is presented by s^{deg f} = 1 and the coefficients of the functional
 * relation f(ts + D) = f(t) over R[t]; specializing f to
 *   f_n^{a,b} = x (x - b)(x - b(1+a)) ... (x - b(1 + a + ... + a^{n-2}))
 * and adding s D s^{-1} = a D + b (1 - s) gives H_n(a,b), which for a a
 * primitive n-th root of unity has the n^2 basis {D^i s^j : 0 <= i, j < n}
 * and one monic degree-n D-relation.  Coefficients live in (Z[a]/Phi_n)[b]
 * with b formal; everything is exact.
 */

#include "hh/freealg.hpp"
#include "hh/report.hpp"

namespace hh {

/// The Gaussian binomial as a polynomial in vars[var] of the given ring,
/// computed from the product formula by exact division.
RingElem qbinom(int n, int k, const RingPtr& ring, int var);

/// Coefficients c_0..c_n of f_n^{a,b} (x^k coefficient at index k), with
/// a = vars[avar], b = vars[bvar].
std::vector<RingElem> f_nab(int n, const RingPtr& ring, int avar, int bvar);

/// Expand f(ts + D) with t central in the free algebra on s (generator 0)
/// and D (generator 1): returns y_0..y_n with f(ts + D) = sum y_k t^k.
/// The defining relations of H_f are y_k = c_k for k < deg f, plus
/// s^{deg f} = 1.
std::vector<NCElement> functional_coeffs(const std::vector<RingElem>& f);

/// The identity f_n(t,x;p,q) = sum_k [n over k]_q f_k(0,x;p,q) f_{n-k}(t,0;p,q)
/// for f_n(t,x;p,q) = prod_{i<n} (t + q^i x + p(1 + q + ... + q^{i-1})),
/// verified exactly in Z[t,x,p,q].
VerificationReport generalized_binomial_check(int n);

/**
 * H_n(a,b) over (Z[a]/Phi_n)[b] in the normal form sum c_{ij} D^i s^j.
 * Rewriting uses s D s^{-1} = a D + b(1 - s) (hence s^j D s^{-j} =
 * a^j D + b(1 + a + ... + a^{j-1})(1 - s)) and the monic-ized degree-n
 * relation D(aD + b)(a^2 D + b(1+a)) ... = 0.
 */
class TaftAlgebra {
 public:
  /// Key (i, j) = the monomial D^i s^j, 0 <= i, j < n.
  using Elem = std::map<std::pair<int, int>, RingElem>;

  explicit TaftAlgebra(int n);

  int n() const { return n_; }
  const RingPtr& ring() const { return ring_; }
  RingElem a() const { return RingElem::variable(ring_, 0); }
  RingElem b() const { return RingElem::variable(ring_, 1); }

  Elem zero() const { return {}; }
  Elem unit() const { return monomial(0, 0, RingElem::constant(ring_, 1)); }
  Elem s() const { return monomial(0, 1, RingElem::constant(ring_, 1)); }
  Elem d() const { return monomial(1, 0, RingElem::constant(ring_, 1)); }
  Elem monomial(int i, int j, const RingElem& c) const;

  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem scaled(const Elem& x, const RingElem& c) const;
  Elem mul(const Elem& x, const Elem& y) const;
  bool is_zero(const Elem& x) const;
  bool equal(const Elem& x, const Elem& y) const;

  /// Evaluate a word / element of the free algebra on s (gen 0), D (gen 1).
  Elem eval_word(const NCWord& w) const;
  Elem eval(const NCElement& x) const;

  std::string to_string(const Elem& x) const;

 private:
  Elem left_mul_d(const Elem& x) const;            ///< D * x, with reduction
  Elem left_mul_s(const Elem& x, int j) const;     ///< s^j * x
  const Elem& conj_pow(int j, int i) const;        ///< (s^j D s^{-j})^i
  RingElem a_pow(int e) const;                     ///< a^e, e mod n
  RingElem bracket(int j) const;                   ///< 1 + a + ... + a^{j-1}

  int n_ = 0;
  RingPtr ring_;
  std::vector<RingElem> dred_;                     ///< D^n = sum dred_[i] D^i
  mutable std::map<std::pair<int, int>, Elem> conj_cache_;
};

inline TaftAlgebra::Elem taft_mul(const TaftAlgebra& alg, const TaftAlgebra::Elem& x,
                                  const TaftAlgebra::Elem& y) {
  return alg.mul(x, y);
}

}  // namespace hh
