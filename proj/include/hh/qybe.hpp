#pragma once

/**
 * Quadratic braidings and the tensor-lift construction that turns a
 * braiding Psi on V (x) V plus a swap/Demazure pair (s, D) on U (x) U into
 * a braiding Psi_U on (U (x) V) (x) (U (x) V):
 *
 *   Psi_U = tau_23^{-1} o (s (x) Psi + (1 - q) D (x) Id) o tau_23.
 *
 * All matrices are exact; the (s, D) pairs come from the Demazure action
 * on a finite slice of Z[x] (demazure_hs3), and the checks certify the
 * braid equation and the quadratic relation Psi^2 = (1 - q) Psi + q.
 */

#include "hh/demazure.hpp"
#include "hh/report.hpp"

namespace hh {

/// A candidate braiding: a dim^2 x dim^2 exact matrix on V (x) V.
struct BraidingCandidate {
  int dim = 0;
  ExactMatrix psi;
};

/// A swap/Demazure operator pair on U (x) U (dim = dim U).
struct HS3Structure {
  int dim = 0;
  ExactMatrix s_mat;
  ExactMatrix d_mat;
};

/// Braid equation on V^(x)3 plus Psi^2 = (1-q) Psi + q Id.
VerificationReport check_quadratic_braiding(const BraidingCandidate& c, const RingElem& q);

/// Rank-1 identities of (s, d) on U (x) U, and on U^(x)3 the braid
/// equation for s, both linear braid identities, and the cubic relation
/// d2 s1 d2 = s1 d2 d1 + d1 d2 s1 + s1 d2 s1 (and its mirror).
VerificationReport check_hs3_structure(const HS3Structure& h);

/// The Demazure pair on U = span{1, x, ..., x^k}: U (x) U realized as
/// monomials x1^a x2^b with 0 <= a, b <= k (index a*(k+1)+b), s the
/// variable swap and d the Demazure operator (the box is invariant; an
/// escape would raise WindowNotInvariant).
HS3Structure demazure_hs3(int k, const RingPtr& ring);

/// The lifted braiding Psi_U (see header comment); all inputs must share
/// one coefficient ring.
BraidingCandidate psi_u(const HS3Structure& h, const BraidingCandidate& c, const RingElem& q);

/// The flip v (x) w -> w (x) v (a braiding at q = 1).
BraidingCandidate swap_braiding(int dim, const RingPtr& ring);
/// The dim-2 Hecke braiding s + (1 - q) d built from demazure_hs3(1);
/// satisfies the quadratic relation with parameter q by construction and
/// is validated, never assumed, by check_quadratic_braiding.
BraidingCandidate hecke_braiding_dim2(const RingPtr& ring, const RingElem& q);

}  // namespace hh
