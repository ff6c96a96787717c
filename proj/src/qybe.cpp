#include "hh/qybe.hpp"

namespace hh {

namespace {

std::string diff_witness(const ExactMatrix& a, const ExactMatrix& b) {
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (a.at(r, c) != b.at(r, c))
        return "entry (" + std::to_string(r) + "," + std::to_string(c) + "): " +
               a.at(r, c).to_string() + " vs " + b.at(r, c).to_string();
  return "";
}

}  // namespace

VerificationReport check_quadratic_braiding(const BraidingCandidate& c, const RingElem& q) {
  const RingPtr& ring = c.psi.ring();
  if (!ring->same(*q.ring())) throw RingMismatch();
  const std::string inst = "dim " + std::to_string(c.dim);
  VerificationReport rep;

  const ExactMatrix id = ExactMatrix::identity(c.dim, ring);
  const ExactMatrix p1 = c.psi.kron(id);
  const ExactMatrix p2 = id.kron(c.psi);
  const ExactMatrix lhs = p1 * p2 * p1, rhs = p2 * p1 * p2;
  rep.add("braid equation", inst, lhs == rhs, diff_witness(lhs, rhs));

  const RingElem one = RingElem::constant(ring, 1);
  const ExactMatrix sq = c.psi * c.psi;
  const ExactMatrix quad =
      c.psi.scaled(one - q) + ExactMatrix::identity(c.dim * c.dim, ring).scaled(q);
  rep.add("quadratic relation", inst, sq == quad, diff_witness(sq, quad));
  return rep;
}

VerificationReport check_hs3_structure(const HS3Structure& h) {
  const RingPtr& ring = h.s_mat.ring();
  const std::string inst = "dim U = " + std::to_string(h.dim);
  VerificationReport rep;

  const int n2 = h.dim * h.dim;
  const ExactMatrix id2 = ExactMatrix::identity(n2, ring);
  const auto check = [&](const std::string& name, const ExactMatrix& a, const ExactMatrix& b) {
    rep.add(name, inst, a == b, diff_witness(a, b));
  };
  check("s^2 = 1", h.s_mat * h.s_mat, id2);
  check("d^2 = d", h.d_mat * h.d_mat, h.d_mat);
  check("s d + d s = s - 1", h.s_mat * h.d_mat + h.d_mat * h.s_mat, h.s_mat - id2);

  const ExactMatrix idu = ExactMatrix::identity(h.dim, ring);
  const ExactMatrix s1 = h.s_mat.kron(idu), s2 = idu.kron(h.s_mat);
  const ExactMatrix d1 = h.d_mat.kron(idu), d2 = idu.kron(h.d_mat);
  check("braid for s", s1 * s2 * s1, s2 * s1 * s2);
  check("linear braid d1 s2 s1 = s2 s1 d2", d1 * s2 * s1, s2 * s1 * d2);
  check("linear braid d2 s1 s2 = s1 s2 d1", d2 * s1 * s2, s1 * s2 * d1);
  check("cubic d2 s1 d2 = s1 d2 d1 + d1 d2 s1 + s1 d2 s1", d2 * s1 * d2,
        s1 * d2 * d1 + d1 * d2 * s1 + s1 * d2 * s1);
  check("cubic d1 s2 d1 = s2 d1 d2 + d2 d1 s2 + s2 d1 s2", d1 * s2 * d1,
        s2 * d1 * d2 + d2 * d1 * s2 + s2 * d1 * s2);
  return rep;
}

HS3Structure demazure_hs3(int k, const RingPtr& ring) {
  if (k < 0) throw OutOfRange("demazure_hs3 needs k >= 0");
  const auto act = ModuleAction::polynomial(build_system(coxeter_matrix_a(1)));
  const int du = k + 1, n2 = du * du;
  HS3Structure h{du, ExactMatrix(n2, n2, ring), ExactMatrix(n2, n2, ring)};
  const auto index = [&](int a, int b) { return a * du + b; };
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= k; ++b) {
      const int col = index(a, b);
      h.s_mat.set(index(b, a), col, RingElem::constant(ring, 1));
      const RingElem img = act.apply_d(0, act.monomial({a, b}));
      for (const auto& [e, c] : img.terms()) {
        if (e[0] < 0 || e[0] > k || e[1] < 0 || e[1] > k)
          throw WindowNotInvariant("Demazure image left the (k+1)^2 box");
        h.d_mat.set(index(e[0], e[1]), col, RingElem::constant(ring, c));
      }
    }
  return h;
}

BraidingCandidate psi_u(const HS3Structure& h, const BraidingCandidate& c, const RingElem& q) {
  const RingPtr& ring = c.psi.ring();
  if (!ring->same(*h.s_mat.ring()) || !ring->same(*q.ring())) throw RingMismatch();
  const int du = h.dim, dv = c.dim, dim = du * dv;

  const RingElem one = RingElem::constant(ring, 1);
  const ExactMatrix mid = h.s_mat.kron(c.psi) +
                          h.d_mat.kron(ExactMatrix::identity(dv * dv, ring)).scaled(one - q);

  // tau_23 reads a (U (x) V)^(x)2 index as (i1, j1, i2, j2) and regroups it
  // as the (U (x) U (x) V (x) V) index (i1, i2, j1, j2); conjugating `mid`
  // by it is a relabeling of rows and columns.
  std::vector<int> tau(dim * dim);
  for (int i1 = 0; i1 < du; ++i1)
    for (int j1 = 0; j1 < dv; ++j1)
      for (int i2 = 0; i2 < du; ++i2)
        for (int j2 = 0; j2 < dv; ++j2)
          tau[((i1 * dv + j1) * du + i2) * dv + j2] = ((i1 * du + i2) * dv + j1) * dv + j2;

  BraidingCandidate out{dim, ExactMatrix(dim * dim, dim * dim, ring)};
  for (int r = 0; r < dim * dim; ++r)
    for (int col = 0; col < dim * dim; ++col) out.psi.set(r, col, mid.at(tau[r], tau[col]));
  return out;
}

BraidingCandidate swap_braiding(int dim, const RingPtr& ring) {
  BraidingCandidate c{dim, ExactMatrix(dim * dim, dim * dim, ring)};
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      c.psi.set(j * dim + i, i * dim + j, RingElem::constant(ring, 1));
  return c;
}

BraidingCandidate hecke_braiding_dim2(const RingPtr& ring, const RingElem& q) {
  const HS3Structure h = demazure_hs3(1, ring);
  const RingElem one = RingElem::constant(ring, 1);
  return {2, h.s_mat + h.d_mat.scaled(one - q)};
}

}  // namespace hh
