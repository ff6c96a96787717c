#!/usr/bin/env python3
"""Independent oracle for the frozen example values in the C++ test suite.

Everything here is computed from first principles with sympy / fractions /
itertools, sharing no code with the C++ library.  Run it and paste the
printed blocks into the tests; each test cites the producing section.
"""

from fractions import Fraction
from itertools import permutations, product

import sympy


def gaussian_binomials():
    """[n k]_q by the Pascal recurrence [n k] = [n-1 k-1] + q^k [n-1 k]."""
    q = sympy.symbols("q")
    table = {(0, 0): sympy.Integer(1)}
    for n in range(1, 7):
        for k in range(n + 1):
            a = table.get((n - 1, k - 1), 0)
            b = table.get((n - 1, k), 0)
            table[(n, k)] = sympy.expand(a + q**k * b)
    print("== gaussian binomials (Pascal recurrence) ==")
    for (n, k) in [(2, 1), (4, 2), (5, 2), (6, 3)]:
        print(f"[{n} {k}]_q = {sympy.Poly(table[(n, k)], q).all_coeffs()[::-1]}"
              "  # ascending powers of q")


def cyclotomics():
    print("== cyclotomic polynomials (ascending coefficients) ==")
    x = sympy.symbols("x")
    for n in [1, 2, 3, 4, 5, 6, 12]:
        coeffs = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
        print(f"Phi_{n}: {coeffs}")


def demazure_examples():
    """Type-A divided-difference operators on Z[x1..x3]."""
    x1, x2, x3 = sympy.symbols("x1 x2 x3")
    xs = [x1, x2, x3]

    def s(i, p):  # swap x_i, x_{i+1} (1-based)
        return p.subs({xs[i - 1]: xs[i], xs[i]: xs[i - 1]}, simultaneous=True)

    def D(i, p):
        return sympy.cancel((p - s(i, p)) / (1 - xs[i - 1] / xs[i]))

    print("== Demazure polynomial examples ==")
    for label, val in [
        ("D1(x1)", D(1, x1)),
        ("D1(x2)", D(1, x2)),
        ("D1(x1^2)", D(1, x1**2)),
        ("D1(x1*x2)", D(1, x1 * x2)),
        ("D1(x1^2*x2)", D(1, x1**2 * x2)),
        ("D2(x2^2)", D(2, x2**2)),
        ("D1(D2(x1*x2^2))", D(1, D(2, x1 * x2**2))),
        ("D1(D1(x1^3)) - D1(x1^3)", sympy.expand(D(1, D(1, x1**3)) - D(1, x1**3))),
    ]:
        print(f"{label} = {sympy.expand(val)}")
    # braid check on a witness polynomial
    p = x1**2 * x2
    lhs = D(1, D(2, D(1, p)))
    rhs = D(2, D(1, D(2, p)))
    print(f"D1 D2 D1 == D2 D1 D2 on x1^2*x2: {sympy.simplify(lhs - rhs) == 0}")


def laurent_demazure_examples():
    """Rank-2 Laurent carrier: s_i(t_j) = t_i^(-a_ij) t_j, D_i = (1-s_i)/(1-t_i)."""
    t1, t2 = sympy.symbols("t1 t2")

    def make(cartan):
        def s(i, p):
            sub = {t1: t1 ** (-cartan[i - 1][0]) * t1 ** 0, t2: t2}
            images = []
            for j, tj in enumerate([t1, t2]):
                images.append(tj * [t1, t2][i - 1] ** (-cartan[i - 1][j]))
            return p.subs({t1: images[0], t2: images[1]}, simultaneous=True)

        def D(i, p):
            return sympy.cancel((p - s(i, p)) / (1 - [t1, t2][i - 1]))

        return s, D

    print("== Laurent Demazure examples (B2 Cartan [[2,-1],[-2,2]]) ==")
    s, D = make([[2, -1], [-2, 2]])
    for label, val in [
        ("s1(t1)", s(1, t1)),
        ("s1(t2)", s(1, t2)),
        ("s2(t1)", s(2, t1)),
        ("D1(t1)", D(1, t1)),
        ("D1(t2)", D(1, t2)),
        ("D2(t1*t2)", D(2, t1 * t2)),
        ("D1(D1(t1*t2)) - D1(t1*t2)", sympy.expand(D(1, D(1, t1 * t2)) - D(1, t1 * t2))),
    ]:
        print(f"{label} = {sympy.expand(val)}")


def dihedral_data():
    """I2(m) generated by two mirror permutations of the 2m-gon vertices:
    closure gives the order; elements of order 2 that are conjugates of a
    generator give the reflection count."""
    print("== dihedral group data ==")
    for m in range(2, 8):
        nv = 2 * m

        def mirror(axis):  # reflection v -> axis - v (mod nv)
            return tuple((axis - v) % nv for v in range(nv))

        def compose(p, q):
            return tuple(p[q[v]] for v in range(nv))

        # adjacent axes of the m-gon drawn on 2m half-vertices: their product
        # is the rotation by one m-gon step
        s0, s1 = mirror(0), mirror(2)
        group = {tuple(range(nv))}
        frontier = [tuple(range(nv))]
        while frontier:
            g = frontier.pop()
            for s in (s0, s1):
                h = compose(g, s)
                if h not in group:
                    group.add(h)
                    frontier.append(h)
        refl = {compose(compose(g, s), tuple(g.index(v) for v in range(nv)))
                for g in group for s in (s0, s1)}
        print(f"I2({m}): order {len(group)}, reflections {len(refl)}")


def s3_reflection_algebra_dims():
    """Graded dims of the quadratic algebra on the 3 transpositions of S3.

    Generators: the transpositions t12, t23, t13.  Relations: squares, and
    for each ordered pair of distinct transpositions s, s' the mixed relation
    d_s d_s' = d_(s s' s) d_s + d_s' d_(s s' s)  (their product has order 3).
    Row-reduction over Fraction, fully independent of the C++ elimination.
    """
    def compose(p, q):  # p after q
        return tuple(p[q[i]] for i in range(len(p)))

    def inversions(p):
        return sum(1 for i in range(len(p)) for j in range(i + 1, len(p))
                   if p[i] > p[j])

    simple = [(1, 0, 2), (0, 2, 1)]  # s1, s2 in S3
    transpositions = {(1, 0, 2): 0, (0, 2, 1): 1, (2, 1, 0): 2}  # t12, t23, t13

    # Compatible ordered pairs: (w s_i w^-1, w s_j w^-1) with i != j and both
    # right multiplications increasing the length.
    pairs = set()
    for w in permutations(range(3)):
        for i, si in enumerate(simple):
            for j, sj in enumerate(simple):
                if i == j:
                    continue
                if inversions(compose(w, si)) <= inversions(w):
                    continue
                if inversions(compose(w, sj)) <= inversions(w):
                    continue
                winv = tuple(w.index(v) for v in range(3))
                s = transpositions[compose(compose(w, si), winv)]
                sp = transpositions[compose(compose(w, sj), winv)]
                pairs.add((s, sp))

    perms = {v: k for k, v in transpositions.items()}
    relations = [{(g, g): Fraction(1)} for g in range(3)]
    for s, sp in sorted(pairs):
        mid = transpositions[compose(compose(perms[s], perms[sp]), perms[s])]
        relations.append({(s, sp): Fraction(1), (mid, s): Fraction(-1),
                          (sp, mid): Fraction(-1)})
    print(f"compatible ordered pairs in S3: {sorted(pairs)}")

    def dims(relations, ngens, maxdeg):
        out = [1, ngens]
        for d in range(2, maxdeg + 1):
            rows = []
            for lu in range(d - 1):
                for u in product(range(ngens), repeat=lu):
                    for rel in relations:
                        for v in product(range(ngens), repeat=d - 2 - lu):
                            row = {}
                            for w, c in rel.items():
                                row[u + w + v] = row.get(u + w + v, Fraction(0)) + c
                            rows.append(row)
            # incremental elimination
            pivots = {}
            rank = 0
            for row in rows:
                row = dict(row)
                while row:
                    lead = max(row)
                    if lead not in pivots:
                        c = row[lead]
                        pivots[lead] = {k: v / c for k, v in row.items()}
                        rank += 1
                        break
                    piv = pivots[lead]
                    c = row[lead]
                    for k, v in piv.items():
                        row[k] = row.get(k, Fraction(0)) - c * v
                    row = {k: v for k, v in row.items() if v != 0}
            out.append(ngens**d - rank)
        return out

    print("== graded dimensions, quadratic algebra on S3 transpositions ==")
    print(f"dims 0..5: {dims(relations, 3, 5)}")

    # A1 x A1: two commuting reflections, relations d^2 = 0 and commutation.
    rel2 = [{(0, 0): Fraction(1)}, {(1, 1): Fraction(1)},
            {(0, 1): Fraction(1), (1, 0): Fraction(-1)}]
    print(f"A1xA1 dims 0..3: {dims(rel2, 2, 3)}")


def coxeter_group_data():
    """Orders and reflection counts via permutation models."""
    print("== Coxeter group data ==")
    for n in [2, 3, 4]:
        elems = list(permutations(range(n + 1)))
        refl = sum(1 for p in elems
                   if sorted([i for i in range(n + 1) if p[i] != i]) and
                   sum(1 for i in range(n + 1) if p[i] != i) == 2)
        print(f"A{n} (S{n + 1}): order {len(elems)}, reflections {refl}")


def hecke_quadratic_example():
    """T = s + (1-q) D as an exact 2x2 operator matrix: take the rank-1
    Demazure pair on span{1, x} (s the coefficient swap fixing degree-0 in a
    two-point model: s acts on functions on {x1, x2} by swapping the points,
    D = (1 - s)/(1 - x1/x2) restricted to the invariant 2-dim slice) and
    verify T^2 = (1-q) T + q there."""
    q, x1, x2 = sympy.symbols("q x1 x2")
    basis = [sympy.Integer(1), x1]

    def s(p):
        return p.subs({x1: x2, x2: x1}, simultaneous=True)

    def D(p):
        return sympy.cancel((p - s(p)) / (1 - x1 / x2))

    def T(p):
        # s followed by the (1-q) D correction, then rewrite x2 = -x1 + (x1+x2)
        return sympy.expand(s(p) + (1 - q) * D(p))

    # matrix of T on span{1, x1} with x2 eliminated via the symmetric slice
    # x1 + x2 = e1 treated as a scalar: substitute x2 = e1 - x1.
    e1 = sympy.symbols("e1")
    def coords(p):
        p = sympy.expand(p.subs(x2, e1 - x1))
        c1 = p.coeff(x1, 0)
        cx = p.coeff(x1, 1)
        return [c1, cx]

    mat = sympy.Matrix([coords(T(b)) for b in basis]).T
    lhs = sympy.expand(mat * mat)
    rhs = sympy.expand((1 - q) * mat + q * sympy.eye(2))
    print("== Hecke quadratic on the 2-dim Demazure slice ==")
    print(f"T matrix (basis 1, x1; x2 = e1 - x1): {mat.tolist()}")
    print(f"T^2 == (1-q) T + q: {sympy.simplify(lhs - rhs) == sympy.zeros(2, 2)}")


if __name__ == "__main__":
    gaussian_binomials()
    cyclotomics()
    demazure_examples()
    laurent_demazure_examples()
    dihedral_data()
    s3_reflection_algebra_dims()
    coxeter_group_data()
    hecke_quadratic_example()
