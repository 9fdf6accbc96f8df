"""The r-invariant, the isomorphism test, and the Arf cross-check.

Two regular pairs with the same half-discriminant are isomorphic exactly
when their r-invariants agree modulo k + wp(A); the test here not only
decides but produces a certified matrix witness, assembled from the two
Kronecker bases and a unipotent phi(s) with wp(s) matching the r-shift.

The pair also induces a quadratic form q_A = q0 + t*q1 on the free module
A^n; it splits off a one-dimensional trivial summand spanned by the image
of the radical map, and the Arf invariant of the nondegenerate remainder
reproduces the r-invariant modulo wp(A) + k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import EtaleAlgebra
from .autos import pair_algebra, phi_model_matrix
from .errors import PreconditionError
from .linalg import inverse, mat_mul
from .normalform import NormalForm, extract_normal_form
from .pencil import Pencil


@dataclass(frozen=True)
class RInvariant:
    algebra: EtaleAlgebra
    coeffs: tuple  # r_0 .. r_{n-2}
    value: tuple  # sum r_i d_i as an algebra element


def r_invariant(nf: NormalForm, algebra: EtaleAlgebra | None = None) -> RInvariant:
    """The element sum r_i d_i of A = k[T]/(Delta(1,T)); needs a_n != 0."""
    if nf.a[nf.n] == 0:
        raise PreconditionError(
            "a_n = 0: apply ensure_an_nonzero to the pencil first"
        )
    if algebra is None:
        algebra = EtaleAlgebra(nf.basis.gf, tuple(nf.a))
    value = algebra.from_d_coords(list(nf.r) + [0])
    return RInvariant(algebra, tuple(nf.r), value)


def is_isomorphic(p1: Pencil, p2: Pencil) -> tuple[bool, list | None]:
    """Decide isomorphism of two regular pairs and produce a witness.

    Returns (False, None) immediately when the half-discriminants differ
    (isomorphic pairs share Delta).  Otherwise the answer is positive iff
    the r-invariants agree modulo k + wp(A); the witness g then satisfies
    q2_i(g v) = q1_i(v) for both i, verified by substitution.
    """
    p1.require_regular()
    p2.require_regular()
    if p1.gf != p2.gf or p1.n != p2.n:
        return False, None
    if p1.half_discriminant() != p2.half_discriminant():
        return False, None
    if p1.half_discriminant()[p1.n] == 0:
        moved1, m2 = p1.ensure_an_nonzero()
        moved2 = p2.change_basis_gl2(m2)
        return _iso_with_an(moved1, moved2, p1, p2)
    return _iso_with_an(p1, p2, p1, p2)


def _iso_with_an(w1: Pencil, w2: Pencil, orig1: Pencil, orig2: Pencil):
    gf = w1.gf
    algebra, nf1 = pair_algebra(w1)
    nf2 = extract_normal_form(w2)
    diff = [x ^ y for x, y in zip(nf1.r, nf2.r)]
    s = algebra.solve_artin_schreier(algebra.from_d_coords(diff + [0]))
    if s is None:
        return False, None
    scoords = list(algebra.d_coords(s))[: algebra.n - 1]
    ms = phi_model_matrix(w1.m, scoords)
    witness = mat_mul(
        gf, mat_mul(gf, nf2.basis.matrix(), ms), inverse(gf, nf1.basis.matrix())
    )
    if (
        orig2.q0.transform(witness) != orig1.q0
        or orig2.q1.transform(witness) != orig1.q1
    ):
        raise AssertionError("isomorphism witness failed verification")
    return True, witness


def transformation_law_check(p: Pencil, s: tuple) -> bool:
    """Conjugating by phi(s) shifts the extracted r by wp(s) modulo the
    constants, with exact coefficient equality in positions 0..n-2."""
    work, _ = p.ensure_an_nonzero()
    algebra, nf = pair_algebra(work)
    scoords = list(algebra.d_coords(algebra.element(s)))[: algebra.n - 1]
    ms = phi_model_matrix(work.m, scoords)
    gf = work.gf
    b = nf.basis.matrix()
    g = mat_mul(gf, mat_mul(gf, b, ms), inverse(gf, b))
    conj = Pencil(work.q0.transform(g), work.q1.transform(g))
    nf2 = extract_normal_form(conj)
    if nf2.a != nf.a:
        return False
    wp = algebra.artin_schreier(algebra.element(s))
    expected = algebra.d_coords(wp)[: algebra.n - 1]
    got = [x ^ y for x, y in zip(nf2.r, nf.r)]
    return list(expected) == got


@dataclass(frozen=True)
class ArfData:
    qa_w: tuple  # q_A(w'_{i+1}) for i = 0..m-1 (each equals d_{2i+1})
    qa_v: tuple  # q_A(v'_i) = r_{2i} t + r_{2i+1}
    arf: tuple  # sum q_A(w'_{i+1}) q_A(v'_i) in A
    arf_class: tuple  # canonical representative modulo wp(A) + k
    matches_r: bool


def arf_invariant(nf: NormalForm, algebra: EtaleAlgebra | None = None) -> ArfData:
    """Arf invariant of q_A = q0 + t q1 on A^n, checked against r.

    In the primed basis w'_i = sum_{k>=i} w_k t^(k-i), v'_i = v_i, the form
    q_A splits as <w'_0> (trivial) plus hyperbolic-like planes
    <w'_{i+1}, v'_i>; the pairings b_A(v'_i, w'_j) = delta_{(i+1)j} and
    q_A(w'_0) = 0 are verified on the nose.
    """
    if nf.a[nf.n] == 0:
        raise PreconditionError("a_n = 0: apply ensure_an_nonzero first")
    if algebra is None:
        algebra = EtaleAlgebra(nf.basis.gf, tuple(nf.a))
    A = algebra
    n, m = nf.n, nf.m
    model = nf.realized()
    t0 = model.q0.table()
    t1 = model.q1.table()

    def qa(vec):
        acc = A.zero()
        t = A.t_power(1)
        for (i, j), c in t0.items():
            acc = A.add(acc, _scal(A, c, A.mul(vec[i], vec[j])))
        for (i, j), c in t1.items():
            acc = A.add(acc, A.mul(t, _scal(A, c, A.mul(vec[i], vec[j]))))
        return acc

    def ba(vec1, vec2):
        s = qa([A.add(x, y) for x, y in zip(vec1, vec2)])
        return A.add(s, A.add(qa(vec1), qa(vec2)))

    wprime = []
    for i in range(m + 1):
        vec = [A.zero()] * n
        for k in range(i, m + 1):
            vec[k] = A.t_power(k - i)
        wprime.append(vec)
    vprime = []
    for i in range(m):
        vec = [A.zero()] * n
        vec[m + 1 + i] = A.one()
        vprime.append(vec)

    if qa(wprime[0]) != A.zero():
        raise AssertionError("q_A(w'_0) must vanish (it is f(t))")
    for i in range(m):
        for j in range(m + 1):
            want = A.one() if j == i + 1 else A.zero()
            if ba(vprime[i], wprime[j]) != want:
                raise AssertionError("b_A pairing violates delta_{(i+1)j}")

    qa_w = [qa(wprime[i + 1]) for i in range(m)]
    qa_v = [qa(vprime[i]) for i in range(m)]
    for i in range(m):
        if qa_w[i] != A.d_basis[2 * i + 1]:
            raise AssertionError("q_A(w'_{i+1}) differs from d_{2i+1}")
        expect = A.add(
            _scal(A, nf.r[2 * i], A.t_power(1)), A.constant(nf.r[2 * i + 1])
        )
        if qa_v[i] != expect:
            raise AssertionError("q_A(v'_i) differs from r_{2i} t + r_{2i+1}")

    arf = A.zero()
    for x, y in zip(qa_w, qa_v):
        arf = A.add(arf, A.mul(x, y))
    rval = A.from_d_coords(list(nf.r) + [0])
    _, matches = A.coset_reduce(A.add(arf, rval))
    rep, _ = A.coset_reduce(arf)
    return ArfData(
        tuple(qa_w), tuple(qa_v), arf, rep, matches
    )


def _scal(A: EtaleAlgebra, c: int, x: tuple) -> tuple:
    return tuple(A.gf.mul(c, v) for v in x)
