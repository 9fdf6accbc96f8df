"""Kronecker bases and the (a; r) normal form of a regular pencil.

For a regular pair the associated alternating forms (b0, b1) admit a basis
(w_0..w_m, v_0..v_{m-1}) with

    b0(w_i, w_j) = b0(v_i, v_j) = 0,   b0(w_i, v_j) = delta_{i(j+1)},
    b1(w_i, w_j) = b1(v_i, v_j) = 0,   b1(w_i, v_j) = delta_{ij}.

The w-part is canonical: it consists of the coefficient vectors of the
radical map, so we never need the general minimal-indices machinery for
singular matrix pencils.  The v-part is produced by two deterministic
linear solves: an inhomogeneous solve for the pairing conditions, then a
correction inside span(w) that kills the v-v pairings (corrections by w
leave the w-v pairings untouched because span(w) is totally isotropic).

In such a basis the pair reads

    q0 = sum a_{2i} x_i^2 + sum x_{i+1} y_i + sum r_{2i+1} y_i^2,
    q1 = sum a_{2i+1} x_i^2 + sum x_i y_i + sum r_{2i} y_i^2,

with (a_0..a_n) equal to the half-discriminant coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotRegularError
from .field import Field
from .linalg import inverse, mat_mul, mat_vec, rank, solve, transpose
from .pencil import Pencil
from .quadform import QuadraticForm


@dataclass(frozen=True)
class KroneckerBasis:
    """Columns of basis_matrix are (w_0, ..., w_m, v_0, ..., v_{m-1})."""

    gf: Field
    n: int
    w: tuple
    v: tuple
    basis_matrix: tuple

    @property
    def m(self) -> int:
        return (self.n - 1) // 2

    def matrix(self) -> list:
        return [list(row) for row in self.basis_matrix]


@dataclass(frozen=True)
class NormalForm:
    """The tuple (a_0..a_n; r_0..r_{n-2}) plus the basis realizing it."""

    a: tuple
    r: tuple
    basis: KroneckerBasis

    @property
    def n(self) -> int:
        return len(self.a) - 1

    @property
    def m(self) -> int:
        return (self.n - 1) // 2

    def realized(self) -> Pencil:
        """The model pencil with exactly these coefficient tables."""
        return realize(self.basis.gf, list(self.a), list(self.r), check=False)


def canonical_w(p: Pencil) -> list:
    """The canonical basis of the radical subspace W."""
    p.require_regular()
    ws = p.radical_map()
    if rank(p.gf, ws) != p.m + 1:
        raise AssertionError("radical-map vectors are dependent on a regular pencil")
    return [w[:] for w in ws]


def complete_kronecker(p: Pencil, ws: list) -> KroneckerBasis:
    """Extend the canonical w-vectors to a full Kronecker basis."""
    gf, n, m = p.gf, p.n, p.m
    g0 = [list(r) for r in p.gram0().gram]
    g1 = [list(r) for r in p.gram1().gram]

    # b(w_i, x) = (G w_i) . x, so the condition rows are G w_i.
    rows0 = [mat_vec(gf, g0, w) for w in ws]
    rows1 = [mat_vec(gf, g1, w) for w in ws]

    v0 = []
    for j in range(m):
        rows = []
        rhs = []
        for i in range(m + 1):
            rows.append(rows1[i])
            rhs.append(1 if i == j else 0)
        for i in range(m + 1):
            rows.append(rows0[i])
            rhs.append(1 if i == j + 1 else 0)
        x = solve(gf, rows, rhs)
        if x is None:
            raise NotRegularError("pencil not regular: Kronecker pairing system "
                                  "is inconsistent")
        v0.append(x)

    # Correct v_j by elements of span(w) to kill the v-v pairings:
    # unknowns l[j][k], equations l_ij + l_ji = b1(v_i, v_j) and
    # l_{j(i+1)} + l_{i(j+1)} = b0(v_i, v_j) for i < j.
    if m > 1:
        nvars = m * (m + 1)

        def var(j, k):
            return j * (m + 1) + k

        rows = []
        rhs = []
        for i in range(m):
            for j in range(i + 1, m):
                row = [0] * nvars
                row[var(i, j)] ^= 1
                row[var(j, i)] ^= 1
                rows.append(row)
                rhs.append(_bilinear(gf, g1, v0[i], v0[j]))
                row = [0] * nvars
                row[var(j, i + 1)] ^= 1
                row[var(i, j + 1)] ^= 1
                rows.append(row)
                rhs.append(_bilinear(gf, g0, v0[i], v0[j]))
        sol = solve(gf, rows, rhs)
        if sol is None:
            raise NotRegularError("pencil not regular: no totally isotropic "
                                  "complement exists")
        for j in range(m):
            for k in range(m + 1):
                c = sol[var(j, k)]
                if c:
                    for t in range(n):
                        v0[j][t] ^= gf.mul(c, ws[k][t])

    basis_cols = [list(w) for w in ws] + [list(v) for v in v0]
    bmat = transpose(basis_cols)
    _verify_kronecker(gf, g0, g1, ws, v0)
    return KroneckerBasis(
        gf,
        n,
        tuple(tuple(w) for w in ws),
        tuple(tuple(v) for v in v0),
        tuple(tuple(row) for row in bmat),
    )


def _bilinear(gf: Field, gram: list, v: list, w: list) -> int:
    acc = 0
    gv = mat_vec(gf, gram, w)
    for x, y in zip(v, gv):
        if x and y:
            acc ^= gf.mul(x, y)
    return acc


def _verify_kronecker(gf, g0, g1, ws, vs):
    m = len(vs)
    for i in range(m + 1):
        for j in range(m + 1):
            if _bilinear(gf, g0, ws[i], ws[j]) or _bilinear(gf, g1, ws[i], ws[j]):
                raise AssertionError("w-vectors are not totally isotropic")
    for i in range(m):
        for j in range(m):
            if _bilinear(gf, g0, vs[i], vs[j]) or _bilinear(gf, g1, vs[i], vs[j]):
                raise AssertionError("v-vectors are not totally isotropic")
    for i in range(m + 1):
        for j in range(m):
            want0 = 1 if i == j + 1 else 0
            want1 = 1 if i == j else 0
            if _bilinear(gf, g0, ws[i], vs[j]) != want0:
                raise AssertionError("b0 pairing violates the Kronecker equations")
            if _bilinear(gf, g1, ws[i], vs[j]) != want1:
                raise AssertionError("b1 pairing violates the Kronecker equations")


def extract_normal_form(p: Pencil) -> NormalForm:
    """Normal-form data (a, r, basis) of a regular pencil.

    a_{2i} = q0(w_i), a_{2i+1} = q1(w_i), r_{2i+1} = q0(v_i), r_{2i} = q1(v_i);
    the extracted a always equals the half-discriminant coefficients.
    """
    ws = canonical_w(p)
    kb = complete_kronecker(p, ws)
    n, m = p.n, p.m
    a = [0] * (n + 1)
    r = [0] * (n - 1)
    for i in range(m + 1):
        a[2 * i] = p.q0(ws[i])
        a[2 * i + 1] = p.q1(ws[i])
    for i in range(m):
        r[2 * i + 1] = p.q0(list(kb.v[i]))
        r[2 * i] = p.q1(list(kb.v[i]))
    if a != p.half_discriminant():
        raise AssertionError("extracted coefficients disagree with the "
                             "half-discriminant")
    nf = NormalForm(tuple(a), tuple(r), kb)
    _verify_roundtrip(p, nf)
    return nf


def _verify_roundtrip(p: Pencil, nf: NormalForm):
    model = nf.realized()
    b = nf.basis.matrix()
    if p.q0.transform(b) != model.q0 or p.q1.transform(b) != model.q1:
        raise AssertionError("normal form does not reproduce the pencil")


def realize(gf: Field, a: list, r: list, check: bool = True) -> Pencil:
    """The pencil with the exact normal-form tables for data (a, r)."""
    n = len(a) - 1
    if n % 2 != 1 or n < 3:
        raise ValueError(f"need n odd and >= 3, got n={n}")
    if len(r) != n - 1:
        raise ValueError(f"need {n - 1} r-coefficients, got {len(r)}")
    m = (n - 1) // 2
    t0 = {}
    t1 = {}
    for i in range(m + 1):
        t0[(i, i)] = a[2 * i]
        t1[(i, i)] = a[2 * i + 1]
    for i in range(m):
        y = m + 1 + i
        t0[(i + 1, y)] = 1  # x_{i+1} y_i
        t1[(i, y)] = 1  # x_i y_i
        t0[(y, y)] = r[2 * i + 1]
        t1[(y, y)] = r[2 * i]
    p = Pencil(
        QuadraticForm.from_table(gf, n, t0), QuadraticForm.from_table(gf, n, t1)
    )
    if check and not p.is_regular():
        raise NotRegularError("normal-form data has an inseparable "
                              "half-discriminant")
    return p


def change_of_basis_to(nf: NormalForm) -> list:
    """Matrix sending model coordinates to the original pencil coordinates."""
    return nf.basis.matrix()


def model_to_pencil(nf: NormalForm, g_model: list) -> list:
    """Conjugate a matrix given in normal-form coordinates back to the
    original coordinates of the pencil."""
    b = nf.basis.matrix()
    return mat_mul(nf.basis.gf, mat_mul(nf.basis.gf, b, g_model), inverse(nf.basis.gf, b))
