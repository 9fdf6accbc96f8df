"""Quadratic and alternating bilinear forms in characteristic 2.

A quadratic form is an upper-triangular coefficient table q = sum a_ij x_i x_j
(0-based, i <= j); its polar form b(v, w) = q(v+w) + q(v) + q(w) is alternating
because the characteristic is 2.  On odd-dimensional spaces the vector of
principal Pfaffians spans the radical of a corank-1 alternating form, and
q evaluated there is the half-discriminant, the degree-n substitute for the
vanishing determinant.

The volume form is fixed once and for all as e_1 ^ ... ^ e_n -> 1 in the
standard basis, so Pfaffian vectors and half-discriminants are exact values,
not classes modulo squares.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .field import Field
from .linalg import nullspace, rank


@dataclass(frozen=True)
class QuadraticForm:
    """q = sum over i <= j of coeffs[(i,j)] x_i x_j, stored sparsely."""

    gf: Field
    n: int
    coeffs: tuple  # sorted ((i, j), c) with i <= j and c != 0

    @staticmethod
    def from_table(gf: Field, n: int, table) -> "QuadraticForm":
        merged: dict = {}
        items = table.items() if isinstance(table, dict) else table
        for key, c in items:
            i, j = key
            if not (0 <= i <= j < n):
                raise ValueError(f"coefficient index {(i, j)} out of range for n={n}")
            if not (0 <= c < gf.order):
                raise ValueError(f"{c} is not an element of {gf!r}")
            if c:
                k = (i, j)
                merged[k] = merged.get(k, 0) ^ c
        cleaned = tuple(sorted((k, c) for k, c in merged.items() if c))
        return QuadraticForm(gf, n, cleaned)

    def table(self) -> dict:
        return {k: c for k, c in self.coeffs}

    def __call__(self, v: list) -> int:
        mul = self.gf.mul
        acc = 0
        for (i, j), c in self.coeffs:
            p = mul(v[i], v[j])
            if p:
                acc ^= mul(c, p)
        return acc

    def polar(self) -> "AlternatingForm":
        n = self.n
        gram = [[0] * n for _ in range(n)]
        for (i, j), c in self.coeffs:
            if i != j:
                gram[i][j] ^= c
                gram[j][i] ^= c
        return AlternatingForm(self.gf, n, tuple(tuple(r) for r in gram))

    def polar_pair(self, v: list, w: list) -> int:
        """b(v, w) without materializing the Gram matrix."""
        mul = self.gf.mul
        acc = 0
        for (i, j), c in self.coeffs:
            if i != j:
                p = mul(v[i], w[j]) ^ mul(v[j], w[i])
                if p:
                    acc ^= mul(c, p)
        return acc

    def add(self, other: "QuadraticForm") -> "QuadraticForm":
        t = self.table()
        for k, c in other.coeffs:
            t[k] = t.get(k, 0) ^ c
        return QuadraticForm.from_table(self.gf, self.n, t)

    def scale(self, c: int) -> "QuadraticForm":
        mul = self.gf.mul
        return QuadraticForm.from_table(
            self.gf, self.n, {k: mul(c, v) for k, v in self.coeffs}
        )

    def transform(self, g: list) -> "QuadraticForm":
        """The pulled-back form q o g, i.e. (q o g)(v) = q(g v)."""
        n = self.n
        cols = [[g[r][c] for r in range(n)] for c in range(n)]
        table = {}
        for i in range(n):
            qi = self(cols[i])
            if qi:
                table[(i, i)] = qi
        for i in range(n):
            for j in range(i + 1, n):
                bij = self.polar_pair(cols[i], cols[j])
                if bij:
                    table[(i, j)] = bij
        return QuadraticForm.from_table(self.gf, n, table)

    def map_field(self, emb) -> "QuadraticForm":
        return QuadraticForm.from_table(
            emb.dst, self.n, {k: emb.map(c) for k, c in self.coeffs}
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient_vector(self) -> list:
        """Dense length n(n+1)/2 vector in (i, j) lexicographic order."""
        t = self.table()
        return [t.get((i, j), 0) for i in range(self.n) for j in range(i, self.n)]


@dataclass(frozen=True)
class AlternatingForm:
    """Alternating bilinear form: symmetric Gram matrix with zero diagonal."""

    gf: Field
    n: int
    gram: tuple  # n x n, tuple of tuples

    def __post_init__(self):
        for i in range(self.n):
            if self.gram[i][i] != 0:
                raise ValueError("alternating form with nonzero diagonal")
            for j in range(self.n):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("Gram matrix is not symmetric")

    def __call__(self, v: list, w: list) -> int:
        mul = self.gf.mul
        acc = 0
        for i, vi in enumerate(v):
            if vi:
                row = self.gram[i]
                s = 0
                for j, wj in enumerate(w):
                    if wj and row[j]:
                        s ^= mul(row[j], wj)
                if s:
                    acc ^= mul(vi, s)
        return acc

    def corank(self) -> int:
        return self.n - rank(self.gf, [list(r) for r in self.gram])

    def radical_basis(self) -> list:
        return nullspace(self.gf, [list(r) for r in self.gram])


# ---------------------------------------------------------------------------
# Pfaffians


def pfaffian(gf: Field, gram) -> int:
    """Pfaffian of an even-size alternating matrix (first-row expansion;
    char 2 kills all signs).  The empty Pfaffian is 1."""
    n = len(gram)
    if n % 2 != 0:
        raise ValueError("Pfaffian needs even size")
    mul = gf.mul

    @lru_cache(maxsize=None)
    def rec(idx: tuple) -> int:
        if not idx:
            return 1
        i0 = idx[0]
        rest = idx[1:]
        acc = 0
        for pos, j in enumerate(rest):
            c = gram[i0][j]
            if c:
                sub = rest[:pos] + rest[pos + 1 :]
                p = rec(sub)
                if p:
                    acc ^= mul(c, p)
        return acc

    result = rec(tuple(range(n)))
    rec.cache_clear()
    return result


def pfaffian_vector(gf: Field, gram) -> list:
    """Principal Pfaffians (delete row/column i) of an odd-size alternating
    matrix; spans the radical when the corank is 1, zero when corank >= 3."""
    n = len(gram)
    if n % 2 != 1:
        raise ValueError("Pfaffian vector needs odd size")
    out = []
    for i in range(n):
        keep = [j for j in range(n) if j != i]
        sub = [[gram[r][c] for c in keep] for r in keep]
        out.append(pfaffian(gf, sub))
    return out


def half_disc(q: QuadraticForm) -> int:
    """q evaluated on the Pfaffian vector of its polar form (n odd)."""
    if q.n % 2 != 1:
        raise ValueError("half-discriminant needs odd dimension")
    omega = pfaffian_vector(q.gf, q.polar().gram)
    return q(omega)


# ---------------------------------------------------------------------------
# subspace predicates


def _check_independent(gf: Field, vectors: list):
    if rank(gf, [list(v) for v in vectors]) != len(vectors):
        raise ValueError("spanning set is linearly dependent")


def is_totally_singular(q: QuadraticForm, vectors: list) -> bool:
    """The polar form vanishes on the span (q restricted is diagonal)."""
    _check_independent(q.gf, vectors)
    for a in range(len(vectors)):
        for b in range(a + 1, len(vectors)):
            if q.polar_pair(vectors[a], vectors[b]):
                return False
    return True


def is_totally_isotropic(q: QuadraticForm, vectors: list) -> bool:
    """q vanishes identically on the span: zero on basis vectors and on
    pairwise sums (which is exactly q(v_i) = 0 and b(v_i, v_j) = 0)."""
    _check_independent(q.gf, vectors)
    for v in vectors:
        if q(v):
            return False
    for a in range(len(vectors)):
        for b in range(a + 1, len(vectors)):
            if q.polar_pair(vectors[a], vectors[b]):
                return False
    return True
