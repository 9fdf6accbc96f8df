"""Pencils of quadratic forms on odd-dimensional spaces.

A pencil is an ordered non-proportional pair (q0, q1) on dimension
n = 2m+1.  The radical map Omega(l, u) collects the principal Pfaffians of
l*b0 + u*b1 as binary forms of degree m; evaluating the member at its own
radical vector gives the half-discriminant, a binary form of degree n whose
separability is exactly regularity of the pencil (the base locus is then
smooth of codimension 2).
"""

from __future__ import annotations

from functools import lru_cache

from . import poly
from .errors import NotRegularError, PreconditionError
from .field import Field, find_embedding
from .linalg import rank
from .quadform import AlternatingForm, QuadraticForm, half_disc


class Pencil:
    """Ordered pair (q0, q1) of quadratic forms spanning a pencil."""

    def __init__(self, q0: QuadraticForm, q1: QuadraticForm):
        if q0.gf != q1.gf:
            raise ValueError("forms live over different fields")
        if q0.n != q1.n:
            raise ValueError("forms live on spaces of different dimension")
        if q0.n % 2 != 1 or q0.n < 3:
            raise ValueError(f"pencil dimension must be odd and >= 3, got {q0.n}")
        if rank(q0.gf, [q0.coefficient_vector(), q1.coefficient_vector()]) != 2:
            raise ValueError("the two forms are proportional; not a pencil")
        self.gf = q0.gf
        self.q0 = q0
        self.q1 = q1
        self.n = q0.n
        self.m = (q0.n - 1) // 2
        self._radical_map = None
        self._half_disc = None

    def __eq__(self, other):
        return (
            isinstance(other, Pencil) and other.q0 == self.q0 and other.q1 == self.q1
        )

    def __hash__(self):
        return hash((self.q0, self.q1))

    def __repr__(self):
        return f"Pencil(n={self.n}, {self.gf!r})"

    # -- members -------------------------------------------------------------

    def member(self, l: int, u: int) -> QuadraticForm:
        """The quadratic form l*q0 + u*q1."""
        return self.q0.scale(l).add(self.q1.scale(u))

    def gram0(self) -> AlternatingForm:
        return self.q0.polar()

    def gram1(self) -> AlternatingForm:
        return self.q1.polar()

    # -- the radical map and half-discriminant --------------------------------

    def radical_map(self) -> list:
        """Coefficient vectors w_0 .. w_m of Omega = sum l^(m-i) u^i w_i.

        Entry k of Omega is the Pfaffian of the principal submatrix of
        l*Gram(b0) + u*Gram(b1) deleting row/column k, a binary form of
        degree m computed by first-row expansion over the form ring.
        """
        if self._radical_map is None:
            g0 = self.gram0().gram
            g1 = self.gram1().gram
            n, m, gf = self.n, self.m, self.gf
            entries = {}
            for i in range(n):
                for j in range(n):
                    entries[(i, j)] = [g0[i][j], g1[i][j]]  # degree-1 form
            omega = []
            for k in range(n):
                keep = tuple(j for j in range(n) if j != k)
                omega.append(_form_pfaffian(gf, entries, keep, m))
            ws = []
            for i in range(m + 1):
                ws.append([omega_k[i] for omega_k in omega])
            self._radical_map = ws
        return self._radical_map

    def omega_at(self, l: int, u: int) -> list:
        """The radical vector of the member at (l, u)."""
        gf = self.gf
        m = self.m
        ws = self.radical_map()
        acc = [0] * self.n
        for i in range(m + 1):
            c = gf.mul(gf.pow(l, m - i), gf.pow(u, i))
            if c:
                for k in range(self.n):
                    if ws[i][k]:
                        acc[k] ^= gf.mul(c, ws[i][k])
        return acc

    def half_discriminant(self) -> list:
        """Coefficients (a_0, ..., a_n) of Delta = (l q0 + u q1)(Omega(l, u))."""
        if self._half_disc is None:
            gf, n = self.gf, self.n
            ws = self.radical_map()
            m = self.m
            omega = [[ws[i][k] for i in range(m + 1)] for k in range(n)]
            acc = [0] * (n + 1)
            t0 = self.q0.table()
            t1 = self.q1.table()
            for key in set(t0) | set(t1):
                i, j = key
                lin = [t0.get(key, 0), t1.get(key, 0)]
                term = poly.bf_mul(gf, lin, poly.bf_mul(gf, omega[i], omega[j]))
                for k, v in enumerate(term):
                    acc[k] ^= v
            self._half_disc = acc
        return self._half_disc

    def is_regular(self) -> bool:
        """Delta nonzero and separable as a binary form: n distinct projective
        roots over the closure, the point at infinity included."""
        return poly.bf_is_separable(self.gf, self.half_discriminant())

    def require_regular(self):
        if not self.is_regular():
            raise NotRegularError("pencil is not regular (half-discriminant is "
                                  "zero or has a repeated root)")

    # -- basis changes ---------------------------------------------------------

    def change_basis_gl2(self, m2: list) -> "Pencil":
        """The pencil (q_{g(u0)}, q_{g(u1)}) for g with matrix columns m2[.][j].

        Delta transforms by substitution with the same matrix:
        Delta'(t0, t1) = Delta(m00 t0 + m01 t1, m10 t0 + m11 t1).
        """
        gf = self.gf
        d = gf.mul(m2[0][0], m2[1][1]) ^ gf.mul(m2[0][1], m2[1][0])
        if d == 0:
            raise ValueError("singular GL(2) matrix")
        q0p = self.q0.scale(m2[0][0]).add(self.q1.scale(m2[1][0]))
        q1p = self.q0.scale(m2[0][1]).add(self.q1.scale(m2[1][1]))
        return Pencil(q0p, q1p)

    def conjugate(self, g: list) -> "Pencil":
        """The pencil (q0 o g, q1 o g)."""
        return Pencil(self.q0.transform(g), self.q1.transform(g))

    def map_field(self, emb) -> "Pencil":
        return Pencil(self.q0.map_field(emb), self.q1.map_field(emb))

    def extend(self, j: int) -> tuple["Pencil", "Field"]:
        ext, emb = self.gf.extension(j)
        return self.map_field(emb), ext

    def ensure_an_nonzero(self) -> tuple["Pencil", list]:
        """A GL2-equivalent pencil whose Delta has a_n != 0 (q1 nondegenerate),
        together with the matrix used; errors if every rational point of the
        projective line is a root of Delta."""
        self.require_regular()
        gf = self.gf
        a = self.half_discriminant()
        n = self.n
        if a[n] != 0:
            return self, [[1, 0], [0, 1]]
        if a[0] != 0:
            swap = [[0, 1], [1, 0]]
            return self.change_basis_gl2(swap), swap
        for c in gf.nonzero_elements():
            if poly.bf_eval(gf, a, 1, c) != 0:
                g = [[0, 1], [1, c]]
                return self.change_basis_gl2(g), g
        j = 2
        while (1 << (gf.degree * j)) + 1 <= n:
            j += 1
        raise PreconditionError(
            "every rational point of P^1 is a root of Delta; "
            f"a degree-{j} extension has a non-root",
            extension_degree=j,
        )

    def corank_profile(self, ext: Field) -> list:
        """Pairs (root of Delta over ext, corank of that member) checking the
        corank-1 property of regular pencils."""
        self.require_regular()
        a = self.half_discriminant()
        pts = poly.bf_projective_roots(a, self.gf, ext)
        if len(pts) != self.n:
            raise PreconditionError(
                f"extension {ext!r} does not split Delta "
                f"({len(pts)} of {self.n} roots)"
            )
        emb = find_embedding(self.gf, ext)
        pe = self.map_field(emb)
        out = []
        for (l, u) in pts:
            member = pe.member(l, u)
            out.append(((l, u), member.polar().corank()))
        return out


def _form_pfaffian(gf: Field, entries: dict, keep: tuple, m: int) -> list:
    """Pfaffian of an alternating matrix of degree-1 binary forms, returned
    as a degree-m binary form (first-row expansion, memoized)."""

    @lru_cache(maxsize=None)
    def rec(idx: tuple) -> tuple:
        if not idx:
            return (1,)
        i0 = idx[0]
        rest = idx[1:]
        deg = len(idx) // 2
        acc = [0] * (deg + 1)
        for pos, j in enumerate(rest):
            e = entries[(i0, j)]
            if e[0] or e[1]:
                sub = rec(rest[:pos] + rest[pos + 1 :])
                term = poly.bf_mul(gf, e, list(sub))
                for k, v in enumerate(term):
                    acc[k] ^= v
        return tuple(acc)

    out = list(rec(keep))
    rec.cache_clear()
    if len(out) != m + 1:
        raise AssertionError("symbolic Pfaffian has the wrong degree")
    return out


def random_pencil(gf: Field, n: int, rng, regular: bool = True, max_tries: int = 5000):
    """Deterministic-by-seed random pencil sampler (rejection)."""
    for _ in range(max_tries):
        t0 = {}
        t1 = {}
        for i in range(n):
            for j in range(i, n):
                t0[(i, j)] = rng.randrange(gf.order)
                t1[(i, j)] = rng.randrange(gf.order)
        q0 = QuadraticForm.from_table(gf, n, t0)
        q1 = QuadraticForm.from_table(gf, n, t1)
        try:
            p = Pencil(q0, q1)
        except ValueError:
            continue
        if not regular or p.is_regular():
            return p
    raise RuntimeError("no pencil found within the retry budget")


def half_disc_check(p: Pencil, l: int, u: int) -> bool:
    """Delta(l, u) evaluated from coefficients equals the half-discriminant
    of the member at (l, u)."""
    lhs = poly.bf_eval(p.gf, p.half_discriminant(), l, u)
    member = p.member(l, u)
    if member.is_zero():
        return lhs == 0
    return lhs == half_disc(member)
