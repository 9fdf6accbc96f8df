"""The etale algebra A = k[T]/(f(T)) behind the r-invariant.

f is separable of degree n with f[n] != 0 but not necessarily monic:
reduction works with the monicization while the distinguished basis

    d_i = a_{i+1} + a_{i+2} t + ... + a_n t^{n-1-i}

keeps the original coefficients, satisfying
f(X) = (X - t)(d_0 + d_1 X + ... + d_{n-1} X^{n-1}) with d_{n-1} = a_n
spanning the constants.  The elements d_i / f'(t) are dual to the power
basis under the trace form, which gives exact d-coordinates by trace
projection and the squaring rule r_k = sum_j s_j^2 a_{2j+1-k} (indices
outside 0..n read as zero).

Elements are coordinate tuples in the power basis 1, t, ..., t^{n-1}.
The subgroup k + im(wp), wp(s) = s^2 + s, is a GF(2)-subspace; coset
reduction against a fixed echelonized basis of it gives canonical
representatives, so equality of representatives decides isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import poly
from .field import Field
from .linalg import gf2_echelon, gf2_reduce, gf2_solve


@dataclass(frozen=True)
class EtaleAlgebra:
    gf: Field
    f: tuple  # coefficients a_0..a_n, a_n != 0, separable

    def __post_init__(self):
        fl = list(self.f)
        if len(fl) < 2 or fl[-1] == 0:
            raise ValueError("f must have degree >= 1 with nonzero leading "
                             "coefficient")
        if not poly.is_separable(self.gf, fl):
            raise ValueError("f is not separable; the quotient is not etale")

    @property
    def n(self) -> int:
        return len(self.f) - 1

    @cached_property
    def monic_f(self) -> tuple:
        return tuple(poly.monic(self.gf, list(self.f)))

    @cached_property
    def factors(self) -> tuple:
        """Irreducible factors in canonical order (all multiplicities 1)."""
        out = poly.factor(self.gf, list(self.f))
        return tuple(tuple(g) for g, _ in out)

    @property
    def num_components(self) -> int:
        return len(self.factors)

    # -- elements ------------------------------------------------------------

    def element(self, coeffs) -> tuple:
        c = list(coeffs)
        if len(c) > self.n and any(c[self.n :]):
            raise ValueError("coordinates exceed the power basis; reduce first")
        c = c[: self.n] + [0] * max(0, self.n - len(c))
        return tuple(c)

    def zero(self) -> tuple:
        return tuple([0] * self.n)

    def one(self) -> tuple:
        return self.element([1])

    def constant(self, c: int) -> tuple:
        return self.element([c])

    def t_power(self, i: int) -> tuple:
        """t^i as an element (reduced when i >= n)."""
        return self.element(poly.mod(self.gf, [0] * i + [1], list(self.monic_f)))

    def from_poly(self, coeffs: list) -> tuple:
        return self.element(poly.mod(self.gf, list(coeffs), list(self.monic_f)))

    def add(self, x: tuple, y: tuple) -> tuple:
        return tuple(a ^ b for a, b in zip(x, y))

    def mul(self, x: tuple, y: tuple) -> tuple:
        prod = poly.mul(self.gf, list(x), list(y))
        return self.element(poly.mod(self.gf, prod, list(self.monic_f)))

    def square(self, x: tuple) -> tuple:
        return self.mul(x, x)

    def artin_schreier(self, x: tuple) -> tuple:
        """wp(x) = x^2 + x; additive, kernel = the idempotents."""
        return self.add(self.square(x), x)

    def is_idempotent(self, x: tuple) -> bool:
        return self.square(x) == x

    # -- trace ----------------------------------------------------------------

    @cached_property
    def _power_traces(self) -> tuple:
        """Tr(t^i) for i = 0..2n-2 via powers of the companion matrix."""
        gf, n = self.gf, self.n
        mf = list(self.monic_f)
        comp = [[0] * n for _ in range(n)]
        for i in range(1, n):
            comp[i][i - 1] = 1
        for i in range(n):
            comp[i][n - 1] = mf[i]  # char 2: -a = a
        traces = []
        m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for _ in range(2 * n - 1):
            traces.append(_trace_of(gf, m))
            m = _matmul(gf, m, comp)
        return tuple(traces)

    def trace(self, x: tuple) -> int:
        tp = self._power_traces
        acc = 0
        for i, c in enumerate(x):
            if c:
                acc ^= self.gf.mul(c, tp[i])
        return acc

    def trace_pair(self, x: tuple, y: tuple) -> int:
        """Tr(x*y) computed bilinearly from the power traces."""
        gf = self.gf
        tp = self._power_traces
        acc = 0
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        acc ^= gf.mul(gf.mul(a, b), tp[i + j])
        return acc

    # -- the d-basis ------------------------------------------------------------

    @cached_property
    def d_basis(self) -> tuple:
        """d_i = a_{i+1} + a_{i+2} t + ... + a_n t^{n-1-i}, i = 0..n-1."""
        n = self.n
        out = []
        for i in range(n):
            out.append(self.element(list(self.f[i + 1 :])))
        return tuple(out)

    @cached_property
    def _dual_projectors(self) -> tuple:
        """Elements t^i / f'(t); Tr(x * proj_i) is the i-th d-coordinate."""
        gf = self.gf
        fprime = poly.derivative(gf, list(self.f))
        inv = _invert_mod(gf, fprime, list(self.monic_f))
        out = []
        cur = self.element(inv)
        t = self.t_power(1)
        for _ in range(self.n):
            out.append(cur)
            cur = self.mul(cur, t)
        return tuple(out)

    def d_coords(self, x: tuple) -> tuple:
        """Coordinates of x in the d-basis, by trace projection."""
        return tuple(self.trace_pair(x, p) for p in self._dual_projectors)

    def from_d_coords(self, s: list) -> tuple:
        acc = self.zero()
        for c, d in zip(s, self.d_basis):
            if c:
                acc = self.add(acc, tuple(self.gf.mul(c, x) for x in d))
        return acc

    def dual_basis_check(self) -> bool:
        """Tr(d_i t^j / f'(t)) = delta_ij, all n^2 identities."""
        for i, d in enumerate(self.d_basis):
            coords = self.d_coords(d)
            if any(c != (1 if j == i else 0) for j, c in enumerate(coords)):
                return False
        return True

    def a_coefficient(self, i: int) -> int:
        """f's coefficient with the convention a_i = 0 outside 0..n."""
        if 0 <= i <= self.n:
            return self.f[i]
        return 0

    def square_in_d_basis(self, s: list) -> list:
        """d-coordinates of (sum s_j d_j)^2: r_k = sum_j s_j^2 a_{2j+1-k}."""
        gf = self.gf
        out = []
        for k in range(self.n):
            acc = 0
            for j, sj in enumerate(s):
                if sj:
                    a = self.a_coefficient(2 * j + 1 - k)
                    if a:
                        acc ^= gf.mul(gf.mul(sj, sj), a)
            out.append(acc)
        return out

    # -- idempotents -------------------------------------------------------------

    @cached_property
    def idempotents(self) -> tuple:
        """Primitive orthogonal idempotents, one per irreducible factor,
        built by extended gcd of f_i and f/f_i; their sum is 1."""
        gf = self.gf
        mf = list(self.monic_f)
        eps = []
        for fi in self.factors:
            gi = poly.divexact(gf, mf, list(fi))
            g, u, v = poly.extended_gcd(gf, list(fi), gi)
            if g != [1]:
                raise AssertionError("separable factors are not coprime")
            e = self.from_poly(poly.mul(gf, v, gi))
            if not self.is_idempotent(e):
                raise AssertionError("CRT element is not idempotent")
            eps.append(e)
        total = self.zero()
        for e in eps:
            total = self.add(total, e)
        if total != self.one():
            raise AssertionError("idempotents do not sum to 1")
        for i in range(len(eps)):
            for j in range(i + 1, len(eps)):
                if self.mul(eps[i], eps[j]) != self.zero():
                    raise AssertionError("idempotents are not orthogonal")
        return tuple(eps)

    def all_idempotents(self) -> list:
        """All 2^l sums of primitive idempotents (the kernel of wp)."""
        out = [self.zero()]
        for e in self.idempotents:
            out += [self.add(x, e) for x in out]
        return out

    # -- the subspace k + wp(A) and coset reduction -------------------------------

    def _pack(self, x: tuple) -> int:
        k = self.gf.degree
        acc = 0
        for j, c in enumerate(x):
            acc |= c << (j * k)
        return acc

    def _unpack(self, bits: int) -> tuple:
        k = self.gf.degree
        mask = (1 << k) - 1
        return tuple((bits >> (j * k)) & mask for j in range(self.n))

    @cached_property
    def _wp_columns(self) -> tuple:
        """Images wp(e) of the GF(2)-basis e = t^j x^b, packed."""
        cols = []
        for j in range(self.n):
            for b in range(self.gf.degree):
                e = self.element([0] * j + [1 << b])
                cols.append(self._pack(self.artin_schreier(e)))
        return tuple(cols)

    @cached_property
    def _constant_columns(self) -> tuple:
        return tuple(1 << b for b in range(self.gf.degree))

    @cached_property
    def _coset_basis(self) -> tuple:
        """Echelonized GF(2)-basis of k + wp(A)."""
        rows = list(self._wp_columns) + list(self._constant_columns)
        return tuple(gf2_echelon(rows))

    def coset_reduce(self, x: tuple) -> tuple[tuple, bool]:
        """Canonical representative of x modulo k + wp(A), and triviality."""
        red = gf2_reduce(self._pack(x), list(self._coset_basis))
        return self._unpack(red), red == 0

    def solve_artin_schreier(self, r: tuple):
        """s with wp(s) + c = r for some constant c, or None.

        None means r is not in k + wp(A) over this base field; extending the
        base always repairs it eventually (a quadratic extension suffices once
        f is split, since the absolute trace of a ground-field element dies in
        the quadratic extension).
        """
        cols = list(self._wp_columns) + list(self._constant_columns)
        combo = gf2_solve(cols, self._pack(r))
        if combo is None:
            return None
        s = self.zero()
        for idx in range(len(self._wp_columns)):
            if (combo >> idx) & 1:
                j, b = divmod(idx, self.gf.degree)
                s = self.add(s, self.element([0] * j + [1 << b]))
        check = self.add(self.artin_schreier(s), r)
        if any(check[1:]) and len(check) > 1:
            raise AssertionError("Artin-Schreier witness fails verification")
        return s

    def map_field(self, emb) -> "EtaleAlgebra":
        return EtaleAlgebra(emb.dst, tuple(emb.map(c) for c in self.f))


def _trace_of(gf: Field, m: list) -> int:
    acc = 0
    for i in range(len(m)):
        acc ^= m[i][i]
    return acc


def _matmul(gf: Field, a: list, b: list) -> list:
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        arow = a[i]
        orow = out[i]
        for k in range(n):
            x = arow[k]
            if x:
                brow = b[k]
                for j in range(n):
                    if brow[j]:
                        orow[j] ^= gf.mul(x, brow[j])
    return out


def _invert_mod(gf: Field, a: list, m: list) -> list:
    g, u, _ = poly.extended_gcd(gf, a, m)
    if g != [1]:
        raise ValueError("element is not invertible modulo f")
    return poly.mod(gf, u, m)
