"""The integral lattice of middle-dimensional cycle classes.

Intersection numbers come from the projective dimension r of the measured
linear intersection of two generators: the pairing is
(-1)^r (floor(r/2) + 1), zero for disjoint generators.  eta^(m-1) pairs to
1 with every generator class and to 4 (the degree of a complete
intersection of two quadrics) with itself; that last value is needed to
close the Gram matrix and makes the root basis exactly orthogonal to
eta^(m-1).

All classes are expressed over the presentation basis

    (eta^(m-1), [L_empty], [L_1], ..., [L_{2m+1}])

with L_i the image of L_empty under the i-th reflection.  On
e_0 = eta^(m-1) - [L_empty], e_i = [L_i], the classes

    alpha_0 = -e_0 + [L_empty] + e_2m + e_{2m+1},  alpha_i = e_i - e_{i+1}

realize a root basis of type D_{2m+1} up to the global sign (-1)^(m-1).
([L_empty] itself is an integral combination of the e_i for m = 2 but not
for every m, so nothing here relies on that expansion.)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .autos import Reflection, apply_to_subspace
from .errors import PreconditionError
from .field import Field
from .geometry import Generator, enumerate_generators
from .linalg import intersect_dim
from .pencil import Pencil

DEGREE_OF_X = 4  # two quadrics: eta^(m-1) . eta^(m-1)
ETA_DOT_GENERATOR = 1  # a generator is a linear subspace


def intersection_number(g1: Generator, g2: Generator, m: int) -> int:
    """[L_1].[L_2] from the measured intersection dimension."""
    if g1.gf != g2.gf or len(g1.basis[0]) != len(g2.basis[0]):
        raise PreconditionError("generators live in different ambient spaces")
    r = intersect_dim(g1.gf, g1.basis, g2.basis) - 1  # projective dimension
    return pairing_value(r)


def pairing_value(r: int) -> int:
    """(-1)^r (floor(r/2) + 1) for r >= 0; disjoint generators pair to 0."""
    if r < 0:
        return 0
    return (-1) ** r * (r // 2 + 1)


@dataclass(frozen=True)
class CycleLattice:
    m: int
    presentation_gram: tuple  # pairings of (eta^(m-1), [L_empty], e_1..e_{2m+1})
    gram: tuple  # (2m+2) x (2m+2) on the basis (e_0, ..., e_{2m+1})
    eta_power: tuple  # eta^(m-1) in presentation coordinates
    lam_empty: tuple  # [L_empty] in presentation coordinates
    lam_empty_in_e: tuple | None  # integral e-coordinates when they exist
    root_basis: tuple  # alpha_0 .. alpha_2m in presentation coordinates
    gram_alpha: tuple
    line_gram: tuple  # full pairwise matrix of all 2^(2m) generator classes

    @property
    def rank(self) -> int:
        return 2 * self.m + 2


def cartan_d(m: int) -> list:
    """Cartan matrix of D_{2m+1} in the ordering of the alpha basis above:
    nodes 1..2m form the chain and node 0 forks off node 2m-1."""
    size = 2 * m + 1
    edges = {(i, i + 1) for i in range(1, 2 * m)} | {(0, 2 * m - 1)}
    c = [[0] * size for _ in range(size)]
    for i in range(size):
        c[i][i] = 2
    for i, j in edges:
        c[i][j] = -1
        c[j][i] = -1
    return c


def build_lattice(
    gens: list[Generator],
    lam_empty: Generator,
    lam_singles: list[Generator],
    m: int,
) -> CycleLattice:
    """Assemble the cycle lattice from enumerated generators.

    lam_singles[i-1] must be the image of lam_empty under the i-th
    reflection; together with lam_empty they index the basis classes."""
    n = 2 * m + 1
    if len(lam_singles) != n:
        raise PreconditionError(
            f"need {n} reflected generators, got {len(lam_singles)}"
        )
    size = n + 2  # presentation: eta, lam_empty, lam_1..lam_n

    pres = [[0] * size for _ in range(size)]
    pres[0][0] = DEGREE_OF_X
    lams = [lam_empty] + list(lam_singles)
    for i, g in enumerate(lams):
        pres[0][1 + i] = pres[1 + i][0] = ETA_DOT_GENERATOR
    for i, gi in enumerate(lams):
        for j, gj in enumerate(lams):
            pres[1 + i][1 + j] = intersection_number(gi, gj, m)

    def pair(x, y):
        acc = 0
        for i, xi in enumerate(x):
            if xi:
                row = pres[i]
                for j, yj in enumerate(y):
                    if yj:
                        acc += xi * row[j] * yj
        return acc

    eta = _unit(size, 0)
    lam0 = _unit(size, 1)
    e_classes = [[1, -1] + [0] * n]  # e_0 = eta - lam_empty
    for i in range(n):
        e_classes.append(_unit(size, 2 + i))

    gram_e = [[pair(x, y) for y in e_classes] for x in e_classes]

    alphas = []
    a0 = [-x + l for x, l in zip(e_classes[0], lam0)]
    a0 = [x + y + z for x, y, z in zip(a0, e_classes[n - 1], e_classes[n])]
    alphas.append(a0)
    for i in range(1, n):
        alphas.append([x - y for x, y in zip(e_classes[i], e_classes[i + 1])])

    gram_alpha = [[pair(x, y) for y in alphas] for x in alphas]
    for x in alphas:
        if pair(x, eta) != 0:
            raise AssertionError("root basis is not orthogonal to eta^(m-1)")

    lam_in_e = _try_integer_solve(gram_e, [pair(lam0, e) for e in e_classes])
    line_gram = _full_line_gram(gens, m)

    return CycleLattice(
        m,
        tuple(tuple(r) for r in pres),
        tuple(tuple(r) for r in gram_e),
        tuple(eta),
        tuple(lam0),
        lam_in_e,
        tuple(tuple(a) for a in alphas),
        tuple(tuple(r) for r in gram_alpha),
        line_gram,
    )


def _full_line_gram(gens: list[Generator], m: int) -> tuple:
    k = len(gens)
    out = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            v = intersection_number(gens[i], gens[j], m)
            out[i][j] = out[j][i] = v
    return tuple(tuple(r) for r in out)


def _unit(size: int, i: int) -> list:
    v = [0] * size
    v[i] = 1
    return v


def _try_integer_solve(gram: list, rhs: list):
    """x with gram x = rhs over the integers, or None."""
    n = len(gram)
    a = [
        [Fraction(x) for x in row] + [Fraction(rhs[i])]
        for i, row in enumerate(gram)
    ]
    for c in range(n):
        sel = next((i for i in range(c, n) if a[i][c] != 0), None)
        if sel is None:
            return None
        a[c], a[sel] = a[sel], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    out = []
    for i in range(n):
        v = a[i][n]
        if v.denominator != 1:
            return None
        out.append(int(v))
    return tuple(out)


def lattice_for(p: Pencil, ext: Field, refl: list[Reflection]) -> CycleLattice:
    """Orchestrate: enumerate generators over ext, index them through the
    given reflections, and build the lattice."""
    gens = enumerate_generators(p, ext)
    by_span = {g.basis: g for g in gens}
    lam_empty = gens[0]
    lam_singles = []
    for r in refl:
        span = apply_to_subspace(
            ext, [list(row) for row in r.matrix], lam_empty.basis
        )
        if span not in by_span:
            raise AssertionError("reflection image is not an enumerated generator")
        lam_singles.append(by_span[span])
    return build_lattice(gens, lam_empty, lam_singles, p.m)
