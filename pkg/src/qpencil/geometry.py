"""The base locus X = V(q0, q1): points, smoothness, canonical plane,
quasi-splitness, and the 2^(2m) generators.

The smoothness oracle never trusts the half-discriminant criterion: a point
x of X is singular iff the rows b0(x, .), b1(x, .) are dependent, i.e. x
lies in the radical of some member.  Candidate members are the projective
roots of Delta (or every member when Delta vanishes identically), so the
scan walks roots over extensions, their radicals, and small projective
spaces inside those radicals; in characteristic 2 the gradient of q at x
is b(x, .), so no symbolic differentiation is needed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import poly
from .autos import automorphism_group, pair_algebra, phi_model_matrix
from .errors import PreconditionError
from .field import GF, Field, find_embedding
from .linalg import (
    inverse,
    mat_mul,
    mat_vec,
    normalize_subspace,
    nullspace,
    rank,
)
from .pencil import Pencil

_SCAN_LIMIT = 10**8


def proj_points(gf: Field, n: int):
    """Normalized representatives of P^(n-1)(gf): first nonzero entry 1."""
    for lead in range(n):
        tail = n - lead - 1
        for rest in itertools.product(gf.elements(), repeat=tail):
            yield [0] * lead + [1] + list(rest)


def proj_count(q: int, n: int) -> int:
    return (q**n - 1) // (q - 1)


def points_on_X(p: Pencil, ext: Field) -> list:
    """All projective points of X over ext, by exhaustive scan."""
    total = proj_count(ext.order, p.n)
    if total > _SCAN_LIMIT:
        raise PreconditionError(
            f"scan of {total} projective points exceeds the {_SCAN_LIMIT} limit"
        )
    emb = find_embedding(p.gf, ext)
    pe = p.map_field(emb)
    q0, q1 = pe.q0, pe.q1
    return [tuple(x) for x in proj_points(ext, p.n) if q0(x) == 0 and q1(x) == 0]


def singular_points_on_X(p: Pencil, ext: Field) -> list:
    """Points of X(ext) where the Jacobian rows b0(x,.), b1(x,.) have rank
    below 2 (the literal smoothness criterion, scan form)."""
    emb = find_embedding(p.gf, ext)
    pe = p.map_field(emb)
    g0 = [list(r) for r in pe.gram0().gram]
    g1 = [list(r) for r in pe.gram1().gram]
    out = []
    for x in points_on_X(p, ext):
        rows = [mat_vec(ext, g0, list(x)), mat_vec(ext, g1, list(x))]
        if rank(ext, rows) < 2:
            out.append(x)
    return out


def smoothness_oracle(p: Pencil, max_ext_degree: int) -> bool:
    """Brute-force smoothness of X over extensions of degree <= max_ext_degree.

    Singular points sit inside radicals of degenerate members, so the scan
    visits each projective root of Delta over each extension, and inside a
    corank >= 3 radical scans the small projective space cut out there.  A
    vanishing Delta falls back to scanning every member of the pencil.
    """
    a = p.half_discriminant()
    base = p.gf
    if all(c == 0 for c in a):
        for d in range(1, max_ext_degree + 1):
            ext = GF(base.degree * d)
            if _singular_among(p, ext, None):
                return False
        return True
    for d in range(1, max_ext_degree + 1):
        ext = GF(base.degree * d)
        roots = poly.bf_projective_roots(a, base, ext)
        if roots and _singular_among(p, ext, roots):
            return False
    return True


def _singular_among(p: Pencil, ext: Field, members) -> bool:
    emb = find_embedding(p.gf, ext)
    pe = p.map_field(emb)
    g0 = [list(r) for r in pe.gram0().gram]
    g1 = [list(r) for r in pe.gram1().gram]
    if members is None:
        members = [(1, c) for c in ext.elements()] + [(0, 1)]
    for (l, u) in members:
        gram = [
            [ext.mul(l, x) ^ ext.mul(u, y) for x, y in zip(r0, r1)]
            for r0, r1 in zip(g0, g1)
        ]
        rad = nullspace(ext, gram)
        if not rad:
            continue
        if len(rad) == 1:
            x = rad[0]
            if pe.q0(x) == 0 and pe.q1(x) == 0:
                return True
            continue
        for coords in proj_points(ext, len(rad)):
            x = [0] * pe.n
            for c, vec in zip(coords, rad):
                if c:
                    for t in range(pe.n):
                        if vec[t]:
                            x[t] ^= ext.mul(c, vec[t])
            if pe.q0(x) == 0 and pe.q1(x) == 0:
                return True
    return False


# ---------------------------------------------------------------------------
# the canonical (m-2)-plane


@dataclass(frozen=True)
class CanonicalPlane:
    l0: tuple  # sqrt(a_{2i}) coefficients on W
    l1: tuple  # sqrt(a_{2i+1}) coefficients on W
    point_basis: tuple  # m-1 vectors in E spanning the plane


def canonical_plane(p: Pencil) -> CanonicalPlane:
    """The plane {l0 = l1 = 0} inside |W|, where l0^2 = q0|_W and
    l1^2 = q1|_W; defined over the base field because GF(2^k) is perfect.
    Lies on X and has projective dimension m - 2 (so m >= 2 is required)."""
    p.require_regular()
    if p.m < 2:
        raise PreconditionError("the canonical plane is empty for m < 2")
    gf = p.gf
    a = p.half_discriminant()
    m = p.m
    l0 = [gf.sqrt(a[2 * i]) for i in range(m + 1)]
    l1 = [gf.sqrt(a[2 * i + 1]) for i in range(m + 1)]
    if rank(gf, [l0, l1]) != 2:
        raise AssertionError(
            "l0 and l1 proportional would force Delta(T,1) = (T+c^2) g(T^2), "
            "contradicting separability"
        )
    ws = p.radical_map()
    sol = nullspace(gf, [l0, l1])  # coordinates inside W
    basis = []
    for coords in sol:
        vec = [0] * p.n
        for c, w in zip(coords, ws):
            if c:
                for t in range(p.n):
                    if w[t]:
                        vec[t] ^= gf.mul(c, w[t])
        basis.append(vec)
    if len(basis) != m - 1:
        raise AssertionError("canonical plane has the wrong dimension")
    for v in basis:
        if p.q0(v) or p.q1(v):
            raise AssertionError("canonical plane point off X")
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            s = [x ^ y for x, y in zip(basis[i], basis[j])]
            if p.q0(s) or p.q1(s):
                raise AssertionError("canonical plane not contained in X")
    return CanonicalPlane(tuple(l0), tuple(l1), tuple(tuple(v) for v in basis))


# ---------------------------------------------------------------------------
# quasi-splitness


def splitting_degree(p: Pencil) -> int:
    """Degree over the base field of the splitting field of Delta."""
    a = p.half_discriminant()
    f = poly.trim(list(a))
    degs = [len(g) - 1 for g, _ in poly.factor(p.gf, f)]
    out = 1
    for d in degs:
        out = out * d // _gcd(out, d)
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def quasi_split_over(p: Pencil) -> tuple[int, tuple, Field]:
    """Smallest scanned extension degree j where the r-coset dies, with the
    Artin-Schreier witness s over that extension.  Finite fields always
    terminate: after splitting Delta, one quadratic step kills every
    absolute-trace obstruction."""
    p.require_regular()
    bound = 2 * splitting_degree(p)
    for j in range(1, bound + 1):
        ext = GF(p.gf.degree * j)
        emb = find_embedding(p.gf, ext)
        pe = p.map_field(emb)
        try:
            work, _ = pe.ensure_an_nonzero()
        except PreconditionError:
            continue
        algebra, nf = pair_algebra(work)
        s = algebra.solve_artin_schreier(
            algebra.from_d_coords(list(nf.r) + [0])
        )
        if s is not None:
            return j, s, ext
    raise AssertionError("no quasi-splitting extension within twice the "
                         "splitting degree")


# ---------------------------------------------------------------------------
# generators


@dataclass(frozen=True)
class Generator:
    """An (m-1)-dimensional projective subspace on X, stored as the canonical
    echelon basis of its m-dimensional linear span."""

    gf: Field
    basis: tuple  # rref rows

    @property
    def projective_dim(self) -> int:
        return len(self.basis) - 1


def enumerate_generators(p: Pencil, ext: Field) -> list[Generator]:
    """All 2^(2m) generators of X over ext, as the simply transitive orbit
    of one Kronecker complement under the pair automorphisms.

    Needs ext to split Delta (so the orbit has full size) and to kill the
    r-coset (so one generator exists to start from)."""
    emb = find_embedding(p.gf, ext)
    pe = p.map_field(emb)
    pe.require_regular()
    if len(poly.bf_projective_roots(p.half_discriminant(), p.gf, ext)) != p.n:
        raise PreconditionError(
            f"{ext!r} does not split Delta; generators would be missing"
        )
    work, _ = pe.ensure_an_nonzero()
    algebra, nf = pair_algebra(work)
    s = algebra.solve_artin_schreier(algebra.from_d_coords(list(nf.r) + [0]))
    if s is None:
        j, _, needed = quasi_split_over(p)
        raise PreconditionError(
            f"X is not quasi-split over {ext!r}; degree {j} over the base "
            f"field ({needed!r}) suffices"
        )
    gf = ext
    m, n = work.m, work.n
    ms = phi_model_matrix(m, list(algebra.d_coords(s))[: n - 1])
    b0 = mat_mul(gf, nf.basis.matrix(), inverse(gf, ms))
    lam = [
        [b0[r][m + 1 + j] for r in range(n)] for j in range(m)
    ]  # columns v_0..v_{m-1} of the r = 0 frame
    _assert_isotropic(pe, lam)
    first = normalize_subspace(gf, lam)
    autos = automorphism_group(work)
    seen = {}
    for rep in autos:
        g = [list(r) for r in rep.matrix]
        img = normalize_subspace(gf, [mat_vec(gf, g, list(v)) for v in first])
        if img in seen:
            raise AssertionError("automorphism orbit of the generator collides")
        seen[img] = rep
    gens = [Generator(gf, span) for span in seen]
    for gen in gens:
        _assert_isotropic(pe, [list(v) for v in gen.basis])
    if len(gens) != 1 << (2 * m):
        raise AssertionError("generator count differs from 2^(2m)")
    return gens


def _assert_isotropic(pe: Pencil, vectors: list):
    for v in vectors:
        if pe.q0(v) or pe.q1(v):
            raise AssertionError("generator basis vector not on X")
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            s = [x ^ y for x, y in zip(vectors[i], vectors[j])]
            if pe.q0(s) or pe.q1(s):
                raise AssertionError("generator span leaves X")


def brute_force_lines(p: Pencil, ext: Field) -> list[tuple]:
    """All lines on X(ext) for m = 2, from pairs of points: the line through
    two points of X lies on X iff both polar pairings vanish."""
    if p.m != 2:
        raise PreconditionError("line enumeration is the m = 2 oracle")
    emb = find_embedding(p.gf, ext)
    pe = p.map_field(emb)
    pts = points_on_X(p, ext)
    lines = set()
    for i in range(len(pts)):
        xi = list(pts[i])
        for j in range(i + 1, len(pts)):
            xj = list(pts[j])
            if pe.q0.polar_pair(xi, xj) == 0 and pe.q1.polar_pair(xi, xj) == 0:
                lines.add(normalize_subspace(ext, [xi, xj]))
    return sorted(lines)
