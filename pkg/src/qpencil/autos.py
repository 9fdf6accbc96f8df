"""Automorphisms of pairs and of the base locus X.

Additive elements s of the algebra act on a Kronecker frame through the
unipotent block matrix [[I, S], [0, I]] whose upper-right block is the
catalecticant Cat(s_0, ..., s_{2m-1}); the map phi is a homomorphism from
(A, +) with kernel exactly the constants.  Idempotents of A give the
automorphisms of the pair itself; over a splitting field these are the n
reflections at the singular points of the degenerate members, and Aut(X)
is generated by them together with lifts of the projective-line symmetries
of the root divisor of the half-discriminant.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import poly
from .algebra import EtaleAlgebra
from .errors import PreconditionError
from .field import Field, find_embedding
from .linalg import inverse, mat_mul, mat_vec, normalize_subspace
from .normalform import NormalForm, extract_normal_form
from .pencil import Pencil


@dataclass(frozen=True)
class AutomorphismRep:
    """phi(s) for an algebra element s: a matrix in the pencil's coordinates
    whose Kronecker-frame shape is [[I, S], [0, I]] with S catalecticant."""

    s_coeffs: tuple  # d-coordinates s_0..s_{n-2}
    matrix: tuple
    catalecticant: tuple


def catalecticant(m: int, s: list) -> list:
    """Cat(s_0, ..., s_{2m-1}): the (m+1) x m block S[k][j] = s_{j+k}."""
    if len(s) < 2 * m:
        s = list(s) + [0] * (2 * m - len(s))
    return [[s[k + j] for j in range(m)] for k in range(m + 1)]


def phi_model_matrix(m: int, s: list) -> list:
    """phi(s) in Kronecker coordinates (w_0..w_m, v_0..v_{m-1})."""
    n = 2 * m + 1
    g = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    cat = catalecticant(m, s)
    for k in range(m + 1):
        for j in range(m):
            g[k][m + 1 + j] = cat[k][j]
    return g


def phi(algebra: EtaleAlgebra, nf: NormalForm, s: tuple) -> AutomorphismRep:
    """phi(s) conjugated into the original coordinates of nf's pencil."""
    gf = nf.basis.gf
    m = nf.m
    s_coords = list(algebra.d_coords(s))[: algebra.n - 1]
    model = phi_model_matrix(m, s_coords)
    b = nf.basis.matrix()
    mat = mat_mul(gf, mat_mul(gf, b, model), inverse(gf, b))
    return AutomorphismRep(
        tuple(s_coords),
        tuple(tuple(r) for r in mat),
        tuple(tuple(r) for r in catalecticant(m, s_coords)),
    )


def pair_algebra(p: Pencil) -> tuple[EtaleAlgebra, NormalForm]:
    """The algebra k[T]/(Delta(1,T)) and normal form; requires a_n != 0."""
    p.require_regular()
    a = p.half_discriminant()
    if a[p.n] == 0:
        raise PreconditionError(
            "a_n = 0: apply ensure_an_nonzero before building the algebra"
        )
    nf = extract_normal_form(p)
    return EtaleAlgebra(p.gf, tuple(a)), nf


def automorphism_group(p: Pencil) -> list[AutomorphismRep]:
    """All automorphisms of the pair (q0, q1): phi of the idempotents of A,
    modulo the identification e ~ e + 1; the group has order 2^(l-1).

    A GL(2) change of pair basis leaves this group unchanged, so when
    a_n = 0 the computation silently runs on the moved pair.
    """
    p.require_regular()
    work, _ = p.ensure_an_nonzero()
    algebra, nf = pair_algebra(work)
    eps = algebra.idempotents
    reps = [algebra.zero()]
    for e in eps[1:]:  # dropping eps[0] fixes the e ~ e+1 ambiguity
        reps += [algebra.add(x, e) for x in reps]
    out = []
    for e in reps:
        rep = phi(algebra, nf, e)
        g = [list(r) for r in rep.matrix]
        if p.q0.transform(g) != p.q0 or p.q1.transform(g) != p.q1:
            raise AssertionError("phi(idempotent) fails to preserve the pair")
        out.append(rep)
    return out


# ---------------------------------------------------------------------------
# reflections over a splitting field


@dataclass(frozen=True)
class Reflection:
    root: tuple  # (t0, t1), normalized projective root of Delta
    singular_vector: tuple
    matrix: tuple


def reflections(p: Pencil, ext: Field) -> list[Reflection]:
    """One involution per root of Delta over ext: the reflection fixing the
    polar hyperplane of the singular point z = Omega(root).

    The defining formula rho(v) = v + b_u(z, v) / q_u(z) * z uses an
    auxiliary member u; independence of that choice is checked by computing
    with two different members.  The product of all n reflections is the
    identity, and each equals phi of the idempotent of its linear factor.
    """
    p.require_regular()
    a = p.half_discriminant()
    pts = poly.bf_projective_roots(a, p.gf, ext)
    if len(pts) != p.n:
        raise PreconditionError(
            f"{ext!r} does not split Delta ({len(pts)} of {p.n} roots)"
        )
    emb = find_embedding(p.gf, ext)
    pe = p.map_field(emb)
    out = []
    for (l, u) in pts:
        z = pe.omega_at(l, u)
        candidates = [(1, 0), (0, 1), (1, 1)]
        mats = []
        for (lu, uu) in candidates:
            # skip members proportional to the root
            if (lu, uu) == (l, u) or _proportional(ext, (lu, uu), (l, u)):
                continue
            member = pe.member(lu, uu)
            qz = member(z)
            if qz == 0:
                raise AssertionError("singular vector lies on the base locus; "
                                     "pencil cannot be regular")
            inv = ext.inv(qz)
            n = pe.n
            mat = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
            for c in range(n):
                ec = [1 if t == c else 0 for t in range(n)]
                coef = ext.mul(inv, member.polar_pair(z, ec))
                if coef:
                    for r in range(n):
                        mat[r][c] ^= ext.mul(coef, z[r])
            mats.append(mat)
            if len(mats) == 2:
                break
        if mats[0] != mats[1]:
            raise AssertionError("reflection depends on the auxiliary member")
        out.append(
            Reflection((l, u), tuple(z), tuple(tuple(r) for r in mats[0]))
        )
    return out


def _proportional(gf: Field, x: tuple, y: tuple) -> bool:
    return gf.mul(x[0], y[1]) == gf.mul(x[1], y[0])


def reflections_match_idempotents(p: Pencil, ext: Field) -> bool:
    """phi(eps_i) = rho_i for the idempotent of each split linear factor."""
    emb = find_embedding(p.gf, ext)
    pe = p.map_field(emb)
    algebra, nf = pair_algebra(pe)
    refl = reflections(p, ext)
    by_root = {}
    for r in refl:
        if r.root[0] == 0:
            return False  # a_n = 0: no idempotent matches the infinite root
        by_root[ext.div(r.root[1], r.root[0])] = r
    for fi, e in zip(algebra.factors, algebra.idempotents):
        if len(fi) != 2:
            return False  # ext does not split Delta after all
        alpha = ext.div(fi[0], fi[1])
        rep = phi(algebra, nf, e)
        if rep.matrix != by_root[alpha].matrix:
            return False
    return True


# ---------------------------------------------------------------------------
# Aut(X) = R x| G over a quasi-split splitting field


@dataclass(frozen=True)
class AutXGroup:
    ext: Field
    pair_autos: tuple  # R: matrices over ext (includes the identity)
    g_elements: tuple  # 2x2 matrices over ext, normalized representatives
    g_lifts: tuple  # one lift in GL(E) per G element, pair-exact
    elements: tuple  # all |R| * |G| projective classes, deduplicated
    mult_table: tuple  # indices into elements

    @property
    def order(self) -> int:
        return len(self.elements)


def pgl2_elements(gf: Field):
    """Representatives of PGL2(gf): first nonzero entry normalized to 1."""
    out = []
    one = 1
    for a in (0, one):
        bs = gf.elements() if a else (one,)
        for b in bs:
            for c in gf.elements():
                for d in gf.elements():
                    if gf.mul(a, d) ^ gf.mul(b, c):
                        if a == 0 and b == one:
                            out.append([[0, one], [c, d]])
                        elif a == one:
                            out.append([[one, b], [c, d]])
    return out


def delta_stabilizer(p: Pencil, ext: Field) -> list:
    """Elements of PGL2(ext) permuting the projective roots of Delta."""
    a = p.half_discriminant()
    pts = set(_normalize_pt(ext, pt) for pt in poly.bf_projective_roots(a, p.gf, ext))
    if len(pts) != p.n:
        raise PreconditionError(f"{ext!r} does not split Delta")
    out = []
    for m2 in pgl2_elements(ext):
        image = set()
        for (l, u) in pts:
            il = ext.mul(m2[0][0], l) ^ ext.mul(m2[0][1], u)
            iu = ext.mul(m2[1][0], l) ^ ext.mul(m2[1][1], u)
            image.add(_normalize_pt(ext, (il, iu)))
        if image == pts:
            out.append(m2)
    return out


def _normalize_pt(gf: Field, pt: tuple) -> tuple:
    l, u = pt
    if l:
        return (1, gf.div(u, l))
    return (0, 1)


def _symmetric_power_matrix(gf: Field, m2: list, d: int) -> list:
    """Matrix of the degree-d substitution t0 -> m00 t0 + m01 t1,
    t1 -> m10 t0 + m11 t1 on the monomial basis t0^(d-i) t1^i."""
    l0 = [m2[0][0], m2[0][1]]
    l1 = [m2[1][0], m2[1][1]]
    cols = []
    for i in range(d + 1):
        form = [1]
        for _ in range(d - i):
            form = poly.bf_mul(gf, form, l0)
        for _ in range(i):
            form = poly.bf_mul(gf, form, l1)
        cols.append(form)
    return [[cols[j][i] for j in range(d + 1)] for i in range(d + 1)]


def _scale_to_delta_invariant(gf: Field, a_form: list, m2: list):
    """mu with Delta(mu*M (t0,t1)) = Delta, or None with the scale defect."""
    n = len(a_form) - 1
    sub = poly.bf_substitute(gf, a_form, m2)
    c = None
    for x, y in zip(sub, a_form):
        if y:
            c = gf.div(x, y)
            break
    for x, y in zip(sub, a_form):
        if x != gf.mul(c, y):
            raise AssertionError("stabilizer element does not scale Delta")
    target = gf.inv(c)
    for mu in gf.nonzero_elements():
        if gf.pow(mu, n) == target:
            return mu
    return None


def aut_x(p: Pencil, ext: Field) -> AutXGroup:
    """The automorphism group of X = V(q0, q1) over ext, assembled as
    R x| G: R the pair automorphisms, G the stabilizer of the root divisor
    in PGL2(ext), each G element lifted to GL(E) acting on the radical
    subspace by the dual symmetric power and on the complement by the
    inverse symmetric power scaled by the determinant.

    Requires ext to split Delta and to kill the r-coset (X quasi-split over
    ext); a_n = 0 is healed internally by a GL(2) move, which changes
    neither X nor Aut(X).
    """
    emb = find_embedding(p.gf, ext)
    pe = p.map_field(emb)
    pe.require_regular()
    work, _ = pe.ensure_an_nonzero()
    algebra, nf = pair_algebra(work)
    gf = ext
    n, m = work.n, work.m

    rbar = algebra.from_d_coords(list(nf.r) + [0])
    s0 = algebra.solve_artin_schreier(rbar)
    if s0 is None:
        raise PreconditionError(
            "X is not quasi-split over this field; extend until the r-coset "
            "dies (see quasi_split_over)"
        )
    # frame with q o B0 in normal form with r = 0
    ms = phi_model_matrix(m, list(algebra.d_coords(s0))[: n - 1])
    b0 = mat_mul(gf, nf.basis.matrix(), inverse(gf, ms))
    b0_inv = inverse(gf, b0)
    a_form = list(work.half_discriminant())

    autos = automorphism_group(work)
    r_mats = [[list(row) for row in rep.matrix] for rep in autos]

    g_elements = delta_stabilizer(work, ext)
    lifts = []
    for m2 in g_elements:
        mu = _scale_to_delta_invariant(gf, a_form, m2)
        if mu is None:
            raise PreconditionError(
                "no scalar over this field makes the stabilizer element "
                "preserve Delta on the nose; extend the field"
            )
        sm = [[gf.mul(mu, x) for x in row] for row in m2]
        lift = _lift_one(gf, work, a_form, sm, b0, b0_inv, m, algebra)
        lifts.append(lift)

    # assemble all products r * lift and the multiplication table
    classes = []
    index = {}
    for rm in r_mats:
        for lm in lifts:
            g = mat_mul(gf, rm, lm)
            key = _projective_key(gf, g)
            if key not in index:
                index[key] = len(classes)
                classes.append(key)
    if len(classes) != len(r_mats) * len(lifts):
        raise AssertionError("semidirect product classes collide")
    table = []
    for k1 in classes:
        row = []
        g1 = [list(r) for r in k1]
        for k2 in classes:
            prod = mat_mul(gf, g1, [list(r) for r in k2])
            row.append(index[_projective_key(gf, prod)])
        table.append(tuple(row))
    return AutXGroup(
        ext,
        tuple(tuple(tuple(r) for r in g) for g in r_mats),
        tuple(tuple(tuple(r) for r in g) for g in g_elements),
        tuple(tuple(tuple(r) for r in g) for g in lifts),
        tuple(classes),
        tuple(table),
    )


def _lift_one(gf, work, a_form, sm, b0, b0_inv, m, algebra):
    """Lift one scaled stabilizer element to GL(E), exactly pair-compatible:
    q_{g(u_j)} o lift = q_{u_j}."""
    det = gf.mul(sm[0][0], sm[1][1]) ^ gf.mul(sm[0][1], sm[1][0])
    pw = _symmetric_power_matrix(gf, sm, m)
    h_w = [list(col) for col in zip(*pw)]  # dual action: transpose
    inv2 = [
        [gf.div(sm[1][1], det), gf.div(sm[0][1], det)],
        [gf.div(sm[1][0], det), gf.div(sm[0][0], det)],
    ]
    # the complement transforms by the inverse substitution, scaled by 1/det
    q_l = _symmetric_power_matrix(gf, inv2, m - 1)
    dinv = gf.inv(det)
    n = 2 * m + 1
    block = [[0] * n for _ in range(n)]
    for i in range(m + 1):
        for j in range(m + 1):
            block[i][j] = h_w[i][j]
    for i in range(m):
        for j in range(m):
            block[m + 1 + i][m + 1 + j] = gf.mul(dinv, q_l[i][j])
    lift = mat_mul(gf, mat_mul(gf, b0, block), b0_inv)

    moved = work.change_basis_gl2(sm)
    if moved.q0.transform(lift) == work.q0 and moved.q1.transform(lift) == work.q1:
        return lift
    # residual r-shift: correct by a unipotent of the shared Kronecker frame
    residual = Pencil(moved.q0.transform(lift), moved.q1.transform(lift))
    nf_res = extract_normal_form(residual)
    if list(nf_res.a) != a_form:
        raise AssertionError("lift changed the half-discriminant")
    nf_work = extract_normal_form(work)
    shift = [x ^ y for x, y in zip(nf_res.r, nf_work.r)]
    s = algebra.solve_artin_schreier(algebra.from_d_coords(shift + [0]))
    if s is None:
        raise AssertionError("residual r-coset of a lift is nontrivial")
    bmat = nf_res.basis.matrix()
    corr = mat_mul(
        gf,
        mat_mul(gf, bmat, phi_model_matrix(m, list(algebra.d_coords(s))[: n - 1])),
        inverse(gf, bmat),
    )
    lift = mat_mul(gf, lift, corr)
    if moved.q0.transform(lift) != work.q0 or moved.q1.transform(lift) != work.q1:
        raise AssertionError("lift verification failed after correction")
    return lift


def _projective_key(gf: Field, g: list) -> tuple:
    """Normalize a matrix modulo scalars: first nonzero entry becomes 1."""
    for row in g:
        for x in row:
            if x:
                inv = gf.inv(x)
                return tuple(
                    tuple(gf.mul(inv, y) for y in r) for r in g
                )
    raise ValueError("zero matrix has no projective class")


def apply_to_subspace(gf: Field, g: list, span) -> tuple:
    """Image of a row-span subspace under the matrix g, canonicalized."""
    return normalize_subspace(gf, [mat_vec(gf, g, list(v)) for v in span])
