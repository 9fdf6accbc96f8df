"""Univariate and binary-homogeneous polynomial arithmetic over GF(2^k).

Univariate polynomials are lists of field elements indexed by degree with
trailing zeros trimmed (the zero polynomial is []).  Binary forms of
degree d are lists of length d+1, index i holding the coefficient of
t0^(d-i) t1^i.

Factorization is squarefree decomposition (char-2 aware: a vanishing
derivative means the polynomial is a square), then distinct-degree, then
equal-degree splitting by Artin-Schreier trace maps; the usual odd
characteristic power trick fails at p = 2.  Equal-degree splitting draws
candidates from a generator seeded by the input, so runs are reproducible.
"""

from __future__ import annotations

import random

from .field import Field, find_embedding


# ---------------------------------------------------------------------------
# basics


def trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def degree(c: list) -> int:
    return len(c) - 1


def is_zero(c: list) -> bool:
    return not c


def add(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = a[:]
    for i, x in enumerate(b):
        out[i] ^= x
    return trim(out)


def scale(gf: Field, a: list, c: int) -> list:
    if c == 0:
        return []
    mul = gf.mul
    return [mul(c, x) for x in a]


def mul(gf: Field, a: list, b: list) -> list:
    if not a or not b:
        return []
    fmul = gf.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] ^= fmul(x, y)
    return trim(out)


def monic(gf: Field, a: list) -> list:
    if not a:
        return []
    lead = a[-1]
    if lead == 1:
        return a[:]
    return scale(gf, a, gf.inv(lead))


def divmod_(gf: Field, a: list, b: list) -> tuple[list, list]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = a[:]
    q = [0] * max(0, len(a) - len(b) + 1)
    inv_lead = gf.inv(b[-1])
    db = degree(b)
    while len(r) - 1 >= db and r:
        d = len(r) - 1 - db
        coef = gf.mul(r[-1], inv_lead)
        q[d] = coef
        for i, x in enumerate(b):
            if x:
                r[d + i] ^= gf.mul(coef, x)
        trim(r)
    return trim(q), r


def mod(gf: Field, a: list, b: list) -> list:
    return divmod_(gf, a, b)[1]


def divexact(gf: Field, a: list, b: list) -> list:
    q, r = divmod_(gf, a, b)
    if r:
        raise ValueError("polynomial division is not exact")
    return q


def gcd(gf: Field, a: list, b: list) -> list:
    """Monic gcd; gcd(p, 0) = monic(p); both zero is an error."""
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, mod(gf, a, b)
    return monic(gf, a)


def extended_gcd(gf: Field, a: list, b: list) -> tuple[list, list, list]:
    """(g, u, v) with u*a + v*b = g monic."""
    r0, r1 = a[:], b[:]
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_(gf, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, add(s0, mul(gf, q, s1))
        t0, t1 = t1, add(t0, mul(gf, q, t1))
    if not r0:
        raise ValueError("gcd(0, 0) is undefined")
    c = gf.inv(r0[-1])
    return scale(gf, r0, c), scale(gf, s0, c), scale(gf, t0, c)


def derivative(gf: Field, a: list) -> list:
    """Formal derivative; in char 2 only odd-degree terms survive."""
    return trim([a[i] if i % 2 == 1 else 0 for i in range(1, len(a))])


def evaluate(gf: Field, a: list, x: int) -> int:
    r = 0
    mul_ = gf.mul
    for c in reversed(a):
        r = mul_(r, x) ^ c
    return r


def modpow(gf: Field, a: list, e: int, m: list) -> list:
    r = [1]
    a = mod(gf, a, m)
    while e:
        if e & 1:
            r = mod(gf, mul(gf, r, a), m)
        a = mod(gf, mul(gf, a, a), m)
        e >>= 1
    return r


def poly_sqrt(gf: Field, a: list) -> list:
    """Inverse of squaring: valid when all odd coefficients vanish."""
    out = []
    for i in range(0, len(a), 2):
        out.append(gf.sqrt(a[i]))
    for i in range(1, len(a), 2):
        if a[i]:
            raise ValueError("polynomial is not a square")
    return trim(out)


def is_separable(gf: Field, p: list) -> bool:
    """gcd(p, p') = 1, i.e. distinct roots in the algebraic closure."""
    if not p:
        raise ValueError("separability of the zero polynomial is undefined")
    d = derivative(gf, p)
    if not d:
        return degree(p) == 0
    return gcd(gf, p, d) == [1]


# ---------------------------------------------------------------------------
# factorization


def _seed_from(gf: Field, p: list, salt: int) -> int:
    s = salt
    for c in p:
        s = (s * 1315423911 + c + 7) % (1 << 61)
    return s ^ gf.modulus


def _distinct_degree(gf: Field, p: list) -> list[tuple[list, int]]:
    """Split a squarefree monic p into (product of irreducibles of degree d, d)."""
    out = []
    q = gf.order
    h = [0, 1]  # T
    v = p[:]
    d = 0
    while degree(v) > 0:
        d += 1
        if 2 * d > degree(v):
            out.append((v, degree(v)))
            break
        h = modpow(gf, h, q, v)
        g = gcd(gf, add(h, [0, 1]), v)
        if degree(g) > 0:
            out.append((g, d))
            v = divexact(gf, v, g)
            h = mod(gf, h, v)
    return out


def _equal_degree_split(gf: Field, p: list, d: int, rng: random.Random) -> list:
    """All monic irreducible factors of p, each of degree d (Artin-Schreier
    trace splitting in characteristic 2)."""
    if degree(p) == d:
        return [p]
    bits = gf.degree * d  # factors have 2^bits elements
    while True:
        h = [rng.randrange(gf.order) for _ in range(degree(p))]
        trim(h)
        if degree(h) < 1:
            continue
        # absolute trace map of h modulo p: h + h^2 + h^4 + ... (bits terms)
        tr = h[:]
        sq = h[:]
        for _ in range(bits - 1):
            sq = mod(gf, mul(gf, sq, sq), p)
            tr = add(tr, sq)
        g = gcd(gf, tr, p) if tr else []
        if g and 0 < degree(g) < degree(p):
            return _equal_degree_split(gf, g, d, rng) + _equal_degree_split(
                gf, divexact(gf, p, g), d, rng
            )


def _factor_squarefree(gf: Field, p: list, rng: random.Random) -> list[list]:
    out = []
    for part, d in _distinct_degree(gf, p):
        out.extend(_equal_degree_split(gf, part, d, rng))
    return out


def factor(gf: Field, p: list) -> list[tuple[list, int]]:
    """Irreducible factorization of monic(p), canonically sorted.

    Returns (factor, multiplicity) pairs; the product of factor^multiplicity
    equals monic(p) exactly.
    """
    if not p:
        raise ValueError("cannot factor the zero polynomial")
    if degree(p) < 1:
        raise ValueError("cannot factor a constant polynomial")
    rng = random.Random(_seed_from(gf, p, 0x5EED))
    work = monic(gf, p)
    found: dict[tuple, int] = {}

    def accumulate(q: list, outer_mult: int):
        if degree(q) == 0:
            return
        d = derivative(gf, q)
        if not d:
            accumulate(poly_sqrt(gf, q), 2 * outer_mult)
            return
        w = divexact(gf, q, gcd(gf, q, d))  # squarefree, odd-multiplicity part
        rest = q
        for f in _factor_squarefree(gf, w, rng):
            e = 0
            while True:
                qq, rr = divmod_(gf, rest, f)
                if rr:
                    break
                rest = qq
                e += 1
            key = tuple(f)
            found[key] = found.get(key, 0) + e * outer_mult
        accumulate(rest, outer_mult)

    accumulate(work, 1)
    out = [(list(k), m) for k, m in found.items()]
    out.sort(key=lambda fm: (len(fm[0]), fm[0]))
    return out


def roots(gf: Field, p: list) -> list[int]:
    """All roots in gf itself, by exhaustive scan."""
    if not p:
        raise ValueError("every element is a root of the zero polynomial")
    return [x for x in gf.elements() if evaluate(gf, p, x) == 0]


def roots_in(p: list, src: Field, ext: Field) -> list[int]:
    """All roots of p (coefficients in src) inside the extension ext."""
    emb = find_embedding(src, ext)
    return roots(ext, emb.map_poly(p))


# ---------------------------------------------------------------------------
# binary forms: homogeneous in (t0, t1), index i <-> t0^(d-i) t1^i


def bf_degree(c: list) -> int:
    return len(c) - 1


def bf_add(a: list, b: list) -> list:
    if len(a) != len(b):
        raise ValueError("binary forms of different degrees")
    return [x ^ y for x, y in zip(a, b)]


def bf_scale(gf: Field, a: list, c: int) -> list:
    mul_ = gf.mul
    return [mul_(c, x) for x in a]


def bf_mul(gf: Field, a: list, b: list) -> list:
    fmul = gf.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] ^= fmul(x, y)
    return out


def bf_eval(gf: Field, c: list, t0: int, t1: int) -> int:
    d = bf_degree(c)
    mul_ = gf.mul
    acc = 0
    p0 = [1]
    for _ in range(d):
        p0.append(mul_(p0[-1], t0))
    p1 = 1
    for i in range(d + 1):
        if c[i]:
            acc ^= mul_(c[i], mul_(p0[d - i], p1))
        p1 = mul_(p1, t1)
    return acc


def bf_dehomogenize_t0(c: list) -> list:
    """f(T) = form(1, T): the coefficient list reads off directly."""
    return trim(c[:])


def bf_dehomogenize_t1(c: list) -> list:
    """form(T, 1): the reversed coefficient list."""
    return trim(c[::-1])


def bf_substitute(gf: Field, c: list, m2: list) -> list:
    """Coefficients of form(m00*t0 + m01*t1, m10*t0 + m11*t1)."""
    d = bf_degree(c)
    l0 = [m2[0][0], m2[0][1]]
    l1 = [m2[1][0], m2[1][1]]
    pow0 = [[1]]
    pow1 = [[1]]
    for _ in range(d):
        pow0.append(bf_mul(gf, pow0[-1], l0))
        pow1.append(bf_mul(gf, pow1[-1], l1))
    out = [0] * (d + 1)
    for i in range(d + 1):
        if c[i]:
            term = bf_mul(gf, pow0[d - i], pow1[i])
            for j, v in enumerate(bf_scale(gf, term, c[i])):
                out[j] ^= v
    return out


def bf_is_separable(gf: Field, c: list) -> bool:
    """Distinct projective roots over the closure, the root at infinity
    included: the dehomogenization must be squarefree and t0^2 must not
    divide the form."""
    if all(x == 0 for x in c):
        return False
    f = bf_dehomogenize_t0(c)
    if bf_degree(c) - degree(f) > 1:
        return False  # [1:0] is a multiple root
    return is_separable(gf, f)


def bf_projective_roots(c: list, src: Field, ext: Field) -> list[tuple[int, int]]:
    """Normalized projective roots (t0, t1) of a nonzero form inside ext."""
    if all(x == 0 for x in c):
        raise ValueError("the zero form vanishes everywhere")
    emb = find_embedding(src, ext)
    ce = emb.map_poly(c)
    f = trim(ce[:])
    out = [(1, x) for x in roots(ext, f)]
    if bf_degree(c) - degree(f) >= 1:
        out.append((0, 1))
    return out
