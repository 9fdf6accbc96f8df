"""Dense exact linear algebra over GF(2^k) contexts.

Vectors are lists of ints, matrices are lists of row lists.  Pivoting is
always on the lowest-index column and free variables are set to zero, so
every routine is deterministic.  A bit-packed GF(2) toolkit for subspace
work inside etale algebras lives at the bottom.
"""

from __future__ import annotations

from .field import Field


def zeros(r: int, c: int) -> list:
    return [[0] * c for _ in range(r)]


def identity(n: int) -> list:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(a: list) -> list:
    return [list(col) for col in zip(*a)]


def mat_vec(gf: Field, a: list, v: list) -> list:
    mul = gf.mul
    out = []
    for row in a:
        acc = 0
        for x, y in zip(row, v):
            if x and y:
                acc ^= mul(x, y)
        out.append(acc)
    return out


def mat_mul(gf: Field, a: list, b: list) -> list:
    mul = gf.mul
    bt = transpose(b)
    out = []
    for row in a:
        orow = []
        for col in bt:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc ^= mul(x, y)
            orow.append(acc)
        out.append(orow)
    return out


def vec_dot(gf: Field, u: list, v: list) -> int:
    acc = 0
    mul = gf.mul
    for x, y in zip(u, v):
        if x and y:
            acc ^= mul(x, y)
    return acc


def vec_add(u: list, v: list) -> list:
    return [x ^ y for x, y in zip(u, v)]


def vec_scale(gf: Field, v: list, c: int) -> list:
    mul = gf.mul
    return [mul(c, x) for x in v]


def rref(gf: Field, a: list) -> tuple[list, list]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    m = [row[:] for row in a]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, nrows):
            if m[i][c]:
                sel = i
                break
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        inv = gf.inv(m[r][c])
        if inv != 1:
            m[r] = vec_scale(gf, m[r], inv)
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x ^ gf.mul(f, y) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(gf: Field, a: list) -> int:
    return len(rref(gf, a)[1])


def solve(gf: Field, a: list, b: list):
    """One solution of a x = b with free variables zero, or None."""
    if not a:
        return None
    aug = [row + [bv] for row, bv in zip(a, b)]
    m, pivots = rref(gf, aug)
    ncols = len(a[0])
    if ncols in pivots:
        return None  # pivot in the augmented column: inconsistent
    x = [0] * ncols
    for r, c in enumerate(pivots):
        x[c] = m[r][ncols]
    return x


def nullspace(gf: Field, a: list) -> list:
    """Deterministic basis of {x : a x = 0} (one vector per free column)."""
    if not a:
        return []
    m, pivots = rref(gf, a)
    ncols = len(a[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = m[r][fc]  # char 2: -x = x
        basis.append(v)
    return basis


def inverse(gf: Field, a: list) -> list:
    n = len(a)
    aug = [row[:] + identity(n)[i] for i, row in enumerate(a)]
    m, pivots = rref(gf, aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in m]


def det(gf: Field, a: list) -> int:
    """Determinant by elimination (row swaps are sign-free in char 2)."""
    n = len(a)
    m = [row[:] for row in a]
    d = 1
    for c in range(n):
        sel = None
        for i in range(c, n):
            if m[i][c]:
                sel = i
                break
        if sel is None:
            return 0
        m[c], m[sel] = m[sel], m[c]
        d = gf.mul(d, m[c][c])
        inv = gf.inv(m[c][c])
        for i in range(c + 1, n):
            if m[i][c]:
                f = gf.mul(m[i][c], inv)
                m[i] = [x ^ gf.mul(f, y) for x, y in zip(m[i], m[c])]
    return d


def normalize_subspace(gf: Field, vectors: list) -> tuple:
    """Canonical (rref, zero rows dropped) representation of a span."""
    m, pivots = rref(gf, vectors)
    return tuple(tuple(row) for row in m[: len(pivots)])


def intersect_dim(gf: Field, span_a, span_b) -> int:
    """Linear dimension of the intersection of two row spans."""
    ra = rank(gf, list(map(list, span_a)))
    rb = rank(gf, list(map(list, span_b)))
    rs = rank(gf, [list(r) for r in span_a] + [list(r) for r in span_b])
    return ra + rb - rs


# ---------------------------------------------------------------------------
# GF(2) linear algebra on bit-packed vectors (ints)


def gf2_echelon(rows: list[int]) -> list[int]:
    """Echelon basis (descending leading bits), fully reduced."""
    basis: list[int] = []
    for v in rows:
        for b in basis:
            if v ^ b < v:
                v ^= b
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    # back-substitute so each leading bit appears in exactly one row
    for i in range(len(basis)):
        for j in range(i):
            if basis[j] ^ basis[i] < basis[j]:
                basis[j] ^= basis[i]
    return basis


def gf2_reduce(v: int, basis: list[int]) -> int:
    for b in basis:
        if v ^ b < v:
            v ^= b
    return v


def gf2_solve(columns: list[int], target: int):
    """Bitmask x with xor of chosen columns = target, or None."""
    pivots: list[tuple[int, int]] = []  # (value, combo mask)
    for j, col in enumerate(columns):
        combo = 1 << j
        for val, cmb in pivots:
            if col ^ val < col:
                col ^= val
                combo ^= cmb
        if col:
            pivots.append((col, combo))
            pivots.sort(key=lambda t: -t[0])
    combo = 0
    for val, cmb in pivots:
        if target ^ val < target:
            target ^= val
            combo ^= cmb
    if target:
        return None
    return combo
