"""Independent brute-force oracles used by the tests.

Everything here recomputes results by definition-level enumeration
(perfect matchings, exhaustive subsets, full subgroup enumeration) and
never calls the production code paths it is checking.
"""

import itertools


def pfaffian_by_matchings(gf, gram):
    """Sum over perfect matchings of the product of matched entries
    (characteristic 2: no signs)."""
    n = len(gram)
    if n % 2:
        raise ValueError("odd size")
    idx = list(range(n))

    def rec(remaining):
        if not remaining:
            return 1
        first = remaining[0]
        acc = 0
        for k in range(1, len(remaining)):
            j = remaining[k]
            if gram[first][j]:
                rest = remaining[1:k] + remaining[k + 1 :]
                acc ^= gf.mul(gram[first][j], rec(rest))
        return acc

    return rec(idx)


def polar_by_definition(q, v, w):
    """b(v, w) = q(v+w) + q(v) + q(w)."""
    s = [x ^ y for x, y in zip(v, w)]
    return q(s) ^ q(v) ^ q(w)


def wp_plus_constants(algebra):
    """The set k + wp(A) by full enumeration (desk scale only)."""
    out = set()
    coords = [range(algebra.gf.order)] * algebra.n
    for c in itertools.product(*coords):
        w = algebra.artin_schreier(algebra.element(list(c)))
        for const in algebra.gf.elements():
            out.add(algebra.add(w, algebra.constant(const)))
    return out


def all_subspaces(gf, n, dim):
    """All dim-dimensional subspaces of gf^n as canonical rref tuples."""
    from qpencil.linalg import normalize_subspace, rank

    seen = set()
    vectors = [list(v) for v in itertools.product(gf.elements(), repeat=n)]
    nonzero = [v for v in vectors if any(v)]
    for combo in itertools.combinations(nonzero, dim):
        mat = [list(v) for v in combo]
        if rank(gf, mat) != dim:
            continue
        seen.add(normalize_subspace(gf, mat))
    return seen


def gl_matrices(gf, n):
    from qpencil.linalg import rank

    out = []
    for entries in itertools.product(gf.elements(), repeat=n * n):
        m = [list(entries[i * n : (i + 1) * n]) for i in range(n)]
        if rank(gf, m) == n:
            out.append(m)
    return out
