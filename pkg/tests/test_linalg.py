import random

import pytest

from qpencil.field import GF
from qpencil.linalg import (
    det,
    gf2_echelon,
    gf2_reduce,
    gf2_solve,
    identity,
    intersect_dim,
    inverse,
    mat_mul,
    mat_vec,
    normalize_subspace,
    nullspace,
    rank,
    rref,
    solve,
)


def random_matrix(gf, rows, cols, rng):
    return [[rng.randrange(gf.order) for _ in range(cols)] for _ in range(rows)]


def test_rref_and_rank(g4):
    m = [[1, 2, 3], [2, 3, 1], [3, 1, 2]]
    r, pivots = rref(g4, m)
    assert rank(g4, m) == len(pivots)
    for i, c in enumerate(pivots):
        assert r[i][c] == 1


def test_solve_and_nullspace_random():
    rng = random.Random(42)
    for gf in (GF(1), GF(2), GF(3)):
        for _ in range(30):
            a = random_matrix(gf, 4, 5, rng)
            x = [rng.randrange(gf.order) for _ in range(5)]
            b = mat_vec(gf, a, x)
            got = solve(gf, a, b)
            assert got is not None
            assert mat_vec(gf, a, got) == b
            for v in nullspace(gf, a):
                assert mat_vec(gf, a, v) == [0, 0, 0, 0]
            assert len(nullspace(gf, a)) == 5 - rank(gf, a)


def test_solve_inconsistent(g2):
    assert solve(g2, [[1, 0], [1, 0]], [1, 0]) is None


def test_inverse(g8):
    rng = random.Random(7)
    found = 0
    while found < 10:
        a = random_matrix(g8, 4, 4, rng)
        if rank(g8, a) < 4:
            continue
        found += 1
        inv = inverse(g8, a)
        assert mat_mul(g8, a, inv) == identity(4)
    with pytest.raises(ValueError):
        inverse(g8, [[0, 0], [0, 0]])


def test_det_multiplicative(g4):
    rng = random.Random(3)
    for _ in range(20):
        a = random_matrix(g4, 3, 3, rng)
        b = random_matrix(g4, 3, 3, rng)
        assert det(g4, mat_mul(g4, a, b)) == g4.mul(det(g4, a), det(g4, b))
    assert det(g4, identity(3)) == 1


def test_subspace_utilities(g2):
    s1 = normalize_subspace(g2, [[1, 1, 0], [0, 1, 1]])
    s2 = normalize_subspace(g2, [[1, 0, 1], [0, 1, 1]])
    assert s1 == s2  # same span, canonical form
    assert intersect_dim(g2, s1, ((1, 0, 1),)) == 1
    assert intersect_dim(g2, ((1, 0, 0),), ((0, 1, 0),)) == 0


def test_gf2_bitpacked():
    basis = gf2_echelon([0b1100, 0b0110, 0b1010, 0b0001])
    assert len(basis) == 3
    assert gf2_reduce(0b1100, basis) == 0
    assert gf2_reduce(0b1000, basis) != 0
    cols = [0b011, 0b101, 0b110]
    combo = gf2_solve(cols, 0b000)
    assert combo == 0
    combo = gf2_solve(cols, 0b110)
    acc = 0
    for j, c in enumerate(cols):
        if (combo >> j) & 1:
            acc ^= c
    assert acc == 0b110
    assert gf2_solve([0b01, 0b01], 0b10) is None
