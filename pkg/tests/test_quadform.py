import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import pfaffian_by_matchings, polar_by_definition
from qpencil.field import GF
from qpencil.quadform import (
    AlternatingForm,
    QuadraticForm,
    half_disc,
    is_totally_isotropic,
    is_totally_singular,
    pfaffian,
    pfaffian_vector,
)

FIELDS = [GF(1), GF(2)]


def qf(gf, n, table):
    return QuadraticForm.from_table(gf, n, table)


def random_form(gf, n, rng):
    return qf(
        gf, n,
        {(i, j): rng.randrange(gf.order) for i in range(n) for j in range(i, n)},
    )


def test_polar_examples(g2):
    q = qf(g2, 2, {(0, 1): 1})
    assert q.polar().gram == ((0, 1), (1, 0))
    q2 = qf(g2, 2, {(0, 0): 1})
    assert q2.polar().gram == ((0, 0), (0, 0))
    q3 = qf(g2, 3, {(0, 0): 1, (1, 1): 1, (0, 1): 1, (1, 2): 1})
    g = q3.polar().gram
    assert g[0][1] == 1 and g[1][2] == 1 and g[0][2] == 0


@settings(max_examples=100, deadline=None)
@given(
    st.sampled_from(FIELDS),
    st.integers(min_value=2, max_value=5),
    st.integers(min_value=0, max_value=2**32),
)
def test_polar_matches_definition(gf, n, seed):
    rng = random.Random(seed)
    q = random_form(gf, n, rng)
    b = q.polar()
    for _ in range(6):
        v = [rng.randrange(gf.order) for _ in range(n)]
        w = [rng.randrange(gf.order) for _ in range(n)]
        assert b(v, w) == polar_by_definition(q, v, w)
        assert b(v, w) == q.polar_pair(v, w)
        assert b(v, v) == 0
        c = rng.randrange(gf.order)
        assert q([gf.mul(c, x) for x in v]) == gf.mul(gf.mul(c, c), q(v))


def test_pfaffian_examples(g4):
    assert pfaffian(g4, []) == 1
    assert pfaffian(g4, [[0, 3], [3, 0]]) == 3
    with pytest.raises(ValueError):
        pfaffian(g4, [[0]])


def test_pfaffian_4x4_matching_formula(g4):
    rng = random.Random(5)
    for _ in range(30):
        vals = {}
        for i in range(4):
            for j in range(i + 1, 4):
                vals[(i, j)] = rng.randrange(4)
        gram = [[0] * 4 for _ in range(4)]
        for (i, j), c in vals.items():
            gram[i][j] = gram[j][i] = c
        expect = (
            g4.mul(vals[(0, 1)], vals[(2, 3)])
            ^ g4.mul(vals[(0, 2)], vals[(1, 3)])
            ^ g4.mul(vals[(0, 3)], vals[(1, 2)])
        )
        assert pfaffian(g4, gram) == expect
        assert pfaffian_by_matchings(g4, gram) == expect


def test_pfaffian_squares_to_det():
    from qpencil.linalg import det

    rng = random.Random(11)
    for gf in FIELDS:
        for n in (2, 4, 6, 8, 10):
            for _ in range(6):
                gram = [[0] * n for _ in range(n)]
                for i in range(n):
                    for j in range(i + 1, n):
                        c = rng.randrange(gf.order)
                        gram[i][j] = gram[j][i] = c
                pf = pfaffian(gf, gram)
                assert gf.mul(pf, pf) == det(gf, gram)
                assert pf == pfaffian_by_matchings(gf, gram)


def test_pfaffian_of_hyperbolic_sum(g2):
    n = 6
    gram = [[0] * n for _ in range(n)]
    for i in range(0, n, 2):
        gram[i][i + 1] = gram[i + 1][i] = 1
    assert pfaffian(g2, gram) == 1


def test_pfaffian_vector_n3(g4):
    rng = random.Random(2)
    for _ in range(20):
        b12, b13, b23 = (rng.randrange(4) for _ in range(3))
        gram = [[0, b12, b13], [b12, 0, b23], [b13, b23, 0]]
        assert pfaffian_vector(g4, gram) == [b23, b13, b12]
    assert pfaffian_vector(g4, [[0] * 3] * 3) == [0, 0, 0]
    with pytest.raises(ValueError):
        pfaffian_vector(g4, [[0, 0], [0, 0]])


def test_pfaffian_vector_kills_gram():
    from qpencil.linalg import mat_vec

    rng = random.Random(9)
    for gf in FIELDS:
        for n in (3, 5, 7):
            for _ in range(8):
                gram = [[0] * n for _ in range(n)]
                for i in range(n):
                    for j in range(i + 1, n):
                        c = rng.randrange(gf.order)
                        gram[i][j] = gram[j][i] = c
                omega = pfaffian_vector(gf, gram)
                assert mat_vec(gf, gram, omega) == [0] * n


def test_basic_singular_pair_radicals(g2):
    # b0 of the m=2 Kronecker shape: b0(w_i, v_j) = delta_{i(j+1)}
    n = 5
    gram0 = [[0] * n for _ in range(n)]
    for j in range(2):  # pairs w_{j+1} <-> v_j
        gram0[j + 1][3 + j] = gram0[3 + j][j + 1] = 1
    b0 = AlternatingForm(g2, n, tuple(tuple(r) for r in gram0))
    assert b0.corank() == 1
    assert pfaffian_vector(g2, gram0) == [1, 0, 0, 0, 0]  # spanned by w_0
    # b1: b1(w_i, v_j) = delta_{ij}; its radical is w_m
    gram1 = [[0] * n for _ in range(n)]
    for j in range(2):
        gram1[j][3 + j] = gram1[3 + j][j] = 1
    assert pfaffian_vector(g2, gram1) == [0, 0, 1, 0, 0]


def test_corank_and_radical(g2):
    zero = AlternatingForm(g2, 3, ((0, 0, 0),) * 3)
    assert zero.corank() == 3
    hyp = AlternatingForm(g2, 3, ((0, 1, 0), (1, 0, 0), (0, 0, 0)))
    assert hyp.corank() == 1
    assert hyp.radical_basis() == [[0, 0, 1]]


def test_half_disc_explicit_n3():
    rng = random.Random(1)
    for gf in FIELDS:
        for _ in range(200):
            t = {
                (i, j): rng.randrange(gf.order)
                for i in range(3)
                for j in range(i, 3)
            }
            q = qf(gf, 3, t)
            mul = gf.mul
            explicit = (
                mul(t[(0, 0)], mul(t[(1, 2)], t[(1, 2)]))
                ^ mul(t[(1, 1)], mul(t[(0, 2)], t[(0, 2)]))
                ^ mul(t[(2, 2)], mul(t[(0, 1)], t[(0, 1)]))
                ^ mul(t[(0, 1)], mul(t[(1, 2)], t[(0, 2)]))
            )
            assert half_disc(q) == explicit


def test_half_disc_examples(g2):
    q = qf(g2, 3, {(0, 1): 1, (2, 2): 1})
    assert half_disc(q) == 1
    totally_singular = qf(g2, 3, {(0, 0): 1, (1, 1): 1})
    assert half_disc(totally_singular) == 0
    with pytest.raises(ValueError):
        half_disc(qf(g2, 2, {(0, 1): 1}))


def test_half_disc_detects_smoothness(g2, g4):
    # nonzero half-discriminant <=> no singular point on the quadric
    from qpencil.geometry import proj_points

    rng = random.Random(77)
    for gf, maxdeg in ((g2, 4), (g4, 2)):
        for _ in range(40):
            q = random_form(gf, 3, rng)
            if q.is_zero():
                continue
            hd = half_disc(q)
            singular = False
            for d in range(1, maxdeg + 1):
                ext = GF(gf.degree * d)
                from qpencil.field import find_embedding

                qe = q.map_field(find_embedding(gf, ext))
                gram = qe.polar().gram
                from qpencil.linalg import mat_vec

                for x in proj_points(ext, 3):
                    if qe(x) == 0 and mat_vec(ext, [list(r) for r in gram], x) == [0] * 3:
                        singular = True
                        break
                if singular:
                    break
            assert (hd != 0) == (not singular)


def test_totally_singular_vs_isotropic(g2):
    q_hyp = qf(g2, 2, {(0, 1): 1})
    assert is_totally_isotropic(q_hyp, [[1, 0]])
    q_sq = qf(g2, 2, {(0, 0): 1})
    assert is_totally_singular(q_sq, [[1, 0]])
    assert not is_totally_isotropic(q_sq, [[1, 0]])
    with pytest.raises(ValueError):
        is_totally_singular(q_sq, [[1, 0], [1, 0]])


def test_normal_form_w_span_is_isotropic(g2):
    from qpencil.normalform import realize

    p = realize(g2, [0, 1, 1, 1, 1, 1], [0] * 4)
    w_span = [[1 if t == i else 0 for t in range(5)] for i in range(3)]
    assert is_totally_singular(p.q0, w_span)
    assert is_totally_singular(p.q1, w_span)
    assert not is_totally_isotropic(p.q0, w_span)  # q0(w_1) = a_2 = 1
    v_span = [[1 if t == 3 + i else 0 for t in range(5)] for i in range(2)]
    assert is_totally_isotropic(p.q0, v_span)  # r = 0 normal form
    assert is_totally_isotropic(p.q1, v_span)


def test_transform_composition(g4):
    rng = random.Random(8)
    from oracles import gl_matrices
    from qpencil.linalg import mat_mul, mat_vec

    gls = gl_matrices(g4, 2)
    q2 = random_form(g4, 2, rng)
    for a in gls[:8]:
        for b in gls[:8]:
            assert q2.transform(mat_mul(g4, a, b)) == q2.transform(a).transform(b)
    for g in gls[:20]:
        qg = q2.transform(g)
        for v in ([0, 1], [1, 0], [1, 1], [2, 3]):
            assert qg(v) == q2(mat_vec(g4, g, v))
