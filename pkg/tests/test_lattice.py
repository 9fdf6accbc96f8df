from fractions import Fraction

import pytest

import qpencil.poly as poly
from qpencil.autos import reflections
from qpencil.errors import PreconditionError
from qpencil.field import GF
from qpencil.geometry import Generator, enumerate_generators
from qpencil.lattice import (
    build_lattice,
    cartan_d,
    intersection_number,
    lattice_for,
    pairing_value,
)
from qpencil.normalform import realize


def det_int(m):
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    out = Fraction(1)
    for c in range(n):
        sel = next((i for i in range(c, n) if a[i][c] != 0), None)
        if sel is None:
            return 0
        if sel != c:
            a[c], a[sel] = a[sel], a[c]
            out = -out
        out *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return int(out)


def test_pairing_values():
    assert pairing_value(-1) == 0
    assert pairing_value(0) == 1
    assert pairing_value(1) == -1
    assert pairing_value(2) == 2
    assert pairing_value(3) == -2
    # consistency of (L_I - L_J)^2 = 2 (-1)^(m-1) when dim overlap = m-3
    for m in (2, 3, 4, 5):
        lhs = 2 * pairing_value(m - 1) - 2 * pairing_value(m - 3)
        assert lhs == 2 * (-1) ** (m - 1)


def test_cartan_d_shape():
    c5 = cartan_d(2)
    assert len(c5) == 5
    assert all(c5[i][i] == 2 for i in range(5))
    # D-diagram: one node of degree 3, two of degree 1 at the fork
    degs = sorted(sum(1 for j in range(5) if i != j and c5[i][j] == -1)
                  for i in range(5))
    assert degs == [1, 1, 1, 2, 3]
    assert det_int(c5) == 4  # discriminant of a D lattice
    assert det_int(cartan_d(3)) == 4


def test_intersection_numbers_m2(g2, g16):
    dp = realize(g2, [0, 1, 1, 1, 1, 1], [0] * 4)
    gens = enumerate_generators(dp, g16)
    assert intersection_number(gens[0], gens[0], 2) == -1
    values = sorted(
        intersection_number(gens[0], g, 2) for g in gens[1:]
    )
    assert values == [0] * 10 + [1] * 5  # disjoint or one point
    other = Generator(GF(1), ((1, 0, 0),))
    with pytest.raises(PreconditionError):
        intersection_number(gens[0], other, 2)


def test_lattice_m2(g2, g16):
    dp = realize(g2, [0, 1, 1, 1, 1, 1], [0] * 4)
    lat = lattice_for(dp, g16, reflections(dp, g16))
    assert lat.rank == 6
    # classical del Pezzo degree-4 shape
    assert [list(r) for r in lat.gram] == [
        [1, 0, 0, 0, 0, 0],
        [0, -1, 0, 0, 0, 0],
        [0, 0, -1, 0, 0, 0],
        [0, 0, 0, -1, 0, 0],
        [0, 0, 0, 0, -1, 0],
        [0, 0, 0, 0, 0, -1],
    ]
    assert lat.lam_empty_in_e == (2, -1, -1, -1, -1, -1)  # the conic class
    neg = [[-x for x in row] for row in cartan_d(2)]
    assert [list(r) for r in lat.gram_alpha] == neg
    assert abs(det_int([list(r) for r in lat.gram])) == 1
    assert abs(det_int([list(r) for r in lat.gram_alpha])) == 4
    # K_X = -3 e_0 + e_1 + ... + e_5 has square 4
    k = [-3, 1, 1, 1, 1, 1]
    k2 = sum(k[i] * lat.gram[i][j] * k[j] for i in range(6) for j in range(6))
    assert k2 == 4


def test_lattice_m3(g8):
    f = [1]
    for root in range(7):
        f = poly.mul(g8, f, [root, 1])
    p = realize(g8, f, [0] * 6)
    lat = lattice_for(p, g8, reflections(p, g8))
    assert lat.rank == 8
    assert [list(r) for r in lat.gram_alpha] == cartan_d(3)
    assert abs(det_int([list(r) for r in lat.gram_alpha])) == 4
    assert abs(det_int([list(r) for r in lat.gram])) == 4
    # the generator class is genuinely non-integral on the e-basis here
    assert lat.lam_empty_in_e is None


def test_lattice_eta_orthogonality(g2, g16):
    dp = realize(g2, [0, 1, 1, 1, 1, 1], [0] * 4)
    lat = lattice_for(dp, g16, reflections(dp, g16))
    pres = [list(r) for r in lat.presentation_gram]

    def pair(x, y):
        return sum(
            x[i] * pres[i][j] * y[j]
            for i in range(len(x))
            for j in range(len(y))
        )

    for alpha in lat.root_basis:
        assert pair(list(alpha), list(lat.eta_power)) == 0
    assert pair(list(lat.eta_power), list(lat.eta_power)) == 4
    assert pair(list(lat.eta_power), list(lat.lam_empty)) == 1


def test_build_lattice_input_validation(g2, g16):
    dp = realize(g2, [0, 1, 1, 1, 1, 1], [0] * 4)
    gens = enumerate_generators(dp, g16)
    with pytest.raises(PreconditionError):
        build_lattice(gens, gens[0], gens[1:3], 2)
