from fractions import Fraction
from itertools import combinations

import pytest

from liepoly.lie import (
    AlgebraError, AlgebraSpec, E, basis, bracket, cartan_and_positive, coroots, in_algebra,
    parse_algebra, weight_coordinates,
)
from liepoly.linalg import span_rank


@pytest.mark.parametrize("family,n,dim", [
    ("sp", 2, 10), ("sp", 3, 21), ("sl", 2, 3), ("sl", 3, 8), ("so_even", 2, 6), ("so_even", 3, 15),
    ("so_odd", 2, 10), ("so_odd", 3, 21), ("gl", 3, 9),
])
def test_basis_dimension(family, n, dim):
    b = basis(AlgebraSpec(family, n))
    assert len(b) == dim
    assert span_rank([x.flatten() for x in b]) == dim


def test_bracket_examples():
    assert bracket(E(1, 2, 2), E(2, 1, 2)) == E(1, 1, 2) - E(2, 2, 2)
    a = E(1, 2, 4) - E(4, 3, 4)
    assert bracket(a, a).is_zero()
    b = E(2, 1, 4) - E(3, 4, 4)
    expected = (E(1, 1, 4) - E(3, 3, 4)) - (E(2, 2, 4) - E(4, 4, 4))
    assert bracket(a, b) == expected


def test_bracket_size_mismatch():
    with pytest.raises(AlgebraError):
        bracket(E(1, 1, 2), E(1, 1, 3))


@pytest.mark.parametrize("family,n", [("sp", 2), ("so_even", 3), ("so_odd", 2), ("sl", 3)])
def test_basis_closed_under_bracket(family, n):
    spec = AlgebraSpec(family, n)
    for a, b in combinations(basis(spec), 2):
        assert in_algebra(spec, bracket(a, b))


def test_positive_sets():
    _, pos = cartan_and_positive(AlgebraSpec("sp", 2))
    expected = [E(1, 2, 4) - E(4, 3, 4), E(1, 4, 4) + E(2, 3, 4), E(1, 3, 4), E(2, 4, 4)]
    assert set(pos) == set(expected)
    _, pos = cartan_and_positive(AlgebraSpec("sl", 3))
    assert set(pos) == {E(1, 2, 3), E(1, 3, 3), E(2, 3, 3)}
    _, pos = cartan_and_positive(AlgebraSpec("so_odd", 2))
    assert len(pos) == 4


@pytest.mark.parametrize("family,n", [("sp", 3), ("so_even", 3), ("so_odd", 3), ("sl", 4)])
def test_cartan_commutes_and_roots_are_eigenvectors(family, n):
    spec = AlgebraSpec(family, n)
    cartan, pos = cartan_and_positive(spec)
    for a, b in combinations(cartan, 2):
        assert bracket(a, b).is_zero()
    for e in pos:
        assert in_algebra(spec, e)
        (key, c0), *_ = sorted(e.entries.items())
        for h in cartan:
            br = bracket(h, e)
            scalar = br.entries.get(key, Fraction(0)) / c0
            assert br == e.scale(scalar)


def test_coroots_lie_in_cartan():
    for family, n in [("sp", 2), ("so_even", 3), ("so_odd", 2)]:
        spec = AlgebraSpec(family, n)
        assert len(coroots(spec)) == spec.rank
        assert all(in_algebra(spec, h) for h in coroots(spec))


def test_weight_coordinates():
    spec = AlgebraSpec("sp", 2)
    assert weight_coordinates(spec, [0, 0]).coords == (0, 0)
    assert weight_coordinates(spec, {1: -3, 2: 2}).coords == (-3, 2)
    with pytest.raises(AlgebraError):
        weight_coordinates(spec, {1: 0})
    with pytest.raises(AlgebraError):
        weight_coordinates(spec, {1: 0, 2: 0, 3: 1})


def test_parse_algebra():
    assert parse_algebra("sp:2") == AlgebraSpec("sp", 2)
    assert parse_algebra("so:4") == AlgebraSpec("so_even", 2)
    assert parse_algebra("so:5") == AlgebraSpec("so_odd", 2)
    assert parse_algebra("so:2n+1", 3) == AlgebraSpec("so_odd", 3)
    assert parse_algebra("sl:3").N == 3
    for bad in ("e8:1", "sp", "sp:0"):
        with pytest.raises(AlgebraError):
            parse_algebra(bad)
