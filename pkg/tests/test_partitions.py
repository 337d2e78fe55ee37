import pytest
from hypothesis import given, strategies as st

from truncweyl.partitions import (
    Partition,
    dominates,
    is_demazure_shape,
    partitions_of,
    xi_ab,
    xi_demazure,
    xi_family,
    xi_minus,
    xi_parts,
    xi_plus,
    xi_star,
)
from truncweyl.rootsys import build_root_system

ALL_UP_TO_12 = [x for n in range(13) for x in partitions_of(n)]
MULTI = [x for x in ALL_UP_TO_12 if len(x) >= 2]


def test_partition_normalisation():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    assert Partition() == () and Partition().size == 0
    assert str(Partition((2, 1, 1, 1))) == "(2,1^(3))"
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_partition_counts():
    assert [sum(1 for _ in partitions_of(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


@pytest.mark.parametrize("args, expected", [
    ((5, 4), (2, 1, 1, 1)), ((4, 3), (2, 1, 1)), ((6, 3), (2, 2, 2)), ((2, 5), (1, 1)), ((0, 3), ()),
])
def test_xi_parts(args, expected):
    assert xi_parts(*args) == expected


def test_xi_parts_infinite_and_errors():
    assert xi_parts(4, infinite=True) == (1, 1, 1, 1)
    with pytest.raises(ValueError):
        xi_parts(3, 0)
    with pytest.raises(ValueError):
        xi_parts(-1, 2)


def test_xi_family():
    b2 = build_root_system("B", 2)
    fam = {a.coords: p for a, p in xi_family(b2, (0, 3), 2).items()}
    assert fam[(0, 1)] == (2, 1) and fam[(1, 2)] == (2, 1)
    sl2 = build_root_system("A", 1)
    assert list(xi_family(sl2, (5,), 4).values()) == [(2, 1, 1, 1)]
    # N large: every partition is a column of ones
    for a, p in xi_family(b2, (1, 2), 10).items():
        assert p == (1,) * b2.eval_on_coroot((1, 2), a)


def test_xi_demazure():
    assert xi_demazure(2, 4) == (2, 2)
    assert xi_demazure(3, 2) == (2,)
    assert xi_demazure(1, 5) == (1,) * 5
    assert xi_demazure(2, 5) == (2, 2, 1)
    assert xi_demazure(2, 3, 2) == (3,)
    assert xi_demazure(2, 0) == ()
    with pytest.raises(ValueError):
        xi_demazure(0, 3)


@pytest.mark.parametrize("xi, plus, minus", [
    ((2, 1, 1, 1), (2, 2, 1), (2, 1)), ((1, 1), (2,), ()), ((3, 2, 1), (3, 3), (3, 1)), ((2, 2), (3, 1), ()),
])
def test_plus_minus(xi, plus, minus):
    assert xi_plus(Partition(xi)) == plus
    assert xi_minus(Partition(xi)) == minus


def test_plus_minus_need_two_parts():
    with pytest.raises(ValueError):
        xi_plus(Partition((3,)))
    with pytest.raises(ValueError):
        xi_minus(Partition())


def test_xi_star():
    assert xi_star(xi_ab(2, 3, 1)) == xi_ab(1, 3, 1)
    assert xi_star(Partition((4,))) == ()
    assert xi_star(Partition((2, 1, 1))) == (1, 1)


def test_demazure_shape():
    assert is_demazure_shape(Partition((2, 2, 2)), 2)
    assert not is_demazure_shape(Partition((2, 1, 1)), 2)
    assert is_demazure_shape(Partition((3,)), 5)
    assert is_demazure_shape(Partition(), 1)


@pytest.mark.parametrize("xi", MULTI)
def test_plus_minus_sizes(xi):
    assert xi_plus(xi).size == xi.size
    assert xi_minus(xi).size == xi.size - 2 * xi[-1]
    assert dominates(xi_plus(xi), xi) and xi_plus(xi) != xi


@pytest.mark.parametrize("xi", MULTI)
def test_plus_terminates(xi):
    seen = 0
    while len(xi) >= 2:
        xi = xi_plus(xi)
        seen += 1
        assert seen < 100
    assert len(xi) == 1


@given(st.integers(0, 60), st.integers(1, 15))
def test_xi_parts_balanced(a, n):
    xi = xi_parts(a, n)
    assert xi.size == a
    assert not xi or xi[0] - (xi[-1] if len(xi) == n else 0) <= 1


@pytest.mark.parametrize("xi", MULTI)
def test_flag_recursion_stays_admissible(xi):
    for level in range(xi[0], xi[0] + 3):
        if is_demazure_shape(xi, level):
            continue
        for child in (xi_plus(xi), xi_minus(xi)):
            assert not child or child[0] <= level
