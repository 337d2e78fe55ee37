import warnings
from fractions import Fraction

import pytest

from truncweyl.charring import SL2, graded_dim_series, tensor_decompose, total_dim
from truncweyl.cvengine import graded_char_cv
from truncweyl.fusion_oracle import (
    FusionWarning,
    annihilates_in_gr,
    evaluation_module,
    fusion_filtration,
    fusion_graded_char,
    parameter_independence_check,
    tensor_with_parameters,
)
from truncweyl.laurent import LaurentPoly
from truncweyl.partitions import partitions_of

SMALL = [x for n in range(8) for x in partitions_of(n)]


def test_evaluation_at_zero():
    m = evaluation_module(1, 0)
    assert m.dim == 2
    for k in (1, 2, 3):
        for gen in "efh":
            assert all(all(x == 0 for x in row) for row in m.action(gen, k))


def test_evaluation_eigenvalue():
    m = evaluation_module(2, 1)
    assert m.dim == 3
    for r in range(4):
        assert m.apply("h", r, m.cyclic_vector) == [2, 0, 0]


def test_trivial_module():
    m = evaluation_module(0, 7)
    assert m.dim == 1 and m.weight_of_basis == [0]


def test_tensor_leibniz():
    m = tensor_with_parameters([(1, 0), (1, 1)])
    assert m.dim == 4
    assert m.apply("h", 1, m.cyclic_vector)[0] == 1
    assert m.check_commutation() and m.h_is_diagonal() and m.is_cyclic()


def test_single_factor_is_evaluation_module():
    a, b = tensor_with_parameters([(3, 2)]), evaluation_module(3, 2)
    assert a.action("e", 2) == b.action("e", 2) and a.weight_of_basis == b.weight_of_basis
    assert evaluation_module(5, 0).is_cyclic()


def test_empty_and_repeated_parameters():
    with pytest.raises(ValueError):
        tensor_with_parameters([])
    with pytest.warns(FusionWarning):
        tensor_with_parameters([(1, 3), (1, 3)])
    with pytest.warns(FusionWarning):
        res = fusion_filtration([(1, 0), (1, 0)])
    assert not res.cyclic and res.span_dim == 3 and res.full_dim == 4


@pytest.mark.parametrize("factors", [[(2, 1), (1, 3)], [(1, Fraction(1, 2)), (2, Fraction(-2, 3)), (1, 4)]])
def test_commutation_with_rational_parameters(factors):
    assert tensor_with_parameters(factors).check_commutation(max_power=3)


def test_examples():
    assert fusion_graded_char([(1, 0), (1, 1)]) == graded_char_cv((1, 1))
    assert fusion_graded_char([(4, 9)]) == graded_char_cv((4,))
    g = fusion_graded_char([(2, 0), (1, 1), (1, 2), (1, 3)])
    assert graded_dim_series(g) == LaurentPoly.from_list([6, 4, 6, 6, 2])


@pytest.mark.parametrize("xi", SMALL)
def test_oracle_matches_recursion(xi):
    res = fusion_filtration(list(zip(xi, range(len(xi)))))
    assert res.cyclic
    assert res.character == graded_char_cv(xi)
    assert total_dim(res.character) == res.full_dim


@pytest.mark.parametrize("xi", [x for x in SMALL if len(x) >= 2 and x.size <= 6])
def test_ungraded_is_tensor_product(xi):
    ungraded = {(xi[0],): 1}
    for part in xi[1:]:
        nxt = {}
        for w, c in ungraded.items():
            for u, d in tensor_decompose(SL2, w, (part,)).items():
                nxt[tuple(u)] = nxt.get(tuple(u), 0) + c * d
        ungraded = nxt
    got = fusion_graded_char(list(zip(xi, range(len(xi))))).ungraded()
    assert {tuple(k): v for k, v in got.items()} == ungraded


@pytest.mark.parametrize("n", range(1, 6))
def test_truncation_kills_f_t_n(n):
    factors = [(1, a) for a in range(n)]
    assert annihilates_in_gr(factors, "f", n)
    assert annihilates_in_gr(factors, "f", n + 1)
    if n > 1:
        assert not annihilates_in_gr(factors, "f", 1)


def test_independence_examples():
    assert parameter_independence_check((1, 1), [(0, 1), (0, 2), (3, 5)])
    assert parameter_independence_check((2, 2, 1), [(0, 1, 2), (0, 1, -1)])
    assert parameter_independence_check((3,), [(4,)])
    with pytest.raises(ValueError):
        parameter_independence_check((1, 1), [(0, 0)])
    with pytest.raises(ValueError):
        parameter_independence_check((1, 1), [(0, 1, 2)])
    with pytest.raises(ValueError):
        parameter_independence_check((1, 1), [])


def test_no_warning_for_distinct_parameters():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        fusion_graded_char([(1, 0), (1, 5)])
