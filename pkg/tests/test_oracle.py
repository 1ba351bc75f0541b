from hypothesis import given, settings, strategies as st
import pytest

from weylext.oracle import (
    DualWeylModule,
    is_nabla_simple,
    oracle_hom_dim,
    oracle_hom_to_simple,
    simple_dim,
)
from weylext.params import FieldParams

P3 = FieldParams(3, 3)


def matmul(a, b, mod):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) % mod for j in range(n)] for i in range(n)]


def test_natural_module():
    mod = DualWeylModule(1, P3)
    assert mod.matrix("F", 1) == [[0, 0], [1, 0]]
    assert mod.matrix("E", 1) == [[0, 1], [0, 0]]


def test_cube_spans_submodule():
    mod = DualWeylModule(3, P3)
    assert mod.f_coeff(0, 1) == 0  # x^3 -> 3 x^2 y
    assert mod.e_coeff(3, 1) == 0
    assert mod.simple_basis() == [0, 3]


def test_hom_examples():
    assert oracle_hom_dim(3, 1, P3) == 1
    assert oracle_hom_dim(1, 3, P3) == 0
    for c in range(12):
        assert oracle_hom_dim(c, c, P3) == 1
    assert oracle_hom_dim(4, 1, P3) == 0  # parity


def test_simple_examples():
    assert is_nabla_simple(2, P3)
    assert not is_nabla_simple(3, P3)
    assert is_nabla_simple(8, P3)
    assert simple_dim(3, P3) == 2


@pytest.mark.parametrize("params", [FieldParams(2, 2), FieldParams(3, 3), FieldParams(5, 5), FieldParams(0, 3), FieldParams(0, 4)])
def test_divided_power_composition(params):
    for c in range(21):
        mod = DualWeylModule(c, params)
        P = mod.coeffs.modulus
        for gen in ("E", "F"):
            for a in range(1, c + 1):
                for b in range(1, c + 1 - a):
                    lhs = matmul(mod.matrix(gen, a), mod.matrix(gen, b), P)
                    k = mod.coeffs.binom(a + b, a)
                    rhs = [[k * x % P for x in row] for row in mod.matrix(gen, a + b)]
                    assert lhs == rhs, (params, c, gen, a, b)


@pytest.mark.parametrize("params", [FieldParams(2, 2), FieldParams(3, 3), FieldParams(0, 3)])
def test_socle_dimension_matches_digits(params):
    for c in range(40):
        assert len(DualWeylModule(c, params).simple_basis()) == simple_dim(c, params)
        assert oracle_hom_to_simple(c, c, params) == int(is_nabla_simple(c, params))


def test_quantum_mixed_characteristic_refused():
    with pytest.raises(NotImplementedError):
        oracle_hom_dim(3, 1, FieldParams(3, 2))


def test_limits():
    with pytest.raises(ValueError):
        DualWeylModule(-1, P3)
    with pytest.raises(ValueError):
        DualWeylModule(20, P3, limit=10)


def test_json_dump():
    data = DualWeylModule(2, P3).to_json()
    assert data["F"]["1"] == [[0, 0, 0], [2, 0, 0], [0, 1, 0]]
    assert data["modulus"] == 3


@settings(max_examples=40)
@given(st.integers(0, 30), st.integers(0, 30), st.sampled_from([FieldParams(2, 2), FieldParams(3, 3), FieldParams(0, 5)]))
def test_hom_is_at_most_one_and_needs_dominance(c, c2, params):
    dim = oracle_hom_dim(c, c2, params)
    assert dim <= 1
    if c2 > c:
        assert dim == 0
