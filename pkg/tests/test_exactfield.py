import cmath
import json
import pickle

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from curvekit.errors import ConductorOverflow, DivisionByZero, NotASubfield, NotRepresentable
from curvekit.exactfield import (
    common_conductor,
    const,
    cyclotomic_poly,
    elem_from_json,
    elem_to_json,
    field_create,
    format_elem,
    parse_scalar,
    root_of_unity,
    sqrt_small,
    zeta,
)

from strategies import cyclo_elems, elems_in, same_field_pairs


@pytest.mark.parametrize("n", list(range(1, 61)) + [105, 120])
def test_cyclotomic_polynomial_matches_sympy(n):
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_poly(n)) == [int(c) for c in expected]


def test_field_cache_and_degree():
    assert field_create(12) is field_create(12)
    assert field_create(15).degree == 8
    with pytest.raises(ValueError):
        field_create(0)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 7, 8, 12, 20, 24])
def test_roots_of_unity_have_exact_order(n):
    z = root_of_unity(n)
    assert z ** n == 1
    for k in range(1, n):
        if n % k == 0 and k < n:
            assert z ** k != 1


def test_zeta_in_larger_field():
    assert zeta(20, 4) == root_of_unity(4)
    assert zeta(20, 5, 3) == root_of_unity(5, 3)
    with pytest.raises(NotRepresentable):
        zeta(12, 5)


@pytest.mark.parametrize("n,value", [(2, 2), (3, 3), (5, 5)])
def test_small_square_roots(n, value):
    s = sqrt_small(None, n)
    assert s * s == value
    assert abs(s.to_complex() - value ** 0.5) < 1e-12
    with pytest.raises(NotRepresentable):
        sqrt_small(7, n)


def test_mixed_conductors_lift_to_lcm():
    x = root_of_unity(3) + root_of_unity(4)
    assert x.conductor == 12
    assert common_conductor(6, 4, 10) == 60
    assert root_of_unity(6) == -root_of_unity(3, 2)


def test_embedding_into_non_multiple_fails():
    with pytest.raises(NotASubfield):
        root_of_unity(5).embed(field_create(12))


def test_conductor_cap(monkeypatch):
    monkeypatch.setenv("CURVEKIT_CONDUCTOR_CAP", "100")
    with pytest.raises(ConductorOverflow):
        root_of_unity(11) + root_of_unity(13)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        root_of_unity(5) / field_create(5).zero()
    with pytest.raises(ZeroDivisionError):
        const(0).inverse()


@settings(max_examples=150)
@given(cyclo_elems().filter(bool))
def test_inverse(x):
    assert x * x.inverse() == 1
    assert x ** -2 * x ** 2 == 1


@settings(max_examples=150)
@given(same_field_pairs())
def test_complex_embedding_is_a_ring_map(xy):
    x, y = xy
    assert cmath.isclose((x * y).to_complex(), x.to_complex() * y.to_complex(), abs_tol=1e-6)
    assert cmath.isclose((x - y).to_complex(), x.to_complex() - y.to_complex(), abs_tol=1e-9)


@settings(max_examples=150)
@given(same_field_pairs())
def test_equality_and_hash_agree(xy):
    x, y = xy
    assert (x == y) == (x.key() == y.key())
    assert hash(x + y) == hash(y + x)


@settings(max_examples=100)
@given(cyclo_elems())
def test_json_and_pickle_round_trip(x):
    assert elem_from_json(json.loads(json.dumps(elem_to_json(x)))) == x
    assert pickle.loads(pickle.dumps(x)) == x


@settings(max_examples=100)
@given(st.sampled_from([4, 12, 20, 24]).flatmap(elems_in))
def test_format_is_faithful_numerically(x):
    """The printed text names a number close to the complex value."""
    text = format_elem(x)
    assert text
    if x.is_rational():
        assert parse_scalar(text) == x


@pytest.mark.parametrize(
    "text,expected",
    [("3", const(3)), ("-7/2", const(-7) / 2), ("i", root_of_unity(4)),
     ("-11i", -11 * root_of_unity(4)), ("2-3i", 2 - 3 * root_of_unity(4)), ("1/2+i", const(1) / 2 + root_of_unity(4))],
)
def test_parse_scalar(text, expected):
    assert parse_scalar(text) == expected
    assert parse_scalar(format_elem(expected)) == expected


def test_format_examples():
    i = root_of_unity(4)
    assert format_elem(-11 * i) == "-11i"
    assert format_elem(2 + 3 * i) == "2 + 3i"
    assert format_elem(sqrt_small(None, 5) + 1) == "1 + sqrt(5)"
    with pytest.raises(ValueError):
        parse_scalar("")
