import json

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from curvekit.binforms import BinaryForm, Mat2, act_gl2, form_mul, is_squarefree, proportional, resultant, squarefree_witness
from curvekit.errors import SingularMatrix, ZeroForm
from curvekit.exactfield import const, root_of_unity

from strategies import elems_in, forms, invertible_mats

I = root_of_unity(4)
X, Y = sympy.symbols("X Y")


def to_sympy(f: BinaryForm):
    def scalar(c):
        c = c.embed(4) if c.conductor != 4 else c
        re, im = c.coeffs
        return sympy.Rational(re.numerator, re.denominator) + sympy.I * sympy.Rational(im.numerator, im.denominator)

    return sum(scalar(c) * X ** (f.degree - k) * Y ** k for k, c in enumerate(f.coeffs))


def test_coefficient_convention():
    f = BinaryForm.monomial(3, 1, 5)
    assert f.degree == 4 and f.coeffs[1] == 5
    assert f.evaluate(const(2), const(1)) == 40
    assert BinaryForm.from_terms(2, {1: 1}).pretty() == "XY"


@settings(max_examples=60)
@given(forms(), invertible_mats(), invertible_mats())
def test_action_is_a_right_action(f, m, n):
    assert act_gl2(n, act_gl2(m, f)) == act_gl2(m @ n, f)
    assert act_gl2(Mat2.identity(), f) == f


@settings(max_examples=60)
@given(forms(), invertible_mats(), elems_in(4), elems_in(4))
def test_action_is_substitution(f, m, x, y):
    g = act_gl2(m, f)
    assert g.evaluate(x, y) == f.evaluate(m.a * x + m.b * y, m.c * x + m.d * y)


@settings(max_examples=60)
@given(forms(max_degree=4), forms(max_degree=4))
def test_product_matches_sympy(f, g):
    assert sympy.expand(to_sympy(form_mul(f, g)) - to_sympy(f) * to_sympy(g)) == 0
    assert f * g == g * f


def sylvester(f: BinaryForm, g: BinaryForm):
    m, n = f.degree, g.degree
    fc = [to_sympy(BinaryForm([c])) for c in f.coeffs]
    gc = [to_sympy(BinaryForm([c])) for c in g.coeffs]
    rows = [[0] * r + fc + [0] * (n - 1 - r) for r in range(n)]
    rows += [[0] * r + gc + [0] * (m - 1 - r) for r in range(m)]
    return sympy.Matrix(rows).det()


@settings(max_examples=80)
@given(forms(max_degree=5), forms(max_degree=5))
def test_resultant_matches_sympy(f, g):
    """Exact against a sympy Sylvester determinant; up to sign against sympy.resultant,
    whose subresultant sign is unreliable over Q(i)."""
    assume(not f.is_zero() and not g.is_zero())
    ours = to_sympy(BinaryForm([resultant(f, g)]))
    assert sympy.expand(ours - sylvester(f, g)) == 0
    if f.coeffs[0] and g.coeffs[0]:
        other = sympy.resultant(to_sympy(f).subs(Y, 1), to_sympy(g).subs(Y, 1), X)
        assert sympy.expand(ours**2 - other**2) == 0


def test_resultant_detects_common_roots():
    f = BinaryForm.from_terms(2, {0: 1, 2: -1})  # X^2 - Y^2
    g = BinaryForm.from_terms(2, {0: 1, 1: -1})  # X^2 - XY
    h = BinaryForm.from_terms(2, {0: 1, 2: 1})
    assert resultant(f, g) == 0
    assert resultant(f, h) == 4
    # common root at infinity
    assert resultant(BinaryForm.monomial(1, 1), BinaryForm.monomial(0, 2)) == 0
    with pytest.raises(ZeroForm):
        resultant(f, BinaryForm([0, 0, 0]))


@settings(max_examples=60)
@given(forms(max_degree=4), st.integers(2, 3))
def test_squares_are_not_squarefree(f, e):
    assume(not f.is_zero() and f.degree >= 1)
    assert not is_squarefree(f ** e)


def test_squarefree_examples():
    assert is_squarefree(BinaryForm.from_terms(5, {0: 1, 5: 1}))
    assert squarefree_witness(BinaryForm.monomial(3, 2)) == "root (1:0) of multiplicity 2"
    assert squarefree_witness(BinaryForm.monomial(3, 1)) == "root (0:1) of multiplicity 3"
    xy = BinaryForm.monomial(1, 1)
    assert is_squarefree(xy) and not is_squarefree(xy * xy)
    assert not is_squarefree(BinaryForm.from_terms(4, {0: 1, 2: 2, 4: 1}))


def test_proportional():
    f = BinaryForm([1, I, 3])
    assert proportional(f * (2 * I), f) == 2 * I
    assert proportional(f, BinaryForm([1, I, 4])) is None


def test_singular_substitution_rejected():
    with pytest.raises(SingularMatrix):
        act_gl2(Mat2.of(1, 2, 2, 4), BinaryForm([1, 0, 1]))


def test_matrix_algebra():
    m = Mat2.of(1, I, 1, -I)
    assert (m @ m.inverse()).scalar_value() == 1
    assert m.power(3).scalar_value() == 2 + 2 * I
    assert m.power(2).scalar_value() is None
    assert Mat2.diag(I, 1).power(4) == Mat2.identity()


@settings(max_examples=50)
@given(forms())
def test_json_round_trip(f):
    assert BinaryForm.from_json(json.loads(json.dumps(f.to_json()))) == f
