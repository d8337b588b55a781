"""Hypothesis strategies for cyclotomic elements and binary forms."""

from hypothesis import strategies as st

from curvekit.binforms import BinaryForm, Mat2
from curvekit.exactfield import field_create

CONDUCTORS = [1, 3, 4, 5, 8, 12, 15, 20, 24]
small_ints = st.integers(-6, 6)


@st.composite
def elems_in(draw, conductor):
    f = field_create(conductor)
    num = draw(st.lists(small_ints, min_size=f.degree, max_size=f.degree))
    den = draw(st.integers(1, 4))
    return f.element(num, den)


def cyclo_elems(conductors=CONDUCTORS):
    return st.sampled_from(conductors).flatmap(elems_in)


def same_field_pairs(conductors=CONDUCTORS):
    return st.sampled_from(conductors).flatmap(lambda n: st.tuples(elems_in(n), elems_in(n)))


def same_field_triples(conductors=CONDUCTORS):
    return st.sampled_from(conductors).flatmap(lambda n: st.tuples(elems_in(n), elems_in(n), elems_in(n)))


@st.composite
def forms(draw, conductor=4, min_degree=1, max_degree=6):
    d = draw(st.integers(min_degree, max_degree))
    coeffs = draw(st.lists(elems_in(conductor), min_size=d + 1, max_size=d + 1))
    f = BinaryForm(coeffs)
    return f


@st.composite
def invertible_mats(draw, conductor=4):
    a, b, c, d = (draw(elems_in(conductor)) for _ in range(4))
    # det(M + kI) is quadratic in k, so one of k = 0..3 is invertible
    for k in range(4):
        m = Mat2.of(a + k, b, c, d + k)
        if m.det():
            return m
