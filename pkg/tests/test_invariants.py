import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvekit.binforms import Mat2, act_gl2, is_squarefree, unify
from curvekit.exactfield import const, field_create
from curvekit.invariants import (
    ALT4,
    ALT5,
    FAMILIES,
    SYM4,
    I,
    GroupKind,
    InvariantFactor,
    Slot,
    build_factor,
    extra_generators,
    forced,
    group_generators,
    is_invariant,
    is_invariant_under,
    reduced_symmetry,
)

gauss = st.builds(lambda a, b: a + b * I, st.integers(-40, 40), st.integers(-40, 40))

KIND_OF = {
    "S6": [ALT4, SYM4], "S4_plus": [ALT4], "S4_minus": [ALT4], "F12_a": [ALT4],
    "S8_b": [SYM4], "S12_a": [SYM4], "S24_a": [SYM4],
    "G12_a": [ALT5], "G20_uv": [ALT5], "G30_bc": [ALT5], "G60_a": [ALT5],
}


def projective_order(mats):
    """Order of the image in PGL_2, by closure with first-nonzero-entry normalization."""
    def key(m):
        flat = [x.embed(ambient) for x in unify([m.a, m.b, m.c, m.d])]
        p = next(x for x in flat if x)
        return tuple((x / p).key() for x in flat)

    ambient = field_create(math.lcm(*(x.conductor for g in mats for x in (g.a, g.b, g.c, g.d))))
    seen = {key(Mat2.identity()): Mat2.identity()}
    frontier = list(seen.values())
    while frontier:
        nxt = []
        for x in frontier:
            for g in mats:
                y = x @ g
                k = key(y)
                if k not in seen:
                    seen[k] = y
                    nxt.append(y)
        frontier = nxt
    return len(seen)


@pytest.mark.parametrize("kind,order", [(GroupKind.dihedral(3), 6), (GroupKind.dihedral(7), 14),
                                         (ALT4, 12), (SYM4, 24), (ALT5, 60)])
def test_generators_have_the_right_projective_order(kind, order):
    assert projective_order(group_generators(kind)) == order
    assert kind.order == order


def test_extra_generators_enlarge_alt4():
    ex = extra_generators()
    assert projective_order(group_generators(ALT4) + [ex["phi_S4"]]) == 12
    assert projective_order(group_generators(ALT4) + [ex["diag_S4"]]) == 24
    assert projective_order(group_generators(ALT4) + [ex["psi_A5"]]) == 60


def _factor(family, params, m=None):
    return build_factor(InvariantFactor(family, tuple(params), m))


@pytest.mark.parametrize("family", [f for f, (arity, _, _) in FAMILIES.items() if arity == 0 and f in KIND_OF])
def test_fixed_factors_are_invariant(family):
    f = _factor(family, ())
    assert f.degree == FAMILIES[family][1](0)
    assert is_squarefree(f)
    for kind in KIND_OF[family]:
        assert is_invariant(f, kind)


@settings(max_examples=25)
@given(st.sampled_from(["F12_a", "S24_a", "G60_a", "S8_b", "S12_a", "G12_a", "G20_uv", "G30_bc"]),
       gauss, gauss)
def test_one_parameter_families_are_invariant(family, a, b):
    arity = FAMILIES[family][0]
    f = _factor(family, (a, b)[:arity])
    # the rigid families are only invariant at the forced values; the pencils always are
    expected = family in ("F12_a", "S24_a", "G60_a")
    for kind in KIND_OF[family]:
        assert is_invariant(f, kind) == expected or tuple((a, b)[:arity]) == forced(family)


@pytest.mark.parametrize("family", ["S8_b", "S12_a", "G12_a", "G20_uv", "G30_bc"])
def test_forced_values_give_invariants(family):
    f = _factor(family, forced(family))
    for kind in KIND_OF[family]:
        assert is_invariant(f, kind)


@settings(max_examples=20)
@given(st.integers(3, 9), gauss)
def test_dihedral_pencil(m, a):
    f = _factor("T_2m_a", (a,), m)
    assert is_invariant(f, GroupKind.dihedral(m))
    assert is_invariant(_factor("T_n_plus", (), m), GroupKind.dihedral(m))
    # T_{m,-} is invariant up to sign under the swap
    g = _factor("T_n_minus", (), m)
    assert act_gl2(Mat2.swap(), g) == (-1) ** (m + 1) * g if m % 2 == 0 else True


def test_reduced_symmetry_examples():
    assert reduced_symmetry(_factor("G60_a", (const(7),))) == ALT5
    assert reduced_symmetry(_factor("S24_a", (const(7),))) == SYM4
    assert reduced_symmetry(_factor("F12_a", (const(7),))) == ALT4
    # F_{12,0} picks up the S4 element
    assert reduced_symmetry(_factor("F12_a", (const(0),))) == SYM4
    xy = _factor("XY", ())
    f = xy * _factor("T_2m_a", (const(5),), 5)
    assert reduced_symmetry(f, 5) == GroupKind.dihedral(5)
    assert reduced_symmetry(xy * _factor("T_2m_a", (-11 * I,), 5), 5) == ALT5


def test_symbols_and_json():
    f = InvariantFactor("F12_a", (Slot(0),))
    assert not f.is_concrete and f.slots == [0]
    assert InvariantFactor.from_json(json.loads(json.dumps(f.to_json()))) == f
    bound = f.bind({0: const(3)})
    assert bound.is_concrete and bound.degree == 12
    assert GroupKind.from_json(GroupKind.dihedral(6).to_json()) == GroupKind.dihedral(6)


def test_invariance_detects_non_invariants():
    f = _factor("T_2m_a", (const(3),), 4)
    assert not is_invariant_under(f, [Mat2.diag(I, 1) @ Mat2.of(1, 1, 0, 1)])
