"""Acceptance criteria 1-9.

Each test carries ``@pytest.mark.criterion(n)``; the terminal summary prints
one PASS/FAIL line per criterion.  Two literal statements are false as
printed (criteria 4 and 6); they are kept verbatim as strict xfails and the
corrected statements are tested alongside.
"""

import random
import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvekit import suites, tables
from curvekit.autgroup import check_relations, pgl3_generators, verify_curve_automorphism
from curvekit.binforms import act_gl2, is_squarefree, resultant
from curvekit.classify import (
    ESCALATES,
    PAIRWISE,
    SHARED,
    SINGULAR,
    enumerate_range,
    exclusion_oracle,
    instantiate,
    instantiate_unchecked,
    smoothness_check,
)
from curvekit.errors import ExclusionViolated
from curvekit.exactfield import const, field_create, root_of_unity, sqrt_small
from curvekit.invariants import (
    ALT4,
    ALT5,
    SYM4,
    I,
    InvariantFactor,
    build_factor,
    forced,
    g60_form,
    group_generators,
    is_invariant,
    is_invariant_under,
    reduced_symmetry,
)
from curvekit.invariants import _g60_coeffs

from strategies import cyclo_elems, same_field_pairs, same_field_triples

SQRT3 = sqrt_small(None, 3)


def form(family, *params, m=None):
    return build_factor(InvariantFactor(family, tuple(const(p) if isinstance(p, int) else p for p in params), m))


# -- 1 ----------------------------------------------------------------------------

FORCED = [("S8_b", SYM4), ("S12_a", SYM4), ("G12_a", ALT5), ("G20_uv", ALT5), ("G30_bc", ALT5)]


@pytest.mark.criterion(1)
@pytest.mark.parametrize("family,kind", FORCED)
def test_forced_parameters(family, kind):
    t0 = time.perf_counter()
    values = forced(family)
    assert is_invariant(form(family, *values), kind)
    perturbed = list(suites.perturbations(values))
    assert len(perturbed) >= 10
    for p in perturbed:
        assert not is_invariant(form(family, *p), kind), p
    assert time.perf_counter() - t0 < 10


# -- 2 ----------------------------------------------------------------------------

A60 = [const(0), const(1), const(-7), const(1000), I]


@pytest.mark.criterion(2)
@pytest.mark.parametrize("a", A60, ids=["0", "1", "-7", "1000", "i"])
def test_g60_coefficients(a):
    gens = group_generators(ALT5)
    assert len(gens) == 3
    e = _g60_coeffs(a)
    assert is_invariant_under(g60_form(a, e), gens)
    for i in range(5):
        bumped = list(e)
        bumped[i] = bumped[i] + 1
        assert not is_invariant_under(g60_form(a, bumped), gens), i


# -- 3 ----------------------------------------------------------------------------


def vanishes_only_at(make_pair, value):
    """Exact resultant is zero at ``value`` and nonzero at value +- 1."""
    return [resultant(*make_pair(value + s)) == 0 for s in (-1, 0, 1)] == [False, True, False]


W1 = 2**2 * 19 * 436999
W2 = -(2**2) * 9377 * 5323


@pytest.mark.criterion(3)
@pytest.mark.parametrize(
    "name,pair,value",
    [
        ("S8/S24", lambda u: (form("S8_b", 14), form("S24_a", u)), 42),
        ("S12/S24", lambda u: (form("S12_a", -34), form("S24_a", u)), -66),
        ("S24/S24", lambda u: (form("S24_a", 5), form("S24_a", u)), 5),
        ("G20/G60", lambda w: (form("G20_uv", *forced("G20_uv")), g60_form(const(w))), W1),
        ("G30/G60", lambda w: (form("G30_bc", *forced("G30_bc")), g60_form(const(w))), W2),
    ],
)
def test_resultant_exclusions(name, pair, value):
    assert vanishes_only_at(pair, value)


@pytest.mark.criterion(3)
@pytest.mark.parametrize("m", [3, 4, 5, 6])
@pytest.mark.parametrize("family,value", [("T_n_plus", 2), ("T_n_minus", -2)])
def test_resultant_dihedral(m, family, value):
    fixed = build_factor(InvariantFactor(family, (), m))
    assert vanishes_only_at(lambda a: (form("T_2m_a", a, m=m), fixed), value)


@pytest.mark.criterion(3)
def test_alt4_exclusions_by_oracle():
    """The oracle finds +-6 sqrt(3) i; the printed +-16 and +-8 sqrt(3) i are not exclusions."""
    c = enumerate_range("a4", 12, 12)[0]
    singular = {x.value for x in exclusion_oracle(c) if x.reason in (SINGULAR, SHARED)}
    assert singular == {6 * SQRT3 * I, -6 * SQRT3 * I}
    for a in (6 * SQRT3 * I, -6 * SQRT3 * I):
        assert not is_squarefree(form("F12_a", a))
    others = [form("S6"), form("S4_plus"), form("S4_minus")]
    for a in (const(16), const(-16), 8 * SQRT3 * I, -8 * SQRT3 * I):
        f = form("F12_a", a)
        assert is_squarefree(f)
        assert all(resultant(f, g) != 0 for g in others)


# -- 4 ----------------------------------------------------------------------------

A12 = [const(0), const(1), const(5), I]


@pytest.mark.criterion(4)
@pytest.mark.xfail(strict=True, reason="printed sign: the product equals S_{24,-(a^2+66)}")
@pytest.mark.parametrize("a", A12, ids=["0", "1", "5", "i"])
def test_f12_pair_identity_literal(a):
    assert form("F12_a", a) * form("F12_a", -a) == form("S24_a", a * a + 66)


@pytest.mark.parametrize("a", A12, ids=["0", "1", "5", "i"])
def test_f12_pair_identity_corrected(a):
    product = form("F12_a", a) * form("F12_a", -a)
    assert product.coeffs == form("S24_a", -(a * a + 66)).coeffs


# -- 5 ----------------------------------------------------------------------------


@pytest.mark.criterion(5)
@pytest.mark.parametrize("name", list(tables.TABLES))
def test_table_reproduction(name):
    t0 = time.perf_counter()
    res = tables.compare(name)
    assert res and all(r.ok for r in res), [r for r in res if not r.ok]
    overrides = [r for r in res if r.status == "override"]
    assert all(r.detail for r in overrides)
    assert time.perf_counter() - t0 < 300


def test_table_whitelist_is_canonicalization_only():
    """Every override either flags an extra sign representative or renames without changing the order."""
    for name in tables.TABLES:
        for row in tables.load_golden(name):
            if row.override:
                assert row.note
                assert set(row.overrides()) <= {"flags", "equation", "group"}


def test_odd_degree_sign_representatives_are_isomorphic():
    # the T_{n,+} rows at d=9 and d=13 map onto T_{n,-} by X -> zeta_{2n} X
    from curvekit.binforms import Mat2, proportional

    for n in (7, 11):
        plus = form("XY") * build_factor(InvariantFactor("T_n_plus", (), n))
        minus = form("XY") * build_factor(InvariantFactor("T_n_minus", (), n))
        assert proportional(act_gl2(Mat2.diag(root_of_unity(2 * n), 1), plus), minus) is not None


# -- 6 ----------------------------------------------------------------------------

TABLE_CONFIGS = list(suites.configs(suites.TABLE))
TABLE_IDS = [f"{c.kind}-d{c.degree}-{c.table_flags()}" for c in TABLE_CONFIGS]


@pytest.mark.criterion(6)
def test_generators_are_automorphisms():
    for c in TABLE_CONFIGS:
        L = instantiate(c)
        for g in pgl3_generators(c):
            assert verify_curve_automorphism(g, c.degree, L), (c.kind, c.degree, g.name)


def predicted_relation_defect(c):
    """Configurations where a printed presentation cannot hold (see the decisions ledger)."""
    if c.kind.tag == "Dihedral" and c.delta == 1 and c.degree % 2 == 0:
        if c.m % 4 == 0 and ((c.degree - 2) // c.m) % 2 == 1:
            return "t2 u t2^-1 = u^-1"
        if c.m % 2 == 1 and c.degree % 4 == 0:
            return "t1 b t1^-1 = b^-1"
    if c.kind.tag == "Sym4" and c.flag["eps1"] and c.degree % 4 == 0:
        return "b^2 = a^2"
    return None


@pytest.mark.criterion(6)
@pytest.mark.xfail(strict=True, reason="five table rows violate the printed presentation")
def test_presentation_relations_literal():
    failing = [(c.kind, c.degree, r.name) for c in TABLE_CONFIGS for r in check_relations(c) if not r.holds]
    assert not failing, failing


def test_presentation_failures_are_exactly_predicted():
    for c in suites.configs(suites.DESK):
        bad = {r.name for r in check_relations(c) if not r.holds}
        expected = predicted_relation_defect(c)
        assert bad == ({expected} if expected else set()), (c.kind, c.degree, c.table_flags(), bad)


# -- 7 ----------------------------------------------------------------------------


@pytest.mark.criterion(7)
def test_closure_orders():
    t0 = time.perf_counter()
    checks = suites.suite_orders(suites.TABLE)
    assert len(checks) >= 40
    assert all(c.ok for c in checks), [c.line() for c in checks if not c.ok]
    assert time.perf_counter() - t0 < 600


# -- 8 ----------------------------------------------------------------------------

SMALL = suites.Ranges(dihedral=(4, 30), s4=(4, 40), a4=(4, 40), a5=(4, 100))


def _pool(label):
    return [c for c in suites.configs(SMALL, (label,))]


def _random_params(c, rng):
    while True:
        values = rng.sample([k for k in range(-60, 61)], c.n_slots)
        params = [const(v) for v in values]
        if not any(x.violated_by(params) for x in c.exclusions):
            return params


@pytest.mark.criterion(8)
@pytest.mark.parametrize("label", ["d_m", "s4", "a4", "a5"])
def test_random_generic_instantiations(label):
    rng = random.Random(20261015 + hash(label) % 1000)
    pool = _pool(label)
    for _ in range(100):
        c = rng.choice(pool)
        params = _random_params(c, rng)
        f = instantiate(c, params)
        assert smoothness_check(c.degree, f), (c.degree, c.table_flags(), params)
        assert reduced_symmetry(f, c.m) == c.kind, (c.degree, c.table_flags(), params)


def _poisoned_cases():
    rng = random.Random(7)
    cases = []
    configs = [c for c in suites.configs(SMALL) if c.exclusions]
    while len(cases) < 20:
        c = rng.choice(configs)
        fv = rng.choice(c.exclusions)
        params = _random_params(c, rng)
        if fv.relation == "value":
            params[fv.slot if isinstance(fv.slot, int) else fv.slot[0]] = fv.value
        elif fv.relation == "equal":
            i, j = fv.slot
            params[j] = params[i]
        elif fv.relation == "negated":
            i, j = fv.slot
            params[j] = -params[i]
        else:
            continue
        cases.append((c, fv, params))
    return cases


@pytest.mark.criterion(8)
def test_poisoned_instantiations():
    cases = _poisoned_cases()
    assert len(cases) == 20
    for c, fv, params in cases:
        with pytest.raises(ExclusionViolated) as info:
            instantiate(c, params)
        reasons = {x.reason for x in c.exclusions if x.violated_by(params)}
        assert info.value.reason in reasons and fv.reason in reasons
        f = instantiate_unchecked(c, params)
        if info.value.reason in (SINGULAR, SHARED, PAIRWISE):
            assert not smoothness_check(c.degree, f)
        else:
            assert info.value.reason == ESCALATES
            assert reduced_symmetry(f, c.m) != c.kind


# -- 9 ----------------------------------------------------------------------------


@pytest.mark.criterion(9)
@settings(max_examples=400)
@given(same_field_triples())
def test_field_axioms(xyz):
    x, y, z = xyz
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    if x:
        assert x * x.inverse() == 1


@pytest.mark.criterion(9)
@settings(max_examples=300)
@given(same_field_pairs(), st.sampled_from([8, 12, 20, 40, 60]))
def test_embedding_is_a_homomorphism(xy, scale):
    x, y = xy
    target = field_create(x.conductor * scale)
    assert (x * y).embed(target) == x.embed(target) * y.embed(target)
    assert (x + y).embed(target) == x.embed(target) + y.embed(target)
    assert x.embed(target) == x


@pytest.mark.criterion(9)
@settings(max_examples=300)
@given(st.sampled_from([2, 3, 5]), st.fractions(max_denominator=50), st.sampled_from([1, 8, 12, 20, 120]))
def test_gauss_sum_squares(n, q, scale):
    r = sqrt_small(None, n)
    assert r * r == n
    target = field_create(r.conductor * scale)
    assert (q * r.embed(target)) ** 2 == q * q * n
