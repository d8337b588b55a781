"""Verification suites shared by ``curvekit verify`` and the scripts."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .autgroup import check_relations, group_closure, pgl3_generators, structure_of, verify_curve_automorphism
from .binforms import BinaryForm
from .classify import ALL_DIHEDRAL, enumerate_range, instantiate, smoothness_check
from .exactfield import CycloElem, const
from .invariants import ALT5, I, SYM4, InvariantFactor, build_factor, is_invariant, reduced_symmetry
from . import tables


@dataclass(frozen=True)
class Ranges:
    """Degree ranges per kind; ``table`` mirrors the published tables."""

    dihedral: tuple[int, int] = (4, 30)
    s4: tuple[int, int] = (4, 100)
    a4: tuple[int, int] = (4, 100)
    a5: tuple[int, int] = (4, 100)

    def items(self):
        yield ALL_DIHEDRAL, self.dihedral
        yield "s4", self.s4
        yield "a4", self.a4
        yield "a5", self.a5


DESK = Ranges()
TABLE = Ranges(dihedral=(4, 15), s4=(4, 30), a4=(4, 32), a5=(4, 100))


@dataclass
class Check:
    name: str
    ok: bool
    seconds: float = 0.0
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f"  {self.detail}" if self.detail else ""
        return f"{status}  {self.name}  ({self.seconds:.2f}s){tail}"


def _timed(name: str, fn: Callable[[], tuple[bool, str]]) -> Check:
    t0 = time.perf_counter()
    ok, detail = fn()
    return Check(name, ok, time.perf_counter() - t0, detail)


def configs(ranges: Ranges = DESK, kinds: tuple = ()):
    for kind, (lo, hi) in ranges.items():
        label = "d_m" if kind == ALL_DIHEDRAL else kind
        if kinds and label not in kinds:
            continue
        yield from enumerate_range(kind, lo, hi)


def _label(c) -> str:
    return f"{c.kind} d={c.degree} {c.table_flags()}"


# -- forced parameters ---------------------------------------------------------

FORCED_CASES = (
    ("S8_b", SYM4),
    ("S12_a", SYM4),
    ("G12_a", ALT5),
    ("G20_uv", ALT5),
    ("G30_bc", ALT5),
)


def perturbations(values: tuple, count: int = 10) -> Iterator[tuple]:
    """Parameter tuples near ``values``: integer and Gaussian shifts of one coordinate."""
    shifts = [const(k) for k in (1, -1, 2, -2, 3, 7)] + [I, -I, 1 + I, 2 * I]
    n = 0
    for j in range(len(values)):
        for s in shifts:
            yield tuple(v + s if i == j else v for i, v in enumerate(values))
            n += 1
    while n < count:  # pragma: no cover - single-parameter families already give 10
        yield tuple(v + n for v in values)
        n += 1


def forced_form(family: str, values: tuple) -> BinaryForm:
    return build_factor(InvariantFactor(family, tuple(values)))


def suite_invariance() -> list[Check]:
    from .invariants import forced

    out = []
    for family, kind in FORCED_CASES:
        def run(family=family, kind=kind):
            values = forced(family)
            if not is_invariant(forced_form(family, values), kind):
                return False, "forced value is not invariant"
            bad = [p for p in perturbations(values) if is_invariant(forced_form(family, p), kind)]
            n = sum(1 for _ in perturbations(values))
            return not bad, f"{n} perturbations rejected" if not bad else f"invariant at {bad[0]}"
        out.append(_timed(f"invariance {family} under {kind}", run))
    return out


def suite_tables() -> list[Check]:
    out = []
    for name in tables.TABLES:
        def run(name=name):
            res = tables.compare(name)
            bad = [r for r in res if not r.ok]
            over = sum(r.status == "override" for r in res)
            if bad:
                return False, "; ".join(f"d={r.d} {r.flags} {r.status}: {r.detail}" for r in bad)
            return True, f"{len(res)} rows ({over} whitelisted)"
        out.append(_timed(f"table {name}", run))
    return out


def suite_generators(ranges: Ranges = DESK, kinds: tuple = ()) -> list[Check]:
    out = []
    for c in configs(ranges, kinds):
        def run(c=c):
            L = instantiate(c)
            bad = [g.name for g in pgl3_generators(c) if not verify_curve_automorphism(g, c.degree, L)]
            return not bad, ", ".join(bad)
        out.append(_timed(f"generators {_label(c)}", run))
    return out


def suite_relations(ranges: Ranges = DESK, kinds: tuple = ()) -> list[Check]:
    out = []
    for c in configs(ranges, kinds):
        def run(c=c):
            res = check_relations(c)
            bad = [r.name for r in res if not r.holds]
            lifts = sorted({r.lift for r in res if r.lift})
            detail = ("failed: " + "; ".join(bad)) if bad else ""
            if lifts:
                detail = (detail + " " if detail else "") + "lifts: " + ", ".join(lifts)
            return not bad, detail
        out.append(_timed(f"relations {_label(c)}", run))
    return out


def suite_smoothness(ranges: Ranges = DESK, kinds: tuple = ()) -> list[Check]:
    out = []
    for c in configs(ranges, kinds):
        def run(c=c):
            form = instantiate(c)
            smooth = smoothness_check(c.degree, form)
            if not smooth:
                return False, str(smooth)
            got = reduced_symmetry(form, c.m)
            return got == c.kind, f"reduced symmetry {got}" if got != c.kind else ""
        out.append(_timed(f"smoothness {_label(c)}", run))
    return out


def suite_orders(ranges: Ranges = TABLE, kinds: tuple = (), max_order: int = 2000) -> list[Check]:
    out = []
    for c in configs(ranges, kinds):
        desc = structure_of(c)
        if desc.order > max_order:
            continue
        def run(c=c, desc=desc):
            res = group_closure(pgl3_generators(c))
            return res.order == desc.order and not res.truncated, f"{desc} order {desc.order}, closure {res.order}"
        out.append(_timed(f"order {_label(c)}", run))
    return out


SCOPES = {
    "tables": lambda kinds: suite_tables(),
    "invariance": lambda kinds: suite_invariance(),
    "generators": lambda kinds: suite_generators(DESK, kinds),
    "relations": lambda kinds: suite_relations(DESK, kinds),
    "smoothness": lambda kinds: suite_smoothness(DESK, kinds),
    "orders": lambda kinds: suite_orders(TABLE, kinds),
}
