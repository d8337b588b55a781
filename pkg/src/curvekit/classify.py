"""Enumeration, instantiation and validation of curve configurations.

A configuration is one solution of a degree equation: the group kind, the
degree d, the binary exponent flags, the number t of free parameters and the
ordered factor list of ``L`` in ``Z^d + L(X, Y) = 0``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

from .binforms import BinaryForm, is_squarefree, resultant, squarefree_witness
from .errors import ArityMismatch, DegreeMismatch, ExclusionViolated
from .exactfield import CycloElem, const, elem_from_json, elem_to_json, format_elem
from .invariants import (
    ALT4,
    ALT5,
    SYM4,
    I,
    SQRT3,
    SQRT5,
    GroupKind,
    InvariantFactor,
    Slot,
    build_factor,
    forced,
    reduced_symmetry,
)

__all__ = [
    "SHARED",
    "PAIRWISE",
    "ESCALATES",
    "SINGULAR",
    "ForbiddenValue",
    "Configuration",
    "Smooth",
    "Singular",
    "enumerate_configs",
    "enumerate_range",
    "instantiate",
    "generic_params",
    "smoothness_check",
    "exclusion_oracle",
    "published_exclusion_claims",
    "cross_check_exclusions",
    "slot_family",
    "special_invariants",
    "W_G20",
    "W_G30",
]

SHARED = "SharedRootWithFixedFactor"
PAIRWISE = "PairwiseCollision"
ESCALATES = "EscalatesSymmetry"
SINGULAR = "SingularFactor"

W_G20 = 2**2 * 19 * 436999
W_G30 = -(2**2) * 9377 * 5323

ALL_DIHEDRAL = "AllDihedral"


@dataclass(frozen=True)
class ForbiddenValue:
    """An excluded parameter choice.

    ``relation`` is ``"value"`` (slot == value), ``"equal"`` (a_i == a_j),
    ``"negated"`` (a_i == -a_j) or ``"joint"`` ((a_i, a_j) == value pair, in
    either order).  ``slot`` is an int for ``"value"`` and a pair otherwise.
    """

    slot: Union[int, tuple]
    value: Optional[Union[CycloElem, tuple]]
    reason: str
    relation: str = "value"
    witness: str = ""

    def violated_by(self, params: Sequence[CycloElem]) -> bool:
        if self.relation == "value":
            return params[self.slot] == self.value
        i, j = self.slot
        if self.relation == "equal":
            return params[i] == params[j]
        if self.relation == "negated":
            return params[i] == -params[j]
        u, v = self.value
        return (params[i] == u and params[j] == v) or (params[i] == v and params[j] == u)

    def describe(self) -> str:
        if self.relation == "value":
            return f"a{self.slot + 1} != {format_elem(self.value)}"
        i, j = self.slot
        if self.relation == "equal":
            return f"a{i + 1} != a{j + 1}"
        if self.relation == "negated":
            return f"a{i + 1} != -a{j + 1}"
        u, v = self.value
        return f"{{a{i + 1}, a{j + 1}}} != {{{format_elem(u)}, {format_elem(v)}}}"

    def to_json(self) -> dict:
        if self.relation == "value":
            value = elem_to_json(self.value)
        elif self.relation == "joint":
            value = [elem_to_json(x) for x in self.value]
        else:
            value = None
        return {
            "slot": self.slot if isinstance(self.slot, int) else list(self.slot),
            "value": value,
            "reason": self.reason,
            "relation": self.relation,
            "witness": self.witness,
            "text": self.describe(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ForbiddenValue":
        rel = obj.get("relation", "value")
        slot = obj["slot"] if isinstance(obj["slot"], int) else tuple(obj["slot"])
        if rel == "value":
            value = elem_from_json(obj["value"])
        elif rel == "joint":
            value = tuple(elem_from_json(x) for x in obj["value"])
        else:
            value = None
        return cls(slot, value, obj["reason"], rel, obj.get("witness", ""))


# ---------------------------------------------------------------------------
# configurations


@dataclass(frozen=True)
class Configuration:
    kind: GroupKind
    degree: int
    flags: tuple  # ((name, value), ...) in canonical order
    t: int
    factors: tuple
    exclusions: tuple = ()
    delta: Optional[int] = None
    variant: Optional[str] = None  # v1 / v2 / v3 for dihedral kinds

    @property
    def m(self) -> Optional[int]:
        return self.kind.m

    @property
    def flag(self) -> dict:
        return dict(self.flags)

    @property
    def n_slots(self) -> int:
        return sum(len(f.slots) for f in self.factors)

    @property
    def d0(self) -> int:
        d = self.degree
        while d % 2 == 0:
            d //= 2
        return d

    @property
    def e(self) -> int:
        d, e = self.degree, 0
        while d % 2 == 0:
            d //= 2
            e += 1
        return e

    def equation_symbol(self) -> str:
        return "*".join(f.symbol() for f in self.factors)

    def equation_pretty(self, params: Optional[Sequence] = None) -> str:
        factors = self.factors
        if params is not None:
            values = dict(enumerate(params))
            factors = [f.bind(values) for f in factors]
        return f"Z^{self.degree} + " + "".join(f.expanded() for f in factors) + " = 0"

    def table_flags(self) -> str:
        """Flag tuple in the notation of the published tables."""
        f = self.flag
        if self.kind.tag == "Dihedral":
            return f"({self.m},{self.delta})"
        if self.kind.tag == "Sym4":
            return f"({f['eps1']},{f['eps2']})"
        if self.kind.tag == "Alt4":
            return f"({f['eps_plus']},{f['eps_minus']},{self.d0})"
        return f"({f['eps']},{f['eps1']},{f['eps2']},{self.t},{self.d0})"

    def sort_key(self) -> tuple:
        return (self.degree, self.m or 0, tuple(v for _, v in self.flags), self.t)

    def to_json(self) -> dict:
        out = {
            "kind": self.kind.tag,
            "d": self.degree,
            "flags": dict(self.flags),
            "t": self.t,
            "factors": [f.to_json() for f in self.factors],
            "exclusions": [x.to_json() for x in self.exclusions],
            "equation_pretty": self.equation_pretty(),
        }
        if self.kind.tag == "Dihedral":
            out["m"] = self.m
            out["delta"] = self.delta
            out["variant"] = self.variant
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "Configuration":
        kind = GroupKind(obj["kind"], obj.get("m"))
        return cls(
            kind=kind,
            degree=int(obj["d"]),
            flags=tuple(obj["flags"].items()),
            t=int(obj["t"]),
            factors=tuple(InvariantFactor.from_json(f) for f in obj["factors"]),
            exclusions=tuple(ForbiddenValue.from_json(x) for x in obj["exclusions"]),
            delta=obj.get("delta"),
            variant=obj.get("variant"),
        )


def _fixed(family: str, m: Optional[int] = None) -> InvariantFactor:
    arity = {"S8_b": 1, "S12_a": 1, "G12_a": 1, "G20_uv": 2, "G30_bc": 2}
    params = forced(family) if family in arity else ()
    return InvariantFactor(family, params, m)


def slot_family(kind: GroupKind) -> tuple[str, Optional[int]]:
    """Family and index of the one-parameter pencil used for free slots."""
    return {
        "Dihedral": ("T_2m_a", kind.m),
        "Alt4": ("F12_a", None),
        "Sym4": ("S24_a", None),
        "Alt5": ("G60_a", None),
    }[kind.tag]


def special_invariants(kind: GroupKind) -> list[InvariantFactor]:
    """Invariants vanishing exactly on the short orbits of the group."""
    if kind.tag == "Dihedral":
        m = kind.m
        return [_fixed("XY"), _fixed("T_n_plus", m), _fixed("T_n_minus", m)]
    if kind.tag == "Alt4":
        return [_fixed("S6"), _fixed("S4_plus"), _fixed("S4_minus")]
    if kind.tag == "Sym4":
        return [_fixed("S6"), _fixed("S8_b"), _fixed("S12_a")]
    return [_fixed("G12_a"), _fixed("G20_uv"), _fixed("G30_bc")]


def _slots(t: int, family: str, m: Optional[int] = None) -> list[InvariantFactor]:
    return [InvariantFactor(family, (Slot(i),), m) for i in range(t)]


# ---------------------------------------------------------------------------
# exclusion rules (closed forms; the oracle below recomputes them)


def _pencil_values(kind: GroupKind) -> list[tuple[CycloElem, InvariantFactor]]:
    """Parameter values where the slot pencil meets a short orbit."""
    if kind.tag == "Dihedral":
        m = kind.m
        return [(const(2), _fixed("T_n_plus", m)), (const(-2), _fixed("T_n_minus", m))]
    if kind.tag == "Alt4":
        v = 6 * SQRT3 * I
        return [(v, _fixed("S4_minus")), (-v, _fixed("S4_plus"))]
    if kind.tag == "Sym4":
        return [(const(42), _fixed("S8_b")), (const(-66), _fixed("S12_a"))]
    return [(const(W_G20), _fixed("G20_uv")), (const(W_G30), _fixed("G30_bc"))]


def _covers(fixed: Iterable[InvariantFactor], p: InvariantFactor) -> bool:
    """Does a fixed factor of the configuration contain the roots of p?"""
    for f in fixed:
        if f == p:
            return True
        # T_{2m,-} = T_{m,+} T_{m,-}
        if f.family == "T_n_minus" and p.family in ("T_n_plus", "T_n_minus") and f.m == 2 * p.m:
            return True
    return False


def _escalation_values(kind: GroupKind, variant: Optional[str], flags: dict, t: int,
                       degree: int) -> list[CycloElem]:
    """Single-slot values that enlarge the reduced automorphism group."""
    if t != 1:
        return []
    if kind.tag == "Dihedral":
        m = kind.m
        out = []
        if variant in ("v1", "v3"):
            out.append(const(0))
        if variant == "v1" and m == 5:
            out += [-11 * I, 11 * I]
        if variant == "v2" and m == 4:
            out.append(const(14))
        if variant == "v3" and m == 4:
            out += [const(-34), const(34)]
        return out
    if kind.tag == "Alt4":
        out = []
        if flags["eps_plus"] == flags["eps_minus"]:
            out.append(const(0))
        if degree == 12:
            out += [22 / SQRT5, -22 / SQRT5]
        if degree == 20 and flags["eps_plus"] == 1:
            out += [-38 * SQRT5 / 3, 38 * SQRT5 / 3]
        return out
    return []


def _exclusions(kind: GroupKind, fixed: list, t: int, variant=None, flags=None,
                degree=0) -> tuple:
    out = []
    for i in range(t):
        for value, p in _pencil_values(kind):
            if _covers(fixed, p):
                out.append(ForbiddenValue(i, value, SHARED, witness=p.symbol()))
            else:
                out.append(ForbiddenValue(i, value, SINGULAR, witness=p.symbol()))
        for value in _escalation_values(kind, variant, flags or {}, t, degree):
            out.append(ForbiddenValue(i, value, ESCALATES))
    for i, j in itertools.combinations(range(t), 2):
        out.append(ForbiddenValue((i, j), None, PAIRWISE, "equal"))
    if t == 2:
        negation_escalates = (
            (kind.tag == "Dihedral" and variant in ("v1", "v3"))
            or (kind.tag == "Alt4" and flags["eps_plus"] == flags["eps_minus"])
        )
        if negation_escalates:
            out.append(ForbiddenValue((0, 1), None, ESCALATES, "negated"))
        if kind.tag == "Alt4" and degree == 32:
            g12, g20 = 22 / SQRT5, -38 * SQRT5 / 3
            out.append(ForbiddenValue((0, 1), (g12, g20), ESCALATES, "joint"))
            out.append(ForbiddenValue((0, 1), (-g12, -g20), ESCALATES, "joint"))
    return tuple(out)


# ---------------------------------------------------------------------------
# enumeration


def _binary(n: int):
    return itertools.product((0, 1), repeat=n)


def _enum_alt5(d: int) -> list[Configuration]:
    out = []
    for eps, eps1, eps2 in _binary(3):
        rest = d - 12 * eps - 20 * eps1 - 30 * eps2
        if rest < 0 or rest % 60:
            continue
        t = rest // 60
        fixed = [_fixed(f) for f, e in (("G12_a", eps), ("G20_uv", eps1), ("G30_bc", eps2)) if e]
        if not fixed and t == 0:
            continue
        flags = (("eps", eps), ("eps1", eps1), ("eps2", eps2))
        out.append(Configuration(ALT5, d, flags, t, tuple(fixed + _slots(t, "G60_a")),
                                 _exclusions(ALT5, fixed, t, flags=dict(flags), degree=d)))
    return out


def _enum_sym4(d: int) -> list[Configuration]:
    out = []
    for eps, eps1, eps2 in _binary(3):
        rest = d - 6 * eps - 12 * eps1 - 8 * eps2
        if rest < 0 or rest % 24:
            continue
        t = rest // 24
        fixed = [_fixed(f) for f, e in (("S6", eps), ("S12_a", eps1), ("S8_b", eps2)) if e]
        if not fixed and t == 0:
            continue
        flags = (("eps", eps), ("eps1", eps1), ("eps2", eps2))
        out.append(Configuration(SYM4, d, flags, t, tuple(fixed + _slots(t, "S24_a")),
                                 _exclusions(SYM4, fixed, t, flags=dict(flags), degree=d)))
    return out


def _enum_alt4(d: int) -> list[Configuration]:
    out = []
    for eps, ep, em in _binary(3):
        rest = d - 6 * eps - 4 * (ep + em)
        if rest < 0 or rest % 12:
            continue
        t = rest // 12
        fixed = [_fixed(f) for f, e in (("S6", eps), ("S4_plus", ep), ("S4_minus", em)) if e]
        if not fixed and t == 0:
            continue
        flags = (("eps", eps), ("eps_plus", ep), ("eps_minus", em))
        cfg = Configuration(ALT4, d, flags, t, tuple(fixed + _slots(t, "F12_a")),
                            _exclusions(ALT4, fixed, t, flags=dict(flags), degree=d))
        if t == 0 and _rigid_escalates(cfg):
            continue
        out.append(cfg)
    return out


def _enum_dihedral_m(d: int, m: int) -> list[Configuration]:
    out = []
    n = d - 2
    shapes = []
    if n % (2 * m) == 0 and n // (2 * m) >= 1:
        shapes.append(("v1", n // (2 * m), []))
    if (n - m) >= 0 and (n - m) % (2 * m) == 0:
        shapes.append(("v2", (n - m) // (2 * m), [_fixed("T_n_minus", m)]))
    if (n - 2 * m) >= 0 and (n - 2 * m) % (2 * m) == 0:
        t = (n - 2 * m) // (2 * m)
        if t >= 1:  # t = 0 is the v2 shape for 2m
            shapes.append(("v3", t, [_fixed("T_n_minus", 2 * m)]))
    kind = GroupKind.dihedral(m)
    for variant, t, extra in shapes:
        fixed = [_fixed("XY")] + extra
        delta = sum(1 for f in fixed if f.family == "T_n_minus") % 2
        flags = (("m", m), ("delta", delta))
        cfg = Configuration(
            kind, d, flags, t, tuple(fixed + _slots(t, "T_2m_a", m)),
            _exclusions(kind, fixed, t, variant=variant, flags=dict(flags), degree=d),
            delta=delta, variant=variant,
        )
        if t == 0 and _rigid_escalates(cfg):
            continue
        out.append(cfg)
    return out


def _rigid_escalates(cfg: Configuration) -> bool:
    form = instantiate_unchecked(cfg, [])
    return reduced_symmetry(form, cfg.m) != cfg.kind


def enumerate_configs(kind: Union[GroupKind, str], d: int) -> list[Configuration]:
    """All configurations of the given kind (or every dihedral m) in degree d."""
    if d < 4:
        return []
    if kind == ALL_DIHEDRAL or kind == "d_m":
        out = []
        for m in range(3, d - 1):
            if (d - 2) % m == 0:
                out += _enum_dihedral_m(d, m)
        return sorted(out, key=Configuration.sort_key)
    if isinstance(kind, str):
        kind = {"a4": ALT4, "s4": SYM4, "a5": ALT5}[kind]
    if kind.tag == "Dihedral":
        if (d - 2) % kind.m:
            return []
        return _enum_dihedral_m(d, kind.m)
    enum = {"Alt4": _enum_alt4, "Sym4": _enum_sym4, "Alt5": _enum_alt5}[kind.tag]
    return sorted(enum(d), key=Configuration.sort_key)


def enumerate_range(kind, d_min: int, d_max: int) -> list[Configuration]:
    out = []
    for d in range(max(d_min, 4), d_max + 1):
        out += enumerate_configs(kind, d)
    return out


# ---------------------------------------------------------------------------
# instantiation


def instantiate_unchecked(c: Configuration, params: Sequence) -> BinaryForm:
    values = {i: (p if isinstance(p, CycloElem) else const(p)) for i, p in enumerate(params)}
    form = None
    for f in c.factors:
        piece = build_factor(f.bind(values))
        form = piece if form is None else form * piece
    return form


def _check_exclusions(c: Configuration, params: Sequence[CycloElem]) -> None:
    for fv in c.exclusions:
        if fv.violated_by(params):
            raise ExclusionViolated(fv.slot, fv.reason, fv.describe())


def generic_params(c: Configuration, start: int = 3, step: int = 4) -> list[CycloElem]:
    """Distinct small integers start, start+step, ... avoiding every exclusion."""
    chosen: list[CycloElem] = []
    candidate = start
    while len(chosen) < c.n_slots:
        value = const(candidate)
        trial = chosen + [value]
        ok = True
        for fv in c.exclusions:
            slots = (fv.slot,) if isinstance(fv.slot, int) else fv.slot
            if max(slots) < len(trial):
                if fv.violated_by(trial):
                    ok = False
                    break
        if ok:
            chosen.append(value)
        candidate += step
    return chosen


def instantiate(c: Configuration, params: Optional[Sequence] = None, *,
                check_symmetry: bool = True, start: int = 3) -> BinaryForm:
    """The product form of degree d with the given (or generic) parameters.

    Explicit parameters are checked against the exclusion list, then the
    resulting form is checked for accidental extra symmetry.  Generic
    parameters are re-drawn until no escalation is detected.
    """
    if params is not None:
        params = [p if isinstance(p, CycloElem) else const(p) for p in params]
        if len(params) != c.n_slots:
            raise ArityMismatch(f"expected {c.n_slots} parameters, got {len(params)}")
        _check_exclusions(c, params)
        form = instantiate_unchecked(c, params)
        if check_symmetry and c.n_slots and reduced_symmetry(form, c.m) != c.kind:
            raise ExclusionViolated(tuple(range(c.n_slots)), ESCALATES, "parameter combination")
        return form
    while True:
        chosen = generic_params(c, start=start)
        form = instantiate_unchecked(c, chosen)
        if not check_symmetry or not c.n_slots or reduced_symmetry(form, c.m) == c.kind:
            return form
        start += 1


# ---------------------------------------------------------------------------
# smoothness


@dataclass(frozen=True)
class Smooth:
    def __bool__(self):
        return True

    def __str__(self):
        return "Smooth"


@dataclass(frozen=True)
class Singular:
    witness: str

    def __bool__(self):
        return False

    def __str__(self):
        return f"Singular({self.witness})"


def smoothness_check(d: int, form: BinaryForm):
    """Z^d + L = 0 is smooth iff L has no repeated root in P^1."""
    if form.degree != d:
        raise DegreeMismatch(f"form has degree {form.degree}, expected {d}")
    witness = squarefree_witness(form)
    return Smooth() if witness is None else Singular(witness)


# ---------------------------------------------------------------------------
# exclusion oracle


def _dehomogenize(f: BinaryForm) -> list:
    """Ascending coefficients of F(x, 1)."""
    coeffs = list(reversed(f.coeffs))
    while len(coeffs) > 1 and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _rem(a: list, b: list) -> list:
    a = list(a)
    inv = b[-1].inverse()
    db = len(b) - 1
    while len(a) > db:
        c = a[-1]
        if c:
            q = c * inv
            shift = len(a) - 1 - db
            for j in range(db):
                if b[j]:
                    a[shift + j] = a[shift + j] - q * b[j]
        a.pop()
    return a


@lru_cache(maxsize=None)
def _pencil(kind: GroupKind) -> tuple[BinaryForm, BinaryForm]:
    """F_a = A + a B for the slot family of the kind."""
    family, m = slot_family(kind)
    a0 = build_factor(InvariantFactor(family, (const(0),), m))
    a1 = build_factor(InvariantFactor(family, (const(1),), m))
    return a0, a1 - a0


def _solve_pencil_on(kind: GroupKind, p: InvariantFactor) -> Optional[CycloElem]:
    """w with P | A + w B, solved linearly from the remainders modulo P."""
    a, b = _pencil(kind)
    pp = _dehomogenize(build_factor(p))
    ra, rb = _rem(_dehomogenize(a), pp), _rem(_dehomogenize(b), pp)
    k = next((i for i, x in enumerate(rb) if x), None)
    if k is None:
        return None
    w = -ra[k] / rb[k]
    if all(x + w * y == 0 for x, y in zip(ra, rb)):
        return w
    return None


@lru_cache(maxsize=None)
def _oracle_pencil_values(kind: GroupKind) -> tuple:
    """(w, P, singular?) for every short-orbit invariant P, resultant-verified."""
    family, m = slot_family(kind)
    out = []
    for p in special_invariants(kind):
        w = _solve_pencil_on(kind, p)
        if w is None:
            continue
        pf = build_factor(p)
        member = lambda x: build_factor(InvariantFactor(family, (x,), m))
        assert resultant(member(w), pf) == 0
        assert resultant(member(w + 1), pf) != 0 and resultant(member(w - 1), pf) != 0
        out.append((w, p, not is_squarefree(member(w))))
    return tuple(out)


def exclusion_oracle(c: Configuration) -> list[ForbiddenValue]:
    """Recompute the exclusions of ``c`` from exact resultants and invariance tests."""
    t = c.n_slots
    fixed = [f for f in c.factors if f.is_concrete]
    family, m = slot_family(c.kind)
    out = []
    for i in range(t):
        for w, p, singular in _oracle_pencil_values(c.kind):
            if _covers(fixed, p):
                out.append(ForbiddenValue(i, w, SHARED, witness=p.symbol()))
            elif singular:
                out.append(ForbiddenValue(i, w, SINGULAR, witness=p.symbol()))
        # fixed factors that are not short-orbit invariants (none in the catalog) would go here
    for i, j in itertools.combinations(range(t), 2):
        out.append(ForbiddenValue((i, j), None, PAIRWISE, "equal"))
    # escalation candidates are confirmed by instantiating and testing symmetry
    if t == 1:
        for value in _escalation_candidates(c):
            form = instantiate_unchecked(c, [value])
            if is_squarefree(form) and reduced_symmetry(form, c.m) != c.kind:
                out.append(ForbiddenValue(0, value, ESCALATES))
    if t == 2:
        base = generic_params(c)
        trial = [base[0], -base[0]]
        form = instantiate_unchecked(c, trial)
        if reduced_symmetry(form, c.m) != c.kind:
            out.append(ForbiddenValue((0, 1), None, ESCALATES, "negated"))
        for fv in c.exclusions:
            if fv.relation == "joint":
                form = instantiate_unchecked(c, list(fv.value))
                if reduced_symmetry(form, c.m) != c.kind:
                    out.append(ForbiddenValue((0, 1), fv.value, ESCALATES, "joint"))
    return out


def _escalation_candidates(c: Configuration) -> list[CycloElem]:
    """Finite grid scanned for single-slot escalation."""
    grid = [const(0), const(14), const(-14), const(34), const(-34), 11 * I, -11 * I,
            22 / SQRT5, -22 / SQRT5, 38 * SQRT5 / 3, -38 * SQRT5 / 3]
    grid += [fv.value for fv in c.exclusions if fv.reason == ESCALATES and fv.relation == "value"]
    seen, out = set(), []
    for g in grid:
        key = format_elem(g)
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out


# ---------------------------------------------------------------------------
# the published per-slot lists, kept for comparison only


def published_exclusion_claims(c: Configuration) -> list[CycloElem]:
    """Per-slot values from the published exclusion lists, kept for comparison with the oracle."""
    f = c.flag
    if c.n_slots == 0:
        return []
    if c.kind.tag == "Sym4":
        out = [const(42)] if f["eps2"] else []
        return out + ([const(-66)] if f["eps1"] else [])
    if c.kind.tag == "Alt5":
        out = [const(W_G20)] if f["eps1"] else []
        return out + ([const(W_G30)] if f["eps2"] else [])
    if c.kind.tag == "Alt4":
        v = 8 * SQRT3 * I
        return [const(16), const(-16), v, -v]
    out = [const(2), const(-2)]
    if c.t == 1 and c.variant == "v1" and c.m == 5:
        out.append(-11 * I)
    if c.t == 1 and c.variant == "v2" and c.m == 4:
        out.append(const(14))
    if c.t == 1 and c.variant == "v3" and c.m == 4:
        out.append(const(-34))
    return out


def cross_check_exclusions(c: Configuration) -> dict:
    """Compare the oracle's per-slot values with the stored list and the published claims."""
    oracle = [fv for fv in exclusion_oracle(c) if fv.relation == "value" and fv.slot == 0]
    stored = [fv for fv in c.exclusions if fv.relation == "value" and fv.slot == 0]
    claims = published_exclusion_claims(c)
    o_vals = [fv.value for fv in oracle]
    s_vals = [fv.value for fv in stored]

    def missing(xs, ys):
        return [format_elem(x) for x in xs if not any(x == y for y in ys)]

    return {
        "config": f"{c.kind} d={c.degree} {c.table_flags()}",
        "oracle": [f"{format_elem(fv.value)} ({fv.reason})" for fv in oracle],
        "stored_matches_oracle": not missing(o_vals, s_vals) and not missing(s_vals, o_vals),
        "claims_not_confirmed": missing(claims, o_vals),
        "oracle_not_claimed": missing(o_vals, claims),
    }
