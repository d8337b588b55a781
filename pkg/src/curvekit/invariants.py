"""Minimal invariant binary forms of the finite subgroups D_m, A4, S4, A5 of PGL2.

Each group is represented by one fixed set of generator matrices.  A factor
may carry symbolic parameter slots (see :class:`Slot`) until a configuration
is instantiated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .binforms import BinaryForm, Mat2, act_gl2, proportional
from .errors import ArityMismatch, MissingM
from .exactfield import (
    CycloElem,
    const,
    elem_from_json,
    elem_to_json,
    format_elem,
    root_of_unity,
    sqrt_small,
)

__all__ = [
    "GroupKind",
    "ALT4",
    "SYM4",
    "ALT5",
    "Slot",
    "InvariantFactor",
    "FAMILIES",
    "build_factor",
    "group_generators",
    "extra_generators",
    "is_invariant",
    "is_invariant_under",
    "reduced_symmetry",
    "forced",
    "I",
    "SQRT3",
    "SQRT5",
    "GOLDEN",
]

I = root_of_unity(4)
SQRT3 = sqrt_small(None, 3)
SQRT5 = sqrt_small(None, 5)
GOLDEN = (1 + SQRT5) / 2


@dataclass(frozen=True, order=True)
class GroupKind:
    """One of Dihedral(m), Alt4, Sym4, Alt5."""

    tag: str
    m: Optional[int] = None

    def __post_init__(self):
        if self.tag not in ("Dihedral", "Alt4", "Sym4", "Alt5"):
            raise ValueError(f"unknown group kind {self.tag!r}")
        if self.tag == "Dihedral" and (self.m is None or self.m < 3):
            raise ValueError("Dihedral kinds need m >= 3")
        if self.tag != "Dihedral" and self.m is not None:
            raise ValueError(f"{self.tag} takes no m")

    @classmethod
    def dihedral(cls, m: int) -> "GroupKind":
        return cls("Dihedral", m)

    @property
    def order(self) -> int:
        return {"Alt4": 12, "Sym4": 24, "Alt5": 60}.get(self.tag) or 2 * self.m

    def __str__(self) -> str:
        return f"D_{self.m}" if self.tag == "Dihedral" else {"Alt4": "A_4", "Sym4": "S_4", "Alt5": "A_5"}[self.tag]

    def to_json(self) -> dict:
        return {"tag": self.tag, "m": self.m} if self.m is not None else {"tag": self.tag}

    @classmethod
    def from_json(cls, obj: dict) -> "GroupKind":
        return cls(obj["tag"], obj.get("m"))


ALT4 = GroupKind("Alt4")
SYM4 = GroupKind("Sym4")
ALT5 = GroupKind("Alt5")


@dataclass(frozen=True)
class Slot:
    """A free parameter of a configuration, numbered across the whole equation."""

    index: int

    @property
    def name(self) -> str:
        return f"a{self.index + 1}"

    def __str__(self) -> str:
        return self.name


Param = Union[CycloElem, Slot]

# family -> (arity, degree as function of the integer index, needs index)
FAMILIES = {
    "XY": (0, lambda n: 2, False),
    "T_n_plus": (0, lambda n: n, True),
    "T_n_minus": (0, lambda n: n, True),
    "T_2m_a": (1, lambda n: 2 * n, True),
    "S6": (0, lambda n: 6, False),
    "S4_plus": (0, lambda n: 4, False),
    "S4_minus": (0, lambda n: 4, False),
    "S8_b": (1, lambda n: 8, False),
    "S12_a": (1, lambda n: 12, False),
    "S24_a": (1, lambda n: 24, False),
    "F12_a": (1, lambda n: 12, False),
    "G12_a": (1, lambda n: 12, False),
    "G20_uv": (2, lambda n: 20, False),
    "G30_bc": (2, lambda n: 30, False),
    "G60_a": (1, lambda n: 60, False),
}


def forced(family: str) -> tuple:
    """Parameter values fixed by invariance for the rigid families."""
    return {
        "S8_b": (const(14),),
        "S12_a": (const(-34),),
        "G12_a": (-11 * I,),
        "G20_uv": (228 * I, const(-494)),
        "G30_bc": (-522 * I, const(10005)),
    }[family]


@dataclass(frozen=True)
class InvariantFactor:
    """A tagged invariant form.

    ``m`` is the integer index of the indexed families: n for T_n_plus and
    T_n_minus, and m for T_2m_a (degree 2m).
    """

    family: str
    params: tuple = ()
    m: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        arity, _, needs = FAMILIES[self.family]
        if len(self.params) != arity:
            raise ArityMismatch(f"{self.family} takes {arity} parameters, got {len(self.params)}")
        if needs and self.m is None:
            raise MissingM(f"{self.family} needs its integer index")
        object.__setattr__(self, "params", tuple(self.params))

    @property
    def degree(self) -> int:
        return FAMILIES[self.family][1](self.m)

    @property
    def slots(self) -> list[int]:
        return [i for i, p in enumerate(self.params) if isinstance(p, Slot)]

    @property
    def is_concrete(self) -> bool:
        return not self.slots

    def bind(self, values: dict) -> "InvariantFactor":
        """Replace slots by values from ``values`` (keyed by slot index)."""
        params = tuple(values[p.index] if isinstance(p, Slot) else p for p in self.params)
        return InvariantFactor(self.family, params, self.m)

    def build(self) -> BinaryForm:
        return build_factor(self)

    # -- notation ------------------------------------------------------------
    def symbol(self) -> str:
        p = [_param_text(x) for x in self.params]
        fam = self.family
        if fam == "XY":
            return "XY"
        if fam == "T_n_plus":
            return f"T_{{{self.m},+}}"
        if fam == "T_n_minus":
            return f"T_{{{self.m},-}}"
        if fam == "T_2m_a":
            return f"T_{{{2 * self.m},{p[0]}}}"
        if fam == "S6":
            return "S_6"
        if fam == "S4_plus":
            return "S_{4,+}"
        if fam == "S4_minus":
            return "S_{4,-}"
        head = {"S8_b": "S_{8", "S12_a": "S_{12", "S24_a": "S_{24", "F12_a": "F_{12",
                "G12_a": "G_{12", "G20_uv": "G_{20", "G30_bc": "G_{30", "G60_a": "G_{60"}[fam]
        return head + "," + ",".join(p) + "}"

    def expanded(self) -> str:
        """Monomial notation grouped by powers of XY."""
        p = [_param_text(x, wrap=True) for x in self.params]
        fam, n = self.family, self.m
        if fam == "XY":
            return "XY"
        if fam == "T_n_plus":
            return f"(X^{_e(n)} + Y^{_e(n)})"
        if fam == "T_n_minus":
            return f"(X^{_e(n)} - Y^{_e(n)})"
        if fam == "T_2m_a":
            return f"(X^{_e(2 * n)} + {p[0]}(XY)^{_e(n)} + Y^{_e(2 * n)})"
        if fam == "S6":
            return "XY(X^4 - Y^4)"
        if fam in ("S4_plus", "S4_minus"):
            sign = "+" if fam == "S4_plus" else "-"
            return f"(X^4 + Y^4 {sign} 2sqrt(3)i(XY)^2)"
        if fam == "S8_b":
            return f"(X^8 + {p[0]}(XY)^4 + Y^8)"
        if fam == "F12_a":
            return (f"(X^{{12}} + Y^{{12}} - {p[0]}(XY)^2(X^8 + Y^8) - 33(XY)^4(X^4 + Y^4)"
                    f" + 2{p[0]}(XY)^6)")
        if fam == "G12_a":
            return f"XY(X^{{10}} + {p[0]}(XY)^5 + Y^{{10}})"
        if fam == "G20_uv":
            return f"(X^{{20}} + Y^{{20}} + {p[0]}(XY)^5(X^{{10}} + Y^{{10}}) + {p[1]}(XY)^{{10}})"
        if fam == "G30_bc":
            return (f"(X^{{30}} - Y^{{30}} + {p[0]}(XY)^5(X^{{20}} - Y^{{20}})"
                    f" + {p[1]}(XY)^{{10}}(X^{{10}} - Y^{{10}}))")
        # S12, S24 and G60 print through their symbol to stay readable
        return self.symbol()

    def to_json(self) -> dict:
        out = {"family": self.family,
               "params": [{"slot": x.index} if isinstance(x, Slot) else elem_to_json(x)
                          for x in self.params]}
        if self.m is not None:
            out["m"] = self.m
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "InvariantFactor":
        params = tuple(Slot(x["slot"]) if "slot" in x else elem_from_json(x) for x in obj["params"])
        return cls(obj["family"], params, obj.get("m"))


def _e(n: int) -> str:
    return str(n) if n < 10 else f"{{{n}}}"


def _param_text(x: Param, wrap: bool = False) -> str:
    if isinstance(x, Slot):
        return x.name
    text = format_elem(x)
    if wrap and (" " in text or text.startswith("-")):
        return f"({text})"
    return text


# ---------------------------------------------------------------------------
# building


def _sym(degree: int, terms: dict[int, object]) -> BinaryForm:
    """X^d-symmetric pattern: each (k, c) adds c*X^(d-k)Y^k."""
    return BinaryForm.from_terms(degree, terms)


def _g60_coeffs(a: CycloElem) -> list[CycloElem]:
    e1 = I * (58964600 + a) / 134761
    e2 = -(2094783554 - 5 * a) / 12251
    e3 = -5 * I * (329638533728 + 241 * a) / 134761
    e4 = 35 * (28242591823 - 34 * a) / 12251
    e5 = 3 * I * (5100249334348 + 23195 * a) / 134761
    return [e1, e2, e3, e4, e5]


def g60_form(a, e: Optional[Sequence] = None) -> BinaryForm:
    """G_{60,a}; ``e`` overrides the five computed middle coefficients."""
    a = a if isinstance(a, CycloElem) else const(a)
    es = list(e) if e is not None else _g60_coeffs(a)
    terms = {0: 1, 60: 1, 30: a}
    for i, ei in enumerate(es, start=1):
        terms[5 * i] = ei
        terms[60 - 5 * i] = ei
    return _sym(60, terms)


def build_factor(f: InvariantFactor, m: Optional[int] = None) -> BinaryForm:
    if m is not None and f.m is None and FAMILIES[f.family][2]:
        f = InvariantFactor(f.family, f.params, m)
    if not f.is_concrete:
        raise ArityMismatch(f"factor {f.symbol()} still has free slots")
    fam, n = f.family, f.m
    p = [x if isinstance(x, CycloElem) else const(x) for x in f.params]
    if fam == "XY":
        return _sym(2, {1: 1})
    if fam == "T_n_plus":
        return _sym(n, {0: 1, n: 1})
    if fam == "T_n_minus":
        return _sym(n, {0: 1, n: -1})
    if fam == "T_2m_a":
        return _sym(2 * n, {0: 1, n: p[0], 2 * n: 1})
    if fam == "S6":
        return _sym(6, {1: 1, 5: -1})
    if fam == "S4_plus":
        return _sym(4, {0: 1, 2: 2 * SQRT3 * I, 4: 1})
    if fam == "S4_minus":
        return _sym(4, {0: 1, 2: -2 * SQRT3 * I, 4: 1})
    if fam == "S8_b":
        return _sym(8, {0: 1, 4: p[0], 8: 1})
    if fam == "S12_a":
        c = 1 + p[0]
        return _sym(12, {0: 1, 4: c, 8: c, 12: 1})
    if fam == "S24_a":
        a = p[0]
        return _sym(24, {0: 1, 4: a, 20: a, 8: 759 - 4 * a, 16: 759 - 4 * a, 12: 2576 + 6 * a, 24: 1})
    if fam == "F12_a":
        a = p[0]
        return _sym(12, {0: 1, 12: 1, 2: -a, 10: -a, 4: -33, 8: -33, 6: 2 * a})
    if fam == "G12_a":
        return _sym(12, {1: 1, 6: p[0], 11: 1})
    if fam == "G20_uv":
        u, v = p
        return _sym(20, {0: 1, 20: 1, 5: u, 15: u, 10: v})
    if fam == "G30_bc":
        b, c = p
        return _sym(30, {0: 1, 30: -1, 5: b, 25: -b, 10: c, 20: -c})
    if fam == "G60_a":
        return g60_form(p[0])
    raise ValueError(fam)  # pragma: no cover


# ---------------------------------------------------------------------------
# generators


def _omega_pair() -> tuple[CycloElem, CycloElem]:
    omega = ((-3 + SQRT5) + (1 - SQRT5) * I) / 2
    omega_t = ((3 - SQRT5) + (1 - SQRT5) * I) / 2
    return omega, omega_t


def group_generators(kind: GroupKind) -> list[Mat2]:
    """Fixed representative generators of the group, as substitutions."""
    if kind.tag == "Dihedral":
        return [Mat2.diag(root_of_unity(kind.m), 1), Mat2.swap()]
    if kind.tag == "Alt4":
        return [Mat2.diag(1, -1), Mat2.swap(), Mat2.of(I, I, 1, -1)]
    if kind.tag == "Sym4":
        return [Mat2.diag(I, 1), Mat2.swap(), Mat2.of(1, -1, I, I)]
    if kind.tag == "Alt5":
        return [Mat2.diag(root_of_unity(5), 1), Mat2.swap(), Mat2.of(-GOLDEN, -I, I, GOLDEN)]
    raise ValueError(kind)  # pragma: no cover


def extra_generators() -> dict[str, Mat2]:
    """Named extra elements of the fixed representatives.

    ``phi_S4`` and ``phi_A5`` are the third generators of the S4 and A5 sets.
    ``phi_S4`` already lies in the A4 representative; ``diag_S4`` is the
    element that enlarges A4 to S4, and ``psi_A5`` enlarges it to A5.
    """
    omega, omega_t = _omega_pair()
    return {
        "phi_S4": Mat2.of(1, -1, I, I),
        "diag_S4": Mat2.diag(I, 1),
        "phi_A5": Mat2.of(-GOLDEN, -I, I, GOLDEN),
        "psi_A5": Mat2.of(1, omega, omega_t, 1),
    }


def is_invariant_under(f: BinaryForm, mats: Sequence[Mat2]) -> bool:
    return all(proportional(act_gl2(m, f), f) is not None for m in mats)


def is_invariant(f: BinaryForm, kind: GroupKind) -> bool:
    return is_invariant_under(f, group_generators(kind))


def reduced_symmetry(f: BinaryForm, m_hint: Optional[int] = None) -> Optional[GroupKind]:
    """Largest kind in the tested poset under which F is invariant, or None.

    A4 sits inside the S4 representative, so S4 is tested directly.  A5 is
    tested through its own representative and as the extension of A4 by psi.
    The two A5 (or S4) groups containing a fixed A4 (or D_m) are swapped by a
    normalizing diagonal matrix, so F is also tested after that substitution.
    Dihedral kinds are scanned over multiples of ``m_hint`` up to the degree.
    """
    psi = extra_generators()["psi_A5"]
    views = [f]
    if is_invariant(f, ALT4):
        views.append(act_gl2(Mat2.diag(I, 1), f))
        if any(is_invariant(v, ALT5) or is_invariant_under(v, [psi]) for v in views):
            return ALT5
        return SYM4 if is_invariant(f, SYM4) else ALT4
    if m_hint in (4, 5):
        views.append(act_gl2(Mat2.diag(root_of_unity(2 * m_hint), 1), f))
    if any(is_invariant(v, ALT5) for v in views):
        return ALT5
    if any(is_invariant(v, SYM4) for v in views):
        return SYM4
    if m_hint is None or not is_invariant_under(f, [Mat2.swap()]):
        return None
    best = None
    for km in range(m_hint, max(f.degree, m_hint) + 1, m_hint):
        if km >= 3 and is_invariant_under(f, [Mat2.diag(root_of_unity(km), 1)]):
            best = km
    return GroupKind.dihedral(best) if best else None
