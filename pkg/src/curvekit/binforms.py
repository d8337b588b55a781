"""Homogeneous binary forms over cyclotomic fields.

``coeffs[k]`` multiplies ``X^(d-k) Y^k``.  The GL2 action is substitution,
``act(M, F)(v) = F(M v)`` with ``v = (X, Y)`` a column vector, so
``act(M1, act(M2, F)) == act(M2 @ M1, F)``: a right action.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import SingularMatrix, ZeroForm
from .exactfield import (
    CycloElem,
    common_conductor,
    const,
    elem_from_json,
    elem_to_json,
    field_create,
    format_elem,
)

__all__ = [
    "BinaryForm",
    "Mat2",
    "form_mul",
    "act_gl2",
    "resultant",
    "is_squarefree",
    "squarefree_witness",
    "proportional",
    "unify",
]


def unify(values: Sequence) -> list[CycloElem]:
    """Lift scalars into a single common cyclotomic field."""
    elems = [v if isinstance(v, CycloElem) else const(v) for v in values]
    n = common_conductor(*(e.field.conductor for e in elems)) if elems else 1
    field = field_create(n)
    return [e.embed(field) for e in elems]


class BinaryForm:
    """Immutable homogeneous form of fixed declared degree."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, coeffs: Sequence):
        if len(coeffs) == 0:
            raise ValueError("a form needs at least one coefficient")
        self.coeffs = tuple(unify(coeffs))
        self.degree = len(self.coeffs) - 1

    @classmethod
    def _raw(cls, coeffs) -> "BinaryForm":
        obj = object.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.degree = len(obj.coeffs) - 1
        return obj

    @classmethod
    def from_terms(cls, degree: int, terms: dict) -> "BinaryForm":
        """``terms`` maps the Y-exponent k to the coefficient of X^(d-k) Y^k."""
        coeffs = [0] * (degree + 1)
        for k, c in terms.items():
            coeffs[k] = coeffs[k] + c if isinstance(coeffs[k], CycloElem) else c
        return cls(coeffs)

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "BinaryForm":
        """c * X^i Y^j."""
        return cls.from_terms(i + j, {j: c})

    @property
    def field(self):
        return self.coeffs[0].field

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- algebra -------------------------------------------------------------
    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            return form_mul(self, other)
        return BinaryForm([c * other for c in self.coeffs])

    def __rmul__(self, other):
        return BinaryForm([c * other for c in self.coeffs])

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if other.degree != self.degree:
            raise ValueError("adding forms of different degree")
        return BinaryForm([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return BinaryForm._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __pow__(self, e: int) -> "BinaryForm":
        out = BinaryForm([1])
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.degree == other.degree and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def embed(self, field) -> "BinaryForm":
        return BinaryForm._raw([c.embed(field) for c in self.coeffs])

    def act(self, m: "Mat2") -> "BinaryForm":
        return act_gl2(m, self)

    def evaluate(self, x, y) -> CycloElem:
        d = self.degree
        total = const(0)
        for k, c in enumerate(self.coeffs):
            if c:
                total = total + c * (x ** (d - k)) * (y**k)
        return total

    def partial_x(self) -> "BinaryForm":
        d = self.degree
        if d == 0:
            return BinaryForm([0])
        return BinaryForm._raw([c * (d - k) for k, c in enumerate(self.coeffs[:-1])])

    def partial_y(self) -> "BinaryForm":
        if self.degree == 0:
            return BinaryForm([0])
        return BinaryForm._raw([c * k for k, c in enumerate(self.coeffs) if k > 0])

    # -- display / io --------------------------------------------------------
    def pretty(self) -> str:
        d = self.degree
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = _monomial_text(d - k, k)
            text = format_elem(c)
            if mono:
                if text == "1":
                    body, sign = mono, "+"
                elif text == "-1":
                    body, sign = mono, "-"
                elif text.startswith("-") and " " not in text:
                    body, sign = f"{text[1:]}{mono}", "-"
                elif " " in text:
                    body, sign = f"({text}){mono}", "+"
                else:
                    body, sign = f"{text}{mono}", "+"
            else:
                if text.startswith("-") and " " not in text:
                    body, sign = text[1:], "-"
                else:
                    body, sign = (f"({text})" if " " in text else text), "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"BinaryForm(deg={self.degree}: {self.pretty()})"

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [elem_to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "BinaryForm":
        coeffs = [elem_from_json(c) for c in obj["coeffs"]]
        if len(coeffs) != int(obj["degree"]) + 1:
            raise ValueError("degree does not match coefficient count")
        return cls(coeffs)


def _monomial_text(i: int, j: int) -> str:
    def power(v, e):
        if e == 0:
            return ""
        return v if e == 1 else f"{v}^{e}" if e < 10 else f"{v}^{{{e}}}"

    return power("X", i) + power("Y", j)


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix ``[[a, b], [c, d]]`` acting by substitution."""

    a: CycloElem
    b: CycloElem
    c: CycloElem
    d: CycloElem

    @classmethod
    def of(cls, a, b, c, d) -> "Mat2":
        return cls(*unify([a, b, c, d]))

    @classmethod
    def identity(cls) -> "Mat2":
        return cls.of(1, 0, 0, 1)

    @classmethod
    def diag(cls, x, y) -> "Mat2":
        return cls.of(x, 0, 0, y)

    @classmethod
    def swap(cls) -> "Mat2":
        return cls.of(0, 1, 1, 0)

    @property
    def entries(self):
        return ((self.a, self.b), (self.c, self.d))

    def det(self) -> CycloElem:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2.of(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def scale(self, s) -> "Mat2":
        return Mat2.of(self.a * s, self.b * s, self.c * s, self.d * s)

    def inverse(self) -> "Mat2":
        det = self.det()
        if not det:
            raise SingularMatrix("matrix is not invertible")
        inv = det.inverse()
        return Mat2.of(self.d * inv, -self.b * inv, -self.c * inv, self.a * inv)

    def scalar_value(self) -> Optional[CycloElem]:
        """The scalar s if the matrix equals s * I, else None."""
        if self.b or self.c or self.a != self.d:
            return None
        return self.a

    def power(self, e: int) -> "Mat2":
        out, base = Mat2.identity(), self
        if e < 0:
            base, e = self.inverse(), -e
        while e:
            if e & 1:
                out = out @ base
            base = base @ base
            e >>= 1
        return out

    def to_json(self) -> list:
        return [[elem_to_json(x) for x in row] for row in self.entries]


# ---------------------------------------------------------------------------
# products and the substitution action


def form_mul(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    fa = [(i, x) for i, x in enumerate(f.coeffs) if x]
    gb = [(j, y) for j, y in enumerate(g.coeffs) if y]
    fc, gc = unify([f.coeffs[0], g.coeffs[0]])
    field = fc.field
    out = [field.zero()] * (f.degree + g.degree + 1)
    for i, x in fa:
        for j, y in gb:
            out[i + j] = out[i + j] + x * y
    return BinaryForm(out)


def _scale_xy(coeffs: list, s, t) -> list:
    """F(sX, tY)."""
    d = len(coeffs) - 1
    out = []
    for k, c in enumerate(coeffs):
        out.append(c * (s ** (d - k)) * (t**k) if c else c)
    return out


def _shear_x(coeffs: list, t) -> list:
    """F(X + tY, Y) by a Taylor shift of F(x, 1)."""
    d = len(coeffs) - 1
    a = list(reversed(coeffs))
    for i in range(d):
        for j in range(d - 1, i - 1, -1):
            nxt = a[j + 1]
            if nxt:
                a[j] = a[j] + t * nxt
    return list(reversed(a))


def _shear_y(coeffs: list, t) -> list:
    """F(X, tX + Y)."""
    return list(reversed(_shear_x(list(reversed(coeffs)), t)))


def act_gl2(m: Mat2, f: BinaryForm) -> BinaryForm:
    """F(aX + bY, cX + dY) for ``m = [[a, b], [c, d]]``."""
    if not m.det():
        raise SingularMatrix("substitution matrix is singular")
    k = f.degree + 1
    lifted = unify(list(f.coeffs) + [m.a, m.b, m.c, m.d])
    coeffs, (a, b, c, d) = lifted[:k], lifted[k:]
    if not a:
        # F(bY, cX + dY) = F'(cX + dY, bY) with F'(X, Y) = F(Y, X)
        coeffs = coeffs[::-1]
        a, b, c, d = c, d, a, b
    e = (a * d - b * c) / a
    out = _scale_xy(coeffs, a, e)
    if c:
        out = _shear_y(out, c / e)
    if b:
        out = _shear_x(out, b / a)
    return BinaryForm(out)


# ---------------------------------------------------------------------------
# resultants


def _bareiss_det(rows: list[list[CycloElem]]) -> CycloElem:
    n = len(rows)
    if n == 0:
        return const(1)
    field = rows[0][0].field
    one = field.one()
    sign = 1
    prev_inv = one
    for k in range(n - 1):
        if not rows[k][k]:
            swap = next((i for i in range(k + 1, n) if rows[i][k]), None)
            if swap is None:
                return field.zero()
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        row_k = rows[k]
        for i in range(k + 1, n):
            row_i = rows[i]
            mik = row_i[k]
            for j in range(k + 1, n):
                v = row_i[j]
                rk = row_k[j]
                if mik and rk:
                    v = pivot * v - mik * rk if v else -(mik * rk)
                elif v:
                    v = pivot * v
                else:
                    continue
                row_i[j] = v * prev_inv if prev_inv is not one else v
            row_i[k] = field.zero()
        prev_inv = pivot.inverse()
    result = rows[n - 1][n - 1]
    return -result if sign < 0 else result


def _integral_scale(coeffs: list[CycloElem]) -> int:
    den = 1
    for c in coeffs:
        den = math.lcm(den, c.den)
    return den


def resultant(f: BinaryForm, g: BinaryForm) -> CycloElem:
    """Homogeneous Sylvester resultant; zero iff F and G share a root in P^1."""
    if f.is_zero() or g.is_zero():
        raise ZeroForm("resultant of a zero form")
    m, n = f.degree, g.degree
    coeffs = unify(list(f.coeffs) + list(g.coeffs))
    fc, gc = coeffs[: m + 1], coeffs[m + 1 :]
    field = coeffs[0].field
    # clear denominators so Bareiss stays in integral coordinates
    sf, sg = _integral_scale(fc), _integral_scale(gc)
    fc = [c * sf for c in fc]
    gc = [c * sg for c in gc]
    size = m + n
    zero = field.zero()
    rows = []
    for r in range(n):
        rows.append([zero] * r + fc + [zero] * (size - m - 1 - r))
    for r in range(m):
        rows.append([zero] * r + gc + [zero] * (size - n - 1 - r))
    det = _bareiss_det(rows) if size else field.one()
    return det / (Fraction(sf) ** n * Fraction(sg) ** m)


# ---------------------------------------------------------------------------
# squarefreeness


def _poly_trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_monic(p: list) -> list:
    inv = p[-1].inverse()
    return [c * inv for c in p[:-1]] + [p[-1].field.one()]


def _poly_rem(a: list, b_monic: list) -> list:
    a = list(a)
    db = len(b_monic) - 1
    while len(a) > db:
        c = a[-1]
        if c:
            shift = len(a) - 1 - db
            for j in range(db):
                y = b_monic[j]
                if y:
                    a[shift + j] = a[shift + j] - c * y
        a.pop()
    return _poly_trim(a)


def _poly_gcd_degree(a: list, b: list) -> int:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    if len(a) < len(b):
        a, b = b, a
    while b:
        bm = _poly_monic(b)
        a, b = bm, _poly_rem(a, bm)
    return len(a) - 1


def squarefree_witness(f: BinaryForm) -> Optional[str]:
    """None if F has no repeated root in P^1, else a short description."""
    if f.is_zero():
        raise ZeroForm("squarefreeness of the zero form")
    c = list(unify(f.coeffs))
    d = len(c) - 1
    lead = next(k for k, x in enumerate(c) if x)  # Y^lead divides F
    tail = next(k for k, x in enumerate(reversed(c)) if x)  # X^tail divides F
    if lead > 1:
        return f"root (1:0) of multiplicity {lead}"
    if tail > 1:
        return f"root (0:1) of multiplicity {tail}"
    core = c[lead : d + 1 - tail]
    # ascending polynomial in x = X/Y with nonzero constant and leading terms
    poly = list(reversed(core))
    deg = len(poly) - 1
    if deg <= 1:
        return None
    deriv = [poly[k] * k for k in range(1, deg + 1)]
    g = _poly_gcd_degree(poly, deriv)
    if g > 0:
        return f"gcd(F, dF) has degree {g}"
    return None


def is_squarefree(f: BinaryForm) -> bool:
    return squarefree_witness(f) is None


# ---------------------------------------------------------------------------
# proportionality


def proportional(f: BinaryForm, g: BinaryForm) -> Optional[CycloElem]:
    """lambda with F == lambda * G, or None."""
    if f.degree != g.degree:
        raise ValueError("proportionality needs equal degrees")
    if g.is_zero():
        return const(1) if f.is_zero() else None
    k = next(i for i, x in enumerate(g.coeffs) if x)
    if f.is_zero():
        return g.coeffs[k].field.zero()
    for x, y in zip(f.coeffs, g.coeffs):
        if bool(x) != bool(y):
            return None
    fk, gk = f.coeffs[k], g.coeffs[k]
    for x, y in zip(f.coeffs, g.coeffs):
        if x and x * gk != fk * y:
            return None
    return fk / gk
