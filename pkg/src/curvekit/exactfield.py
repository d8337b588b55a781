"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, z, ..., z^(n-1) of Q(zeta_N) modulo
the cyclotomic polynomial Phi_N, with n = phi(N).  A coefficient vector is an
integer tuple sharing one positive denominator, which keeps the hot paths
(multiplication and equality) in plain integer arithmetic.

Mixed arithmetic between different conductors lifts both operands to the lcm
conductor.  The lcm is capped (default 10**5, override with the environment
variable ``CURVEKIT_CONDUCTOR_CAP``) so runaway lifts fail loudly.
"""

from __future__ import annotations

import cmath
import math
import os
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .errors import ConductorOverflow, DivisionByZero, NotASubfield, NotRepresentable

DEFAULT_CONDUCTOR_CAP = 10**5

__all__ = [
    "CycloField",
    "CycloElem",
    "field_create",
    "arith",
    "zeta",
    "root_of_unity",
    "sqrt_small",
    "embed",
    "const",
    "common_conductor",
    "conductor_cap",
    "elem_to_json",
    "elem_from_json",
    "format_elem",
    "parse_scalar",
]


def conductor_cap() -> int:
    raw = os.environ.get("CURVEKIT_CONDUCTOR_CAP")
    return int(raw) if raw else DEFAULT_CONDUCTOR_CAP


# ---------------------------------------------------------------------------
# integer polynomial helpers (ascending coefficient lists)


def _divisors(n: int) -> list[int]:
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _euler_phi(n: int) -> int:
    result = n
    for p in _prime_factors(n):
        result -= result // p
    return result


def _moebius(n: int) -> int:
    sign, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            sign = -sign
        p += 1
    return -sign if n > 1 else sign


def _exact_div_monic(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            quot[k - dn] = c
            for j, dj in enumerate(den):
                num[k - dn + j] -= c * dj
    assert not any(num[:dn]), "inexact cyclotomic division"
    return quot


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Ascending integer coefficients of Phi_n."""
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    primes = _prime_factors(n)
    rad = math.prod(primes)
    if rad != n:
        base = cyclotomic_poly(rad)
        step = n // rad
        out = [0] * ((len(base) - 1) * step + 1)
        for k, c in enumerate(base):
            out[k * step] = c
        return tuple(out)
    poly = [-1] + [0] * (n - 1) + [1]
    for e in _divisors(n)[:-1]:
        poly = _exact_div_monic(poly, cyclotomic_poly(e))
    return tuple(poly)


# ---------------------------------------------------------------------------
# fields


class CycloField:
    """The cyclotomic field Q(zeta_N); obtain instances via :func:`field_create`."""

    __slots__ = ("conductor", "modulus", "degree", "_red", "_trace", "_zpow", "__weakref__")

    def __init__(self, conductor: int):
        if not isinstance(conductor, int) or conductor < 1:
            raise ValueError(f"conductor must be a positive integer, got {conductor!r}")
        self.conductor = conductor
        self.modulus = cyclotomic_poly(conductor)
        self.degree = len(self.modulus) - 1
        # x^n = -sum c_j x^j, kept sparse
        self._red = tuple((j, -c) for j, c in enumerate(self.modulus[:-1]) if c)
        phi = self.degree
        trace = []
        for k in range(phi):
            g = math.gcd(conductor, k)
            q = conductor // g
            trace.append(Fraction(_moebius(q) * phi // _euler_phi(q), phi))
        self._trace = tuple(trace)
        self._zpow = {}

    def __repr__(self) -> str:
        return f"CycloField({self.conductor})"

    def __reduce__(self):
        return (field_create, (self.conductor,))

    # reduction of an ascending integer list of any length modulo Phi_N
    def reduce(self, poly: list[int]) -> list[int]:
        n = self.degree
        if len(poly) <= n:
            return poly + [0] * (n - len(poly))
        red = self._red
        for k in range(len(poly) - 1, n - 1, -1):
            c = poly[k]
            if c:
                base = k - n
                for j, cj in red:
                    poly[base + j] += c * cj
        del poly[n:]
        return poly

    def zeta_power_vec(self, e: int) -> tuple[int, ...]:
        """Integer coordinates of zeta_N^e."""
        e %= self.conductor
        vec = self._zpow.get(e)
        if vec is None:
            poly = [0] * (e + 1)
            poly[e] = 1
            vec = tuple(self.reduce(poly))
            self._zpow[e] = vec
        return vec

    def element(self, num, den: int = 1) -> "CycloElem":
        return CycloElem._make(self, tuple(num), den)

    def zero(self) -> "CycloElem":
        return CycloElem._make(self, (0,) * self.degree, 1, True)

    def one(self) -> "CycloElem":
        return self.scalar(1)

    def scalar(self, q) -> "CycloElem":
        q = Fraction(q)
        num = [0] * self.degree
        num[0] = q.numerator
        return CycloElem._make(self, tuple(num), q.denominator, True)

    def zeta(self, k: int, power: int = 1) -> "CycloElem":
        return zeta(self, k, power)


@lru_cache(maxsize=None)
def field_create(conductor: int) -> CycloField:
    if not isinstance(conductor, int) or conductor < 1:
        raise ValueError(f"conductor must be a positive integer, got {conductor!r}")
    return CycloField(conductor)


def common_conductor(*orders: int) -> int:
    """lcm of the requested root orders, checked against the cap."""
    n = 1
    for k in orders:
        n = math.lcm(n, k)
    if n > conductor_cap():
        raise ConductorOverflow(f"conductor {n} exceeds cap {conductor_cap()}")
    return n


@lru_cache(maxsize=4096)
def _embedding_table(source: int, target: int):
    src, tgt = field_create(source), field_create(target)
    step = target // source
    return tuple(
        tuple((j, c) for j, c in enumerate(tgt.zeta_power_vec(k * step)) if c)
        for k in range(src.degree)
    )


# ---------------------------------------------------------------------------
# elements


class CycloElem:
    """Immutable element of Q(zeta_N): ``sum(num[k] * z^k) / den``."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: CycloField, coeffs):
        """Build from a list of rationals in the power basis."""
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > field.degree:
            coeffs_int = self._from_fractions(coeffs)
            num, den = field.reduce(list(coeffs_int[0])), coeffs_int[1]
        else:
            num, den = self._from_fractions(coeffs + [Fraction(0)] * (field.degree - len(coeffs)))
        obj = CycloElem._make(field, tuple(num), den)
        self.field, self.num, self.den = obj.field, obj.num, obj.den

    @staticmethod
    def _from_fractions(coeffs):
        den = 1
        for c in coeffs:
            den = math.lcm(den, c.denominator)
        return [int(c * den) for c in coeffs], den

    @classmethod
    def _make(cls, field, num, den, normalized=False):
        obj = object.__new__(cls)
        if not normalized:
            if den < 0:
                num, den = tuple(-x for x in num), -den
            if den != 1:
                g = math.gcd(den, *num)
                if g != 1:
                    num = tuple(x // g for x in num)
                    den //= g
            elif not any(num):
                den = 1
        obj.field, obj.num, obj.den = field, num, den
        return obj

    # -- basic queries -----------------------------------------------------
    @property
    def conductor(self) -> int:
        return self.field.conductor

    @property
    def coeffs(self) -> list[Fraction]:
        return [Fraction(x, self.den) for x in self.num]

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self) -> bool:
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise NotRepresentable("element is not rational")
        return Fraction(self.num[0], self.den)

    def support(self) -> list[int]:
        return [k for k, x in enumerate(self.num) if x]

    def normalized_trace(self) -> Fraction:
        """Trace to Q divided by the field degree; independent of the conductor."""
        tr = self.field._trace
        total = sum(x * tr[k] for k, x in enumerate(self.num) if x)
        return Fraction(total) / self.den

    # -- coercion ------------------------------------------------------------
    def _coerce(self, other):
        """Return (a, b) in a common field, or None if other is foreign."""
        if isinstance(other, CycloElem):
            if other.field is self.field:
                return self, other
            n = math.lcm(self.field.conductor, other.field.conductor)
            if n > conductor_cap():
                raise ConductorOverflow(f"conductor {n} exceeds cap {conductor_cap()}")
            f = field_create(n)
            return self.embed(f), other.embed(f)
        if isinstance(other, (int, Rational)):
            return self, self.field.scalar(other)
        return None

    def embed(self, target: CycloField) -> "CycloElem":
        if isinstance(target, int):
            target = field_create(target)
        if target is self.field:
            return self
        src = self.field.conductor
        if target.conductor % src:
            raise NotASubfield(f"Q(zeta_{src}) does not embed in Q(zeta_{target.conductor})")
        table = _embedding_table(src, target.conductor)
        out = [0] * target.degree
        for k, x in enumerate(self.num):
            if x:
                for j, c in table[k]:
                    out[j] += x * c
        return CycloElem._make(target, tuple(out), self.den)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if a.den == b.den:
            num = tuple(x + y for x, y in zip(a.num, b.num))
            return CycloElem._make(a.field, num, a.den)
        num = tuple(x * b.den + y * a.den for x, y in zip(a.num, b.num))
        return CycloElem._make(a.field, num, a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return CycloElem._make(self.field, tuple(-x for x in self.num), self.den, True)

    def __pos__(self):
        return self

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b + (-a)

    def _scale(self, q) -> "CycloElem":
        q = Fraction(q)
        return CycloElem._make(
            self.field, tuple(x * q.numerator for x in self.num), self.den * q.denominator
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloElem._make(self.field, tuple(x * other for x in self.num), self.den)
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        fa = [(i, x) for i, x in enumerate(a.num) if x]
        fb = [(j, y) for j, y in enumerate(b.num) if y]
        field = a.field
        if not fa or not fb:
            return field.zero()
        if len(fb) == 1 and fb[0][0] == 0:
            y = fb[0][1]
            return CycloElem._make(field, tuple(x * y for x in a.num), a.den * b.den)
        if len(fa) == 1 and fa[0][0] == 0:
            x = fa[0][1]
            return CycloElem._make(field, tuple(x * y for y in b.num), a.den * b.den)
        n = field.degree
        prod = [0] * (2 * n - 1)
        for i, x in fa:
            for j, y in fb:
                prod[i + j] += x * y
        return CycloElem._make(field, tuple(field.reduce(prod)), a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloElem":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        field = self.field
        sup = self.support()
        if len(sup) == 1:
            k = sup[0]
            c = Fraction(self.den, self.num[k])
            vec = field.zeta_power_vec(field.conductor - k)
            return CycloElem._make(field, vec, 1, True)._scale(c)
        return _inverse_cached(self)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self._scale(Fraction(1) / Fraction(other))
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b * a.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base, e = self.inverse(), -e
        sup = base.support()
        if len(sup) == 1:
            k = sup[0]
            field = base.field
            vec = field.zeta_power_vec(k * e)
            c = Fraction(base.num[k], base.den) ** e
            return CycloElem._make(field, vec, 1, True)._scale(c)
        result = base.field.one()
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- comparison ----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CycloElem):
            if other.field is not self.field:
                a, b = self._coerce(other)
                return a.num == b.num and a.den == b.den
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Rational)):
            q = Fraction(other)
            return self.is_rational() and self.num[0] * q.denominator == q.numerator * self.den
        return NotImplemented

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __hash__(self):
        return hash(self.normalized_trace())

    def key(self) -> tuple:
        """Hashable identity within a fixed conductor."""
        return (self.field.conductor, self.num, self.den)

    # -- display -------------------------------------------------------------
    def to_complex(self) -> complex:
        """Numerical value under zeta_N = exp(2 pi i / N); display only."""
        w = cmath.exp(2j * cmath.pi / self.field.conductor)
        return sum(x * w**k for k, x in enumerate(self.num) if x) / self.den

    def __repr__(self) -> str:
        return f"CycloElem({format_elem(self)} in Q(zeta_{self.field.conductor}))"

    def __str__(self) -> str:
        return format_elem(self)


@lru_cache(maxsize=8192)
def _inverse_by_key(conductor: int, num: tuple, den: int):
    field = field_create(conductor)
    a = [Fraction(x) for x in num]
    inv = _poly_inverse_mod(a, [Fraction(c) for c in field.modulus])
    return CycloElem(field, [c * den for c in inv])


def _inverse_cached(x: CycloElem) -> CycloElem:
    return _inverse_by_key(x.field.conductor, x.num, x.den)


def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_inverse_mod(a: list[Fraction], m: list[Fraction]) -> list[Fraction]:
    """u with u*a = 1 modulo m via the extended Euclidean algorithm over Q."""
    r0, r1 = _trim(list(m)), _trim(list(a))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1:
        lead = r1[-1]
        r = list(r0)
        q = [Fraction(0)] * (len(r) - len(r1) + 1)
        while len(r) >= len(r1):
            c = r[-1] / lead
            shift = len(r) - len(r1)
            q[shift] = c
            if c:
                for j, y in enumerate(r1):
                    r[shift + j] -= c * y
            r.pop()
            _trim(r)
            if not r:
                break
        # s_new = s0 - q * s1
        prod = [Fraction(0)] * (len(q) + len(s1) - 1)
        for i, x in enumerate(q):
            if x:
                for j, y in enumerate(s1):
                    prod[i + j] += x * y
        size = max(len(s0), len(prod))
        s_new = [
            (s0[k] if k < len(s0) else 0) - (prod[k] if k < len(prod) else 0) for k in range(size)
        ]
        r0, r1 = r1, r
        s0, s1 = s1, _trim(s_new) or [Fraction(0)]
        if not r1:
            raise DivisionByZero("element is not invertible modulo the cyclotomic polynomial")
    c = r1[0]
    return [x / c for x in s1]


# ---------------------------------------------------------------------------
# module-level operations


def arith(a: CycloElem, b: CycloElem, op: str) -> CycloElem:
    ops = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}
    if op not in ops:
        raise ValueError(f"unknown operation {op!r}")
    return ops[op](b)


def zeta(field, k: int, power: int = 1) -> CycloElem:
    """zeta_k^power = zeta_N^(power * N / k) inside ``field``."""
    if isinstance(field, int):
        field = field_create(field)
    if k < 1 or field.conductor % k:
        raise NotRepresentable(f"zeta_{k} is not in Q(zeta_{field.conductor})")
    vec = field.zeta_power_vec((field.conductor // k) * power)
    return CycloElem._make(field, vec, 1, True)


def root_of_unity(k: int, power: int = 1) -> CycloElem:
    """zeta_k^power in its own field Q(zeta_k)."""
    return zeta(field_create(k), k, power)


def const(q) -> CycloElem:
    """A rational constant in Q = Q(zeta_1)."""
    if isinstance(q, CycloElem):
        return q
    return field_create(1).scalar(q)


@lru_cache(maxsize=None)
def _sqrt_base(n: int) -> CycloElem:
    if n == 2:
        return root_of_unity(8) + root_of_unity(8, -1)
    if n == 3:
        return root_of_unity(12) + root_of_unity(12, -1)
    if n == 5:
        return root_of_unity(5) - root_of_unity(5, 2) - root_of_unity(5, 3) + root_of_unity(5, 4)
    raise NotRepresentable(f"sqrt({n}) is not supported")


_SQRT_CONDUCTOR = {2: 8, 3: 12, 5: 5}


def sqrt_small(field=None, n: int = 5) -> CycloElem:
    """Fixed Gauss-sum square root of 2, 3 or 5."""
    if n not in _SQRT_CONDUCTOR:
        raise NotRepresentable(f"sqrt({n}) is not supported")
    base = _sqrt_base(n)
    if field is None:
        return base
    if isinstance(field, int):
        field = field_create(field)
    if field.conductor % _SQRT_CONDUCTOR[n]:
        raise NotRepresentable(f"sqrt({n}) needs conductor divisible by {_SQRT_CONDUCTOR[n]}")
    return base.embed(field)


def embed(e: CycloElem, target) -> CycloElem:
    return e.embed(target)


# ---------------------------------------------------------------------------
# serialization and display


def elem_to_json(x: CycloElem) -> dict:
    return {"conductor": x.field.conductor, "coeffs": [[c.numerator, c.denominator] for c in x.coeffs]}


def elem_from_json(obj: dict) -> CycloElem:
    field = field_create(int(obj["conductor"]))
    return CycloElem(field, [Fraction(int(n), int(d)) for n, d in obj["coeffs"]])


def _solve_rational(x: CycloElem, basis: list[CycloElem]):
    """Rational r with x = sum r_j basis_j, or None."""
    vecs = [b.embed(x.field).coeffs for b in basis]
    target = x.coeffs
    k = len(vecs)
    rows = [[vecs[j][i] for j in range(k)] + [target[i]] for i in range(len(target))]
    pivots, r = [], 0
    for col in range(k):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][col]
        rows[r] = [v / p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(row[-1] != 0 for row in rows[r:]):
        return None
    sol = [Fraction(0)] * k
    for i, col in enumerate(pivots):
        sol[col] = rows[i][-1]
    return sol


def _named_bases(n: int):
    i = root_of_unity(4)
    out = []
    if n % 4 == 0:
        out.append(([const(1), i], ["", "i"]))
    if n % 5 == 0:
        out.append(([const(1), sqrt_small(None, 5)], ["", "sqrt(5)"]))
    if n % 3 == 0:
        out.append(([const(1), 2 * root_of_unity(3) + 1], ["", "sqrt(3)i"]))
    if n % 8 == 0:
        out.append(([const(1), sqrt_small(None, 2)], ["", "sqrt(2)"]))
    if n % 12 == 0:
        out.append(([const(1), sqrt_small(None, 3)], ["", "sqrt(3)"]))
    if n % 20 == 0:
        s5 = sqrt_small(None, 5)
        out.append(([const(1), s5, i, s5 * i], ["", "sqrt(5)", "i", "sqrt(5)i"]))
    if n % 12 == 0:
        s3 = sqrt_small(None, 3)
        out.append(([const(1), s3, i, s3 * i], ["", "sqrt(3)", "i", "sqrt(3)i"]))
    if n % 8 == 0:
        s2 = sqrt_small(None, 2)
        out.append(([const(1), s2, i, s2 * i], ["", "sqrt(2)", "i", "sqrt(2)i"]))
    return out


def _fmt_q(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _join_terms(terms: list[tuple[Fraction, str]]) -> str:
    parts = []
    for q, name in terms:
        if q == 0:
            continue
        mag = abs(q)
        if name:
            body = name if mag == 1 else f"{_fmt_q(mag)}{'*' if '/' in _fmt_q(mag) else ''}{name}"
        else:
            body = _fmt_q(mag)
        sign = "-" if q < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def format_elem(x: CycloElem) -> str:
    """Readable text: rationals, then i and small radicals, else zeta_N powers."""
    if x.is_rational():
        return _fmt_q(x.to_fraction())
    n = x.field.conductor
    for basis, names in _named_bases(n):
        sol = _solve_rational(x, basis)
        if sol is not None:
            return _join_terms(list(zip(sol, names)))
    terms = []
    for k, c in enumerate(x.coeffs):
        if c:
            terms.append((c, "" if k == 0 else (f"z{n}" if k == 1 else f"z{n}^{k}")))
    return _join_terms(terms)


def parse_scalar(text: str) -> CycloElem:
    """Parse an integer, a rational ``p/q`` or a Gaussian rational ``a+bi``."""
    s = text.replace(" ", "").replace("*", "")
    if not s:
        raise ValueError("empty scalar")
    if s.endswith("i"):
        body = s[:-1]
        # split at the last sign that is not a leading sign
        cut = max(body.rfind("+", 1), body.rfind("-", 1))
        if cut > 0 and body[cut - 1] not in "eE/":
            real, imag = body[:cut], body[cut:]
        else:
            real, imag = "0", body
        if imag in ("", "+"):
            imag = "1"
        elif imag == "-":
            imag = "-1"
        return const(Fraction(real)) + Fraction(imag) * root_of_unity(4)
    return const(Fraction(s))
