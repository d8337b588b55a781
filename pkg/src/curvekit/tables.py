"""Classification tables: emission from the enumerator and comparison with golden files."""

from __future__ import annotations

import csv
import io
import re
from dataclasses import asdict, dataclass, fields
from importlib import resources
from typing import Iterable, Optional

from .autgroup import g0_of
from .classify import ALL_DIHEDRAL, Configuration, enumerate_range

COLUMNS = ("d", "flags", "equation", "group", "remarks", "override", "note")

# kind -> (golden file, enumerator kind, d_min, d_max)
TABLES = {
    "dihedral": ("table_dihedral.csv", ALL_DIHEDRAL, 4, 15),
    "s4": ("table_s4.csv", "s4", 4, 30),
    "a4": ("table_a4.csv", "a4", 4, 32),
    "a5": ("table_a5.csv", "a5", 4, 100),
}
ALIASES = {"d_m": "dihedral", "dm": "dihedral", "sym4": "s4", "alt4": "a4", "alt5": "a5"}


@dataclass(frozen=True)
class TableRow:
    d: int
    flags: str
    equation: str
    group: str
    remarks: str = ""
    override: str = ""
    note: str = ""

    def overrides(self) -> dict[str, str]:
        if not self.override or self.override == "extra":
            return {}
        return dict(part.split("=", 1) for part in self.override.split(";"))

    def expected(self) -> tuple[str, str, str]:
        """(flags, equation, group) that the emitter must produce for this row."""
        o = self.overrides()
        return (o.get("flags", self.flags), o.get("equation", self.equation), o.get("group", self.group))


def table_name(kind: str) -> str:
    name = ALIASES.get(kind.lower(), kind.lower())
    if name not in TABLES:
        raise KeyError(f"unknown table {kind!r}; choose from {', '.join(TABLES)}")
    return name


def _remarks(c: Configuration) -> str:
    return "; ".join(e.describe() for e in c.exclusions)


def row_of(c: Configuration) -> TableRow:
    return TableRow(c.degree, c.table_flags(), c.equation_symbol(), str(g0_of(c)), _remarks(c))


def emit_rows(kind: str, d_min: Optional[int] = None, d_max: Optional[int] = None) -> list[TableRow]:
    _, enum_kind, lo, hi = TABLES[table_name(kind)]
    configs = enumerate_range(enum_kind, lo if d_min is None else d_min, hi if d_max is None else d_max)
    return [row_of(c) for c in sorted(configs, key=lambda c: c.sort_key())]


def load_golden(kind: str) -> list[TableRow]:
    fname = TABLES[table_name(kind)][0]
    text = resources.files("curvekit.data").joinpath(fname).read_text(encoding="utf-8")
    return [TableRow(int(r["d"]), *(r[k] for k in COLUMNS[1:])) for r in csv.DictReader(io.StringIO(text))]


def write_csv(rows: Iterable[TableRow], fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in rows:
        w.writerow([getattr(r, f.name) for f in fields(TableRow)])


# -- structural normalization ------------------------------------------------

_PARAM = re.compile(r"\ba(?:_?(\d))?\b")


def norm_equation(s: str) -> tuple:
    """Order-insensitive factor multiset with unified parameter names."""
    s = s.replace("·", "*").replace("\\cdot", "*").replace(" ", "")
    s = s.replace("zeta_4", "i").replace("ζ_4", "i").replace("−", "-")
    s = _PARAM.sub(lambda m: f"a{m.group(1) or 1}", s)
    return tuple(sorted(s.split("*")))


def norm_group(s: str) -> str:
    s = s.replace(" ", "").replace("\\times", "×").replace("x", "×")
    s = re.sub(r"C_\{?2\^\{?(\d+)\}?\}?", lambda m: f"C_{2 ** int(m.group(1))}", s)
    return re.sub(r"_\{(\w+)\}", r"_\1", s)


def norm_flags(s: str) -> tuple:
    return tuple(int(x) for x in re.findall(r"-?\d+", s))


@dataclass(frozen=True)
class RowCheck:
    d: int
    flags: str
    status: str  # match, override, missing, unexpected
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status in ("match", "override")


def _key(flags: str, equation: str, group: str) -> tuple:
    return norm_flags(flags), norm_equation(equation), norm_group(group)


def compare(kind: str, emitted: Optional[list[TableRow]] = None) -> list[RowCheck]:
    """Match emitted rows one-to-one against the golden rows of one table."""
    golden = load_golden(kind)
    emitted = list(emit_rows(kind) if emitted is None else emitted)
    pool: dict[tuple, list[TableRow]] = {}
    for r in emitted:
        pool.setdefault((r.d,) + _key(r.flags, r.equation, r.group), []).append(r)
    out = []
    for g in golden:
        key = (g.d,) + _key(*g.expected())
        hit = pool.get(key)
        if hit:
            hit.pop()
            status = "override" if g.override else "match"
            out.append(RowCheck(g.d, g.flags, status, g.note))
            continue
        near = [r for r in emitted if r.d == g.d]
        detail = "; ".join(f"{r.flags} {r.equation} {r.group}" for r in near) or "no configuration emitted"
        out.append(RowCheck(g.d, g.flags, "missing", f"emitted at this degree: {detail}"))
    for rows in pool.values():
        for r in rows:
            out.append(RowCheck(r.d, r.flags, "unexpected", f"{r.equation} {r.group}"))
    return sorted(out, key=lambda x: (x.d, norm_flags(x.flags)))


def row_to_json(r: TableRow) -> dict:
    return asdict(r)
