"""Bundled golden tables and comparisons against freshly enumerated rows.

Rows are compared as sets of normalized keys.  Every comparison returns a
list of ``Diff`` records; an empty list of blocking diffs means the table
is reproduced.  Flagged diffs (print ambiguities resolved by recomputation)
are reported but do not block.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable

from .fpf import ExceptionalEntry, FpfType, NielsenClass

BLOCKING = ("missing", "extra", "mismatch")


@dataclass(frozen=True)
class Diff:
    kind: str  # missing | extra | mismatch | flagged
    subject: str
    detail: str = ""

    @property
    def blocking(self) -> bool:
        return self.kind in BLOCKING

    def __str__(self) -> str:
        s = f"[{self.kind}] {self.subject}"
        return s + (f": {self.detail}" if self.detail else "")


@lru_cache(maxsize=None)
def _load(name: str) -> dict:
    path = resources.files("kodaira") / "data" / "golden" / name
    return json.loads(path.read_text(encoding="utf-8"))


def blocking(diffs: Iterable[Diff]) -> list[Diff]:
    return [d for d in diffs if d.blocking]


def _set_diff(expected: dict, actual: dict, what: str) -> list[Diff]:
    out = []
    for k in sorted(set(expected) - set(actual), key=str):
        out.append(Diff("missing", f"{what} {expected[k]}"))
    for k in sorted(set(actual) - set(expected), key=str):
        out.append(Diff("extra", f"{what} {actual[k]}"))
    return out


# --- graph type ---------------------------------------------------------------


def table1_rows() -> list[dict]:
    return _load("table1.json")["rows"]


def _t1_key(sigma, b, order, r):
    return (sigma, b, order, tuple(sorted(r, reverse=True)))


def compare_table1(rows) -> list[Diff]:
    gold = {_t1_key(g["sigma"], g["b"], g["order"], g["r"]): g for g in table1_rows()}
    got = {row.key(): row for row in rows}
    out = _set_diff({k: _fmt_t1(k) for k in gold}, {k: _fmt_t1(k) for k in got}, "row")
    for k in sorted(set(gold) & set(got)):
        if gold[k]["annotation"] != got[k].annotation:
            out.append(Diff("mismatch", f"row {_fmt_t1(k)}",
                            f"annotation {got[k].annotation!r}, expected {gold[k]['annotation']!r}"))
    return out


def _fmt_t1(k) -> str:
    sigma, b, n, r = k
    return f"sigma={sigma} b={b} |G|={n} r={r}"


# --- signature four -------------------------------------------------------------


def table2_rows() -> list[dict]:
    return _load("table2.json")["rows"]


def _t2_key(g: dict) -> tuple:
    return (g["b"], g["f"], g["order"], tuple(sorted(tuple(c) for c in g["components"])))


def sig4_labels() -> dict[tuple, str]:
    return {_t2_key(g): g["label"] for g in table2_rows()}


def sig4_verdicts() -> dict[str, str]:
    return {g["label"]: g["realizable"] for g in table2_rows()}


def compare_table2(rows) -> list[Diff]:
    gold = {_t2_key(g): g["label"] for g in table2_rows()}
    got = {row.key(): row.label or "?" for row in rows}
    out = _set_diff({k: f"{v} {k}" for k, v in gold.items()}, {k: f"{v} {k}" for k, v in got.items()}, "row")
    for k in sorted(set(gold) & set(got)):
        if gold[k] != got[k]:
            out.append(Diff("mismatch", f"row {k}", f"label {got[k]}, expected {gold[k]}"))
    return out


# --- fixed-point-free types -------------------------------------------------------


def _fpf(d: dict) -> FpfType:
    return FpfType(d["b"], d["d"], d["q"], tuple(d["periods"]))


def fpf_types(b_max: int | None = None) -> list[FpfType]:
    types = [_fpf(t) for t in _load("fpf_types.json")["types"]]
    return [t for t in types if b_max is None or t.b <= b_max]


def compare_fpf_types(types: Iterable[FpfType], b_max: int) -> list[Diff]:
    gold = {t: str(t) for t in fpf_types(b_max)}
    return _set_diff(gold, {t: str(t) for t in types}, "type")


def _orbit_set(d: int, orbits) -> frozenset:
    return frozenset(frozenset(NielsenClass(d, tuple(c)) for c in o) for o in orbits)


def _fmt_orbits(orbits: frozenset) -> str:
    parts = sorted("~".join(str(c) for c in sorted(o)) for o in orbits)
    return ", ".join(parts)


def compare_exceptional(report: Iterable[ExceptionalEntry], b_max: int) -> list[Diff]:
    """Compare recomputed class structure with the printed exceptional table.

    Stray printed lines are attributed to the recomputed type containing
    their orbit and reported as flagged; ambiguous rows are recomputed and
    always reported as flagged, with the orbit counts side by side.
    """
    raw = _load("fpf_exceptional.json")
    got = {e.type: frozenset(frozenset(o) for o in e.orbits) for e in report}
    gold = {}
    for row in raw["rows"]:
        t = _fpf(row)
        if t.b <= b_max:
            gold[t] = _orbit_set(t.d, row["orbits"])
    out = []
    explained: set[FpfType] = set()
    for stray in raw["stray_lines"]:
        host = _fpf(stray["printed_after"])
        if host.b > b_max:
            continue
        values = [tuple(c) for c in stray["orbit"]]
        homes = [t for t, orbits in got.items()
                 if any(frozenset(NielsenClass(t.d, v) for v in values) == o for o in orbits)
                 and all(len(v) == len(t.orders) for v in values)]
        if len(homes) == 1:
            t = homes[0]
            explained.add(t)
            printed = gold.get(t, frozenset()) | {frozenset(NielsenClass(t.d, v) for v in values)}
            detail = (f"line {' ~ '.join(map(str, values))} printed under {host} belongs to {t}; "
                      f"recomputed {len(got[t])} orbit(s): {_fmt_orbits(got[t])}")
            if printed != got[t]:
                detail += f"; printed shows {len(printed)}"
            out.append(Diff("flagged", str(t), detail))
        else:
            out.append(Diff("mismatch", f"stray line under {host}", "no unique home among recomputed types"))
    for a in raw["ambiguous"]:
        t = _fpf(a)
        if t.b > b_max:
            continue
        explained.add(t)
        g, r = gold.get(t, frozenset()), got.get(t, frozenset())
        verdict = "agrees" if g == r else "differs"
        out.append(Diff("flagged", str(t),
                        f"printed {len(g)} orbit(s) [{_fmt_orbits(g)}], recomputed {len(r)} [{_fmt_orbits(r)}]; {verdict}"))
        if g != r:
            out.append(Diff("mismatch", str(t), "orbit structure differs from the printed row"))
    for t in sorted(set(gold) | set(got)):
        if t in explained:
            continue
        if t not in got:
            out.append(Diff("extra", str(t), "printed as exceptional but has a unique class"))
        elif t not in gold:
            out.append(Diff("missing", str(t), f"recomputed orbits {_fmt_orbits(got[t])} are not printed"))
        elif gold[t] != got[t]:
            out.append(Diff("mismatch", str(t), f"printed {_fmt_orbits(gold[t])}, recomputed {_fmt_orbits(got[t])}"))
    return out
