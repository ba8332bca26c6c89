"""Command-line interface.

Exit codes: 0 success, 2 usage or schema error, 3 invalid data (for example
a non-integral genus or a characteristic polynomial that contradicts the
Nielsen formula), 4 mismatch against a golden table or expected values.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import corpus, enumeration, fpf, golden
from .io import SchemaError, canonical_dumps, encode_number
from .fibration import InvariantRow
from .linalg import IntMatrix, char_poly, poly_str
from .surface import InvalidDataError

EXIT_OK, EXIT_SCHEMA, EXIT_INVALID, EXIT_GOLDEN = 0, 2, 3, 4


@dataclass
class Table:
    name: str
    columns: list[str]
    rows: list[list]
    data: object = None  # JSON document; defaults to the rows as objects
    notes: list[str] = field(default_factory=list)

    def json_doc(self):
        if self.data is not None:
            return self.data
        return [dict(zip(self.columns, r)) for r in self.rows]


def _cell(x) -> str:
    if x is None:
        return ""
    return str(encode_number(x)) if isinstance(x, int) and not isinstance(x, bool) else str(x)


def render(t: Table, fmt: str) -> str:
    if fmt == "json":
        return canonical_dumps(t.json_doc())
    cells = [[_cell(x) for x in r] for r in t.rows]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(t.columns)
        w.writerows(cells)
        return buf.getvalue()
    widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(t.columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(t.columns, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines += t.notes
    return "\n".join(lines) + "\n"


def emit(t: Table, args) -> None:
    sys.stdout.write(render(t, args.format))
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{t.name}.csv").write_text(render(t, "csv"), encoding="utf-8")
        (out / f"{t.name}.json").write_text(render(t, "json"), encoding="utf-8")


def _tuple(xs) -> str:
    return "(" + ",".join(map(str, xs)) + ")"


# --- commands ------------------------------------------------------------------


def cmd_invariants(args) -> int:
    doc = corpus.load_entry(args.file)
    if doc["kind"] != "virtual-fibration":
        raise SchemaError(f"expected a virtual-fibration document, got {doc['kind']}")
    payload = dict(doc["payload"])
    if args.degree is not None:
        payload["pullback_degree"] = args.degree
    res = corpus.run_virtual_fibration(payload)
    cols = ["sigma", "c2", "c1_squared", "slope"]
    rows = [[res[k] for k in cols]]
    if "row" in res:
        cols += list(InvariantRow.COLUMNS)
        r = res["row"]
        rows[0] += [r[k] for k in ("g_B1", "g_F1", "g_B2", "g_F2", "c2", "c1_squared", "sigma", "slope")]
        cols = ["virtual " + c if i < 4 else c for i, c in enumerate(cols)]
    emit(Table(doc.get("id", "invariants"), cols, rows, res), args)
    return EXIT_OK


def _report_row(doc: dict, rep) -> list:
    return [doc.get("id", "?"), _tuple(rep["obstruction"]), rep["stabilizer_index"],
            rep["minimal_degree"]] + [rep["row"][k] for k in
                                      ("g_B1", "g_F1", "g_B2", "g_F2", "c2", "c1_squared", "sigma", "slope")]


REPORT_COLUMNS = ["id", "obstruction", "index", "degree"] + list(InvariantRow.COLUMNS)


def cmd_realize(args) -> int:
    docs = [corpus.load_entry(f) for f in args.files]
    rows, data, bad = [], [], []
    for doc in docs:
        if doc["kind"] != "monodromy-problem":
            raise SchemaError(f"{doc.get('id', '?')}: expected a monodromy-problem document")
        res = corpus.run_document(doc)
        rows.append(_report_row(doc, res.computed))
        data.append(dict(res.computed, id=doc.get("id")))
        bad += [f"{res.doc_id}: {m}" for m in res.mismatches]
    emit(Table("realize", REPORT_COLUMNS, rows, data if len(data) > 1 else data[0]), args)
    if args.check and bad:
        print("\n".join(bad), file=sys.stderr)
        return EXIT_GOLDEN
    return EXIT_OK


def _golden_exit(diffs, args) -> int:
    for d in diffs:
        print(d, file=sys.stderr)
    block = golden.blocking(diffs)
    if block:
        print(f"golden check FAILED: {len(block)} blocking difference(s)", file=sys.stderr)
        return EXIT_GOLDEN
    print("golden check passed", file=sys.stderr)
    return EXIT_OK


def cmd_enumerate_graph(args) -> int:
    rows = enumeration.enumerate_graph_rows(args.sigma_max, jobs=args.jobs)
    t = Table("graph", ["sigma", "g(B)", "|G|", "r", "remark", "flags"],
              [[r.sigma, r.b, r.d, _tuple(r.r), r.annotation, " ".join(r.flags)] for r in rows])
    emit(t, args)
    return _golden_exit(golden.compare_table1(rows), args) if args.check_golden else EXIT_OK


def cmd_enumerate_sig4(args) -> int:
    rows = enumeration.enumerate_sig4_rows(jobs=args.jobs)
    verdicts = golden.sig4_verdicts()
    t = Table("sig4", ["label", "g(B)", "g(F)", "|G|", "g(D_i)", "(d_i,e_i)", "r", "realizable", "notes"],
              [[r.label, r.b, r.f, r.order, _tuple(c.g_D for c in r.components),
                "".join(f"({c.d},{c.e})" for c in r.components), _tuple(r.r),
                verdicts.get(r.label, ""), "; ".join(r.notes)] for r in rows])
    emit(t, args)
    return _golden_exit(golden.compare_table2(rows), args) if args.check_golden else EXIT_OK


def _orbits_str(orbits) -> str:
    return ", ".join("~".join(str(c) for c in o) for o in orbits)


def cmd_enumerate_fpf(args) -> int:
    types = fpf.enumerate_fpf(args.genus_max)
    rows = []
    data = []
    for t in sorted(types, key=lambda t: (-t.b, t.q == 0, -t.q, -t.d)):
        orbits = fpf.config_classes(t)
        n = sum(len(o) for o in orbits)
        rows.append([t.b, t.d, t.label(), n, len(orbits), _orbits_str(orbits) if n > 1 else ""])
        data.append({"b": t.b, "d": t.d, "q": t.q, "periods": list(t.orders),
                     "orbits": [[list(c.values) for c in o] for o in orbits]})
    counts = fpf.counts_by_genus(types)
    notes = [f"{len(types)} types; per genus " + ", ".join(f"{b}:{n}" for b, n in counts.items())]
    emit(Table("fpf", ["g", "d", "type", "classes", "orbits", "exceptional"], rows, data, notes), args)
    if not args.check_golden:
        return EXIT_OK
    diffs = golden.compare_fpf_types(types, args.genus_max)
    diffs += golden.compare_exceptional(fpf.exceptional_report(args.genus_max), args.genus_max)
    return _golden_exit(diffs, args)


def cmd_enumerate_nielsen(args) -> int:
    types = [t for t in fpf.enumerate_fpf(args.genus) if t.b == args.genus
             and (args.order is None or t.d == args.order)]
    rows, data = [], []
    for t in types:
        for k, orbit in enumerate(fpf.config_classes(t)):
            for c in orbit:
                rows.append([t.b, t.d, t.label(), str(c), k + 1])
                data.append({"b": t.b, "d": t.d, "q": t.q, "periods": list(t.orders),
                             "class": list(c.values), "orbit": k + 1})
    emit(Table("nielsen", ["g", "d", "type", "class", "orbit"], rows, data), args)
    return EXIT_OK


def cmd_cover_action(args) -> int:
    doc = corpus.load_entry(args.file)
    if doc["kind"] != "generating-vector":
        raise SchemaError(f"expected a generating-vector document, got {doc['kind']}")
    payload = dict(doc["payload"])
    if args.element:
        payload["elements"] = [_element_ref(e) for e in args.element]
    res = corpus.run_generating_vector(payload)
    rows = []
    for e, m in res.get("matrices", {}).items():
        rows.append([e, json.dumps(m, separators=(",", ":")), poly_str(char_poly(IntMatrix.from_rows(m)))])
    notes = [f"cover genus {res['cover_genus']}"]
    if "charpoly" in res:
        notes.append("generator char poly " + poly_str(tuple(res["charpoly"])))
    if "nielsen_agrees" in res:
        notes.append("Nielsen formula " + ("PASS" if res["nielsen_agrees"] else "FAIL"))
    if "nielsen_agrees_all" in res:
        notes.append("Nielsen formula for every cyclic subgroup " + ("PASS" if res["nielsen_agrees_all"] else "FAIL"))
    if "stabilizer_index" in res:
        notes.append(f"graph problem stabilizer index {res['stabilizer_index']}")
    emit(Table(doc.get("id", "cover-action"), ["element", "matrix", "char poly"], rows, res, notes), args)
    if res.get("nielsen_agrees") is False or res.get("nielsen_agrees_all") is False:
        print("char poly differs from the Nielsen formula", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def _element_ref(s: str):
    if s.lstrip("-").isdigit():
        return int(s)
    return s


def cmd_examples(args) -> int:
    if args.list:
        for i in corpus.corpus_ids():
            print(i)
        return EXIT_OK
    ids = list(corpus.TABLE4_IDS) if args.table4 else (args.ids or corpus.corpus_ids())
    if not args.all and not args.ids and not args.table4:
        raise SchemaError("give corpus ids, --all or --table4")
    results = corpus.run_corpus(ids, jobs=args.jobs)
    rows = [[r.doc_id, r.kind, "PASS" if r.ok else "FAIL", "; ".join(r.mismatches)] for r in results]
    data = [{"id": r.doc_id, "ok": r.ok, "computed": r.computed, "mismatches": r.mismatches} for r in results]
    emit(Table("examples", ["id", "kind", "status", "details"], rows, data), args)
    return EXIT_OK if all(r.ok for r in results) else EXIT_GOLDEN


# --- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "json"), default="table")
    common.add_argument("--out", metavar="DIR", help="also write NAME.csv and NAME.json into DIR")
    common.add_argument("--jobs", type=int, default=1, help="worker threads for enumeration and corpus runs")

    p = argparse.ArgumentParser(prog="kodaira", description="Exact invariants of virtual Kodaira fibrations.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", parents=[common], help="virtual and realized invariants of a fibration file")
    s.add_argument("file", help="path or corpus id")
    s.add_argument("--degree", type=int, help="pullback degree for the realized row")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("realize", parents=[common], help="obstruction, stabilizer index and realized row")
    s.add_argument("files", nargs="+", help="paths or corpus ids")
    s.add_argument("--check", action="store_true", help="exit 4 if a result disagrees with the file's expected block")
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("enumerate", help="numerical classifications")
    esub = s.add_subparsers(dest="kind", required=True)
    e = esub.add_parser("graph", parents=[common], help="graph-type rows with sigma <= SIGMA_MAX")
    e.add_argument("--sigma-max", type=int, default=16)
    e.add_argument("--check-golden", action="store_true")
    e.set_defaults(func=cmd_enumerate_graph)
    e = esub.add_parser("sig4", parents=[common], help="double etale rows with sigma = 4")
    e.add_argument("--check-golden", action="store_true")
    e.set_defaults(func=cmd_enumerate_sig4)
    e = esub.add_parser("fpf", parents=[common], help="ramification types of fixed-point-free automorphisms")
    e.add_argument("--genus-max", type=int, default=9)
    e.add_argument("--check-golden", action="store_true")
    e.set_defaults(func=cmd_enumerate_fpf)
    e = esub.add_parser("nielsen", parents=[common], help="Nielsen classes of fixed-point-free automorphisms")
    e.add_argument("--genus", type=int, required=True)
    e.add_argument("--order", type=int)
    e.set_defaults(func=cmd_enumerate_nielsen)

    s = sub.add_parser("cover-action", parents=[common], help="homology action of a generating vector")
    s.add_argument("file", help="path or corpus id")
    s.add_argument("--element", action="append", help="group element (label or index); repeatable")
    s.set_defaults(func=cmd_cover_action)

    s = sub.add_parser("examples", parents=[common], help="run bundled corpus entries against their expected values")
    s.add_argument("ids", nargs="*")
    s.add_argument("--all", action="store_true")
    s.add_argument("--table4", action="store_true", help="only the nine constructed examples")
    s.add_argument("--list", action="store_true")
    s.set_defaults(func=cmd_examples)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SchemaError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except (InvalidDataError, ValueError) as exc:
        print(f"invalid data: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
