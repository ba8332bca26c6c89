"""Regenerate the golden tables in src/kodaira/data/golden.

The rows below are hand transcriptions of the published tables; the
enumerators are checked against them, never the other way round.
Run from the repository root:  python3 tools/make_golden.py
"""

import json
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "kodaira" / "data" / "golden"

# (sigma, b, |G|, r, annotation)
TABLE1 = [
    (4, 2, 8, (2,), "non-abelian"),
    (4, 3, 2, (2, 2), ""),
    (4, 2, 4, (2, 2), ""),
    (8, 3, 8, (2,), "non-abelian"),
    (8, 2, 16, (2,), "non-abelian"),
    (8, 5, 2, (2, 2), ""),
    (8, 3, 4, (2, 2), ""),
    (8, 2, 8, (2, 2), ""),
    (8, 3, 2, (2, 2, 2, 2), ""),
    (12, 4, 8, (2,), "non-abelian"),
    (12, 3, 12, (2,), "non-abelian"),
    (12, 2, 24, (2,), "non-abelian"),
    (12, 7, 2, (2, 2), ""),
    (12, 4, 4, (2, 2), ""),
    (12, 3, 6, (2, 2), ""),
    (12, 2, 12, (2, 2), ""),
    (12, 3, 4, (2, 2, 2), "Z/2xZ/2"),
    (12, 2, 8, (2, 2, 2), "non-cyclic"),
    (12, 4, 2, (2, 2, 2, 2), ""),
    (12, 3, 2, (2,) * 6, ""),
    (16, 5, 8, (2,), "non-abelian"),
    (16, 3, 16, (2,), "non-abelian"),
    (16, 2, 32, (2,), "non-abelian"),
    (16, 2, 27, (3,), "non-abelian"),
    (16, 9, 2, (2, 2), ""),
    (16, 5, 4, (2, 2), ""),
    (16, 3, 8, (2, 2), ""),
    (16, 2, 16, (2, 2), ""),
    (16, 4, 3, (3, 3, 3), ""),
    (16, 2, 9, (3, 3, 3), ""),
    (16, 5, 2, (2,) * 4, ""),
    (16, 3, 4, (2,) * 4, ""),
]

# label: (b, f, |G|, [(g_D, d, e)], realizable)
TABLE2 = {
    "G1": (2, 2, 8, [(2, 1, 1)], "no"),
    "G2": (2, 2, 4, [(2, 1, 1), (2, 1, 1)], "no"),
    "G3": (3, 3, 2, [(3, 1, 1), (3, 1, 1)], "no"),
    "G4": (3, 2, 2, [(3, 1, 2), (3, 1, 2)], "no"),
    "C1": (2, 2, 2, [(5, 4, 4)], ""),
    "C2": (3, 2, 2, [(5, 2, 4)], ""),
    "C3": (2, 3, 2, [(5, 4, 2)], ""),
    "C4": (3, 3, 2, [(5, 2, 2)], "no"),
    "C5": (2, 5, 2, [(5, 4, 1)], "no"),
    "C6": (3, 5, 2, [(5, 2, 1)], "no"),
    "C7": (2, 2, 4, [(3, 2, 2)], "no"),
    "C8": (2, 3, 4, [(3, 2, 1)], "no"),
    "C9": (2, 2, 2, [(3, 2, 2), (3, 2, 2)], ""),
    "C10": (2, 2, 2, [(4, 3, 3), (2, 1, 1)], ""),
    "C11": (2, 3, 2, [(3, 2, 1), (3, 2, 1)], "no"),
    "C12": (2, 2, 2, [(2, 1, 1), (2, 1, 1), (3, 2, 2)], ""),
}

# genus: [(d, q, periods)]
FPF_TYPES = {
    9: [(2, 5, ()), (4, 3, ()), (8, 2, ()), (4, 2, (2,) * 4), (16, 1, (2, 2)), (12, 1, (3, 3)),
        (10, 1, (5, 5)), (8, 1, (2,) * 4), (8, 1, (2, 4, 4)), (6, 1, (3,) * 4), (4, 1, (2,) * 8),
        (12, 0, (2, 3, 3, 4, 4)), (10, 0, (2, 2, 2, 2, 5, 5)), (6, 0, (2, 2, 2, 2, 3, 3, 3, 3))],
    8: [(7, 2, ()), (14, 1, (2, 2)), (6, 1, (2, 2, 3, 3)), (18, 0, (2, 2, 9, 9)), (15, 0, (3, 3, 5, 5)),
        (12, 0, (4, 4, 6, 6)), (10, 0, (2, 2, 5, 5, 5)), (6, 0, (2, 2, 3, 3, 3, 3, 3)),
        (6, 0, (2,) * 6 + (3, 3))],
    7: [(2, 4, ()), (3, 3, ()), (6, 2, ()), (4, 2, (2, 2)), (12, 1, (2, 2)), (9, 1, (3, 3)),
        (8, 1, (4, 4)), (6, 1, (2,) * 4), (6, 1, (3, 3, 3)), (4, 1, (2,) * 6), (12, 0, (3, 4, 4, 6)),
        (6, 0, (2, 2, 2, 2, 3, 3, 3))],
    6: [(5, 2, ()), (10, 1, (2, 2)), (14, 0, (2, 2, 7, 7)), (12, 0, (3, 3, 4, 4)), (6, 0, (2, 2, 3, 3, 3, 3))],
    5: [(2, 3, ()), (4, 2, ()), (8, 1, (2, 2)), (6, 1, (3, 3)), (4, 1, (2,) * 4), (6, 0, (2, 2, 2, 2, 3, 3))],
    4: [(3, 2, ()), (6, 1, (2, 2)), (6, 0, (2, 2, 3, 3, 3)), (10, 0, (2, 2, 5, 5))],
    3: [(2, 2, ()), (4, 1, (2, 2))],
    2: [(6, 0, (2, 2, 3, 3))],
}

# (b, d, q, periods, orbits); "," separates orbits, "~" joins the classes of one orbit
EXCEPTIONAL = [
    (9, 10, 1, (5, 5), [[(2, 8)], [(4, 6)]]),
    (9, 8, 1, (2, 4, 4), [[(4, 2, 2), (4, 6, 6)]]),
    (9, 12, 0, (2, 3, 3, 4, 4), [[(6, 4, 8, 3, 3), (6, 4, 8, 9, 9)]]),
    (9, 10, 0, (2, 2, 2, 2, 5, 5), [[(5, 5, 5, 5, 2, 8)], [(5, 5, 5, 5, 4, 6)]]),
    (8, 18, 0, (2, 2, 9, 9), [[(9, 9, 2, 16)], [(9, 9, 4, 14)], [(9, 9, 8, 10)]]),
    (8, 15, 0, (3, 3, 5, 5), [[(5, 10, 3, 12)], [(5, 10, 6, 9)]]),
    (8, 10, 0, (2, 2, 5, 5, 5), [[(5, 5, 2, 2, 6), (5, 5, 8, 8, 4)], [(5, 5, 2, 4, 4), (5, 5, 8, 6, 6)]]),
    (8, 6, 0, (2, 2, 3, 3, 3, 3, 3), [[(3, 3, 2, 2, 2, 2, 4), (3, 3, 2, 4, 4, 4, 4)]]),
    (7, 6, 1, (3, 3, 3), [[(2, 2, 2), (4, 4, 4)]]),
    (7, 6, 0, (2, 2, 2, 2, 3, 3, 3), [[(3, 3, 3, 3, 2, 2, 2), (3, 3, 3, 3, 4, 4, 4)]]),
    (6, 14, 0, (2, 2, 7, 7), [[(7, 7, 2, 12)], [(7, 7, 4, 10)], [(7, 7, 6, 8)]]),
    (4, 6, 0, (2, 2, 3, 3, 3), [[(3, 3, 2, 2, 2), (3, 3, 4, 4, 4)]]),
    (4, 10, 0, (2, 2, 5, 5), [[(5, 5, 2, 8)], [(5, 5, 4, 6)]]),
]

# a continuation line printed under genus 7 with no ramification type of its own
STRAY_LINES = [
    {"printed_after": (7, 6, 1, (3, 3, 3)), "orbit": [(4, 9, 9, 2), (8, 3, 3, 10)]},
]

# rows whose printed form is ambiguous and must be recomputed rather than trusted
AMBIGUOUS = [(9, 12, 0, (2, 3, 3, 4, 4))]


def _type(b, d, q, periods):
    return {"b": b, "d": d, "q": q, "periods": list(periods)}


def build() -> dict[str, dict]:
    t1 = [{"sigma": s, "b": b, "order": n, "r": list(r), "annotation": a} for s, b, n, r, a in TABLE1]
    t2 = [{"label": lab, "b": b, "f": f, "order": n, "components": [list(c) for c in comps], "realizable": v}
          for lab, (b, f, n, comps, v) in TABLE2.items()]
    types = [_type(b, d, q, p) for b in sorted(FPF_TYPES) for d, q, p in FPF_TYPES[b]]
    exc = {
        "rows": [dict(_type(b, d, q, p), orbits=[[list(c) for c in o] for o in orbits])
                 for b, d, q, p, orbits in EXCEPTIONAL],
        "stray_lines": [{"printed_after": _type(*s["printed_after"]), "orbit": [list(c) for c in s["orbit"]]}
                        for s in STRAY_LINES],
        "ambiguous": [_type(*a) for a in AMBIGUOUS],
    }
    return {
        "table1.json": {"description": "Graph-type numerical rows with sigma <= 16", "rows": t1},
        "table2.json": {"description": "Double etale numerical rows with sigma = 4", "rows": t2},
        "fpf_types.json": {"description": "Ramification types of fixed-point-free automorphisms, genus 2..9",
                           "types": types},
        "fpf_exceptional.json": dict(description="Types with more than one Nielsen class, as printed", **exc),
    }


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, doc in build().items():
        (OUT / name).write_text(json.dumps(doc, sort_keys=True, indent=2) + "\n", encoding="utf-8")
        print("wrote", name)


if __name__ == "__main__":
    main()
