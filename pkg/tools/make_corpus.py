"""Write the bundled problem corpus to src/kodaira/data/corpus.

Matrices are copied entry by entry from the topological models; blank
entries of the printed forms are zeros, and matrices printed as transposes
are stored already transposed (row-major, acting on column vectors).
Run from the repository root:  python3 tools/make_corpus.py
"""

from pathlib import Path

from kodaira.io import canonical_dumps

OUT = Path(__file__).resolve().parent.parent / "src" / "kodaira" / "data" / "corpus"


def T(rows):
    return [list(c) for c in zip(*rows)]


def ident(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def neg(m):
    return [[-x for x in r] for r in m]


def row(gB1, gF1, gB2, gF2, c2, c1sq, sigma, slope):
    return {"g_B1": gB1, "g_F1": gF1, "g_B2": gB2, "g_F2": gF2, "c2": c2, "c1_squared": c1sq,
            "sigma": sigma, "slope": slope}


def problem(ident_, descr, b, f, factors, comps, index, degree, expected_row, table_row, etale=False):
    payload = {"b": b, "f": f, "group": {"invariant_factors": factors}, "components": comps}
    if etale:
        payload["etale_both_ways"] = True
    return {
        "schema_version": 1, "kind": "monodromy-problem", "id": ident_, "description": descr,
        "payload": payload,
        "expected": {"obstruction": [0] * len(factors), "stabilizer_index": index, "minimal_degree": degree,
                     "row": expected_row, "table_row": table_row},
    }


A = [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]
SIGMA_B3 = [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]] + [[0, 0] + r for r in A]

PHI_G2 = [[0, 0, 0, -1], [0, 1, 1, 0], [0, -1, 0, 0], [1, 0, 0, 1]]

PHI_G3 = [
    [0, 0, -1, 0, 0, 0],
    [1, 1, 1, 0, 0, 0],
    [0, -1, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, -1],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 1, -1, 0],
]

G1 = [[-1, 0, 0, -1], [-1, 0, 1, -1], [1, -1, -1, 0], [1, 0, 0, 0]]
G2 = [[-1, -1, 0, -1], [0, 0, 1, -1], [1, -1, -2, 2], [1, 0, -1, 1]]

BIS2_LIFT = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 2], [1, 0, 0, 0], [0, 1, 0, 0]]
BIS2_PUSH = [[1, 0, 0, 0, 0, 0], [0, 2, 0, 1, 0, 1], [0, 0, 1, 0, -1, 0], [0, 0, 0, 1, 0, -1]]

V4A_LIFT = T([
    [2, 0, 0, 0, 0, 0, -1, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 2, 0, 0, 0, -1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, -1, 0, 1, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 1],
])
V4A_PUSH = [
    [1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 1, 0, 0, 0, -1, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 2, 0, -1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, -1, 0, 2],
]

V4B_LIFT = T([
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 2, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 1],
])
V4B_PUSH = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 2, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 1],
]

D6_LIFT = T([
    [1, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 1, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 2, 0, 0, 0, 0],
])
D6_PUSH = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 2, 0, 1, 0, 1, 0, 1, 0, 1],
    [0, 0, 1, 0, 0, 0, 0, 0, -1, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 1, 0, -1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, -1, 0, 0],
]

SIG_D4 = [
    [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1], [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0], [1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0],
]
TAU_D4 = [
    [1, 0, 0, 0, 0, 0], [0, 1, 0, 1, 0, 1], [1, 0, 0, 0, -1, 0],
    [0, 0, 0, 0, 0, -1], [1, 0, -1, 0, 0, 0], [0, 0, 0, -1, 0, 0],
]
SIGTAU_D4 = [
    [1, 0, -1, 0, 0, 0], [0, 0, 0, -1, 0, 0], [1, 0, 0, 0, -1, 0],
    [0, 0, 0, 0, 0, -1], [1, 0, 0, 0, 0, 0], [0, 1, 0, 1, 0, 1],
]

LIFT_NOTE = "lift: transfer H1(B) -> H1(D); push: H1(D) -> H1(F)"

PROBLEMS = [
    problem("free-involution-b3",
            "Graphs of the identity and of a free involution on a genus 3 curve; double cover branched at both points",
            3, 3, [2], [{"matrix": ident(6), "weight": [1]}, {"matrix": SIGMA_B3, "weight": [1]}],
            4, 4, row(9, 6, 3, 21, 160, 368, 16, "23/10"), 1),
    problem("free-auto-genus2",
            "Graphs of the identity and of the free order 6 automorphism of a genus 2 curve, G = Z/2",
            2, 2, [2], [{"matrix": ident(4), "weight": [1]}, {"matrix": PHI_G2, "weight": [1]}],
            16, 16, row(17, 4, 2, 49, 192, 480, 32, "5/2"), 2),
    problem("free-auto-order4-genus3",
            "Graphs of the identity and of the free order 4 automorphism of a genus 3 curve, G = Z/2",
            3, 3, [2], [{"matrix": ident(6), "weight": [1]}, {"matrix": PHI_G3, "weight": [1]}],
            16, 16, row(33, 6, 3, 81, 640, 1472, 64, "23/10"), 3),
    problem("sl23-three-graphs",
            "Graphs of id, -g1 and -g2 on the genus 2 curve with SL(2,3) symmetry; triple cover",
            2, 2, [3], [{"matrix": ident(4), "weight": [1]}, {"matrix": neg(G1), "weight": [1]},
                        {"matrix": neg(G2), "weight": [1]}],
            9, 9, row(10, 7, 2, 55, 216, 576, 48, "8/3"), 4),
    problem("double-bisection-genus2",
            "Genus 3 curve D with free involutions sigma, tau; D embedded in D/tau x D/sigma, genus 2 factors",
            2, 2, [2], [{"push": BIS2_PUSH, "lift": BIS2_LIFT, "weight": [1], "d": 2, "e": 2, "note": LIFT_NOTE}],
            8, 8, row(9, 4, 2, 25, 96, 240, 16, "5/2"), 5, etale=True),
    problem("v4-genus5-type1",
            "Free Z/2xZ/2 action on a genus 5 curve, first topological type (cube model)",
            3, 3, [2], [{"push": V4A_PUSH, "lift": V4A_LIFT, "weight": [1], "d": 2, "e": 2, "note": LIFT_NOTE}],
            4, 4, row(9, 6, 3, 21, 160, 368, 16, "23/10"), 6, etale=True),
    problem("v4-genus5-type2",
            "Free Z/2xZ/2 action on a genus 5 curve, second topological type (core torus model)",
            3, 3, [2], [{"push": V4B_PUSH, "lift": V4B_LIFT, "weight": [1], "d": 2, "e": 2, "note": LIFT_NOTE}],
            8, 8, row(17, 6, 3, 41, 320, 736, 32, "23/10"), 7, etale=True),
    problem("d6-genus5",
            "D6 action on a genus 5 curve generated by two free involutions sigma, tau",
            3, 3, [2], [{"push": D6_PUSH, "lift": D6_LIFT, "weight": [1], "d": 2, "e": 2, "note": LIFT_NOTE}],
            32, 32, row(65, 6, 3, 161, 1280, 2944, 128, "23/10"), 8, etale=True),
    problem("four-graphs-genus3",
            "Graphs of id, sigma, tau, sigma*tau for a D4 action on a genus 3 curve; double cover",
            3, 3, [2], [{"matrix": ident(6), "weight": [1]}, {"matrix": SIG_D4, "weight": [1]},
                        {"matrix": TAU_D4, "weight": [1]}, {"matrix": SIGTAU_D4, "weight": [1]}],
            2, 2, row(5, 7, 3, 13, 96, 240, 16, "5/2"), 9),
]

EXTRA = [
    {
        "schema_version": 1, "kind": "monodromy-problem", "id": "free-auto-genus2-z4",
        "description": "Same graphs as free-auto-genus2 with G = Z/4 and weight 2 at both punctures",
        "payload": {"b": 2, "f": 2, "group": {"invariant_factors": [4]},
                    "components": [{"matrix": ident(4), "weight": [2]}, {"matrix": PHI_G2, "weight": [2]}]},
        "expected": {"obstruction": [0], "stabilizer_index": 16, "minimal_degree": 16},
    },
    {
        "schema_version": 1, "kind": "monodromy-problem", "id": "toy-obstruction-order3",
        "description": "Single component with trivial transfer and weight of order 3",
        "payload": {"b": 2, "f": 2, "group": {"invariant_factors": [3]},
                    "components": [{"matrix": [[0] * 4 for _ in range(4)], "weight": [1]}]},
        "expected": {"obstruction": [1], "stabilizer_index": 1, "minimal_degree": 3},
    },
]

GENVECS = [
    {
        "schema_version": 1, "kind": "generating-vector", "id": "gv-genus2-order6",
        "description": "Free order 6 automorphism of a genus 2 curve: (0|2,2,3,3) onto Z/6",
        "payload": {
            "signature": {"q": 0, "periods": [2, 2, 3, 3]}, "group": {"abelian": [6]},
            "alphas": [], "betas": [], "gammas": [3, 3, 2, 4],
            "elements": [0, 1], "cyclic_generator": 1,
            "graph_problem": {"coefficients": [2], "components": [{"element": 0, "weight": [1]},
                                                                  {"element": 1, "weight": [1]}]},
        },
        "expected": {"cover_genus": 2, "charpoly": [1, -2, 3, -2, 1], "stabilizer_index": 16},
    },
    {
        "schema_version": 1, "kind": "generating-vector", "id": "gv-genus3-order4",
        "description": "Free order 4 automorphism of a genus 3 curve: (1|2,2) onto Z/4",
        "payload": {
            "signature": {"q": 1, "periods": [2, 2]}, "group": {"abelian": [4]},
            "alphas": [0], "betas": [1], "gammas": [2, 2],
            "elements": [0, 1], "cyclic_generator": 1,
            "graph_problem": {"coefficients": [2], "components": [{"element": 0, "weight": [1]},
                                                                  {"element": 1, "weight": [1]}]},
        },
        "expected": {"cover_genus": 3, "charpoly": [1, -2, 3, -4, 3, -2, 1], "stabilizer_index": 16},
    },
    {
        "schema_version": 1, "kind": "generating-vector", "id": "gv-sl23",
        "description": "Genus 2 triangle curve with SL(2,3) symmetry: (0|3,3,4); -g is g3^2 g",
        "payload": {
            "signature": {"q": 0, "periods": [3, 3, 4]}, "group": {"bundled": "SL2_3"},
            "alphas": [], "betas": [],
            "gammas": ["[[0,2],[1,2]]", "[[0,1],[2,2]]", "[[2,2],[2,1]]"],
            "elements": ["[[0,2],[1,2]]", "[[0,1],[2,2]]", "[[2,0],[0,2]]", "[[1,0],[0,1]]"],
            "graph_problem": {"coefficients": [3], "components": [
                {"element": "[[1,0],[0,1]]", "weight": [1]},
                {"element": "[[0,1],[2,1]]", "weight": [1]},
                {"element": "[[0,2],[1,1]]", "weight": [1]},
            ]},
        },
        "expected": {"cover_genus": 2, "stabilizer_index": 9},
    },
]

FIBRATIONS = [
    {
        "schema_version": 1, "kind": "virtual-fibration", "id": "fib-sl23",
        "description": "Three graphs on a genus 2 curve with Z/3 monodromy",
        "payload": {"b": 2, "f": 2, "group": {"invariant_factors": [3]},
                    "components": [{"d": 1, "e": 1, "r": 3, "weight": [1]}] * 3, "pullback_degree": 9},
        "expected": {"sigma": "16/3", "row": row(10, 7, 2, 55, 216, 576, 48, "8/3")},
    },
    {
        "schema_version": 1, "kind": "virtual-fibration", "id": "fib-graph-b3-z2",
        "description": "Two graphs in a product of genus 3 curves with Z/2 monodromy",
        "payload": {"b": 3, "f": 3, "group": {"order": 2},
                    "components": [{"d": 1, "e": 1, "r": 2}, {"d": 1, "e": 1, "r": 2}]},
        "expected": {"sigma": 4},
    },
    {
        "schema_version": 1, "kind": "virtual-fibration", "id": "fib-double-bisection-genus2",
        "description": "One bisection over both genus 2 factors with Z/2 monodromy",
        "payload": {"b": 2, "f": 2, "group": {"order": 2}, "etale_both_ways": True,
                    "components": [{"d": 2, "e": 2, "r": 2}], "pullback_degree": 8},
        "expected": {"sigma": 2, "row": row(9, 4, 2, 25, 96, 240, 16, "5/2")},
    },
]

ENUMS = [
    {"schema_version": 1, "kind": "enumeration-request", "id": "enum-graph-16",
     "payload": {"enumerate": "graph", "sigma_max": 16}, "expected": {"rows": 32}},
    {"schema_version": 1, "kind": "enumeration-request", "id": "enum-sig4",
     "payload": {"enumerate": "sig4"}, "expected": {"rows": 16}},
    {"schema_version": 1, "kind": "enumeration-request", "id": "enum-fpf-9",
     "payload": {"enumerate": "fpf", "genus_max": 9}, "expected": {"rows": 53}},
]


if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.json"):
        old.unlink()
    for doc in PROBLEMS + EXTRA + GENVECS + FIBRATIONS + ENUMS:
        (OUT / f"{doc['id']}.json").write_text(canonical_dumps(doc))
    print(f"wrote {len(PROBLEMS + EXTRA + GENVECS + FIBRATIONS + ENUMS)} files to {OUT}")
