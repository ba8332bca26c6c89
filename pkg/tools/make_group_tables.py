"""Regenerate the bundled multiplication tables in src/kodaira/data/groups.

Products are read left to right: entry [a][b] is the element "a then b".
Run from the repository root:  python3 tools/make_group_tables.py
"""

import json
from pathlib import Path

from kodaira.surface import FiniteGroup, matrix_group_table

OUT = Path(__file__).resolve().parent.parent / "src" / "kodaira" / "data" / "groups"


def perm_group(gens, n):
    ident = tuple(range(n))
    elems, seen = [ident], {ident}
    i = 0
    while i < len(elems):
        for g in gens:
            # first elems[i], then g
            y = tuple(g[elems[i][k]] for k in range(n))
            if y not in seen:
                seen.add(y)
                elems.append(y)
        i += 1
    index = {e: k for k, e in enumerate(elems)}
    table = [[index[tuple(b[a[k]] for k in range(n))] for b in elems] for a in elems]
    return elems, table


def dihedral(n):
    r = tuple((k + 1) % n for k in range(n))
    s = tuple((-k) % n for k in range(n))
    elems, table = perm_group([r, s], n)
    index = {e: k for k, e in enumerate(elems)}
    grp = FiniteGroup(table, 0)
    ri, si = index[r], index[s]
    labels = [None] * len(elems)
    for j in range(2):
        for i in range(n):
            x = grp.mul(grp.power(ri, i), grp.power(si, j))
            labels[x] = ("r" + (str(i) if i > 1 else "") if i else "") + ("s" if j else "") or "1"
    return table, labels


def quaternion():
    # units as (sign, letter); multiplication rules for 1,i,j,k
    basis = {("1", "1"): (1, "1")}
    for x in "ijk":
        basis[("1", x)] = (1, x)
        basis[(x, "1")] = (1, x)
        basis[(x, x)] = (-1, "1")
    for a, b, c in [("i", "j", "k"), ("j", "k", "i"), ("k", "i", "j")]:
        basis[(a, b)] = (1, c)
        basis[(b, a)] = (-1, c)
    elems = [(s, x) for x in "1ijk" for s in (1, -1)]
    index = {e: k for k, e in enumerate(elems)}
    table = []
    for sa, a in elems:
        row = []
        for sb, b in elems:
            s, c = basis[(a, b)]
            row.append(index[(sa * sb * s, c)])
        table.append(row)
    labels = [("-" if s < 0 else "") + x for s, x in elems]
    return table, labels


def sl2_3():
    gens = [[[0, 2], [1, 2]], [[0, 1], [2, 2]], [[2, 2], [2, 1]]]
    elems, table = matrix_group_table(gens, 3)
    labels = ["[[%d,%d],[%d,%d]]" % (a, b, c, d) for (a, b), (c, d) in elems]
    return table, labels


def write(name, descr, table, labels):
    FiniteGroup(table, 0, labels)  # verifies the group axioms
    n = len(table)
    payload = {
        "description": descr,
        "identity": 0,
        "labels": labels,
        "name": name,
        "order": n,
        "table": [x for row in table for x in row],
    }
    (OUT / f"{name}.json").write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")


if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    write("SL2_3", "SL(2, Z/3) as 2x2 matrices mod 3; product a then b is the matrix product a*b",
          *sl2_3())
    write("D4", "dihedral group of order 8; labels r^i s^j", *dihedral(4))
    write("D6", "dihedral group of order 12; labels r^i s^j", *dihedral(6))
    write("Q8", "quaternion group of order 8", *quaternion())
