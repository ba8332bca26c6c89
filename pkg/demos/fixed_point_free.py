"""Classify cyclic actions whose generator acts without fixed points, then list types with several Nielsen classes.

Run: python3 demos/fixed_point_free.py [genus_max]
"""

import sys

from kodaira.fpf import counts_by_genus, enumerate_fpf, exceptional_report


def main(b_max: int = 9):
    types = enumerate_fpf(b_max)
    print(f"{len(types)} types up to genus {b_max}")
    for b, n in sorted(counts_by_genus(types).items()):
        labels = " ".join(f"{t.d}:{t.label()}" for t in types if t.b == b)
        print(f"  genus {b}: {n:>2}  {labels}")
    print("\ntypes with more than one Nielsen class")
    for e in exceptional_report(b_max):
        orbits = " | ".join(" ".join(str(list(c.values)) for c in o) for o in e.orbits)
        print(f"  genus {e.type.b} d={e.type.d:<3} {e.type.label():<18} {e.class_count} classes: {orbits}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 9)
