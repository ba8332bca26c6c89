"""Realize each constructed example: obstruction, stabilizer index, pullback degree and invariants.

Run: python3 demos/constructed_examples.py
"""

from kodaira.corpus import TABLE4_IDS, load_entry
from kodaira.io import monodromy_problem_from_payload
from kodaira.monodromy import realize


def main():
    print(f"{'problem':26} {'|o|':>4} {'index':>6} {'deg':>4}  g(B2) g(F2)  sigma  slope")
    for pid in TABLE4_IDS:
        p = monodromy_problem_from_payload(load_entry(pid)["payload"])
        rep = realize(p)
        row = rep.realized
        print(f"{pid:26} {rep.obstruction_order:>4} {rep.stabilizer_index:>6} {rep.minimal_degree:>4}"
              f"  {row.g_B2:>5} {row.g_F2:>5} {str(row.sigma):>6}  {row.slope}")


if __name__ == "__main__":
    main()
