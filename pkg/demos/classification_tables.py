"""Print the graph-type classification (sigma <= 16) and the signature-4 candidates.

Run: python3 demos/classification_tables.py
"""

from kodaira import golden
from kodaira.enumeration import enumerate_graph_rows, enumerate_sig4_rows


def main():
    rows = enumerate_graph_rows(16)
    print("graph types with sigma <= 16")
    for r in rows:
        note = f"  ({r.annotation})" if r.annotation else ""
        print(f"  sigma={r.sigma:<3} b={r.b} |G|={r.d:<3} r={r.r}{note}")
    diffs = golden.blocking(golden.compare_table1(rows))
    print(f"  {len(rows)} rows, {len(diffs)} differences from the stored table\n")

    sig4 = enumerate_sig4_rows()
    print("signature-4 candidates")
    for r in sig4:
        comps = ", ".join(f"(g={c.g_D},d={c.d},e={c.e})" for c in r.components)
        print(f"  {r.label:<4} b={r.b} f={r.f} |G|={r.order} r={r.r} {comps}")
    diffs = golden.blocking(golden.compare_table2(sig4))
    print(f"  {len(sig4)} rows, {len(diffs)} differences from the stored table")


if __name__ == "__main__":
    main()
