"""Compute the action of a finite group on the homology of a branched cover.

Builds the cover from a generating vector, prints the matrix of each group
element on H_1 and checks its characteristic polynomial against the one
predicted from the fixed-point data of the cyclic subgroup it generates.

Run: python3 demos/cover_homology.py [corpus-id]
"""

import sys

from kodaira.corpus import generating_vector_from_payload, graph_problem, load_entry
from kodaira.linalg import char_poly
from kodaira.monodromy import stabilizer_index
from kodaira.surface import cyclic_subgroup_signature, homology_action, kernel_presentation, nielsen_charpoly


def main(gid: str = "gv-sl23"):
    payload = load_entry(gid)["payload"]
    vec = generating_vector_from_payload(payload)
    kp = kernel_presentation(vec)
    print(f"{gid}: |G|={vec.group.order}, base {vec.signature}, cover genus {kp.rank // 2}")
    for k in range(vec.group.order):
        if k == vec.group.identity:
            continue
        m = homology_action(vec, k, kp)
        sig = cyclic_subgroup_signature(vec, k)
        cp = char_poly(m)
        ok = cp == nielsen_charpoly(sig.q, vec.group.element_order(k), sig.periods)
        print(f"  element {vec.group.labels[k]} order {vec.group.element_order(k)}"
              f" quotient {sig}: charpoly {list(cp)} {'agrees' if ok else 'DIFFERS'}")
    if "graph_problem" in payload:
        print(f"stabilizer index of the graph problem: {stabilizer_index(graph_problem(payload, vec, kp))}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "gv-sl23")
