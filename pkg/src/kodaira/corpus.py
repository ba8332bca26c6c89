"""The bundled corpus of worked problems and a runner for problem files.

``run_document`` evaluates any validated document and returns the computed
values in the same JSON shape as its ``expected`` block, together with a
list of disagreements.  Set ``KODAIRA_CORPUS`` to a directory to replace
the bundled corpus.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import enumeration, fpf
from .io import (
    SchemaError,
    decode_number,
    encode_number,
    generating_vector_from_payload,
    invariant_row_to_json,
    load_path,
    monodromy_problem_from_payload,
    report_to_json,
    virtual_fibration_from_payload,
)
from .abelian import FiniteAbelianGroup
from .fibration import realized_invariants, virtual_invariants
from .linalg import char_poly
from .monodromy import ComponentAction, MonodromyProblem, realize, stabilizer_index
from .surface import (
    InvalidDataError,
    cyclic_subgroup_signature,
    homology_action,
    kernel_presentation,
    nielsen_charpoly,
    validate,
)

CORPUS_ENV = "KODAIRA_CORPUS"

# the nine problems whose realizations form the table of constructed examples
TABLE4_IDS = (
    "free-involution-b3",
    "free-auto-genus2",
    "free-auto-order4-genus3",
    "sl23-three-graphs",
    "double-bisection-genus2",
    "v4-genus5-type1",
    "v4-genus5-type2",
    "d6-genus5",
    "four-graphs-genus3",
)


def corpus_dir() -> Path:
    override = os.environ.get(CORPUS_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("kodaira") / "data" / "corpus"))


def corpus_ids() -> list[str]:
    return sorted(p.stem for p in corpus_dir().glob("*.json"))


def resolve(ref: str | os.PathLike) -> Path:
    """A path to an existing file, or the id of a corpus entry."""
    p = Path(ref)
    if p.is_file():
        return p
    q = corpus_dir() / f"{ref}.json"
    if q.is_file():
        return q
    raise FileNotFoundError(f"no such file or corpus entry: {ref}")


def load_entry(ref: str | os.PathLike) -> dict:
    return load_path(resolve(ref))


@dataclass
class RunResult:
    doc_id: str
    kind: str
    computed: dict
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _same(a, b) -> bool:
    if isinstance(a, dict) and isinstance(b, dict):
        return a.keys() == b.keys() and all(_same(a[k], b[k]) for k in a)
    if isinstance(a, list) and isinstance(b, list):
        return len(a) == len(b) and all(_same(x, y) for x, y in zip(a, b))
    if a is None or b is None:
        return a is b
    try:
        return decode_number(a) == decode_number(b)
    except SchemaError:
        return a == b


def _compare(expected: dict, computed: dict) -> list[str]:
    out = []
    for k, v in expected.items():
        if k == "table_row":
            continue
        if k not in computed:
            out.append(f"{k}: not computed")
        elif not _same(v, computed[k]):
            out.append(f"{k}: expected {v}, computed {computed[k]}")
    return out


def run_virtual_fibration(p: dict) -> dict:
    vf = virtual_fibration_from_payload(p)
    inv = virtual_invariants(vf)
    out = {"sigma": encode_number(inv.sigma), "c2": encode_number(inv.c2),
           "c1_squared": encode_number(inv.c1_squared),
           "slope": encode_number(inv.slope) if inv.slope is not None else None}
    if "pullback_degree" in p:
        out["row"] = invariant_row_to_json(realized_invariants(vf, p["pullback_degree"]))
    return out


def run_monodromy(p: dict) -> dict:
    return report_to_json(realize(monodromy_problem_from_payload(p)))


def graph_problem(p: dict, vec=None, presentation=None) -> MonodromyProblem:
    """Graphs of group elements on the cover, weighted in an abelian group."""
    vec = vec or generating_vector_from_payload(p)
    kp = presentation or kernel_presentation(vec)
    gp = p["graph_problem"]
    group = FiniteAbelianGroup(tuple(gp["coefficients"]))
    g = kp.rank // 2
    comps = tuple(ComponentAction(homology_action(vec, c["element"], kp), group.element(c["weight"]))
                  for c in gp["components"])
    return MonodromyProblem(g, g, group, comps)


def run_generating_vector(p: dict) -> dict:
    vec = generating_vector_from_payload(p)
    rep = validate(vec)
    if not rep.ok:
        raise InvalidDataError("; ".join(rep.problems))
    kp = kernel_presentation(vec)
    out: dict = {"cover_genus": kp.rank // 2}
    elements = p.get("elements")
    if elements is not None:
        out["matrices"] = {str(e): homology_action(vec, e, kp).tolist() for e in elements}
    if "cyclic_generator" in p:
        m = homology_action(vec, p["cyclic_generator"], kp)
        cp = list(char_poly(m))
        out["charpoly"] = cp
        if vec.group.abelian and _is_cyclic_group(vec):
            sig = vec.signature
            nielsen = list(nielsen_charpoly(sig.q, vec.group.order, sig.periods))
            out["nielsen_charpoly"] = nielsen
            out["nielsen_agrees"] = cp == nielsen
    out["nielsen_agrees_all"] = all(
        char_poly(homology_action(vec, k, kp)) == _subgroup_nielsen(vec, k)
        for k in range(vec.group.order) if k != vec.group.identity)
    if "graph_problem" in p:
        out["stabilizer_index"] = stabilizer_index(graph_problem(p, vec, kp))
    return out


def _subgroup_nielsen(vec, k):
    sig = cyclic_subgroup_signature(vec, k)
    return nielsen_charpoly(sig.q, vec.group.element_order(k), sig.periods)


def _is_cyclic_group(vec) -> bool:
    grp = vec.group
    return any(grp.element_order(k) == grp.order for k in range(grp.order))


ENUMERATORS = {
    "graph": lambda p: enumeration.enumerate_graph_rows(p.get("sigma_max", 16)),
    "sig4": lambda p: enumeration.enumerate_sig4_rows(),
    "fpf": lambda p: fpf.enumerate_fpf(p.get("genus_max", 9)),
    "nielsen": lambda p: [c for t in fpf.enumerate_fpf(p["genus"])
                          if t.b == p["genus"] and ("order" not in p or t.d == p["order"])
                          for c in fpf.nielsen_classes(t)],
}


def run_enumeration(p: dict) -> dict:
    if p["enumerate"] == "nielsen" and "genus" not in p:
        raise SchemaError("nielsen enumeration needs a genus")
    return {"rows": len(ENUMERATORS[p["enumerate"]](p))}


RUNNERS = {
    "virtual-fibration": run_virtual_fibration,
    "monodromy-problem": run_monodromy,
    "generating-vector": run_generating_vector,
    "enumeration-request": run_enumeration,
}


def run_document(doc: dict) -> RunResult:
    computed = RUNNERS[doc["kind"]](doc["payload"])
    res = RunResult(doc.get("id", "?"), doc["kind"], computed)
    res.mismatches = _compare(doc.get("expected", {}), computed)
    if computed.get("nielsen_agrees") is False or computed.get("nielsen_agrees_all") is False:
        res.mismatches.append("charpoly differs from the Nielsen formula")
    return res


def run_corpus(ids: list[str] | None = None, jobs: int = 1) -> list[RunResult]:
    ids = corpus_ids() if ids is None else ids
    docs = [load_entry(i) for i in ids]
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as ex:
            return list(ex.map(run_document, docs))
    return [run_document(d) for d in docs]
