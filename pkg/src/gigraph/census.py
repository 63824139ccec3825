"""Census enumeration: every standard-form step multiset, grouped into
canonical classes, classified once per class, optionally cross-checked
against the oracle."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Optional

from . import oracle
from .canon import canonical_form
from .classify import CAYLEY_UNKNOWN, CAYLEY_YES, classify
from .errors import TooLarge
from .graphs import GISpec, build, is_connected

CSV_HEADER = "n,t,J,canonical,d,order,case,ET,VT,Cayley,rule"


@dataclass(frozen=True)
class CensusRow:
    n: int
    t: int
    steps: tuple[int, ...]
    class_size: int
    copies: int
    order: int
    case: str
    edge_transitive: bool
    vertex_transitive: bool
    cayley: str
    rules: str
    verified: Optional[bool] = None


def standard_multisets(n: int, t: int):
    """All standard-form step multisets of size t over modulus n."""
    top = (n - 1) // 2
    yield from combinations_with_replacement(range(1, top + 1), t)


def canonical_classes(n: int, t: int) -> dict[tuple[int, ...], int]:
    """Canonical form -> number of standard-form multisets it represents."""
    classes: dict[tuple[int, ...], int] = {}
    for steps in standard_multisets(n, t):
        key = canonical_form(GISpec(n, steps)).steps
        classes[key] = classes.get(key, 0) + 1
    return classes


def verify_against_oracle(spec: GISpec) -> Optional[bool]:
    """True when order/VT/ET (and Cayley where searchable) agree with brute
    force, False on any mismatch, None when the graph is over the caps."""
    report = classify(spec)
    graph = build(spec)
    try:
        group = oracle.brute_aut(graph)
    except TooLarge:
        return None
    ok = group.order == report.aut.order
    ok &= report.vertex_transitive == (
        len(oracle.vertex_orbits(group, graph.num_vertices)) == 1)
    ok &= report.edge_transitive == (len(oracle.edge_orbits(group, graph)) == 1)
    if (report.cayley != CAYLEY_UNKNOWN and report.connected
            and report.vertex_transitive
            and group.order <= oracle.DEFAULT_SUBGROUP_CAP
            and group.elements is not None):
        found = oracle.find_regular_subgroup(group, graph.num_vertices)
        ok &= (found is not None) == (report.cayley == CAYLEY_YES)
    return bool(ok)


def _row_for_class(args) -> CensusRow:
    n, steps, class_size, verify = args
    spec = GISpec(n, steps)
    report = classify(spec)
    verified = verify_against_oracle(spec) if verify else None
    rules = (f"ET: {report.edge_rule}; VT: {report.vertex_rule}; "
             f"Cayley: {report.cayley_rule}")
    return CensusRow(
        n=n, t=spec.t, steps=steps, class_size=class_size,
        copies=report.copies, order=report.aut.order, case=report.aut.case,
        edge_transitive=report.edge_transitive,
        vertex_transitive=report.vertex_transitive,
        cayley=report.cayley, rules=rules, verified=verified,
    )


def census(n_lo: int, n_hi: int, t: int, connected_only: bool = False,
           verify: bool = False, jobs: int = 1) -> tuple[list[CensusRow], int]:
    """Rows ordered by (n, canonical steps); second value counts oracle
    mismatches (0 when verify is off). Each row is one canonical class, the
    class representative being the canonical form itself."""
    work = []
    for n in range(n_lo, n_hi + 1):
        for steps, size in sorted(canonical_classes(n, t).items()):
            if connected_only and not is_connected(GISpec(n, steps)):
                continue
            work.append((n, steps, size, verify))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_row_for_class, work))
    else:
        rows = [_row_for_class(w) for w in work]
    rows.sort(key=lambda r: (r.n, r.steps))
    mismatches = sum(1 for r in rows if r.verified is False)
    return rows, mismatches


def findings_scan(n_lo: int, n_hi: int, t: int) -> list[dict]:
    """Oracle-isomorphic pairs of distinct canonical classes (same n and t).

    Expected empty for t <= 2; any hit is a finding that canonical-form
    equality missed an isomorphism, reported rather than treated as an error.
    """
    findings = []
    for n in range(n_lo, n_hi + 1):
        reps = sorted(canonical_classes(n, t))
        graphs = {steps: build(GISpec(n, steps)) for steps in reps}
        for i, a in enumerate(reps):
            for b in reps[i + 1:]:
                if oracle.is_isomorphic(graphs[a], graphs[b]):
                    findings.append({"n": n, "t": t,
                                     "class_a": list(a), "class_b": list(b)})
    return findings


def _quote(text: str) -> str:
    return '"' + text.replace('"', '""') + '"'


def rows_to_csv(rows) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(",".join([
            str(r.n), str(r.t),
            _quote(" ".join(map(str, r.steps))),
            _quote(" ".join(map(str, r.steps))),
            str(r.copies), str(r.order), r.case,
            "true" if r.edge_transitive else "false",
            "true" if r.vertex_transitive else "false",
            r.cayley, _quote(r.rules),
        ]))
    return "\n".join(lines) + "\n"


def row_to_dict(r: CensusRow) -> dict:
    out = {
        "n": r.n, "t": r.t, "J": list(r.steps), "canonical": list(r.steps),
        "class_size": r.class_size, "d": r.copies, "order": r.order,
        "case": r.case, "ET": r.edge_transitive, "VT": r.vertex_transitive,
        "Cayley": r.cayley, "rule": r.rules,
    }
    if r.verified is not None:
        out["verified"] = r.verified
    return out
