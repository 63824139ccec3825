"""One handler layer behind both the CLI and the HTTP service.

Every function validates its inputs through validate_spec and returns plain
JSON-serializable data (or raw text for the textual formats), so the two
surfaces cannot drift apart.
"""

from __future__ import annotations

from . import census as census_mod
from . import oracle
from .autgroup import aut_order, generators
from .canon import canonical_form, standard_form
from .classify import classify
from .graphs import (GISpec, build, graph_to_dot, graph_to_edge_list,
                     graph_to_json_dict, validate_spec)
from .layout import (UNIT_DISTANCE_SPEC, concentric_layout, edge_length_stats,
                     svg, unit_distance_layout_713)
from .perms import cycle_notation, group_closure


def build_payload(n: int, steps, fmt: str = "json"):
    graph = build(validate_spec(n, steps))
    if fmt == "json":
        return graph_to_json_dict(graph)
    if fmt == "dot":
        return graph_to_dot(graph)
    if fmt == "edges":
        return graph_to_edge_list(graph)
    raise ValueError(f"unknown format {fmt!r}")


def canon_payload(n: int, steps) -> dict:
    spec = validate_spec(n, steps)
    canonical = canonical_form(spec)
    return {
        "n": n,
        "input": list(steps),
        "standard": list(standard_form(n, steps)),
        "canonical": list(canonical.steps),
        "witness_unit": canonical.witness_unit,
    }


def aut_payload(n: int, steps, elements: bool = False, verify: bool = False) -> dict:
    spec = validate_spec(n, steps)
    report = aut_order(spec)
    out = {"order": report.order, "case": report.case, "details": report.details}
    if elements:
        gens = generators(spec)
        out["generators"] = [cycle_notation(p) for p in gens.perms]
        if gens.copies > 1:
            out["generator_scope"] = {"component": str(gens.spec), "copies": gens.copies}
    if verify:
        group = oracle.brute_aut(build(spec))
        out["oracle_order"] = group.order
        out["verified"] = group.order == report.order
    return out


def classify_payload(n: int, steps, use_oracle: bool = False) -> dict:
    spec = validate_spec(n, steps)
    report = classify(spec)
    out = {
        "spec": {"n": spec.n, "J": list(spec.steps)},
        "canonical": list(report.canonical.steps),
        "witness_unit": report.canonical.witness_unit,
        "connected": report.connected,
        "d": report.copies,
        "component": {"n": report.component.n, "J": list(report.component.steps)},
        "order": report.aut.order,
        "case": report.aut.case,
        "edge_transitive": report.edge_transitive,
        "vertex_transitive": report.vertex_transitive,
        "cayley": report.cayley,
        "rules": {
            "edge_transitive": report.edge_rule,
            "vertex_transitive": report.vertex_rule,
            "cayley": report.cayley_rule,
        },
    }
    if use_oracle:
        graph = build(spec)
        group = oracle.brute_aut(graph)
        oracle_block = {
            "order": group.order,
            "vertex_orbits": len(oracle.vertex_orbits(group, graph.num_vertices)),
            "edge_orbits": len(oracle.edge_orbits(group, graph)),
        }
        if (group.elements is not None
                and group.order <= oracle.DEFAULT_SUBGROUP_CAP):
            oracle_block["regular_subgroup_found"] = (
                oracle.find_regular_subgroup(group, graph.num_vertices) is not None)
        out["oracle"] = oracle_block
        out["verified"] = census_mod.verify_against_oracle(spec)
    return out


def census_payload(n_lo: int, n_hi: int, t: int, connected_only: bool = False,
                   verify: bool = False, fmt: str = "csv", jobs: int = 1,
                   findings: bool = False):
    rows, mismatches = census_mod.census(n_lo, n_hi, t,
                                         connected_only=connected_only,
                                         verify=verify, jobs=jobs)
    if fmt == "csv":
        return census_mod.rows_to_csv(rows), mismatches
    out = {"rows": [census_mod.row_to_dict(r) for r in rows],
           "mismatches": mismatches}
    if findings:
        out["findings"] = census_mod.findings_scan(n_lo, n_hi, t)
    return out, mismatches


def layout_payload(n: int, steps, radii=None, check_unit: bool = False,
                   want_svg: bool = False):
    """Stats dict, or SVG text when want_svg is set.

    GI(7;1,2,3) with no radii override gets its exact unit-distance drawing;
    everything else gets the concentric default.
    """
    spec = validate_spec(n, steps)
    if spec == UNIT_DISTANCE_SPEC and radii is None:
        chosen = unit_distance_layout_713()
        style = "unit-distance"
    else:
        chosen = concentric_layout(spec, radii)
        style = "concentric"
    graph = build(spec)
    if want_svg:
        return svg(graph, chosen)
    out = {"spec": {"n": spec.n, "J": list(spec.steps)}, "style": style,
           "radii": list(chosen.radii)}
    if check_unit:
        stats = edge_length_stats(graph, chosen)
        out["edge_lengths"] = {
            "min": stats.minimum,
            "max": stats.maximum,
            "mean": stats.mean,
            "max_abs_dev_from_unit": stats.max_abs_dev_from_unit,
        }
        out["unit_distance"] = stats.max_abs_dev_from_unit < 1e-9
    return out


def oracle_aut_payload(n: int, steps) -> dict:
    spec = validate_spec(n, steps)
    graph = build(spec)
    group = oracle.brute_aut(graph)
    return {
        "order": group.order,
        "materialized": group.elements is not None,
        "vertex_orbits": len(oracle.vertex_orbits(group, graph.num_vertices)),
        "edge_orbits": len(oracle.edge_orbits(group, graph)),
    }


def oracle_iso_payload(n: int, steps_a, steps_b) -> dict:
    g1 = build(validate_spec(n, steps_a))
    g2 = build(validate_spec(n, steps_b))
    witness = oracle.find_isomorphism(g1, g2)
    return {"isomorphic": witness is not None,
            "witness": list(witness) if witness is not None else None}


def oracle_cayley_payload(n: int, steps) -> dict:
    spec = validate_spec(n, steps)
    graph = build(spec)
    group = oracle.brute_aut(graph)
    found = oracle.find_regular_subgroup(group, graph.num_vertices)
    return {"order": group.order,
            "regular_subgroup_found": found is not None,
            "subgroup_order": len(found) if found else None}


def oracle_girth_payload(n: int, steps) -> dict:
    graph = build(validate_spec(n, steps))
    girth, has_c4 = oracle.girth_and_c4(graph)
    return {"girth": girth, "has_4_cycle": has_c4}


def closure_order(n: int, steps) -> int:
    """Order of the group generated by the explicit generator set."""
    gens = generators(validate_spec(n, steps))
    return len(group_closure(gens.perms))
