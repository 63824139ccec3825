"""Decision procedures for edge-transitivity, vertex-transitivity and the
Cayley property.

Every verdict carries the rule that produced it. The rules are exact
characterizations, not heuristics; the oracle module cross-checks them on the
desk-scale sweep.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd

from .arith import find_index2_excluding, inv_mod, is_mult_subgroup, mult_closure
from .autgroup import EXCEPTIONAL_ORDERS, AutOrderReport, aut_order
from .canon import CanonicalForm, canonical_form
from .errors import NotDecomposable
from .graphs import GISpec, components, fold_step

CAYLEY_YES = "yes"
CAYLEY_NO = "no"
CAYLEY_UNKNOWN = "unknown-disconnected"


def is_exceptional(spec: GISpec) -> bool:
    """Whether the spec names one of the eight edge-transitive graphs."""
    c = canonical_form(spec)
    return (c.n, c.steps) in EXCEPTIONAL_ORDERS


def is_edge_transitive(spec: GISpec) -> tuple[bool, str]:
    """Connected graphs are edge-transitive iff canonical form is one of the
    eight exceptional graphs; single-layer graphs are unions of equal cycles;
    a disjoint union inherits the verdict of its component."""
    if spec.t == 1:
        return True, "single-layer graphs are unions of equal cycles, all edges alike"
    d, component = components(spec)
    if d > 1:
        verdict, rule = is_edge_transitive(component)
        return verdict, f"disjoint union of {d} copies of {component}: {rule}"
    if is_exceptional(spec):
        return True, "one of the eight exceptional edge-transitive graphs"
    return False, "connected and not among the eight exceptional graphs"


@dataclass(frozen=True)
class VTDecomposition:
    """Step multiset rewritten as `multiplicity` copies of a primitive set
    containing 1, after scaling by `scaling_unit`."""

    multiplicity: int
    base_steps: tuple[int, ...]
    scaling_unit: int


def vt_decomposition(spec: GISpec) -> VTDecomposition:
    """Scale so the smallest step becomes 1, then demand equal multiplicities.

    Meant for connected specs with t >= 2. Raises NotDecomposable with reason
    non-unit-step (some layer is not a single cycle) or
    unequal-multiplicities.
    """
    n = spec.n
    for j in spec.steps:
        g = gcd(n, j)
        if g != 1:
            raise NotDecomposable(NotDecomposable.NON_UNIT_STEP,
                                  f"step {j} shares factor {g} with {n}")
    a = inv_mod(spec.steps[0], n)
    scaled = [fold_step(n, a * j) for j in spec.steps]
    counts = Counter(scaled)
    if len(set(counts.values())) != 1:
        raise NotDecomposable(NotDecomposable.UNEQUAL_MULTIPLICITIES,
                              f"multiplicities {dict(sorted(counts.items()))} differ")
    k0 = next(iter(counts.values()))
    return VTDecomposition(k0, tuple(sorted(counts)), a)


def is_vertex_transitive(spec: GISpec) -> tuple[bool, str]:
    """Vertex-transitivity via the step-multiset characterization.

    Connected non-exceptional graphs are VT iff the steps form k0 copies of a
    primitive set J0 (all steps units, equal multiplicities) with J0 u -J0 a
    multiplicative subgroup. The dodecahedral graph slips in through the
    exceptional branch, and its higher-multiplicity relatives fail the unit
    check, as they must.
    """
    if spec.t == 1:
        return True, "cycles (and disjoint unions of equal cycles) are vertex-transitive"
    d, component = components(spec)
    if d > 1:
        verdict, rule = is_vertex_transitive(component)
        return verdict, f"disjoint union of {d} copies of {component}: {rule}"
    if is_exceptional(spec):
        return True, "one of the eight exceptional graphs, all arc-transitive"
    try:
        dec = vt_decomposition(spec)
    except NotDecomposable as exc:
        return False, f"no multiplicity decomposition: {exc}"
    closure = set(dec.base_steps) | {spec.n - j for j in dec.base_steps}
    if is_mult_subgroup(spec.n, closure):
        return True, (f"steps are {dec.multiplicity} copies of {list(dec.base_steps)} "
                      "whose closure under negation is a multiplicative subgroup")
    return False, (f"base set {list(dec.base_steps)} with negatives is not "
                   "multiplicatively closed")


def is_cayley(spec: GISpec) -> tuple[str, str]:
    """Cayley verdict: yes / no / unknown-disconnected, plus the deciding rule.

    Connected vertex-transitive graphs reduce to the index-2 criterion on the
    subgroup generated by the primitive base set: Cayley iff that subgroup has
    an index-2 subgroup avoiding -1, or the multiplicity is even. Disjoint
    unions of a Cayley component are Cayley; unions of a vertex-transitive
    non-Cayley component are left undecided (the rules are silent there).
    """
    vt, _ = is_vertex_transitive(spec)
    if not vt:
        return CAYLEY_NO, "not vertex-transitive, hence not Cayley"
    d, component = components(spec)
    if d > 1:
        verdict, rule = is_cayley(component)
        if verdict == CAYLEY_YES:
            return CAYLEY_YES, (f"{d} disjoint copies of the Cayley graph "
                                f"{component}: {rule}")
        return CAYLEY_UNKNOWN, (f"component {component} is vertex-transitive but "
                                "not Cayley; no rule covers its disjoint unions")
    if spec.t == 1:
        return CAYLEY_YES, "a cycle is a Cayley graph of the cyclic group"
    try:
        dec = vt_decomposition(spec)
    except NotDecomposable:
        return CAYLEY_NO, ("vertex-transitive only through skew automorphisms "
                           "(the dodecahedral exception), and not Cayley")
    n = spec.n
    base = mult_closure(n, set(dec.base_steps) | {n - j for j in dec.base_steps})
    witness = find_index2_excluding(n, base, n - 1)
    if dec.multiplicity == 1:
        if witness is not None:
            return CAYLEY_YES, (f"index-2 subgroup {list(witness)} of "
                                f"{list(base)} avoids -1")
        return CAYLEY_NO, (f"every index-2 subgroup of {list(base)} contains -1")
    if witness is not None:
        return CAYLEY_YES, (f"multiplicity {dec.multiplicity} over a Cayley base: "
                            f"index-2 subgroup {list(witness)} avoids -1")
    if dec.multiplicity % 2 == 0:
        return CAYLEY_YES, (f"even multiplicity {dec.multiplicity} over a "
                            "vertex-transitive base")
    return CAYLEY_NO, (f"odd multiplicity {dec.multiplicity} over a non-Cayley base")


@dataclass(frozen=True)
class ClassificationReport:
    spec: GISpec
    canonical: CanonicalForm
    connected: bool
    copies: int
    component: GISpec
    edge_transitive: bool
    edge_rule: str
    vertex_transitive: bool
    vertex_rule: str
    cayley: str
    cayley_rule: str
    aut: AutOrderReport


def classify(spec: GISpec) -> ClassificationReport:
    """All verdicts for one spec, with rules and the group order report."""
    d, component = components(spec)
    et, et_rule = is_edge_transitive(spec)
    vt, vt_rule = is_vertex_transitive(spec)
    cay, cay_rule = is_cayley(spec)
    if cay == CAYLEY_YES and not vt:
        raise AssertionError(f"Cayley verdict without vertex-transitivity on {spec}")
    return ClassificationReport(
        spec=spec,
        canonical=canonical_form(spec),
        connected=d == 1,
        copies=d,
        component=component,
        edge_transitive=et,
        edge_rule=et_rule,
        vertex_transitive=vt,
        vertex_rule=vt_rule,
        cayley=cay,
        cayley_rule=cay_rule,
        aut=aut_order(spec),
    )
