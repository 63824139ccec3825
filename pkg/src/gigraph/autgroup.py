"""Explicit automorphisms of GI-graphs and the closed-form group order.

Four families of automorphisms are constructed directly from the parameters:
rotation and reflection of the position coordinate, swaps of matching cycles
between layers with equal step, and unit multipliers that scale positions
while permuting layers. For connected graphs outside the eight exceptional
edge-transitive ones, these generate the full automorphism group, whose order
has a closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, gcd

from . import canon
from .arith import generating_set, inv_mod, units
from .errors import BadClass, NotAUnit, NotInStabilizer, StepsDiffer
from .graphs import GISpec, build, components, fold_step
from .perms import Perm

# The eight exceptional (edge-transitive) connected GI-graphs, keyed by
# canonical form, with their automorphism group orders. Every other connected
# GI-graph has a group of order n*|B|*prod((m_j!)^gcd(n,j)).
EXCEPTIONAL_ORDERS: dict[tuple[int, tuple[int, ...]], int] = {
    (4, (1, 1)): 48,
    (5, (1, 2)): 120,
    (8, (1, 3)): 96,
    (10, (1, 2)): 120,
    (10, (1, 3)): 240,
    (12, (1, 5)): 144,
    (24, (1, 5)): 288,
    (3, (1, 1, 1)): 72,
}

CASE_SINGLE_LAYER = "single-layer"
CASE_DISCONNECTED = "disconnected"
CASE_SPORADIC = "sporadic"
CASE_SET = "set"
CASE_MULTISET = "multiset"


def rotation(spec: GISpec) -> Perm:
    """(s, v) -> (s, v+1); order n."""
    n = spec.n
    return tuple(s * n + (v + 1) % n for s in range(spec.t) for v in range(n))


def reflection(spec: GISpec) -> Perm:
    """(s, v) -> (s, -v); an involution fixing every (s, 0)."""
    n = spec.n
    return tuple(s * n + (-v) % n for s in range(spec.t) for v in range(n))


def multiplier_layer_map(spec: GISpec, a: int) -> tuple[int, ...]:
    """The layer bijection paired with unit a: layer s goes to the layer whose
    step is the fold of a*j_s, monotone within blocks of equal step.

    Raises NotAUnit, or NotInStabilizer when a*J is not +-J as a multiset.
    """
    n = spec.n
    a %= n
    if gcd(a, n) != 1:
        raise NotAUnit(a, n)
    scaled = tuple(sorted(fold_step(n, a * j) for j in spec.steps))
    if scaled != spec.steps:
        raise NotInStabilizer(a, spec)
    blocks: dict[int, list[int]] = {}
    for s, j in enumerate(spec.steps):
        blocks.setdefault(j, []).append(s)
    taken = {j: 0 for j in blocks}
    alpha = [0] * spec.t
    for s, j in enumerate(spec.steps):
        target = fold_step(n, a * j)
        alpha[s] = blocks[target][taken[target]]
        taken[target] += 1
    return tuple(alpha)


def multiplier(spec: GISpec, a: int) -> Perm:
    """(s, v) -> (alpha(s), a*v) for a unit a stabilizing the step multiset.

    multiplier(spec, 1) is the identity and multiplier(spec, n-1) equals
    reflection(spec).
    """
    n = spec.n
    alpha = multiplier_layer_map(spec, a)
    return tuple(alpha[s] * n + a * v % n for s in range(spec.t) for v in range(n))


def cycle_swap(spec: GISpec, i: int, s1: int, s2: int) -> Perm:
    """Exchange (s1, v) and (s2, v) exactly for v = i mod gcd(n, step).

    The two layers must carry the same step value; the swap moves one cycle of
    layer s1 onto the matching cycle of layer s2 and fixes everything else.
    """
    if s1 == s2:
        raise StepsDiffer(s1, s2)
    if spec.steps[s1] != spec.steps[s2]:
        raise StepsDiffer(s1, s2)
    d = gcd(spec.n, spec.steps[s1])
    if not 0 <= i < d:
        raise BadClass(i, d)
    n = spec.n
    image = list(range(spec.num_vertices))
    for v in range(i % d, n, d):
        image[s1 * n + v] = s2 * n + v
        image[s2 * n + v] = s1 * n + v
    return tuple(image)


def layer_swap(spec: GISpec, s1: int, s2: int) -> Perm:
    """Exchange layers s1 and s2 wholesale (all residue classes at once)."""
    if s1 == s2:
        raise StepsDiffer(s1, s2)
    if spec.steps[s1] != spec.steps[s2]:
        raise StepsDiffer(s1, s2)
    n = spec.n
    image = list(range(spec.num_vertices))
    for v in range(n):
        image[s1 * n + v] = s2 * n + v
        image[s2 * n + v] = s1 * n + v
    return tuple(image)


def set_stabilizer(spec: GISpec) -> tuple[int, ...]:
    """Units a with a * (J u -J) = J u -J, computed on the underlying set."""
    base = set(spec.steps)
    return tuple(a for a in units(spec.n)
                 if {fold_step(spec.n, a * j) for j in base} == base)


def multiset_stabilizer(spec: GISpec) -> tuple[int, ...]:
    """Units a with a*J = +-J as multisets (multiplicity preserving).

    Always contains 1 and n-1, and is a subgroup of the set stabilizer.
    """
    return tuple(a for a in units(spec.n)
                 if tuple(sorted(fold_step(spec.n, a * j) for j in spec.steps)) == spec.steps)


def step_multiplicities(spec: GISpec) -> dict[int, int]:
    out: dict[int, int] = {}
    for j in spec.steps:
        out[j] = out.get(j, 0) + 1
    return out


def partition_preserving_order(spec: GISpec) -> int:
    """Order of the subgroup respecting the spoke/layer partition:
    n * |B| * prod over distinct steps j of (m_j!)^gcd(n, j)."""
    order = spec.n * len(multiset_stabilizer(spec))
    for j, m in step_multiplicities(spec).items():
        order *= factorial(m) ** gcd(spec.n, j)
    return order


@dataclass(frozen=True)
class AutOrderReport:
    order: int
    case: str
    details: dict


def aut_order(spec: GISpec) -> AutOrderReport:
    """The automorphism group order, dispatched over the four structural cases."""
    n = spec.n
    if spec.t == 1:
        d = gcd(n, spec.steps[0])
        cycle_len = n // d
        order = factorial(d) * (2 * cycle_len) ** d
        return AutOrderReport(order, CASE_SINGLE_LAYER,
                              {"cycles": d, "cycle_length": cycle_len})
    d, component = components(spec)
    if d > 1:
        comp_report = aut_order(component)
        order = factorial(d) * comp_report.order ** d
        return AutOrderReport(order, CASE_DISCONNECTED,
                              {"copies": d, "component": str(component),
                               "component_order": comp_report.order})
    canonical = canon.canonical_form(spec)
    key = (canonical.n, canonical.steps)
    if key in EXCEPTIONAL_ORDERS:
        return AutOrderReport(EXCEPTIONAL_ORDERS[key], CASE_SPORADIC,
                              {"canonical": list(canonical.steps)})
    mults = step_multiplicities(spec)
    if all(m == 1 for m in mults.values()):
        a_size = len(set_stabilizer(spec))
        return AutOrderReport(n * a_size, CASE_SET, {"stabilizer_size": a_size})
    b_size = len(multiset_stabilizer(spec))
    return AutOrderReport(partition_preserving_order(spec), CASE_MULTISET,
                          {"stabilizer_size": b_size,
                           "multiplicities": {j: [m, gcd(n, j)] for j, m in mults.items()}})


@dataclass(frozen=True)
class GeneratorSet:
    """Generators acting on the connected component (copies > 1 when the spec
    itself is disconnected; whole-graph generators are the oracle's job)."""

    spec: GISpec
    copies: int
    perms: tuple[Perm, ...]

    @property
    def degree(self) -> int:
        return self.spec.num_vertices


def generators(spec: GISpec) -> GeneratorSet:
    """Rotation, reflection, one multiplier per stabilizer generator, and all
    cycle swaps between consecutive equal-step layers.

    Every permutation returned is checked to preserve adjacency. For connected
    non-exceptional specs the closure of this set is the full group.
    """
    d, component = components(spec)
    perms: list[Perm] = [rotation(component), reflection(component)]
    for a in generating_set(component.n, multiset_stabilizer(component)):
        perms.append(multiplier(component, a))
    blocks: dict[int, list[int]] = {}
    for s, j in enumerate(component.steps):
        blocks.setdefault(j, []).append(s)
    for j, layers in blocks.items():
        for s1, s2 in zip(layers, layers[1:]):
            for i in range(gcd(component.n, j)):
                perms.append(cycle_swap(component, i, s1, s2))
    graph = build(component)
    for p in perms:
        check_automorphism(graph, p)
    return GeneratorSet(component, d, tuple(perms))


def check_automorphism(graph, perm: Perm) -> None:
    """Raise if perm is not an automorphism of the graph."""
    edge_set = {(e.u, e.v) for e in graph.edges}
    for u, v in edge_set:
        pu, pv = perm[u], perm[v]
        if (min(pu, pv), max(pu, pv)) not in edge_set:
            raise AssertionError(
                f"permutation does not preserve adjacency: edge ({u},{v}) "
                f"maps to non-edge ({pu},{pv})")
