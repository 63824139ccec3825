"""GI-graph specifications and their realization as labeled graphs.

A GI-graph has vertex set Z_t x Z_n. Vertex (s, v) gets linear index s*n + v.
Edges come in two kinds: "spoke" edges join (s, v) to (s', v) for all pairs of
distinct layers, so each spoke induces a K_t; "layer" edges join (s, v) to
(s, v +- j_s), so layer s induces gcd(n, j_s) cycles of length n/gcd(n, j_s).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import NamedTuple, Optional

from .errors import BadModulus, BadStep, EmptyJ, TooFewLayers

SPOKE = "spoke"
LAYER = "layer"


@dataclass(frozen=True, order=True)
class GISpec:
    """Validated parameters (n; j_0 <= ... <= j_{t-1}) in standard form."""

    n: int
    steps: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.steps)

    @property
    def num_vertices(self) -> int:
        return self.n * len(self.steps)

    def vertex_index(self, s: int, v: int) -> int:
        return s * self.n + v % self.n

    def vertex_pair(self, index: int) -> tuple[int, int]:
        return divmod(index, self.n)

    def __str__(self) -> str:
        return f"GI({self.n};{','.join(map(str, self.steps))})"


class Edge(NamedTuple):
    u: int
    v: int
    kind: str
    layer: Optional[int]


@dataclass(frozen=True)
class GIGraph:
    """Concrete realization: adjacency lists plus the tagged edge list."""

    spec: GISpec
    adjacency: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]

    @property
    def num_vertices(self) -> int:
        return len(self.adjacency)

    def edge_kinds(self) -> dict[tuple[int, int], str]:
        return {(e.u, e.v): e.kind for e in self.edges}


def fold_step(n: int, j: int) -> int:
    """Representative of +-j in (0, n/2); the two signs give the same edges."""
    j %= n
    return min(j, n - j)


def validate_spec(n: int, raw_steps) -> GISpec:
    """Normalize raw step values into a standard-form GISpec.

    Raises BadModulus for n < 3, EmptyJ for no steps, and BadStep(j) when a
    step is congruent to 0 or n/2 (either would degenerate a layer cycle).
    """
    if n < 3:
        raise BadModulus(n)
    raw = list(raw_steps)
    if not raw:
        raise EmptyJ()
    steps = []
    for j in raw:
        r = j % n
        if r == 0 or 2 * r == n:
            raise BadStep(j, n)
        steps.append(fold_step(n, r))
    return GISpec(n, tuple(sorted(steps)))


def build(spec: GISpec) -> GIGraph:
    """Realize the spec as a graph with the spoke/layer edge partition."""
    n, t = spec.n, spec.t
    edges = []
    for v in range(n):
        for s1 in range(t):
            for s2 in range(s1 + 1, t):
                edges.append(Edge(spec.vertex_index(s1, v), spec.vertex_index(s2, v), SPOKE, None))
    for s, j in enumerate(spec.steps):
        seen = set()
        for v in range(n):
            a = spec.vertex_index(s, v)
            b = spec.vertex_index(s, v + j)
            key = (min(a, b), max(a, b))
            if key not in seen:
                seen.add(key)
                edges.append(Edge(key[0], key[1], LAYER, s))
    edges.sort()
    adjacency = [[] for _ in range(n * t)]
    for e in edges:
        adjacency[e.u].append(e.v)
        adjacency[e.v].append(e.u)
    return GIGraph(spec, tuple(tuple(sorted(a)) for a in adjacency), tuple(edges))


def components(spec: GISpec) -> tuple[int, GISpec]:
    """(d, component): the graph is d disjoint copies of the component spec.

    d = gcd(n, j_0, ..., j_{t-1}); the graph is connected iff d = 1.
    """
    d = reduce(gcd, spec.steps, spec.n)
    if d == 1:
        return 1, spec
    return d, GISpec(spec.n // d, tuple(j // d for j in spec.steps))


def is_connected(spec: GISpec) -> bool:
    return components(spec)[0] == 1


def layer_cycle_structure(spec: GISpec) -> list[tuple[int, int, int]]:
    """Per layer s: (s, number of cycles, cycle length)."""
    out = []
    for s, j in enumerate(spec.steps):
        d = gcd(spec.n, j)
        out.append((s, d, spec.n // d))
    return out


def recover_partition(graph: GIGraph) -> dict[tuple[int, int], str]:
    """Re-derive the spoke/layer tag of every edge from structure alone.

    For t >= 4 an edge is a spoke edge iff it lies in some K_4: spokes induce
    complete graphs of order >= 4, while layer edges only ever border cycles.
    """
    t = graph.spec.t
    if t < 4:
        raise TooFewLayers(t)
    nv = graph.num_vertices
    masks = [0] * nv
    for u, nbrs in enumerate(graph.adjacency):
        for v in nbrs:
            masks[u] |= 1 << v
    tags = {}
    for e in graph.edges:
        common = masks[e.u] & masks[e.v]
        in_k4 = False
        c = common
        while c:
            w = (c & -c).bit_length() - 1
            c &= c - 1
            if masks[w] & common:
                in_k4 = True
                break
        tags[(e.u, e.v)] = SPOKE if in_k4 else LAYER
    return tags


def graph_to_json_dict(graph: GIGraph) -> dict:
    spec = graph.spec
    payload = {
        "n": spec.n,
        "J": list(spec.steps),
        "vertices": [list(spec.vertex_pair(i)) for i in range(graph.num_vertices)],
        "edges": [],
    }
    for e in graph.edges:
        item = {"u": e.u, "v": e.v, "kind": e.kind}
        if e.kind == LAYER:
            item["layer"] = e.layer
        payload["edges"].append(item)
    return payload


def graph_to_dot(graph: GIGraph) -> str:
    spec = graph.spec
    name = lambda i: '"%d_%d"' % spec.vertex_pair(i)
    lines = [f'graph "{spec}" {{']
    for i in range(graph.num_vertices):
        lines.append(f"  {name(i)};")
    for e in graph.edges:
        attrs = f"kind={e.kind}" if e.kind == SPOKE else f"kind={e.kind}, layer={e.layer}"
        lines.append(f"  {name(e.u)} -- {name(e.v)} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_edge_list(graph: GIGraph) -> str:
    return "\n".join(f"{e.u} {e.v}" for e in graph.edges) + "\n"
