"""Independent brute-force ground truth.

Nothing in this module consults the closed-form order formulas or the
classification rules: automorphisms come from backtracking over vertex images
with partition-refinement pruning, isomorphism from the same search across two
graphs, and Cayley-ness from an exhaustive regular-subgroup search. The one
reduction allowed is classical: the automorphism group of a disjoint union of
isomorphic connected components is the component group wreathed by the
component permutations, which this module applies only when the full element
enumeration would not fit the cap (and cross-checks against direct search
whenever it does fit).
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from math import factorial

from .errors import CapExceeded, TooLarge
from .graphs import GIGraph
from .perms import Perm, identity

DEFAULT_VERTEX_CAP = 60
DEFAULT_ELEMENT_CAP = 120_000
DEFAULT_SUBGROUP_CAP = 10_000


def vertex_cap() -> int:
    raw = os.environ.get("GIGRAPH_MAX_VERTICES")
    return int(raw) if raw else DEFAULT_VERTEX_CAP


@dataclass(frozen=True)
class PermGroup:
    """A permutation group, materialized as full element set when small enough,
    otherwise carried by generators plus the known order."""

    degree: int
    order: int
    generators: tuple[Perm, ...] | None
    elements: tuple[Perm, ...] | None


def adjacency_masks(adjacency) -> list[int]:
    masks = [0] * len(adjacency)
    for u, nbrs in enumerate(adjacency):
        for v in nbrs:
            masks[u] |= 1 << v
    return masks


def connected_components(adjacency) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by minimum."""
    nv = len(adjacency)
    seen = [False] * nv
    comps = []
    for start in range(nv):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        i = 0
        while i < len(comp):
            for y in adjacency[comp[i]]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
            i += 1
        comps.append(sorted(comp))
    return comps


def _distance_histogram(adjacency, start: int) -> tuple[int, ...]:
    seen = {start}
    frontier = [start]
    hist = []
    while frontier:
        hist.append(len(frontier))
        nxt = []
        for x in frontier:
            for y in adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(hist)


def _initial_invariants(adjacency, masks) -> list[tuple]:
    nv = len(adjacency)
    out = []
    for u in range(nv):
        tri = sum((masks[u] & masks[v]).bit_count() for v in adjacency[u]) // 2
        out.append((len(adjacency[u]), tri, _distance_histogram(adjacency, u)))
    return out


def joint_colors(adjacencies: list) -> list[list[int]]:
    """Stable vertex colors for one or more graphs, refined with a shared
    interning table so colors are comparable across the graphs."""
    masks = [adjacency_masks(adj) for adj in adjacencies]
    table: dict = {}
    colors = []
    for adj, m in zip(adjacencies, masks):
        colors.append([table.setdefault(inv, len(table))
                       for inv in _initial_invariants(adj, m)])
    n_classes = len(table)
    while True:
        table = {}
        new = []
        for adj, cols in zip(adjacencies, colors):
            new.append([table.setdefault((cols[u], tuple(sorted(cols[v] for v in adj[u]))),
                                         len(table))
                        for u in range(len(adj))])
        if len(table) == n_classes:
            return new
        colors, n_classes = new, len(table)


def _search_order(adjacency, colors, color_sizes):
    """Vertex processing order: per component, breadth-first from a vertex in
    the rarest color class, so every later vertex has a mapped neighbor."""
    order = []
    for comp in connected_components(adjacency):
        start = min(comp, key=lambda u: (color_sizes[colors[u]], u))
        seen = {start}
        queue = [start]
        while queue:
            x = queue.pop(0)
            order.append(x)
            for y in adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return order


def _match(adj1, colors1, adj2, colors2, find_all: bool, cap: int | None):
    """Backtracking search for color/adjacency-preserving bijections from
    graph 1 onto graph 2. Returns all of them (find_all) or at most one."""
    nv = len(adj1)
    if len(adj2) != nv or Counter(colors1) != Counter(colors2):
        return []
    masks2 = adjacency_masks(adj2)
    color_mask2: dict[int, int] = {}
    for u, c in enumerate(colors2):
        color_mask2[c] = color_mask2.get(c, 0) | 1 << u
    sizes = Counter(colors1)
    order = _search_order(adj1, colors1, sizes)
    position = {u: i for i, u in enumerate(order)}
    mapped_nbrs = [[v for v in adj1[u] if position[v] < i] for i, u in enumerate(order)]
    img = [0] * nv
    results: list[Perm] = []

    def extend(k: int, used: int) -> bool:
        if k == nv:
            results.append(tuple(img))
            if not find_all:
                return True
            if cap is not None and len(results) > cap:
                raise CapExceeded(cap, "automorphism enumeration")
            return False
        u = order[k]
        cand = color_mask2.get(colors1[u], 0) & ~used
        for x in mapped_nbrs[k]:
            cand &= masks2[img[x]]
        need = len(mapped_nbrs[k])
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if (masks2[w] & used).bit_count() == need:
                img[u] = w
                if extend(k + 1, used | (1 << w)):
                    return True
        return False

    extend(0, 0)
    return results


def _enumerate_automorphisms(adjacency, cap: int) -> list[Perm]:
    colors = joint_colors([adjacency])[0]
    return _match(adjacency, colors, adjacency, colors, find_all=True, cap=cap)


def _edge_pairs(graph: GIGraph) -> set[tuple[int, int]]:
    return {(e.u, e.v) for e in graph.edges}


def _verify_elements(graph: GIGraph, elements) -> None:
    """Edge-by-edge check; full below 2000 elements, sampled above."""
    pool = elements if len(elements) <= 2000 else [
        elements[i * len(elements) // 64] for i in range(64)]
    edge_set = _edge_pairs(graph)
    for p in pool:
        for u, v in edge_set:
            a, b = p[u], p[v]
            if (a, b) not in edge_set and (b, a) not in edge_set:
                raise AssertionError(f"search produced a non-automorphism: {p}")


def _induced(adjacency, vertices: list[int]):
    index = {g: i for i, g in enumerate(vertices)}
    return [[index[w] for w in adjacency[g] if w in index] for g in vertices]


def _wreath_decomposition(adjacency, comps, element_cap: int):
    """Group isomorphic components into classes with explicit isomorphisms.

    Returns (order, generators) where the generators act on the whole graph:
    component-group generators embedded in the first copy of each class, plus
    adjacent-copy swaps through the found isomorphisms.
    """
    nv = len(adjacency)
    sub_adjs = [_induced(adjacency, comp) for comp in comps]
    all_colors = joint_colors(sub_adjs)
    classes: list[dict] = []
    for ci, comp in enumerate(comps):
        placed = False
        for cls in classes:
            rep = cls["rep"]
            if len(comps[rep]) != len(comp):
                continue
            found = _match(sub_adjs[rep], all_colors[rep],
                           sub_adjs[ci], all_colors[ci], find_all=False, cap=None)
            if found:
                cls["copies"].append(ci)
                cls["isos"].append(found[0])
                placed = True
                break
        if not placed:
            classes.append({"rep": ci, "copies": [ci],
                            "isos": [identity(len(comp))]})
    order = 1
    gens: list[Perm] = []
    ident = list(range(nv))
    for cls in classes:
        rep = cls["rep"]
        sub_auts = _enumerate_automorphisms(sub_adjs[rep], cap=element_cap)
        m = len(cls["copies"])
        order *= factorial(m) * len(sub_auts) ** m
        # small generating subset of the component group, found greedily
        sub_gens = _greedy_generators(sub_auts)
        first = cls["copies"][0]
        for g in sub_gens:
            p = ident.copy()
            for r, gr in enumerate(g):
                p[comps[first][r]] = comps[first][gr]
            gens.append(tuple(p))
        for a in range(m - 1):
            ca, cb = cls["copies"][a], cls["copies"][a + 1]
            pa, pb = cls["isos"][a], cls["isos"][a + 1]
            p = ident.copy()
            for r in range(len(pa)):
                p[comps[ca][pa[r]]] = comps[cb][pb[r]]
                p[comps[cb][pb[r]]] = comps[ca][pa[r]]
            gens.append(tuple(p))
    return order, tuple(gens)


def _greedy_generators(elements) -> list[Perm]:
    if not elements:
        return []
    nv = len(elements[0])
    ident = identity(nv)
    gens: list[Perm] = []
    known = {ident}
    for e in elements:
        if e in known:
            continue
        gens.append(e)
        frontier = list(known)
        known.add(e)
        frontier.append(e)
        while frontier:
            fresh = []
            for a in frontier:
                for g in gens:
                    c = tuple(g[x] for x in a)
                    if c not in known:
                        known.add(c)
                        fresh.append(c)
            frontier = fresh
        if len(known) == len(elements):
            break
    return gens


def brute_aut(graph: GIGraph, element_cap: int = DEFAULT_ELEMENT_CAP,
              max_vertices: int | None = None) -> PermGroup:
    """The full automorphism group of the graph, by search.

    Elements are materialized (and spot-verified) whenever the order fits
    element_cap; above it, only a disconnected graph can be handled, through
    the component-wreath reduction, and the group is returned as generators
    plus order.
    """
    cap = max_vertices if max_vertices is not None else vertex_cap()
    nv = graph.num_vertices
    if nv > cap:
        raise TooLarge("graph", nv, cap)
    adjacency = graph.adjacency
    comps = connected_components(adjacency)
    if len(comps) == 1:
        elements = _enumerate_automorphisms(adjacency, cap=element_cap)
        _verify_elements(graph, elements)
        return PermGroup(nv, len(elements), None, tuple(elements))
    order, gens = _wreath_decomposition(adjacency, comps, element_cap)
    for g in gens:
        _verify_elements(graph, [g])
    if order <= element_cap:
        elements = _enumerate_automorphisms(adjacency, cap=element_cap)
        if len(elements) != order:
            raise AssertionError(
                f"wreath order {order} disagrees with direct enumeration "
                f"{len(elements)} on {graph.spec}")
        _verify_elements(graph, elements)
        return PermGroup(nv, order, gens, tuple(elements))
    return PermGroup(nv, order, gens, None)


def _acting_perms(group: PermGroup):
    perms = group.elements if group.elements is not None else group.generators
    if perms is None:
        raise TooLarge("group without elements or generators", group.order, 0)
    return perms


def vertex_orbits(group: PermGroup, nv: int) -> list[list[int]]:
    assigned = [False] * nv
    orbits = []
    for u in range(nv):
        if assigned[u]:
            continue
        if group.elements is not None:
            # the group is closed, so one pass over it is the whole orbit
            orbit = {p[u] for p in group.elements}
        else:
            gens = _acting_perms(group)
            orbit = {u}
            frontier = [u]
            while frontier:
                fresh = []
                for x in frontier:
                    for p in gens:
                        y = p[x]
                        if y not in orbit:
                            orbit.add(y)
                            fresh.append(y)
                frontier = fresh
        for x in orbit:
            assigned[x] = True
        orbits.append(sorted(orbit))
    return orbits


def edge_orbits(group: PermGroup, graph: GIGraph) -> list[list[tuple[int, int]]]:
    remaining = {(e.u, e.v) for e in graph.edges}
    orbits = []
    while remaining:
        u, v = min(remaining)
        if group.elements is not None:
            orbit = {(p[u], p[v]) if p[u] < p[v] else (p[v], p[u])
                     for p in group.elements}
        else:
            gens = _acting_perms(group)
            orbit = {(u, v)}
            frontier = [(u, v)]
            while frontier:
                fresh = []
                for x, y in frontier:
                    for p in gens:
                        a, b = p[x], p[y]
                        e = (a, b) if a < b else (b, a)
                        if e not in orbit:
                            orbit.add(e)
                            fresh.append(e)
                frontier = fresh
        remaining -= orbit
        orbits.append(sorted(orbit))
    return orbits


def find_isomorphism(g1: GIGraph, g2: GIGraph,
                     max_vertices: int | None = None) -> Perm | None:
    """A vertex bijection of g1 onto g2 preserving adjacency, or None.

    The witness is re-verified edge by edge before being returned.
    """
    cap = max_vertices if max_vertices is not None else vertex_cap()
    if g1.num_vertices > cap or g2.num_vertices > cap:
        raise TooLarge("graph", max(g1.num_vertices, g2.num_vertices), cap)
    if g1.num_vertices != g2.num_vertices or len(g1.edges) != len(g2.edges):
        return None
    if g1.adjacency == g2.adjacency:
        return identity(g1.num_vertices)
    c1, c2 = joint_colors([g1.adjacency, g2.adjacency])
    found = _match(g1.adjacency, c1, g2.adjacency, c2, find_all=False, cap=None)
    if not found:
        return None
    witness = found[0]
    target = _edge_pairs(g2)
    for e in g1.edges:
        a, b = witness[e.u], witness[e.v]
        if (min(a, b), max(a, b)) not in target:
            raise AssertionError("isomorphism witness failed verification")
    return witness


def is_isomorphic(g1: GIGraph, g2: GIGraph, max_vertices: int | None = None) -> bool:
    return find_isomorphism(g1, g2, max_vertices) is not None


def find_regular_subgroup(group: PermGroup, nv: int,
                          search_cap: int = DEFAULT_SUBGROUP_CAP):
    """A subgroup acting regularly on the nv points, or None after exhaustion.

    Builds subgroups from fixed-point-free elements, pruning any partial
    closure that gains a fixed point or outgrows nv. A semiregular subgroup of
    order nv is automatically transitive, hence regular; transitivity is still
    re-asserted on the result.
    """
    if group.order > search_cap:
        raise TooLarge("automorphism group", group.order, search_cap)
    if group.elements is None:
        raise TooLarge("group without materialized elements", group.order, search_cap)
    if group.order % nv != 0:
        return None
    ident = identity(nv)
    fpf = sorted(p for p in group.elements
                 if p != ident and all(p[i] != i for i in range(nv)))

    def closed_extension(base: frozenset, gens: tuple, g: Perm):
        """Closure of base u {g}, or None once it gains a fixed point or
        outgrows nv. Every element is some x*(word in gens), x in the seed."""
        els = set(base)
        els.add(g)
        gens = gens + (g,)
        frontier = list(els)
        while frontier:
            fresh = []
            for a in frontier:
                for b in gens:
                    c = tuple(b[x] for x in a)
                    if c not in els:
                        if c != ident and any(c[i] == i for i in range(nv)):
                            return None
                        els.add(c)
                        fresh.append(c)
                        if len(els) > nv:
                            return None
            frontier = fresh
        return frozenset(els), gens

    visited: set[frozenset] = set()

    def dfs(current: frozenset, gens: tuple):
        if current in visited:
            return None
        visited.add(current)
        for g in fpf:
            if g in current:
                continue
            ext = closed_extension(current, gens, g)
            if ext is None:
                continue
            subgroup, sub_gens = ext
            if len(subgroup) == nv:
                if _is_regular(subgroup, nv):
                    return tuple(sorted(subgroup))
                continue
            if nv % len(subgroup) == 0:
                found = dfs(subgroup, sub_gens)
                if found:
                    return found
        return None

    return dfs(frozenset([ident]), ())


def _is_regular(subgroup, nv: int) -> bool:
    """Order nv, semiregular, transitive; all three checked outright."""
    if len(subgroup) != nv:
        return False
    ident = identity(nv)
    for p in subgroup:
        if p != ident and any(p[i] == i for i in range(nv)):
            return False
    orbit = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for p in subgroup:
            if p[x] not in orbit:
                orbit.add(p[x])
                frontier.append(p[x])
    return len(orbit) == nv


def girth_and_c4(graph: GIGraph) -> tuple[int, bool]:
    """(girth, whether any 4-cycle exists); girth 0 for forests (cannot occur
    for valid specs, every layer closes a cycle)."""
    adjacency = graph.adjacency
    nv = graph.num_vertices
    best = 0
    for root in range(nv):
        dist = {root: 0}
        parent = {root: -1}
        frontier = [root]
        while frontier:
            nxt = []
            for x in frontier:
                for y in adjacency[x]:
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        nxt.append(y)
                    elif parent[x] != y and parent[y] != x:
                        cycle = dist[x] + dist[y] + 1
                        if best == 0 or cycle < best:
                            best = cycle
            frontier = nxt
    masks = adjacency_masks(adjacency)
    has_c4 = any((masks[u] & masks[v]).bit_count() >= 2
                 for u in range(nv) for v in range(u + 1, nv))
    return best, has_c4
