"""Permutations on 0..n-1 as image tuples, with left-to-right composition.

compose(p, q) means "apply p, then q". All group-theoretic identities in this
package are stated under that convention.
"""

from __future__ import annotations

from .errors import CapExceeded

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_perm(p: Perm) -> bool:
    return sorted(p) == list(range(len(p)))


def compose(p: Perm, q: Perm) -> Perm:
    """p followed by q: x -> q[p[x]]."""
    return tuple(q[x] for x in p)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def perm_order(p: Perm) -> int:
    k = 1
    q = p
    ident = identity(len(p))
    while q != ident:
        q = compose(q, p)
        k += 1
    return k


def cycle_notation(p: Perm) -> str:
    """Disjoint-cycle string, fixed points omitted; '()' for the identity."""
    seen = [False] * len(p)
    parts = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) if parts else "()"


def group_closure(gens, cap: int = 1_000_000) -> frozenset[Perm]:
    """Closure of gens under composition, breadth first.

    Raises CapExceeded as soon as the element count would pass cap.
    """
    gens = list(gens)
    if not gens:
        return frozenset()
    ident = identity(len(gens[0]))
    closed = {ident}
    frontier = [ident]
    while frontier:
        fresh = []
        for a in frontier:
            for g in gens:
                c = tuple(g[x] for x in a)
                if c not in closed:
                    if len(closed) >= cap:
                        raise CapExceeded(cap)
                    closed.add(c)
                    fresh.append(c)
        frontier = fresh
    return frozenset(closed)
