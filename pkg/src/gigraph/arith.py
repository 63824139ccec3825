"""Modular arithmetic over Z_n and multiplicative-subgroup utilities.

Residues are normalized to [0, n-1] at every boundary so that set membership
is never ambiguous.
"""

from __future__ import annotations

from math import gcd

from .errors import NotAUnit, NotSubgroup


def units(n: int) -> tuple[int, ...]:
    """All residues in [1, n-1] coprime to n, sorted."""
    return tuple(a for a in range(1, n) if gcd(a, n) == 1)


def inv_mod(a: int, n: int) -> int:
    """Multiplicative inverse of a mod n. Raises NotAUnit if gcd(a, n) != 1."""
    a %= n
    if gcd(a, n) != 1:
        raise NotAUnit(a, n)
    return pow(a, -1, n)


def mult_closure(n: int, seed) -> tuple[int, ...]:
    """Smallest multiplicatively closed subset of Z_n^* containing the seed and 1.

    By finiteness this is a subgroup. Raises NotAUnit if a seed element shares
    a factor with n.
    """
    seed = [s % n for s in seed]
    for s in seed:
        if gcd(s, n) != 1:
            raise NotAUnit(s, n)
    closed = {1 % n} | set(seed)
    frontier = list(closed)
    while frontier:
        fresh = []
        for a in frontier:
            for b in seed:
                c = a * b % n
                if c not in closed:
                    closed.add(c)
                    fresh.append(c)
        frontier = fresh
    return tuple(sorted(closed))


def is_mult_subgroup(n: int, members) -> bool:
    """True iff members is a nonempty, unit-only, multiplication-closed set mod n."""
    ms = {m % n for m in members}
    if not ms:
        return False
    if any(gcd(m, n) != 1 for m in ms):
        return False
    return all(a * b % n in ms for a in ms for b in ms)


def generating_set(n: int, subgroup) -> tuple[int, ...]:
    """Small generating set of a multiplicative subgroup, chosen greedily."""
    target = set(subgroup)
    gens: list[int] = []
    have = {1 % n}
    for a in sorted(target):
        if a not in have:
            gens.append(a)
            have = set(mult_closure(n, gens))
            if have == target:
                break
    return tuple(gens)


def find_index2_excluding(n: int, subgroup, excluded: int):
    """An index-2 subgroup of `subgroup` avoiding `excluded`, or None.

    Index-2 subgroups are enumerated as kernels of surjections onto {+1, -1},
    determined by sign assignments on a generating set. Ties are broken by
    returning the lexicographically smallest witness. Raises NotSubgroup when
    the input is not a multiplicative subgroup.
    """
    if not is_mult_subgroup(n, subgroup):
        raise NotSubgroup(n, subgroup)
    members = tuple(sorted(m % n for m in subgroup))
    excluded %= n
    if len(members) % 2 != 0:
        return None
    gens = generating_set(n, members)
    witnesses = []
    for bits in range(1, 1 << len(gens)):
        signs = {1 % n: 1}
        frontier = [1 % n]
        ok = True
        while frontier and ok:
            fresh = []
            for a in frontier:
                for i, g in enumerate(gens):
                    c = a * g % n
                    val = signs[a] * (-1 if bits >> i & 1 else 1)
                    if c not in signs:
                        signs[c] = val
                        fresh.append(c)
                    elif signs[c] != val:
                        ok = False
                        break
                if not ok:
                    break
            frontier = fresh
        if not ok:
            continue
        kernel = tuple(sorted(a for a in members if signs[a] == 1))
        if len(kernel) * 2 == len(members) and excluded not in kernel:
            witnesses.append(kernel)
    return min(witnesses) if witnesses else None


def has_index2_excluding(n: int, subgroup, excluded: int) -> bool:
    return find_index2_excluding(n, subgroup, excluded) is not None
