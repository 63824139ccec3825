"""Shared sweep fixtures.

The desk-scale sweep (all standard-form specs with 2 <= t <= 4, 3 <= n <= 12,
nt <= 48, plus every t = 1 spec in range) is expensive to brute-force, so the
oracle facts are computed once per session and shared by the test modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import pytest

from gigraph import oracle
from gigraph.census import standard_multisets
from gigraph.graphs import GISpec, build, is_connected

SWEEP_N = range(3, 13)
SWEEP_T = range(1, 5)
SWEEP_MAX_VERTICES = 48
CAYLEY_ORDER_CAP = 5000


def sweep_specs() -> list[GISpec]:
    specs = []
    for n in SWEEP_N:
        for t in SWEEP_T:
            if n * t > SWEEP_MAX_VERTICES:
                continue
            for steps in standard_multisets(n, t):
                specs.append(GISpec(n, steps))
    return specs


@dataclass(frozen=True)
class OracleFacts:
    order: int
    vertex_orbit_count: int
    edge_orbit_count: int
    materialized: bool
    # None when the group was too large to search or the graph is disconnected
    regular_subgroup_found: Optional[bool]


@pytest.fixture(scope="session")
def sweep_facts() -> dict[GISpec, OracleFacts]:
    facts = {}
    for spec in sweep_specs():
        graph = build(spec)
        group = oracle.brute_aut(graph)
        vorb = len(oracle.vertex_orbits(group, graph.num_vertices))
        eorb = len(oracle.edge_orbits(group, graph))
        regular = None
        if (is_connected(spec) and vorb == 1
                and group.order <= CAYLEY_ORDER_CAP
                and group.elements is not None):
            regular = oracle.find_regular_subgroup(
                group, graph.num_vertices) is not None
        facts[spec] = OracleFacts(group.order, vorb, eorb,
                                  group.elements is not None, regular)
    return facts
