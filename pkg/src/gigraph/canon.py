"""Standard and canonical forms of step multisets.

Multiplying every step by the same unit of Z_n yields an isomorphic graph, so
each isomorphism-relevant class of step multisets has a distinguished member:
the lexicographically least standard form over all unit multiples.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import units
from .graphs import GISpec, fold_step, validate_spec


def standard_form(n: int, steps) -> tuple[int, ...]:
    """Each step folded into (0, n/2), then sorted. Raises BadStep like validate_spec."""
    return validate_spec(n, steps).steps


@dataclass(frozen=True)
class CanonicalForm:
    n: int
    steps: tuple[int, ...]
    witness_unit: int

    def spec(self) -> GISpec:
        return GISpec(self.n, self.steps)


def canonical_form(spec: GISpec) -> CanonicalForm:
    """Minimize the standard form of a*J over all units a; smallest witness wins ties.

    phi(n) stays tiny at the scales this library targets, so the scan over all
    units is deliberate.
    """
    best = None
    for a in units(spec.n):
        cand = tuple(sorted(fold_step(spec.n, a * j) for j in spec.steps))
        if best is None or cand < best[0]:
            best = (cand, a)
    return CanonicalForm(spec.n, best[0], best[1])


def equivalent(spec_a: GISpec, spec_b: GISpec) -> bool:
    """True when unit scaling certifies the two graphs isomorphic.

    Equal canonical forms imply isomorphism; unequal ones prove nothing, since
    canonical-form equality is not known to be a complete invariant.
    """
    if spec_a.n != spec_b.n or spec_a.t != spec_b.t:
        return False
    return canonical_form(spec_a).steps == canonical_form(spec_b).steps
