import pytest
from hypothesis import given, strategies as st

from gigraph import oracle
from gigraph.arith import units
from gigraph.canon import canonical_form, equivalent, standard_form
from gigraph.errors import BadStep
from gigraph.graphs import GISpec, build, fold_step, validate_spec


def test_standard_form_examples():
    assert standard_form(6, [5, 4, 1]) == (1, 1, 2)
    assert standard_form(12, [7, 9]) == (3, 5)
    assert standard_form(9, [8]) == (1,)


def test_standard_form_rejects_bad_step():
    with pytest.raises(BadStep):
        standard_form(8, [4])


def test_canonical_form_by_exhaustive_scan():
    spec = validate_spec(12, [2, 3, 5])
    got = canonical_form(spec)
    # independent scan over all units
    candidates = {}
    for a in units(12):
        candidates.setdefault(
            tuple(sorted(fold_step(12, a * j) for j in spec.steps)), a)
    assert got.steps == min(candidates)
    assert got.steps == (1, 2, 3)
    assert got.witness_unit == 5


def test_canonical_form_fixed_points():
    assert canonical_form(validate_spec(5, [1, 2])).steps == (1, 2)
    assert canonical_form(validate_spec(9, [1])).steps == (1,)


def test_canonical_form_idempotent():
    for n, steps in [(12, [2, 3, 5]), (10, [1, 3]), (8, [3, 3])]:
        first = canonical_form(validate_spec(n, steps))
        again = canonical_form(GISpec(n, first.steps))
        assert again.steps == first.steps
        assert again.witness_unit == 1


def test_equivalent_examples():
    assert equivalent(validate_spec(12, [2, 3, 5]), validate_spec(12, [1, 2, 3]))
    assert not equivalent(validate_spec(5, [1, 2]), validate_spec(5, [1, 1]))
    assert equivalent(validate_spec(7, [1, 2, 3]), validate_spec(7, [1, 2, 3]))


def test_equivalent_is_an_equivalence_on_common_modulus():
    specs = [GISpec(12, steps) for steps in
             [(1, 2), (2, 3), (1, 5), (5, 5), (2, 4), (1, 1)]]
    for a in specs:
        assert equivalent(a, a)
        for b in specs:
            assert equivalent(a, b) == equivalent(b, a)
            for c in specs:
                if equivalent(a, b) and equivalent(b, c):
                    assert equivalent(a, c)


@given(st.sampled_from([5, 7, 8, 9, 10, 12]), st.data())
def test_canonical_invariant_under_unit_scaling(n, data):
    top = (n - 1) // 2
    steps = data.draw(st.lists(st.integers(1, top), min_size=1, max_size=3))
    a = data.draw(st.sampled_from(units(n)))
    spec = validate_spec(n, steps)
    scaled = validate_spec(n, [a * j for j in steps])
    assert canonical_form(spec).steps == canonical_form(scaled).steps


def test_equivalent_implies_isomorphic_spot_check():
    pairs = [((12, [2, 3, 5]), (12, [1, 2, 3])),
             ((8, [3, 3]), (8, [1, 1])),
             ((10, [3, 9]), (10, [1, 3]))]
    for (n1, s1), (n2, s2) in pairs:
        a, b = validate_spec(n1, s1), validate_spec(n2, s2)
        assert equivalent(a, b)
        assert oracle.is_isomorphic(build(a), build(b))
