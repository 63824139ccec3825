from math import gcd

import pytest

from gigraph.arith import is_mult_subgroup
from gigraph.autgroup import (EXCEPTIONAL_ORDERS, aut_order, check_automorphism,
                              cycle_swap, generators, layer_swap, multiplier,
                              multiplier_layer_map, multiset_stabilizer,
                              partition_preserving_order, reflection, rotation,
                              set_stabilizer)
from gigraph.errors import (BadClass, CapExceeded, NotAUnit, NotInStabilizer,
                            StepsDiffer)
from gigraph.graphs import build, validate_spec
from gigraph.perms import compose, group_closure, identity, inverse

PETERSEN = validate_spec(5, [1, 2])
HEPTA = validate_spec(7, [1, 2, 3])


def test_rotation_and_reflection_pointwise():
    rho = rotation(PETERSEN)
    tau = reflection(PETERSEN)
    assert rho[PETERSEN.vertex_index(0, 4)] == PETERSEN.vertex_index(0, 0)
    assert tau[PETERSEN.vertex_index(1, 2)] == PETERSEN.vertex_index(1, 3)


def test_dihedral_relations():
    for spec in (PETERSEN, HEPTA, validate_spec(6, [1, 1, 2])):
        rho, tau = rotation(spec), reflection(spec)
        ident = identity(spec.num_vertices)
        power = ident
        for _ in range(spec.n):
            power = compose(power, rho)
        assert power == ident
        assert compose(tau, tau) == ident
        rt = compose(rho, tau)
        assert compose(rt, rt) == ident


def test_multiplier_example_on_hepta():
    assert multiplier_layer_map(HEPTA, 2) == (1, 2, 0)
    sigma = multiplier(HEPTA, 2)
    assert sigma[HEPTA.vertex_index(0, 1)] == HEPTA.vertex_index(1, 2)
    assert sigma[HEPTA.vertex_index(2, 3)] == HEPTA.vertex_index(0, 6)


def test_multiplier_identity_and_reflection():
    for spec in (PETERSEN, HEPTA, validate_spec(6, [1, 1, 2])):
        assert multiplier(spec, 1) == identity(spec.num_vertices)
        assert multiplier(spec, spec.n - 1) == reflection(spec)


def test_multiplier_swaps_petersen_layers():
    sigma = multiplier(PETERSEN, 3)  # 3*1 = -2, 3*2 = 1 mod 5
    assert sigma[PETERSEN.vertex_index(0, 0)] == PETERSEN.vertex_index(1, 0)


def test_multiplier_rejections():
    with pytest.raises(NotInStabilizer):
        multiplier(validate_spec(5, [1, 1, 2]), 2)
    with pytest.raises(NotAUnit):
        multiplier(validate_spec(6, [1, 1, 2]), 2)


def test_multiplier_is_homomorphism():
    for spec in (HEPTA, validate_spec(6, [1, 1, 2]), validate_spec(12, [1, 5])):
        b_set = multiset_stabilizer(spec)
        for a in b_set:
            for b in b_set:
                assert compose(multiplier(spec, a), multiplier(spec, b)) == \
                    multiplier(spec, a * b % spec.n)


def test_multiplier_conjugates_rotation_to_power():
    for spec in (HEPTA, validate_spec(12, [1, 5]), validate_spec(6, [1, 1, 2])):
        rho = rotation(spec)
        for a in multiset_stabilizer(spec):
            sigma = multiplier(spec, a)
            lhs = compose(compose(inverse(sigma), rho), sigma)
            power = identity(spec.num_vertices)
            for _ in range(a):
                power = compose(power, rho)
            assert lhs == power


def test_cycle_swap_even_classes():
    spec = validate_spec(6, [2, 2])
    lam = cycle_swap(spec, 0, 0, 1)
    for v in range(6):
        u = spec.vertex_index(0, v)
        if v % 2 == 0:
            assert lam[u] == spec.vertex_index(1, v)
        else:
            assert lam[u] == u
    assert compose(lam, lam) == identity(spec.num_vertices)


def test_cycle_swap_single_class_is_full_swap():
    spec = validate_spec(4, [1, 1])
    assert cycle_swap(spec, 0, 0, 1) == layer_swap(spec, 0, 1)


def test_cycle_swap_rejections():
    spec = validate_spec(6, [1, 1, 2])
    with pytest.raises(StepsDiffer):
        cycle_swap(spec, 0, 0, 2)
    with pytest.raises(BadClass):
        cycle_swap(spec, 5, 0, 1)


def test_layer_swap_is_product_of_cycle_swaps():
    spec = validate_spec(6, [2, 2])
    product = identity(spec.num_vertices)
    for i in range(gcd(6, 2)):
        product = compose(product, cycle_swap(spec, i, 0, 1))
    assert product == layer_swap(spec, 0, 1)
    assert compose(product, product) == identity(spec.num_vertices)


def test_cycle_swap_conjugation_by_rotation_and_reflection():
    for spec in (validate_spec(6, [2, 2]), validate_spec(12, [4, 4])):
        d = gcd(spec.n, spec.steps[0])
        rho, tau = rotation(spec), reflection(spec)
        for i in range(d):
            lam = cycle_swap(spec, i, 0, 1)
            assert compose(compose(inverse(rho), lam), rho) == \
                cycle_swap(spec, (i + 1) % d, 0, 1)
            assert compose(compose(inverse(tau), lam), tau) == \
                cycle_swap(spec, (-i) % d, 0, 1)


def test_stabilizer_sets():
    assert set_stabilizer(HEPTA) == (1, 2, 3, 4, 5, 6)
    assert multiset_stabilizer(HEPTA) == (1, 2, 3, 4, 5, 6)
    assert multiset_stabilizer(validate_spec(6, [1, 1, 2])) == (1, 5)
    assert multiset_stabilizer(validate_spec(9, [1])) == (1, 8)


def test_stabilizers_are_subgroups_and_nested():
    for n, steps in [(7, [1, 2, 3]), (6, [1, 1, 2]), (10, [1, 2]),
                     (12, [1, 2, 3]), (5, [1, 1, 2])]:
        spec = validate_spec(n, steps)
        a_set, b_set = set_stabilizer(spec), multiset_stabilizer(spec)
        assert is_mult_subgroup(n, a_set)
        assert is_mult_subgroup(n, b_set)
        assert set(b_set) <= set(a_set)
        assert n - 1 in b_set


def test_aut_order_examples():
    assert aut_order(PETERSEN).order == 120
    assert aut_order(PETERSEN).case == "sporadic"
    hepta = aut_order(HEPTA)
    assert (hepta.order, hepta.case) == (42, "set")
    wreath = aut_order(validate_spec(6, [2, 2]))
    assert (wreath.order, wreath.case) == (288, "disconnected")
    multi = aut_order(validate_spec(6, [1, 1, 2]))
    assert (multi.order, multi.case) == (24, "multiset")


def test_aut_order_exceptional_by_canonical_form():
    # GI(24;7,11) scales to GI(24;1,5) by the unit 7
    report = aut_order(validate_spec(24, [7, 11]))
    assert (report.order, report.case) == (288, "sporadic")


def test_aut_order_single_layer():
    report = aut_order(validate_spec(6, [2]))
    assert (report.order, report.case) == (72, "single-layer")  # 2! * 6^2
    assert aut_order(validate_spec(4, [1])).order == 8


def test_aut_order_at_least_dihedral():
    for n in range(3, 13):
        for steps in [[1], [1, 2], [1, 1], [2, 2]]:
            try:
                spec = validate_spec(n, steps)
            except Exception:
                continue
            assert aut_order(spec).order >= 2 * n


def test_generators_closure_orders():
    assert len(group_closure(generators(HEPTA).perms)) == 42
    # the exceptional cube graph: explicit generators give only the
    # partition-respecting subgroup, the table order is three times bigger
    cube = validate_spec(4, [1, 1])
    assert len(group_closure(generators(cube).perms)) == 16
    assert aut_order(cube).order == 48
    ring = validate_spec(9, [1])
    assert len(group_closure(generators(ring).perms)) == 18


def test_generators_for_disconnected_spec_cover_component():
    gens = generators(validate_spec(6, [2, 2]))
    assert gens.copies == 2
    assert gens.spec == validate_spec(3, [1, 1])
    assert len(group_closure(gens.perms)) == aut_order(gens.spec).order


def test_generators_are_verified_automorphisms():
    # for disconnected specs the generators act on the component graph
    for n, steps in [(7, [1, 2, 3]), (6, [1, 1, 2]), (12, [4, 4]), (10, [1, 3])]:
        gens = generators(validate_spec(n, steps))
        graph = build(gens.spec)
        for p in gens.perms:
            check_automorphism(graph, p)


def test_group_closure_on_graph_rotation():
    assert len(group_closure([rotation(PETERSEN)])) == 5
    assert len(group_closure([rotation(PETERSEN), reflection(PETERSEN)])) == 10
    with pytest.raises(CapExceeded):
        group_closure([rotation(PETERSEN)], cap=3)


def test_partition_preserving_order_matches_closure():
    for n, steps in [(7, [1, 2, 3]), (6, [1, 1, 2]), (5, [1, 1, 2]),
                     (12, [1, 5]), (8, [1, 3]), (10, [1, 2])]:
        spec = validate_spec(n, steps)
        assert len(group_closure(generators(spec).perms)) == \
            partition_preserving_order(spec)
