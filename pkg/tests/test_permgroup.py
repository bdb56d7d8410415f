import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reptheory.permgroup import (EnumerationBound, PermGroup, alternating_group,
                                 builtin_group, cycle_lengths, cycle_notation,
                                 cyclic_group, dihedral_group, from_cycles,
                                 group_from_json, group_to_json, p_inv, p_mul,
                                 p_order, quaternion_group, symmetric_group)
from reptheory.symgrp import class_size, partitions_of


def test_s3_classes():
    g = symmetric_group(3)
    assert g.order == 6
    assert [c.size for c in g.classes] == [1, 3, 2]
    assert [c.element_order for c in g.classes] == [1, 2, 3]


def test_z4_abelian():
    g = cyclic_group(4)
    assert g.order == 4
    assert all(c.size == 1 for c in g.classes)
    assert g.is_abelian()
    assert g.exponent == 4


def test_a5_classes():
    g = alternating_group(5)
    assert g.order == 60
    assert sorted(c.size for c in g.classes) == [1, 12, 12, 15, 20]


def test_class_equation_and_centralizers():
    for name in ("S3", "S4", "A4", "A5", "Q8", "D5"):
        g = builtin_group(name)
        assert sum(c.size for c in g.classes) == g.order
        for c in g.classes:
            assert g.order % c.centralizer_order == 0
            assert c.size * c.centralizer_order == g.order


def test_power_class_map():
    g = symmetric_group(3)
    pm = g.power_class_map(2)
    three = next(i for i, c in enumerate(g.classes) if c.element_order == 3)
    two = next(i for i, c in enumerate(g.classes) if c.element_order == 2)
    assert pm[three] == three     # (123)^2 is conjugate to (123)
    assert pm[two] == 0           # transposition squared is the identity
    assert g.power_class_map(1) == list(range(len(g.classes)))


def test_subgroup_views():
    s3 = symmetric_group(3)
    z2 = s3.subgroup([from_cycles(3, [(0, 1)])])
    assert z2.index_in_supergroup == 3
    assert len(z2.group.classes) == 2
    z3 = s3.subgroup([from_cycles(3, [(0, 1, 2)])])
    assert z3.index_in_supergroup == 2
    s4 = symmetric_group(4)
    s3sub = s4.subgroup([from_cycles(4, [(0, 1)]), from_cycles(4, [(0, 1, 2)])])
    assert s3sub.index_in_supergroup == 4
    # class containment map lands on classes of the same element order
    for hc, gc in enumerate(s3sub.class_to_gclass):
        assert (s3sub.group.classes[hc].element_order
                == s4.classes[gc].element_order)
    with pytest.raises(ValueError):
        s3.subgroup([(1, 0, 2, 3)])  # wrong degree / not in G


def test_sn_classes_are_cycle_types():
    for n in range(2, 7):
        g = symmetric_group(n)
        types = {cycle_lengths(c.representative) for c in g.classes}
        assert types == set(partitions_of(n))
        for c in g.classes:
            assert c.size == class_size(cycle_lengths(c.representative))


def test_named_groups():
    assert builtin_group("S5").order == 120
    assert builtin_group("A4").order == 12
    assert builtin_group("Z12").order == 12
    assert builtin_group("Z_6").order == 6
    assert builtin_group("D4").order == 8
    assert builtin_group("D2").order == 4
    assert builtin_group("Q8").order == 8
    with pytest.raises(ValueError):
        builtin_group("M11")


def test_quaternion_group_structure():
    q8 = quaternion_group()
    assert q8.order == 8
    assert [c.size for c in q8.classes] == [1, 1, 2, 2, 2]
    assert q8.involution_count() == 2
    assert q8.exponent == 4


def test_involution_counts():
    assert symmetric_group(3).involution_count() == 4
    assert symmetric_group(4).involution_count() == 10
    assert alternating_group(5).involution_count() == 16


def test_enumeration_bound():
    with pytest.raises(EnumerationBound):
        PermGroup(6, symmetric_group(6).generators, bound=100)


def test_extend_hom():
    g = cyclic_group(6)
    exps = g.extend_hom([1], mul=lambda a, b: (a + b) % 6, one=0)
    gen_idx = g.index[g.generators[0]]
    assert exps[0] == 0 and exps[gen_idx] == 1
    assert sorted(exps) == list(range(6))


def test_cycle_notation():
    assert cycle_notation((1, 0, 2)) == "(12)"
    assert cycle_notation((0, 1, 2)) == "Id"
    assert cycle_notation(from_cycles(4, [(0, 1), (2, 3)])) == "(12)(34)"


@given(st.permutations(list(range(5))))
@settings(max_examples=50, deadline=None)
def test_inverse_and_order(p):
    p = tuple(p)
    assert p_mul(p, p_inv(p)) == (0, 1, 2, 3, 4)
    k = p_order(p)
    x = (0, 1, 2, 3, 4)
    for _ in range(k):
        x = p_mul(x, p)
    assert x == (0, 1, 2, 3, 4)


def test_group_serialization():
    g = symmetric_group(3)
    blob = json.dumps(group_to_json(g))
    h = group_from_json(json.loads(blob))
    assert h.elements == g.elements
    assert group_from_json("S4").order == 24
