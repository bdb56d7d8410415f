import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reptheory.chartab import builtin_table, verify_table
from reptheory.exact import cyc
from reptheory.permgroup import symmetric_group
from reptheory.symgrp import (centralizer_order, class_size, conjugate_partition,
                              content, frobenius_character, gl_dim, hook_dim,
                              kostka, partitions_of, power_sum_value, schur_eval,
                              schur_special, sign_of_type, sn_table,
                              specht_dim_determinant, u_character)

partition_strategy = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.sampled_from(partitions_of(n)))


def test_partitions_listing():
    assert partitions_of(3) == [(3,), (2, 1), (1, 1, 1)]
    assert len(partitions_of(4)) == 5
    assert partitions_of(0) == [()]
    assert len(partitions_of(8)) == 22
    with pytest.raises(ValueError):
        partitions_of(-1)


def test_hook_dims():
    assert hook_dim((2, 1)) == 2
    assert hook_dim((2, 2)) == 2
    assert hook_dim((3, 1)) == 3
    assert hook_dim((2, 1, 1)) == 3
    assert hook_dim((1,) * 6) == 1
    assert hook_dim((6,)) == 1


def test_class_sizes():
    assert class_size((3,)) == 2
    assert class_size((2, 2)) == 3
    assert class_size((1, 1, 1, 1)) == 1
    assert class_size((2, 1)) == 3
    for n in range(1, 8):
        assert sum(class_size(t) for t in partitions_of(n)) == \
            __import__("math").factorial(n)


def test_frobenius_character_values():
    assert frobenius_character((2, 1), (1, 1, 1)) == 2
    assert frobenius_character((2, 1), (3,)) == -1
    assert frobenius_character((2, 1), (2, 1)) == 0
    for t in partitions_of(5):
        assert frobenius_character((5,), t) == 1
    for t in partitions_of(4):
        assert frobenius_character((1, 1, 1, 1), t) == sign_of_type(t)
    with pytest.raises(ValueError):
        frobenius_character((2, 1), (2, 2))


def test_u_character_values():
    assert u_character((1, 1, 1), (1, 1, 1)) == 6
    assert all(u_character((1, 1, 1), t) == 0
               for t in partitions_of(3) if t != (1, 1, 1))
    for t in partitions_of(4):
        assert u_character((4,), t) == 1
    assert u_character((2, 1), (1, 1, 1)) == 3
    for lam in partitions_of(5):
        for t in partitions_of(5):
            assert u_character(lam, t) >= 0


def test_kostka_values():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((1, 1, 1), (2, 1)) == 0
    for n in range(1, 7):
        for lam in partitions_of(n):
            assert kostka(lam, lam) == 1


def test_kostka_triangularity():
    for n in range(2, 7):
        parts = partitions_of(n)
        for lam in parts:
            for mu in parts:
                if mu < lam:
                    assert kostka(mu, lam) == 0


def test_u_expansion_identity():
    for n in range(1, 6):
        parts = partitions_of(n)
        for lam in parts:
            for t in parts:
                assert u_character(lam, t) == sum(
                    kostka(mu, lam) * frobenius_character(mu, t) for mu in parts)


def test_conjugate_partition():
    assert conjugate_partition((3, 1)) == (2, 1, 1)
    assert conjugate_partition((5,)) == (1, 1, 1, 1, 1)
    assert conjugate_partition(()) == ()


@given(partition_strategy)
@settings(max_examples=40, deadline=None)
def test_conjugate_is_involution(lam):
    assert conjugate_partition(conjugate_partition(lam)) == lam
    assert hook_dim(conjugate_partition(lam)) == hook_dim(lam)


def test_conjugate_sign_twist():
    # chi_(lambda*) = sign * chi_lambda, tested for n <= 6
    for n in range(1, 7):
        for lam in partitions_of(n):
            star = conjugate_partition(lam)
            for t in partitions_of(n):
                assert frobenius_character(star, t) == \
                    sign_of_type(t) * frobenius_character(lam, t)


def test_content():
    assert content((4,)) == 6
    assert content((1, 1)) == -1
    assert content((2, 1)) == 0


def test_dimension_formulas_agree():
    for n in range(1, 8):
        for lam in partitions_of(n):
            assert hook_dim(lam) == specht_dim_determinant(lam) == \
                frobenius_character(lam, (1,) * n)


def test_sum_of_dims_is_involution_count():
    for n in range(1, 7):
        total = sum(hook_dim(lam) for lam in partitions_of(n))
        assert total == symmetric_group(n).involution_count()


def test_sn_tables_verify():
    for n in range(1, 6):
        table = sn_table(n)
        assert verify_table(table).ok, n
        assert sum(r.degree ** 2 for r in table.rows) == table.group.order


def test_sn_table_matches_builtin():
    for n, name in ((3, "S3"), (4, "S4")):
        table = sn_table(n)
        ref = builtin_table(name)
        got = sorted((tuple(v.key() for v in r.function.values) for r in table.rows))
        # builtin lives on the same group realization: same canonical classes
        want = sorted((tuple(v.key() for v in r.function.values) for r in ref.rows))
        assert got == want


def test_sn_specht_named_rows():
    # V[n] is trivial, V[1,..,1] is sign, V[2,1] of S3 is the 2-dim row
    t = sn_table(3)
    assert t.row_by_name("V[3]").degree == 1
    assert t.row_by_name("V[1,1,1]").degree == 1
    assert t.row_by_name("V[2,1]").degree == 2


def test_branching_rule_restriction():
    # restriction of V_mu to S_(n-1) = sum over diagram-square removals
    from reptheory.chartab import restrict
    from reptheory.permgroup import from_cycles
    for n in range(3, 6):
        table = sn_table(n)
        small = sn_table(n - 1)
        gens = [from_cycles(n, [(0, 1)]),
                tuple(list(range(1, n - 1)) + [0, n - 1])]
        sub = table.group.subgroup(gens)
        assert sub.group.order == small.group.order
        for lam in partitions_of(n):
            removals = []
            for i in range(len(lam)):
                if i + 1 < len(lam) and lam[i] - 1 < lam[i + 1]:
                    continue  # not a corner square
                nxt = list(lam)
                nxt[i] -= 1
                if nxt[i] == 0:
                    nxt.pop(i)
                removals.append(tuple(nxt))
            want = sum(hook_dim(m) for m in removals)
            res = restrict(sub, table.row_by_name(
                "V[" + ",".join(str(p) for p in lam) + "]").function)
            assert res.at_identity() == hook_dim(lam)
            # exact branching: the restricted character equals the sum of the
            # smaller Specht characters, matched through cycle types
            from reptheory.permgroup import cycle_lengths
            for hc, cl in enumerate(sub.group.classes):
                t = cycle_lengths(cl.representative)
                t = tuple(sorted((x for x in t if x > 1), reverse=True))
                t = t + (1,) * (n - 1 - sum(t))
                expect = sum(frobenius_character(m, t) for m in removals)
                assert res.values[hc] == expect, (lam, t)
            assert want == sum(hook_dim(m) for m in removals)


def test_schur_eval_and_specials():
    pts = [Fraction(1), Fraction(2), Fraction(3)]
    assert schur_eval((1,), [Fraction(1, 2), Fraction(3)]) == Fraction(7, 2)
    assert schur_eval((2,), pts) == 25
    assert schur_eval((1, 1), pts) == 11
    assert schur_eval((2, 1), pts) == 60
    assert schur_special((1,), 2) == 2
    assert schur_special((1, 1), 3) == 3
    z = Fraction(3, 2)
    assert schur_special((2, 1), 3, z=z) == \
        schur_eval((2, 1), [z ** k for k in range(3)]).as_fraction()
    with pytest.raises(ValueError):
        schur_eval((1,), [Fraction(2), Fraction(2)])
    with pytest.raises(ValueError):
        schur_special((2, 1), 3, z=Fraction(1))
    with pytest.raises(ValueError):
        schur_special((2, 1, 1), 2)


def test_power_sum_expansion():
    rng = random.Random(3)
    for _ in range(5):
        pts = []
        while len(set(pts)) < 3:
            pts = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3)]
        for n in range(1, 5):
            for t in partitions_of(n):
                rhs = cyc(0)
                for lam in partitions_of(n):
                    if len(lam) <= 3:
                        rhs = rhs + frobenius_character(lam, t) * schur_eval(lam, pts)
                assert power_sum_value(pts, t) == rhs


def test_gl_dims():
    assert gl_dim((5, 0), 2) == 6
    assert gl_dim((1, 1, 1), 3) == 1
    assert gl_dim((0, 0, 0), 3) == 1
    rng = random.Random(5)
    for _ in range(20):
        nvars = rng.randint(1, 4)
        lam = sorted((rng.randint(-4, 4) for _ in range(nvars)), reverse=True)
        shifted = [x + 1 for x in lam]
        assert gl_dim(lam, nvars) == gl_dim(shifted, nvars) > 0
    with pytest.raises(ValueError):
        gl_dim((1, 2), 2)


def test_dim_of_symmetric_power():
    # one-row weights give symmetric powers of the defining representation
    for n in range(7):
        assert gl_dim((n, 0), 2) == n + 1
        assert schur_special((n,) if n else (), 2) == n + 1


def test_centralizer_order():
    assert centralizer_order((3,)) == 3
    assert centralizer_order((1, 1, 1)) == 6
    assert centralizer_order((2, 1)) == 2
