import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reptheory import chartab
from reptheory.chartab import (BUILTIN_TABLE_NAMES, CharacterTable, ClassFunction,
                               TableRow, abelian_dual_table, builtin_table,
                               decompose, dihedral_semidirect, dual_character,
                               frobenius_schur, heisenberg_semidirect, induce,
                               inner_product, integer_multiplicities,
                               is_irreducible_virtual, permutation_character,
                               regular_character, render_table, restrict,
                               semidirect_table, table_from_json, table_to_json,
                               tensor_multiplicities, trivial_character,
                               verify_table)
from reptheory.exact import cyc, zeta, zero
from reptheory.permgroup import builtin_group, cyclic_group, from_cycles


def test_inner_products_on_s3():
    t = builtin_table("S3")
    c2 = t.row_by_name("C2").function
    assert inner_product(c2, c2) == 1
    plus = t.row_by_name("C+").function
    minus = t.row_by_name("C-").function
    assert inner_product(plus, minus) == 0
    assert inner_product(trivial_character(t.group), trivial_character(t.group)) == 1
    # Hermitian symmetry on a complex-valued table
    a4 = builtin_table("A4")
    f1 = a4.row_by_name("Ce").function
    f2 = a4.row_by_name("C3").function
    assert inner_product(f1, f2) == inner_product(f2, f1).conjugate()


def test_group_mismatch_is_an_error():
    t = builtin_table("S3")
    other = builtin_table("S4")
    with pytest.raises(ValueError):
        inner_product(t.rows[0].function, other.rows[0].function)


def test_verify_all_builtins():
    for name in BUILTIN_TABLE_NAMES:
        report = verify_table(builtin_table(name))
        assert report.ok, (name, report.failures()[:3])


def test_column_orthogonality_value():
    # the column at the transposition class of S3 has squared norm |Z| = 2
    t = builtin_table("S3")
    g = t.group
    two = next(i for i, c in enumerate(g.classes) if c.element_order == 2)
    total = zero()
    for row in t.rows:
        v = row.function.values[two]
        total = total + v * v.conjugate()
    assert total == g.classes[two].centralizer_order == 2


def test_verify_flags_a_perturbed_entry():
    t = builtin_table("S3")
    g = t.group
    rows = [TableRow(r.name, r.degree, r.function) for r in t.rows]
    vals = list(rows[1].function.values)
    vals[1] = -vals[1]  # sign flip in one entry
    rows[1] = TableRow(rows[1].name, rows[1].degree, ClassFunction(g, vals))
    bad = CharacterTable(g, rows)
    report = verify_table(bad)
    assert not report.ok
    assert any("column orthogonality" in name for name, _ in report.failures())


def test_decompose_examples():
    t = builtin_table("S3")
    g = t.group
    assert integer_multiplicities(decompose(regular_character(g), t)) == [1, 1, 2]
    assert integer_multiplicities(decompose(t.rows[2].function, t)) == [0, 0, 1]
    # fixed-point character of the natural action: values 3, 1, 0
    perm = permutation_character(g)
    disp = [perm.values[c] for c in t.display_classes]
    assert disp == [cyc(3), cyc(1), cyc(0)]
    assert integer_multiplicities(decompose(perm, t)) == [1, 0, 1]


@given(st.lists(st.integers(min_value=-3, max_value=3), min_size=3, max_size=3))
@settings(max_examples=40, deadline=None)
def test_decompose_inverts_assembly(coeffs):
    t = builtin_table("S3")
    f = ClassFunction(t.group, [zero()] * 3)
    for m, row in zip(coeffs, t.rows):
        f = f + m * row.function
    mults = decompose(f, t)
    assert [v.as_fraction() for v in mults] == [Fraction(m) for m in coeffs]


def test_tensor_examples():
    s3 = builtin_table("S3")
    assert tensor_multiplicities(s3, 2, 2) == [1, 1, 1]
    s4 = builtin_table("S4")
    got = tensor_multiplicities(s4, s4.row_index("C2"), s4.row_index("C3+"))
    assert got == [0, 0, 0, 1, 1]
    a5 = builtin_table("A5")
    got = tensor_multiplicities(a5, a5.row_index("C5"), a5.row_index("C5"))
    assert got == [1, 1, 1, 2, 2]


def test_dual_character():
    s4 = builtin_table("S4")
    for row in s4.rows:  # all rows real-valued
        assert dual_character(row.function) == row.function
    a4 = builtin_table("A4")
    assert dual_character(a4.row_by_name("Ce").function) == a4.row_by_name("Ce2").function
    g = a4.group
    assert dual_character(trivial_character(g)) == trivial_character(g)
    # involution permuting the rows of a complete table
    names = set()
    for row in a4.rows:
        d = dual_character(row.function)
        assert dual_character(d) == row.function
        match = [r.name for r in a4.rows if r.function == d]
        assert len(match) == 1
        names.add(match[0])
    assert names == {r.name for r in a4.rows}


def test_restriction_values():
    s3 = builtin_table("S3")
    z2 = s3.group.subgroup([from_cycles(3, [(0, 1)])])
    res = restrict(z2, s3.row_by_name("C2").function)
    assert list(res.values) == [cyc(2), cyc(0)]
    assert restrict(z2, trivial_character(s3.group)) == trivial_character(z2.group)


def test_induction_dimension_and_vanishing():
    s3 = builtin_table("S3")
    z3 = s3.group.subgroup([from_cycles(3, [(0, 1, 2)])])
    z3t = abelian_dual_table(z3.group)
    ind = induce(z3, z3t.rows[1].function)
    assert ind.at_identity() == 2  # dim multiplies by the index
    two = next(i for i, c in enumerate(s3.group.classes) if c.element_order == 2)
    assert ind.values[two] == 0    # classes not meeting H vanish


def test_frobenius_reciprocity_random_pairs():
    s3 = builtin_table("S3")
    z3 = s3.group.subgroup([from_cycles(3, [(0, 1, 2)])])
    z3t = abelian_dual_table(z3.group)
    rng = random.Random(11)
    for _ in range(100):
        f = ClassFunction(z3.group, [zero()] * 3)
        for row in z3t.rows:
            f = f + rng.randint(-2, 2) * row.function
        chi = s3.rows[rng.randrange(3)].function
        assert inner_product(induce(z3, f), chi) == inner_product(f, restrict(z3, chi))


def test_induction_in_stages():
    # inducing Z2 -> S3 -> S4 agrees with inducing Z2 -> S4 directly
    s4t = builtin_table("S4")
    s4 = s4t.group
    s3sub = s4.subgroup([from_cycles(4, [(0, 1)]), from_cycles(4, [(0, 1, 2)])])
    z2_in_s3 = s3sub.group.subgroup([from_cycles(4, [(0, 1)])])
    z2_in_s4 = s4.subgroup([from_cycles(4, [(0, 1)])])
    z2t = abelian_dual_table(z2_in_s3.group)
    for k in range(2):
        f = z2t.rows[k].function
        staged = induce(s3sub, induce(z2_in_s3, f))
        # the same class function lives on z2_in_s4.group: same degree-4
        # permutations, same classes
        direct = induce(z2_in_s4, ClassFunction(z2_in_s4.group, f.values))
        assert staged.values == direct.values, k


def test_frobenius_schur_examples():
    q8 = builtin_table("Q8")
    assert frobenius_schur(q8.row_by_name("C2").function) == -1
    s4 = builtin_table("S4")
    assert all(frobenius_schur(r.function) == 1 for r in s4.rows)
    z3t = abelian_dual_table(cyclic_group(3))
    assert frobenius_schur(z3t.rows[1].function) == 0
    # cyclic groups: trivial and (for even order) the sign row are real,
    # everything else complex
    z4t = abelian_dual_table(cyclic_group(4))
    indicators = sorted(str(frobenius_schur(r.function)) for r in z4t.rows)
    assert indicators == ["0", "0", "1", "1"]
    with pytest.raises(ValueError):
        reducible = s4.rows[0].function + s4.rows[1].function
        frobenius_schur(reducible)


def test_is_irreducible_virtual():
    s3 = builtin_table("S3")
    assert is_irreducible_virtual(s3.rows[2].function)
    assert not is_irreducible_virtual(s3.rows[0].function + s3.rows[1].function)
    assert not is_irreducible_virtual(-1 * s3.rows[0].function)


def test_abelian_dual_tables():
    z4 = cyclic_group(4)
    t = abelian_dual_table(z4)
    assert len(t.rows) == 4
    assert verify_table(t).ok
    # chi_k(m) = zeta_4^(km) with the standard generator
    gen_idx = z4.index[z4.generators[0]]
    gen_class = z4.class_of[gen_idx]
    assert [r.function.values[gen_class] for r in t.rows] == \
        [zeta(4, k) for k in range(4)]
    klein = builtin_group("D2")
    t = abelian_dual_table(klein)
    assert verify_table(t).ok
    assert all(v in (cyc(1), cyc(-1)) for r in t.rows for v in r.function.values)
    assert verify_table(abelian_dual_table(cyclic_group(6))).ok
    with pytest.raises(ValueError):
        abelian_dual_table(builtin_group("S3"))


def test_semidirect_d4():
    table = semidirect_table(dihedral_semidirect(4))
    assert verify_table(table).ok
    assert sorted(r.degree for r in table.rows) == [1, 1, 1, 1, 2]
    assert sum(r.degree ** 2 for r in table.rows) == 8


def test_semidirect_heisenberg():
    table = semidirect_table(heisenberg_semidirect())
    assert table.group.order == 27
    assert verify_table(table).ok
    assert sorted(r.degree for r in table.rows) == [1] * 9 + [3, 3]


def test_semidirect_s3_match():
    table = semidirect_table(dihedral_semidirect(3))
    ref = builtin_table("S3")
    assert verify_table(table).ok

    def keyed(t):
        order = sorted(range(len(t.group.classes)),
                       key=lambda ci: (t.group.classes[ci].element_order,
                                       t.group.classes[ci].size))
        return sorted((tuple(r.function.values[c] for c in order) for r in t.rows),
                      key=lambda tup: [v.key() for v in tup])

    assert keyed(table) == keyed(ref)


def test_semidirect_count_identity():
    for n in (3, 4, 5, 6):
        table = semidirect_table(dihedral_semidirect(n))
        assert sum(r.degree ** 2 for r in table.rows) == 2 * n


def test_semidirect_frobenius_group_20():
    # Z_4 acting on Z_5 by an order-4 automorphism (multiplication by 2):
    # four linear characters and one of degree 4
    z4 = cyclic_group(4)
    z5 = cyclic_group(5)
    # element index of k in Z_5 is k (BFS order from the n-cycle)
    auto = tuple((2 * k) % 5 for k in range(5))
    sd = chartab.SemidirectProduct(z4, z5, [auto])
    table = semidirect_table(sd)
    assert table.group.order == 20
    assert verify_table(table).ok
    assert sorted(r.degree for r in table.rows) == [1, 1, 1, 1, 4]


def test_semidirect_proper_stabilizer():
    # Z_4 acting on Z_2 x Z_2 through its order-2 quotient (swap the two
    # factors): the swapped pair of characters has stabilizer 2Z_4, a
    # proper nontrivial subgroup, giving two rows of degree 2
    z4 = cyclic_group(4)
    klein = builtin_group("D2")
    sigma = (2, 3, 0, 1)  # exchanges the point pairs {0,1} and {2,3}
    swap = tuple(klein.index[tuple(sigma[p[sigma[i]]] for i in range(4))]
                 for p in klein.elements)
    sd = chartab.SemidirectProduct(z4, klein, [swap])
    table = semidirect_table(sd)
    assert table.group.order == 16
    assert verify_table(table).ok
    assert sorted(r.degree for r in table.rows) == [1] * 8 + [2, 2]


def test_semidirect_rejects_bad_action():
    z4 = cyclic_group(4)
    z5 = cyclic_group(5)
    with pytest.raises(ValueError):
        chartab.SemidirectProduct(z4, z5, [(0, 2, 1, 3, 4)])  # not multiplicative
    with pytest.raises(ValueError):
        chartab.SemidirectProduct(z4, builtin_group("S3"), [tuple(range(6))])


def test_builtin_table_unknown_name():
    with pytest.raises(ValueError):
        builtin_table("S7")


def test_render_golden_s3():
    expected = (
        "S3  Id  (12)  (123)\n"
        "#   1   3     2\n"
        "C+  1   1     1\n"
        "C-  1   -1    1\n"
        "C2  2   0     -1"
    )
    assert render_table(builtin_table("S3")) == expected


def test_table_json_roundtrip():
    t = builtin_table("A5")
    blob = json.dumps(table_to_json(t, group_name="A5"))
    back = table_from_json(json.loads(blob))
    for r1, r2 in zip(t.rows, back.rows):
        assert r1.name == r2.name and r1.degree == r2.degree
        assert r1.function.values == r2.function.values
    assert verify_table(back).ok
