import pytest

from reptheory.exact import zeta, zero
from reptheory.gl2fq import (FqData, complementary_virtual_values,
                             _complementary_parameters, gl2_classes, gl2_table,
                             gl2_table_to_json, gl2_verify, is_odd_prime,
                             smallest_nonresidue, smallest_primitive_root)


def test_q_validation():
    for bad in (2, 4, 9, 15, 37):
        with pytest.raises(ValueError):
            gl2_classes(bad)
    assert is_odd_prime(3) and is_odd_prime(31)
    assert not is_odd_prime(2) and not is_odd_prime(1)


def test_field_data():
    d = FqData(3)
    assert d.eps == 2
    assert d.g == 2
    assert smallest_nonresidue(7) == 3
    assert smallest_primitive_root(7) == 3
    d7 = FqData(7)
    # the extension generator really has full order
    assert len(d7.dlog_q2) == 48
    assert d7.norm((1, 0)) == 1


def test_class_census():
    for q in (3, 5, 7):
        classes = gl2_classes(q)
        assert len(classes) == q * q - 1
        order = (q * q - 1) * (q * q - q)
        assert sum(c.size for c in classes) == order
        by_family = {}
        for c in classes:
            by_family.setdefault(c.family, []).append(c)
        assert len(by_family["scalar"]) == q - 1
        assert len(by_family["parabolic"]) == q - 1
        assert len(by_family["hyperbolic"]) == (q - 1) * (q - 2) // 2
        assert len(by_family["elliptic"]) == q * (q - 1) // 2
        assert all(c.size == 1 for c in by_family["scalar"])
        assert all(c.size == q * q - 1 for c in by_family["parabolic"])
        assert all(c.size == q * q + q for c in by_family["hyperbolic"])
        assert all(c.size == q * q - q for c in by_family["elliptic"])


def test_degree_multiset_q3():
    table = gl2_table(3)
    assert sorted(r.degree for r in table.rows) == [1, 1, 2, 2, 2, 3, 3, 4]
    assert sum(r.degree ** 2 for r in table.rows) == 48


def test_tables_verify():
    for q in (3, 5):
        table = gl2_table(q)
        report = gl2_verify(table)
        assert report.ok, (q, report.failures()[:3])


def test_principal_series_hyperbolic_value():
    q = 5
    table = gl2_table(q)
    d = table.data
    row = next(r for r in table.rows if r.name == "V[1,2]")
    for ci, cl in enumerate(table.classes):
        if cl.family == "hyperbolic":
            x, y = cl.params
            want = (zeta(q - 1, d.dlog_q[x] + 2 * d.dlog_q[y])
                    + zeta(q - 1, d.dlog_q[y] + 2 * d.dlog_q[x]))
            assert row.values[ci] == want


def test_complementary_parameter_census():
    for q in (3, 5, 7):
        params = _complementary_parameters(q)
        assert len(params) == q * (q - 1) // 2
        n = q * q - 1
        for t in params:
            assert t % (q + 1) != 0
            assert t <= (t * q) % n


def test_complementary_virtual_characters():
    q = 3
    table = gl2_table(q)
    for t in _complementary_parameters(q):
        vals = complementary_virtual_values(q, t, table.data, table.classes)
        assert table.inner_product(vals, vals) == 1
        assert vals[0] == q - 1
        row = next(r for r in table.rows if r.name == f"X[{t}]")
        assert tuple(vals) == row.values


def test_frobenius_twist_gives_identical_rows():
    # nu and nu^q induce the same complementary-series character
    for q in (3, 5):
        table = gl2_table(q)
        n = q * q - 1
        for t in _complementary_parameters(q):
            partner = (t * q) % n
            vals_t = complementary_virtual_values(q, t, table.data, table.classes)
            vals_tq = complementary_virtual_values(q, partner, table.data, table.classes)
            assert vals_t == vals_tq, (q, t)


def test_one_dim_restriction_to_scalars():
    q = 5
    table = gl2_table(q)
    d = table.data
    for k in range(q - 1):
        row = next(r for r in table.rows if r.name == f"xi[{k}]")
        for ci, cl in enumerate(table.classes):
            if cl.family == "scalar":
                x = cl.params[0]
                assert row.values[ci] == zeta(q - 1, k * d.dlog_q[x * x % q])


def test_w_series_values():
    # the degree-q row values on the four families: q mu(x^2), 0, mu(xy),
    # -mu(norm)
    q = 3
    table = gl2_table(q)
    d = table.data
    row = next(r for r in table.rows if r.name == "W[1]")
    for ci, cl in enumerate(table.classes):
        v = row.values[ci]
        if cl.family == "scalar":
            x = cl.params[0]
            assert v == q * zeta(q - 1, d.dlog_q[x * x % q])
        elif cl.family == "parabolic":
            assert v == zero()
        elif cl.family == "hyperbolic":
            x, y = cl.params
            assert v == zeta(q - 1, d.dlog_q[x * y % q])
        else:
            assert v == -zeta(q - 1, d.dlog_q[d.norm(cl.params)])


def test_json_export():
    import json
    table = gl2_table(3)
    blob = json.loads(json.dumps(gl2_table_to_json(table)))
    assert blob["q"] == 3
    assert len(blob["classes"]) == 8 and len(blob["rows"]) == 8
    assert blob["rows"][0]["degree"] == 1
