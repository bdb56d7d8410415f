import json
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reptheory.rootsys import (Graph, GraphError, affine_graph, bilinear,
                               cartan_matrix, classify, coxeter_element,
                               cycle_graph, dynkin_graph, enumerate_roots,
                               graph_from_json, graph_to_json, path_graph,
                               reflect, roots_by_box_search, weyl_count,
                               weyl_elements)


def test_paths_classify_as_a_n():
    for n in range(1, 9):
        c = classify(path_graph(n))
        assert c.kind == "dynkin"
        assert c.name == f"A_{n}"
        assert c.determinant == n + 1


def test_determinant_recursion_oracle():
    # det A_(A_n) satisfies d_n = 2 d_(n-1) - d_(n-2), d_0 = 1, d_1 = 2
    d = [1, 2]
    for n in range(2, 9):
        d.append(2 * d[-1] - d[-2])
    for n in range(1, 9):
        assert classify(path_graph(n)).determinant == d[n]


def test_d_and_e_classify():
    for n in range(4, 9):
        assert classify(dynkin_graph(f"D{n}")).name == f"D_{n}"
    assert classify(dynkin_graph("E6")).name == "E6"
    assert classify(dynkin_graph("E7")).name == "E7"
    assert classify(dynkin_graph("E8")).name == "E8"
    assert classify(dynkin_graph("E8")).determinant == 1


def test_cycles_and_star_are_affine():
    for n in range(3, 8):
        c = classify(cycle_graph(n))
        assert c.kind == "affine" and c.determinant == 0
    star = Graph.from_edges(5, [(4, 0), (4, 1), (4, 2), (4, 3)])
    c = classify(star)
    assert c.kind == "affine" and c.name == "affine (D~4)"


def test_forbidden_diagrams_are_affine():
    for name in ("A~1", "A~4", "D~4", "D~5", "D~7", "E~6", "E~7", "E~8"):
        c = classify(affine_graph(name))
        assert c.kind == "affine" and c.determinant == 0, name


def test_indefinite():
    g = Graph.from_edges(2, [(0, 1, 3)])
    assert classify(g).kind == "indefinite"


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(GraphError):
        classify(Graph.from_edges(3, [(0, 1)]))  # disconnected


@given(st.lists(st.integers(min_value=-5, max_value=5), min_size=4, max_size=4))
@settings(max_examples=60, deadline=None)
def test_form_takes_even_values(x):
    a = cartan_matrix(dynkin_graph("D4"))
    assert bilinear(a, tuple(x), tuple(x)) % 2 == 0


def test_positive_root_counts():
    for n in range(1, 9):
        a = cartan_matrix(dynkin_graph(f"A{n}"))
        assert len(enumerate_roots(a)[0]) == n * (n + 1) // 2
    for n in range(4, 9):
        a = cartan_matrix(dynkin_graph(f"D{n}"))
        assert len(enumerate_roots(a)[0]) == n * (n - 1)
    assert len(enumerate_roots(cartan_matrix(dynkin_graph("E6")))[0]) == 36
    assert len(enumerate_roots(cartan_matrix(dynkin_graph("E7")))[0]) == 63
    assert len(enumerate_roots(cartan_matrix(dynkin_graph("E8")))[0]) == 120


def test_roots_have_a_sign():
    for name in ("A3", "D4", "E6"):
        a = cartan_matrix(dynkin_graph(name))
        pos, neg = enumerate_roots(a)
        for v in pos:
            assert all(c >= 0 for c in v)
        for v in neg:
            assert all(c <= 0 for c in v)
        assert len(pos) == len(neg)


def test_roots_equal_box_search():
    for name in ("A2", "A3", "A4", "D4"):
        a = cartan_matrix(dynkin_graph(name))
        pos, neg = enumerate_roots(a)
        closure = set(pos) | set(neg)
        bound = max(abs(c) for v in closure for c in v)
        assert roots_by_box_search(a, bound + 1) == closure


def test_simple_reflections():
    a = cartan_matrix(dynkin_graph("A2"))
    assert reflect(a, 0, (1, 0)) == (-1, 0)
    assert reflect(a, 0, (0, 1)) == (1, 1)
    rng = random.Random(2)
    for name in ("A3", "D4"):
        a = cartan_matrix(dynkin_graph(name))
        n = len(a)
        for _ in range(30):
            u = tuple(rng.randint(-4, 4) for _ in range(n))
            v = tuple(rng.randint(-4, 4) for _ in range(n))
            i = rng.randrange(n)
            assert reflect(a, i, reflect(a, i, u)) == u
            assert bilinear(a, reflect(a, i, u), reflect(a, i, v)) == bilinear(a, u, v)


def test_coxeter_orders():
    for name, want in (("A2", 3), ("A3", 4), ("D4", 6)):
        a = cartan_matrix(dynkin_graph(name))
        c, order, d = coxeter_element(a)
        assert order == want
        assert d != 0


def test_coxeter_no_fixed_vector_all_ade():
    names = [f"A{n}" for n in range(1, 9)] + [f"D{n}" for n in range(4, 9)] + \
        ["E6", "E7", "E8"]
    for name in names:
        a = cartan_matrix(dynkin_graph(name))
        _, _, d = coxeter_element(a)
        assert d != 0, name


def test_coxeter_respects_labeling():
    a = cartan_matrix(dynkin_graph("A3"))
    c1, o1, _ = coxeter_element(a, labeling=[0, 1, 2])
    c2, o2, _ = coxeter_element(a, labeling=[2, 1, 0])
    assert o1 == o2 == 4  # conjugate elements share the order


def test_weyl_counts():
    for n in range(1, 5):
        assert weyl_count(cartan_matrix(path_graph(n))) == math.factorial(n + 1)
    assert weyl_count(cartan_matrix(dynkin_graph("D4"))) == 192
    assert weyl_count(cartan_matrix(dynkin_graph("D5"))) == 1920
    assert weyl_count(cartan_matrix(dynkin_graph("A5")), max_elements=100) is None


def test_weyl_elements_act_on_roots():
    a = cartan_matrix(dynkin_graph("A3"))
    elements = weyl_elements(a)
    assert len(elements) == 24
    pos, neg = enumerate_roots(a)
    roots = set(pos) | set(neg)
    alpha = (1, 0, 0)
    for w in elements:
        image = tuple(sum(w[i][j] * alpha[j] for j in range(3)) for i in range(3))
        assert image in roots


def test_weyl_e6():
    assert weyl_count(cartan_matrix(dynkin_graph("E6")), max_elements=60000) == 51840


def test_graph_serialization():
    g = dynkin_graph("D5")
    blob = json.dumps(graph_to_json(g))
    assert graph_from_json(json.loads(blob)).adjacency == g.adjacency
