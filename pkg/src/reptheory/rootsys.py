"""Graphs, Cartan matrices, ADE classification, roots, Weyl groups and
Coxeter elements.

Everything is integer arithmetic on tuples. Classification is decided by
exact principal minors (Sylvester), root sets by reflection closure of
the simple roots, Weyl groups by breadth-first closure of the simple
reflections as integer matrices.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import Matrix, det


class GraphError(ValueError):
    pass


class Graph:
    """Undirected multigraph without self-loops: a symmetric nonnegative
    edge-multiplicity matrix with zero diagonal."""

    __slots__ = ("n", "adjacency")

    def __init__(self, n, adjacency):
        adjacency = tuple(tuple(int(x) for x in row) for row in adjacency)
        assert len(adjacency) == n and all(len(r) == n for r in adjacency)
        for i in range(n):
            if adjacency[i][i]:
                raise GraphError("self-loops are not allowed")
            for j in range(n):
                if adjacency[i][j] != adjacency[j][i] or adjacency[i][j] < 0:
                    raise GraphError("adjacency matrix must be symmetric and nonnegative")
        self.n = n
        self.adjacency = adjacency

    @staticmethod
    def from_edges(n, edges):
        adj = [[0] * n for _ in range(n)]
        for e in edges:
            i, j = e[0], e[1]
            m = e[2] if len(e) > 2 else 1
            if i == j:
                raise GraphError("self-loops are not allowed")
            adj[i][j] += m
            adj[j][i] += m
        return Graph(n, adj)

    def edges(self):
        out = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.adjacency[i][j]:
                    out.append((i, j, self.adjacency[i][j]))
        return out

    def degree(self, i):
        return sum(self.adjacency[i])

    def is_connected(self):
        if self.n == 0:
            return True
        seen = {0}
        frontier = [0]
        while frontier:
            v = frontier.pop()
            for w in range(self.n):
                if self.adjacency[v][w] and w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return len(seen) == self.n


def cartan_matrix(graph):
    """2*Id minus the adjacency matrix, as an integer tuple matrix."""
    return tuple(tuple((2 if i == j else 0) - graph.adjacency[i][j]
                       for j in range(graph.n)) for i in range(graph.n))


def bilinear(a, x, y):
    """B(x, y) = x^T A y for the Cartan matrix A."""
    return sum(x[i] * sum(a[i][j] * y[j] for j in range(len(y))) for i in range(len(x)))


def reflect(a, i, v):
    """Simple reflection s_i(v) = v - B(v, alpha_i) alpha_i."""
    b = sum(a[i][j] * v[j] for j in range(len(v)))
    return tuple(v[j] - (b if j == i else 0) for j in range(len(v)))


def _principal_minor(a, subset):
    sub = [[Fraction(a[i][j]) for j in subset] for i in subset]
    return det(Matrix(len(subset), len(subset), sub))


class Classification:
    __slots__ = ("kind", "name", "determinant")

    def __init__(self, kind, name, determinant):
        self.kind = kind          # "dynkin" | "affine" | "indefinite"
        self.name = name          # e.g. "A_3", "E8", "affine", "affine (A~2)"
        self.determinant = determinant

    def __repr__(self):
        return f"Classification({self.kind}, {self.name}, det={self.determinant})"


def classify(graph):
    """Decide by exact minors whether the form 2*Id - R is positive
    definite (simply laced Dynkin: one of A_n, D_n, E6, E7, E8),
    positive semidefinite (affine) or indefinite."""
    if not graph.is_connected():
        raise GraphError("classification requires a connected graph")
    a = cartan_matrix(graph)
    n = graph.n
    full_det = _principal_minor(a, list(range(n)))
    leading_ok = all(_principal_minor(a, list(range(k + 1))) > 0 for k in range(n))
    if leading_ok:
        name = _match_dynkin(graph)
        return Classification("dynkin", name, full_det)
    # semidefinite iff every principal minor is >= 0
    for mask in range(1, 1 << n):
        subset = [i for i in range(n) if mask >> i & 1]
        if _principal_minor(a, subset) < 0:
            return Classification("indefinite", "indefinite", full_det)
    return Classification("affine", _match_affine(graph), full_det)


def _branch_lengths(graph, center):
    """Lengths of the simple paths leaving a vertex in a tree graph."""
    lengths = []
    for w in range(graph.n):
        if not graph.adjacency[center][w]:
            continue
        length = 1
        prev, cur = center, w
        while True:
            nxts = [u for u in range(graph.n) if graph.adjacency[cur][u] and u != prev]
            if len(nxts) != 1:
                break
            prev, cur = cur, nxts[0]
            length += 1
        lengths.append(length)
    return sorted(lengths)


def _is_simple_tree(graph):
    if any(m > 1 for _, _, m in graph.edges()):
        return False
    return sum(m for _, _, m in graph.edges()) == graph.n - 1


def _match_dynkin(graph):
    n = graph.n
    if not _is_simple_tree(graph):
        return "dynkin (unrecognized)"
    degrees = [graph.degree(i) for i in range(n)]
    if max(degrees, default=0) <= 2:
        return f"A_{n}"
    forks = [i for i in range(n) if degrees[i] == 3]
    if len(forks) == 1 and max(degrees) == 3:
        arms = _branch_lengths(graph, forks[0])
        if arms[:2] == [1, 1]:
            return f"D_{n}"
        if arms == [1, 2, 2]:
            return "E6"
        if arms == [1, 2, 3]:
            return "E7"
        if arms == [1, 2, 4]:
            return "E8"
    return "dynkin (unrecognized)"


def _match_affine(graph):
    n = graph.n
    degrees = [graph.degree(i) for i in range(n)]
    if n == 2 and graph.adjacency[0][1] == 2:
        return "affine (A~1)"
    if all(d == 2 for d in degrees) and _is_cycle(graph):
        return f"affine (A~{n - 1})"
    if _is_simple_tree(graph):
        forks = sorted(i for i in range(n) if degrees[i] >= 3)
        if len(forks) == 1:
            arms = _branch_lengths(graph, forks[0])
            if arms == [1, 1, 1, 1]:
                return "affine (D~4)"
            if arms == [2, 2, 2]:
                return "affine (E~6)"
            if arms == [1, 3, 3]:
                return "affine (E~7)"
            if arms == [1, 2, 5]:
                return "affine (E~8)"
        if len(forks) == 2 and all(degrees[f] == 3 for f in forks):
            if all(sorted(_branch_lengths(graph, f))[:2] == [1, 1] for f in forks):
                return f"affine (D~{n - 1})"
    return "affine (unnamed)"


def _is_cycle(graph):
    return (graph.n >= 3 and all(m == 1 for _, _, m in graph.edges())
            and len(graph.edges()) == graph.n)


# -- named diagrams -------------------------------------------------------

def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def dynkin_graph(name):
    """ADE diagrams by name ("A5", "D4", "E8"). D_n carries the fork at
    the last two vertices; E_n has the short arm attached to vertex 2 of
    the path (so vertex order matches the usual pictures)."""
    key = name.strip().upper().replace("_", "")
    family, num = key[0], key[1:]
    if not num.isdigit():
        raise GraphError(f"cannot parse diagram name {name!r}")
    n = int(num)
    if family == "A" and n >= 1:
        return path_graph(n)
    if family == "D" and n >= 3:
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
        return Graph.from_edges(n, edges)
    if family == "E" and n in (6, 7, 8):
        edges = [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]
        return Graph.from_edges(n, edges)
    raise GraphError(f"not an ADE diagram: {name!r}")


def affine_graph(name):
    """The affine (positive semidefinite) diagrams: A~n (cycle), D~n,
    E~6, E~7, E~8 and the doubled edge A~1."""
    key = name.strip().upper().replace("~", "").replace("_", "")
    family, num = key[0], key[1:]
    n = int(num)
    if family == "A":
        if n == 1:
            return Graph.from_edges(2, [(0, 1, 2)])
        return cycle_graph(n + 1)
    if family == "D" and n >= 4:
        # central path 2..(n-2), two leaves attached at each end
        edges = [(0, 2), (1, 2), (n - 1, n - 2), (n, n - 2)]
        edges += [(i, i + 1) for i in range(2, n - 2)]
        return Graph.from_edges(n + 1, edges)
    if family == "E" and n in (6, 7, 8):
        base = dynkin_graph(f"E{n}")
        edges = base.edges()
        if n == 6:
            edges.append((base.n - 1, base.n))      # extend the short arm
        elif n == 7:
            edges.append((0, base.n))               # extend a long arm to length 3+1
        else:
            edges.append((6, base.n))               # E8: extend the long arm
        return Graph.from_edges(base.n + 1, edges)
    raise GraphError(f"not an affine diagram name: {name!r}")


# -- roots ----------------------------------------------------------------

def enumerate_roots(a):
    """All roots (B(x,x) = 2) of a positive definite simply laced Cartan
    matrix, as the reflection closure of the simple roots. Returns
    (positive, negative) lists, each sorted by (height, coordinates)."""
    n = len(a)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                w = reflect(a, i, v)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    positive = sorted((v for v in seen if all(c >= 0 for c in v)),
                      key=lambda v: (sum(v), v))
    negative = [tuple(-c for c in v) for v in positive]
    if 2 * len(positive) != len(seen):
        raise GraphError("root set is not symmetric: matrix is not of Dynkin type")
    for v in seen:
        if bilinear(a, v, v) != 2:
            raise AssertionError("reflection closure left the root sphere")
    return positive, negative


def roots_by_box_search(a, bound):
    """Oracle enumeration: all integer vectors with |x_i| <= bound and
    B(x,x) = 2 (exponential in the rank; testing aid)."""
    n = len(a)
    out = []
    vec = [0] * n

    def rec(i):
        if i == n:
            v = tuple(vec)
            if any(v) and bilinear(a, v, v) == 2:
                out.append(v)
            return
        for c in range(-bound, bound + 1):
            vec[i] = c
            rec(i + 1)

    rec(0)
    return set(out)


# -- Weyl groups and Coxeter elements --------------------------------------

def _reflection_matrix(a, i):
    n = len(a)
    return tuple(tuple((1 if r == c else 0) - (a[i][c] if r == i else 0)
                       for c in range(n)) for r in range(n))


def _mat_mul(x, y):
    n = len(x)
    yt = list(zip(*y))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in yt) for row in x)


def _mat_identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def coxeter_element(a, labeling=None):
    """The product s_1 s_2 ... s_r in the simple root basis, its
    multiplicative order, and det(c - Id) (nonzero on Dynkin types: 1 is
    never an eigenvalue of a Coxeter element)."""
    n = len(a)
    order_of_vertices = list(labeling) if labeling is not None else list(range(n))
    c = _mat_identity(n)
    for i in order_of_vertices:
        c = _mat_mul(c, _reflection_matrix(a, i))
    ident = _mat_identity(n)
    power = c
    order = 1
    while power != ident:
        power = _mat_mul(power, c)
        order += 1
        if order > 10000:
            raise AssertionError("Coxeter element order did not close")
    cmi = Matrix(n, n, [[Fraction(c[i][j] - (1 if i == j else 0)) for j in range(n)]
                        for i in range(n)])
    return c, order, det(cmi)


def weyl_elements(a, max_elements=300000):
    """All elements of the group generated by the simple reflections, as
    integer matrices in the simple-root basis (BFS closure); None if the
    bound is hit (reported, not fatal: the count is then unavailable)."""
    n = len(a)
    gens = [_reflection_matrix(a, i) for i in range(n)]
    ident = _mat_identity(n)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                w = _mat_mul(m, g)
                if w not in seen:
                    seen.add(w)
                    if len(seen) > max_elements:
                        return None
                    nxt.append(w)
        frontier = nxt
    return seen


def weyl_count(a, max_elements=300000):
    """Order of the Weyl group, or None if the bound is hit."""
    elements = weyl_elements(a, max_elements)
    return None if elements is None else len(elements)


# -- serialization ----------------------------------------------------------

def graph_to_json(graph):
    return {"vertices": graph.n, "edges": [list(e) for e in graph.edges()]}


def graph_from_json(obj):
    return Graph.from_edges(int(obj["vertices"]), [tuple(e) for e in obj["edges"]])
