"""Finite groups as permutation groups, with full class data.

Groups in scope are small (largest routine case is S_7), so the whole
element set is enumerated breadth-first and conjugacy classes are
computed as conjugation orbits; no stabilizer-chain machinery.

A permutation on m points is a plain tuple of 0-based images.
"""

from __future__ import annotations

from math import gcd


class EnumerationBound(ValueError):
    pass


# -- permutation helpers -----------------------------------------------

def p_identity(degree):
    return tuple(range(degree))


def p_mul(p, q):
    """Composition: apply q first, then p."""
    return tuple(p[x] for x in q)


def p_inv(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def p_order(p):
    result = 1
    for c in cycle_lengths(p):
        result = result * c // gcd(result, c)
    return result


def cycles(p):
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if not seen[i]:
            cyc = [i]
            seen[i] = True
            j = p[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = p[j]
            out.append(tuple(cyc))
    return out


def cycle_lengths(p):
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def cycle_notation(p, one_based=True):
    shift = 1 if one_based else 0
    parts = []
    for c in cycles(p):
        if len(c) > 1:
            m = min(c)
            k = c.index(m)
            rotated = c[k:] + c[:k]
            parts.append("(" + "".join(str(x + shift) for x in rotated) + ")")
    return "".join(parts) if parts else "Id"


def from_cycles(degree, cycle_list):
    images = list(range(degree))
    for c in cycle_list:
        for a, b in zip(c, c[1:] + (c[0],) if isinstance(c, tuple) else c[1:] + [c[0]]):
            images[a] = b
    return tuple(images)


def is_bijection(p):
    return sorted(p) == list(range(len(p)))


# -- groups ------------------------------------------------------------

class ConjugacyClass:
    __slots__ = ("representative", "size", "members", "centralizer_order", "element_order")

    def __init__(self, representative, members, group_order):
        self.representative = representative
        self.members = tuple(members)
        self.size = len(members)
        self.centralizer_order = group_order // self.size
        self.element_order = p_order(representative)

    def __repr__(self):
        return f"ConjugacyClass({cycle_notation(self.representative)}, size={self.size})"


class PermGroup:
    """A fully enumerated permutation group.

    Element 0 is the identity; elements follow BFS order from the
    generators. Classes are sorted by (element order, size, lexicographic
    representative), so the identity class is always class 0.
    """

    def __init__(self, degree, generators, bound=200000):
        self.degree = degree
        gens = []
        for g in generators:
            g = tuple(g)
            if not is_bijection(g) or len(g) != degree:
                raise ValueError(f"not a permutation of 0..{degree - 1}: {g}")
            if g != p_identity(degree) and g not in gens:
                gens.append(g)
        self.generators = tuple(gens)
        ident = p_identity(degree)
        elements = [ident]
        index = {ident: 0}
        parent = [None]  # (parent element index, generator index)
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                xi = index[x]
                for gi, g in enumerate(self.generators):
                    y = p_mul(x, g)
                    if y not in index:
                        index[y] = len(elements)
                        elements.append(y)
                        parent.append((xi, gi))
                        nxt.append(y)
                        if len(elements) > bound:
                            raise EnumerationBound(
                                f"group enumeration exceeded bound {bound}")
            frontier = nxt
        self.elements = tuple(elements)
        self.index = index
        self._parent = parent
        self.inverse_index = tuple(index[p_inv(x)] for x in elements)
        self._build_classes()
        exp = 1
        for cl in self.classes:
            o = cl.element_order
            exp = exp * o // gcd(exp, o)
        self.exponent = exp

    def _build_classes(self):
        n = len(self.elements)
        assigned = [-1] * n
        raw_classes = []
        for start in range(n):
            if assigned[start] != -1:
                continue
            orbit = [start]
            assigned[start] = len(raw_classes)
            queue = [self.elements[start]]
            while queue:
                x = queue.pop()
                for g in self.generators:
                    y = p_mul(p_mul(g, x), p_inv(g))
                    yi = self.index[y]
                    if assigned[yi] == -1:
                        assigned[yi] = len(raw_classes)
                        orbit.append(yi)
                        queue.append(self.elements[yi])
            raw_classes.append(sorted(orbit))
        classes = []
        for members in raw_classes:
            rep = min(self.elements[i] for i in members)
            classes.append(ConjugacyClass(rep, members, n))
        classes.sort(key=lambda c: (c.element_order, c.size, c.representative))
        self.classes = tuple(classes)
        self.class_of = [0] * n
        for ci, cl in enumerate(self.classes):
            for ei in cl.members:
                self.class_of[ei] = ci

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def is_abelian(self):
        return all(c.size == 1 for c in self.classes)

    def mul(self, i, j):
        return self.index[p_mul(self.elements[i], self.elements[j])]

    def inv(self, i):
        return self.inverse_index[i]

    def element_class(self, i):
        return self.class_of[i]

    def power_class_map(self, k):
        """For each class, the index of the class containing rep^k."""
        out = []
        for cl in self.classes:
            rep = cl.representative
            y = p_identity(self.degree)
            e = k % cl.element_order
            for _ in range(e):
                y = p_mul(y, rep)
            out.append(self.class_of[self.index[y]])
        return out

    def extend_hom(self, gen_images, mul, one):
        """Extend a map on the generators to the whole group along the BFS
        tree; the caller supplies the target multiplication. Returns the
        image list indexed by element index (not verified to be a
        homomorphism)."""
        assert len(gen_images) == len(self.generators)
        images = [None] * len(self.elements)
        images[0] = one
        for i in range(1, len(self.elements)):
            pi, gi = self._parent[i]
            images[i] = mul(images[pi], gen_images[gi])
        return images

    def subgroup(self, h_gens):
        return SubgroupView(self, h_gens)

    def involution_count(self):
        """Number of elements with g^2 = identity (identity included)."""
        return sum(cl.size for cl in self.classes if cl.element_order <= 2)

    def class_label(self, ci):
        return cycle_notation(self.classes[ci].representative)


class SubgroupView:
    """A subgroup H of G with the embedding data needed for induction and
    restriction: H's own class structure, each H-element's index in G, and
    the map from H-classes to G-classes."""

    def __init__(self, g, h_gens):
        self.supergroup = g
        for gen in h_gens:
            if tuple(gen) not in g.index:
                raise ValueError(f"generator {gen} is not an element of the ambient group")
        self.group = PermGroup(g.degree, h_gens)
        if g.order % self.group.order:
            raise AssertionError("subgroup order does not divide group order")
        self.index_in_supergroup = g.order // self.group.order
        self.g_index_of = tuple(g.index[x] for x in self.group.elements)
        self.g_member_class = {}
        for hi, x in enumerate(self.group.elements):
            self.g_member_class[g.index[x]] = self.group.class_of[hi]
        self.class_to_gclass = tuple(
            g.class_of[g.index[cl.representative]] for cl in self.group.classes)


# -- named groups -------------------------------------------------------

def symmetric_group(n):
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return PermGroup(1, [])
    gens = [from_cycles(n, [(0, 1)]), tuple(list(range(1, n)) + [0])]
    return PermGroup(n, gens)


def alternating_group(n):
    if n < 3:
        return PermGroup(max(n, 1), [])
    three = from_cycles(n, [(0, 1, 2)])
    if n == 3:
        return PermGroup(3, [three])
    if n % 2:
        rot = tuple(list(range(1, n)) + [0])
    else:
        rot = tuple([0] + list(range(2, n)) + [1])
    return PermGroup(n, [three, rot])


def cyclic_group(n):
    if n == 1:
        return PermGroup(1, [])
    return PermGroup(n, [tuple(list(range(1, n)) + [0])])


def dihedral_group(n):
    """Symmetries of the regular n-gon, order 2n (n >= 3); D_2 is the
    Klein four-group, D_1 is Z_2."""
    if n == 1:
        return PermGroup(2, [(1, 0)])
    if n == 2:
        return PermGroup(4, [(1, 0, 2, 3), (0, 1, 3, 2)])
    rot = tuple(list(range(1, n)) + [0])
    ref = tuple((-i) % n for i in range(n))
    return PermGroup(n, [rot, ref])


_Q8_NAMES = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
_Q8_MUL = None


def _q8_table():
    global _Q8_MUL
    if _Q8_MUL is None:
        # units 1,-1,i,-i,j,-j,k,-k encoded as (sign, axis 0..3)
        def enc(s, a):
            return a * 2 + (0 if s > 0 else 1)

        def dec(e):
            return (1 if e % 2 == 0 else -1), e // 2

        def mul(e1, e2):
            s1, a1 = dec(e1)
            s2, a2 = dec(e2)
            table = {  # quaternion axis products: (axis, axis) -> (sign, axis)
                (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
                (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
                (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
                (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
            }
            s, a = table[(a1, a2)]
            return enc(s1 * s2 * s, a)

        _Q8_MUL = [[mul(i, j) for j in range(8)] for i in range(8)]
    return _Q8_MUL


def quaternion_group():
    """Q_8 realized by its left regular action on the 8 units
    1, -1, i, -i, j, -j, k, -k (in that point order)."""
    table = _q8_table()
    gen_i = tuple(table[2][x] for x in range(8))
    gen_j = tuple(table[4][x] for x in range(8))
    return PermGroup(8, [gen_i, gen_j])


def q8_point_name(point):
    return _Q8_NAMES[point]


def builtin_group(name):
    """Resolve a named group: S2..S8, A3..A7, Q8, Z_n, D_n."""
    name = name.strip()
    if name.upper() == "Q8":
        return quaternion_group()
    head, tail = name[:1].upper(), name[1:].lstrip("_")
    if head in ("S", "A", "Z", "D") and tail.isdigit():
        n = int(tail)
        if head == "S":
            if n > 8:
                raise ValueError("symmetric groups only up to S8 here")
            return symmetric_group(n)
        if head == "A":
            if n > 7:
                raise ValueError("alternating groups only up to A7 here")
            return alternating_group(n)
        if head == "Z":
            return cyclic_group(n)
        if head == "D":
            return dihedral_group(n)
    raise ValueError(f"unknown group name: {name}")


def group_to_json(g):
    return {"degree": g.degree, "generators": [list(p) for p in g.generators]}


def group_from_json(obj):
    if isinstance(obj, str):
        return builtin_group(obj)
    return PermGroup(int(obj["degree"]), [tuple(p) for p in obj["generators"]])
