#!/usr/bin/env python3
"""Enumerate the indecomposable representations of the small Dynkin
quivers and cross-check the census against the positive root systems."""

import time

from reptheory.quiverrep import Quiver, enumerate_indecomposables, hom_dim
from reptheory.rootsys import bilinear, cartan_matrix

QUIVERS = [
    ("A1", Quiver(1, [])),
    ("A2", Quiver(2, [(0, 1)])),
    ("A3 linear", Quiver(3, [(0, 1), (1, 2)])),
    ("A3 inward", Quiver(3, [(0, 1), (2, 1)])),
    ("D4 inward", Quiver(4, [(0, 1), (2, 1), (3, 1)])),
    ("D5", Quiver(5, [(0, 1), (1, 2), (4, 2), (2, 3)])),
    ("A5", Quiver(5, [(0, 1), (1, 2), (2, 3), (3, 4)])),
]


def main():
    for name, quiver in QUIVERS:
        t0 = time.time()
        objs = enumerate_indecomposables(quiver)
        a = cartan_matrix(quiver.underlying_graph())
        for root, rep in objs:
            assert hom_dim(rep, rep) == 1
            assert bilinear(a, root, root) == 2
        elapsed = time.time() - t0
        print(f"{name}: {len(objs)} indecomposables ({elapsed:.2f}s)")
        for root, rep in objs:
            print("   d = (" + ", ".join(str(c) for c in root) + ")")


if __name__ == "__main__":
    main()
