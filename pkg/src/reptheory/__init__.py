"""Exact computational representation theory: character tables of finite
groups (including S_n and GL_2(F_q)) and quiver representations over
Dynkin diagrams, all in exact cyclotomic/rational arithmetic."""

from .exact import Cyclotomic, Rational, cyc, zeta
from .linalg import Matrix
from .permgroup import PermGroup, builtin_group
from .chartab import (CharacterTable, ClassFunction, builtin_table,
                      abelian_dual_table, semidirect_table, verify_table)
from .symgrp import frobenius_character, hook_dim, kostka, partitions_of, sn_table
from .rootsys import cartan_matrix, classify, coxeter_element, dynkin_graph, enumerate_roots
from .quiverrep import Quiver, QuiverRep, decompose, enumerate_indecomposables
from .gl2fq import gl2_classes, gl2_table, gl2_verify

__version__ = "0.1.0"

__all__ = [
    "Cyclotomic", "Rational", "cyc", "zeta", "Matrix", "PermGroup",
    "builtin_group", "CharacterTable", "ClassFunction", "builtin_table",
    "abelian_dual_table", "semidirect_table", "verify_table",
    "frobenius_character", "hook_dim", "kostka", "partitions_of", "sn_table",
    "cartan_matrix", "classify", "coxeter_element", "dynkin_graph",
    "enumerate_roots", "Quiver", "QuiverRep", "decompose",
    "enumerate_indecomposables", "gl2_classes", "gl2_table", "gl2_verify",
    "__version__",
]
