"""Root systems, Weyl data and the type IV parity classifier."""

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from oracles import weyl_order
from symorient.classification import Reason, Verdict
from symorient.errors import InvalidType
from symorient.rootsys import (
    build_root_system,
    cartan_matrix,
    classify_type4,
    diagram_automorphisms,
    permutation_sign,
    simple_types,
)

ALGEBRA_DIM = {
    "A": lambda n: n * (n + 2),
    "B": lambda n: n * (2 * n + 1),
    "C": lambda n: n * (2 * n + 1),
    "D": lambda n: n * (2 * n - 1),
    "G2": lambda n: 14,
    "F4": lambda n: 52,
    "E6": lambda n: 78,
    "E7": lambda n: 133,
    "E8": lambda n: 248,
}
CARTAN_DET = {"A": lambda n: n + 1, "B": lambda n: 2, "C": lambda n: 2, "D": lambda n: 4,
              "G2": lambda n: 1, "F4": lambda n: 1, "E6": lambda n: 3, "E7": lambda n: 2, "E8": lambda n: 1}


def _outer_order(label, rank):
    if label == "A" and rank >= 2:
        return 2
    if label == "D":
        return 6 if rank == 4 else 2
    return 2 if label == "E6" else 1


TYPES = simple_types(8)


@pytest.mark.parametrize("label,rank", TYPES)
def test_root_system_invariants(label, rank):
    rs = build_root_system(label, rank)
    assert rs.dimension == ALGEBRA_DIM[label](rank)
    assert rs.weyl_order == weyl_order(label, rank)
    assert len(rs.positive_roots) == sum(d - 1 for d in rs.invariant_degrees)
    assert sympy.Matrix(cartan_matrix(label, rank)).det() == CARTAN_DET[label](rank)
    assert len(diagram_automorphisms(rs)) == _outer_order(label, rank)


def test_simple_types_are_distinct():
    assert len(TYPES) == len(set(TYPES))
    # ranks 1..8: A 8, B 7, C 6, D 5, plus G2 F4 E6 E7 E8
    assert len(TYPES) == 8 + 7 + 6 + 5 + 5


def test_invalid_types():
    with pytest.raises(InvalidType):
        build_root_system("D", 2)
    with pytest.raises(InvalidType):
        build_root_system("Q", 2)


@given(st.permutations(range(1, 7)))
def test_permutation_sign_by_inversions(perm):
    inv = sum(1 for i in range(6) for j in range(i + 1, 6) if perm[i] > perm[j])
    assert permutation_sign(tuple(perm)) == (-1) ** inv


def _theorem(label, rank):
    """dim k odd, or k = su(n) with n = 0,3 mod 4, or k = so(2n) with n >= 4."""
    if ALGEBRA_DIM[label](rank) % 2:
        return Verdict.OR
    if label == "A" and (rank + 1) % 4 in (0, 3):
        return Verdict.OR
    if label == "D" and rank >= 4:
        return Verdict.OR
    return Verdict.OP


@pytest.mark.parametrize("label,rank", TYPES)
def test_type4_matches_theorem(label, rank):
    c = classify_type4(label, rank)
    assert c.verdict is _theorem(label, rank)


def test_type4_justifications():
    assert classify_type4("A", 4).verdict is Verdict.OP  # su(5)
    assert classify_type4("A", 1).justification.reason is Reason.ODD_DIMENSION
    assert classify_type4("D", 4).justification.reason is Reason.DIAGRAM_PARITY_ODD
    assert classify_type4("A", 2).justification.reason is Reason.DIAGRAM_PARITY_ODD


def test_d3_is_a3():
    d3, a3 = build_root_system("D", 3), build_root_system("A", 3)
    assert (d3.dimension, d3.weyl_order) == (a3.dimension, a3.weyl_order)
    assert classify_type4("D", 3).verdict is classify_type4("A", 3).verdict is Verdict.OR
