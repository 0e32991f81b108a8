"""Cohomology rings: Hirsch series, presentations, integration."""

from fractions import Fraction
from math import prod

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from symorient.cohomology import (
    SUPPORTED,
    euler_characteristic,
    euler_class,
    format_poincare,
    hirsch_poincare,
    integrate,
    presentation,
)
from symorient.errors import DegreeAboveTop, InvalidParameters, NotEqualRank, UnsupportedSpace
from symorient.spaces import _dimension_unchecked
from symorient.spaces import AIII, BDI, CI, CII, DIII, EIII, EVII, FII, G2SO4, SpaceId


def _poly_coeffs(expr, t):
    p = sympy.Poly(sympy.expand(expr), t)
    return tuple(int(c) for c in reversed(p.all_coeffs()))


def _gauss_binomial(n, k, step):
    """Gaussian binomial [n, k] in t^step, via sympy."""
    t = sympy.Symbol("t")
    q = t**step
    num = prod(1 - q ** (n - i) for i in range(k))
    den = prod(1 - q ** (i + 1) for i in range(k))
    return _poly_coeffs(sympy.cancel(num / den), t)


def _product_series(exponents):
    t = sympy.Symbol("t")
    return _poly_coeffs(prod((1 + t**e) for e in exponents), t)


# ----------------------------------------------------------------------------
# Hirsch series against classical closed forms


@pytest.mark.parametrize("p,q", [(p, q) for p in range(1, 7) for q in range(1, 7)])
def test_hirsch_grassmannians(p, q):
    assert hirsch_poincare(AIII(p, q)) == _gauss_binomial(p + q, p, 2)
    assert hirsch_poincare(CII(p, q)) == _gauss_binomial(p + q, p, 4)


@pytest.mark.parametrize("n", range(2, 9))
def test_hirsch_diii_ci(n):
    assert hirsch_poincare(DIII(n)) == _product_series([2 * k for k in range(1, n)])
    assert hirsch_poincare(CI(n)) == _product_series([2 * k for k in range(1, n + 1)])


def test_hirsch_exceptional():
    assert hirsch_poincare(G2SO4) == (1, 0, 0, 0, 1, 0, 0, 0, 1)
    assert hirsch_poincare(FII) == tuple(1 if k in (0, 8, 16) else 0 for k in range(17))
    assert format_poincare(hirsch_poincare(G2SO4)) == "1+t^4+t^8"
    assert sum(hirsch_poincare(EIII)) == 27 and len(hirsch_poincare(EIII)) == 33
    assert sum(hirsch_poincare(EVII)) == 56 and len(hirsch_poincare(EVII)) == 55


def _supported_small():
    out = [G2SO4, FII]
    for p in range(1, 7):
        for q in range(1, 7):
            out += [AIII(p, q), CII(p, q)]
            if (p % 2 == 0 or q % 2 == 0) and p + q >= 3:
                out.append(BDI(p, q))
        if p >= 2:
            out.append(DIII(p))
        out.append(CI(p))
    return out


@pytest.mark.parametrize("space", _supported_small(), ids=str)
def test_poincare_duality_and_betti_sum(space):
    b = hirsch_poincare(space)
    assert b == b[::-1]
    assert all(x >= 0 for x in b)
    assert all(x == 0 for x in b[1::2])  # equal rank: only even cohomology
    assert sum(b) == euler_characteristic(space) == oracles.weyl_ratio(space)
    assert len(b) - 1 == _dimension_unchecked(space.family, space.params)


def test_unequal_rank():
    assert euler_characteristic(SpaceId("AI", (5,))) == 0
    assert euler_characteristic(BDI(3, 5)) == 0
    with pytest.raises(NotEqualRank):
        hirsch_poincare(SpaceId("AII", (3,)))
    with pytest.raises(NotEqualRank):
        presentation(BDI(3, 3))
    with pytest.raises(UnsupportedSpace):
        presentation(SpaceId("TypeIV", ("A", 2)))


def test_stretch_families_unsupported():
    for s in (EIII, EVII):
        with pytest.raises(UnsupportedSpace):
            presentation(s)
    assert "EIII" not in SUPPORTED


def test_structural_ranges():
    with pytest.raises(InvalidParameters):
        hirsch_poincare(DIII(1))
    with pytest.raises(InvalidParameters):
        hirsch_poincare(AIII(0, 3))


# ----------------------------------------------------------------------------
# presentations


PRESENTED = [
    AIII(1, 1), AIII(2, 2), AIII(2, 3), AIII(3, 3), AIII(1, 5), CII(1, 1), CII(1, 2), CII(2, 2), CII(2, 3),
    BDI(2, 3), BDI(2, 4), BDI(4, 2), BDI(3, 4), BDI(4, 3), BDI(4, 4), BDI(2, 5), BDI(1, 4), BDI(5, 2), BDI(2, 6),
    BDI(4, 5), DIII(2), DIII(3), DIII(4), DIII(5), DIII(6), CI(1), CI(2), CI(3), CI(4), G2SO4, FII,
]


@pytest.mark.parametrize("space", PRESENTED, ids=str)
def test_presentation_hilbert_and_euler(space):
    P = presentation(space)
    b = hirsch_poincare(space)
    assert [P.betti().get(k, 0) for k in range(len(b))] == list(b)
    assert integrate(P, euler_class(P)) == P.euler_characteristic == sum(b)
    assert P.quotient.top_degree == P.top_degree == len(b) - 1


@pytest.mark.parametrize(
    "space",
    [AIII(2, 2), AIII(1, 4), AIII(2, 4), CII(1, 2), CII(2, 2), BDI(2, 4), BDI(4, 4), BDI(2, 6), BDI(3, 4),
     BDI(4, 5), DIII(4), DIII(5), CI(3), CI(4), G2SO4, FII],
    ids=str,
)
def test_pontrjagin_numbers_by_localisation(space):
    from symorient.charclass import pontrjagin_numbers

    for part, value in pontrjagin_numbers(space).items():
        assert value == oracles.pontrjagin_number(space, part), part


@pytest.mark.parametrize("p,q", [(p, q) for p in range(1, 7) for q in range(1, 7) if p + q <= 7])
def test_sigma1_power_counts_tableaux(p, q):
    P = presentation(AIII(p, q))
    assert integrate(P, P.gen("s1") ** (p * q)) == oracles.rectangle_tableaux(p, q)


@pytest.mark.parametrize("space", [AIII(2, 3), BDI(2, 4), CII(1, 3), DIII(4), CI(3)], ids=str)
def test_poincare_pairing_nondegenerate(space):
    P = presentation(space)
    Q = P.quotient
    for k, mons in Q.basis_by_degree.items():
        dual = Q.basis_by_degree[P.top_degree - k]
        gram = sympy.Matrix(
            [[integrate(P, Q(P.ring.monomial(a)) * Q(P.ring.monomial(b))) for b in dual] for a in mons]
        )
        assert gram.rank() == len(mons) == len(dual)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3), st.integers(-3, 3))
def test_integration_is_linear_and_graded(cs, k):
    P = presentation(AIII(2, 3))
    Q = P.quotient
    s1, s2 = P.gen("s1"), P.gen("s2")
    x, y = s1**6, s2**3
    z = s1**2 * s2**2
    omega = x * cs[0] + y * cs[1] + z * cs[2]
    assert integrate(P, omega) == cs[0] * integrate(P, x) + cs[1] * integrate(P, y) + cs[2] * integrate(P, z)
    assert integrate(P, s1**3 * k) == 0  # below top degree
    assert integrate(P, Fraction(k)) == 0
    assert integrate(P, Q.zero()) == 0


def test_integration_rejects_degree_above_top():
    P = presentation(AIII(1, 2))
    with pytest.raises(DegreeAboveTop):
        integrate(P, P.ring.gen("s1") ** 3)
    # inside the quotient the same class is simply zero
    assert integrate(P, P.gen("s1") ** 3) == 0


def test_exceptional_calibration():
    assert presentation(G2SO4).calibration == Fraction(1, 1296)
    assert presentation(FII).calibration == Fraction(-3, 256)
