"""Chern and Pontrjagin classes, Pontrjagin numbers and signatures.

Classes come from the complementary roots beta (Borel-Hirzebruch):
``p = prod(1 + beta^2)`` and, for Hermitian spaces, ``c = prod(1 + beta)``.
They are produced from power sums of the roots by Newton's identities so
the products never leave the quotient ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .cohomology import CohomologyPresentation, integrate, presentation
from .errors import (
    DimensionNotDivisibleBy4,
    InvalidParameters,
    NotHermitian,
)
from .polyring import Poly, PolyRing, RingElement
from .polyring.symmetric import elementary_from_power_sums, power_sums_from_elementary
from .spaces import SpaceId, _dimension_unchecked, is_hermitian


class Sig(str, Enum):
    """Signature known only to be nonzero (a zero/nonzero criterion)."""

    NONZERO = "nonzero"


# ----------------------------------------------------------------------------
# classes on a presentation


def _pres(space_or_pres) -> CohomologyPresentation:
    if isinstance(space_or_pres, CohomologyPresentation):
        return space_or_pres
    return presentation(space_or_pres)


def complementary_roots(space) -> list[Poly]:
    """Positive complementary roots as linear forms in torus coordinates."""
    return _pres(space).weights.linear_forms()


def pontrjagin_classes(space) -> list[RingElement]:
    """``[1, p_1, p_2, ...]`` up to the top degree."""
    pres = _pres(space)
    w = pres.weights
    upto = min(w.count, pres.top_degree // 4)
    s = [None] + [w.power_sum(2 * m) for m in range(1, upto + 1)]
    return elementary_from_power_sums(s, upto, pres.quotient.one())


def total_pontrjagin(space) -> RingElement:
    classes = pontrjagin_classes(space)
    total = classes[0]
    for c in classes[1:]:
        total = total + c
    return total


def chern_classes(space) -> list[RingElement]:
    pres = _pres(space)
    if not is_hermitian(pres.space):
        raise NotHermitian(f"{pres.space} carries no invariant complex structure")
    w = pres.weights
    upto = min(w.count, pres.top_degree // 2)
    s = [None] + [w.power_sum(m) for m in range(1, upto + 1)]
    return elementary_from_power_sums(s, upto, pres.quotient.one())


def total_chern(space) -> RingElement:
    classes = chern_classes(space)
    total = classes[0]
    for c in classes[1:]:
        total = total + c
    return total


def _check_partition(pres: CohomologyPresentation, partition) -> tuple[int, ...]:
    if pres.top_degree % 4:
        raise DimensionNotDivisibleBy4(f"{pres.space} has dimension {pres.top_degree}")
    part = tuple(int(k) for k in partition)
    if any(k < 1 for k in part) or sum(part) != pres.top_degree // 4:
        raise InvalidParameters(f"{part} is not a partition of {pres.top_degree // 4}")
    return part


def pontrjagin_number(space, partition) -> Fraction:
    """``integral of p_{k_1} ... p_{k_r}`` for a partition of dim/4."""
    pres = _pres(space)
    part = _check_partition(pres, partition)
    p = pontrjagin_classes(pres)
    omega = pres.quotient.one()
    for k in part:
        if k >= len(p):
            return Fraction(0)
        omega = omega * p[k]
    return integrate(pres, omega)


def partitions(n: int, largest: int | None = None):
    """Partitions of n as non-increasing tuples, largest part first."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def pontrjagin_numbers(space) -> dict[tuple[int, ...], Fraction]:
    pres = _pres(space)
    if pres.top_degree % 4:
        raise DimensionNotDivisibleBy4(f"{pres.space} has dimension {pres.top_degree}")
    return {part: pontrjagin_number(pres, part) for part in partitions(pres.top_degree // 4)}


# ----------------------------------------------------------------------------
# L-genus


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli numbers with B_1 = -1/2."""
    if n == 0:
        return Fraction(1)
    return -sum((comb(n + 1, k) * bernoulli(k) for k in range(n)), Fraction(0)) / (n + 1)


@lru_cache(maxsize=None)
def _log_q_coefficients(n: int) -> tuple[Fraction, ...]:
    """Coefficients a_1..a_n of log(sqrt(z)/tanh(sqrt(z)))."""
    q = [Fraction(2 ** (2 * k)) * bernoulli(2 * k) / factorial(2 * k) for k in range(n + 1)]
    a = [Fraction(0)] * (n + 1)
    for m in range(1, n + 1):
        a[m] = q[m] - sum((k * a[k] * q[m - k] for k in range(1, m)), Fraction(0)) / m
    return tuple(a[1:])


def l_ring(n: int) -> PolyRing:
    return PolyRing([f"p{k}" for k in range(1, n + 1)], list(range(1, n + 1)))


@lru_cache(maxsize=None)
def l_polynomials(n: int) -> tuple[Poly, ...]:
    """``(L_1, ..., L_n)`` as polynomials in p_1..p_n (p_k of weight k).

    Built from the multiplicative sequence: with Pontrjagin roots z_i,
    ``L = prod Q(z_i) = exp(sum_k a_k s_k)`` where ``s_k`` are power sums
    of the z_i, rewritten in the p_j by Newton's identities.
    """
    R = l_ring(n)
    p = list(R.gens)
    s = power_sums_from_elementary(p, n, n, R.one())
    a = _log_q_coefficients(n)
    F = [R.zero()] + [s[k] * a[k - 1] for k in range(1, n + 1)]
    E = [R.one()]
    for m in range(1, n + 1):
        acc = R.zero()
        for k in range(1, m + 1):
            acc = acc + F[k] * E[m - k] * k
        E.append(acc / m)
    return tuple(E[1:])


def evaluate_l(n: int, pclasses: list[RingElement]) -> RingElement:
    """Plug Pontrjagin classes into L_n."""
    Ln = l_polynomials(n)[n - 1]
    one = pclasses[0]
    total = one * 0
    for exp, c in Ln.terms.items():
        term = one
        for k, e in enumerate(exp, start=1):
            if e:
                term = term * (pclasses[k] ** e if k < len(pclasses) else one * 0)
        total = total + term * c
    return total


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {x}")
    return int(x)


def lgenus_signature(space) -> int:
    """Signature as the integral of the top L-polynomial."""
    pres = _pres(space)
    if pres.top_degree % 4:
        raise DimensionNotDivisibleBy4(f"{pres.space} has dimension {pres.top_degree}")
    n = pres.top_degree // 4
    value = integrate(pres, evaluate_l(n, pontrjagin_classes(pres)))
    return _as_int(value, "L-genus")


def lgenus_signature_direct(space) -> int:
    """Same value via ``exp(sum a_k s_k)`` on root power sums (no p_j)."""
    pres = _pres(space)
    if pres.top_degree % 4:
        raise DimensionNotDivisibleBy4(f"{pres.space} has dimension {pres.top_degree}")
    n = pres.top_degree // 4
    a = _log_q_coefficients(n)
    w = pres.weights
    one = pres.quotient.one()
    F = [one * 0] + [w.power_sum(2 * k) * a[k - 1] for k in range(1, n + 1)]
    E = [one]
    for m in range(1, n + 1):
        acc = one * 0
        for k in range(1, m + 1):
            acc = acc + F[k] * E[m - k] * k
        E.append(acc / m)
    return _as_int(integrate(pres, E[n]), "L-genus")


# ----------------------------------------------------------------------------
# quoted closed forms


def shanahan_signature(p: int, q: int) -> int:
    """Closed form for the oriented Grassmannian of p-planes in R^{p+q}."""
    if p % 2 == 0 and q % 2 == 0 and (p * q) % 8 == 0:
        return comb((p + q) // 4, q // 4)
    return 0


def signature_closed_form(space: SpaceId) -> int | Sig | None:
    """Quoted signature values; None when the family has none (or 4 does not divide dim).

    CII only has a zero/nonzero criterion, reported as 0 or ``Sig.NONZERO``.
    The sign is not meaningful (no orientation is fixed by these formulas).
    """
    f, p = space.family, space.params
    dim = _dimension_unchecked(f, p)
    if dim % 4:
        return None
    if f == "AIII":
        return comb((p[0] + p[1]) // 2, p[0] // 2)
    if f == "BDI":
        return shanahan_signature(p[0], p[1])
    if f == "DIII" and p[0] == 4:  # SO(8)/U(4) is the quadric SO(8)/SO(2)xSO(6)
        return shanahan_signature(2, 6)
    if f == "CII":
        return 0 if p[0] % 2 and p[1] % 2 else Sig.NONZERO
    return {"EIII": 3, "G2SO4": 1, "FII": 1}.get(f)


def quoted_quadric_signature(q: int) -> int:
    """The value ``4 floor(q/2)`` quoted for SO(2+q)/SO(2)xSO(q).

    Kept for comparison only; see the decisions ledger.
    """
    return 4 * (q // 2)


# ----------------------------------------------------------------------------
# report


@dataclass
class CharClassReport:
    space: SpaceId
    total_chern: RingElement | None
    total_pontrjagin: RingElement
    pontrjagin_numbers: dict[tuple[int, ...], Fraction] = field(default_factory=dict)
    signature_lgenus: int | None = None
    signature_closed_form: int | Sig | None = None


def report(space: SpaceId, partitions_wanted=None) -> CharClassReport:
    pres = presentation(space)
    chern = total_chern(pres) if is_hermitian(space) else None
    numbers = {}
    sig = None
    if pres.top_degree % 4 == 0:
        if partitions_wanted is None:
            numbers = pontrjagin_numbers(pres)
        else:
            numbers = {tuple(pt): pontrjagin_number(pres, pt) for pt in partitions_wanted}
        sig = lgenus_signature(pres)
    return CharClassReport(
        space=space,
        total_chern=chern,
        total_pontrjagin=total_pontrjagin(pres),
        pontrjagin_numbers=numbers,
        signature_lgenus=sig,
        signature_closed_form=signature_closed_form(space),
    )


__all__ = [
    "CharClassReport",
    "Sig",
    "bernoulli",
    "chern_classes",
    "complementary_roots",
    "evaluate_l",
    "l_polynomials",
    "lgenus_signature",
    "lgenus_signature_direct",
    "partitions",
    "pontrjagin_classes",
    "pontrjagin_number",
    "pontrjagin_numbers",
    "quoted_quadric_signature",
    "report",
    "shanahan_signature",
    "signature_closed_form",
    "total_chern",
    "total_pontrjagin",
]
