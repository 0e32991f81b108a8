"""Symmetric-function constructors and Newton's identities.

The Newton helpers are generic: they work for anything supporting ``+``,
``-``, ``*`` and scalar division, so the same code runs on plain
polynomials and on quotient-ring elements.
"""

from __future__ import annotations

from math import comb
from typing import Callable, Sequence, TypeVar

from ..errors import IndexOutOfRange
from .poly import Poly

T = TypeVar("T")


def elementary_symmetric(j: int, variables: Sequence[Poly]) -> Poly:
    """``e_j`` of the given polynomials; ``e_0 = 1``."""
    n = len(variables)
    if not variables:
        raise ValueError("need at least one variable to fix the ring")
    if j < 0 or j > n:
        raise IndexOutOfRange(f"e_{j} undefined for {n} variables")
    ring = variables[0].ring
    # e_k of the first i variables, updated in place
    e = [ring.one()] + [ring.zero()] * j
    for v in variables:
        for k in range(j, 0, -1):
            e[k] = e[k] + e[k - 1] * v
    return e[j]


def symmetric_in_squares(j: int, variables: Sequence[Poly]) -> Poly:
    """``e_j(v_1^2, ..., v_n^2)``."""
    if j < 0 or j > len(variables):
        raise IndexOutOfRange(f"e_{j} undefined for {len(variables)} variables")
    return elementary_symmetric(j, [v * v for v in variables])


def complete_homogeneous(j: int, variables: Sequence[Poly]) -> Poly:
    """``h_j``: sum of all monomials of degree ``j``."""
    if j < 0:
        raise IndexOutOfRange("negative index")
    ring = variables[0].ring
    h = [ring.one()] + [ring.zero()] * j
    for v in variables:
        for k in range(1, j + 1):
            h[k] = h[k] + h[k - 1] * v
    return h[j]


def power_sum(m: int, variables: Sequence[Poly]) -> Poly:
    ring = variables[0].ring
    if m == 0:
        return ring.const(len(variables))
    total = ring.zero()
    for v in variables:
        total = total + v ** m
    return total


def power_sums_from_elementary(
    elementary: Sequence[T], count: int, upto: int, one: T
) -> list[T]:
    """Power sums ``p_0..p_upto`` of ``count`` roots from ``e_1..e_count``.

    ``elementary[k-1]`` is ``e_k``; ``p_0`` is returned as ``count * one``.
    """
    e = list(elementary)

    def ek(k):
        return e[k - 1] if 1 <= k <= len(e) else None

    p = [one * count]
    for m in range(1, upto + 1):
        acc = None
        for i in range(1, m):
            ei = ek(i)
            if ei is None:
                continue
            term = ei * p[m - i]
            if (i - 1) % 2:
                term = -term
            acc = term if acc is None else acc + term
        em = ek(m)
        if em is not None:
            term = em * m
            if (m - 1) % 2:
                term = -term
            acc = term if acc is None else acc + term
        p.append(acc if acc is not None else one * 0)
    return p


def elementary_from_power_sums(power: Sequence[T], upto: int, one: T) -> list[T]:
    """``e_0..e_upto`` from power sums ``power[m] = p_m`` (``power[0]`` unused)."""
    e = [one]
    for k in range(1, upto + 1):
        acc = None
        for i in range(1, k + 1):
            term = e[k - i] * power[i]
            if (i - 1) % 2:
                term = -term
            acc = term if acc is None else acc + term
        e.append(acc / k)
    return e


def complete_from_elementary(elementary: Sequence[T], upto: int, one: T) -> list[T]:
    """``h_0..h_upto`` from ``e_1..e_n`` via ``sum (-1)^i e_i h_{k-i} = 0``."""
    e = list(elementary)
    h = [one]
    for k in range(1, upto + 1):
        acc = None
        for i in range(1, min(k, len(e)) + 1):
            term = e[i - 1] * h[k - i]
            if i % 2 == 0:
                term = -term
            acc = term if acc is None else acc + term
        h.append(acc if acc is not None else one * 0)
    return h


def binomial_convolution(
    m: int, left: Callable[[int], T], right: Callable[[int], T], sign: int = 1
) -> T:
    """``sum_k C(m,k) sign^k left(m-k) right(k)``."""
    acc = None
    for k in range(m + 1):
        term = left(m - k) * right(k) * comb(m, k)
        if sign < 0 and k % 2:
            term = -term
        acc = term if acc is None else acc + term
    return acc


__all__ = [
    "elementary_symmetric",
    "symmetric_in_squares",
    "complete_homogeneous",
    "power_sum",
    "power_sums_from_elementary",
    "elementary_from_power_sums",
    "complete_from_elementary",
    "binomial_convolution",
]
