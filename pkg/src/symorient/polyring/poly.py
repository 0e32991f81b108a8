"""Sparse graded polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..errors import VariableMismatch
from . import kernels


class PolyRing:
    """Polynomial ring Q[v_1, ..., v_n] graded by per-variable weights.

    Weights are topological degrees, so a Chern root has weight 2 and the
    j-th elementary symmetric function of Chern roots has weight 2j.
    """

    __slots__ = ("names", "weights", "nvars", "_zero_exp", "_hash")

    def __init__(self, names: Sequence[str], weights: Sequence[int] | None = None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        if weights is None:
            weights = (2,) * len(names)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(names):
            raise ValueError("one weight per variable is required")
        if any(w <= 0 for w in weights):
            raise ValueError("weights must be positive")
        self.names = names
        self.weights = weights
        self.nvars = len(names)
        self._zero_exp = (0,) * self.nvars
        self._hash = hash((names, weights))

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.weights == other.weights
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{n}:{w}" for n, w in zip(self.names, self.weights))
        return f"PolyRing({body})"

    # -- constructors -----------------------------------------------------
    def zero(self) -> Poly:
        return Poly(self, {})

    def one(self) -> Poly:
        return Poly(self, {self._zero_exp: Fraction(1)})

    def const(self, c) -> Poly:
        c = Fraction(c)
        return Poly(self, {self._zero_exp: c} if c else {})

    def gen(self, i: int | str) -> Poly:
        if isinstance(i, str):
            i = self.names.index(i)
        exp = [0] * self.nvars
        exp[i] = 1
        return Poly(self, {tuple(exp): Fraction(1)})

    @property
    def gens(self) -> tuple[Poly, ...]:
        return tuple(self.gen(i) for i in range(self.nvars))

    def monomial(self, exp: Sequence[int], coeff=1) -> Poly:
        exp = tuple(exp)
        if len(exp) != self.nvars:
            raise VariableMismatch(f"exponent {exp} has wrong length for {self}")
        c = Fraction(coeff)
        return Poly(self, {exp: c} if c else {})

    def from_terms(self, terms: Mapping[Sequence[int], object]) -> Poly:
        out = {}
        for e, c in terms.items():
            c = Fraction(c)
            if c:
                e = tuple(e)
                out[e] = out.get(e, 0) + c
                if not out[e]:
                    del out[e]
        return Poly(self, out)

    # -- monomial helpers -------------------------------------------------
    def wdeg(self, exp: Sequence[int]) -> int:
        return sum(e * w for e, w in zip(exp, self.weights))

    def order_key(self, exp: Sequence[int]):
        return (self.wdeg(exp), tuple(-e for e in reversed(exp)))

    def monomials_of_degree(self, degree: int) -> list[tuple[int, ...]]:
        """All exponent vectors of the given weighted degree, largest first."""
        out: list[tuple[int, ...]] = []
        n = self.nvars
        w = self.weights

        def rec(i, left, acc):
            if i == n - 1:
                if left % w[i] == 0:
                    out.append(tuple(acc + [left // w[i]]))
                return
            for e in range(left // w[i] + 1):
                rec(i + 1, left - e * w[i], acc + [e])

        if degree < 0:
            return []
        if n == 0:
            return [()] if degree == 0 else []
        rec(0, degree, [])
        out.sort(key=self.order_key, reverse=True)
        return out

    def format_monomial(self, exp: Sequence[int]) -> str:
        parts = []
        for name, e in zip(self.names, exp):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


class Poly:
    """Immutable sparse polynomial over a :class:`PolyRing`."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        # trusted constructor: terms already normalised (Fraction, no zeros)
        self.ring = ring
        self.terms = terms

    # -- coercion ---------------------------------------------------------
    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise VariableMismatch(f"{other.ring} vs {self.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        kernels.add_scaled(acc, other.terms, Fraction(1))
        return Poly(self.ring, acc)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        kernels.add_scaled(acc, other.terms, Fraction(-1))
        return Poly(self.ring, acc)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return self.ring.zero()
            return Poly(self.ring, {e: v * c for e, v in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly(self.ring, kernels.mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- inspection -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Largest weighted degree among the terms (-1 for zero)."""
        if not self.terms:
            return -1
        return max(self.ring.wdeg(e) for e in self.terms)

    def degrees(self) -> set[int]:
        return {self.ring.wdeg(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_part(self, degree: int) -> Poly:
        w = self.ring.wdeg
        return Poly(self.ring, {e: c for e, c in self.terms.items() if w(e) == degree})

    def truncate(self, max_degree: int) -> Poly:
        w = self.ring.wdeg
        return Poly(self.ring, {e: c for e, c in self.terms.items() if w(e) <= max_degree})

    def leading_exp(self) -> tuple[int, ...]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=self.ring.order_key)

    def leading_coeff(self) -> Fraction:
        return self.terms[self.leading_exp()]

    def constant_term(self) -> Fraction:
        return self.terms.get(self.ring._zero_exp, Fraction(0))

    def coeff(self, exp: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items(), key=lambda t: self.ring.order_key(t[0]), reverse=True)

    def monic(self) -> Poly:
        return self * (1 / self.leading_coeff())

    def evaluate(self, point: Sequence) -> Fraction:
        """Value at a point given as one number per variable."""
        if len(point) != self.ring.nvars:
            raise VariableMismatch("point has wrong dimension")
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= Fraction(x) ** k
            total += v
        return total

    def compose(self, images: Sequence[Poly]) -> Poly:
        """Substitute ``images[i]`` for the i-th variable."""
        if len(images) != self.ring.nvars:
            raise VariableMismatch("one image per variable is required")
        target = images[0].ring if images else self.ring
        result = target.zero()
        powers: dict[tuple[int, int], Poly] = {}
        for e, c in self.terms.items():
            term = target.const(c)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in powers:
                        powers[key] = images[i] ** k
                    term = term * powers[key]
            result = result + term
        return result

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = self.ring.format_monomial(e)
            if mono == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_sum(items: Iterable[Poly], ring: PolyRing) -> Poly:
    acc: dict = {}
    one = Fraction(1)
    for p in items:
        kernels.add_scaled(acc, p.terms, one)
    return Poly(ring, acc)
