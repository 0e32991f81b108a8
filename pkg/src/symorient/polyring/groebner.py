"""Buchberger's algorithm, normal forms and finite quotient rings."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import NonHomogeneousInput, VariableMismatch
from . import kernels
from .poly import Poly, PolyRing

ORDER = "grevlex"


def _lcm(a, b):
    return tuple([max(x, y) for x, y in zip(a, b)])


def _coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis of a homogeneous ideal under weighted grevlex."""

    ring: PolyRing
    polys: tuple[Poly, ...]
    order: str = ORDER
    leads: tuple[tuple[int, ...], ...] = field(init=False, repr=False)
    tails: tuple[dict, ...] = field(init=False, repr=False)

    def __post_init__(self):
        leads = []
        tails = []
        for p in self.polys:
            e = p.leading_exp()
            leads.append(e)
            t = dict(p.terms)
            del t[e]
            tails.append(t)
        object.__setattr__(self, "leads", tuple(leads))
        object.__setattr__(self, "tails", tuple(tails))

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def is_unit(self) -> bool:
        return any(not any(e) for e in self.leads)

    def reduce(self, p: Poly) -> Poly:
        return normal_form(p, self)

    def contains(self, p: Poly) -> bool:
        return normal_form(p, self).is_zero()

    def is_standard(self, exp: Sequence[int]) -> bool:
        return kernels.find_divisor(tuple(exp), self.leads) < 0

    def is_zero_dimensional(self) -> bool:
        """True when every variable has a pure power among the leading terms."""
        n = self.ring.nvars
        seen = set()
        for e in self.leads:
            nz = [i for i, k in enumerate(e) if k]
            if len(nz) == 1:
                seen.add(nz[0])
            elif not nz:
                return True
        return len(seen) == n


def _check_homogeneous(polys: Sequence[Poly]) -> None:
    for p in polys:
        if not p.is_homogeneous():
            raise NonHomogeneousInput(f"generator {p!r} is not homogeneous")


def _reduce_with(f: dict, basis: list[Poly], ring: PolyRing) -> dict:
    leads = [b.leading_exp() for b in basis]
    tails = []
    for b, e in zip(basis, leads):
        t = dict(b.terms)
        del t[e]
        tails.append(t)
    return kernels.reduce_terms(f, leads, tails, ring.weights)


def buchberger(generators: Iterable[Poly]) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal spanned by homogeneous generators."""
    gens = [g for g in generators]
    if not gens:
        raise ValueError("at least one generator is required to fix the ring")
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise VariableMismatch("generators live in different rings")
    _check_homogeneous(gens)
    gens = [g.monic() for g in gens if not g.is_zero()]
    if not gens:
        return GroebnerBasis(ring, ())
    if any(g.degree() == 0 for g in gens):
        return GroebnerBasis(ring, (ring.one(),))

    weights = ring.weights
    basis: list[Poly] = []
    leads: list[tuple[int, ...]] = []
    tails: list[dict] = []
    pairs: dict[tuple[int, int], int] = {}

    def add(h: Poly):
        h = h.monic()
        lead = h.leading_exp()
        idx = len(basis)
        # chain criterion against queued pairs
        for (i, j) in list(pairs):
            lij = _lcm(leads[i], leads[j])
            if (
                kernels.divides(lead, lij)
                and _lcm(leads[i], lead) != lij
                and _lcm(leads[j], lead) != lij
            ):
                del pairs[(i, j)]
        candidates = {}
        for i, li in enumerate(leads):
            candidates[i] = _lcm(li, lead)
        kept = []
        for i, lcm_i in candidates.items():
            redundant = False
            for j, lcm_j in candidates.items():
                if j != i and kernels.divides(lcm_j, lcm_i) and (lcm_j != lcm_i or j < i):
                    redundant = True
                    break
            if not redundant:
                kept.append(i)
        for i in kept:
            if not _coprime(leads[i], lead):
                pairs[(i, idx)] = sum(a * w for a, w in zip(candidates[i], weights))
        basis.append(h)
        leads.append(lead)
        t = dict(h.terms)
        del t[lead]
        tails.append(t)

    # seed with mutually reduced input, lowest degree first
    for g in sorted(gens, key=lambda p: (p.degree(), ring.order_key(p.leading_exp()))):
        r = kernels.reduce_terms(g.terms, leads, tails, weights) if basis else dict(g.terms)
        if r:
            add(Poly(ring, r))

    while pairs:
        (i, j) = min(pairs, key=lambda ij: (pairs[ij], ij))
        del pairs[(i, j)]
        lij = _lcm(leads[i], leads[j])
        si = tuple(a - b for a, b in zip(lij, leads[i]))
        sj = tuple(a - b for a, b in zip(lij, leads[j]))
        s: dict = {}
        kernels.add_scaled(s, tails[i], Fraction(1), si)
        kernels.add_scaled(s, tails[j], Fraction(-1), sj)
        if not s:
            continue
        r = kernels.reduce_terms(s, leads, tails, weights)
        if r:
            r_poly = Poly(ring, r)
            if r_poly.degree() == 0:
                return GroebnerBasis(ring, (ring.one(),))
            add(r_poly)

    return GroebnerBasis(ring, tuple(_interreduce(basis, ring)))


def _interreduce(basis: list[Poly], ring: PolyRing) -> list[Poly]:
    leads = [b.leading_exp() for b in basis]
    minimal = []
    for i, (b, li) in enumerate(zip(basis, leads)):
        dominated = False
        for j, lj in enumerate(leads):
            if j == i:
                continue
            if kernels.divides(lj, li) and (lj != li or j < i):
                dominated = True
                break
        if not dominated:
            minimal.append(b)
    out = []
    for i, b in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lead = b.leading_exp()
        tail = dict(b.terms)
        del tail[lead]
        red = _reduce_with(tail, others, ring) if others else tail
        red[lead] = Fraction(1)
        out.append(Poly(ring, red).monic())
    out.sort(key=lambda p: ring.order_key(p.leading_exp()))
    return out


def normal_form(p: Poly, gb: GroebnerBasis) -> Poly:
    """Remainder of ``p`` after full division by ``gb``."""
    if p.ring != gb.ring:
        raise VariableMismatch(f"{p.ring} vs {gb.ring}")
    if not gb.polys:
        return p
    return Poly(p.ring, kernels.reduce_terms(p.terms, gb.leads, gb.tails, p.ring.weights))


def quotient_monomial_basis(gb: GroebnerBasis, degree: int) -> list[tuple[int, ...]]:
    """Standard monomials of one weighted degree (largest first)."""
    return [e for e in gb.ring.monomials_of_degree(degree) if gb.is_standard(e)]


def is_groebner(gb: GroebnerBasis) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    polys = gb.polys
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            li, lj = gb.leads[i], gb.leads[j]
            lij = _lcm(li, lj)
            si = tuple(a - b for a, b in zip(lij, li))
            sj = tuple(a - b for a, b in zip(lij, lj))
            s: dict = {}
            kernels.add_scaled(s, gb.tails[i], Fraction(1), si)
            kernels.add_scaled(s, gb.tails[j], Fraction(-1), sj)
            if s and kernels.reduce_terms(s, gb.leads, gb.tails, gb.ring.weights):
                return False
    return True


class QuotientRing:
    """Finite-dimensional graded quotient ``ring / ideal(gb)``.

    Elements are :class:`RingElement` objects held in normal form.  Normal
    forms of monomials are memoised, so repeated products stay cheap.
    """

    def __init__(self, gb: GroebnerBasis):
        if not gb.is_zero_dimensional():
            raise ValueError("quotient is not finite dimensional")
        self.gb = gb
        self.ring = gb.ring
        self._nf_cache: dict[tuple[int, ...], dict] = {}
        self.basis = self._standard_monomials()
        by_degree: dict[int, list[tuple[int, ...]]] = {}
        for e in self.basis:
            by_degree.setdefault(self.ring.wdeg(e), []).append(e)
        for d in by_degree:
            by_degree[d].sort(key=self.ring.order_key, reverse=True)
        self.basis_by_degree = dict(sorted(by_degree.items()))
        self.top_degree = max(self.basis_by_degree) if self.basis else -1

    def _standard_monomials(self) -> list[tuple[int, ...]]:
        if self.gb.is_unit():
            return []
        n = self.ring.nvars
        out = []

        def rec(i, acc):
            if i == n:
                out.append(tuple(acc))
                return
            k = 0
            while True:
                trial = acc + [k] + [0] * (n - i - 1)
                if not self.gb.is_standard(trial):
                    break
                rec(i + 1, acc + [k])
                k += 1

        rec(0, [])
        return out

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def hilbert(self) -> dict[int, int]:
        return {d: len(v) for d, v in self.basis_by_degree.items()}

    def nf_monomial(self, exp: tuple[int, ...]) -> dict:
        cached = self._nf_cache.get(exp)
        if cached is None:
            if self.ring.wdeg(exp) > self.top_degree:
                cached = {}
            else:
                cached = kernels.reduce_terms(
                    {exp: Fraction(1)}, self.gb.leads, self.gb.tails, self.ring.weights
                )
            self._nf_cache[exp] = cached
        return cached

    def reduce(self, p: Poly) -> Poly:
        if p.ring != self.ring:
            raise VariableMismatch(f"{p.ring} vs {self.ring}")
        acc: dict = {}
        for e, c in p.terms.items():
            image = self.nf_monomial(e)
            if image:
                kernels.add_scaled(acc, image, c)
        return Poly(self.ring, acc)

    def __call__(self, p) -> RingElement:
        if isinstance(p, RingElement):
            if p.parent is not self:
                raise VariableMismatch("element belongs to another quotient")
            return p
        if isinstance(p, (int, Fraction)):
            p = self.ring.const(p)
        return RingElement(self, self.reduce(p))

    def gen(self, i) -> RingElement:
        return self(self.ring.gen(i))

    def zero(self) -> RingElement:
        return RingElement(self, self.ring.zero())

    def one(self) -> RingElement:
        return self(self.ring.one())

    def mul_terms(self, a: dict, b: dict) -> dict:
        return kernels.bilinear_reduce(a, b, self.nf_monomial)

    def coordinates(self, x: RingElement, degree: int) -> list[Fraction]:
        """Coefficients of ``x`` on the standard monomials of one degree."""
        return [x.poly.coeff(e) for e in self.basis_by_degree.get(degree, [])]


class RingElement:
    """Element of a :class:`QuotientRing`, always in normal form."""

    __slots__ = ("parent", "poly")

    def __init__(self, parent: QuotientRing, poly: Poly):
        self.parent = parent
        self.poly = poly

    def _lift(self, other) -> RingElement:
        if isinstance(other, RingElement):
            if other.parent is not self.parent:
                raise VariableMismatch("elements of different quotient rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.parent(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RingElement(self.parent, self.poly + other.poly)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RingElement(self.parent, self.poly - other.poly)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return RingElement(self.parent, -self.poly)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RingElement(self.parent, self.poly * other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = self.parent.mul_terms(self.poly.terms, other.poly.terms)
        return RingElement(self.parent, Poly(self.parent.ring, terms))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RingElement(self.parent, self.poly / other)
        return NotImplemented

    def __pow__(self, n: int):
        result = self.parent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __bool__(self):
        return not self.poly.is_zero()

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def homogeneous_part(self, degree: int) -> RingElement:
        return RingElement(self.parent, self.poly.homogeneous_part(degree))

    def degree(self) -> int:
        return self.poly.degree()

    def __repr__(self):
        return f"[{self.poly!r}]"
