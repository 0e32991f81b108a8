"""Rational cohomology of equal-rank compact symmetric spaces U/K.

The ring is presented as ``Q[generators] / ideal`` where the generators are
characteristic classes of the isotropy factors of K (elementary symmetric
functions of their Chern roots, or of squares plus a Pfaffian) and the ideal
is generated by the positive-degree U-invariants.  Integration is fixed by
requiring the Euler class to integrate to the Euler characteristic.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from math import comb, prod
from typing import Callable

from .errors import (
    DegenerateEulerClass,
    DegreeAboveTop,
    InvalidParameters,
    NotEqualRank,
    UnsupportedSpace,
)
from .polyring import GroebnerBasis, Poly, PolyRing, QuotientRing, RingElement, buchberger
from .polyring.linalg import solve_columns
from .polyring.symmetric import (
    complete_from_elementary,
    elementary_from_power_sums,
    elementary_symmetric,
    power_sums_from_elementary,
)
from .rootsys import build_root_system
from .spaces import SpaceId, _deg_a, _deg_so, _deg_sp, dual_pair_unchecked

SUPPORTED = ("AIII", "BDI", "DIII", "CI", "CII", "G2SO4", "FII")
STRETCH = ("EIII", "EVII")

# ----------------------------------------------------------------------------
# Hirsch formula


def _check_structure(space: SpaceId) -> None:
    """Reject parameters for which U/K is not an equal-rank pair we model.

    Ranges are looser than the catalog's: DIII(2..3), CI(1..2) and small
    Grassmannians are legitimate spaces and useful as test cases.
    """
    f, p = space.family, space.params
    if f in ("AI", "AII", "TypeIV"):
        raise NotEqualRank(f"{space} has rank(K) < rank(U)")
    if any(x < 1 for x in p if isinstance(x, int)):
        raise InvalidParameters(f"{space}: parameters must be positive")
    if f == "DIII" and p[0] < 2:
        raise InvalidParameters("DIII(n) needs n >= 2")
    if f == "BDI":
        if p[0] % 2 and p[1] % 2:
            raise NotEqualRank(f"{space}: both parameters odd")
        if p[0] + p[1] < 3:
            raise InvalidParameters("BDI(p,q) needs p + q >= 3")


def invariant_degrees(space: SpaceId) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Fundamental invariant degrees of W_U and of W_K (torus factors count as 1)."""
    _check_structure(space)
    f, p = space.family, space.params
    if f == "AIII":
        return tuple(range(2, p[0] + p[1] + 1)), _deg_a(p[0]) + _deg_a(p[1])[1:]
    if f == "BDI":
        return _deg_so(p[0] + p[1]), _deg_so(p[0]) + _deg_so(p[1])
    if f == "DIII":
        return _deg_so(2 * p[0]), _deg_a(p[0])
    if f == "CI":
        return _deg_sp(p[0]), _deg_a(p[0])
    if f == "CII":
        return _deg_sp(p[0] + p[1]), _deg_sp(p[0]) + _deg_sp(p[1])
    pair = dual_pair_unchecked(space)
    return pair.U_root_system.invariant_degrees, pair.K_embedding.invariant_degrees


def _times_binomial(poly: list[int], d: int, sign: int) -> list[int]:
    out = poly + [0] * d
    for i, c in enumerate(poly):
        out[i + d] += sign * c
    return out


def hirsch_poincare(space: SpaceId) -> tuple[int, ...]:
    """Poincare polynomial ``prod(1 - t^{2 d_U}) / prod(1 - t^{2 d_K})``.

    Returned as the coefficient tuple ``(b_0, b_1, ..., b_top)``.
    """
    du, dk = invariant_degrees(space)
    if len(du) != len(dk):
        raise NotEqualRank(f"{space}: {len(du)} vs {len(dk)} invariants")
    num = [1]
    for d in du:
        num = _times_binomial(num, 2 * d, -1)
    den = [1]
    for d in dk:
        den = _times_binomial(den, 2 * d, -1)
    n = len(num) - len(den) + 1
    quo = [0] * n
    rem = list(num)
    for i in range(n):  # power-series division, den[0] == 1
        c = rem[i]
        quo[i] = c
        if c:
            for j, dj in enumerate(den):
                rem[i + j] -= c * dj
    if any(rem):
        raise ArithmeticError(f"Hirsch quotient is not a polynomial for {space}")
    return tuple(quo)


def euler_characteristic(space: SpaceId) -> int:
    try:
        return sum(hirsch_poincare(space))
    except NotEqualRank:
        return 0


def format_poincare(coeffs) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mono = "1" if k == 0 else ("t" if k == 1 else f"t^{k}")
        if k == 0:
            parts.append(str(c))
        else:
            parts.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(parts) if parts else "0"


# ----------------------------------------------------------------------------
# complementary roots seen through block invariants


class _Block:
    """Coordinates of one isotropy factor, accessed through its invariants.

    ``elementary`` holds e_1..e_n of the coordinates, or of their squares
    when ``squares`` is set (then odd power sums are unavailable and the
    product of coordinates is ``pfaffian``).
    """

    def __init__(self, one, size, elementary, squares=False, pfaffian=None):
        self.one = one
        self.size = size
        self.elementary = list(elementary)
        self.squares = squares
        self.pfaffian = pfaffian
        self._p = [one * size]

    def P(self, m: int):
        if m == 0:
            return self._p[0]
        if self.squares:
            if m % 2:
                raise UnsupportedSpace("odd power sums need a torus-level model")
            k = m // 2
        else:
            k = m
        if k >= len(self._p):
            self._p = power_sums_from_elementary(self.elementary, self.size, k, self.one)
        return self._p[k]

    def top(self):
        """Product of the coordinates."""
        if self.size == 0:
            return self.one
        if self.squares:
            if self.pfaffian is None:
                raise UnsupportedSpace("block has no Pfaffian class")
            return self.pfaffian
        return self.elementary[self.size - 1]


def _family_power_sum(kind: str, blocks, m: int):
    if kind == "diff":
        a, b = blocks
        acc = None
        for k in range(m + 1):
            t = a.P(m - k) * b.P(k) * comb(m, k)
            if k % 2:
                t = -t
            acc = t if acc is None else acc + t
        return acc
    if kind in ("sum_pairs", "diag"):
        (a,) = blocks
        acc = None
        for k in range(m + 1):
            t = a.P(k) * a.P(m - k) * comb(m, k)
            acc = t if acc is None else acc + t
        corr = a.P(m) * (2 ** m)
        acc = acc - corr if kind == "sum_pairs" else acc + corr
        return acc / 2
    if kind == "pm":
        a, b = blocks
        acc = a.one * 0
        for k in range(0, m + 1, 2):
            acc = acc + a.P(m - k) * b.P(k) * (2 * comb(m, k))
        return acc
    if kind == "single":
        return blocks[0].P(m)
    raise ValueError(kind)


def _family_count(kind: str, blocks) -> int:
    if kind == "diff":
        return blocks[0].size * blocks[1].size
    if kind == "sum_pairs":
        n = blocks[0].size
        return n * (n - 1) // 2
    if kind == "diag":
        n = blocks[0].size
        return n * (n + 1) // 2
    if kind == "pm":
        return 2 * blocks[0].size * blocks[1].size
    return blocks[0].size


def _newton_top(power: Callable[[int], object], count: int, one):
    if count == 0:
        return one
    ps = [None] + [power(m) for m in range(1, count + 1)]
    return elementary_from_power_sums(ps, count, one)[count]


def _family_euler(kind: str, blocks, one):
    count = _family_count(kind, blocks)
    if kind == "pm":
        a, b = blocks

        def gamma(m):  # power sums of a_i^2 - b_j^2
            acc = None
            for k in range(m + 1):
                t = a.P(2 * (m - k)) * b.P(2 * k) * comb(m, k)
                if k % 2:
                    t = -t
                acc = t if acc is None else acc + t
            return acc

        return _newton_top(gamma, count // 2, one)
    if kind == "single":
        return blocks[0].top()
    return _newton_top(lambda m: _family_power_sum(kind, blocks, m), count, one)


class IsotropyWeights:
    """The positive complementary roots of an equal-rank pair.

    Besides the symbolic calculus on the quotient ring (power sums and the
    Euler class), it records the roots as integer linear forms in a set of
    torus coordinates together with the images of the ring generators as
    polynomials in those coordinates.  The latter is what independent
    checks (localisation formulas) evaluate.
    """

    def __init__(self, quotient, coordinates: PolyRing, forms, images, families=(), subduce=None):
        self.quotient = quotient
        self.coordinates = coordinates
        self.forms = tuple(tuple(f) for f in forms)
        self.images = tuple(images)
        self._families = tuple(families)
        self._subduce = subduce
        self._power: dict[int, RingElement] = {}
        self._euler = None

    @property
    def count(self) -> int:
        return len(self.forms)

    def linear_forms(self) -> list[Poly]:
        gens = self.coordinates.gens
        out = []
        for f in self.forms:
            acc = self.coordinates.zero()
            for c, g in zip(f, gens):
                if c:
                    acc = acc + g * c
            out.append(acc)
        return out

    def power_sum(self, m: int) -> RingElement:
        """``sum over roots of beta^m`` as a ring element."""
        got = self._power.get(m)
        if got is None:
            if self._subduce is not None:
                t = self.coordinates.zero()
                for beta in self.linear_forms():
                    t = t + beta ** m
                got = self.quotient(self._subduce(t))
            else:
                got = self.quotient.zero()
                for kind, blocks in self._families:
                    got = got + _family_power_sum(kind, blocks, m)
            self._power[m] = got
        return got

    def euler(self) -> RingElement:
        """Product of all positive complementary roots."""
        if self._euler is None:
            one = self.quotient.one()
            if self._subduce is not None:
                e = prod(self.linear_forms(), start=self.coordinates.one())
                self._euler = self.quotient(self._subduce(e))
            else:
                e = one
                for kind, blocks in self._families:
                    e = e * _family_euler(kind, blocks, one)
                self._euler = e
        return self._euler


# ----------------------------------------------------------------------------
# presentations


@dataclass(frozen=True, eq=False)
class CohomologyPresentation:
    space: SpaceId
    ring: PolyRing
    ideal: tuple[Poly, ...]
    gb: GroebnerBasis
    quotient: QuotientRing
    poincare: tuple[int, ...]
    top_degree: int
    euler_characteristic: int
    top_monomial: tuple[int, ...]
    weights: IsotropyWeights = field(repr=False)
    calibration: Fraction | None = None

    @property
    def generators(self) -> tuple[tuple[str, int], ...]:
        return tuple(zip(self.ring.names, self.ring.weights))

    def gen(self, name) -> RingElement:
        return self.quotient.gen(name)

    def __call__(self, x) -> RingElement:
        return self.quotient(x)

    def betti(self) -> dict[int, int]:
        return self.quotient.hilbert()


def _squares_relations(s: list[Poly], one: Poly, upto: int) -> list[Poly]:
    """``e_k(x^2)`` in terms of ``e_j(x)``: (-1)^k sum_{i+j=2k} (-1)^j e_i e_j."""
    n = len(s)
    e = [one] + list(s)

    def get(i):
        return e[i] if 0 <= i <= n else None

    out = []
    for k in range(1, upto + 1):
        acc = one * 0
        for i in range(0, 2 * k + 1):
            a, b = get(i), get(2 * k - i)
            if a is None or b is None:
                continue
            t = a * b
            if (2 * k - i) % 2:
                t = -t
            acc = acc + t
        out.append(acc if k % 2 == 0 else -acc)
    return out


def _coords(names) -> PolyRing:
    return PolyRing(names)


def _unit(n, i, c=1):
    v = [0] * n
    v[i] = c
    return v


def _build_aiii(p, q, squares=False):
    w = 4 if squares else 2
    prefix = "l" if squares else "s"
    R = PolyRing([f"{prefix}{k}" for k in range(1, p + 1)], [w * k for k in range(1, p + 1)])
    s = list(R.gens)
    h = complete_from_elementary(s, p + q, R.one())
    ideal = h[q + 1 : q + p + 1]

    C = _coords([f"x{i}" for i in range(1, p + 1)] + [f"y{j}" for j in range(1, q + 1)])
    xs, ys = C.gens[:p], C.gens[p:]
    base = [x * x for x in xs] if squares else list(xs)
    images = [elementary_symmetric(k, base) for k in range(1, p + 1)]
    forms = []
    for i in range(p):
        for j in range(q):
            if squares:
                forms.append([a + b for a, b in zip(_unit(p + q, i), _unit(p + q, p + j))])
            forms.append([a - b for a, b in zip(_unit(p + q, i), _unit(p + q, p + j))])

    def weights(Q):
        one = Q.one()
        X = _Block(one, p, [Q(x) for x in s], squares=squares)
        Y = _Block(one, q, [Q(h[k]) * (-1) ** k for k in range(1, q + 1)], squares=squares)
        kind = "pm" if squares else "diff"
        return IsotropyWeights(Q, C, forms, images, [(kind, (X, Y))])

    return R, ideal, weights


def _build_diii_ci(p, ci: bool):
    R = PolyRing([f"s{k}" for k in range(1, p + 1)], [2 * k for k in range(1, p + 1)])
    s = list(R.gens)
    lam = _squares_relations(s, R.one(), p)
    ideal = lam if ci else lam[: p - 1] + [s[p - 1]]

    C = _coords([f"x{i}" for i in range(1, p + 1)])
    images = [elementary_symmetric(k, list(C.gens)) for k in range(1, p + 1)]
    forms = []
    for i in range(p):
        for j in range(i if ci else i + 1, p):
            forms.append([a + b for a, b in zip(_unit(p, i), _unit(p, j))])

    def weights(Q):
        X = _Block(Q.one(), p, [Q(x) for x in s])
        return IsotropyWeights(Q, C, forms, images, [("diag" if ci else "sum_pairs", (X,))])

    return R, ideal, weights


def _bdi_block_vars(tag: str, size: int, pfaffian: bool):
    """Variable names/weights for an SO(2n) (pfaffian) or SO(2n+1) block."""
    if pfaffian:
        names = [f"l{tag}{k}" for k in range(1, size)] + [f"e{tag}"]
        wts = [4 * k for k in range(1, size)] + [2 * size]
    else:
        names = [f"l{tag}{k}" for k in range(1, size + 1)]
        wts = [4 * k for k in range(1, size + 1)]
    return names, wts


def _build_bdi(p, q):
    both_even = p % 2 == 0 and q % 2 == 0
    if both_even:
        a, b = p // 2, q // 2
    else:  # x is the even block (type D), y the odd block (type B)
        even, odd = (p, q) if p % 2 == 0 else (q, p)
        a, b = even // 2, odd // 2
    nx, wx = _bdi_block_vars("x", a, True)
    ny, wy = _bdi_block_vars("y", b, both_even)
    R = PolyRing(nx + ny, wx + wy)
    g = R.gens
    gx, gy = list(g[: len(nx)]), list(g[len(nx):])

    def lambdas(gens, size, pf):
        if pf:
            return gens[:-1] + [gens[-1] * gens[-1]]
        return gens

    lx = lambdas(gx, a, True)
    ly = lambdas(gy, b, both_even) if b else []
    ideal = []
    top_k = a + b - 1 if both_even else a + b
    for k in range(1, top_k + 1):
        acc = R.zero()
        for i in range(0, k + 1):
            li = R.one() if i == 0 else (lx[i - 1] if i <= a else None)
            lj = R.one() if k - i == 0 else (ly[k - i - 1] if k - i <= b else None)
            if li is not None and lj is not None:
                acc = acc + li * lj
        ideal.append(acc)
    if both_even:
        ideal.append(gx[-1] * gy[-1])

    n = a + b
    C = _coords([f"x{i}" for i in range(1, a + 1)] + [f"y{j}" for j in range(1, b + 1)])
    cx, cy = list(C.gens[:a]), list(C.gens[a:])

    def block_images(cs, size, pf):
        sq = [c * c for c in cs]
        lam = [elementary_symmetric(k, sq) for k in range(1, size + 1)]
        if pf:
            return lam[:-1] + [prod(cs, start=C.one())]
        return lam

    images = block_images(cx, a, True) + (block_images(cy, b, both_even) if b else [])

    # SO(2) blocks are U(1): keep all power sums available (Hermitian case).
    first, second = ("x", "y")
    if both_even and b == 1 and a > 1:
        first, second = ("y", "x")
    forms = []
    idx = {"x": (0, a), "y": (a, b)}
    (fo, fs), (so, ss) = idx[first], idx[second]
    for i in range(fs):
        for j in range(ss):
            for sgn in (1, -1):
                forms.append([u + sgn * v for u, v in zip(_unit(n, fo + i), _unit(n, so + j))])
    if not both_even:
        for i in range(a):
            forms.append(_unit(n, i))

    def make_block(Q, gens, size, pf):
        one = Q.one()
        if pf and size == 1:
            return _Block(one, 1, [Q(gens[0])])
        lam = [Q(x) for x in lambdas(gens, size, pf)]
        return _Block(one, size, lam, squares=True, pfaffian=Q(gens[-1]) if pf else None)

    def weights(Q):
        X = make_block(Q, gx, a, True)
        Y = make_block(Q, gy, b, both_even) if b else _Block(Q.one(), 0, [], squares=True)
        blocks = {"x": X, "y": Y}
        fams = [("pm", (blocks[first], blocks[second]))]
        if not both_even:
            fams.append(("single", (X,)))
        return IsotropyWeights(Q, C, forms, images, fams)

    return R, ideal, weights


def _subduction(R: PolyRing, images: list[Poly]):
    """Rewrite W_K-invariant coordinate polynomials in the generators of R."""
    cache: dict[tuple[int, ...], Poly] = {}

    def expand(exp):
        got = cache.get(exp)
        if got is None:
            got = R.monomial(exp).compose(images)
            cache[exp] = got
        return got

    def subduce(f: Poly) -> Poly:
        if f.is_zero():
            return R.zero()
        if not f.is_homogeneous():
            raise ValueError("subduction expects a homogeneous polynomial")
        monos = R.monomials_of_degree(f.degree())
        cols = [expand(m).terms for m in monos]
        sol = solve_columns(cols, f.terms)
        if sol is None:
            raise ArithmeticError("polynomial is not in the invariant subring")
        return R.from_terms({m: c for m, c in zip(monos, sol) if c})

    return subduce


def _build_generic(space: SpaceId):
    pair = dual_pair_unchecked(space)
    U = pair.U_root_system
    comp = pair.complementary_roots
    if space.family == "G2SO4":
        # coordinates u = <long, t>, v = <short, t> along the K-roots; forms scaled by 6
        long_, short = (-1, -1, 2), (1, -1, 0)

        def to_coords(r):
            return (sum(a * b for a, b in zip(r, long_)), 3 * sum(a * b for a, b in zip(r, short)))

        C = _coords(["u", "v"])
        u, v = C.gens
        R = PolyRing(["ql", "qs"], [4, 4])
        images = [u * u, v * v]
        degrees = (2, 6)
    elif space.family == "FII":
        def to_coords(r):
            return tuple(r)

        C = _coords([f"t{i}" for i in range(1, 5)])
        sq = [t * t for t in C.gens]
        R = PolyRing([f"l{k}" for k in range(1, 5)], [4, 8, 12, 16])
        images = [elementary_symmetric(k, sq) for k in range(1, 5)]
        degrees = (2, 6, 8, 12)
    else:
        raise UnsupportedSpace(f"{space}: cohomology ring not built (stretch family)")

    short_len = min(sum(x * x for x in r) for r in U.positive_roots)
    shorts = [to_coords(r) for r in U.positive_roots if sum(x * x for x in r) == short_len]
    subduce = _subduction(R, images)
    gens = C.gens

    def form_poly(f):
        acc = C.zero()
        for c, g in zip(f, gens):
            if c:
                acc = acc + g * c
        return acc

    ideal = []
    for d in degrees:
        inv = C.zero()
        for r in shorts:
            inv = inv + form_poly(r) ** d
        ideal.append(subduce(inv))
    forms = [to_coords(r) for r in comp]

    def weights(Q):
        return IsotropyWeights(Q, C, forms, images, subduce=subduce)

    return R, ideal, weights


def _raw_presentation(space: SpaceId):
    _check_structure(space)
    f, p = space.family, space.params
    if f == "AIII":
        return _build_aiii(p[0], p[1])
    if f == "CII":
        return _build_aiii(p[0], p[1], squares=True)
    if f == "DIII":
        return _build_diii_ci(p[0], ci=False)
    if f == "CI":
        return _build_diii_ci(p[0], ci=True)
    if f == "BDI":
        return _build_bdi(p[0], p[1])
    if f in ("G2SO4", "FII"):
        return _build_generic(space)
    raise UnsupportedSpace(f"{space}: cohomology ring not built")


@lru_cache(maxsize=None)
def _uncalibrated(space: SpaceId) -> CohomologyPresentation:
    R, ideal, make_weights = _raw_presentation(space)
    gb = buchberger(ideal)
    Q = QuotientRing(gb)
    poincare = hirsch_poincare(space)
    hilbert = Q.hilbert()
    for k, b in enumerate(poincare):
        if hilbert.get(k, 0) != b:
            raise ArithmeticError(
                f"{space}: quotient dimension {hilbert.get(k, 0)} in degree {k}, Hirsch gives {b}"
            )
    top = len(poincare) - 1
    (m0,) = Q.basis_by_degree[top]
    return CohomologyPresentation(
        space=space,
        ring=R,
        ideal=tuple(ideal),
        gb=gb,
        quotient=Q,
        poincare=poincare,
        top_degree=top,
        euler_characteristic=sum(poincare),
        top_monomial=m0,
        weights=make_weights(Q),
    )


def euler_class(pres: CohomologyPresentation) -> RingElement:
    """Normal form of the product of the positive complementary roots."""
    return pres.weights.euler()


def calibrate(pres: CohomologyPresentation, euler: RingElement) -> CohomologyPresentation:
    """Fix integration so that the Euler class integrates to chi."""
    mu = euler.poly.coeff(pres.top_monomial)
    if mu == 0:
        raise DegenerateEulerClass(f"{pres.space}: Euler class reduces to 0")
    return replace(pres, calibration=Fraction(pres.euler_characteristic) / mu)


@lru_cache(maxsize=None)
def presentation(space: SpaceId) -> CohomologyPresentation:
    """Calibrated cohomology ring of the compact dual of ``space``."""
    if space.family in STRETCH:
        raise UnsupportedSpace(f"{space}: E-type cohomology rings are not built")
    pres = _uncalibrated(space)
    return calibrate(pres, euler_class(pres))


def integrate(pres: CohomologyPresentation, omega) -> Fraction:
    """Evaluate a class on the fundamental class.

    Components below the top degree integrate to 0; a polynomial with
    terms above the top degree is rejected.
    """
    if pres.calibration is None:
        raise ValueError("presentation is not calibrated")
    if isinstance(omega, (int, Fraction)):
        omega = pres.quotient(omega)
    if isinstance(omega, Poly):
        if not omega.is_zero() and omega.degree() > pres.top_degree:
            raise DegreeAboveTop(f"degree {omega.degree()} exceeds {pres.top_degree}")
        omega = pres.quotient(omega)
    return omega.poly.coeff(pres.top_monomial) * pres.calibration


__all__ = [
    "CohomologyPresentation",
    "IsotropyWeights",
    "SUPPORTED",
    "calibrate",
    "euler_characteristic",
    "euler_class",
    "format_poincare",
    "hirsch_poincare",
    "integrate",
    "invariant_degrees",
    "presentation",
]
