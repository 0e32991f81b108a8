"""Catalog of irreducible symmetric spaces and their compact-dual root data."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidParameters, InvalidType, SpaceParseError
from .rootsys import RootSystem, build_root_system

CLASSICAL = ("AI", "AII", "AIII", "BDI", "DIII", "CI", "CII")
EXCEPTIONAL = ("EIII", "EVII", "FII", "G2SO4")
FAMILIES = CLASSICAL + EXCEPTIONAL + ("TypeIV",)

_ARITY = {
    "AI": 1, "AII": 1, "AIII": 2, "BDI": 2, "DIII": 1, "CI": 1, "CII": 2,
    "EIII": 0, "EVII": 0, "FII": 0, "G2SO4": 0, "TypeIV": 2,
}
_ALIASES = {f.upper(): f for f in FAMILIES}
_ALIASES.update({"G": "G2SO4", "G2": "G2SO4", "TYPE4": "TypeIV", "IV": "TypeIV"})

HERMITIAN_FAMILIES = ("AIII", "DIII", "BDI", "CI", "EIII", "EVII")


@dataclass(frozen=True)
class SpaceId:
    """A symmetric space family with its parameters.

    ``BDI(p, q)`` is the oriented Grassmannian SO(p+q)/SO(p)xSO(q);
    ``TypeIV(label, rank)`` is identified by the compact simple algebra k.
    Construction does not check parameter ranges; :func:`validate` does.
    """

    family: str
    params: tuple = ()

    def __post_init__(self):
        fam = _ALIASES.get(str(self.family).upper())
        if fam is None:
            raise InvalidParameters(f"unknown family {self.family!r}")
        object.__setattr__(self, "family", fam)
        params = tuple(self.params)
        if len(params) != _ARITY[fam]:
            raise InvalidParameters(f"{fam} takes {_ARITY[fam]} parameter(s), got {len(params)}")
        if fam == "TypeIV":
            label, rank = params
            params = (str(label).upper(), int(rank))
        else:
            params = tuple(int(p) for p in params)
        object.__setattr__(self, "params", params)

    def __str__(self):
        return format_space(self)

    @property
    def is_exceptional(self) -> bool:
        return self.family in EXCEPTIONAL


def AI(n): return SpaceId("AI", (n,))  # noqa: E704
def AII(n): return SpaceId("AII", (n,))  # noqa: E704
def AIII(p, q): return SpaceId("AIII", (p, q))  # noqa: E704
def BDI(p, q): return SpaceId("BDI", (p, q))  # noqa: E704
def DIII(n): return SpaceId("DIII", (n,))  # noqa: E704
def CI(n): return SpaceId("CI", (n,))  # noqa: E704
def CII(p, q): return SpaceId("CII", (p, q))  # noqa: E704


EIII = SpaceId("EIII")
EVII = SpaceId("EVII")
FII = SpaceId("FII")
G2SO4 = SpaceId("G2SO4")


def TypeIV(label, rank): return SpaceId("TypeIV", (label, rank))  # noqa: E704


# -- text grammar --------------------------------------------------------------

_GRAMMAR = re.compile(r"^\s*([A-Za-z][A-Za-z0-9]*)\s*(?::\s*(.*?))?\s*$")


def parse_space(text: str) -> SpaceId:
    """Parse ``FAMILY[:param[,param]]`` (family tags are case-insensitive)."""
    m = _GRAMMAR.match(text or "")
    if not m:
        raise SpaceParseError(f"cannot parse space descriptor {text!r}")
    tag, rest = m.group(1), m.group(2)
    fam = _ALIASES.get(tag.upper())
    if fam is None:
        raise SpaceParseError(f"unknown family {tag!r}")
    raw = [p.strip() for p in rest.split(",")] if rest else []
    if raw == [""]:
        raw = []
    if len(raw) != _ARITY[fam]:
        raise SpaceParseError(f"{fam} expects {_ARITY[fam]} parameter(s), got {len(raw)}")
    params: list = []
    for i, p in enumerate(raw):
        if fam == "TypeIV" and i == 0:
            if not re.fullmatch(r"[A-Za-z][0-9]?", p):
                raise SpaceParseError(f"bad Cartan label {p!r}")
            params.append(p.upper())
            continue
        if not re.fullmatch(r"[+-]?\d+", p):
            raise SpaceParseError(f"parameter {p!r} is not an integer")
        params.append(int(p))
    return SpaceId(fam, tuple(params))


def format_space(space: SpaceId) -> str:
    if not space.params:
        return space.family
    return f"{space.family}:{','.join(str(p) for p in space.params)}"


# -- validation and root data --------------------------------------------------


@dataclass(frozen=True)
class KEmbedding:
    """Isotropy subgroup K described inside U's ambient coordinates."""

    factors: tuple[str, ...]
    torus_rank: int
    roots: tuple[tuple[int, ...], ...] | None  # all roots of K (both signs); None if unequal rank
    invariant_degrees: tuple[int, ...] | None  # Weyl degrees of K, torus contributing 1s


@dataclass(frozen=True)
class DualPair:
    space: SpaceId
    U_root_system: RootSystem
    K_embedding: KEmbedding
    equal_rank: bool
    real_dimension: int
    complex_dimension: int | None
    hermitian: bool

    @property
    def complementary_roots(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots of U that are not roots of K."""
        if self.K_embedding.roots is None:
            raise ValueError("complementary roots need an equal-rank pair")
        k = set(self.K_embedding.roots)
        return tuple(r for r in self.U_root_system.positive_roots if r not in k)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidParameters(message)


def check_parameters(space: SpaceId) -> None:
    f, p = space.family, space.params
    if f == "AI":
        _require(p[0] > 2, "AI(n) requires n > 2")
    elif f == "AII":
        _require(p[0] >= 2, "AII(n) requires n >= 2")
    elif f in ("AIII", "CII"):
        _require(p[0] >= 1 and p[1] >= 1, f"{f}(p,q) requires p, q >= 1")
    elif f == "BDI":
        _require(p[0] > 1 and p[1] > 1, "BDI(p,q) requires p, q > 1")
        _require(p[0] + p[1] > 4, "BDI(p,q) requires p + q > 4")
    elif f == "DIII":
        _require(p[0] >= 4, "DIII(n) requires n >= 4")
    elif f == "CI":
        _require(p[0] >= 3, "CI(n) requires n >= 3")
    elif f == "TypeIV":
        try:
            build_root_system(p[0], p[1])
        except InvalidType as exc:
            raise InvalidParameters(str(exc)) from exc


def dimension(space: SpaceId) -> int:
    """Real dimension of the symmetric space."""
    check_parameters(space)
    f, p = space.family, space.params
    return _dimension_unchecked(f, p)


def _dimension_unchecked(f, p) -> int:
    if f == "AI":
        return (p[0] + 2) * (p[0] - 1) // 2
    if f == "AII":
        return (p[0] - 1) * (2 * p[0] + 1)
    if f == "AIII":
        return 2 * p[0] * p[1]
    if f == "BDI":
        return p[0] * p[1]
    if f == "DIII":
        return p[0] * (p[0] - 1)
    if f == "CI":
        return p[0] * (p[0] + 1)
    if f == "CII":
        return 4 * p[0] * p[1]
    if f == "TypeIV":
        return build_root_system(p[0], p[1]).dimension
    return {"EVII": 54, "EIII": 32, "FII": 16, "G2SO4": 8}[f]


def complex_dimension(space: SpaceId) -> int | None:
    if not is_hermitian(space):
        return None
    return _dimension_unchecked(space.family, space.params) // 2


def is_hermitian(space: SpaceId) -> bool:
    if space.family == "BDI":
        return 2 in space.params
    return space.family in HERMITIAN_FAMILIES


def _so_roots(offset: int, m: int, ambient: int, scale: int = 1):
    """Roots of SO(m) on coordinates offset..offset+floor(m/2)-1."""
    k = m // 2
    out = []
    for i in range(offset, offset + k):
        for j in range(i + 1, offset + k):
            for si in (1, -1):
                for sj in (1, -1):
                    v = [0] * ambient
                    v[i], v[j] = si * scale, sj * scale
                    out.append(tuple(v))
        if m % 2:
            for s in (1, -1):
                v = [0] * ambient
                v[i] = s * scale
                out.append(tuple(v))
    return out


def _sp_roots(offset: int, n: int, ambient: int):
    out = _so_roots(offset, 2 * n, ambient)
    for i in range(offset, offset + n):
        for s in (2, -2):
            v = [0] * ambient
            v[i] = s
            out.append(tuple(v))
    return out


def _type_a_roots(indices, ambient: int):
    out = []
    for i in indices:
        for j in indices:
            if i != j:
                v = [0] * ambient
                v[i], v[j] = 1, -1
                out.append(tuple(v))
    return out


def _levi_roots(rs: RootSystem, removed_nodes):
    """Roots of the Levi subsystem obtained by deleting Dynkin nodes (1-based)."""
    out = []
    for coeffs, root in zip(rs.positive_coefficients, rs.positive_roots):
        if all(coeffs[n - 1] == 0 for n in removed_nodes):
            out.append(root)
            out.append(tuple(-x for x in root))
    return out


def _deg_a(n):  # U(n)
    return tuple(range(1, n + 1))


def _deg_so(m):
    k = m // 2
    if m == 2:
        return (1,)
    if m % 2:
        return tuple(2 * i for i in range(1, k + 1))
    return tuple(2 * i for i in range(1, k)) + (k,)


def _deg_sp(n):
    return tuple(2 * i for i in range(1, n + 1))


@lru_cache(maxsize=None)
def _dual_pair(space: SpaceId) -> DualPair:
    f, p = space.family, space.params
    real_dim = _dimension_unchecked(f, p)
    herm = is_hermitian(space)
    cdim = real_dim // 2 if herm else None

    if f == "AI":
        U = build_root_system("A", p[0] - 1)
        K = KEmbedding((f"SO({p[0]})",), 0, None, None)
        return DualPair(space, U, K, False, real_dim, cdim, herm)
    if f == "AII":
        U = build_root_system("A", 2 * p[0] - 1)
        K = KEmbedding((f"Sp({p[0]})",), 0, None, None)
        return DualPair(space, U, K, False, real_dim, cdim, herm)
    if f == "AIII":
        a, b = p
        U = build_root_system("A", a + b - 1)
        roots = _type_a_roots(range(a), a + b) + _type_a_roots(range(a, a + b), a + b)
        degs = _deg_a(a) + _deg_a(b)[1:]  # S(U(a) x U(b)) drops one torus degree
        K = KEmbedding((f"U({a})", f"U({b})"), 1, tuple(roots), degs)
        return DualPair(space, U, K, True, real_dim, cdim, herm)
    if f == "BDI":
        a, b = p
        n = (a + b) // 2
        U = build_root_system("B" if (a + b) % 2 else "D", n) if n >= 2 else None
        factors = (f"SO({a})", f"SO({b})")
        if a % 2 and b % 2:
            return DualPair(space, U, KEmbedding(factors, 0, None, None), False, real_dim, cdim, herm)
        roots = _so_roots(0, a, n) + _so_roots(a // 2, b, n)
        degs = _deg_so(a) + _deg_so(b)
        return DualPair(space, U, KEmbedding(factors, 0, tuple(roots), degs), True, real_dim, cdim, herm)
    if f == "DIII":
        n = p[0]
        U = build_root_system("D", n)
        K = KEmbedding((f"U({n})",), 1, tuple(_type_a_roots(range(n), n)), _deg_a(n))
        return DualPair(space, U, K, True, real_dim, cdim, herm)
    if f == "CI":
        n = p[0]
        U = build_root_system("C", n) if n >= 2 else build_root_system("A", 1)
        roots = _type_a_roots(range(n), n)
        K = KEmbedding((f"U({n})",), 1, tuple(roots), _deg_a(n))
        return DualPair(space, U, K, True, real_dim, cdim, herm)
    if f == "CII":
        a, b = p
        U = build_root_system("C", a + b)
        roots = _sp_roots(0, a, a + b) + _sp_roots(a, b, a + b)
        K = KEmbedding((f"Sp({a})", f"Sp({b})"), 0, tuple(roots), _deg_sp(a) + _deg_sp(b))
        return DualPair(space, U, K, True, real_dim, cdim, herm)
    if f == "G2SO4":
        U = build_root_system("G2", 2)
        long_, short = (-1, -1, 2), (1, -1, 0)
        roots = (long_, tuple(-x for x in long_), short, tuple(-x for x in short))
        K = KEmbedding(("SU(2)", "SU(2)"), 0, roots, (2, 2))
        return DualPair(space, U, K, True, real_dim, cdim, herm)
    if f == "FII":
        U = build_root_system("F4", 4)
        roots = [r for r in U.roots if all(x % 2 == 0 for x in r)]
        K = KEmbedding(("Spin(9)",), 0, tuple(roots), (2, 4, 6, 8))
        return DualPair(space, U, K, True, real_dim, cdim, herm)
    if f == "EIII":
        U = build_root_system("E6", 6)
        roots = _levi_roots(U, [1])
        K = KEmbedding(("Spin(10)", "U(1)"), 1, tuple(roots), (2, 4, 5, 6, 8, 1))
        return DualPair(space, U, K, True, real_dim, cdim, herm)
    if f == "EVII":
        U = build_root_system("E7", 7)
        roots = _levi_roots(U, [7])
        K = KEmbedding(("E6", "U(1)"), 1, tuple(roots), (2, 5, 6, 8, 9, 12, 1))
        return DualPair(space, U, K, True, real_dim, cdim, herm)
    if f == "TypeIV":
        k = build_root_system(p[0], p[1])
        K = KEmbedding((k.name,), 0, None, None)
        return DualPair(space, k, K, False, k.dimension, None, False)
    raise InvalidParameters(f"unhandled family {f}")


def validate(space: SpaceId) -> DualPair:
    """Check parameter ranges and return the compact dual's root data."""
    check_parameters(space)
    return _dual_pair(space)


def dual_pair_unchecked(space: SpaceId) -> DualPair:
    """Root data without the range checks (for small auxiliary cases such as DIII(3))."""
    return _dual_pair(space)


__all__ = [
    "SpaceId", "DualPair", "KEmbedding", "FAMILIES", "CLASSICAL", "EXCEPTIONAL",
    "HERMITIAN_FAMILIES", "AI", "AII", "AIII", "BDI", "DIII", "CI", "CII",
    "EIII", "EVII", "FII", "G2SO4", "TypeIV", "parse_space", "format_space",
    "validate", "dimension", "complex_dimension", "is_hermitian", "check_parameters",
    "dual_pair_unchecked",
]
