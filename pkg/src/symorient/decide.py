"""Orientation-reversal classifier, degree sets and related bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable

from .classification import Classification, Justification, Reason, Verdict
from .cohomology import euler_characteristic
from .errors import InvalidParameters, ZeroEulerCharacteristic
from .rootsys import classify_type4, simple_types
from .spaces import SpaceId, complex_dimension, validate

OR, OP = Verdict.OR, Verdict.OP


def _j(reason: Reason, tag=None, partition=None) -> Justification:
    return Justification(reason, tag, tuple(partition) if partition is not None else None)


# ----------------------------------------------------------------------------
# rules (one callable per family; tests patch this registry)


def _rule_ai(space):
    (n,) = space.params
    if n % 2 == 0:
        return Classification(OR, _j(Reason.EXPLICIT_ISOMETRY, "conj-D"))
    if n % 4 == 3:
        return Classification(OR, _j(Reason.ODD_DIMENSION))
    return Classification(OP, _j(Reason.ALL_AUTOMORPHISMS_PRESERVE, "outer-group-cartan"))


def _rule_aii(space):
    (n,) = space.params
    if n % 2 == 0:
        return Classification(OR, _j(Reason.ODD_DIMENSION))
    return Classification(OP, _j(Reason.ALL_AUTOMORPHISMS_PRESERVE, "outer-group-cartan"))


def _hermitian(space, partition_if_even=True):
    d = complex_dimension(space)
    if d % 2:
        return Classification(OR, _j(Reason.HERMITIAN_ODD_COMPLEX_DIM))
    if partition_if_even:
        return Classification(OP, _j(Reason.NONZERO_PONTRJAGIN, partition=[1] * (d // 2)))
    return Classification(OP, _j(Reason.NONZERO_SIGNATURE))


def _rule_aiii(space):
    return _hermitian(space, partition_if_even=False)


def _rule_bdi(space):
    p, q = space.params
    if p % 2 and q % 2:
        return Classification(OR, _j(Reason.ODD_DIMENSION))
    if p % 2 or q % 2:
        return Classification(OR, _j(Reason.EXPLICIT_ISOMETRY, "conj-D"))
    if (p * q) % 8 == 0:
        return Classification(OP, _j(Reason.NONZERO_SIGNATURE))
    # both parameters are 2 mod 4 from here on
    if p == q:
        return Classification(OR, _j(Reason.EXPLICIT_ISOMETRY, "J-swap"))
    return Classification(
        OR,
        _j(Reason.EXPLICIT_ISOMETRY, "table-row"),
        disputed=f"p1^{p * q // 4} is nonzero here; the tabulated OR is kept",
    )


def _rule_diii(space):
    return _hermitian(space)


def _rule_ci(space):
    return _hermitian(space)


def _rule_cii(space):
    p, q = space.params
    if p == q and p % 2:
        return Classification(OR, _j(Reason.EXPLICIT_ISOMETRY, "J-swap"))
    if p != q:
        return Classification(OP, _j(Reason.NONZERO_PONTRJAGIN, partition=[1] * (p * q)))
    return Classification(OP, _j(Reason.NONZERO_SIGNATURE))


def _rule_type4(space):
    label, rank = space.params
    return classify_type4(label, rank)


RULES: dict[str, Callable[[SpaceId], Classification]] = {
    "AI": _rule_ai,
    "AII": _rule_aii,
    "AIII": _rule_aiii,
    "BDI": _rule_bdi,
    "DIII": _rule_diii,
    "CI": _rule_ci,
    "CII": _rule_cii,
    "EIII": lambda s: Classification(OP, _j(Reason.NONZERO_SIGNATURE)),
    "EVII": lambda s: Classification(OR, _j(Reason.HERMITIAN_ODD_COMPLEX_DIM)),
    "FII": lambda s: Classification(OP, _j(Reason.NONZERO_PONTRJAGIN, partition=[4])),
    "G2SO4": lambda s: Classification(OP, _j(Reason.NONZERO_PONTRJAGIN, partition=[2])),
    "TypeIV": _rule_type4,
}


def classify(space: SpaceId) -> Classification:
    validate(space)
    return RULES[space.family](space)


# ----------------------------------------------------------------------------
# embedded golden table (transcribed row conditions, independent of RULES)


@dataclass(frozen=True)
class GoldenRow:
    family: str
    condition: str
    applies: Callable[[tuple], bool]
    verdict: Verdict


GOLDEN_TABLE: tuple[GoldenRow, ...] = (
    GoldenRow("AI", "n = 0,2,3 mod 4", lambda p: p[0] % 4 in (0, 2, 3), OR),
    GoldenRow("AI", "n = 1 mod 4", lambda p: p[0] % 4 == 1, OP),
    GoldenRow("AII", "2 | n", lambda p: p[0] % 2 == 0, OR),
    GoldenRow("AII", "2 | n-1", lambda p: p[0] % 2 == 1, OP),
    GoldenRow("AIII", "2 | pq", lambda p: p[0] * p[1] % 2 == 0, OP),
    GoldenRow("AIII", "pq = 1 mod 2", lambda p: p[0] * p[1] % 2 == 1, OR),
    GoldenRow("BDI", "2|p, 2|q, 8|pq", lambda p: p[0] % 2 == 0 and p[1] % 2 == 0 and p[0] * p[1] % 8 == 0, OP),
    GoldenRow("BDI", "otherwise", lambda p: not (p[0] % 2 == 0 and p[1] % 2 == 0 and p[0] * p[1] % 8 == 0), OR),
    GoldenRow("DIII", "n = 2,3 mod 4", lambda p: p[0] % 4 in (2, 3), OR),
    GoldenRow("DIII", "n = 0,1 mod 4", lambda p: p[0] % 4 in (0, 1), OP),
    GoldenRow("CI", "n = 1,2 mod 4", lambda p: p[0] % 4 in (1, 2), OR),
    GoldenRow("CI", "n = 0,3 mod 4", lambda p: p[0] % 4 in (0, 3), OP),
    GoldenRow("CII", "2 | pq or p != q", lambda p: p[0] * p[1] % 2 == 0 or p[0] != p[1], OP),
    GoldenRow("CII", "p = q = 1 mod 2", lambda p: p[0] == p[1] and p[0] % 2 == 1, OR),
    GoldenRow("EIII", "--", lambda p: True, OP),
    GoldenRow("EVII", "--", lambda p: True, OR),
    GoldenRow("FII", "--", lambda p: True, OP),
    GoldenRow("G2SO4", "--", lambda p: True, OP),
    GoldenRow("TypeIV", "dim k odd, su(n) n = 0,3 mod 4, or so(2n) n >= 4", lambda p: _type4_theorem(*p), OR),
    GoldenRow("TypeIV", "otherwise", lambda p: not _type4_theorem(*p), OP),
)


def _type4_theorem(label: str, rank: int) -> bool:
    from .rootsys import build_root_system

    if build_root_system(label, rank).dimension % 2:
        return True
    if label == "A" and (rank + 1) % 4 in (0, 3):
        return True
    return label == "D" and rank >= 4


def golden_verdict(space: SpaceId) -> tuple[Verdict, GoldenRow]:
    rows = [r for r in GOLDEN_TABLE if r.family == space.family and r.applies(space.params)]
    if len(rows) != 1:
        raise LookupError(f"{len(rows)} golden rows match {space}")
    return rows[0].verdict, rows[0]


def default_sweep() -> list[SpaceId]:
    """Parameter sweep covering every congruence class of every row."""
    out: list[SpaceId] = []
    out += [SpaceId("AI", (n,)) for n in range(3, 14)]
    out += [SpaceId("AII", (n,)) for n in range(2, 14)]
    for fam in ("AIII", "BDI", "CII"):
        for p in range(1, 7):
            for q in range(1, 7):
                s = SpaceId(fam, (p, q))
                try:
                    validate(s)
                except InvalidParameters:
                    continue
                out.append(s)
    out += [SpaceId("DIII", (n,)) for n in range(4, 10)]
    out += [SpaceId("CI", (n,)) for n in range(3, 10)]
    out += [SpaceId(f) for f in ("EIII", "EVII", "FII", "G2SO4")]
    out += [SpaceId("TypeIV", (label, rank)) for label, rank in simple_types(8)]
    return out


BLOCK_ORDER = ("AI", "AII", "AIII", "BDI", "DIII", "CI", "CII", "EIII", "EVII", "FII", "G2SO4", "TypeIV")


# ----------------------------------------------------------------------------
# degree sets and indices


class Signs(str, Enum):
    BOTH = "Both"
    ONE_INDETERMINATE = "OneIndeterminate"
    ZERO_ONLY = "ZeroOnly"


@dataclass(frozen=True)
class DegreeSet:
    """Possible degrees {0} or {0, +d, -d} or {0, e*d} with an unknown sign e."""

    delta: int
    signs: Signs

    def __post_init__(self):
        if self.delta < 0:
            raise InvalidParameters("delta must be nonnegative")
        if (self.delta == 0) != (self.signs is Signs.ZERO_ONLY):
            raise ValueError("delta = 0 exactly when only degree 0 occurs")

    def resolutions(self) -> list[frozenset[int]]:
        """Every concrete degree set compatible with this description."""
        d = self.delta
        if self.signs is Signs.ZERO_ONLY:
            return [frozenset({0})]
        if self.signs is Signs.BOTH:
            return [frozenset({0, d, -d})]
        return [frozenset({0, d}), frozenset({0, -d})]

    def __contains__(self, degree: int) -> bool:
        return any(degree in r for r in self.resolutions())

    def __str__(self):
        d = self.delta
        if self.signs is Signs.ZERO_ONLY:
            return "{0}"
        if self.signs is Signs.BOTH:
            return f"{{0,+{d},-{d}}}"
        return f"{{0,eps*{d}}}"


def degree_set(delta: int, or_status) -> DegreeSet:
    verdict = or_status.verdict if isinstance(or_status, Classification) else Verdict(or_status)
    if delta < 0:
        raise InvalidParameters("delta must be nonnegative")
    if delta == 0:
        return DegreeSet(0, Signs.ZERO_ONLY)
    return DegreeSet(delta, Signs.BOTH if verdict is OR else Signs.ONE_INDETERMINATE)


def minimal_index_candidate(chi_gamma: int, chi_lambda: int) -> int:
    """Only possible index of a subgroup of Lambda isomorphic to Gamma (0 if none)."""
    if chi_gamma == 0 or chi_lambda == 0:
        raise ZeroEulerCharacteristic("Euler characteristics must be nonzero")
    r = Fraction(chi_gamma, chi_lambda)
    if r > 0 and r.denominator == 1:
        return int(r)
    return 0


class FixedPoint(str, Enum):
    HAS_FPP = "HasFPP"
    ADMITS_FIXED_POINT_FREE = "AdmitsFixedPointFreeDiffeo"
    UNKNOWN = "Unknown"


def fixed_point_certificate(
    space: SpaceId,
    rank_at_least_2: bool,
    out_trivial: bool,
    cocompact: bool,
    normalizer_equals_lattice: bool,
    normalizer_torsionless: bool = True,
) -> FixedPoint:
    """Fixed-point property of Gamma\\G/K from caller-supplied group data.

    Lefschetz numbers of self-maps homotopic to isometries equal chi(X),
    which is proportional to chi(U/K); a vanishing Euler characteristic or
    a strictly larger torsionless normalizer gives fixed-point-free maps.
    """
    validate(space)
    if euler_characteristic(space) == 0:
        return FixedPoint.ADMITS_FIXED_POINT_FREE
    if rank_at_least_2 and out_trivial and cocompact and normalizer_equals_lattice:
        return FixedPoint.HAS_FPP
    if not normalizer_equals_lattice and normalizer_torsionless:
        return FixedPoint.ADMITS_FIXED_POINT_FREE
    return FixedPoint.UNKNOWN


__all__ = [
    "Classification",
    "Verdict",
    "BLOCK_ORDER",
    "DegreeSet",
    "FixedPoint",
    "GOLDEN_TABLE",
    "GoldenRow",
    "RULES",
    "Signs",
    "classify",
    "default_sweep",
    "degree_set",
    "fixed_point_certificate",
    "golden_verdict",
    "minimal_index_candidate",
]
