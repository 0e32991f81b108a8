"""Verdict and justification types shared by the classifiers."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Verdict(str, Enum):
    OR = "OR"  # some isometry reverses orientation
    OP = "OP"  # every isometry preserves orientation


class Reason(str, Enum):
    ODD_DIMENSION = "OddDimension"
    HERMITIAN_ODD_COMPLEX_DIM = "HermitianOddComplexDim"
    DIAGRAM_PARITY_ODD = "DiagramParityOdd"
    EXPLICIT_ISOMETRY = "ExplicitIsometryRule"
    NONZERO_PONTRJAGIN = "NonzeroPontrjaginNumber"
    NONZERO_SIGNATURE = "NonzeroSignature"
    ALL_AUTOMORPHISMS_PRESERVE = "AllAutomorphismsPreserve"


EXISTENCE_REASONS = frozenset(
    {
        Reason.ODD_DIMENSION,
        Reason.HERMITIAN_ODD_COMPLEX_DIM,
        Reason.DIAGRAM_PARITY_ODD,
        Reason.EXPLICIT_ISOMETRY,
    }
)
OBSTRUCTION_REASONS = frozenset(
    {
        Reason.NONZERO_PONTRJAGIN,
        Reason.NONZERO_SIGNATURE,
        Reason.ALL_AUTOMORPHISMS_PRESERVE,
    }
)


@dataclass(frozen=True)
class Justification:
    reason: Reason
    tag: str | None = None
    partition: tuple[int, ...] | None = None

    def __str__(self):
        if self.partition is not None:
            return f"{self.reason.value}({','.join(map(str, self.partition))})"
        if self.tag is not None:
            return f"{self.reason.value}({self.tag})"
        return self.reason.value


@dataclass(frozen=True)
class Classification:
    """OR/OP verdict with the clause that produced it.

    ``disputed`` carries a note when the tabulated verdict disagrees with an
    obstruction the library can compute for the same space.
    """

    verdict: Verdict
    justification: Justification
    disputed: str | None = None

    def __post_init__(self):
        reason = self.justification.reason
        if self.verdict is Verdict.OR and reason not in EXISTENCE_REASONS:
            raise ValueError(f"OR verdict needs an existence reason, got {reason}")
        if self.verdict is Verdict.OP and reason not in OBSTRUCTION_REASONS:
            raise ValueError(f"OP verdict needs an obstruction reason, got {reason}")
