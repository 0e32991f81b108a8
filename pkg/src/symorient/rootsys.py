"""Simple root systems, Dynkin diagram automorphisms and the type IV criterion.

Positive roots are generated by reflection closure from the Cartan matrix
and realised in orthonormal coordinates scaled to integers.  Fundamental
degrees are read off the height distribution of the positive roots, so the
Weyl group order is derived rather than tabulated.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod

from .classification import Classification, Justification, Reason, Verdict
from .errors import InvalidType

LABELS = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2")
_FIXED_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}


@dataclass(frozen=True)
class RootSystem:
    label: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    simple_roots: tuple[tuple[int, ...], ...]  # ambient integer coordinates
    positive_roots: tuple[tuple[int, ...], ...]  # ambient integer coordinates
    positive_coefficients: tuple[tuple[int, ...], ...]  # in the simple-root basis
    invariant_degrees: tuple[int, ...]
    weyl_order: int

    @property
    def dimension(self) -> int:
        """Dimension of the compact simple Lie algebra."""
        return self.rank + 2 * len(self.positive_roots)

    @property
    def name(self) -> str:
        return self.label if self.label in _FIXED_RANK else f"{self.label}{self.rank}"

    @property
    def roots(self) -> tuple[tuple[int, ...], ...]:
        neg = tuple(tuple(-x for x in r) for r in self.positive_roots)
        return self.positive_roots + neg


@dataclass(frozen=True)
class DiagramAutomorphism:
    permutation: tuple[int, ...]  # 1-based images of nodes 1..rank
    sign: int

    def compose(self, other: DiagramAutomorphism) -> DiagramAutomorphism:
        """``self`` after ``other``."""
        perm = tuple(self.permutation[other.permutation[i] - 1] for i in range(len(self.permutation)))
        return DiagramAutomorphism(perm, permutation_sign(perm))

    def inverse(self) -> DiagramAutomorphism:
        inv = [0] * len(self.permutation)
        for i, j in enumerate(self.permutation):
            inv[j - 1] = i + 1
        return DiagramAutomorphism(tuple(inv), self.sign)

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self.permutation) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self.permutation[start - 1]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self.permutation[nxt - 1]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out


def permutation_sign(perm) -> int:
    """Sign of a 1-based permutation, counted through its cycles."""
    n = len(perm)
    seen = [False] * n
    sign = 1
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _check_type(label: str, rank: int) -> str:
    label = label.upper()
    if label in _FIXED_RANK:
        if rank != _FIXED_RANK[label]:
            raise InvalidType(f"{label} has rank {_FIXED_RANK[label]}, not {rank}")
        return label
    # allow "E" + rank spelling
    if label in ("E", "F", "G"):
        full = f"{label}{rank}"
        if full in _FIXED_RANK:
            return full
        raise InvalidType(f"no simple type {label}{rank}")
    minimum = {"A": 1, "B": 2, "C": 2, "D": 3}.get(label)
    if minimum is None:
        raise InvalidType(f"unknown Cartan label {label!r}")
    if not isinstance(rank, int) or rank < minimum:
        raise InvalidType(f"{label}{rank} is not a simple type (rank >= {minimum})")
    return label


def _simple_roots(label: str, n: int) -> list[tuple[int, ...]]:
    """Simple roots in orthonormal coordinates, scaled to integer vectors."""
    def e(i, dim, scale=1):
        v = [0] * dim
        v[i] = scale
        return v

    def sub(a, b):
        return tuple(x - y for x, y in zip(a, b))

    def add(a, b):
        return tuple(x + y for x, y in zip(a, b))

    if label == "A":
        return [sub(e(i, n + 1), e(i + 1, n + 1)) for i in range(n)]
    if label == "B":
        roots = [sub(e(i, n), e(i + 1, n)) for i in range(n - 1)]
        return roots + [tuple(e(n - 1, n))]
    if label == "C":
        roots = [sub(e(i, n), e(i + 1, n)) for i in range(n - 1)]
        return roots + [tuple(e(n - 1, n, 2))]
    if label == "D":
        roots = [sub(e(i, n), e(i + 1, n)) for i in range(n - 1)]
        return roots + [add(e(n - 2, n), e(n - 1, n))]
    if label == "G2":
        return [(1, -1, 0), (-2, 1, 1)]
    if label == "F4":
        # doubled coordinates
        return [(0, 2, -2, 0), (0, 0, 2, -2), (0, 0, 0, 2), (1, -1, -1, -1)]
    if label in ("E6", "E7", "E8"):
        # doubled coordinates of the E8 lattice
        e8 = [
            (1, -1, -1, -1, -1, -1, -1, 1),
            (2, 2, 0, 0, 0, 0, 0, 0),
            (-2, 2, 0, 0, 0, 0, 0, 0),
            (0, -2, 2, 0, 0, 0, 0, 0),
            (0, 0, -2, 2, 0, 0, 0, 0),
            (0, 0, 0, -2, 2, 0, 0, 0),
            (0, 0, 0, 0, -2, 2, 0, 0),
            (0, 0, 0, 0, 0, -2, 2, 0),
        ]
        return e8[: _FIXED_RANK[label]]
    raise InvalidType(label)


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def cartan_from_roots(simple: list[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    """``a_ij = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)``."""
    rows = []
    for a in simple:
        row = []
        for b in simple:
            q = Fraction(2 * _dot(a, b), _dot(b, b))
            if q.denominator != 1:
                raise InvalidType("simple roots do not form a root basis")
            row.append(int(q))
        rows.append(tuple(row))
    return tuple(rows)


def cartan_matrix(label: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix written directly from the Dynkin diagram."""
    label = _check_type(label, rank)
    n = rank
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    if label in ("A", "B", "C", "D"):
        for i in range(n - 1):
            if label == "D" and i == n - 2:
                continue
            m[i][i + 1] = m[i + 1][i] = -1
        if label == "B":
            m[n - 2][n - 1] = -2  # short last node
        elif label == "C":
            m[n - 1][n - 2] = -2  # long last node
        elif label == "D":
            m[n - 3][n - 1] = m[n - 1][n - 3] = -1
    elif label == "G2":
        m[0][1], m[1][0] = -1, -3
    elif label == "F4":
        m[0][1] = m[1][0] = -1
        m[1][2], m[2][1] = -2, -1
        m[2][3] = m[3][2] = -1
    else:  # E series, Bourbaki numbering
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4), (6, 7), (7, 8)]
        for a, b in edges:
            if a <= n and b <= n:
                m[a - 1][b - 1] = m[b - 1][a - 1] = -1
    return tuple(tuple(r) for r in m)


def _closure(cartan) -> list[tuple[int, ...]]:
    """Positive roots (simple-root coefficients) by reflection closure."""
    n = len(cartan)
    simple = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for j in range(n):
                pairing = sum(beta[i] * cartan[i][j] for i in range(n))
                image = list(beta)
                image[j] -= pairing
                image = tuple(image)
                if all(c >= 0 for c in image) and any(image) and image not in found:
                    found.add(image)
                    nxt.append(image)
        frontier = nxt
    return sorted(found, key=lambda r: (sum(r), tuple(-c for c in r)))


def degrees_from_heights(coefficients) -> tuple[int, ...]:
    """Fundamental degrees from the height partition of the positive roots."""
    heights = Counter(sum(r) for r in coefficients)
    top = max(heights) if heights else 0
    exponents = []
    for k in range(1, top + 1):
        exponents += [k] * (heights.get(k, 0) - heights.get(k + 1, 0))
    return tuple(sorted(e + 1 for e in exponents))


@lru_cache(maxsize=None)
def build_root_system(label: str, rank: int) -> RootSystem:
    label = _check_type(label, rank)
    cartan = cartan_matrix(label, rank)
    simple = _simple_roots(label, rank)
    if cartan_from_roots(simple) != cartan:
        raise AssertionError(f"realisation of {label}{rank} disagrees with its Cartan matrix")
    coeffs = _closure(cartan)
    ambient = []
    for c in coeffs:
        v = [0] * len(simple[0])
        for k, a in zip(c, simple):
            if k:
                v = [x + k * y for x, y in zip(v, a)]
        ambient.append(tuple(v))
    degrees = degrees_from_heights(coeffs)
    if len(degrees) != rank:
        raise AssertionError("height partition did not produce rank-many degrees")
    return RootSystem(
        label=label,
        rank=rank,
        cartan_matrix=cartan,
        simple_roots=tuple(simple),
        positive_roots=tuple(ambient),
        positive_coefficients=tuple(coeffs),
        invariant_degrees=degrees,
        weyl_order=prod(degrees),
    )


def reflect(v, alpha):
    """Reflection of ``v`` in the hyperplane orthogonal to ``alpha``."""
    q = Fraction(2 * _dot(v, alpha), _dot(alpha, alpha))
    return tuple(x - q * a for x, a in zip(v, alpha))


def diagram_automorphisms(rs: RootSystem) -> list[DiagramAutomorphism]:
    """All node permutations preserving the Cartan matrix (edges and arrows)."""
    cartan = rs.cartan_matrix
    n = rs.rank
    out = []

    def extend(partial):
        k = len(partial)
        if k == n:
            perm = tuple(p + 1 for p in partial)
            out.append(DiagramAutomorphism(perm, permutation_sign(perm)))
            return
        used = set(partial)
        for cand in range(n):
            if cand in used:
                continue
            ok = True
            for i in range(k + 1):
                pi = partial[i] if i < k else cand
                if cartan[k][i] != cartan[cand][pi] or cartan[i][k] != cartan[pi][cand]:
                    ok = False
                    break
            if ok:
                extend(partial + [cand])

    extend([])
    out.sort(key=lambda a: a.permutation)
    return out


def classify_type4(k_label: str, k_rank: int) -> Classification:
    """OR/OP verdict for the type IV space whose compact form has algebra ``k``.

    A Dynkin automorphism acts on the torus by permuting the simple coroots,
    so it reverses orientation on ``i k`` exactly when the node permutation
    is odd; complex conjugation reverses it exactly when ``dim k`` is odd.
    """
    rs = build_root_system(k_label, k_rank)
    if rs.dimension % 2 == 1:
        return Classification(Verdict.OR, Justification(Reason.ODD_DIMENSION))
    odd = [a for a in diagram_automorphisms(rs) if a.sign < 0]
    if odd:
        cycles = " ".join("(" + " ".join(map(str, c)) + ")" for c in odd[0].cycles())
        return Classification(Verdict.OR, Justification(Reason.DIAGRAM_PARITY_ODD, cycles))
    return Classification(
        Verdict.OP, Justification(Reason.ALL_AUTOMORPHISMS_PRESERVE, "diagram-parity")
    )


def simple_types(max_rank: int) -> list[tuple[str, int]]:
    """Every simple type of rank at most ``max_rank`` (no duplicates)."""
    out = []
    for r in range(1, max_rank + 1):
        out.append(("A", r))
        if r >= 2:
            out.append(("B", r))
        if r >= 3:
            out.append(("C", r))
        if r >= 4:
            out.append(("D", r))
    for lab, r in _FIXED_RANK.items():
        if r <= max_rank:
            out.append((lab, r))
    return out


def weyl_group_elements(rs: RootSystem, limit: int = 200_000):
    """Weyl group as rational matrices on ambient coordinates (small types only)."""
    dim = len(rs.simple_roots[0])
    ident = tuple(tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim))
    gens = []
    for a in rs.simple_roots:
        cols = [reflect(tuple(int(i == j) for j in range(dim)), a) for i in range(dim)]
        gens.append(tuple(tuple(cols[j][i] for j in range(dim)) for i in range(dim)))

    def mul(a, b):
        return tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(dim)) for j in range(dim))
            for i in range(dim)
        )

    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = mul(s, g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
                    if len(seen) > limit:
                        raise ValueError("Weyl group too large to enumerate")
        frontier = nxt
    return list(seen)


__all__ = [
    "LABELS",
    "RootSystem",
    "DiagramAutomorphism",
    "build_root_system",
    "cartan_matrix",
    "cartan_from_roots",
    "classify_type4",
    "degrees_from_heights",
    "diagram_automorphisms",
    "permutation_sign",
    "reflect",
    "simple_types",
    "weyl_group_elements",
]
