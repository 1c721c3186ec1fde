"""Rank-k numerical ranges of normal matrices and joint-range membership.

For a normal ``A`` with eigenvalues ``l_1..l_N`` (with multiplicity), the
rank-k numerical range is the intersection of the convex hulls of all
``(N - k + 1)``-element sub-multisets of the eigenvalues.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from corrqec.geometry import SNAP, ConvexRegion, intersect_all, intersect_convex
from corrqec.pauli import CorrelatedPauli, commutes, pauli_matrix
from corrqec.state import DEFAULT_TOL, fit_scalar, isometry_projector

__all__ = [
    "ConvexRegion",
    "EigenMultiset",
    "intersect_convex",
    "joint_membership",
    "normal_range_of_pair",
    "rank_k_range_bruteforce",
    "rank_k_range_normal",
]

BRUTEFORCE_MAX_N = 20


@dataclass(frozen=True)
class EigenMultiset:
    entries: tuple[tuple[complex, int], ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("empty eigenvalue multiset")
        for value, mult in self.entries:
            if mult < 1:
                raise ValueError(f"multiplicity of {value} must be >= 1")
        values = [v for v, _ in self.entries]
        for a, b in itertools.combinations(values, 2):
            if abs(a - b) <= SNAP:
                raise ValueError(f"eigenvalues {a} and {b} are not distinct")

    @property
    def N(self) -> int:
        return sum(m for _, m in self.entries)

    @classmethod
    def from_values(cls, values: Sequence[complex], merge_tol: float = SNAP) -> EigenMultiset:
        """Group raw eigenvalues into distinct values, merging within ``merge_tol``."""
        groups: list[list[complex]] = []
        for z in sorted((complex(v) for v in values), key=lambda z: (z.real, z.imag)):
            for g in groups:
                if abs(g[0] - z) <= merge_tol:
                    g.append(z)
                    break
            else:
                groups.append([z])
        # representative = mean of the cluster, snapped to remove rounding noise
        entries = []
        for g in groups:
            rep = complex(np.mean(g))
            entries.append((complex(_snap(rep.real), _snap(rep.imag)), len(g)))
        return cls(tuple(entries))

    def expanded(self) -> list[complex]:
        return [v for v, m in self.entries for _ in range(m)]


def _snap(x: float, digits: int = 12) -> float:
    r = round(x, digits)
    return 0.0 if r == 0 else r


def _check_k(eigs: EigenMultiset, k: int) -> int:
    if not 1 <= k <= eigs.N - 1:
        raise ValueError(f"k must lie in 1..{eigs.N - 1}, got {k}")
    return eigs.N - k + 1


def _point(z: complex) -> tuple[float, float]:
    return (z.real, z.imag)


def rank_k_range_normal(eigs: EigenMultiset, k: int) -> ConvexRegion:
    """Rank-k numerical range via minimal eigenvalue supports.

    Only which distinct values a sub-multiset uses matters for its hull, and a
    larger support has a larger hull, so it suffices to intersect the hulls of
    the minimal sets of distinct values whose multiplicities reach ``N - k + 1``.
    """
    need = _check_k(eigs, k)
    values = [v for v, _ in eigs.entries]
    mults = [m for _, m in eigs.entries]
    supports: list[frozenset[int]] = []
    for size in range(1, len(values) + 1):
        for combo in itertools.combinations(range(len(values)), size):
            if sum(mults[i] for i in combo) < need:
                continue
            s = frozenset(combo)
            if not any(t <= s for t in supports):
                supports.append(s)
    hulls = (ConvexRegion.hull_of(_point(values[i]) for i in sorted(s)) for s in supports)
    return intersect_all(hulls)


def rank_k_range_bruteforce(eigs: EigenMultiset, k: int) -> ConvexRegion:
    """Literal definition: intersect hulls of every ``(N-k+1)``-subset of eigenvalues.

    Subsets are enumerated over eigenvalue positions; repeated hulls are
    intersected once since intersection is idempotent.
    """
    if eigs.N > BRUTEFORCE_MAX_N:
        raise ValueError(f"brute force limited to N <= {BRUTEFORCE_MAX_N}, got {eigs.N}")
    size = _check_k(eigs, k)
    points = [_point(z) for z in eigs.expanded()]
    seen: dict[frozenset[tuple[float, float]], ConvexRegion] = {}
    for combo in itertools.combinations(range(len(points)), size):
        key = frozenset(points[i] for i in combo)
        if key not in seen:
            seen[key] = ConvexRegion.hull_of(key)
    return intersect_all(seen.values())


def eigenvalues_of_pair(a: CorrelatedPauli, b: CorrelatedPauli) -> EigenMultiset:
    """Eigenvalues of ``A + iB`` for commuting correlated Paulis (dense, n <= 10)."""
    if a.n != b.n:
        raise ValueError(f"{a} and {b} act on different registers")
    if not commutes(a, b):
        raise ValueError(f"{a} and {b} do not commute; A + iB is not normal")
    m = pauli_matrix(a) + 1j * pauli_matrix(b)
    return EigenMultiset.from_values(np.linalg.eigvals(m))


def normal_range_of_pair(a: CorrelatedPauli, b: CorrelatedPauli, k: int) -> ConvexRegion:
    """Joint rank-k range of Hermitian ``(A, B)``, as the rank-k range of ``A + iB``."""
    return rank_k_range_normal(eigenvalues_of_pair(a, b), k)


def joint_membership(
    v: np.ndarray, ops: Sequence[np.ndarray], tol: float = DEFAULT_TOL
) -> tuple[complex, ...] | None:
    """Scalars ``a_j`` with ``P A_j P = a_j P`` for ``P = V V^dagger``, or ``None``."""
    p = isometry_projector(v)
    point = []
    for op in ops:
        op = np.asarray(op)
        if op.shape != p.shape:
            raise ValueError(f"operator shape {op.shape} does not match projector {p.shape}")
        mu, residual = fit_scalar(p @ op @ p, p)
        if residual > tol or not math.isfinite(abs(mu)):
            return None
        point.append(mu)
    return tuple(point)
