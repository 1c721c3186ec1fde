"""Fully correlated Pauli operators and the mixed-unitary noise channel.

``X_n``, ``Y_n`` and ``Z_n`` apply the same Pauli to all ``n`` qubits. They act
on basis index ``j`` without building a matrix:

* ``X_n |j> = |~j>``
* ``Z_n |j> = (-1)^popcount(j) |j>``
* ``Y_n |j> = i^n (-1)^popcount(j) |~j>``

where ``~j`` flips all ``n`` bits (equivalently ``2^n - 1 - j``, a reversal of
the amplitude vector). The ``Y_n`` phase follows from
``sigma_y|0> = i|1>`` and ``sigma_y|1> = -i|0>``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

import numpy as np

from corrqec.state import DimensionError, num_qubits

KINDS = ("I", "X", "Y", "Z")
MAX_DENSE_QUBITS = 10

# single-qubit products sigma_a sigma_b = phase * sigma_c, indexed by kind
_SINGLE_PRODUCT: dict[tuple[str, str], tuple[str, complex]] = {
    ("X", "Y"): ("Z", 1j),
    ("Y", "Z"): ("X", 1j),
    ("Z", "X"): ("Y", 1j),
    ("Y", "X"): ("Z", -1j),
    ("Z", "Y"): ("X", -1j),
    ("X", "Z"): ("Y", -1j),
}


@dataclass(frozen=True)
class CorrelatedPauli:
    kind: str
    n: int

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown Pauli kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("n must be >= 1")

    def __str__(self) -> str:
        return f"{self.kind}_{self.n}"


def correlated_errors(n: int) -> list[CorrelatedPauli]:
    """The four operators ``I, X_n, Y_n, Z_n`` of the noise model."""
    return [CorrelatedPauli(k, n) for k in KINDS]


@lru_cache(maxsize=32)
def parity_signs(n: int) -> np.ndarray:
    """``(-1)^popcount(j)`` for ``j = 0 .. 2^n - 1``."""
    j = np.arange(2**n, dtype=np.uint64)
    signs = 1 - 2 * (np.bitwise_count(j) & 1).astype(np.int64)
    signs.setflags(write=False)
    return signs


def y_phase(n: int) -> complex:
    return 1j ** (n % 4)


def apply_correlated(op: CorrelatedPauli, v: np.ndarray) -> np.ndarray:
    """Apply ``op`` to a ket of length ``2^op.n`` by index arithmetic."""
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1 or v.shape[0] != 2**op.n:
        raise DimensionError(f"{op} cannot act on a vector of shape {v.shape}")
    if op.kind == "I":
        return v.copy()
    if op.kind == "X":
        return v[::-1].copy()
    s = parity_signs(op.n)
    if op.kind == "Z":
        return s * v
    return y_phase(op.n) * (s * v)[::-1]


def pauli_matrix(op: CorrelatedPauli) -> np.ndarray:
    """Dense ``2^n x 2^n`` matrix of ``op``; limited to ``n <= 10``."""
    if op.n > MAX_DENSE_QUBITS:
        raise MemoryError(f"refusing to build a dense {op} (n > {MAX_DENSE_QUBITS})")
    dim = 2**op.n
    if op.kind == "I":
        return np.eye(dim, dtype=complex)
    if op.kind == "X":
        return np.eye(dim, dtype=complex)[::-1].copy()
    s = parity_signs(op.n).astype(complex)
    if op.kind == "Z":
        return np.diag(s)
    # column j holds i^n s_j at row ~j
    return (y_phase(op.n) * np.diag(s))[::-1].copy()


def product_phase(a: CorrelatedPauli, b: CorrelatedPauli) -> tuple[CorrelatedPauli, complex]:
    """Return ``(c, phase)`` with ``a @ b == phase * c`` as matrices.

    For distinct non-identity kinds the phase is ``(+-i)^n``: the
    single-qubit phase raised to the number of qubits.
    """
    if a.n != b.n:
        raise ValueError(f"cannot multiply {a} and {b}")
    n = a.n
    if a.kind == "I":
        return b, 1
    if b.kind == "I":
        return a, 1
    if a.kind == b.kind:
        return CorrelatedPauli("I", n), 1
    kind, single = _SINGLE_PRODUCT[(a.kind, b.kind)]
    phase = complex(single**n)
    return CorrelatedPauli(kind, n), complex(round(phase.real), round(phase.imag))


def commutes(a: CorrelatedPauli, b: CorrelatedPauli) -> bool:
    """Distinct non-identity kinds anticommute per qubit, so they commute iff n is even."""
    if "I" in (a.kind, b.kind) or a.kind == b.kind:
        return True
    return a.n % 2 == 0


@dataclass(frozen=True)
class NoiseSpec:
    """Probabilities ``(p0, p1, p2, p3)`` of ``I, X_n, Y_n, Z_n``.

    Strictly positive by default; ``relaxed=True`` admits zeros.
    """

    p0: float
    p1: float
    p2: float
    p3: float
    relaxed: bool = False

    def __post_init__(self) -> None:
        ps = self.probs
        if not all(math.isfinite(p) for p in ps):
            raise ValueError(f"non-finite probability in {ps}")
        if self.relaxed:
            if min(ps) < 0:
                raise ValueError(f"negative probability in {ps}")
        elif min(ps) <= 0:
            raise ValueError(f"probabilities must be > 0 (use relaxed mode for zeros): {ps}")
        if abs(math.fsum(ps) - 1.0) > 1e-12:
            raise ValueError(f"probabilities sum to {math.fsum(ps)}, not 1")

    @property
    def probs(self) -> tuple[float, float, float, float]:
        return (self.p0, self.p1, self.p2, self.p3)

    @classmethod
    def from_list(cls, p: list[float] | tuple[float, ...], relaxed: bool = False) -> NoiseSpec:
        if len(p) != 4:
            raise ValueError(f"expected four probabilities, got {len(p)}")
        return cls(*(float(x) for x in p), relaxed=relaxed)

    @classmethod
    def from_json_obj(cls, obj: dict[str, Any], relaxed: bool = False) -> NoiseSpec:
        return cls.from_list(obj["p"], relaxed=relaxed)

    def to_json_obj(self) -> dict[str, Any]:
        return {"p": list(self.probs)}


def conjugate(kind: str, rho: np.ndarray) -> np.ndarray:
    """``E rho E^dagger`` for a correlated Pauli ``E``, entrywise.

    Entry ``(j, k)`` of ``X rho X`` is ``rho[~j, ~k]``; ``Z`` multiplies by
    ``s_j s_k``; ``Y`` does both (its ``i^n`` phase cancels).
    """
    if kind == "I":
        return rho.copy()
    if kind == "X":
        return rho[::-1, ::-1].copy()
    s = parity_signs(num_qubits(rho.shape[0]))
    signs = np.outer(s, s)
    if kind == "Z":
        return signs * rho
    return signs * rho[::-1, ::-1]


def channel_apply(spec: NoiseSpec, rho: np.ndarray) -> np.ndarray:
    """``p0 rho + p1 X rho X + p2 Y rho Y^dagger + p3 Z rho Z`` on ``n`` qubits."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise DimensionError(f"expected a square matrix, got {rho.shape}")
    num_qubits(rho.shape[0])
    out = np.zeros_like(rho)
    for p, kind in zip(spec.probs, KINDS):
        if p:
            out += p * conjugate(kind, rho)
    return out


def compose_specs(a: NoiseSpec, b: NoiseSpec) -> NoiseSpec:
    """Noise spec of applying ``b`` then ``a``.

    Phases drop out of conjugation, so products reduce to the Klein group
    ``{I, X, Y, Z}`` where multiplication is XOR of the kind indices.
    """
    q = [0.0] * 4
    for i, pa in enumerate(a.probs):
        for j, pb in enumerate(b.probs):
            q[_klein_mul(i, j)] += pa * pb
    total = math.fsum(q)
    return NoiseSpec(*(x / total for x in q), relaxed=True)


# kinds in KINDS order as (x-bit, z-bit) codes: Y ~ X*Z
_CODE = (0b00, 0b10, 0b11, 0b01)


def _klein_mul(i: int, j: int) -> int:
    return _CODE.index(_CODE[i] ^ _CODE[j])


def channel_compose(spec: NoiseSpec, times: int, rho: np.ndarray) -> np.ndarray:
    """Apply the channel ``times`` times via its effective single-shot spec."""
    if times < 1:
        raise ValueError("times must be >= 1")
    effective = spec
    for _ in range(times - 1):
        effective = compose_specs(spec, effective)
    return channel_apply(effective, rho)
