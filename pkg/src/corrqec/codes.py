"""Codes for fully correlated Pauli noise.

Odd ``n``: ``n - 1`` data qubits and one ancilla. The code space is spanned by
the even-weight basis kets; ``R = [W | X_n W]`` is a permutation matrix whose
inverse sends any of the four errors to a flip and/or phase of the ancilla.

Even ``n``: ``n - 2`` data qubits and two ancillas in a decoherence-free
subspace spanned by ``(|e> + X_n|e>)/sqrt(2)`` for even-weight ``e``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence, Union

import numpy as np

from corrqec.pauli import (
    CorrelatedPauli,
    NoiseSpec,
    channel_compose,
    correlated_errors,
    pauli_matrix,
)
from corrqec.state import (
    DEFAULT_TOL,
    DimensionError,
    dagger,
    fit_scalar,
    isometry_projector,
    max_abs,
    num_qubits,
    partial_trace_leading,
    partial_trace_trailing,
    tensor,
)


class CodeConstructionError(RuntimeError):
    """A structural identity that every valid code satisfies did not hold."""


@dataclass(frozen=True)
class EvenWeightBasis:
    n: int
    members: tuple[int, ...]

    def bitstrings(self) -> list[str]:
        return [format(m, f"0{self.n}b") for m in self.members]

    def __len__(self) -> int:
        return len(self.members)


def even_weight_states(n: int) -> EvenWeightBasis:
    if n < 1:
        raise ValueError("n must be >= 1")
    idx = np.arange(2**n, dtype=np.uint64)
    members = idx[(np.bitwise_count(idx) & 1) == 0]
    return EvenWeightBasis(n, tuple(int(m) for m in members))


def _check_odd(n: int) -> None:
    if n <= 2 or n % 2 == 0:
        raise ValueError(f"odd code needs odd n > 2, got n={n}")


def _check_even(n: int) -> None:
    if n <= 2 or n % 2:
        raise ValueError(f"even code needs even n > 2, got n={n}")


def codeword_index(d: int, n: int) -> int:
    """Even-weight index encoding data ``d`` (``n - 1`` bits).

    Bits: ``c_1 = d_1``, ``c_i = d_{i-1} xor d_i``, ``c_n = d_{n-1}``. This is
    ``d xor (d << 1)`` read as an ``n``-bit word.
    """
    return (d ^ (d << 1)) & (2**n - 1)


def build_W(n: int) -> np.ndarray:
    """``2^n x 2^(n-1)`` isometry whose columns are even-weight basis kets."""
    _check_odd(n)
    half = 2 ** (n - 1)
    d = np.arange(half)
    w = np.zeros((2**n, half))
    w[codeword_index(d, n), d] = 1.0
    return w


def build_R(n: int) -> np.ndarray:
    """The permutation ``[W | X_n W]``; real 0/1 entries."""
    _check_odd(n)
    half = 2 ** (n - 1)
    dim = 2**n
    d = np.arange(half)
    rows = codeword_index(d, n)
    r = np.zeros((dim, dim))
    r[rows, d] = 1.0
    r[(dim - 1) ^ rows, half + d] = 1.0
    return r


def even_codeword(d: int, n: int) -> tuple[int, int]:
    """The pair of indices ``(|0,p,d>, |1,~p,~d>)`` for data ``d`` (``n - 2`` bits)."""
    p = int(d).bit_count() & 1
    low = (p << (n - 2)) | d
    return low, (2**n - 1) ^ low


def build_even_unitary(n: int) -> np.ndarray:
    """Unitary completion of the decoherence-free isometry.

    Input ``|a1, a2, d>`` maps to ``(|0,q,d> + (-1)^a1 |1,~q,~d>)/sqrt(2)`` with
    ``q = a2 xor parity(d)``; the ``a1 = a2 = 0`` columns are the code space.
    """
    _check_even(n)
    dim = 2**n
    quarter = 2 ** (n - 2)
    u = np.zeros((dim, dim))
    amp = 1 / np.sqrt(2)
    for a1 in (0, 1):
        for a2 in (0, 1):
            for d in range(quarter):
                col = (a1 << (n - 1)) | (a2 << (n - 2)) | d
                q = a2 ^ (d.bit_count() & 1)
                low = (q << (n - 2)) | d
                u[low, col] = amp
                u[(dim - 1) ^ low, col] = -amp if a1 else amp
    return u


@dataclass(frozen=True)
class OddCode:
    n: int
    W: np.ndarray = field(repr=False)
    R: np.ndarray = field(repr=False)

    ancillas = 1

    @property
    def data_qubits(self) -> int:
        return self.n - 1

    @property
    def isometry(self) -> np.ndarray:
        return self.W

    @property
    def encoder(self) -> np.ndarray:
        return self.R


@dataclass(frozen=True)
class EvenCode:
    n: int
    V: np.ndarray = field(repr=False)
    U: np.ndarray = field(repr=False)

    ancillas = 2

    @property
    def data_qubits(self) -> int:
        return self.n - 2

    @property
    def isometry(self) -> np.ndarray:
        return self.V

    @property
    def encoder(self) -> np.ndarray:
        return self.U


Code = Union[OddCode, EvenCode]


def build_odd_code(n: int) -> OddCode:
    return OddCode(n, build_W(n), build_R(n))


def build_even_code(n: int) -> EvenCode:
    u = build_even_unitary(n)
    return EvenCode(n, u[:, : 2 ** (n - 2)].copy(), u)


def build_code(family: str, n: int) -> Code:
    if family == "odd":
        return build_odd_code(n)
    if family == "even":
        return build_even_code(n)
    raise ValueError(f"unknown code family {family!r}")


@dataclass
class KLReport:
    errors: list[CorrelatedPauli]
    mu: np.ndarray
    residuals: np.ndarray
    tol: float

    @property
    def passed(self) -> bool:
        return bool(np.all(self.residuals <= self.tol))

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "errors": [str(e) for e in self.errors],
            "mu": [[[float(z.real), float(z.imag)] for z in row] for row in self.mu],
            "residuals": self.residuals.tolist(),
            "pass": self.passed,
        }


def kl_check(
    code_isometry: np.ndarray, errors: Sequence[CorrelatedPauli], tol: float = DEFAULT_TOL
) -> KLReport:
    """Knill-Laflamme test: is ``P E_i^dagger E_j P`` a multiple of ``P`` for all pairs?"""
    p = isometry_projector(code_isometry)
    mats = [pauli_matrix(e) for e in errors]
    for e, m in zip(errors, mats):
        if m.shape[0] != p.shape[0]:
            raise DimensionError(f"{e} does not act on a {p.shape[0]}-dim space")
    r = len(errors)
    mu = np.zeros((r, r), dtype=complex)
    residuals = np.zeros((r, r))
    for i in range(r):
        for j in range(r):
            mu[i, j], residuals[i, j] = fit_scalar(p @ dagger(mats[i]) @ mats[j] @ p, p)
    return KLReport(list(errors), mu, residuals, tol)


@dataclass
class RecoveryResult:
    ancilla_state: np.ndarray
    data_state: np.ndarray
    product_residual: float
    output: np.ndarray = field(repr=False)

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "ancilla_diag": [float(x) for x in np.real(np.diag(self.ancilla_state))],
            "product_residual": self.product_residual,
        }


def recover(code: Code, spec: NoiseSpec, data_rho: np.ndarray, times: int = 1) -> RecoveryResult:
    """Encode ``|0..0><0..0| (x) rho``, apply the channel ``times`` times, decode.

    The decoded state is split into ancilla and data factors by partial traces;
    ``product_residual`` is the max-norm distance from their product.
    """
    data_rho = np.asarray(data_rho, dtype=complex)
    expected = 2**code.data_qubits
    if data_rho.shape != (expected, expected):
        raise DimensionError(f"data state must be {expected}x{expected}, got {data_rho.shape}")
    anc = np.zeros((2**code.ancillas, 2**code.ancillas))
    anc[0, 0] = 1.0
    u = code.encoder
    encoded = u @ tensor(anc, data_rho) @ dagger(u)
    noisy = channel_compose(spec, times, encoded)
    out = dagger(u) @ noisy @ u
    data_qubits = num_qubits(out.shape[0]) - code.ancillas
    # unit-trace ancilla factor; keeps the product exact when tr(rho) is 1 only up to rounding
    ancilla_state = partial_trace_trailing(out, data_qubits)
    ancilla_state = ancilla_state / np.trace(ancilla_state)
    data_state = partial_trace_leading(out, code.ancillas)
    residual = max_abs(out - tensor(ancilla_state, data_state))
    return RecoveryResult(ancilla_state, data_state, residual, out)


def expected_ancilla(code: Code, spec: NoiseSpec) -> np.ndarray:
    """``(p0+p3)|0><0| + (p1+p2)|1><1|`` for odd codes, ``|00><00|`` for even ones."""
    if isinstance(code, OddCode):
        p0, p1, p2, p3 = spec.probs
        return np.diag([p0 + p3, p1 + p2]).astype(complex)
    out = np.zeros((4, 4), dtype=complex)
    out[0, 0] = 1.0
    return out


def syndrome_of(
    code: OddCode, error: CorrelatedPauli, tol: float = 1e-12
) -> tuple[int, np.ndarray]:
    """Ancilla bit and the single-qubit action ``A`` with ``R^dagger E R = A (x) I``.

    Bit 0 if ``A`` is diagonal (``I`` or ``Z``-like), 1 if anti-diagonal.
    """
    if error.n != code.n:
        raise DimensionError(f"{error} does not act on the n={code.n} code")
    m = dagger(code.R) @ pauli_matrix(error) @ code.R
    half = 2 ** (code.n - 1)
    a = m[::half, ::half].copy()
    if max_abs(m - tensor(a, np.eye(half))) > tol:
        raise CodeConstructionError(f"R^dagger {error} R is not of the form A (x) I")
    nonzero = np.abs(a) > tol
    if not np.allclose(np.abs(a[nonzero]), 1.0, atol=tol, rtol=0):
        raise CodeConstructionError(f"ancilla action of {error} has non-unit entries")
    if np.array_equal(nonzero, np.eye(2, dtype=bool)):
        return 0, a
    if np.array_equal(nonzero, ~np.eye(2, dtype=bool)):
        return 1, a
    raise CodeConstructionError(f"ancilla action of {error} is neither diagonal nor anti-diagonal")


def syndrome_table(code: OddCode) -> dict[str, int]:
    return {e.kind: syndrome_of(code, e)[0] for e in correlated_errors(code.n)}
