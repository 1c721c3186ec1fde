"""Dense states and operators on 2^n-dimensional qubit registers.

Everything here is a plain :class:`numpy.ndarray` of dtype ``complex128``.
Qubit 1 is the most significant bit of a computational-basis index, so
``|j_1 ... j_n>`` has index ``int("j_1...j_n", 2)``.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

DEFAULT_TOL = 1e-10
PSD_FLOOR = -1e-9


class DimensionError(ValueError):
    """Raised when operand shapes are incompatible."""


def num_qubits(dim: int) -> int:
    """Return ``n`` for ``dim == 2**n``; raise if ``dim`` is not a power of two."""
    if dim < 1 or dim & (dim - 1):
        raise DimensionError(f"dimension {dim} is not a power of two")
    return dim.bit_length() - 1


def ket(bits: str | int, n: int | None = None) -> np.ndarray:
    """Computational basis ket from a bitstring ("0110") or an index plus width."""
    if isinstance(bits, str):
        n, index = len(bits), int(bits, 2)
    else:
        if n is None:
            raise ValueError("width n required for an integer index")
        index = bits
    v = np.zeros(2**n, dtype=complex)
    v[index] = 1.0
    return v


def projector_from_ket(v: np.ndarray) -> np.ndarray:
    return np.outer(v, v.conj())


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two kets or two operators.

    The left factor occupies the most significant bits of the result.
    """
    a, b = np.asarray(a), np.asarray(b)
    if a.ndim != b.ndim or a.ndim not in (1, 2):
        raise DimensionError(f"cannot tensor arrays of rank {a.ndim} and {b.ndim}")
    return np.kron(a, b)


def tensor_all(*factors: np.ndarray) -> np.ndarray:
    out = factors[0]
    for f in factors[1:]:
        out = tensor(out, f)
    return out


def dagger(a: np.ndarray) -> np.ndarray:
    return np.conj(np.asarray(a)).T


def _split(rho: np.ndarray, k_qubits: int) -> tuple[int, int]:
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {rho.shape}")
    n = num_qubits(rho.shape[0])
    if not 0 <= k_qubits < n:
        raise DimensionError(f"cannot trace {k_qubits} of {n} qubits")
    return 2**k_qubits, 2 ** (n - k_qubits)


def partial_trace_leading(rho: np.ndarray, k_qubits: int) -> np.ndarray:
    """Trace out the first ``k_qubits`` qubits (the most significant bits)."""
    d_a, d_b = _split(rho, k_qubits)
    return np.einsum("ajak->jk", np.asarray(rho).reshape(d_a, d_b, d_a, d_b))


def partial_trace_trailing(rho: np.ndarray, k_qubits: int) -> np.ndarray:
    """Trace out the last ``k_qubits`` qubits (the least significant bits)."""
    d_a, d_b = _split(rho, k_qubits)
    return np.einsum("jaka->jk", np.asarray(rho).reshape(d_b, d_a, d_b, d_a))


def is_hermitian(a: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    return bool(np.max(np.abs(a - dagger(a)), initial=0.0) <= tol)


def is_density(rho: np.ndarray, tol: float = DEFAULT_TOL, check_psd: bool = False) -> bool:
    """Hermitian with unit trace; positivity only when ``check_psd`` is set."""
    if not is_hermitian(rho, tol) or abs(np.trace(rho) - 1.0) > tol:
        return False
    if check_psd:
        return bool(np.linalg.eigvalsh(rho).min() >= PSD_FLOOR)
    return True


def is_isometry(v: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    v = np.asarray(v)
    return bool(np.max(np.abs(dagger(v) @ v - np.eye(v.shape[1]))) <= tol)


def is_unitary(u: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    u = np.asarray(u)
    return u.shape[0] == u.shape[1] and is_isometry(u, tol)


def is_projector(p: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    return is_hermitian(p, tol) and bool(np.max(np.abs(p @ p - p)) <= tol)


def projector_rank(p: np.ndarray) -> int:
    return int(round(np.trace(p).real))


def isometry_projector(v: np.ndarray) -> np.ndarray:
    """Orthogonal projector ``V V^dagger`` onto the range of an isometry."""
    v = np.asarray(v)
    return v @ dagger(v)


def fit_scalar(a: np.ndarray, p: np.ndarray) -> tuple[complex, float]:
    """Best guess ``mu`` with ``a ~ mu * p``, and the max-norm residual.

    ``mu`` is read off a largest-magnitude entry of ``p``.
    """
    a, p = np.asarray(a), np.asarray(p)
    if a.shape != p.shape:
        raise DimensionError(f"shape mismatch {a.shape} vs {p.shape}")
    flat = int(np.argmax(np.abs(p)))
    pivot = p.flat[flat]
    if abs(pivot) == 0:
        raise ValueError("projector has rank 0")
    mu = complex(a.flat[flat] / pivot)
    return mu, float(np.max(np.abs(a - mu * p)))


def is_scalar_multiple_of_projector(
    a: np.ndarray, p: np.ndarray, tol: float = DEFAULT_TOL
) -> complex | None:
    """Return ``mu`` if ``a == mu * p`` entrywise within ``tol``, else ``None``."""
    mu, residual = fit_scalar(a, p)
    return mu if residual <= tol else None


def random_density(n_qubits: int, seed: int) -> np.ndarray:
    """Full-rank random density matrix ``G G^dagger / tr(G G^dagger)``, seeded."""
    if n_qubits < 1:
        raise ValueError("n_qubits must be >= 1")
    rng = np.random.default_rng(seed)
    dim = 2**n_qubits
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = g @ dagger(g)
    rho /= np.trace(rho).real
    # exact Hermiticity, not just up to rounding
    return (rho + dagger(rho)) / 2


def random_isometry(rows: int, cols: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))
    q, _ = np.linalg.qr(g)
    return q


def max_abs(a: np.ndarray) -> float:
    return float(np.max(np.abs(a), initial=0.0))


# JSON matrix format: {"dim": N, "entries": [[re, im], ...]} row-major.
# Non-square matrices additionally carry "shape": [rows, cols].


def to_json_obj(a: np.ndarray) -> dict[str, Any]:
    a = np.asarray(a, dtype=complex)
    obj: dict[str, Any] = {
        "dim": int(a.shape[0]),
        "entries": [[float(z.real), float(z.imag)] for z in a.ravel()],
    }
    if a.ndim == 2 and a.shape[0] != a.shape[1]:
        obj["shape"] = [int(s) for s in a.shape]
    return obj


def from_json_obj(obj: dict[str, Any]) -> np.ndarray:
    values = np.array([complex(re, im) for re, im in obj["entries"]], dtype=complex)
    dim = int(obj["dim"])
    if "shape" in obj:
        shape = tuple(int(s) for s in obj["shape"])
    elif values.size == dim:
        shape = (dim,)
    else:
        shape = (dim, dim)
    if int(np.prod(shape)) != values.size:
        raise DimensionError(f"{values.size} entries do not fill shape {shape}")
    return values.reshape(shape)


def dumps_matrix(a: np.ndarray) -> str:
    return json.dumps(to_json_obj(a))


def loads_matrix(text: str) -> np.ndarray:
    return from_json_obj(json.loads(text))
