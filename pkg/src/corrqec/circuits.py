"""X / H / CNOT circuits for the encoders and decoders.

Qubits are numbered from 1 (top wire, the most significant bit); qubit 1 is
the ancilla of the odd code and qubits 1, 2 are the ancillas of the even code.
Text format is one gate per line: ``cnot <control> <target>``, ``h <q>``, ``x <q>``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from corrqec.codes import _check_even, _check_odd
from corrqec.pauli import CorrelatedPauli, pauli_matrix
from corrqec.state import dagger, max_abs

MAX_CIRCUIT_QUBITS = 10


@dataclass(frozen=True)
class Gate:
    kind: str
    target: int
    control: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("X", "H", "CNOT"):
            raise ValueError(f"unsupported gate {self.kind!r}")
        if (self.kind == "CNOT") != (self.control is not None):
            raise ValueError("exactly the CNOT gate takes a control qubit")
        if self.control == self.target:
            raise ValueError(f"control and target coincide on qubit {self.target}")

    def qubits(self) -> tuple[int, ...]:
        return (self.target,) if self.control is None else (self.control, self.target)


def cnot(control: int, target: int) -> Gate:
    return Gate("CNOT", target, control)


@dataclass(frozen=True)
class Circuit:
    n: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        for g in self.gates:
            if not all(1 <= q <= self.n for q in g.qubits()):
                raise ValueError(f"{g} does not fit a {self.n}-qubit circuit")

    def inverse(self) -> Circuit:
        # every gate in the set is self-inverse
        return Circuit(self.n, self.gates[::-1])

    def count(self, kind: str) -> int:
        return sum(g.kind == kind for g in self.gates)


def _apply_gate(g: Gate, n: int, states: np.ndarray) -> np.ndarray:
    """Apply ``g`` to every column of ``states`` (rows index the basis)."""
    idx = np.arange(2**n)
    tbit = 1 << (n - g.target)
    if g.kind == "X":
        return states[idx ^ tbit]
    if g.kind == "CNOT":
        cbit = 1 << (n - g.control)
        return states[np.where(idx & cbit, idx ^ tbit, idx)]
    low = (idx & tbit) == 0
    out = np.empty_like(states, dtype=complex)
    a0 = states[np.where(low, idx, idx ^ tbit)]
    a1 = states[np.where(low, idx ^ tbit, idx)]
    out[low] = (a0[low] + a1[low]) / np.sqrt(2)
    out[~low] = (a0[~low] - a1[~low]) / np.sqrt(2)
    return out


def circuit_unitary(c: Circuit) -> np.ndarray:
    """Dense unitary ``G_m ... G_1``; real for circuits of X/H/CNOT."""
    if c.n > MAX_CIRCUIT_QUBITS:
        raise MemoryError(f"circuit width {c.n} exceeds {MAX_CIRCUIT_QUBITS}")
    u = np.eye(2**c.n)
    for g in c.gates:
        u = _apply_gate(g, c.n, u)
    return np.real_if_close(u)


def encode_circuit_odd(n: int) -> Circuit:
    """CNOT chain 2->1, 3->2, ..., n->n-1; equals ``R`` when the ancilla is ``|0>``."""
    _check_odd(n)
    return Circuit(n, tuple(cnot(j + 1, j) for j in range(1, n)))


def recovery_circuit_odd(n: int) -> Circuit:
    """Exact ``R^dagger``: the reversed encoding chain, then CNOT(1 -> j) for odd j >= 3.

    The reversed chain leaves suffix parities on each wire, so a complemented
    codeword comes out with the ancilla and every odd data wire flipped; the
    final CNOTs undo the data flips. The encoder can drop them because its
    ancilla starts in ``|0>``.
    """
    _check_odd(n)
    chain = tuple(cnot(j + 1, j) for j in range(n - 1, 0, -1))
    fix = tuple(cnot(1, j) for j in range(3, n + 1, 2))
    return Circuit(n, chain + fix)


def encode_circuit_even(n: int) -> Circuit:
    """Parity onto qubit 2, Hadamard on qubit 1, then fan out qubit 1 to all others."""
    _check_even(n)
    parity = tuple(cnot(j, 2) for j in range(3, n + 1))
    fan = tuple(cnot(1, j) for j in range(2, n + 1))
    return Circuit(n, parity + (Gate("H", 1),) + fan)


def recovery_circuit_even(n: int) -> Circuit:
    return encode_circuit_even(n).inverse()


def build_circuit(family: str, n: int, role: str) -> Circuit:
    table = {
        ("odd", "encode"): encode_circuit_odd,
        ("odd", "recover"): recovery_circuit_odd,
        ("even", "encode"): encode_circuit_even,
        ("even", "recover"): recovery_circuit_even,
    }
    try:
        return table[(family, role)](n)
    except KeyError:
        raise ValueError(f"no {role} circuit for family {family!r}") from None


def verify_subspace_equivalence(c: Circuit, target: np.ndarray, ancilla_bits: int) -> float:
    """Max over data kets ``d`` of ``|U(|0..0>|d>) - target[:, d]|``; phase-sensitive."""
    u = circuit_unitary(c)
    cols = 2 ** (c.n - ancilla_bits)
    target = np.asarray(target)
    if target.shape != (2**c.n, cols):
        raise ValueError(f"target shape {target.shape} does not match circuit subspace")
    return float(np.max(np.linalg.norm(u[:, :cols] - target, axis=0)))


def circuit_syndrome(n: int, error: CorrelatedPauli) -> int:
    """Ancilla bit read off ``recover . E . encode`` on ``|0, d>``, for all data ``d``.

    Raises if the output is not ``(phase) |a> (x) |d>`` with a common ``a``.
    """
    enc = circuit_unitary(encode_circuit_odd(n))
    rec = circuit_unitary(recovery_circuit_odd(n))
    half = 2 ** (n - 1)
    out = rec @ pauli_matrix(error) @ enc[:, :half]
    bits = set()
    for d in range(half):
        col = out[:, d]
        j = int(np.argmax(np.abs(col)))
        if abs(abs(col[j]) - 1) > 1e-12 or j % half != d:
            raise RuntimeError(f"{error} does not decode to a product with data {d}")
        bits.add(j // half)
    if len(bits) != 1:
        raise RuntimeError(f"{error} gives data-dependent syndromes {sorted(bits)}")
    return bits.pop()


def export_circuit(c: Circuit, format: str = "lines") -> str:
    if format != "lines":
        raise ValueError(f"unknown circuit format {format!r}")
    lines = []
    for g in c.gates:
        if g.kind == "CNOT":
            lines.append(f"cnot {g.control} {g.target}")
        else:
            lines.append(f"{g.kind.lower()} {g.target}")
    return "\n".join(lines)


def parse_circuit(text: str, n: int) -> Circuit:
    gates = []
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts:
            continue
        op, args = parts[0].lower(), parts[1:]
        try:
            qs = [int(a) for a in args]
        except ValueError:
            raise ValueError(f"line {lineno}: bad qubit index in {line!r}") from None
        if op == "cnot" and len(qs) == 2:
            gates.append(cnot(qs[0], qs[1]))
        elif op in ("h", "x") and len(qs) == 1:
            gates.append(Gate(op.upper(), qs[0]))
        else:
            raise ValueError(f"line {lineno}: cannot parse {line!r}")
    return Circuit(n, tuple(gates))


def unitary_residual(c: Circuit, target: np.ndarray) -> float:
    return max_abs(circuit_unitary(c) - np.asarray(target))


def inverse_residual(c: Circuit, target: np.ndarray) -> float:
    return max_abs(circuit_unitary(c) - dagger(np.asarray(target)))
