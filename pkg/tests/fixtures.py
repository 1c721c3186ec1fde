"""Frozen reference data shared by the test modules."""

import numpy as np

# (output ket, input ket) pairs: R = sum |out><in|
R3_MAP = [
    ("000", "000"), ("011", "001"), ("110", "010"), ("101", "011"),
    ("111", "100"), ("100", "101"), ("001", "110"), ("010", "111"),
]

R5_MAP = [
    ("00000", "00000"), ("00011", "00001"), ("00110", "00010"), ("00101", "00011"),
    ("01100", "00100"), ("01111", "00101"), ("01010", "00110"), ("01001", "00111"),
    ("11000", "01000"), ("11011", "01001"), ("11110", "01010"), ("11101", "01011"),
    ("10100", "01100"), ("10111", "01101"), ("10010", "01110"), ("10001", "01111"),
    ("11111", "10000"), ("11100", "10001"), ("11001", "10010"), ("11010", "10011"),
    ("10011", "10100"), ("10000", "10101"), ("10101", "10110"), ("10110", "10111"),
    ("00111", "11000"), ("00100", "11001"), ("00001", "11010"), ("00010", "11011"),
    ("01011", "11100"), ("01000", "11101"), ("01101", "11110"), ("01110", "11111"),
]

SIGMA = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

SQUARE = ((1 + 1j, 4), (1 - 1j, 4), (-1 + 1j, 4), (-1 - 1j, 4))


def matrix_from_map(pairs):
    n = len(pairs[0][0])
    r = np.zeros((2**n, 2**n), dtype=int)
    for out, inp in pairs:
        r[int(out, 2), int(inp, 2)] = 1
    return r


def dense_correlated(kind, n):
    """Kronecker-product oracle, independent of the index arithmetic."""
    out = np.eye(1, dtype=complex)
    for _ in range(n):
        out = np.kron(out, SIGMA[kind])
    return out
