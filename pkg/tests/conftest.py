"""Shared fixtures and independent dense-matrix oracles.

The oracle helpers below build matrices with their own kron loop and
letter table so that tests of the symbolic algebra never reuse the code
path they are checking.
"""

import numpy as np
import pytest

from symsu import preset_group

ORACLE_LETTERS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def dense_label(label: str) -> np.ndarray:
    """Kron product of letter matrices, most significant qubit first."""
    m = np.array([[1.0 + 0j]])
    for ch in label:
        m = np.kron(m, ORACLE_LETTERS[ch])
    return m


def dense_sum(pairs) -> np.ndarray:
    """Dense matrix of (label, coeff) pairs."""
    labels = [lab for lab, _ in pairs]
    dim = 2 ** len(labels[0])
    out = np.zeros((dim, dim), dtype=complex)
    for lab, c in pairs:
        out += c * dense_label(lab)
    return out


def fro(m) -> float:
    return float(np.linalg.norm(m))


@pytest.fixture(scope="session")
def s2():
    return preset_group("full_swap", 2)


@pytest.fixture(scope="session")
def s3():
    return preset_group("full_swap", 3)


@pytest.fixture(scope="session")
def trivial1():
    return preset_group("trivial", 1)
