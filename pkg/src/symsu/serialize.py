"""JSON wire format for dense complex matrices: nested [re, im] pairs."""

import json

import numpy as np


def matrix_to_pairs(m: np.ndarray) -> list:
    """Nested lists of [re, im] pairs, row major."""
    m = np.asarray(m, dtype=complex)
    return [[[float(v.real), float(v.imag)] for v in row] for row in m]


def matrix_from_pairs(data) -> np.ndarray:
    rows = []
    for row in data:
        rows.append([complex(float(re), float(im)) for re, im in row])
    m = np.array(rows, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix data must be square, got shape {m.shape}")
    return m


def save_matrix(path, m: np.ndarray):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(matrix_to_pairs(m), fh)


def load_matrix(path) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        return matrix_from_pairs(json.load(fh))
