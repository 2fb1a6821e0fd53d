"""Basis of the symmetry-invariant subalgebra by orbit symmetrization.

Conjugation by a wire permutation maps Pauli strings to Pauli strings with
no phase, so the 4^n strings split into orbits.  Summing an orbit with
unit coefficients gives a Hermitian, traceless fixed point of the group
action; one such sum per orbit (identity orbit excluded) spans the
invariant subalgebra.  Orbit structure also gives an exact projection
onto the span: a sum lies in it iff its coefficients are constant on
every orbit, which avoids any numerical rank decisions.
"""

from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, DimensionError, UnsupportedSymmetryError
from .paulis import PauliString, PauliSum, sum_commutator
from .symmetry import SymmetryGroup, conjugate_pauli

# Full 4^n enumeration is capped at this many qubits.
DEFAULT_ENUMERATION_CAP = 8


def _permutations_of(group: SymmetryGroup):
    non_perm = [e for e in group.elements if not e.is_permutation]
    if non_perm:
        raise UnsupportedSymmetryError(
            "orbit symmetrization supports qubit-permutation groups only; "
            f"group contains {len(non_perm)} raw unitary element(s)"
        )
    return [e.perm for e in group.elements]


def pauli_orbit(s: PauliString, group: SymmetryGroup) -> frozenset:
    """Orbit of a string under conjugation by every group element."""
    if s.n != group.n:
        raise DimensionError(f"string on {s.n} qubits, group on {group.n}")
    return frozenset(conjugate_pauli(p, s) for p in _permutations_of(group))


def symmetrize(s: PauliString, group: SymmetryGroup) -> PauliSum:
    """Sum of the orbit with unit coefficients; a fixed point of the action."""
    return PauliSum(s.n, tuple((p, 1.0) for p in pauli_orbit(s, group)))


@dataclass(frozen=True)
class InvariantBasis:
    """One symmetrized element per Pauli-string orbit, identity excluded.

    ``orbit_index`` maps every phase-free string (except the identity) to
    the index of the element whose orbit contains it.
    """

    n: int
    group: SymmetryGroup
    elements: tuple
    orbit_index: dict

    def __len__(self) -> int:
        return len(self.elements)

    def orbit_members(self, index: int) -> tuple:
        return tuple(p for p, _ in self.elements[index].terms)

    def __repr__(self) -> str:
        return f"InvariantBasis(n={self.n}, group={self.group.name!r}, dim={len(self)})"


def _mask_tables(n: int, perms) -> list[np.ndarray]:
    """Per-element lookup table mask -> permuted mask over all 2^n masks."""
    masks = np.arange(1 << n, dtype=np.int64)
    tables = []
    for p in perms:
        out = np.zeros_like(masks)
        for i in range(n):
            out |= ((masks >> i) & 1) << p.image[i]
        tables.append(out)
    return tables


def build_basis(n: int, group: SymmetryGroup,
                max_qubits: int = DEFAULT_ENUMERATION_CAP) -> InvariantBasis:
    """Enumerate all 4^n strings, orbit by orbit, in (z_mask, x_mask) order."""
    if group.n != n:
        raise DimensionError(f"group acts on {group.n} qubits, basis requested for {n}")
    if n > max_qubits:
        raise CapacityError(
            f"enumerating 4^{n} strings exceeds the cap of {max_qubits} qubits"
        )
    perms = _permutations_of(group)
    tables = _mask_tables(n, perms)
    size = 1 << n
    visited = np.zeros((size, size), dtype=bool)
    visited[0, 0] = True  # identity orbit is excluded
    elements = []
    orbit_index: dict[PauliString, int] = {}
    for z in range(size):
        for x in range(size):
            if visited[z, x]:
                continue
            members = {(int(t[z]), int(t[x])) for t in tables}
            index = len(elements)
            strings = []
            for mz, mx in members:
                visited[mz, mx] = True
                p = PauliString(n, mx, mz)
                orbit_index[p] = index
                strings.append(p)
            elements.append(PauliSum(n, tuple((p, 1.0) for p in strings)))
    return InvariantBasis(n, group, tuple(elements), orbit_index)


def burnside_dimension(n: int, group: SymmetryGroup) -> int:
    """Orbit count from the cycle structure: avg of 4^cycles, minus identity.

    Independent of orbit enumeration, so the two routes cross-check each
    other.
    """
    perms = _permutations_of(group)
    total = sum(4 ** p.cycle_count() for p in perms)
    if total % len(perms) != 0:
        raise ArithmeticError("orbit-count average is not an integer; group not closed?")
    return total // len(perms) - 1


def in_span(x: PauliSum, basis: InvariantBasis) -> float:
    """Norm of the part of x outside span(basis), term-exactly.

    x lies in the span iff every term belongs to some orbit and the
    coefficients are constant on each orbit; the residual is the
    coefficient-vector norm of what remains after removing the per-orbit
    mean.
    """
    if x.n != basis.n:
        raise DimensionError(f"sum on {x.n} qubits, basis on {basis.n}")
    residual_sq = 0.0
    touched: dict[int, dict[PauliString, complex]] = {}
    for p, c in x.terms:
        idx = basis.orbit_index.get(p)
        if idx is None:
            residual_sq += abs(c) ** 2
        else:
            touched.setdefault(idx, {})[p] = c
    for idx, found in touched.items():
        members = basis.orbit_members(idx)
        mean = sum(found.values()) / len(members)
        for p in members:
            residual_sq += abs(found.get(p, 0j) - mean) ** 2
    return float(np.sqrt(residual_sq))


@dataclass(frozen=True)
class ClosureReport:
    """Worst span residual over all pairwise commutators of basis elements."""

    pair_count: int
    max_residual: float
    worst_pair: tuple | None
    tolerance: float
    passed: bool


def closure_report(basis: InvariantBasis, tol: float = 1e-10) -> ClosureReport:
    """Check that every pairwise commutator stays inside the span."""
    worst = 0.0
    worst_pair = None
    count = 0
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            count += 1
            r = in_span(sum_commutator(basis.elements[i], basis.elements[j]), basis)
            if r > worst:
                worst, worst_pair = r, (i, j)
    return ClosureReport(count, worst, worst_pair, tol, worst < tol)
