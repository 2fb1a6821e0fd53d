"""Building the invariant subalgebra by orbit symmetrization.

Conjugation by wire permutations splits the Pauli strings into orbits;
each orbit sum is a basis element of the invariant algebra.  Two
independent counts of the dimension (orbit enumeration and the
cycle-structure average) must agree.
"""

from symsu import (
    PauliString,
    PauliSum,
    build_basis,
    burnside_dimension,
    closure_report,
    in_span,
    pauli_orbit,
    preset_group,
    symmetrize,
)

s3 = preset_group("full_swap", 3)

print("orbit of X on one of three interchangeable wires")
for p in sorted(pauli_orbit(PauliString.from_label("XII"), s3)):
    print("  ", p)

print("\nits symmetrization is the orbit sum")
print("  ", symmetrize(PauliString.from_label("XII"), s3))

print("\ndimension table (enumerated == counted)")
print("  n  group      dim")
for preset in ("trivial", "cyclic", "dihedral", "full_swap"):
    for n in (3, 4):
        g = preset_group(preset, n)
        dim = len(build_basis(n, g))
        assert dim == burnside_dimension(n, g)
        print(f"  {n}  {preset:<10} {dim}")

print("\nevery pairwise commutator of basis elements stays inside the span")
basis = build_basis(3, s3)
report = closure_report(basis)
print(f"  pairs={report.pair_count} max_residual={report.max_residual:.3e} "
      f"passed={report.passed}")

print("\na lone unsymmetrized term sticks out of the span")
residual = in_span(PauliSum.from_labels(3, [("XII", 1.0)]), basis)
print(f"  residual of bare XII: {residual:.6f}")
print(f"  residual of its symmetrization: "
      f"{in_span(symmetrize(PauliString.from_label('XII'), s3), basis):.6f}")
