"""Command-line front end.

Commands: basis, dim, check, path, synth, random, verify.  Exit codes:
0 success / invariant, 1 property violated, 2 usage or input error.
Numeric output is printed with 17 significant digits so values round-trip
exactly through text.
"""

import argparse
import json
import os
import sys
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from .basis import build_basis, burnside_dimension, closure_report
from .circuits import synthesize_sum_exponential
from .errors import NotUnitaryError, ProductFormulaError, SymsuError
from .paulis import PauliSum
from .serialize import load_matrix, matrix_to_pairs
from .symmetry import (
    PRESETS,
    SymmetryGroup,
    is_invariant,
    load_group,
    preset_group,
    symmetry_defect,
)
from .unitary_ops import (
    Unitary,
    compose,
    connectedness_path,
    exp_generator,
    project_to_su,
    random_invariant,
)

OUTPUT_DIR_ENV = "SYMSU_OUTPUT_DIR"


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _resolve_out(path: str | None) -> Path | None:
    if path is None:
        return None
    p = Path(path)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not p.is_absolute():
        p = Path(base) / p
    return p


def _emit(text: str, out: Path | None):
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")


def _csv_header(args, command: str) -> list[str]:
    if getattr(args, "no_header", False):
        return []
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return [f"# symsu {command} {stamp}"]


def _resolve_group(symmetry: str, n: int | None) -> SymmetryGroup:
    if symmetry in PRESETS:
        if n is None:
            raise ValueError(f"preset {symmetry!r} needs --n")
        return preset_group(symmetry, n)
    path = Path(symmetry)
    if not path.exists():
        raise ValueError(f"--symmetry {symmetry!r} is neither a preset nor a file")
    group = load_group(path)
    if n is not None and group.n != n:
        raise ValueError(f"symmetry file is for n={group.n}, but --n {n} was given")
    return group


def _element_label(element) -> str:
    if element.is_permutation:
        return "perm" + str(list(element.perm.image)).replace(" ", "")
    return f"unitary(dim={element.matrix.shape[0]})"


def cmd_basis(args) -> int:
    group = _resolve_group(args.symmetry, args.n)
    basis = build_basis(group.n, group)
    if args.format == "json":
        data = {
            "n": basis.n,
            "group": group.name,
            "dimension": len(basis),
            "elements": [
                [[c.real, c.imag, p.to_label()] for p, c in e.terms]
                for e in basis.elements
            ],
        }
        _emit(json.dumps(data, indent=2), _resolve_out(args.out))
    else:
        lines = [e.to_line() for e in basis.elements]
        lines.append(f"dim {len(basis)}")
        _emit("\n".join(lines), _resolve_out(args.out))
    return 0


def cmd_dim(args) -> int:
    try:
        ns = [int(tok) for tok in str(args.n).split(",")]
    except ValueError as exc:
        raise ValueError(f"--n must be an integer or comma list: {exc}") from exc
    lines = _csv_header(args, "dim")
    lines.append("n,group,dimension")
    for n in ns:
        group = _resolve_group(args.symmetry, n)
        lines.append(f"{n},{group.name},{burnside_dimension(n, group)}")
    _emit("\n".join(lines), _resolve_out(args.out))
    return 0


def cmd_check(args) -> int:
    m = load_matrix(args.matrix)
    dim = m.shape[0]
    n = dim.bit_length() - 1
    if 1 << n != dim:
        raise ValueError(f"matrix dimension {dim} is not a power of two")
    group = _resolve_group(args.symmetry, n)
    try:
        Unitary(m)
    except NotUnitaryError as exc:
        print(f"warning: input is not unitary ({exc}); reporting defects anyway",
              file=sys.stderr)
    defects = [(el, symmetry_defect(m, el)) for el in group.elements]
    flag = all(d < args.tol for _, d in defects)
    worst = max(d for _, d in defects)
    if args.format == "json":
        data = {
            "n": n,
            "group": group.name,
            "tol": args.tol,
            "invariant": flag,
            "max_defect": worst,
            "defects": [{"element": _element_label(el), "defect": d} for el, d in defects],
        }
        _emit(json.dumps(data, indent=2), _resolve_out(args.out))
    else:
        lines = [f"{i} {_element_label(el)} {_fmt(d)}" for i, (el, d) in enumerate(defects)]
        verdict = "invariant" if flag else "not invariant"
        lines.append(f"{verdict} max_defect {_fmt(worst)} tol {_fmt(args.tol)}")
        _emit("\n".join(lines), _resolve_out(args.out))
    return 0 if flag else 1


def cmd_path(args) -> int:
    m = load_matrix(args.matrix)
    u = Unitary(m)  # non-unitary input is a usage error for path sampling
    n = u.n
    group = _resolve_group(args.symmetry, n)
    lines = _csv_header(args, "path")
    lines.append("t,invariance_defect,unitarity_residual")
    for k in range(args.samples + 1):
        t = k / args.samples
        point = connectedness_path(u, t)
        _, defect = is_invariant(point.matrix, group, args.tol)
        lines.append(f"{_fmt(t)},{_fmt(defect)},{_fmt(point.unitarity_residual)}")
    _emit("\n".join(lines), _resolve_out(args.out))
    return 0


def cmd_synth(args) -> int:
    if (args.pauli is None) == (args.sum_file is None):
        raise ValueError("give exactly one of --pauli or --sum-file")
    if args.pauli is not None:
        s = PauliSum.from_label(args.pauli)
    else:
        s = PauliSum.from_text(Path(args.sum_file).read_text(encoding="utf-8"))
    try:
        circuit = synthesize_sum_exponential(s, args.alpha)
    except ProductFormulaError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 1
    _emit(circuit.to_text(), _resolve_out(args.out))
    return 0


def cmd_random(args) -> int:
    group = _resolve_group(args.symmetry, args.n)
    u = random_invariant(group.n, group, args.seed, args.depth)
    _emit(json.dumps(matrix_to_pairs(u.matrix)), _resolve_out(args.out))
    return 0


def cmd_verify(args) -> int:
    group = _resolve_group(args.symmetry, args.n)
    basis = build_basis(group.n, group)
    tol = args.tol
    results: list[tuple[str, bool, str]] = []

    # Products of invariant unitaries stay invariant.
    worst = 0.0
    ok = True
    for k in range(args.pairs):
        u1 = random_invariant(group.n, group, args.seed + 2 * k, args.depth, basis=basis)
        u2 = random_invariant(group.n, group, args.seed + 2 * k + 1, args.depth, basis=basis)
        for u in (u1, u2):
            flag, _ = is_invariant(u.matrix, group, tol)
            ok = ok and flag
        flag, defect = is_invariant(compose(u1, u2).matrix, group, 3 * tol)
        ok = ok and flag
        worst = max(worst, defect)
    results.append(("composition", ok, f"pairs={args.pairs} max_defect={worst:.3e} tol={3 * tol:.1e}"))

    # Pairwise commutators stay inside the span.
    report = closure_report(basis, tol)
    results.append(("closure", report.passed,
                    f"pairs={report.pair_count} max_residual={report.max_residual:.3e} tol={tol:.1e}"))

    # Exponentials of symmetrized generators land in the invariant group.
    rng = np.random.default_rng(args.seed)
    worst = 0.0
    ok = True
    for element in basis.elements:
        alpha = float(rng.uniform(0.0, 2.0 * np.pi))
        flag, defect = is_invariant(exp_generator(element, alpha).matrix, group, tol)
        ok = ok and flag
        worst = max(worst, defect)
    results.append(("exp_invariance", ok,
                    f"elements={len(basis)} max_defect={worst:.3e} tol={tol:.1e}"))

    # The eigenphase path stays invariant and hits both endpoints.
    ok = True
    worst = 0.0
    for k in range(args.paths):
        u = random_invariant(group.n, group, args.seed + 1000 + k, args.depth, basis=basis)
        start = connectedness_path(u, 0.0)
        end = connectedness_path(u, 1.0)
        ok = ok and np.linalg.norm(start.matrix - np.eye(u.dim)) < 1e-9
        ok = ok and np.linalg.norm(end.matrix - u.matrix) < 1e-9
        for t in np.linspace(0.0, 1.0, 11):
            flag, defect = is_invariant(connectedness_path(u, float(t)).matrix, group, 1e-8)
            ok = ok and flag
            worst = max(worst, defect)
        proj = project_to_su(u)
        ok = ok and abs(np.linalg.det(proj.matrix) - 1) < 1e-10
    results.append(("path", ok, f"paths={args.paths} max_defect={worst:.3e} tol=1.0e-08"))

    width = max(len(name) for name, _, _ in results)
    out_lines = []
    for name, passed, detail in results:
        out_lines.append(f"{name.ljust(width)}  {'PASS' if passed else 'FAIL'}  {detail}")
    all_ok = all(passed for _, passed, _ in results)
    out_lines.append("verify: all suites passed" if all_ok else "verify: FAILURES present")
    _emit("\n".join(out_lines), _resolve_out(args.out))
    return 0 if all_ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symsu",
        description="Symmetry-invariant bases, invariance checks, and circuit synthesis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_required=False):
        p.add_argument("--n", type=int, required=n_required,
                       help="qubit count (required with presets)")
        p.add_argument("--symmetry", required=True,
                       help=f"preset ({', '.join(sorted(PRESETS))}) or JSON spec file")
        p.add_argument("--out", help="output file (default: stdout)")

    p = sub.add_parser("basis", help="print the invariant basis and its dimension")
    common(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("dim", help="dimension table as CSV")
    p.add_argument("--n", required=True, help="qubit count or comma list, e.g. 2,3,4")
    p.add_argument("--symmetry", required=True)
    p.add_argument("--out")
    p.add_argument("--no-header", action="store_true", help="omit the timestamp comment")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("check", help="invariance report for a matrix file")
    p.add_argument("matrix", help="JSON matrix file (nested [re, im] pairs)")
    p.add_argument("--symmetry", required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_check, n=None)

    p = sub.add_parser("path", help="sample the identity-to-A path as CSV")
    p.add_argument("matrix")
    p.add_argument("--symmetry", required=True)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--out")
    p.add_argument("--no-header", action="store_true")
    p.set_defaults(func=cmd_path, n=None)

    p = sub.add_parser("synth", help="compile a Pauli-sum exponential to gates")
    p.add_argument("--pauli", help="single Pauli letter string, e.g. XZY")
    p.add_argument("--sum-file", help="Pauli sum text file, one '(re,im) LETTERS' per line")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("random", help="write a seeded random invariant unitary")
    common(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--depth", type=int, default=8)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("verify", help="run the structure-property suites")
    common(p)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pairs", type=int, default=50)
    p.add_argument("--paths", type=int, default=8)
    p.add_argument("--depth", type=int, default=6)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SymsuError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
