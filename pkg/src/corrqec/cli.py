"""Command-line entry point: ``corrqec {build,verify,nrange,circuit,kl}``.

Exit status is 0 when every check passes, 1 when a check fails and 2 on
usage errors (bad flags, wrong parity of ``n``).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from corrqec import circuits, codes
from corrqec.geometry import ConvexRegion
from corrqec.numrange import eigenvalues_of_pair, rank_k_range_bruteforce, rank_k_range_normal
from corrqec.pauli import CorrelatedPauli, NoiseSpec, correlated_errors
from corrqec.state import (
    DEFAULT_TOL,
    dagger,
    max_abs,
    random_density,
    to_json_obj,
)


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    parameters: dict[str, Any]
    checks: list[tuple[str, float, bool]] = field(default_factory=list)
    results: dict[str, Any] = field(default_factory=dict)

    @property
    def overall(self) -> bool:
        return all(ok for _, _, ok in self.checks)

    def check(self, name: str, residual: float, tol: float) -> None:
        self.checks.append((name, float(residual), bool(residual <= tol)))

    def to_json(self) -> str:
        obj = {
            "command": self.command,
            "parameters": self.parameters,
            "checks": [{"name": n, "residual": r, "pass": ok} for n, r, ok in self.checks],
            "results": self.results,
            "overall": self.overall,
        }
        return json.dumps(obj, sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = [f"{self.command}: " + ", ".join(f"{k}={v}" for k, v in self.parameters.items())]
        for name, residual, ok in self.checks:
            lines.append(f"  [{'PASS' if ok else 'FAIL'}] {name}: residual {residual:.3e}")
        lines.append(f"overall: {'PASS' if self.overall else 'FAIL'}")
        return "\n".join(lines)


def _code(family: str, n: int) -> codes.Code:
    try:
        return codes.build_code(family, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_build(args: argparse.Namespace) -> RunReport:
    code = _code(args.family, args.n)
    report = RunReport("build", {"family": args.family, "n": args.n})
    if isinstance(code, codes.OddCode):
        r = code.R
        report.check("unitarity", max_abs(dagger(r) @ r - np.eye(r.shape[0])), 0.0)
        matrix = r
    else:
        v = code.V
        report.check("isometry", max_abs(dagger(v) @ v - np.eye(v.shape[1])), 1e-12)
        matrix = v
    report.results["shape"] = list(matrix.shape)
    if args.out:
        Path(args.out).write_text(json.dumps(to_json_obj(matrix)) + "\n")
        report.results["out"] = str(args.out)
    return report


def cmd_verify(args: argparse.Namespace) -> RunReport:
    code = _code(args.family, args.n)
    spec = _spec(args)
    report = RunReport(
        "verify",
        {"family": args.family, "n": args.n, "p": list(spec.probs), "seed": args.seed,
         "seeds": args.seeds, "times": args.times, "tol": args.tol},
    )
    expected = codes.expected_ancilla(code, spec)
    worst_product = worst_data = worst_anc = 0.0
    for i in range(args.seeds):
        rho = random_density(code.data_qubits, args.seed + i)
        res = codes.recover(code, spec, rho, times=args.times)
        worst_product = max(worst_product, res.product_residual)
        worst_data = max(worst_data, max_abs(res.data_state - rho))
        worst_anc = max(worst_anc, max_abs(res.ancilla_state - expected))
    report.check("product_residual", worst_product, args.tol)
    report.check("data_residual", worst_data, args.tol)
    report.check("ancilla_residual", worst_anc, args.tol)
    kl = codes.kl_check(code.isometry, correlated_errors(args.n), tol=args.tol)
    report.check("knill_laflamme", float(kl.residuals.max()), args.tol)
    report.results["rho_a_diag"] = [float(x) for x in np.real(np.diag(expected))]
    report.results["kl"] = kl.to_json_obj()
    return report


def cmd_kl(args: argparse.Namespace) -> RunReport:
    code = _code(args.family, args.n)
    report = RunReport("kl", {"family": args.family, "n": args.n, "tol": args.tol})
    kl = codes.kl_check(code.isometry, correlated_errors(args.n), tol=args.tol)
    for i, ei in enumerate(kl.errors):
        for j, ej in enumerate(kl.errors):
            report.check(f"P {ei}^dag {ej} P", kl.residuals[i, j], args.tol)
    report.results["kl"] = kl.to_json_obj()
    return report


def _parse_pair(text: str, n: int) -> tuple[CorrelatedPauli, CorrelatedPauli]:
    letters = [c for c in text.upper() if c.isalpha()]
    if len(letters) != 2 or not set(letters) <= set("XYZ"):
        raise UsageError(f"--pair expects two of X, Y, Z, got {text!r}")
    return CorrelatedPauli(letters[0], n), CorrelatedPauli(letters[1], n)


def cmd_nrange(args: argparse.Namespace) -> RunReport:
    if not 1 <= args.n <= 6:
        raise UsageError("nrange supports 1 <= n <= 6")
    a, b = _parse_pair(args.pair, args.n)
    report = RunReport("nrange", {"pair": f"{a.kind}{b.kind}", "n": args.n, "k": args.k})
    try:
        eigs = eigenvalues_of_pair(a, b)
        region = rank_k_range_normal(eigs, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report.results["region"] = region.to_json_obj()
    report.results["eigenvalues"] = [[v.real, v.imag, m] for v, m in eigs.entries]
    if eigs.N <= 16:
        oracle: ConvexRegion = rank_k_range_bruteforce(eigs, args.k)
        report.check("bruteforce_agreement", 0.0 if region.same_as(oracle) else 1.0, 0.0)
    return report


def cmd_circuit(args: argparse.Namespace) -> RunReport:
    try:
        circ = circuits.build_circuit(args.family, args.n, args.role)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    code = codes.build_code(args.family, args.n)
    text = circuits.export_circuit(circ)
    report = RunReport("circuit", {"family": args.family, "n": args.n, "role": args.role})
    reparsed = circuits.parse_circuit(text, args.n)
    report.check("roundtrip", 0.0 if reparsed == circ else 1.0, 0.0)
    if args.role == "encode":
        report.check(
            "subspace_residual",
            circuits.verify_subspace_equivalence(circ, code.isometry, code.ancillas),
            args.tol,
        )
    else:
        report.check("inverse_residual", circuits.inverse_residual(circ, code.encoder), args.tol)
    report.results["gates"] = text.splitlines()
    report.results["counts"] = {k: circ.count(k) for k in ("CNOT", "H", "X")}
    return report


def _spec(args: argparse.Namespace) -> NoiseSpec:
    try:
        p = [float(x) for x in args.p.split(",")]
        return NoiseSpec.from_list(p, relaxed=args.relaxed)
    except ValueError as exc:
        raise UsageError(f"bad --p: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corrqec", description="Codes for fully correlated Pauli noise."
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="number of physical qubits")
    common.add_argument("--json", action="store_true", help="emit the report as JSON")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL)
    common.add_argument("--out", type=Path, default=None)
    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("--family", choices=("odd", "even"), required=True)

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("build", parents=[common, family], help="write R (odd) or V (even)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", parents=[common, family], help="encode, add noise, recover")
    p.add_argument("--p", default="0.4,0.3,0.2,0.1", help="p0,p1,p2,p3")
    p.add_argument("--relaxed", action="store_true", help="allow zero probabilities")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--seeds", type=int, default=20, help="number of random data states")
    p.add_argument("--times", type=int, default=1, help="channel applications")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kl", parents=[common, family], help="Knill-Laflamme check")
    p.set_defaults(func=cmd_kl)

    p = sub.add_parser("nrange", parents=[common], help="rank-k range of A + iB")
    p.add_argument("--pair", default="XY", help="two letters from X, Y, Z")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_nrange)

    p = sub.add_parser("circuit", parents=[common, family], help="emit and verify a circuit")
    p.add_argument("--role", choices=("encode", "recover"), default="encode")
    p.set_defaults(func=cmd_circuit)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except UsageError as exc:
        print(f"corrqec {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.command == "circuit" and not args.json:
        for line in report.results["gates"]:
            print(line)
    print(report.to_json() if args.json else report.to_text())
    if args.out and args.command != "build":
        args.out.write_text(report.to_json() + "\n")
    return 0 if report.overall else 1


if __name__ == "__main__":
    sys.exit(main())
