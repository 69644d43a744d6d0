"""Command-line entry point: ``dmoments <command> [flags]``."""
from __future__ import annotations

import argparse
import math
import os
import sys
from pathlib import Path

from . import __version__
from .constants import ev_from_joule, gauss_from_tesla, magnetic_energy_scale_eV, tesla_from_gauss
from .densities import polarization_quadrature
from .errors import InvalidInputError
from .landau import QuantumNumbers, build_state, energy, kinetic_energy
from .moments import edm_closed, mdm_closed, mdm_finite_field
from .published import find_rows
from .report import (
    comparison_csv,
    comparison_rows,
    comparison_table,
    csv_text,
    load_sweep_spec,
    point_row,
    run_sweep,
    sweep_svg,
)
from .verification import run_checks

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID = 2
EXIT_IO = 3

OUT_DIR_ENV = "DMOMENTS_OUT_DIR"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _add_state_flags(p, *, need_energy: bool, energy_optional: bool = False):
    p.add_argument("--n", type=int, default=0, help="radial quantum number (default 0)")
    p.add_argument("--k", type=int, default=0, help="angular quantum number (default 0)")
    field = p.add_mutually_exclusive_group(required=True)
    field.add_argument("--B", type=float, metavar="TESLA", help="magnetic field in tesla")
    field.add_argument("--B-gauss", type=float, metavar="GAUSS", help="magnetic field in gauss")
    if need_energy:
        energy = p.add_mutually_exclusive_group(required=not energy_optional)
        energy.add_argument("--epsilon-eV", type=float, metavar="EV", help="kinetic energy in eV")
        energy.add_argument("--epsilon-J", type=float, metavar="J", help="kinetic energy in joule")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dmoments", description="Dipole moments of an electron in Landau levels.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", help="energy of a Landau level")
    _add_state_flags(p, need_energy=False)

    p = sub.add_parser("edm", help="electric dipole moment")
    _add_state_flags(p, need_energy=True)
    p.add_argument("--quadrature", action="store_true", help="also integrate the polarization density")
    p.add_argument("--compare-paper", action="store_true", help="show published values at this point")
    p.add_argument("--out", metavar="PATH", help="append the point as a CSV row")

    p = sub.add_parser("mdm", help="magnetic dipole moment")
    _add_state_flags(p, need_energy=True, energy_optional=True)

    p = sub.add_parser("sweep", help="evaluate a JSON sweep description")
    p.add_argument("config", metavar="CONFIG")
    p.add_argument("--out", metavar="PATH", help="CSV destination (default: $%s/<config>.csv or stdout)" % OUT_DIR_ENV)
    p.add_argument("--svg", metavar="PATH", help="also write a line chart")

    p = sub.add_parser("compare", help="published eEDM table next to the closed form")
    p.add_argument("--table", type=int, required=True, choices=(1, 2))
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--out", metavar="PATH", help="CSV destination (default: $%s/compare_table<N>.csv)" % OUT_DIR_ENV)

    sub.add_parser("verify", help="run the self-check suite")
    return parser


def _field(args) -> float:
    B = tesla_from_gauss(args.B_gauss) if args.B_gauss is not None else args.B
    if not (math.isfinite(B) and B > 0):
        raise InvalidInputError(f"magnetic field must be positive, got {B!r}")
    return B


def _epsilon(args) -> float | None:
    eps = ev_from_joule(args.epsilon_J) if args.epsilon_J is not None else args.epsilon_eV
    if eps is not None and not (math.isfinite(eps) and eps > 0):
        raise InvalidInputError(f"kinetic energy must be positive, got {eps!r}")
    return eps


def _default_out(name: str) -> Path | None:
    directory = os.environ.get(OUT_DIR_ENV)
    return Path(directory) / name if directory else None


def cmd_spectrum(args) -> int:
    qn = QuantumNumbers(args.n, args.k)
    B = _field(args)
    print(f"n={qn.n} k={qn.k} B={B:.6e} T")
    print(f"scale_eV   {magnetic_energy_scale_eV(B):.12e}")
    print(f"E_eV       {energy(qn, B):.12e}")
    print(f"epsilon_eV {kinetic_energy(qn, B):.12e}")
    return EXIT_OK


def cmd_edm(args) -> int:
    qn = QuantumNumbers(args.n, args.k)
    B, eps = _field(args), _epsilon(args)
    result = edm_closed(qn, B, eps)
    scale = magnetic_energy_scale_eV(B)
    print(f"p1 = {result.value:.6e} e*cm  (closed form)")
    print(f"p2 = i * p1 = {result.p2.imag:.6e}i e*cm")
    print(f"regime {result.regime}, scale_eV {scale:.6e}, epsilon/scale {eps / scale:.6e}")
    if args.quadrature:
        quad = polarization_quadrature(build_state(qn, B, epsilon=eps))
        print(f"p1 = {quad:.6e} e*cm  (quadrature, rel diff {abs(quad / result.value - 1):.1e})")
    if args.compare_paper:
        hits = find_rows(eps, gauss_from_tesla(B))
        if not hits:
            print("no published value at this (epsilon, B)")
        for source, value in hits:
            print(f"published {value!r} e*cm ({source}); computed/published = {result.value / value:.3e}")
    if args.out:
        text = csv_text([point_row("edm", qn, B, eps)])
        path = Path(args.out)
        if path.exists() and path.stat().st_size:
            text = text.split("\n", 1)[1]
        with open(path, "a", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return EXIT_OK


def cmd_mdm(args) -> int:
    qn = QuantumNumbers(args.n, args.k)
    B, eps = _field(args), _epsilon(args)
    result = mdm_finite_field(qn, B, eps)
    print(f"mu_B (weak-field limit) = {mdm_closed():.10e} J/T")
    print(f"finite-field moment     = {result.value:.10e} J/T  (ratio {result.value / mdm_closed():.12f})")
    print(f"regime {result.regime}, epsilon_eV {result.epsilon:.6e}")
    return EXIT_OK


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def cmd_sweep(args) -> int:
    spec = load_sweep_spec(args.config)
    rows = run_sweep(spec)
    text = csv_text(rows)
    out = Path(args.out) if args.out else _default_out(Path(args.config).stem + ".csv")
    if out is None:
        sys.stdout.write(text)
    else:
        _write(out, text)
        print(f"wrote {len(rows)} rows to {out}", file=sys.stderr)
    if args.svg:
        _write(Path(args.svg), sweep_svg(spec, rows))
    return EXIT_OK


def cmd_compare(args) -> int:
    rows = comparison_rows(args.table, QuantumNumbers(args.n, args.k))
    print(f"Table {args.table}: published eEDM values next to the closed form at n={args.n}, k={args.k}")
    print("informational only: the quantum numbers behind the published values are not given")
    print(comparison_table(rows))
    out = Path(args.out) if args.out else _default_out(f"compare_table{args.table}.csv")
    if out is not None:
        _write(out, comparison_csv(rows))
        print(f"wrote {out}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_checks()
    for r in results:
        print(f"[{'PASS' if r.passed else 'FAIL'}] {r.name:<28} {r.detail} ({r.seconds:.2f} s)")
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} groups passed")
    return EXIT_OK if not failed else EXIT_VERIFY_FAILED


COMMANDS = {
    "spectrum": cmd_spectrum,
    "edm": cmd_edm,
    "mdm": cmd_mdm,
    "sweep": cmd_sweep,
    "compare": cmd_compare,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INVALID
    except SystemExit as exc:  # --help and --version
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except InvalidInputError as exc:
        print(parser.format_usage(), end="", file=sys.stderr)
        print(f"dmoments: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"dmoments: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
