"""Command-line entry point.

    mixsim sweep --circuit shor --out shor.csv
    mixsim analyze --state bell --transpose-qubits 1

Exit codes: 0 success, 1 configuration or parse error, 2 a matrix failed
numerical validation.
"""

import argparse
import sys
from functools import reduce
from pathlib import Path

import numpy as np

from mixsim.analysis import is_ppt, negativity
from mixsim.errors import MixsimError, ParseError, ValidationError
from mixsim.numerics import kron
from mixsim.states import n_qubits, state, validate_density
from mixsim.sweep import SweepConfig, run_sweep, write_csv

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC = 0, 1, 2

_SQ2 = 1.0 / np.sqrt(2.0)
_SINGLE_QUBIT = {
    "0": np.array([1, 0]),
    "1": np.array([0, 1]),
    "+": np.array([_SQ2, _SQ2]),
    "-": np.array([_SQ2, -_SQ2]),
}


def parse_qubit_list(text: str) -> tuple:
    """``"1,2,3"`` -> ``(1, 2, 3)``; an empty string gives ``()``."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ParseError(f"bad qubit list {text!r}; expected e.g. 1,2,3") from None


def read_density_file(path) -> np.ndarray:
    """Read the plain-text matrix format.

    First line ``dim <d>``, then ``d`` rows of ``d`` whitespace-separated
    complex entries such as ``0.5``, ``0.25+0j`` or ``-1e-3-0.5j``.
    """
    try:
        lines = [ln.strip() for ln in Path(path).read_text(encoding="utf-8").splitlines()]
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError(f"{path}: empty file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "dim":
        raise ParseError(f"{path}: first line must be 'dim <d>', got {lines[0]!r}")
    try:
        d = int(head[1])
    except ValueError:
        raise ParseError(f"{path}: bad dimension {head[1]!r}") from None
    rows = lines[1:]
    if d < 1 or len(rows) != d:
        raise ParseError(f"{path}: expected {d} matrix rows, found {len(rows)}")
    out = np.empty((d, d), dtype=complex)
    for i, row in enumerate(rows):
        entries = row.split()
        if len(entries) != d:
            raise ParseError(f"{path}: row {i + 1} has {len(entries)} entries, expected {d}")
        try:
            out[i] = [complex(e) for e in entries]
        except ValueError:
            raise ParseError(f"{path}: row {i + 1} has an unparsable entry: {row!r}") from None
    return out


def write_density_file(rho, path) -> None:
    rho = np.asarray(rho, dtype=complex)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"dim {rho.shape[0]}\n")
        for row in rho:
            fh.write(" ".join(f"{z.real:.17g}{z.imag:+.17g}j" for z in row) + "\n")


def named_state(spec: str) -> np.ndarray:
    """Density matrix for ``bell``, ``ghz[:n]``, ``product:<kets>`` or ``file:<path>``.

    ``product`` takes a comma-separated list of single-qubit kets from
    ``0``, ``1``, ``+`` and ``-``, e.g. ``product:0,+,1``.
    """
    kind, _, arg = spec.partition(":")
    if kind == "bell":
        if arg:
            raise ParseError("bell takes no argument")
        return state(np.array([1, 0, 0, 1]) * _SQ2)
    if kind == "ghz":
        try:
            n = int(arg) if arg else 3
        except ValueError:
            raise ParseError(f"ghz qubit count {arg!r} is not an integer") from None
        if n < 2:
            raise ParseError("ghz needs at least 2 qubits")
        psi = np.zeros(2**n)
        psi[0] = psi[-1] = _SQ2
        return state(psi)
    if kind == "product":
        labels = [t.strip() for t in arg.split(",") if t.strip()]
        if not labels or any(t not in _SINGLE_QUBIT for t in labels):
            raise ParseError(f"product state needs kets from 0,1,+,-; got {arg!r}")
        return state(reduce(kron, (_SINGLE_QUBIT[t] for t in labels)).ravel())
    if kind == "file":
        if not arg:
            raise ParseError("file: needs a path")
        return validate_density(read_density_file(arg))
    raise ParseError(f"unknown state {spec!r}; use bell, ghz, product:... or file:<path>")


def cmd_analyze(state_spec: str, q) -> dict:
    rho = named_state(state_spec)
    q = tuple(q)
    return {
        "state": state_spec,
        "qubits": n_qubits(rho.shape[0]),
        "transpose_qubits": q,
        "negativity": negativity(rho, q),
        "ppt": is_ppt(rho, q),
    }


def _sweep(args) -> int:
    config = SweepConfig(
        circuit=args.circuit,
        a=args.a,
        p_start=args.p_start,
        p_end=args.p_end,
        p_step=args.p_step,
        measured_qubits=parse_qubit_list(args.measured_qubits),
        out_path=args.out,
    )
    records = run_sweep(config)
    try:
        write_csv(records, config.out_path)
    except OSError as exc:
        print(f"error: cannot write {config.out_path}: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    print(f"wrote {len(records)} records to {config.out_path}")
    return EXIT_OK


def _analyze(args) -> int:
    report = cmd_analyze(args.state, parse_qubit_list(args.transpose_qubits))
    print(f"state: {report['state']} ({report['qubits']} qubits)")
    print(f"transpose qubits: {','.join(map(str, report['transpose_qubits']))}")
    print(f"negativity: {report['negativity']:.12g}")
    print(f"ppt: {str(report['ppt']).lower()}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixsim", description="Mixed-state quantum circuit simulation."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sw = sub.add_parser("sweep", help="depolarizing-noise sweep, written as CSV")
    sw.add_argument("--circuit", choices=("shor", "trivial"), required=True)
    sw.add_argument("--a", type=int, default=7, help="base for the order-finding circuit")
    sw.add_argument("--p-start", type=float, default=0.0)
    sw.add_argument("--p-end", type=float, default=1.0)
    sw.add_argument("--p-step", type=float, default=0.01)
    sw.add_argument("--measured-qubits", default="1,2,3", help="comma-separated, 1-based")
    sw.add_argument("--out", required=True, help="CSV output path")
    sw.set_defaults(func=_sweep)

    an = sub.add_parser("analyze", help="negativity and PPT test for a state")
    an.add_argument("--state", required=True, help="bell | ghz[:n] | product:0,1,+,- | file:<path>")
    an.add_argument("--transpose-qubits", required=True, help="comma-separated, 1-based")
    an.set_defaults(func=_analyze)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors; those are config errors here
        return EXIT_OK if exc.code == 0 else EXIT_CONFIG
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except MixsimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
