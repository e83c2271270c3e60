"""Command-line front end.

Exit status: 0 on success, 1 when a mathematical precondition fails, 2 on
I/O or parse errors.
"""

from __future__ import annotations

import argparse
import math
import sys
from collections.abc import Sequence

import numpy as np

from z4lattice import catalog, f2core
from z4lattice.constructions import lift_c1_2c2, rm_unimodular
from z4lattice.enumerators import (
    DEFAULT_BUDGET,
    SwePolynomial,
    is_formally_self_dual,
    parse_enumerator,
    swe_from_code,
)
from z4lattice.errors import DomainError, ParseError
from z4lattice.secrecy import secrecy_csv, secrecy_function, secrecy_gain
from z4lattice.theta import q_expansion_a4, theta_a4
from z4lattice.z4core import Z4Code, dual, min_lee_distance, parse_z4_code


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _fmt(x: float, args) -> str:
    return f"{x:.{args.precision}g}"


def _load_code(args) -> Z4Code:
    if args.catalog:
        return catalog.get(args.catalog).code()
    if not args.input:
        raise ParseError("give an input file or --catalog NAME")
    return parse_z4_code(_read(args.input))


def _load_swe(args) -> SwePolynomial:
    """swe from a catalog entry, an SWE file, or a Z4 code file."""
    if args.catalog:
        return catalog.get(args.catalog).swe(budget=args.budget, threads=args.threads)
    if not args.input:
        raise ParseError("give an input file or --catalog NAME")
    text = _read(args.input)
    head = text.lstrip().split(maxsplit=1)[:1]
    if head == ["SWE"]:
        poly = parse_enumerator(text)
        assert isinstance(poly, SwePolynomial)
        return poly
    if head == ["Z4"]:
        return swe_from_code(parse_z4_code(text), budget=args.budget, threads=args.threads)
    raise ParseError("expected a Z4 code file or an SWE file")


def _split_f2_blocks(text: str) -> list[str]:
    blocks: list[list[str]] = []
    for line in text.splitlines():
        if line.strip().startswith("F2"):
            blocks.append([])
        if blocks:
            blocks[-1].append(line)
    return ["\n".join(b) for b in blocks]


def cmd_swe(args) -> str:
    return _load_swe(args).to_text()


def cmd_dual(args) -> str:
    return dual(_load_code(args)).to_text()


def cmd_check_fsd(args) -> str:
    p = _load_swe(args)
    return f"formally_self_dual={'true' if is_formally_self_dual(p) else 'false'}\n"


def cmd_theta(args) -> str:
    p = _load_swe(args)
    return f"theta={_fmt(theta_a4(p, args.tau), args)}\n"


def cmd_secrecy_gain(args) -> str:
    p = _load_swe(args)
    prof = secrecy_gain(p)
    out = prof.summary() + "\n"
    if prof.ambiguous:
        out += "warning: h has several global minima at t=" + ",".join(f"{t:.7f}" for t in prof.minima) + "\n"
    return out


def cmd_secrecy_function(args) -> str:
    p = _load_swe(args)
    if args.tau is not None:
        return f"xi={_fmt(secrecy_function(p, None, args.tau), args)}\n"
    if args.points < 1 or not (0 < args.min_tau <= args.max_tau):
        raise DomainError("need 0 < --min-tau <= --max-tau and --points >= 1")
    if args.points == 1:
        taus = [args.min_tau]
    else:
        taus = np.geomspace(args.min_tau, args.max_tau, args.points).tolist()
    return secrecy_csv(p, taus)


def cmd_lift(args) -> str:
    texts = [_read(p) for p in args.inputs]
    blocks = [b for t in texts for b in _split_f2_blocks(t)]
    if len(blocks) != 2:
        raise ParseError(f"lift needs exactly two F2 codes, found {len(blocks)}")
    c1, c2 = (f2core.parse_f2_code(b) for b in blocks)
    return lift_c1_2c2(c1, c2).to_text()


def cmd_rm(args) -> str:
    if args.unimodular:
        if len(args.params) != 1:
            raise ParseError("rm --unimodular takes exactly one argument m")
        return rm_unimodular(args.params[0]).to_text()
    if len(args.params) != 2:
        raise ParseError("rm takes two arguments r m")
    return f2core.reed_muller(*args.params).to_text()


def cmd_qexp(args) -> str:
    return q_expansion_a4(_load_code(args), args.max_norm).to_text()


def cmd_catalog(args) -> str:
    if not args.name:
        lines = ["name kind expected_gain"]
        for name, kind, gain in catalog.list_entries():
            lines.append(f"{name} {kind} {'-' if gain is None else gain}")
        return "\n".join(lines) + "\n"
    entry = catalog.get(args.name)
    if entry.kind == "swe-only":
        return entry.swe().to_text()
    if entry.kind == "binary-pair" and args.binary:
        c1, c2 = entry.payload
        return c1.to_text() + c2.to_text()
    return entry.code().to_text()


def cmd_table1(args) -> str:
    header = f"{'[n, M, dLee]':<18} {'source':<30} {'xi computed':>25} {'xi printed':>11} {'best known':>11}"
    lines = [header]
    for row in catalog.TABLE_I:
        if row.catalog_name is None:
            params, computed = row.params, "external input required"
            lines.append(f"{params:<18} {row.reference:<30} {computed:>25} {row.printed_gain:>11.3f} {row.best_known:>11.3f}")
            continue
        entry = catalog.get(row.catalog_name)
        code = entry.code()
        swe = entry.swe(budget=args.budget, threads=args.threads)
        gain = secrecy_gain(swe).gain
        dlee = min_lee_distance(code, budget=args.budget, threads=args.threads)
        kind = "sd" if row.params.endswith("sd") and not row.params.endswith("fsd") else "fsd"
        params = f"[{code.n},2^{int(math.log2(code.cardinality))},{dlee}]^{kind}"
        lines.append(f"{params:<18} {row.reference:<30} {gain:>25.3f} {row.printed_gain:>11.3f} {row.best_known:>11.3f}")
    return "\n".join(lines) + "\n"


def _source_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="input file ('-' for stdin)")
    p.add_argument("--catalog", metavar="NAME", help="use a built-in catalog entry")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="z4lattice", description=__doc__.splitlines()[0])
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max codewords to enumerate")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--precision", type=int, default=10, help="significant digits for reals")
    sub = parser.add_subparsers(dest="verb", required=True)

    for verb, func, help_ in [
        ("swe", cmd_swe, "symmetrized weight enumerator"),
        ("dual", cmd_dual, "dual code generator matrix"),
        ("check-fsd", cmd_check_fsd, "test formal self-duality"),
        ("secrecy-gain", cmd_secrecy_gain, "secrecy gain of a formally self-dual code"),
    ]:
        p = sub.add_parser(verb, help=help_)
        _source_args(p)
        p.set_defaults(func=func)

    p = sub.add_parser("theta", help="theta series of the Construction A4 lattice at z = i*tau")
    _source_args(p)
    p.add_argument("--tau", type=float, required=True)
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("secrecy-function", help="secrecy function at one tau, or a CSV over a log grid")
    _source_args(p)
    p.add_argument("--tau", type=float)
    p.add_argument("--min-tau", type=float, default=0.25)
    p.add_argument("--max-tau", type=float, default=4.0)
    p.add_argument("--points", type=int, default=33)
    p.set_defaults(func=cmd_secrecy_function)

    p = sub.add_parser("lift", help="Z4 code C1 + 2C2 from two F2 code files")
    p.add_argument("inputs", nargs="+", help="one file holding both codes, or two files")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("rm", help="Reed-Muller code R(r, m), or R(1,m) + 2R(m-2,m) with --unimodular")
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--unimodular", action="store_true")
    p.set_defaults(func=cmd_rm)

    p = sub.add_parser("qexp", help="lattice point counts by norm (direct enumeration)")
    _source_args(p)
    p.add_argument("--max-norm", type=float, required=True)
    p.set_defaults(func=cmd_qexp)

    p = sub.add_parser("catalog", help="list or export built-in entries")
    p.add_argument("name", nargs="?")
    p.add_argument("--binary", action="store_true", help="export binary pairs as two F2 blocks")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("table1", help="secrecy gains of the catalogued comparison-table codes")
    p.set_defaults(func=cmd_table1)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    stdout.write(out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
