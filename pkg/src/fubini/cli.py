"""Command-line front end.

Four subcommands: ``compute`` prints sequence values, ``verify`` sweeps
the identity suite, ``egf`` prints exact generating-function
coefficients, and ``bfile`` checks/exports/fetches OEIS b-files.

Exit codes: 0 success (all identities pass), 1 identity or crosscheck
failure, 2 usage error, 3 environment error (network disabled or
transport failure).
"""

import argparse
import json
import sys
import urllib.error

from fubini import bfiles, identities, sequences, series

__all__ = ["build_parser", "main"]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_ENV = 3

_RANGE_SEQUENCES = {
    # name -> (first index, function of n)
    "bell": (0, sequences.ordered_bell),
    "cyclic": (1, sequences.cyclic_ordered_bell),
    "cyclic-even": (1, sequences.cyclic_ordered_bell_even),
    "cyclic-odd": (1, sequences.cyclic_ordered_bell_odd),
}

_ROW_SEQUENCES = {
    # name -> function of n returning the row values for k = 0..n
    "stirling-row": sequences.stirling2_row,
    "worpitzky-row": lambda n: [sequences.worpitzky(n, k) for k in range(n + 1)],
}

_EGF_BUILDERS = {
    "bell": series.ordered_bell_egf,
    "cyclic": series.cyclic_ordered_bell_egf,
    "double-shifted-bell": series.double_shifted_bell_egf,
    "cyclic-even": series.cyclic_ordered_bell_even_egf,
    "cyclic-odd": series.cyclic_ordered_bell_odd_egf,
}

_VERIFY_TARGETS = ("all", "bell", "cyclic", "alternating", "parity", "egf")


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fubini",
        description=(
            "Exact ordered Bell / partition-count sequences, identity "
            "verification, generating-function inspection, and OEIS "
            "b-file interchange."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser(
        "compute", help="print sequence values, one 'index value' line each"
    )
    compute.add_argument(
        "sequence",
        choices=sorted(_RANGE_SEQUENCES) + sorted(_ROW_SEQUENCES),
    )
    compute.add_argument("--max", type=int, dest="n_max", help="last index to print")
    compute.add_argument("--n", type=int, dest="row_n", help="row index for *-row sequences")
    compute.add_argument("--format", choices=("plain", "bfile"), default="plain")
    compute.set_defaults(func=_cmd_compute)

    verify = sub.add_parser("verify", help="sweep the identity suite")
    verify.add_argument("target", choices=_VERIFY_TARGETS)
    verify.add_argument("--max", type=int, dest="n_max", default=200)
    verify.add_argument("--order", type=int, default=64)
    verify.add_argument("--format", choices=("plain", "structured"), default="plain")
    verify.set_defaults(func=_cmd_verify)

    egf = sub.add_parser(
        "egf", help="print exact generating-function coefficients"
    )
    egf.add_argument("gf", choices=sorted(_EGF_BUILDERS) + ["stirling-col"])
    egf.add_argument("--order", type=int, required=True)
    egf.add_argument("--k", type=int, help="column for gf=stirling-col")
    egf.set_defaults(func=_cmd_egf)

    bfile = sub.add_parser("bfile", help="check/export/fetch OEIS b-files")
    bfile.add_argument("action", choices=("check", "export", "fetch"))
    bfile.add_argument("sequence_id", metavar="SEQUENCE_ID")
    bfile.add_argument("--limit", type=int, help="inclusive maximum index")
    bfile.add_argument("--network", action="store_true", help="allow fetching from oeis.org")
    bfile.add_argument("--cache-dir", help="override the fetch cache directory")
    bfile.set_defaults(func=_cmd_bfile)

    return parser


def _print_table(table: sequences.SequenceTable, fmt: str) -> None:
    # plain and b-file output share the "index value" line shape; the
    # bfile path goes through the emitter so round trips are exercised.
    if fmt == "bfile":
        sys.stdout.write(bfiles.emit_bfile(table))
    else:
        for i, value in enumerate(table.values):
            print(table.offset + i, value)


def _cmd_compute(args) -> int:
    name = args.sequence
    if name in _ROW_SEQUENCES:
        if args.row_n is None:
            return _usage_error(f"sequence {name!r} needs --n ROW")
        if args.row_n < 0:
            return _usage_error(f"--n must be >= 0, got {args.row_n}")
        values = _ROW_SEQUENCES[name](args.row_n)
        table = sequences.SequenceTable(name, 0, tuple(values))
    else:
        first, func = _RANGE_SEQUENCES[name]
        if args.n_max is None:
            return _usage_error(f"sequence {name!r} needs --max N")
        if args.n_max < first:
            return _usage_error(f"--max must be >= {first} for {name!r}, got {args.n_max}")
        values = [func(n) for n in range(first, args.n_max + 1)]
        table = sequences.SequenceTable(name, first, tuple(values))
    _print_table(table, args.format)
    return EXIT_OK


def _verify_reports(target: str, n_max: int, order: int):
    if target == "all":
        return identities.verify_all(n_max, order)
    if target == "bell":
        return identities.verify_bell_forms(n_max)
    if target == "cyclic":
        return identities.verify_cyclic_doubling(n_max)
    if target == "alternating":
        return identities.verify_alternating_sums(n_max)
    if target == "parity":
        return identities.verify_parity_split(n_max)
    return identities.verify_egf_agreement(order)


def _cmd_verify(args) -> int:
    try:
        reports = _verify_reports(args.target, args.n_max, args.order)
    except ValueError as exc:
        return _usage_error(str(exc))
    if args.format == "structured":
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        for report in reports:
            print(report.format_line())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _cmd_egf(args) -> int:
    if args.order < 0:
        return _usage_error(f"--order must be >= 0, got {args.order}")
    if args.gf == "stirling-col":
        if args.k is None:
            return _usage_error("gf 'stirling-col' needs --k COLUMN")
        if args.k < 0:
            return _usage_error(f"--k must be >= 0, got {args.k}")
        gf = series.stirling_column_egf(args.k, args.order)
    else:
        gf = _EGF_BUILDERS[args.gf](args.order)
    for n, coeff in enumerate(gf.coeffs):
        scaled = sequences.factorial(n) * coeff
        if scaled.denominator == 1:
            print(n, coeff, scaled)
        else:
            print(n, coeff)
    return EXIT_OK


def _cmd_bfile(args) -> int:
    sequence_id = args.sequence_id
    try:
        if args.action == "fetch":
            bfile = bfiles.fetch_bfile(
                sequence_id, network=args.network, cache_dir=args.cache_dir
            )
            print(f"fetched {sequence_id}: {len(bfile.entries)} entries")
            return EXIT_OK
        if args.action == "export":
            if args.limit is None:
                return _usage_error("bfile export needs --limit N")
            table = bfiles.computed_table(sequence_id, args.limit)
            sys.stdout.write(bfiles.emit_bfile(table))
            return EXIT_OK
        # check
        reference = bfiles.load_fixture(sequence_id)
        limit = args.limit if args.limit is not None else reference.last_index
        table = bfiles.computed_table(sequence_id, limit)
        report = bfiles.crosscheck(table, reference, limit)
        print(report.format_line())
        return EXIT_OK if report.passed else EXIT_FAIL
    except bfiles.OfflineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ENV
    except urllib.error.URLError as exc:
        print(f"error: transport failure: {exc}", file=sys.stderr)
        return EXIT_ENV
    except (ValueError, bfiles.BFileParseError) as exc:
        return _usage_error(str(exc))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
