"""Command-line interface.

Exit codes: 0 clean, 2 a computed/predicted or backend mismatch,
3 ambiguity encountered (and nothing worse), 4 a size cap exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .braids import BraidWord, TorusLinkSpec, parse_link, torus_braid
from .colorings import enumerate_colorings_linear, enumerate_colorings_oracle
from .counting import (
    STATUS_MISMATCH,
    STATUS_AMBIGUOUS_RESOLVED,
    is_odd_prime,
    predict_count,
    verify_counts,
)
from .errors import AmbiguousCountError, CapExceededError
from .export import ExportOptions, to_csv, to_dot, to_json, quiver_to_dict
from .quandles import DihedralQuandle, affine_endomorphisms, brute_force_endomorphisms
from .quivers import build_quiver, isomorphic, quiver_form_for_count, realize

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_AMBIGUOUS = 3
EXIT_CAP = 4


def parse_int_list(text: str) -> list[int]:
    """'5,7' / '0..20' / '1,4..6' -> sorted unique ints."""
    out: set[int] = set()
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError(f"empty range {part!r}")
            out.update(range(lo, hi + 1))
        else:
            out.add(int(part))
    if not out:
        raise ValueError(f"no integers in {text!r}")
    return sorted(out)


def _torus_params(word: BraidWord, link_text: str) -> tuple[int, int] | None:
    text = link_text.strip()
    if text.startswith("torus:"):
        p, q = text[len("torus:"):].split(",")
        return int(p), int(q)
    return None


def _write(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_count(args) -> int:
    word = parse_link(args.link)
    torus = _torus_params(word, args.link)
    backends = (
        ["formula", "linear", "oracle"] if args.backend == "all" else [args.backend]
    )
    exit_code = EXIT_OK
    records = []
    for n in parse_int_list(args.n):
        row: dict = {"link": args.link.strip(), "n": n}
        values: dict[str, int] = {}
        prediction = None
        for backend in backends:
            if backend == "formula":
                if torus is None or not is_odd_prime(torus[0]):
                    if args.backend == "formula":
                        print(
                            "count: the formula backend needs torus:p,q with p an odd prime",
                            file=sys.stderr,
                        )
                        return EXIT_MISMATCH
                    continue
                prediction = predict_count(torus[0], torus[1], n)
                row["case"] = prediction.case
                if prediction.ambiguous:
                    row["predicted"] = list(prediction.candidates)
                else:
                    values["formula"] = prediction.n_colorings
                    row["predicted"] = prediction.n_colorings
            elif backend == "linear":
                try:
                    values["linear"] = enumerate_colorings_linear(
                        word, n, count_only=True
                    ).count
                except CapExceededError as exc:
                    print(f"count: {exc}", file=sys.stderr)
                    return EXIT_CAP
            elif backend == "oracle":
                try:
                    values["oracle"] = enumerate_colorings_oracle(
                        word, DihedralQuandle(n), cap=args.oracle_cap, count_only=True
                    ).count
                except CapExceededError as exc:
                    print(f"count: {exc}", file=sys.stderr)
                    return EXIT_CAP
        computed = {v for k, v in values.items() if k != "formula"}
        if len(computed) > 1:
            print(
                f"count: backend disagreement for n={n}: "
                + ", ".join(f"{k}={v}" for k, v in sorted(values.items())),
                file=sys.stderr,
            )
            return EXIT_MISMATCH
        if prediction is not None and prediction.ambiguous:
            if computed:
                winner = computed.pop()
                row["count"] = winner
                row["status"] = (
                    STATUS_AMBIGUOUS_RESOLVED
                    if winner in prediction.candidates
                    else STATUS_MISMATCH
                )
                if row["status"] == STATUS_MISMATCH:
                    exit_code = EXIT_MISMATCH
                elif exit_code == EXIT_OK:
                    exit_code = EXIT_AMBIGUOUS
                print(
                    f"{row['link']} n={n}: candidates "
                    f"{prediction.candidates}, computed {winner} [{row['status']}]"
                )
            else:
                row["status"] = "ambiguous"
                if exit_code == EXIT_OK:
                    exit_code = EXIT_AMBIGUOUS
                print(f"{row['link']} n={n}: ambiguous, candidates {prediction.candidates}")
        else:
            if "formula" in values and computed and values["formula"] not in computed:
                row["status"] = STATUS_MISMATCH
                exit_code = EXIT_MISMATCH
            else:
                row["status"] = "ok"
            count = computed.pop() if computed else values.get("formula")
            row["count"] = count
            case = f" case={row['case']}" if "case" in row else ""
            print(f"{row['link']} n={n}: N={count}{case} [{row['status']}]")
        records.append(row)
    if args.json:
        _write(args.json, to_json(records))
    return exit_code


def cmd_quiver(args) -> int:
    word = parse_link(args.link)
    n = int(args.n)
    torus = _torus_params(word, args.link)
    coloring_set = enumerate_colorings_linear(word, n, cap=args.enum_cap)
    if coloring_set.colorings is None:
        print(
            f"quiver: {coloring_set.count} colorings exceed the enumeration cap",
            file=sys.stderr,
        )
        return EXIT_CAP
    if args.endos == "brute":
        try:
            endos = brute_force_endomorphisms(coloring_set.quandle)
        except CapExceededError as exc:
            print(f"quiver: {exc}", file=sys.stderr)
            return EXIT_CAP
    else:
        endos = affine_endomorphisms(n)
    quiver = build_quiver(coloring_set, endos)

    exit_code = EXIT_OK
    if args.compare:
        if torus is None:
            print("quiver: --compare needs a torus:p,q link", file=sys.stderr)
            return EXIT_MISMATCH
        p, q = torus
        ambiguous = False
        if is_odd_prime(p):
            prediction = predict_count(p, q, n)
            ambiguous = prediction.ambiguous
        try:
            form = quiver_form_for_count(p, n, coloring_set.count)
        except ValueError as exc:
            print(f"quiver: {exc}", file=sys.stderr)
            return EXIT_MISMATCH
        result = isomorphic(quiver, realize(form))
        if result.verdict is True:
            note = " (ambiguous count, resolved by computation)" if ambiguous else ""
            print(f"isomorphic=true{note}")
            if ambiguous:
                exit_code = EXIT_AMBIGUOUS
        elif result.verdict is False:
            print("isomorphic=false")
            exit_code = EXIT_MISMATCH
        else:
            print(f"isomorphic=undecided after {result.expansions} expansions")
            exit_code = EXIT_MISMATCH

    options = ExportOptions(
        collapse_blocks=args.collapse, include_loops=not args.no_loops
    )
    if args.format == "dot":
        _write(args.out, to_dot(quiver, options))
    else:
        if args.collapse:
            print("quiver: --collapse applies to dot output only", file=sys.stderr)
            return EXIT_MISMATCH
        params = {"n": n}
        if torus is not None:
            params = {"p": torus[0], "q": torus[1], "n": n}
        _write(args.out, to_json(quiver, params=params))
    return exit_code


def cmd_verify(args) -> int:
    ps = parse_int_list(args.p)
    for p in ps:
        if not is_odd_prime(p):
            print(f"verify: p must be odd primes, got {p}", file=sys.stderr)
            return EXIT_MISMATCH
    report = verify_counts(
        ps,
        parse_int_list(args.q),
        parse_int_list(args.n),
        cap=args.oracle_cap,
        jobs=args.jobs,
    )
    mismatches = [r for r in report if r.status == STATUS_MISMATCH]
    resolved = [r for r in report if r.status == STATUS_AMBIGUOUS_RESOLVED]
    print(
        f"{len(report)} cells: {len(report) - len(mismatches) - len(resolved)} match, "
        f"{len(resolved)} ambiguous-resolved, {len(mismatches)} mismatch"
    )
    for record in mismatches:
        print(
            f"  mismatch at (p={record.p}, q={record.q}, n={record.n}): "
            f"predicted {record.prediction.candidates}, computed {record.computed}"
        )
    if args.out:
        _write(args.out, to_json(report))
    if args.csv:
        _write(args.csv, to_csv(report))
    if mismatches:
        return EXIT_MISMATCH
    if resolved:
        return EXIT_AMBIGUOUS
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quandlequiver",
        description="Count quandle colorings of braid closures and draw their quivers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="count colorings of a link by R_n")
    count.add_argument("--link", required=True, help="torus:p,q or a braid word like 's1 -s2'")
    count.add_argument("--n", required=True, help="modulus or list/range, e.g. 5 or 2..9")
    count.add_argument(
        "--backend",
        choices=["formula", "linear", "oracle", "all"],
        default="all",
    )
    count.add_argument("--oracle-cap", type=int, default=None)
    count.add_argument("--json", default=None, help="write records to this JSON file")
    count.set_defaults(func=cmd_count)

    quiver = sub.add_parser("quiver", help="build the coloring quiver")
    quiver.add_argument("--link", required=True)
    quiver.add_argument("--n", required=True, type=int)
    quiver.add_argument("--endos", choices=["affine", "brute"], default="affine")
    quiver.add_argument("--compare", action="store_true",
                        help="check the computed quiver against its closed form")
    quiver.add_argument("--format", choices=["dot", "json"], default="dot")
    quiver.add_argument("--collapse", action="store_true",
                        help="collapse uniform blocks (dot only)")
    quiver.add_argument("--no-loops", action="store_true",
                        help="omit loop edges from full dot output")
    quiver.add_argument("--enum-cap", type=int, default=None)
    quiver.add_argument("--out", default=None, help="output path (default stdout)")
    quiver.set_defaults(func=cmd_quiver)

    verify = sub.add_parser("verify", help="sweep a grid and compare all routes")
    verify.add_argument("--p", required=True, help="odd primes, e.g. 5,7")
    verify.add_argument("--q", required=True, help="range, e.g. 0..20")
    verify.add_argument("--n", required=True, help="range, e.g. 2..9")
    verify.add_argument("--oracle-cap", type=int, default=None)
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument("--out", default=None, help="JSON report path")
    verify.add_argument("--csv", default=None, help="CSV report path")
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except AmbiguousCountError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_AMBIGUOUS


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
