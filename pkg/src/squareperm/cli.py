"""Command-line front end.

Exit codes: 0 success, 1 a well-formed negative result (a decode
failure, a failed verification), 2 usage or format errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle, render, sampler, series
from .codec import (
    DecodeMode,
    Failure,
    Success,
    decode,
    encode,
    format_marked_word,
    marked_word_to_json,
    parse_marked_word,
)
from .perm import (
    Corner,
    Slope,
    format_permutation_text,
    parse_permutation_text,
    subclass_report,
)
from .permutomino import (
    format_permutomino_text,
    from_colored_permutation,
    parse_permutomino_text,
    to_colored_permutation,
)
from .series import CountFamily

_SAMPLE_FAMILIES = ("square", "fully-indec", "convex-permutomino")


def _series_by_name(which: str, order: int):
    if which == "narayana":
        return series.narayana_series(order)
    if which == "w":
        return series.free_word_series(order)
    if which == "m":
        return series.marked_word_series(order)
    if which == "sq":
        return series.square_refined_series(order)
    if which == "t-nw":
        return series.nw_failure_series(order)
    if which == "t-sw":
        return series.sw_failure_series(order)
    if which == "cp":
        return series.refined_series_by_enumeration(
            CountFamily.CONVEX_PERMUTOMINO, order
        )
    if which == "fully-indec":
        return series.refined_series_by_enumeration(CountFamily.FULLY_INDEC, order)
    raise ValueError(f"unknown series {which!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="squareperm",
        description="Square permutations, convex permutominoes, marked words: "
        "count, encode, decode, sample, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact family count")
    p.add_argument("--family", required=True, choices=[f.value for f in CountFamily])
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("series", help="print a truncated series")
    p.add_argument(
        "--which",
        required=True,
        choices=["narayana", "w", "m", "sq", "t-nw", "t-sw", "cp", "fully-indec"],
    )
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("encode", help="marked word of a colored square permutation")
    p.add_argument("--perm", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("decode", help="decode a marked word")
    p.add_argument("--word", required=True)
    p.add_argument(
        "--mode", default="square", choices=[m.value for m in DecodeMode]
    )
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("classify", help="records and subclass flags")
    p.add_argument("--perm", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sample", help="uniform random objects")
    p.add_argument("--family", default="square", choices=_SAMPLE_FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sample-grid", help="uniform generic grid configurations")
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--polygon", action="store_true")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("render", help="write an ASCII or SVG picture")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--perm")
    group.add_argument("--permutomino")
    p.add_argument("--format", default="ascii", choices=["ascii", "svg"])
    p.add_argument("--out", required=True)

    p = sub.add_parser("verify", help="run the brute-force audit suite")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--json", action="store_true")
    return parser


def _cmd_count(args) -> int:
    print(series.count(CountFamily(args.family), args.n))
    return 0


def _cmd_series(args) -> int:
    s = _series_by_name(args.which, args.order)
    if args.json:
        print(json.dumps(series.series_to_json(s), sort_keys=True))
    else:
        for line in series.series_lines(s):
            print(line)
    return 0


def _cmd_encode(args) -> int:
    cp = parse_permutation_text(args.perm)
    word = encode(cp)
    if args.json:
        print(json.dumps(marked_word_to_json(word), sort_keys=True))
    else:
        print(format_marked_word(word))
    return 0


def _failure_json(outcome: Failure) -> dict:
    return {
        "status": "failure",
        "stop_index": outcome.stop_index,
        "kind": outcome.kind.value,
        "prefix": list(outcome.prefix.values),
        "pair": list(outcome.pair),
        "suffix_u": outcome.suffix_u,
        "suffix_v": outcome.suffix_v,
    }


def _cmd_decode(args) -> int:
    word = parse_marked_word(args.word)
    outcome = decode(word, DecodeMode(args.mode))
    if isinstance(outcome, Success):
        if args.json:
            print(
                json.dumps(
                    {
                        "status": "success",
                        "perm": format_permutation_text(outcome.result),
                    }
                )
            )
        else:
            print(format_permutation_text(outcome.result))
        return 0
    if isinstance(outcome, Failure):
        if args.json:
            print(json.dumps(_failure_json(outcome)))
        else:
            print(
                f"failure at {outcome.stop_index} ({outcome.kind.value}): "
                f"prefix {','.join(map(str, outcome.prefix.values))}, "
                f"pair ({outcome.pair[0]},{outcome.pair[1]})"
            )
        return 1
    print(f"internal contradiction: {outcome.diagnostic}", file=sys.stderr)
    return 1


def _cmd_classify(args) -> int:
    cp = parse_permutation_text(args.perm)
    report = subclass_report(cp)
    if args.json:
        print(
            json.dumps(
                {
                    "perm": format_permutation_text(cp),
                    "square": report.square,
                    "triangular": {
                        c.value: report.triangular[c] for c in Corner
                    },
                    "parallel": {s.value: report.parallel[s] for s in Slope},
                    "decomposable": report.decomposable,
                    "co_decomposable": report.co_decomposable,
                    "upper_count": report.upper_count,
                    "left_count": report.left_count,
                },
                sort_keys=True,
            )
        )
        return 0
    print(f"square: {report.square}")
    for c in Corner:
        print(f"triangular[{c.value} free]: {report.triangular[c]}")
    for s in Slope:
        print(f"parallel[{s.value}]: {report.parallel[s]}")
    print(f"decomposable: {report.decomposable}")
    print(f"co-decomposable: {report.co_decomposable}")
    print(f"upper points: {report.upper_count}")
    print(f"left points: {report.left_count}")
    return 0


def _cmd_sample(args) -> int:
    family = CountFamily(args.family)
    items = []
    for i in range(args.count):
        rng = sampler.substream(args.seed, i)
        obj = sampler.sample_object(family, args.n, rng)
        if family is CountFamily.CONVEX_PERMUTOMINO:
            items.append(format_permutomino_text(obj))
        else:
            items.append(format_permutation_text(obj))
    if args.json:
        print(
            json.dumps(
                {
                    "family": family.value,
                    "n": args.n,
                    "seed": args.seed,
                    "items": items,
                },
                sort_keys=True,
            )
        )
    else:
        for item in items:
            print(item)
    return 0


def _cmd_sample_grid(args) -> int:
    for i in range(args.count):
        rng = sampler.substream(args.seed, i)
        if args.polygon:
            obj = sampler.sample_convex_polygon(args.cols, args.rows, args.points, rng)
        else:
            obj = sampler.sample_exterior_config(args.cols, args.rows, args.points, rng)
        obj.validate()
        print(json.dumps(obj.to_json(), sort_keys=True))
    return 0


def _cmd_render(args) -> int:
    if args.perm is not None:
        cp = parse_permutation_text(args.perm)
        text = (
            render.svg_permutation(cp)
            if args.format == "svg"
            else render.ascii_permutation(cp) + "\n"
        )
    else:
        p = parse_permutomino_text(args.permutomino)
        text = (
            render.svg_permutomino(p)
            if args.format == "svg"
            else render.ascii_permutomino(p) + "\n"
        )
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(text)
    return 0


def _cmd_verify(args) -> int:
    max_n = args.max_n
    reports = []
    failures = []

    def check(name: str, ok: bool, detail: str = "") -> None:
        line = f"{'ok' if ok else 'FAIL'}: {name}"
        if detail and not ok:
            line += f" ({detail})"
        reports.append(line)
        if not ok:
            failures.append(name)

    for family in (
        CountFamily.SQUARE,
        CountFamily.TRIANGULAR,
        CountFamily.PARALLEL,
        CountFamily.FULLY_INDEC,
    ):
        for n in range(1, min(max_n, 8) + 1):
            brute = len(oracle.brute_enumerate(family, n))
            check(
                f"count {family.value} n={n}",
                brute == series.count(family, n),
                f"brute {brute}",
            )
    for n in range(2, min(max_n, 5) + 1):
        direct = len(oracle.enumerate_permutominoes(n))
        via_perms = len(oracle.brute_enumerate(CountFamily.CONVEX_PERMUTOMINO, n))
        expected = series.count(CountFamily.CONVEX_PERMUTOMINO, n)
        check(
            f"count convex-permutomino n={n}",
            direct == via_perms == expected,
            f"boundary {direct}, colored {via_perms}",
        )
        ok = all(
            from_colored_permutation(to_colored_permutation(p)) == p
            for p in oracle.enumerate_permutominoes(n)
        )
        check(f"permutomino bijection round-trip n={n}", ok)
    audit_reports = []
    for mode in DecodeMode:
        top = min(max_n, 7 if mode is DecodeMode.PERMUTOMINO else 8)
        for n in range(2, top + 1):
            report = oracle.bijection_audit(mode, n)
            audit_reports.append(report.to_json())
            check(
                f"audit {mode.value} n={n}",
                report.ok,
                "; ".join(report.violations[:3]),
            )
    check(
        "generic grid census 5x5 n=3",
        oracle.brute_generic_grid_count(5, 5, 3) == 600,
    )
    check(
        "generic polygon census 4x4 n=2",
        oracle.brute_generic_grid_count(4, 4, 2, polygon=True) == 36,
    )

    if args.json:
        print(
            json.dumps(
                {"checks": reports, "failures": failures, "audits": audit_reports},
                sort_keys=True,
            )
        )
    else:
        for line in reports:
            print(line)
    return 1 if failures else 0


_HANDLERS = {
    "count": _cmd_count,
    "series": _cmd_series,
    "encode": _cmd_encode,
    "decode": _cmd_decode,
    "classify": _cmd_classify,
    "sample": _cmd_sample,
    "sample-grid": _cmd_sample_grid,
    "render": _cmd_render,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
