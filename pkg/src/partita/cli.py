"""Command line front end.

Subcommands:

* ``p N M`` / ``q N M``: one partition count, optionally forced onto a
  specific algorithm, recounted by the enumeration oracle, or explained
  (dispatch choice plus step models).
* ``list ...``: whole rows, columns and series prefixes.
* ``bench N``: step models and optional wall-clock timings for both
  algorithms across a range of m, or a fitted crossover point.
* ``cache ...``: save, validate and inspect series cache files.

Output formats: ``plain`` (human-oriented), ``csv``, ``json``.  Counts
appear in JSON as decimal strings, since they outgrow the integers many
JSON consumers can hold.  Exit codes: 0 success, 2 bad usage or bad
values (including oracle limits and I/O failures), 3 malformed cache
file.
"""

import argparse
import json
import sys
from fractions import Fraction
from statistics import median_low
from time import perf_counter_ns

from . import core, lists, oracle, series

__all__ = ["build_parser", "main"]


def _index(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _positive(text):
    value = _index(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _fraction(text):
    # accepts "2.7", "27/10", "3"; stored exactly, never as a float
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _emit(text, out_path):
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.write(text)


def _load_p_cache(path):
    loaded = series.load_series(path)
    if not isinstance(loaded, series.PartitionSeries):
        raise ValueError(f"{path} holds a Q series; scalar commands need a P cache")
    return loaded


def _plan_for(kind, n, m, constant):
    if kind == "q":
        n = n - m * (m - 1) // 2
        if n < 0:
            return core.StepEstimate(0, 0, core.FAST_PATH)
    return core.dispatch_plan(n, m, constant)


def _scalar_output(args, value, plan):
    if args.format == "json":
        params = {
            "n": args.n,
            "m": args.m,
            "algorithm": "oracle" if args.oracle else args.algorithm,
        }
        if plan is not None:
            params["chosen"] = plan.chosen
            params["steps_alg1"] = plan.alg1
            params["steps_alg2"] = plan.alg2
        payload = {"kind": args.kind, "params": params, "value": str(value)}
        return json.dumps(payload, separators=(",", ":")) + "\n"
    if args.format == "csv":
        if plan is not None:
            return (
                "n,m,value,chosen,steps_alg1,steps_alg2\n"
                f"{args.n},{args.m},{value},{plan.chosen},{plan.alg1},{plan.alg2}\n"
            )
        return f"n,m,value\n{args.n},{args.m},{value}\n"
    text = f"{value}\n"
    if plan is not None:
        text += f"chosen={plan.chosen} steps_alg1={plan.alg1} steps_alg2={plan.alg2}\n"
    return text


def _sequence_output(args, kind, params, start, values):
    if args.format == "json":
        payload = {
            "kind": kind,
            "params": {**params, "start_index": start},
            "values": [str(v) for v in values],
        }
        return json.dumps(payload, separators=(",", ":")) + "\n"
    if args.format == "csv":
        lines = ["index,value"]
        lines.extend(f"{start + i},{v}" for i, v in enumerate(values))
        return "\n".join(lines) + "\n"
    return ",".join(map(str, values)) + "\n"


def _cmd_scalar(args):
    cache = _load_p_cache(args.cache) if args.cache else None
    distinct = args.kind == "q"
    if args.oracle:
        value = oracle.count_partitions(args.n, args.m, distinct=distinct)
    elif distinct:
        value = core.q_parts(
            args.n, args.m, cache, args.crossover_constant, args.algorithm
        )
    else:
        value = core.p_parts(
            args.n, args.m, cache, args.crossover_constant, args.algorithm
        )
    plan = None
    if args.explain:
        plan = _plan_for(args.kind, args.n, args.m, args.crossover_constant)
    _emit(_scalar_output(args, value, plan), args.out)


def _cmd_p_row(args):
    values = lists.p_row(args.n)
    _emit(_sequence_output(args, "p-row", {"n": args.n}, 1, values), args.out)


def _cmd_p_col(args):
    # n < m means the column has no entries, not that the call is bad
    if args.n < args.m:
        values = []
    else:
        values = lists.p_column(args.n, args.m, strategy=args.strategy)
    params = {"n": args.n, "m": args.m}
    _emit(_sequence_output(args, "p-col", params, args.m, values), args.out)


def _cmd_q_row(args):
    values = lists.q_row(args.n)
    _emit(_sequence_output(args, "q-row", {"n": args.n}, 1, values), args.out)


def _cmd_q_col(args):
    values = lists.q_column(args.n, args.m, strategy=args.strategy)
    start = args.m * (args.m + 1) // 2
    params = {"n": args.n, "m": args.m}
    _emit(_sequence_output(args, "q-col", params, start, values), args.out)


def _cmd_p_series(args):
    s = series.PartitionSeries(algorithm=args.series_algorithm)
    s.ensure(args.n)
    params = {"n": args.n, "algorithm": args.series_algorithm}
    _emit(_sequence_output(args, "p-series", params, 0, s.values), args.out)


def _cmd_q_series(args):
    s = series.DistinctSeries(algorithm=args.series_algorithm)
    s.ensure(args.n)
    params = {"n": args.n, "algorithm": args.series_algorithm}
    _emit(_sequence_output(args, "q-series", params, 0, s.values), args.out)


def _parse_m_range(text, n):
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise ValueError("--m-range must be LO:HI or LO:HI:STEP")
    try:
        lo, hi = int(parts[0]), int(parts[1])
        step = int(parts[2]) if len(parts) == 3 else 1
    except ValueError:
        raise ValueError(f"bad --m-range {text!r}")
    if lo < 1 or hi < lo or step < 1:
        raise ValueError("--m-range needs 1 <= LO <= HI and STEP >= 1")
    return range(lo, min(hi, n) + 1, step)


def _median_time_ns(fn, repetitions):
    times = []
    for _ in range(repetitions):
        start = perf_counter_ns()
        fn()
        times.append(perf_counter_ns() - start)
    return median_low(times)


def _bench_rows(args):
    n = args.n
    cache = series.PartitionSeries()
    rows = []
    for m in _parse_m_range(args.m_range or f"1:{n}", n):
        plan = core.dispatch_plan(n, m, args.crossover_constant)
        row = {
            "m": m,
            "steps_alg1": plan.alg1,
            "steps_alg2": plan.alg2,
            "chosen": plan.chosen,
        }
        if not args.steps_only:
            cache.ensure(n - m)  # warm outside the timed region
            row["time_alg1_ns"] = _median_time_ns(
                lambda: core.p_parts_alg1(n, m), args.repetitions
            )
            row["time_alg2_ns"] = _median_time_ns(
                lambda: core.p_parts_alg2(n, m, cache), args.repetitions
            )
        rows.append(row)
    return rows


def _bench_table_output(args, rows):
    fields = ["m", "steps_alg1", "steps_alg2"]
    if not args.steps_only:
        fields += ["time_alg1_ns", "time_alg2_ns"]
    fields.append("chosen")
    if args.format == "json":
        payload = {
            "kind": "bench",
            "params": {
                "n": args.n,
                "m_range": args.m_range or f"1:{args.n}",
                "repetitions": args.repetitions,
                "steps_only": args.steps_only,
                "crossover_constant": str(args.crossover_constant),
            },
            "rows": rows,
        }
        return json.dumps(payload, separators=(",", ":")) + "\n"
    cells = [fields] + [[str(row[f]) for f in fields] for row in rows]
    if args.format == "csv":
        return "\n".join(",".join(row) for row in cells) + "\n"
    widths = [max(len(row[i]) for row in cells) for i in range(len(fields))]
    lines = (
        "  ".join(cell.rjust(width) for cell, width in zip(row, widths))
        for row in cells
    )
    return "\n".join(lines) + "\n"


def _bench_fit_output(args, rows):
    # first sampled m where algorithm 1 measured slower, plus the two
    # predictions it should be compared against: the step-model
    # crossover and the dispatcher threshold floor(c*sqrt(n))
    crossed = next(
        (row["m"] for row in rows if row["time_alg1_ns"] > row["time_alg2_ns"]), None
    )
    constant = None if crossed is None else crossed / args.n**0.5
    analytic = float(core.analytic_crossover(args.n))
    practical = core.practical_crossover(args.n, args.crossover_constant)
    if args.format == "json":
        payload = {
            "kind": "bench-fit",
            "params": {"n": args.n, "m_range": args.m_range or f"1:{args.n}"},
            "m": crossed,
            "constant": None if constant is None else round(constant, 4),
            "analytic": round(analytic, 2),
            "practical": practical,
        }
        return json.dumps(payload, separators=(",", ":")) + "\n"
    if args.format == "csv":
        head = "m,constant,analytic,practical\n"
        if crossed is None:
            return head + f",,{analytic:.2f},{practical}\n"
        return head + f"{crossed},{constant:.4f},{analytic:.2f},{practical}\n"
    if crossed is None:
        return f"no crossover in range; analytic={analytic:.2f} practical={practical}\n"
    return (
        f"m={crossed} constant={constant:.4f} "
        f"analytic={analytic:.2f} practical={practical}\n"
    )


def _cmd_bench(args):
    if args.n < 1:
        raise ValueError("bench requires n >= 1")
    if args.fit_crossover and args.steps_only:
        raise ValueError("--fit-crossover needs timings; drop --steps-only")
    rows = _bench_rows(args)
    if args.fit_crossover:
        _emit(_bench_fit_output(args, rows), args.out)
    else:
        _emit(_bench_table_output(args, rows), args.out)


def _cmd_cache_save(args):
    s = series.DistinctSeries() if args.kind == "q" else series.PartitionSeries()
    s.ensure(args.n)
    series.save_series(s, args.path)
    print(f"wrote {len(s.values)} values to {args.path}")


def _kind_of(s):
    return "p" if isinstance(s, series.PartitionSeries) else "q"


def _cmd_cache_load(args):
    s = series.load_series(args.path)
    print(f"{args.path}: ok, kind={_kind_of(s)}, {len(s.values)} values")


def _cmd_cache_info(args):
    s = series.load_series(args.path)
    print(f"kind: {_kind_of(s)}")
    print(f"length: {len(s.values)}")
    print(f"sha256: {series.series_checksum(s)}")


def build_parser():
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument(
        "--format", choices=("plain", "csv", "json"), default="plain",
        help="output format (default plain)",
    )
    fmt.add_argument("--out", metavar="PATH", help="write output to PATH")

    scalar = argparse.ArgumentParser(add_help=False)
    scalar.add_argument("n", type=_index, help="number being partitioned")
    scalar.add_argument("m", type=_index, help="number of parts")
    scalar.add_argument(
        "--algorithm", choices=("auto", "alg1", "alg2", "closed"), default="auto",
        help="force a computation route (default auto)",
    )
    scalar.add_argument(
        "--crossover-constant", type=_fraction, default=core.DEFAULT_CROSSOVER,
        metavar="C", help="auto picks alg1 while m <= C*sqrt(n) (default 2.7)",
    )
    scalar.add_argument(
        "--explain", action="store_true",
        help="also report the dispatch choice and both step models",
    )
    scalar.add_argument(
        "--oracle", action="store_true",
        help="recount by direct enumeration instead (slow, n <= 80)",
    )
    scalar.add_argument(
        "--cache", metavar="PATH", help="seed the series cache from a saved P cache"
    )

    parser = argparse.ArgumentParser(
        prog="partita",
        description="Count integer partitions of n into exactly m parts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser(
        "p", parents=[scalar, fmt], help="partitions of N into exactly M parts"
    )
    sp.set_defaults(func=_cmd_scalar, kind="p")
    sq = sub.add_parser(
        "q", parents=[scalar, fmt], help="partitions of N into M distinct parts"
    )
    sq.set_defaults(func=_cmd_scalar, kind="q")

    lst = sub.add_parser("list", help="whole rows, columns and series prefixes")
    lsub = lst.add_subparsers(dest="table", required=True)

    pr = lsub.add_parser("p-row", parents=[fmt], help="P(n, m) for m = 1..n")
    pr.add_argument("n", type=_positive)
    pr.set_defaults(func=_cmd_p_row)

    pc = lsub.add_parser("p-col", parents=[fmt], help="P(i, m) for i = m..n")
    pc.add_argument("n", type=_index)
    pc.add_argument("m", type=_index)
    pc.add_argument(
        "--strategy", choices=("auto", "direct", "conv"), default="auto",
        help="column construction route (default auto)",
    )
    pc.set_defaults(func=_cmd_p_col)

    qr = lsub.add_parser("q-row", parents=[fmt], help="Q(n, m) for all feasible m")
    qr.add_argument("n", type=_positive)
    qr.set_defaults(func=_cmd_q_row)

    qc = lsub.add_parser(
        "q-col", parents=[fmt], help="Q(i, m) for i = m(m+1)/2..n"
    )
    qc.add_argument("n", type=_index)
    qc.add_argument("m", type=_index)
    qc.add_argument(
        "--strategy", choices=("auto", "direct", "conv"), default="auto",
        help="column construction route (default auto)",
    )
    qc.set_defaults(func=_cmd_q_col)

    ps = lsub.add_parser("p-series", parents=[fmt], help="P(0), P(1), ..., P(n)")
    ps.add_argument("n", type=_index)
    ps.add_argument(
        "--series-algorithm", choices=series.PartitionSeries.ALGORITHMS,
        default="ewell", help="recurrence used to extend the series",
    )
    ps.set_defaults(func=_cmd_p_series)

    qs = lsub.add_parser("q-series", parents=[fmt], help="Q(0), Q(1), ..., Q(n)")
    qs.add_argument("n", type=_index)
    qs.add_argument(
        "--series-algorithm", choices=series.DistinctSeries.ALGORITHMS,
        default="merca", help="recurrence used to extend the series",
    )
    qs.set_defaults(func=_cmd_q_series)

    bench = sub.add_parser(
        "bench", parents=[fmt],
        help="compare both algorithms across a range of m",
    )
    bench.add_argument("n", type=_positive)
    bench.add_argument(
        "--m-range", metavar="LO:HI[:STEP]", default=None,
        help="inclusive range of m to sample (default 1:N)",
    )
    bench.add_argument(
        "--repetitions", type=_positive, default=3, metavar="R",
        help="timing runs per cell; the low median is reported (default 3)",
    )
    bench.add_argument(
        "--steps-only", action="store_true",
        help="report step models only, skip wall-clock timing",
    )
    bench.add_argument(
        "--fit-crossover", action="store_true",
        help="report the first sampled m where alg1 measures slower than alg2",
    )
    bench.add_argument(
        "--crossover-constant", type=_fraction, default=core.DEFAULT_CROSSOVER,
        metavar="C", help="constant used for the chosen column (default 2.7)",
    )
    bench.set_defaults(func=_cmd_bench)

    cache = sub.add_parser("cache", help="save, validate and inspect cache files")
    csub = cache.add_subparsers(dest="action", required=True)

    save = csub.add_parser("save", help="compute a series and write it to a file")
    save.add_argument("path")
    save.add_argument("-n", type=_index, required=True, help="highest index to store")
    save.add_argument(
        "--kind", choices=("p", "q"), default="p",
        help="which series to store (default p)",
    )
    save.set_defaults(func=_cmd_cache_save)

    load = csub.add_parser("load", help="validate a cache file")
    load.add_argument("path")
    load.set_defaults(func=_cmd_cache_load)

    info = csub.add_parser("info", help="report kind, length and checksum")
    info.add_argument("path")
    info.set_defaults(func=_cmd_cache_info)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except series.CacheFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
