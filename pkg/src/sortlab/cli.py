"""Command-line front end: sort data, run benchmarks, probe stability, verify.

Exit codes: 0 success, 1 a check or verdict failed, 2 bad usage or bad input.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import heap_core
from .analysis import (
    DifferentialError,
    Distribution,
    dynamic_scenario,
    make_workload,
    reproduce_tables,
    run_sweep,
    write_csv,
)
from .baseline_sorts import AlgorithmId, KeyDomainError, PivotRule
from .heap_core import Heap, HeapOrder, build, is_heap
from .instrumentation import (
    STABILITY_EXPECTED,
    build_cost_audit,
    counted_sort,
    stability_check,
)
from .uhs_sort import SortOrder, uhs_sort

_ORDERS = {"asc": SortOrder.ASCENDING, "desc": SortOrder.DESCENDING}
_ALGO_VALUES = [a.value for a in AlgorithmId]
_DIST_VALUES = [d.value for d in Distribution]
_PIVOT_VALUES = [p.value for p in PivotRule]


def _size_item(token: str) -> int:
    token = token.strip()
    n = 2 ** int(token[2:]) if token.startswith("2^") else int(token)
    if n < 0:
        raise ValueError(f"size {token!r} is negative")
    return n


def parse_sizes(text: str) -> list[int]:
    """Accept '2^8..2^11' (doubling ladder) or a comma list like '100,200,2^10'."""
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = _size_item(lo_s), _size_item(hi_s)
            if lo < 1 or hi < lo:
                raise ValueError(f"bad size range {text!r}")
            sizes = []
            v = lo
            while v <= hi:
                sizes.append(v)
                v *= 2
            return sizes
        sizes = [_size_item(t) for t in text.split(",") if t.strip()]
        if not sizes:
            raise ValueError("no sizes given")
        return sizes
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _csv_list(valid: list[str], what: str):
    def parse(text: str) -> list[str]:
        items = [t.strip() for t in text.split(",") if t.strip()]
        if text.strip() == "all":
            return list(valid)
        for item in items:
            if item not in valid:
                raise argparse.ArgumentTypeError(
                    f"unknown {what} {item!r}; choose from {', '.join(valid)}"
                )
        if not items:
            raise argparse.ArgumentTypeError(f"no {what} given")
        return items

    return parse


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sortlab",
        description="Instrumented sorting algorithms and heap-backed priority queues.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sort = sub.add_parser("sort", help="sort values from a file or stdin")
    p_sort.add_argument("-a", "--algorithm", choices=_ALGO_VALUES, default="uhs")
    p_sort.add_argument("--order", choices=list(_ORDERS), default="asc")
    p_sort.add_argument("-i", "--input", help="input path, one value per line (default stdin)")
    p_sort.add_argument("-o", "--output", help="output path (default stdout)")
    p_sort.add_argument("--float", action="store_true", help="parse values as floats")
    p_sort.add_argument("--stats", action="store_true", help="print operation counts to stderr")
    p_sort.add_argument("--pivot", choices=_PIVOT_VALUES, default="random")
    p_sort.add_argument("--seed", type=int, default=0)

    p_bench = sub.add_parser("bench", help="sweep algorithms and emit CSV")
    p_bench.add_argument(
        "--algorithms",
        type=_csv_list(_ALGO_VALUES, "algorithm"),
        default=list(_ALGO_VALUES),
        help="comma list or 'all' (default all)",
    )
    p_bench.add_argument(
        "--sizes", type=parse_sizes, default=parse_sizes("2^8..2^11"),
        help="'2^a..2^b' doubling ladder or comma list (default 2^8..2^11)",
    )
    p_bench.add_argument(
        "--distributions",
        type=_csv_list(_DIST_VALUES, "distribution"),
        default=["random"],
        help="comma list or 'all' (default random)",
    )
    p_bench.add_argument("--trials", type=int, default=1)
    p_bench.add_argument("--order", choices=list(_ORDERS), default="asc")
    p_bench.add_argument("--pivot", choices=_PIVOT_VALUES, default="random")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--csv", help="write CSV here instead of stdout")

    p_stab = sub.add_parser("stability", help="report stability verdicts")
    p_stab.add_argument(
        "--algorithms",
        type=_csv_list(_ALGO_VALUES, "algorithm"),
        default=list(_ALGO_VALUES),
    )
    p_stab.add_argument("--trials", type=int, default=10_000)
    p_stab.add_argument("--seed", type=int, default=0)

    p_verify = sub.add_parser("verify", help="run the self-check suite")
    p_verify.add_argument(
        "--only",
        type=_csv_list(list(_CHECKS), "check"),
        default=None,
        help=f"comma list of checks (default all: {', '.join(_CHECKS)})",
    )
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    return parser


def _read_values(args) -> list | int:
    """Parse input values; returns the list, or an exit code on failure."""
    if args.input:
        try:
            text = Path(args.input).read_text()
        except OSError as e:
            print(f"cannot read {args.input}: {e}", file=sys.stderr)
            return 2
    else:
        text = sys.stdin.read()
    values = []
    for ln, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s:
            continue
        try:
            values.append(float(s) if args.float else int(s))
        except ValueError:
            print(f"input line {ln}: cannot parse {s!r}", file=sys.stderr)
            return 2
    return values


def _cmd_sort(args) -> int:
    algorithm = AlgorithmId(args.algorithm)
    if algorithm is AlgorithmId.BUCKET and not args.float:
        print("bucket sort takes float keys in [0, 1); pass --float", file=sys.stderr)
        return 2
    if algorithm is AlgorithmId.RADIX and args.float:
        print("radix sort takes non-negative integer keys; drop --float", file=sys.stderr)
        return 2
    values = _read_values(args)
    if isinstance(values, int):
        return values
    try:
        _, counters = counted_sort(
            algorithm,
            values,
            _ORDERS[args.order],
            seed=args.seed,
            pivot=PivotRule(args.pivot),
        )
    except KeyDomainError as e:
        print(str(e), file=sys.stderr)
        return 2
    out = "".join(f"{v}\n" for v in values)
    if args.output:
        try:
            Path(args.output).write_text(out)
        except OSError as e:
            print(f"cannot write {args.output}: {e}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(out)
    if args.stats:
        for name, value in counters.as_dict().items():
            print(f"{name}={value}", file=sys.stderr)
    return 0


def _cmd_bench(args) -> int:
    algorithms = [AlgorithmId(v) for v in args.algorithms]
    distributions = [Distribution(v) for v in args.distributions]
    if args.trials < 1:
        print("--trials must be >= 1", file=sys.stderr)
        return 2
    if AlgorithmId.RADIX in algorithms and Distribution.UNIFORM01 in distributions:
        print("radix sort cannot take uniform01 (float) keys", file=sys.stderr)
        return 2
    records = run_sweep(
        algorithms,
        args.sizes,
        distributions,
        trials=args.trials,
        seed=args.seed,
        order=_ORDERS[args.order],
        pivot=PivotRule(args.pivot),
    )
    if args.csv:
        try:
            with open(args.csv, "w") as fh:
                write_csv(records, fh)
        except OSError as e:
            print(f"cannot write {args.csv}: {e}", file=sys.stderr)
            return 2
    else:
        write_csv(records, sys.stdout)
    return 0


def _cmd_stability(args) -> int:
    ok = True
    for value in args.algorithms:
        algorithm = AlgorithmId(value)
        verdict = stability_check(algorithm, trials=args.trials, seed=args.seed)
        print(verdict.describe())
        if verdict.stable != STABILITY_EXPECTED[algorithm]:
            ok = False
    return 0 if ok else 1


def _check_build_cost(seed: int) -> tuple[bool, list[str]]:
    rows = build_cost_audit([2**10, 2**12, 2**14, 2**16], seed)
    lines = [f"n={r.n} comparisons={r.comparisons} bound={r.bound}" for r in rows]
    return all(r.ok for r in rows), lines


def _check_heap_invariants(seed: int) -> tuple[bool, list[str]]:
    rng = random.Random(seed)
    for trial in range(150):
        n = rng.randint(0, 128)
        arr = [rng.randint(-999, 999) for _ in range(n)]
        ordered = sorted(arr)
        built = arr[:]
        build(built)
        if not is_heap(built):
            return False, [f"trial {trial}: construction broke the heap property"]
        h = Heap(order=HeapOrder.MIN_AT_ROOT)
        for v in arr:
            h.push(v)
        if not is_heap(h.elements, h.heap_size, HeapOrder.MIN_AT_ROOT):
            return False, [f"trial {trial}: pushes broke the heap property"]
        drained = [h.pop_root() for _ in range(len(h))]
        if drained != ordered:
            return False, [f"trial {trial}: drain order wrong for {arr!r}"]
        sorted_arr = arr[:]
        uhs_sort(sorted_arr)
        if sorted_arr != ordered:
            return False, [f"trial {trial}: sort disagreed with oracle on {arr!r}"]
    return True, ["150 randomized build/push/drain/sort trials"]


def _check_differential(seed: int) -> tuple[bool, list[str]]:
    rng = random.Random(seed)
    comparison_algs = [
        AlgorithmId.INSERTION,
        AlgorithmId.MERGE,
        AlgorithmId.QUICK,
        AlgorithmId.BUBBLE,
        AlgorithmId.UHS,
    ]
    for trial in range(250):
        n = rng.randint(0, 100)
        ints = [rng.randint(0, max(1, 4 * n)) for _ in range(n)]
        floats = [rng.random() for _ in range(n)]
        for algorithm in comparison_algs + [AlgorithmId.RADIX]:
            got, _ = counted_sort(algorithm, ints[:], seed=trial)
            if got != sorted(ints):
                return False, [f"trial {trial}: {algorithm.value} missorted {ints!r}"]
        got, _ = counted_sort(AlgorithmId.BUCKET, floats[:], seed=trial)
        if got != sorted(floats):
            return False, [f"trial {trial}: bucket missorted"]
        got, _ = counted_sort(AlgorithmId.UHS, ints[:], SortOrder.DESCENDING)
        if got != sorted(ints, reverse=True):
            return False, [f"trial {trial}: descending sort missorted {ints!r}"]
    return True, ["250 randomized trials x 7 algorithms against the sorted() oracle"]


def _check_dynamic(seed: int) -> tuple[bool, list[str]]:
    try:
        report = dynamic_scenario(make_workload(10_000, seed))
    except DifferentialError as e:
        return False, [str(e)]
    line = (
        f"heap comparisons {report.heap_counters.comparisons} vs "
        f"oracle shifts {report.oracle_shifts} over {report.steps} ops"
    )
    return report.ok, [line]


def _check_tables(seed: int) -> tuple[bool, list[str]]:
    report = reproduce_tables(seed, stability_trials=2000)
    return report.ok, report.as_text().splitlines()


_CHECKS = {
    "build-cost": _check_build_cost,
    "heap-invariants": _check_heap_invariants,
    "differential": _check_differential,
    "dynamic": _check_dynamic,
    "tables": _check_tables,
}


def _cmd_verify(args) -> int:
    names = args.only if args.only else list(_CHECKS)
    all_ok = True
    if args.inject_fault:
        heap_core._FAULT_SIFT_DOWN_BLIND_RIGHT = True
    try:
        for name in names:
            ok, detail = _CHECKS[name](args.seed)
            print(f"{name}: {'PASS' if ok else 'FAIL'}")
            if not ok:
                for line in detail:
                    print(f"  {line}")
                all_ok = False
    finally:
        heap_core._FAULT_SIFT_DOWN_BLIND_RIGHT = False
    return 0 if all_ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    handlers = {
        "sort": _cmd_sort,
        "bench": _cmd_bench,
        "stability": _cmd_stability,
        "verify": _cmd_verify,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
