"""Command-line interface: solve, verify, oracle, generate, bench.

Exit codes: 0 success, 1 a theorem bound was violated, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import random
import sys
from fractions import Fraction
from typing import Sequence

from .core import (
    Allocation,
    Instance,
    Mode,
    SubsidyVector,
    format_rational,
    instance_to_json,
    load_instance,
    to_rational,
)
from .instances import Family, gen_lower_bound_efs, gen_lower_bound_prop, gen_random, random_weights
from .oracle import DEFAULT_CAP, oracle_min_total_efs_subsidy, oracle_min_total_subsidy
from .pipeline import Algorithm, solve
from .verify import fairness_report

CSV_COLUMNS = [
    "seed", "n", "m", "family", "algorithm",
    "total_subsidy", "bound", "tight_ratio", "fairness_flags",
]

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt(q: Fraction, args) -> str:
    return format_rational(q, getattr(args, "decimal", False))


def _vector(s: Sequence[Fraction], args) -> str:
    return "(" + ", ".join(_fmt(x, args) for x in s) + ")"


def _bundles(alloc: Allocation) -> str:
    return "; ".join(
        f"agent {i + 1}: {{{', '.join(f'e{e + 1}' for e in b)}}}" for i, b in enumerate(alloc.bundles)
    )


def _range(text: str) -> list[int]:
    """'4..8' -> [4, 5, 6, 7, 8]; '5' -> [5]."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(text)]
    except ValueError:
        raise UsageError(f"bad range {text!r}; use N or LO..HI") from None
    if not values:
        raise UsageError(f"empty range {text!r}")
    return values


def cmd_solve(args) -> int:
    inst = load_instance(args.file)
    if args.mode and Mode(args.mode) is not inst.mode:
        raise UsageError(f"instance is {inst.mode.value}, not {args.mode}")
    sol = solve(inst, args.algorithm)
    print(f"algorithm: {sol.algorithm.value}")
    print(f"allocation: {_bundles(sol.allocation)}")
    if sol.ido_outcome is not None:
        ido = sol.ido_outcome
        print(f"ido rounding: {ido.scheme.value}")
        print(f"ido subsidies: {_vector(ido.subsidies.s, args)} total {_fmt(ido.total, args)}")
    print(f"subsidies: {_vector(sol.subsidies.s, args)}")
    print(f"total: {_fmt(sol.total, args)}")
    print(f"bound: {_fmt(sol.bound, args)}")
    print("PASS" if sol.passed else "FAIL")
    return EXIT_OK if sol.passed else EXIT_VIOLATION


def _load_allocation(path: str, n: int) -> tuple[Allocation, SubsidyVector | None]:
    with open(path) as fh:
        obj = json.load(fh)
    bundles = [[e - 1 for e in b] for b in obj["bundles"]]
    if len(bundles) != n:
        raise UsageError(f"allocation has {len(bundles)} bundles for {n} agents")
    s = None
    if "subsidies" in obj:
        s = SubsidyVector(tuple(to_rational(v) for v in obj["subsidies"]))
    return Allocation.from_bundles(bundles), s


def cmd_verify(args) -> int:
    inst = load_instance(args.file)
    alloc, s = _load_allocation(args.allocation, inst.n)
    report = fairness_report(inst, alloc, s)
    for name in ("prop", "prop1", "propx", "ef", "ef1", "efs", "props"):
        value = getattr(report, name)
        if value is not None:
            print(f"{name}: {'yes' if value else 'no'}")
    print(f"shares: {_vector(report.shares, args)}")
    print(f"min subsidies: {_vector(report.deficits, args)} total {_fmt(sum(report.deficits, Fraction(0)), args)}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    inst = load_instance(args.file)
    value, witness = oracle_min_total_subsidy(inst, cap=args.cap)
    print(f"min total subsidy: {_fmt(value, args)}")
    print(f"witness: {_bundles(witness)}")
    if args.efs:
        print(f"min total EFS subsidy: {_fmt(oracle_min_total_efs_subsidy(inst, cap=args.cap), args)}")
    if args.algorithm:
        sol = solve(inst, args.algorithm)
        ok = sol.total >= value
        print(f"{sol.algorithm.value} total: {_fmt(sol.total, args)} ({'>=' if ok else '<'} oracle)")
        if not ok:
            return EXIT_VIOLATION
    return EXIT_OK


def cmd_generate(args) -> int:
    mode = Mode(args.mode or "chores")
    if args.lower_bound == "prop":
        inst = gen_lower_bound_prop(args.n, mode)
    elif args.lower_bound == "efs":
        inst = gen_lower_bound_efs(args.n)
    else:
        if args.m is None:
            raise UsageError("--m is required for random families")
        inst = gen_random(args.n, args.m, args.seed, args.family, mode)
    text = json.dumps(instance_to_json(inst))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def bench_instance(algorithm: Algorithm, family: Family, mode: Mode, n: int, m: int, seed: int) -> Instance:
    inst = gen_random(n, m, seed, family, mode)
    if algorithm is Algorithm.WEIGHTED_LOAD_BALANCE and not inst.is_weighted:
        inst = Instance(inst.mode, inst.matrix, random_weights(n, seed))
    return inst


def bench_row(algorithm: Algorithm, family: Family, mode: Mode, n: int, m: int, seed: int) -> dict:
    inst = bench_instance(algorithm, family, mode, n, m, seed)
    sol = solve(inst, algorithm)
    s = sol.subsidies if algorithm is Algorithm.EFS else None
    report = fairness_report(inst, sol.allocation, s)
    ratio = sol.total / sol.bound if sol.bound else Fraction(0)
    return {
        "seed": seed, "n": n, "m": m, "family": family.value, "algorithm": algorithm.value,
        "total_subsidy": str(sol.total), "bound": str(sol.bound), "tight_ratio": str(ratio),
        "fairness_flags": "|".join(report.flags()),
    }


def _bench_task(task):
    return bench_row(*task)


def cmd_bench(args) -> int:
    algorithm = Algorithm(args.algorithm)
    family = Family(args.family)
    mode = Mode(args.mode or "chores")
    n_values, m_values = _range(args.n), _range(args.m)
    # sizes are drawn from their own stream so the sweep is fixed by --seed
    rng = random.Random(f"bench:{args.seed}")
    tasks = []
    for t in range(args.trials):
        n, m = rng.choice(n_values), rng.choice(m_values)
        tasks.append((algorithm, family, mode, n, m, args.seed + t))
    if args.jobs > 1 and tasks:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_bench_task, tasks, chunksize=16))
    else:
        rows = [_bench_task(task) for task in tasks]
    rows.sort(key=lambda r: (r["seed"], r["n"], r["m"]))
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if args.out:
            out.close()
    violations = [r for r in rows if Fraction(r["total_subsidy"]) > Fraction(r["bound"])]
    if violations:
        print(f"bound violated in {len(violations)} trial(s)", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fairsubsidy", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log algorithm steps")
    sub = parser.add_subparsers(dest="command", required=True)
    algorithms = [a.value for a in Algorithm]

    p = sub.add_parser("solve", help="allocate and report subsidies")
    p.add_argument("file")
    p.add_argument("--algorithm", choices=algorithms, default=Algorithm.MOVING_KNIFE_ROUND_BEST.value)
    p.add_argument("--mode", choices=[m.value for m in Mode])
    p.add_argument("--decimal", action="store_true", help="append decimal approximations")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check fairness of a given allocation")
    p.add_argument("file")
    p.add_argument("allocation", help='JSON {"bundles": [[1,2],[3]], "subsidies": ["1/2","0"]}')
    p.add_argument("--decimal", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force minimum subsidy")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--efs", action="store_true", help="also compute the minimum EFS subsidy")
    p.add_argument("--algorithm", choices=algorithms, help="compare an algorithm against the oracle")
    p.add_argument("--decimal", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("generate", help="write an instance file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--family", default=Family.UNIFORM.value, help="uniform, bimodal, identical or weighted")
    p.add_argument("--mode", choices=[m.value for m in Mode])
    p.add_argument("--lower-bound", choices=["prop", "efs"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="seeded sweep written as CSV")
    p.add_argument("--algorithm", choices=algorithms, default=Algorithm.MOVING_KNIFE_ROUND_BEST.value)
    p.add_argument("--n", default="2..8")
    p.add_argument("--m", default="1..12")
    p.add_argument("--family", default=Family.UNIFORM.value, help="uniform, bimodal, identical or weighted")
    p.add_argument("--mode", choices=[m.value for m in Mode])
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
