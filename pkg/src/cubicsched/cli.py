"""Command line front end.

Exit status: 0 success, 1 input error, 2 infeasible or unsupported instance.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .coloring import greedy_independent_set
from .errors import BudgetExceeded, CubicSchedError, InputError, UnsupportedInstance
from .graph import Chromatic, format_graph, parse_graph, random_cubic
from .oracle import DEFAULT_BUDGET, optimal_schedule_exact
from .scheduler import MachineSpeeds, Schedule, fraction_text, schedule

CSV_HEADER = [
    "seed", "n", "greedy_set_size", "route",
    "alg_makespan", "oracle_makespan", "ratio", "error",
]

CLASSES = {"bicubic": Chromatic.BICUBIC, "tricubic": Chromatic.TRICUBIC}


def schedule_json(sched: Schedule) -> str:
    doc = {
        "route": sched.route,
        "makespan": fraction_text(sched.makespan),
        "loads": [sorted(v + 1 for v in load) for load in sched.loads],
    }
    return json.dumps(doc, sort_keys=True)


@dataclass(frozen=True)
class ExperimentConfig:
    n: int
    count: int
    seed_base: int
    speeds: MachineSpeeds
    class_filter: Chromatic
    oracle_enabled: bool = False

    def __post_init__(self):
        if self.count < 1:
            raise InputError("count must be at least 1")
        if self.n % 2 or self.n < 6:
            raise InputError(f"n must be even and at least 6, got {self.n}")
        if self.n > DEFAULT_BUDGET.max_vertices:
            object.__setattr__(self, "oracle_enabled", False)


def experiment_row(config: ExperimentConfig, i: int) -> list[str]:
    seed = config.seed_base + i
    row = {k: "" for k in CSV_HEADER}
    row["seed"], row["n"] = str(seed), str(config.n)
    try:
        g = random_cubic(config.n, seed, config.class_filter)
        row["greedy_set_size"] = str(len(greedy_independent_set(g)))
        sched = schedule(g, config.speeds)
        row["route"] = sched.route
        row["alg_makespan"] = fraction_text(sched.makespan)
        if config.oracle_enabled:
            opt = optimal_schedule_exact(g, config.speeds).makespan
            row["oracle_makespan"] = fraction_text(opt)
            row["ratio"] = f"{float(sched.makespan / opt):.6f}"
    except (CubicSchedError, ValueError) as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
    return [row[k] for k in CSV_HEADER]


def _row_star(args):
    return experiment_row(*args)


def run_experiment(config: ExperimentConfig, workers: int = 1) -> list[list[str]]:
    """One row per instance, in seed order whatever the worker count."""
    jobs = [(config, i) for i in range(config.count)]
    if workers <= 1:
        return [experiment_row(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_row_star, jobs, chunksize=max(1, len(jobs) // (4 * workers))))


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    w.writerows(rows)
    return buf.getvalue()


def summarize(config: ExperimentConfig, rows) -> str:
    ok = [r for r in rows if not r[7]]
    big = sum(1 for r in ok if 5 * int(r[2]) >= 2 * config.n)
    parts = [f"instances={len(rows)}", f"errors={len(rows) - len(ok)}"]
    if ok:
        parts.append(f"greedy>=0.4n={big / len(ok):.3f}")
        if config.oracle_enabled:
            hits = sum(1 for r in ok if r[4] == r[5])
            worst = max(float(r[6]) for r in ok)
            parts += [f"alg=opt={hits / len(ok):.3f}", f"max_ratio={worst:.6f}"]
    return " ".join(parts)


# -- commands -------------------------------------------------------------------


def _load(path: str):
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(data)


def cmd_solve(args) -> int:
    g = _load(args.graph)
    speeds = MachineSpeeds.parse(args.speeds)
    print(schedule_json(schedule(g, speeds)))
    return 0


def cmd_oracle(args) -> int:
    g = _load(args.graph)
    speeds = MachineSpeeds.parse(args.speeds)
    print(schedule_json(optimal_schedule_exact(g, speeds)))
    return 0


def cmd_gen(args) -> int:
    cls = CLASSES[args.cls] if args.cls else None
    g = random_cubic(args.n, args.seed, cls)
    Path(args.out).write_text(format_graph(g))
    return 0


def cmd_experiment(args) -> int:
    config = ExperimentConfig(
        n=args.n,
        count=args.count,
        seed_base=args.seed_base,
        speeds=MachineSpeeds.parse(args.speeds),
        class_filter=CLASSES[args.cls],
        oracle_enabled=args.oracle,
    )
    rows = run_experiment(config, args.workers)
    text = rows_to_csv(rows)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    print(summarize(config, rows), file=sys.stderr)
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cubicsched", description="Schedule unit jobs on three uniform machines.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="schedule an instance")
    s.add_argument("--graph", required=True)
    s.add_argument("--speeds", required=True, help="S1,S2,S3 (integers or p/q)")
    s.set_defaults(func=cmd_solve)

    o = sub.add_parser("oracle", help="exact optimum by exhaustive search (n <= 20)")
    o.add_argument("--graph", required=True)
    o.add_argument("--speeds", required=True)
    o.set_defaults(func=cmd_oracle)

    g = sub.add_parser("gen", help="write a random connected cubic graph")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--class", dest="cls", choices=sorted(CLASSES))
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_gen)

    e = sub.add_parser("experiment", help="batch of random instances to CSV")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--count", type=int, required=True)
    e.add_argument("--seed-base", type=int, required=True)
    e.add_argument("--speeds", required=True)
    e.add_argument("--class", dest="cls", choices=sorted(CLASSES), required=True)
    e.add_argument("--oracle", action="store_true")
    e.add_argument("--workers", type=int, default=1)
    e.add_argument("--out", required=True, help="CSV path, or - for stdout")
    e.set_defaults(func=cmd_experiment)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except UnsupportedInstance as exc:
        print(str(exc) if str(exc).startswith("infeasible") else f"unsupported: {exc}",
              file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return 2
    except CubicSchedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
