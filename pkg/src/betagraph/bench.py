"""Scaling sweeps over generated families, CSV output and complexity fits.

Acceptance is on counts only.  Wall time is recorded when asked for and is
otherwise written as 0 so that reruns with the same seed give identical CSV.
"""

from __future__ import annotations

import csv
import math
import random
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from typing import Iterable, Sequence

import numpy as np

from .generators import GenSpec, family_beta_bound, generate
from .graph import ProbeCounter
from .mis import greedy_mis
from .mm import randomized_greedy_mm, mm_unknown_beta
from .verify import CapacityError, neighborhood_independence

ALGORITHMS = ("mis", "mm", "mm-auto")
MODELS = {"nb": "c*n*beta", "nblogn": "c*n*beta*ln(n)"}


@dataclass
class RunStats:
    family: str
    n: int
    beta: int
    seed: int
    algorithm: str
    probes: int
    iterations: int
    work: int
    wall_nanos: int
    completed: bool

    @property
    def marks(self) -> int:
        # MIS rows scan every vertex once, so the remainder of work is marking
        return self.work - self.iterations


CSV_COLUMNS = [f.name for f in fields(RunStats)]


def row_bound_ok(row: RunStats) -> bool:
    """Hard per-run guarantee: MIS work never exceeds n + n*beta; MM must finish."""
    if row.algorithm == "mis":
        return row.work <= row.n + row.n * row.beta
    return row.completed


def _beta_for(spec: GenSpec, g) -> int:
    bound = family_beta_bound(spec, g)
    if bound is not None:
        return bound
    try:
        return neighborhood_independence(g)
    except CapacityError:
        # every neighborhood is an independent-set candidate of at most max-degree size
        return g.max_degree()


def _trial_seeds(seed0: int, n: int, trial: int) -> tuple[int, int]:
    state = np.random.SeedSequence([seed0, n, trial]).generate_state(2, dtype=np.uint64)
    return int(state[0]), int(state[1])


def run_one(spec: GenSpec, n: int, trial: int, algorithm: str, seed0: int, timing: bool = False) -> RunStats:
    graph_seed, algo_seed = _trial_seeds(seed0, n, trial)
    s = spec.with_n(n, seed=graph_seed)
    g = generate(s)
    beta = _beta_for(s, g)
    pc = ProbeCounter()
    t0 = time.perf_counter_ns()
    if algorithm == "mis":
        _, st = greedy_mis(g, None, pc)
        iterations, work, completed = st.vertices_scanned, st.work, True
    elif algorithm == "mm":
        _, st, completed = randomized_greedy_mm(g, max(1, beta), random.Random(algo_seed), pc)
        iterations, work = st.iterations, st.work
    elif algorithm == "mm-auto":
        _, st = mm_unknown_beta(g, random.Random(algo_seed), pc)
        iterations, work, completed = st.iterations, st.work, True
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    wall = time.perf_counter_ns() - t0 if timing else 0
    return RunStats(spec.family, g.n, beta, algo_seed, algorithm, pc.total, iterations, work, wall, completed)


def _run_packed(args):
    return run_one(*args)


def sweep(
    spec: GenSpec,
    n_values: Sequence[int],
    trials: int,
    algorithm: str,
    seed0: int = 0,
    *,
    timing: bool = False,
    jobs: int = 1,
) -> list[RunStats]:
    """One row per (n, trial), ordered by n then trial whatever ``jobs`` is."""
    n_values = list(n_values)
    if not n_values:
        raise ValueError("n_values must be nonempty")
    if any(b <= a for a, b in zip(n_values, n_values[1:])):
        raise ValueError("n_values must be strictly ascending")
    if algorithm not in ALGORITHMS:
        raise ValueError(f"algorithm must be one of {ALGORITHMS}")
    tasks = [(spec, n, t, algorithm, seed0, timing) for n in n_values for t in range(trials)]
    try:
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as ex:
                return list(ex.map(_run_packed, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
        return [_run_packed(t) for t in tasks]
    except (ValueError, CapacityError) as exc:
        raise ValueError(f"sweep over {spec.family} failed: {exc}") from exc


def metric_value(row: RunStats, metric: str) -> float:
    if metric == "marks":
        return row.marks
    return getattr(row, metric)


def model_x(row: RunStats, model: str) -> float:
    base = row.n * row.beta
    if model == "nb":
        return float(base)
    if model == "nblogn":
        return base * math.log(row.n) if row.n > 1 else 0.0
    raise ValueError(f"model must be one of {sorted(MODELS)}")


@dataclass
class FitReport:
    model: str
    metric: str
    fitted_c: float
    r_squared: float
    residuals: dict[int, float]

    def to_text(self) -> str:
        lines = [
            f"model: {MODELS[self.model]}  metric: {self.metric}",
            f"fitted c = {self.fitted_c:.6g}",
            f"r^2 = {self.r_squared:.6f}",
            "n, mean residual",
        ]
        lines += [f"{n}, {r:.6g}" for n, r in sorted(self.residuals.items())]
        return "\n".join(lines) + "\n"

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as f:
            w = csv.writer(f)
            w.writerow(["model", "metric", "fitted_c", "r_squared", "n", "mean_residual"])
            for n, r in sorted(self.residuals.items()):
                w.writerow([self.model, self.metric, repr(self.fitted_c), repr(self.r_squared), n, repr(r)])


def fit(rows: Sequence[RunStats], model: str = "nb", metric: str = "work") -> FitReport:
    """Least-squares ``metric ~ c * model_x`` through the origin."""
    if not rows:
        raise ValueError("no rows to fit")
    x = np.array([model_x(r, model) for r in rows], dtype=float)
    y = np.array([metric_value(r, metric) for r in rows], dtype=float)
    denom = float(x @ x)
    c = float(x @ y) / denom if denom else 0.0
    res = y - c * x
    ss_res = float(res @ res)
    ss_tot = float(((y - y.mean()) ** 2).sum())
    if ss_tot == 0:
        r2 = 1.0 if ss_res <= 1e-12 * max(1.0, float(y @ y)) else 0.0
    else:
        r2 = min(1.0, max(0.0, 1.0 - ss_res / ss_tot))
    by_n: dict[int, list[float]] = defaultdict(list)
    for r, e in zip(rows, res):
        by_n[r.n].append(float(e))
    return FitReport(model, metric, c, r2, {n: float(np.mean(v)) for n, v in by_n.items()})


def loglog_slope(rows: Iterable[RunStats], metric: str = "work", per_log_n: bool = False) -> float:
    """Slope of log(mean metric) against log(n), optionally with the metric divided by ln n."""
    by_n: dict[int, list[float]] = defaultdict(list)
    for r in rows:
        v = metric_value(r, metric)
        by_n[r.n].append(v / math.log(r.n) if per_log_n else v)
    ns = sorted(by_n)
    if len(ns) < 2:
        raise ValueError("need at least two distinct n for a slope")
    xs = np.log(ns)
    ys = np.log([np.mean(by_n[n]) for n in ns])
    return float(np.polyfit(xs, ys, 1)[0])


def write_csv(rows: Iterable[RunStats], path) -> None:
    with open(path, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in rows:
            w.writerow(astuple(r))


def read_csv(path) -> list[RunStats]:
    out = []
    with open(path, newline="") as f:
        for rec in csv.DictReader(f):
            out.append(
                RunStats(
                    family=rec["family"],
                    n=int(rec["n"]),
                    beta=int(rec["beta"]),
                    seed=int(rec["seed"]),
                    algorithm=rec["algorithm"],
                    probes=int(rec["probes"]),
                    iterations=int(rec["iterations"]),
                    work=int(rec["work"]),
                    wall_nanos=int(rec["wall_nanos"]),
                    completed=rec["completed"] == "True",
                )
            )
    return out
