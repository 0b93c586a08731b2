"""Seeded Monte Carlo experiments on random graphs.

Three modes:

* ``fixed-delta``   -- probability that the difference of two fixed
  vertices generates the critical group of a connected random graph,
  conditioned on the group being cyclic.  (The conjectured limit is
  1/zeta(2) ~ 0.607927.)
* ``exists-delta``  -- probability that some two-vertex difference
  generates, under the same conditioning.
* ``order-conjecture`` -- on biconnected simple random graphs, whether
  for the fixed vertex 0 some other vertex gives a class of order >= n;
  failures are collected verbatim as counterexample candidates.

Determinism contract: the per-trial random stream is derived from
(seed, trial index) by a keyed hash, so results are bit-identical for a
fixed config regardless of worker count or scheduling.  Trials are
embarrassingly parallel; aggregation only sums counters.
"""

from __future__ import annotations

import hashlib
import json
import random
import struct
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction
from math import gcd

from . import kernels
from .multigraph import Multigraph, erdos_renyi, is_biconnected, is_connected

MODES = ("fixed-delta", "exists-delta", "order-conjecture")


@dataclass(frozen=True)
class ExperimentConfig:
    mode: str
    n: int
    p: Fraction = Fraction(1, 2)
    trials: int = 1000
    seed: int = 0
    jobs: int = 1
    resample_cap: int = 10 ** 6

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.n < 2:
            raise ValueError("need at least two vertices")
        if not (0 < Fraction(self.p) < 1):
            raise ValueError("edge probability must satisfy 0 < p < 1")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "n": self.n,
            "p": str(Fraction(self.p)),
            "trials": self.trials,
            "seed": self.seed,
        }

    @staticmethod
    def from_json_dict(d: dict, jobs: int = 1) -> "ExperimentConfig":
        return ExperimentConfig(
            mode=d["mode"], n=int(d["n"]), p=Fraction(d["p"]),
            trials=int(d["trials"]), seed=int(d["seed"]), jobs=jobs,
        )


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    successes: int
    trials_used: int
    resamples: int
    counterexamples: list = field(default_factory=list)
    elapsed: float = 0.0  # diagnostics only; never emitted

    @property
    def estimate(self) -> Fraction:
        return Fraction(self.successes, self.trials_used)

    @property
    def estimate_decimal(self) -> str:
        """Five decimal places, banker's rounding; matches table style."""
        d = Decimal(self.successes) / Decimal(self.trials_used)
        return str(d.quantize(Decimal("0.00001"), rounding=ROUND_HALF_EVEN))


def trial_rng(seed: int, trial: int) -> random.Random:
    """Independent stream per (seed, trial): a keyed hash of the pair
    seeds a fresh generator, so trial order and worker count are
    irrelevant."""
    digest = hashlib.blake2b(
        struct.pack("<Qq", seed & (2 ** 64 - 1), trial), digest_size=16
    ).digest()
    return random.Random(int.from_bytes(digest, "little"))


class ResampleCapExceeded(RuntimeError):
    pass


def _det_and_adjugate(g: Multigraph):
    # base = last vertex; builds the reduced Laplacian inline (the caller
    # already knows the graph is connected) and runs one kernel pass
    n = g.n
    lt = []
    for u in range(n - 1):
        row = g.adj[u]
        s = sum(row)
        lt.append([s if v == u else -row[v] for v in range(n - 1)])
    eye = [[1 if i == j else 0 for j in range(n - 1)] for i in range(n - 1)]
    return kernels.adjugate_times(lt, eye)


def _is_cyclic_from_adjugate(adj) -> bool:
    # the group is cyclic exactly when the gcd of all adjugate entries is
    # 1 (that gcd is the product of all invariant factors but the last)
    g_acc = 0
    for row in adj:
        for v in row:
            g_acc = gcd(g_acc, v)
            if g_acc == 1:
                return True
    return g_acc == 1


def _delta_order(det, adj, x: int, y: int) -> int:
    # order of the class of (-1 at x, +1 at y), base = last vertex:
    # m / gcd(m, adjugate column difference)
    n = len(adj) + 1
    g_acc = det
    for row in adj:
        v = (row[y] if y != n - 1 else 0) - (row[x] if x != n - 1 else 0)
        g_acc = gcd(g_acc, v)
        if g_acc == 1:
            return det
    return det // g_acc


def _sample_conditioned(cfg: ExperimentConfig, rng):
    """Graph conditioned on connectivity and cyclic group; returns
    (det, adjugate, resamples)."""
    resamples = 0
    while True:
        g = erdos_renyi(cfg.n, cfg.p, rng)
        if is_connected(g):
            det, adj = _det_and_adjugate(g)
            if _is_cyclic_from_adjugate(adj):
                return det, adj, resamples
        resamples += 1
        if resamples > cfg.resample_cap:
            raise ResampleCapExceeded(
                f"exceeded {cfg.resample_cap} resamples in one trial "
                f"(mode={cfg.mode}, n={cfg.n}, p={cfg.p})"
            )


def _run_trial(cfg: ExperimentConfig, trial: int):
    """Returns (success: bool, resamples: int, counterexample or None)."""
    rng = trial_rng(cfg.seed, trial)
    n = cfg.n
    if cfg.mode == "fixed-delta":
        det, adj, resamples = _sample_conditioned(cfg, rng)
        return _delta_order(det, adj, 0, 1) == det, resamples, None
    if cfg.mode == "exists-delta":
        det, adj, resamples = _sample_conditioned(cfg, rng)
        for x in range(n - 1):
            for y in range(x + 1, n):
                if _delta_order(det, adj, x, y) == det:
                    return True, resamples, None
        return False, resamples, None
    # order-conjecture
    resamples = 0
    while True:
        g = erdos_renyi(n, cfg.p, rng)
        if is_biconnected(g):
            break
        resamples += 1
        if resamples > cfg.resample_cap:
            raise ResampleCapExceeded(
                f"exceeded {cfg.resample_cap} resamples in one trial "
                f"(mode={cfg.mode}, n={cfg.n}, p={cfg.p})"
            )
    det, adj = _det_and_adjugate(g)
    for y in range(1, n):
        if _delta_order(det, adj, 0, y) >= n:
            return True, resamples, None
    return False, resamples, {
        "edge_list": g.to_edge_list(),
        "x": 0,
        "orders": [str(_delta_order(det, adj, 0, y)) for y in range(1, n)],
        "group_order": str(det),
    }


def _run_range(cfg: ExperimentConfig, start: int, stop: int):
    successes = 0
    resamples = 0
    counterexamples = []
    for t in range(start, stop):
        ok, rs, cx = _run_trial(cfg, t)
        successes += ok
        resamples += rs
        if cx is not None:
            counterexamples.append(cx)
    return successes, resamples, counterexamples


def run_experiment(cfg: ExperimentConfig) -> ExperimentResult:
    """Run all trials (in parallel when cfg.jobs > 1) and aggregate."""
    t0 = time.perf_counter()
    if cfg.jobs == 1 or cfg.trials == 1:
        successes, resamples, counterexamples = _run_range(cfg, 0, cfg.trials)
    else:
        jobs = min(cfg.jobs, cfg.trials)
        bounds = [cfg.trials * i // jobs for i in range(jobs + 1)]
        successes = resamples = 0
        counterexamples = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_run_range, cfg, bounds[i], bounds[i + 1])
                for i in range(jobs)
            ]
            for fut in futures:  # fixed order keeps counterexample lists stable
                s, r, cx = fut.result()
                successes += s
                resamples += r
                counterexamples.extend(cx)
    return ExperimentResult(
        config=cfg,
        successes=successes,
        trials_used=cfg.trials,
        resamples=resamples,
        counterexamples=counterexamples,
        elapsed=time.perf_counter() - t0,
    )


def run_fixed_delta(cfg: ExperimentConfig) -> ExperimentResult:
    if cfg.mode != "fixed-delta":
        raise ValueError("config mode must be fixed-delta")
    return run_experiment(cfg)


def run_exists_delta(cfg: ExperimentConfig) -> ExperimentResult:
    if cfg.mode != "exists-delta":
        raise ValueError("config mode must be exists-delta")
    return run_experiment(cfg)


def run_order_conjecture(cfg: ExperimentConfig) -> ExperimentResult:
    if cfg.mode != "order-conjecture":
        raise ValueError("config mode must be order-conjecture")
    return run_experiment(cfg)


CSV_HEADER = "n,p,trials,seed,mode,successes,estimate"


def emit_results(results, fmt: str) -> str:
    """Render one or more results as a stable CSV or JSON document.
    Output depends only on the configs and counters (never wall time)."""
    if isinstance(results, ExperimentResult):
        results = [results]
    if fmt == "csv":
        lines = [CSV_HEADER]
        for r in results:
            c = r.config
            lines.append(
                f"{c.n},{Fraction(c.p)},{c.trials},{c.seed},{c.mode},"
                f"{r.successes},{r.estimate_decimal}"
            )
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = []
        for r in results:
            entry = {
                "config": r.config.to_json_dict(),
                "successes": r.successes,
                "trials_used": r.trials_used,
                "resamples": r.resamples,
                "estimate": r.estimate_decimal,
                "estimate_exact": f"{r.estimate.numerator}/{r.estimate.denominator}",
            }
            if r.config.mode == "order-conjecture":
                entry["counterexamples"] = r.counterexamples
            payload.append(entry)
        doc = payload[0] if len(payload) == 1 else payload
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    raise ValueError(f"unknown format {fmt!r} (expected csv or json)")


def scan_order_conjecture_exhaustive(n: int, progress=None):
    """Exhaustively scan every labeled biconnected simple graph on n
    vertices: for every graph and every fixed x, some y must give a class
    of order >= n.  Returns (graphs_checked, counterexamples)."""
    from .multigraph import all_biconnected_graphs

    if n > 6:
        raise ValueError("exhaustive scan guarded to n <= 6")
    checked = 0
    counterexamples = []
    for g in all_biconnected_graphs(n):
        checked += 1
        if progress and checked % 2000 == 0:
            progress(checked)
        det, adj = _det_and_adjugate(g)
        for x in range(n):
            if not any(
                _delta_order(det, adj, x, y) >= n for y in range(n) if y != x
            ):
                counterexamples.append({
                    "edge_list": g.to_edge_list(),
                    "x": x,
                    "orders": [str(_delta_order(det, adj, x, y))
                               for y in range(n) if y != x],
                    "group_order": str(det),
                })
    return checked, counterexamples
