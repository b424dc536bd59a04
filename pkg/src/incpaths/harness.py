"""Seeded, parallel experiment runner and command-line interface.

Every command produces a JSON report echoing its configuration, the
pinned PRNG identifier, and the toolkit version; trial t draws its seed
from the master seed through a SplitMix64 mix, so results are bit-stable
across runs and worker counts.  Wall-clock duration and the worker count
live in a separate ``meta`` block, outside the reproducible part.

Commands
--------
greedy-sim    mean greedy-path fraction over random orderings
kgreedy-sim   mean k-look-ahead path fraction
walks-demo    pedestrian / refusal walk statistics
worstcase     deterministic round-robin adversarial instance
alpha-table   exact alpha/predicted-fraction/mean-ratio table (CSV export)
cycles-mc     restaurant-process sampler vs exact longest-cycle pmf
hamprob       increasing-Hamiltonian-path existence probability
moments       exact moments (or Monte Carlo mean count with --trials)
census        intersection-profile census (CSV export)
bounds        split-sum values S1, S2, S3 at a given n
constant-c    partial sums converging to e^3

Exit codes: 0 success, 2 invalid arguments, 3 capacity exceeded.
``INCPATHS_THREADS`` sets the default worker count; --threads overrides.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__, cyclestats, secondmoment
from .core import (
    PERMUTATION,
    PRNG_NAME,
    REAL,
    CapacityError,
    matching_ordering,
    random_ordering,
)
from .exact import (
    count_increasing_ham_paths,
    has_increasing_ham_path,
    longest_increasing_path_len,
)
from .kgreedy import EXHAUST, k_greedy_path
from .walks import greedy_path, pedestrian_walks, refusal_paths

_M64 = (1 << 64) - 1

COMMANDS = (
    "greedy-sim",
    "kgreedy-sim",
    "walks-demo",
    "alpha-table",
    "cycles-mc",
    "hamprob",
    "moments",
    "census",
    "bounds",
    "constant-c",
    "worstcase",
)

_DEFAULTS = {
    "greedy-sim": dict(n=2000, trials=200, model=REAL),
    "kgreedy-sim": dict(n=2000, k=10, trials=100, model=REAL, mode=EXHAUST),
    "walks-demo": dict(n=30, trials=100, model=PERMUTATION),
    "alpha-table": dict(k=100, precision=cyclestats.RATIONAL),
    "cycles-mc": dict(k=20, trials=100_000),
    "hamprob": dict(n=12, trials=2000, model=PERMUTATION),
    "moments": dict(n=4, model=PERMUTATION),
    "census": dict(n=5),
    "bounds": dict(n=100),
    "constant-c": dict(k=80),
    "worstcase": dict(n=10),
}


@dataclass
class ExperimentConfig:
    command: str
    n: int | None = None
    k: int | None = None
    trials: int | None = None
    seed: int = 0
    model: str | None = None
    mode: str | None = None
    precision: str | None = None
    out: str | None = None
    threads: int | None = None
    emit_raw: bool = False

    def resolved(self) -> dict:
        """Command defaults filled in; returns the config echo dict."""
        if self.command not in _DEFAULTS:
            raise ValueError(f"unknown command {self.command!r}")
        params = dict(_DEFAULTS[self.command])
        for name in ("n", "k", "trials", "model", "mode", "precision"):
            value = getattr(self, name)
            if value is not None:
                params[name] = value
        params["command"] = self.command
        params["seed"] = self.seed
        if params.get("trials", 1) < 1:
            raise ValueError("need trials >= 1")
        return params


@dataclass
class Report:
    config: dict
    results: dict
    version: str = __version__
    prng: str = PRNG_NAME
    meta: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "version": self.version,
            "prng": self.prng,
            "results": self.results,
            "meta": self.meta,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def trial_seed(master_seed: int, index: int) -> int:
    """SplitMix64 mix of (master seed, trial index); published so runs can
    be reproduced trial by trial."""
    x = (master_seed + (index + 1) * 0x9E3779B97F4A7C15) & _M64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _M64
    return x ^ (x >> 31)


def summarize(values) -> tuple[float, float, tuple[float, float]]:
    """(mean, unbiased sample stddev, 95% normal CI for the mean)."""
    values = list(values)
    if not values:
        raise ValueError("cannot summarize an empty sequence")
    mean = float(np.mean(values))
    stddev = float(np.std(values, ddof=1)) if len(values) > 1 else 0.0
    half = 1.96 * stddev / math.sqrt(len(values))
    return mean, stddev, (mean - half, mean + half)


def _series(values, emit_raw: bool) -> dict:
    mean, stddev, ci = summarize(values)
    out = {
        "count": len(values),
        "mean": mean,
        "stddev": stddev,
        "ci95": [ci[0], ci[1]],
    }
    if emit_raw:
        out["values"] = [float(v) for v in values] if isinstance(values[0], float) else list(values)
    return out


# ---------------------------------------------------------------------------
# per-trial kernels (module level so worker processes can import them)
# ---------------------------------------------------------------------------


def _trial_greedy(params, seed):
    n = params["n"]
    ordering = random_ordering(n, seed, params["model"])
    return (len(greedy_path(ordering, 0)) - 1) / n


def _trial_kgreedy(params, seed):
    n = params["n"]
    ordering = random_ordering(n, seed, params["model"])
    path, _ = k_greedy_path(ordering, 0, params["k"], params["mode"])
    return (len(path) - 1) / n


def _trial_walks(params, seed):
    ordering = random_ordering(params["n"], seed, params["model"])
    walks = pedestrian_walks(ordering)
    refusals = refusal_paths(ordering)
    return (
        max(len(w) - 1 for w in walks),
        sum(len(w) - 1 for w in walks),
        max(len(p) - 1 for p in refusals),
    )


def _trial_hamprob(params, seed):
    ordering = random_ordering(params["n"], seed, params["model"])
    return 1 if has_increasing_ham_path(ordering) else 0


def _trial_count(params, seed):
    ordering = random_ordering(params["n"], seed, params["model"])
    return count_increasing_ham_paths(ordering)


_TRIAL_KERNELS = {
    "greedy-sim": _trial_greedy,
    "kgreedy-sim": _trial_kgreedy,
    "walks-demo": _trial_walks,
    "hamprob": _trial_hamprob,
    "moments": _trial_count,
}


def _worker(task):
    command, params, seed = task
    return _TRIAL_KERNELS[command](params, seed)


def _run_trials(command, params, master_seed, trials, threads):
    tasks = [(command, params, trial_seed(master_seed, t)) for t in range(trials)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(_worker, tasks, chunksize=max(1, trials // (4 * threads))))
    return [_worker(task) for task in tasks]


# ---------------------------------------------------------------------------
# command implementations
# ---------------------------------------------------------------------------


def _cmd_trial_series(config, params, threads):
    values = _run_trials(
        params["command"], params, params["seed"], params["trials"], threads
    )
    return {"fraction": _series(values, config.emit_raw)}


def _cmd_walks(config, params, threads):
    rows = _run_trials("walks-demo", params, params["seed"], params["trials"], threads)
    ped_max, ped_total, ref_max = zip(*rows)
    n = params["n"]
    return {
        "pedestrian_max_length": _series(list(ped_max), config.emit_raw),
        "pedestrian_total_steps": _series(list(ped_total), config.emit_raw),
        "refusal_max_length": _series(list(ref_max), config.emit_raw),
        "walk_guarantee": n - 1,
        "path_guarantee": math.ceil(math.sqrt(n - 1)),
        "all_walk_guarantees_met": bool(min(ped_max) >= n - 1),
        "all_step_totals_exact": all(t == n * (n - 1) for t in ped_total),
        "all_path_guarantees_met": bool(min(ref_max) >= math.ceil(math.sqrt(n - 1))),
    }


def _cmd_alpha_table(config, params, threads):
    rows = cyclestats.alpha_table(params["k"], params["precision"])
    if config.out and config.out.endswith(".csv"):
        cyclestats.write_alpha_table(config.out, params["k"], params["precision"])
    last = rows[-1]
    return {"rows": rows, "k_max": params["k"], "last_row": last}


def _cmd_cycles_mc(config, params, threads):
    k = params["k"]
    empirical = cyclestats.sample_longest_cycle(k, params["trials"], params["seed"])
    precision = cyclestats.RATIONAL if k <= cyclestats.RATIONAL_CAP else cyclestats.FLOAT
    exact = [float(p) for p in cyclestats.longest_cycle_distribution(k, precision).pmf]
    trials = params["trials"]
    within = all(
        abs(empirical[s] - exact[s])
        <= 3 * math.sqrt(exact[s] * (1 - exact[s]) / trials) + 1e-15
        for s in range(1, k + 1)
    )
    results = {
        "k": k,
        "max_abs_deviation": float(np.max(np.abs(np.array(empirical[1:]) - np.array(exact[1:])))),
        "within_3_sigma": bool(within),
        "empirical_mean": float(np.dot(np.arange(k + 1), empirical)),
        "exact_mean": float(np.dot(np.arange(k + 1), exact)),
    }
    if config.emit_raw:
        results["empirical_pmf"] = [float(x) for x in empirical]
    return results


def _cmd_hamprob(config, params, threads):
    hits = _run_trials("hamprob", params, params["seed"], params["trials"], threads)
    return {"existence": _series(hits, config.emit_raw)}


def _cmd_moments(config, params, threads):
    if "trials" in params:
        counts = _run_trials("moments", params, params["seed"], params["trials"], threads)
        return {"count": _series([float(c) for c in counts], config.emit_raw),
                "expected_mean": params["n"]}
    report = secondmoment.exact_moments(params["n"])
    return secondmoment.moment_report_to_dict(report)


def _cmd_census(config, params, threads):
    census = secondmoment.profile_census(params["n"])
    if config.out and config.out.endswith(".csv"):
        secondmoment.write_census_csv(census, config.out)
    n = params["n"]
    recombined = sum(
        (cls.mass / math.factorial(2 * n - sig.c - 2) for sig, cls in census.items())
    )
    disjoint = census.get(secondmoment.ProfileSignature(0, 0, 0))
    results = {
        "n": n,
        "classes": [
            {"c": sig.c, "k": sig.k, "l": sig.ell,
             "pair_count": cls.pair_count, "mass": str(cls.mass)}
            for sig, cls in sorted(census.items())
        ],
        "total_pairs": sum(cls.pair_count for cls in census.values()),
        "recombined_second_moment": float(recombined),
    }
    if disjoint is not None:
        # measured fraction of edge-disjoint pairs against its asymptotic
        # value exp(-2); reported, no threshold implied at desk scale
        results["disjoint_pair_fraction"] = disjoint.pair_count / math.factorial(n) ** 2
        results["disjoint_pair_fraction_limit"] = math.exp(-2)
    return results


def _cmd_bounds(config, params, threads):
    n = params["n"]
    s1, s2, s3 = secondmoment.s_sum_bounds(n)
    return {
        "n": n,
        "s1": s1,
        "s2_bound": s2,
        "s3_bound": s3,
        "s1_over_e_n2": s1 / (math.e * n * n),
        "s3_over_n2": s3 / (n * n),
    }


def _cmd_constant_c(config, params, threads):
    c_max = params["k"]
    partial = secondmoment.constant_C_partial(c_max)
    e_cubed = math.exp(3)
    return {
        "c_max": c_max,
        "partial_sum": {
            "numerator": str(partial.numerator),
            "denominator": str(partial.denominator),
        },
        "partial_sum_float": float(partial),
        "e_cubed": e_cubed,
        "abs_error": abs(float(partial) - e_cubed),
    }


def _cmd_worstcase(config, params, threads):
    n = params["n"]
    ordering = matching_ordering(n)
    walks = pedestrian_walks(ordering)
    refusals = refusal_paths(ordering)
    results = {
        "n": n,
        "pedestrian_max_length": max(len(w) - 1 for w in walks),
        "pedestrian_total_steps": sum(len(w) - 1 for w in walks),
        "refusal_max_length": max(len(p) - 1 for p in refusals),
    }
    if n <= 20:
        results["longest_increasing_path"] = longest_increasing_path_len(ordering)
        results["has_increasing_ham_path"] = bool(has_increasing_ham_path(ordering))
    return results


_COMMAND_IMPLS = {
    "greedy-sim": _cmd_trial_series,
    "kgreedy-sim": _cmd_trial_series,
    "walks-demo": _cmd_walks,
    "alpha-table": _cmd_alpha_table,
    "cycles-mc": _cmd_cycles_mc,
    "hamprob": _cmd_hamprob,
    "moments": _cmd_moments,
    "census": _cmd_census,
    "bounds": _cmd_bounds,
    "constant-c": _cmd_constant_c,
    "worstcase": _cmd_worstcase,
}


def default_threads() -> int:
    env = os.environ.get("INCPATHS_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            return 1
    return 1


def run(config: ExperimentConfig) -> Report:
    """Execute one experiment; the report's config/results block is
    bit-stable for a fixed (config, version) regardless of worker count."""
    params = config.resolved()
    threads = config.threads if config.threads is not None else default_threads()
    start = time.time()
    results = _COMMAND_IMPLS[config.command](config, params, threads)
    report = Report(
        config=params,
        results=results,
        meta={"duration_seconds": time.time() - start, "threads": threads},
    )
    if config.out and not config.out.endswith(".csv"):
        with open(config.out, "w") as fh:
            fh.write(report.to_json())
            fh.write("\n")
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="incpaths",
        description="Experiments on increasing paths in randomly edge-ordered complete graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--k", type=int, default=None,
                       help="look-ahead size / table size / partial-sum cutoff")
        p.add_argument("--trials", type=int, default=None)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--model", choices=["perm", "real"], default=None)
        p.add_argument("--mode", choices=["strict", "exhaust"], default=None)
        p.add_argument("--precision", choices=["rational", "float"], default=None)
        p.add_argument("--out", type=str, default=None,
                       help="report path; .csv selects the tabular export where available")
        p.add_argument("--threads", type=int, default=None)
        p.add_argument("--emit-raw", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    model = {"perm": PERMUTATION, "real": REAL, None: None}[args.model]
    config = ExperimentConfig(
        command=args.command,
        n=args.n,
        k=args.k,
        trials=args.trials,
        seed=args.seed,
        model=model,
        mode=args.mode,
        precision=args.precision,
        out=args.out,
        threads=args.threads,
        emit_raw=args.emit_raw,
    )
    try:
        report = run(config)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(report.to_json())
    return 0


if __name__ == "__main__":
    sys.exit(main())
