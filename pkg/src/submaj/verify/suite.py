"""Running theorem checks and aggregating their reports.

Trial ``i`` of a check seeded with ``seed`` draws from
``default_rng([seed, i])``, so serial and parallel runs see identical
instances and reports depend only on the configuration.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..errors import BadDims, UnknownTheorem
from ..io import read_repro, write_repro
from .theorems import REGISTRY, TheoremId

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DimConfig:
    n_min: int = 2
    n_max: int = 12

    def __post_init__(self):
        if not 2 <= self.n_min <= self.n_max:
            raise BadDims(f"need 2 <= n_min <= n_max, got [{self.n_min}, {self.n_max}]")

    def sample(self, rng):
        return int(rng.integers(self.n_min, self.n_max + 1))


@dataclass(frozen=True)
class CheckReport:
    theorem: TheoremId
    trials: int
    failures: int
    worst_margin: float
    seed: int
    elapsed: float = 0.0
    failed_trials: tuple = ()
    repro_files: tuple = ()

    @property
    def passed(self):
        return self.failures == 0


@dataclass(frozen=True)
class SuiteConfig:
    theorems: tuple = tuple(TheoremId)
    trials: int = 1000
    dims: DimConfig = field(default_factory=DimConfig)
    seed: int = 0
    jobs: int = 1
    repro_dir: str | None = None


def theorem_id(name):
    if isinstance(name, TheoremId):
        return name
    try:
        return TheoremId(str(name).upper())
    except ValueError:
        raise UnknownTheorem(f"unknown theorem id {name!r}") from None


def parse_theorem_list(text):
    """``"all"`` or a comma-separated list of ids."""
    if text.strip().lower() == "all":
        return tuple(TheoremId)
    return tuple(theorem_id(part.strip()) for part in text.split(",") if part.strip())


def run_trial(theorem, seed, index, dims=DimConfig()):
    """Regenerate and evaluate a single trial."""
    theorem = theorem_id(theorem)
    checker = REGISTRY.get(theorem)
    if checker is None:
        raise UnknownTheorem(f"no checker registered for {theorem}")
    rng = np.random.default_rng([seed, index])
    n = dims.sample(rng)
    trial = checker(rng, n)
    trial.instance.setdefault("n", n)
    return trial


def _run_range(theorem, seed, dims, start, stop):
    worst = np.inf
    failed = []
    for i in range(start, stop):
        trial = run_trial(theorem, seed, i, dims)
        worst = min(worst, trial.margin)
        if trial.failed:
            failed.append((i, trial))
    return worst, failed


def _chunks(trials, jobs):
    step = -(-trials // (4 * jobs))
    return [(s, min(s + step, trials)) for s in range(0, trials, step)]


def check(theorem, trials=1000, dims=DimConfig(), seed=0, repro_dir=None, jobs=1):
    """Run ``trials`` random instances of one theorem and aggregate.

    Failing trials are written to ``repro_dir`` (when given) as
    reproduction files that :func:`replay` can re-run.
    """
    theorem = theorem_id(theorem)
    if theorem not in REGISTRY:
        raise UnknownTheorem(f"no checker registered for {theorem}")
    if trials < 0:
        raise BadDims(f"trial count must be nonnegative, got {trials}")
    started = time.perf_counter()
    worst = np.inf
    failed = []
    if jobs > 1 and trials > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_run_range, theorem, seed, dims, a, b) for a, b in _chunks(trials, jobs)
            ]
            for fut in futures:
                w, f = fut.result()
                worst = min(worst, w)
                failed.extend(f)
    else:
        worst, failed = _run_range(theorem, seed, dims, 0, trials)
    files = []
    if repro_dir is not None and failed:
        out = Path(repro_dir)
        out.mkdir(parents=True, exist_ok=True)
        for index, trial in failed:
            path = out / f"{theorem.value}-seed{seed}-trial{index}.txt"
            header = {
                "theorem": theorem.value,
                "seed": seed,
                "trial": index,
                "n_min": dims.n_min,
                "n_max": dims.n_max,
                "margin": float(trial.margin),
                "tolerance": float(trial.tol),
            }
            write_repro(path, header, trial.instance)
            files.append(str(path))
    for index, trial in failed:
        log.warning("%s trial %d failed: margin %.3g < -%.3g", theorem.value, index, trial.margin, trial.tol)
    return CheckReport(
        theorem=theorem,
        trials=trials,
        failures=len(failed),
        worst_margin=float(worst) if trials else 0.0,
        seed=seed,
        elapsed=time.perf_counter() - started,
        failed_trials=tuple(i for i, _ in failed),
        repro_files=tuple(files),
    )


def run_suite(config=SuiteConfig()):
    return [
        check(t, config.trials, config.dims, config.seed, config.repro_dir, config.jobs)
        for t in config.theorems
    ]


def suite_passed(reports):
    return all(r.passed for r in reports)


def replay(path):
    """Re-run the trial recorded in a reproduction file.

    Returns ``(trial, instance)``: the regenerated trial and the instance
    stored in the file, for comparison.
    """
    header, instance = read_repro(path)
    dims = DimConfig(int(header["n_min"]), int(header["n_max"]))
    trial = run_trial(header["theorem"], int(header["seed"]), int(header["trial"]), dims)
    return trial, instance
