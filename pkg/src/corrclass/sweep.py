"""Monte Carlo sweeps of the probe-classification error.

A sweep varies one of (sample length W, probe count M, probe length L)
over a grid, holds the other two fixed, and for each grid value runs R
independent realizations: a fresh reference family plus a fresh probe set,
reporting the correlation-vs-overlap gap for a handful of tracked sequence
pairs.  Aggregation is indexed by (grid point, realization), so results do
not depend on execution order or on how many worker processes ran them.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .analysis import SimilarityReport, similarity_report
from .rng import derive_seed, stream
from .sequences import random_probes, reference_family

__all__ = [
    "SWEEP_VARIABLES",
    "DEFAULT_TRACKED_PAIRS",
    "FAMILY_SIZE",
    "CSV_HEADER",
    "FIGURE_PRESETS",
    "SweepConfig",
    "SweepRow",
    "SweepResult",
    "run_realization",
    "run_sweep",
    "figure_preset",
    "format_pair",
    "write_sweep_csv",
    "write_plot_table",
]

SWEEP_VARIABLES = ("W", "M", "L")
FAMILY_SIZE = 8
DEFAULT_TRACKED_PAIRS = ((0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (6, 7))
CSV_HEADER = "sweep_var,value,pair,mean_error,std_error,realizations"

# grids and fixed values of the three stock experiments
FIGURE_PRESETS = {
    1: {
        "swept": "W",
        "grid": (50, 100, 150, 200, 250, 300),
        "probe_length": 30,
        "n_probes": 500,
        "realizations": 40,
    },
    2: {
        "swept": "M",
        "grid": (100, 250, 500, 750, 1000),
        "probe_length": 20,
        "sample_length": 150,
        "realizations": 40,
    },
    3: {
        "swept": "L",
        "grid": (5, 10, 15, 20, 25, 30, 35, 40, 45, 50),
        "sample_length": 200,
        "n_probes": 1000,
        "realizations": 100,
    },
}

_FIXED_FIELD = {"W": "sample_length", "M": "n_probes", "L": "probe_length"}


def format_pair(pair: tuple[int, int]) -> str:
    return f"{pair[0]}-{pair[1]}"


@dataclass(frozen=True)
class SweepConfig:
    """One sweep: which variable moves, its grid, and everything held fixed.

    The field named by ``swept`` (via W -> sample_length, M -> n_probes,
    L -> probe_length) must be left None; the other two must be set.  Every
    grid point is checked up front so a sweep never dies halfway through.
    """

    swept: str
    grid: tuple[int, ...]
    realizations: int
    base_seed: int = 0
    sample_length: int | None = None
    n_probes: int | None = None
    probe_length: int | None = None
    pairs: tuple[tuple[int, int], ...] = DEFAULT_TRACKED_PAIRS

    def __post_init__(self) -> None:
        if self.swept not in SWEEP_VARIABLES:
            raise ValueError(f"swept must be one of {SWEEP_VARIABLES}, got {self.swept!r}")
        object.__setattr__(self, "grid", tuple(int(v) for v in self.grid))
        object.__setattr__(self, "pairs", tuple((int(i), int(j)) for i, j in self.pairs))
        if not self.grid:
            raise ValueError("grid must be nonempty")
        if any(b <= a for a, b in zip(self.grid, self.grid[1:])):
            raise ValueError(f"grid must be strictly increasing, got {self.grid}")
        if self.realizations < 1:
            raise ValueError(f"realizations must be positive, got {self.realizations}")
        if not self.pairs:
            raise ValueError("pairs must be nonempty")
        for i, j in self.pairs:
            if not (0 <= i < FAMILY_SIZE and 0 <= j < FAMILY_SIZE):
                raise ValueError(f"pair indices must lie in 0..{FAMILY_SIZE - 1}, got ({i}, {j})")
            if i == j:
                raise ValueError(f"pair indices must differ, got ({i}, {j})")

        swept_field = _FIXED_FIELD[self.swept]
        if getattr(self, swept_field) is not None:
            raise ValueError(f"{swept_field} is swept and must be None")
        for name in ("sample_length", "n_probes", "probe_length"):
            if name == swept_field:
                continue
            value = getattr(self, name)
            if value is None:
                raise ValueError(f"{name} must be set when sweeping {self.swept}")
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive int, got {value!r}")

        for value in self.grid:
            w, m, length = self.params_at(value)
            if length < 1:
                raise ValueError(f"probe length must be positive, got {length} at grid value {value}")
            if m < 2:
                raise ValueError(f"need at least 2 probes, got {m} at grid value {value}")
            if w < 6:
                raise ValueError(f"sample length must be at least 6, got {w} at grid value {value}")
            if w < length:
                raise ValueError(
                    f"sample length {w} is shorter than probe length {length} at grid value {value}"
                )

    def params_at(self, value: int) -> tuple[int, int, int]:
        """(sample_length, n_probes, probe_length) with the swept slot filled."""
        filled = {
            "sample_length": self.sample_length,
            "n_probes": self.n_probes,
            "probe_length": self.probe_length,
        }
        filled[_FIXED_FIELD[self.swept]] = int(value)
        return filled["sample_length"], filled["n_probes"], filled["probe_length"]


@dataclass(frozen=True)
class SweepRow:
    """One aggregated line: a grid value, a pair, and its error statistics."""

    sweep_var: str
    value: int
    pair: tuple[int, int]
    mean_error: float
    std_error: float
    realizations: int


@dataclass(frozen=True)
class SweepResult:
    """Aggregated rows plus the raw per-realization errors behind them.

    ``errors`` has shape (len(grid), realizations, len(pairs)).
    """

    config: SweepConfig
    rows: tuple[SweepRow, ...]
    errors: np.ndarray = field(repr=False)

    def series(self, pair: tuple[int, int]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(grid values, mean errors, std errors) for one tracked pair."""
        pair = (int(pair[0]), int(pair[1]))
        if pair not in self.config.pairs:
            raise ValueError(f"pair {pair} was not tracked; tracked: {self.config.pairs}")
        col = self.config.pairs.index(pair)
        values = np.asarray(self.config.grid, dtype=float)
        means = self.errors[:, :, col].mean(axis=1)
        if self.errors.shape[1] > 1:
            stds = self.errors[:, :, col].std(axis=1, ddof=1)
        else:
            stds = np.zeros(len(self.config.grid))
        return values, means, stds


def run_realization(
    sample_length: int, n_probes: int, probe_length: int, seed: int
) -> SimilarityReport:
    """One independent draw: fresh family, fresh probes, full report.

    The family and the probes come from separate streams of ``seed``, so
    either can be regenerated on its own.
    """
    family = reference_family(sample_length, stream(seed, "family"))
    probes = random_probes(n_probes, probe_length, stream(seed, "probes"))
    return similarity_report(family, probes, seed=seed)


def _realize_task(task) -> tuple[int, int, tuple[float, ...]]:
    """Run one (grid point, realization) cell; module-level for pickling."""
    grid_index, realization_index, sample_length, n_probes, probe_length, seed, pairs = task
    report = run_realization(sample_length, n_probes, probe_length, seed)
    return (
        grid_index,
        realization_index,
        tuple(float(report.error[i, j]) for i, j in pairs),
    )


def run_sweep(config: SweepConfig, jobs: int = 1) -> SweepResult:
    """Run every (grid point, realization) cell and aggregate.

    The seed of each cell depends only on (base_seed, grid value,
    realization index), and results land in a preallocated array by index,
    so the output is identical for any ``jobs`` and any completion order.
    """
    if jobs < 1:
        raise ValueError(f"jobs must be positive, got {jobs}")
    tasks = []
    for grid_index, value in enumerate(config.grid):
        w, m, length = config.params_at(value)
        for realization_index in range(config.realizations):
            seed = derive_seed(config.base_seed, value, realization_index)
            tasks.append((grid_index, realization_index, w, m, length, seed, config.pairs))

    errors = np.empty((len(config.grid), config.realizations, len(config.pairs)))
    if jobs == 1:
        outcomes = map(_realize_task, tasks)
    else:
        # real pool even on one CPU so schedule independence is exercised
        with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
            outcomes = list(pool.map(_realize_task, tasks, chunksize=8))
    for grid_index, realization_index, pair_errors in outcomes:
        errors[grid_index, realization_index, :] = pair_errors

    rows = []
    means = errors.mean(axis=1)
    if config.realizations > 1:
        stds = errors.std(axis=1, ddof=1)
    else:
        stds = np.zeros_like(means)
    for grid_index, value in enumerate(config.grid):
        for col, pair in enumerate(config.pairs):
            rows.append(
                SweepRow(
                    sweep_var=config.swept,
                    value=value,
                    pair=pair,
                    mean_error=float(means[grid_index, col]),
                    std_error=float(stds[grid_index, col]),
                    realizations=config.realizations,
                )
            )
    rows.sort(key=lambda row: (row.value, row.pair))
    return SweepResult(config=config, rows=tuple(rows), errors=errors)


def figure_preset(
    which: int,
    base_seed: int = 42,
    tracked_pairs: tuple[tuple[int, int], ...] = DEFAULT_TRACKED_PAIRS,
) -> SweepConfig:
    """Stock configuration of experiment 1, 2, or 3."""
    if which not in FIGURE_PRESETS:
        raise ValueError(f"figure must be one of {sorted(FIGURE_PRESETS)}, got {which}")
    preset = FIGURE_PRESETS[which]
    return SweepConfig(base_seed=base_seed, pairs=tracked_pairs, **preset)


def _format_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"refusing to serialize non-finite value {x}")
    return format(x, ".6g")


def _row_fields(row: SweepRow) -> tuple[str, ...]:
    return (
        row.sweep_var,
        str(row.value),
        format_pair(row.pair),
        _format_float(row.mean_error),
        _format_float(row.std_error),
        str(row.realizations),
    )


def _write_lines(lines, target) -> None:
    if isinstance(target, (str, os.PathLike)):
        with open(target, "w", encoding="ascii", newline="") as handle:
            handle.writelines(line + "\n" for line in lines)
    else:
        target.writelines(line + "\n" for line in lines)


def write_sweep_csv(result: SweepResult, target) -> None:
    """Aggregated rows as CSV, floats at 6 significant digits."""
    lines = [CSV_HEADER]
    lines.extend(",".join(_row_fields(row)) for row in result.rows)
    _write_lines(lines, target)


def write_plot_table(result: SweepResult, target) -> None:
    """Same rows as the CSV, whitespace-separated with a commented header."""
    lines = ["# " + " ".join(CSV_HEADER.split(","))]
    lines.extend(" ".join(_row_fields(row)) for row in result.rows)
    _write_lines(lines, target)
