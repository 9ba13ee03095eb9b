"""Command-line front end.

Subcommands: ``figure`` (stock experiment 1, 2, or 3), ``sweep`` (explicit
grid), ``matrices`` (one realization's correlation / overlap / gap tables),
``opinions`` (linear-model error demo), and ``gen-refs`` (reference family
as FASTA).  Exit codes: 0 success, 1 bad arguments or domain error, 2 I/O
error.  Every subcommand is deterministic given its flags and --seed.
"""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys

from .fasta import write_fasta
from .opinions import (
    ModelConfig,
    choose_k,
    empirical_error,
    gamma_factor,
    generate_population,
    opinion_matrix,
    predict_matrix,
    row_correlation,
    theoretical_error,
)
from .rng import stream
from .sequences import reference_family
from .sweep import (
    DEFAULT_TRACKED_PAIRS,
    SWEEP_VARIABLES,
    SweepConfig,
    figure_preset,
    run_realization,
    run_sweep,
    write_plot_table,
    write_sweep_csv,
)

__all__ = ["main", "run", "read_config", "apply_overrides"]

_CONFIG_KEYS = ("realizations", "grid", "m", "l", "w", "n", "pairs")
_FIELD_OF_VARIABLE = {"W": "sample_length", "M": "n_probes", "L": "probe_length"}


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this program reserves 2 for I/O."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _u64(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}") from None
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 unsigned bits, got {text}")
    return value


def _parse_grid(text: str) -> tuple[int, ...]:
    tokens = [tok for tok in text.replace(" ", "").split(",") if tok]
    try:
        values = tuple(int(tok) for tok in tokens)
    except ValueError:
        raise ValueError(f"grid must be comma-separated integers, got {text!r}") from None
    if not values:
        raise ValueError("grid must be nonempty")
    return values


def _parse_pairs(text: str) -> tuple[tuple[int, int], ...]:
    pairs = []
    for token in text.replace(" ", "").split(","):
        if not token:
            continue
        left, sep, right = token.partition("-")
        if not sep or not left.isdigit() or not right.isdigit():
            raise ValueError(f"pairs must look like '0-1,6-7', got {token!r}")
        pairs.append((int(left), int(right)))
    if not pairs:
        raise ValueError("pairs must be nonempty")
    return tuple(pairs)


def _parse_fixed(items) -> dict[str, int]:
    out: dict[str, int] = {}
    for item in items or []:
        for token in item.split(","):
            token = token.strip()
            if not token:
                continue
            key, sep, value = token.partition("=")
            if not sep:
                raise ValueError(f"--fixed expects KEY=VALUE, got {token!r}")
            key = key.strip().upper()
            if key not in SWEEP_VARIABLES:
                raise ValueError(f"--fixed key must be one of {SWEEP_VARIABLES}, got {key!r}")
            if key in out:
                raise ValueError(f"--fixed sets {key} twice")
            try:
                out[key] = int(value.strip())
            except ValueError:
                raise ValueError(
                    f"--fixed value for {key} must be an integer, got {value.strip()!r}"
                ) from None
    return out


def read_config(path) -> dict[str, str]:
    """Parse a flat ``key = value`` override file with ``#`` comments."""
    entries: dict[str, str] = {}
    with open(path, "r", encoding="ascii") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key = key.strip().lower()
            value = value.strip()
            if not sep or not key or not value:
                raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw.strip()!r}")
            if key not in _CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")
            entries[key] = value
    return entries


def apply_overrides(config: SweepConfig, entries: dict[str, str]) -> SweepConfig:
    """Rebuild a SweepConfig with config-file overrides applied.

    Setting the swept variable's own fixed value is a contradiction and is
    rejected; ``n`` is accepted for caption compatibility but has no effect
    (the family always holds 8 sequences).
    """
    updates = {}
    for key, value in entries.items():
        if key == "n":
            int(value)
            continue
        if key == "grid":
            updates["grid"] = _parse_grid(value)
        elif key == "pairs":
            updates["pairs"] = _parse_pairs(value)
        elif key == "realizations":
            updates["realizations"] = int(value)
        else:
            variable = key.upper()
            if variable == config.swept:
                raise ValueError(
                    f"config key {key!r} conflicts with the swept variable {config.swept}"
                )
            updates[_FIELD_OF_VARIABLE[variable]] = int(value)
    return dataclasses.replace(config, **updates)


def _plot_path(csv_path: str) -> str:
    root, ext = os.path.splitext(csv_path)
    return root + ".dat" if ext.lower() == ".csv" else csv_path + ".dat"


def _run_and_write(config: SweepConfig, out: str, jobs: int) -> int:
    # open both sinks before the sweep so a bad path fails in milliseconds
    with open(out, "w", encoding="ascii", newline="") as csv_handle:
        with open(_plot_path(out), "w", encoding="ascii", newline="") as plot_handle:
            result = run_sweep(config, jobs=jobs)
            write_sweep_csv(result, csv_handle)
            write_plot_table(result, plot_handle)
    return 0


def _cmd_figure(args) -> int:
    config = figure_preset(args.which, base_seed=args.seed)
    if args.config:
        config = apply_overrides(config, read_config(args.config))
    return _run_and_write(config, args.out or f"figure{args.which}.csv", args.jobs)


def _cmd_sweep(args) -> int:
    fixed = _parse_fixed(args.fixed)
    if args.var in fixed:
        raise ValueError(f"--fixed must not set the swept variable {args.var}")
    config = SweepConfig(
        swept=args.var,
        grid=_parse_grid(args.grid),
        realizations=args.realizations,
        base_seed=args.seed,
        sample_length=fixed.get("W"),
        n_probes=fixed.get("M"),
        probe_length=fixed.get("L"),
        pairs=_parse_pairs(args.pairs) if args.pairs else DEFAULT_TRACKED_PAIRS,
    )
    if args.config:
        config = apply_overrides(config, read_config(args.config))
    return _run_and_write(config, args.out or "sweep.csv", args.jobs)


def _write_matrix_csv(matrix, path: str) -> None:
    lines = ["," + ",".join(str(j) for j in range(matrix.shape[1]))]
    for i in range(matrix.shape[0]):
        lines.append(str(i) + "," + ",".join(format(v, ".6g") for v in matrix[i]))
    with open(path, "w", encoding="ascii", newline="") as handle:
        handle.writelines(line + "\n" for line in lines)


def _cmd_matrices(args) -> int:
    report = run_realization(args.w, args.m, args.l, args.seed)
    prefix = args.out or "matrices"
    for suffix, matrix in (
        ("correlation", report.correlation),
        ("overlap", report.overlap),
        ("error", report.error),
    ):
        _write_matrix_csv(matrix, f"{prefix}_{suffix}.csv")
    return 0


def _cmd_opinions(args) -> int:
    config = ModelConfig(
        n_individuals=args.m,
        n_products=args.n,
        n_components=args.l,
        base_seed=args.seed,
    )
    population = generate_population(config)
    opinions = opinion_matrix(population, config.normalization)
    correlations = row_correlation(opinions)
    predicted = predict_matrix(correlations, opinions, choose_k(config))
    empirical = empirical_error(opinions, predicted)
    theoretical = theoretical_error(
        config.n_components, config.n_individuals, config.n_products, gamma_factor(config)
    )
    print(f"empirical_error {empirical:.6g}")
    print(f"theoretical_error {theoretical:.6g}")
    print(f"ratio {empirical / theoretical:.6g}")
    return 0


def _cmd_gen_refs(args) -> int:
    family = reference_family(args.w, stream(args.seed, "family"))
    records = [(f"seq{i}", seq) for i, seq in enumerate(family)]
    if args.out:
        write_fasta(records, args.out)
    else:
        write_fasta(records, sys.stdout)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="corrclass", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="subcommand", required=True)

    common = _Parser(add_help=False)
    common.add_argument("--seed", type=_u64, default=42, help="base seed (default 42)")

    figure = commands.add_parser("figure", parents=[common], help="run a stock experiment")
    figure.add_argument("which", type=int, choices=(1, 2, 3))
    figure.add_argument("--out", help="CSV path (default figureN.csv); .dat written alongside")
    figure.add_argument("--config", help="key = value override file")
    figure.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    figure.set_defaults(handler=_cmd_figure)

    sweep = commands.add_parser("sweep", parents=[common], help="run an explicit sweep")
    sweep.add_argument("--var", required=True, choices=SWEEP_VARIABLES)
    sweep.add_argument("--grid", required=True, help="comma-separated grid values")
    sweep.add_argument("--fixed", action="append", help="KEY=VALUE for the held variables")
    sweep.add_argument("--realizations", type=int, default=40)
    sweep.add_argument("--pairs", help="tracked pairs, e.g. 0-1,0-4,6-7")
    sweep.add_argument("--out", help="CSV path (default sweep.csv); .dat written alongside")
    sweep.add_argument("--config", help="key = value override file")
    sweep.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    sweep.set_defaults(handler=_cmd_sweep)

    matrices = commands.add_parser(
        "matrices", parents=[common], help="dump one realization's similarity tables"
    )
    matrices.add_argument("--w", type=int, required=True, help="sample length")
    matrices.add_argument("--l", type=int, required=True, help="probe length")
    matrices.add_argument("--m", type=int, required=True, help="probe count")
    matrices.add_argument("--out", help="output prefix (default 'matrices')")
    matrices.set_defaults(handler=_cmd_matrices)

    opinions = commands.add_parser(
        "opinions", parents=[common], help="linear-model prediction error demo"
    )
    opinions.add_argument("--m", type=int, required=True, help="individuals")
    opinions.add_argument("--n", type=int, required=True, help="products")
    opinions.add_argument("--l", type=int, required=True, help="hidden components")
    opinions.set_defaults(handler=_cmd_opinions)

    gen_refs = commands.add_parser(
        "gen-refs", parents=[common], help="write the reference family as FASTA"
    )
    gen_refs.add_argument("--w", type=int, required=True, help="sequence length (>= 6)")
    gen_refs.add_argument("--out", help="FASTA path (default stdout)")
    gen_refs.set_defaults(handler=_cmd_gen_refs)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 1
    try:
        return args.handler(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    raise SystemExit(main())
