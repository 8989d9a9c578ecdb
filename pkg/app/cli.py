# app/cli.py
"""
Command line entry point.

    python -m app experiment --config configs/table1.json --desk
    python -m app divergence --dgp gaussian:0,1 --model gaussian:0,2 --n 2000 --alpha 0.5 --seed 7
    python -m app ar1-sim --phi 1 --mu 5 --sigma2 1 --n 500 --seed 3 --select
    python -m app figure --pi 0.43 --n 1000 --seed 11 --out fig_pi043.csv

Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""
import argparse
import json
import sys
from typing import List, Optional

from pydantic import ValidationError

from app.config import settings
from app.core.ar1.process import Ar1Config
from app.core.divergence.alpha_divergence import DivergenceOrder
from app.core.experiment.config import ModelSpec, load_experiment_config
from app.exceptions import ConfigError, NumericalError
from app.logger import logger
from app.services.experiment_service import ExperimentService
from app.utils.response_schema import to_jsonable

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


def parse_model_spec(text: str) -> ModelSpec:
    """
    gaussian:MEAN,VAR | mixture:PI | ar1m1:SIGMA2 | ar1m2:SIGMA2,PHI
    """
    family, _, params = text.partition(":")
    family = family.strip().lower()
    try:
        values = [float(p) for p in params.split(",")] if params.strip() else []
    except ValueError:
        raise ConfigError(f"cannot parse model parameters in '{text}'")

    try:
        if family in ("gaussian", "normal") and len(values) == 2:
            return ModelSpec(family="gaussian", mean=values[0], variance=values[1])
        if family == "mixture" and len(values) == 1:
            return ModelSpec(family="mixture", weight=values[0])
        if family == "ar1m1" and len(values) == 1:
            return ModelSpec(family="ar1_m1", sigma2=values[0])
        if family == "ar1m2" and len(values) == 2:
            return ModelSpec(family="ar1_m2", sigma2=values[0], phi=values[1])
    except ValidationError as e:
        raise ConfigError(f"invalid model '{text}': {e}")
    raise ConfigError(
        f"unknown model '{text}'; expected gaussian:MEAN,VAR, mixture:PI, ar1m1:SIGMA2 or ar1m2:SIGMA2,PHI"
    )


def _parse_sizes(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise ConfigError(f"cannot parse sample sizes '{text}'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alphadiv", description="Alpha-divergence estimation and model selection")
    sub = parser.add_subparsers(dest="command", required=True)

    exp = sub.add_parser("experiment", help="Monte Carlo decision table for a mixture DGP")
    exp.add_argument("--config", type=str, default=None, help="JSON experiment config")
    exp.add_argument("--pi", type=float, default=None)
    exp.add_argument("--alpha", type=float, default=None)
    exp.add_argument("--level", type=float, default=None)
    exp.add_argument("--reps", type=int, default=None)
    exp.add_argument("--seed", type=int, default=None)
    exp.add_argument("--sizes", type=str, default=None, help="comma separated sample sizes")
    exp.add_argument("--n-jobs", type=int, default=None)
    exp.add_argument("--desk", action="store_true", help="desk preset: 200 replications")
    exp.add_argument("--normality", type=int, default=None, metavar="N",
                     help="also report skewness/kurtosis of the standardized DI at size N")
    exp.add_argument("--out", type=str, default=None)
    exp.add_argument("--format", choices=["csv", "json"], default="csv")

    div = sub.add_parser("divergence", help="single plug-in divergence estimate as JSON")
    div.add_argument("--dgp", type=str, required=True)
    div.add_argument("--model", type=str, required=True)
    div.add_argument("--n", type=int, required=True)
    div.add_argument("--alpha", type=float, default=settings.DEFAULT_ALPHA)
    div.add_argument("--seed", type=int, default=0)
    div.add_argument("--convention", choices=["variance", "std"], default="variance")

    ar = sub.add_parser("ar1-sim", help="simulate an AR(1) path and optionally select M1 vs M2")
    ar.add_argument("--phi", type=float, required=True)
    ar.add_argument("--mu", type=float, default=0.0)
    ar.add_argument("--sigma2", type=float, default=1.0)
    ar.add_argument("--n", type=int, required=True)
    ar.add_argument("--seed", type=int, default=0)
    ar.add_argument("--burn-in", type=int, default=0)
    ar.add_argument("--select", action="store_true")
    ar.add_argument("--alt-phi", type=float, default=None, help="phi of the M2 density")
    ar.add_argument("--alpha", type=float, default=settings.DEFAULT_ALPHA)
    ar.add_argument("--level", type=float, default=settings.DEFAULT_LEVEL)

    fig = sub.add_parser("figure", help="histogram, model curves and D1/D2 series as CSV")
    fig.add_argument("--config", type=str, default=None)
    fig.add_argument("--pi", type=float, default=None)
    fig.add_argument("--n", type=int, required=True)
    fig.add_argument("--seed", type=int, default=None)
    fig.add_argument("--out", type=str, required=True)

    return parser


def _emit(payload: bytes):
    sys.stdout.buffer.write(payload)
    if not payload.endswith(b"\n"):
        sys.stdout.buffer.write(b"\n")
    sys.stdout.flush()


def _cmd_experiment(args, service: ExperimentService) -> int:
    overrides = {
        "pi": args.pi,
        "order_alpha": args.alpha,
        "level": args.level,
        "replications": args.reps,
        "seed": args.seed,
        "sample_sizes": _parse_sizes(args.sizes),
        "n_jobs": args.n_jobs,
    }
    if args.desk and args.reps is None:
        overrides["replications"] = settings.EXECUTION_MODES["desk"]["replications"]
    cfg = load_experiment_config(args.config, overrides)

    rows, payload, written = service.run_table(cfg, args.format, args.out)
    if written is None:
        _emit(payload)

    if args.normality is not None:
        summary = service.normality(cfg, args.normality)
        logger.info(f"Standardized DI at n={args.normality}: {summary}")
        sys.stderr.write(json.dumps(to_jsonable(summary)) + "\n")
    return EXIT_OK


def _cmd_divergence(args, service: ExperimentService) -> int:
    order = DivergenceOrder(alpha=args.alpha)
    estimate = service.divergence(
        parse_model_spec(args.dgp), parse_model_spec(args.model), args.n, order, args.seed, args.convention
    )
    _emit(estimate.model_dump_json(indent=2).encode("utf-8"))
    return EXIT_OK


def _cmd_ar1(args, service: ExperimentService) -> int:
    try:
        cfg = Ar1Config(phi=args.phi, mu=args.mu, sigma2=args.sigma2, n=args.n,
                        seed=args.seed, burn_in=args.burn_in)
    except ValidationError as e:
        raise ConfigError(f"invalid AR(1) config: {e}")
    if not (0.0 < args.level < 1.0):
        raise ConfigError(f"significance level must lie in (0, 1), got {args.level}")
    result = service.ar1(cfg, args.select, args.alt_phi, DivergenceOrder(alpha=args.alpha), args.level)
    _emit(json.dumps(to_jsonable(result)).encode("utf-8"))
    return EXIT_OK


def _cmd_figure(args, service: ExperimentService) -> int:
    cfg = load_experiment_config(args.config, {"pi": args.pi, "seed": args.seed})
    service.figure(cfg, args.n, args.out)
    return EXIT_OK


COMMANDS = {
    "experiment": _cmd_experiment,
    "divergence": _cmd_divergence,
    "ar1-sim": _cmd_ar1,
    "figure": _cmd_figure,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    service = ExperimentService()
    try:
        return COMMANDS[args.command](args, service)
    except (ConfigError, ValidationError) as e:
        logger.error(f"Configuration error: {e}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_CONFIG
    except NumericalError as e:
        logger.error(f"Numerical failure: {e}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
