"""Command-line front end.

    zbgof test DATA [--a 1] [--alpha 0.05] [--method pearson|montecarlo]
    zbgof cumulants [--a 1] [--source closed-form|quadrature-oracle]
    zbgof quantiles (--asymptotic | --n N) [--a 1] [--levels ...]
    zbgof power --alt NAME --n N [--a 1] [--stat Z] [--reps 10000]
    zbgof delta --alt NAME [--a 1] [--delta-method auto]
    zbgof reproduce {table1,table2,table3-subset}

Every subcommand accepts ``--output human|json`` and ``--seed``.  Exit
status is 0 on success, 2 for invalid input and 1 for numerical failures.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInput, ParseError, UnknownAlternativeName, ZBGOFError

__all__ = ["main", "read_data", "RunConfig", "render"]

COMMANDS = ("test", "cumulants", "quantiles", "power", "delta", "reproduce")


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: str | None = None
    a: float = 1.0
    alpha: float = 0.05
    method: str = "pearson"
    replications: int = 20_000
    seed: int = 0
    output: str = "human"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InvalidInput(f"unknown command {self.command!r}")
        if not (math.isfinite(self.a) and self.a > 0):
            raise InvalidInput("--a must be positive")
        if not 0 < self.alpha < 1:
            raise InvalidInput("--alpha must lie in (0, 1)")
        if self.method not in ("pearson", "montecarlo"):
            raise InvalidInput("--method must be pearson or montecarlo")
        if self.method == "montecarlo" and self.replications < 1000:
            raise InvalidInput("--reps must be >= 1000 for the montecarlo method")
        if not 0 <= self.seed < 2 ** 64:
            raise InvalidInput("--seed must be a 64-bit unsigned integer")
        if self.output not in ("human", "json"):
            raise InvalidInput("--output must be human or json")


def read_data(path: str) -> np.ndarray:
    """Read newline-separated numbers or a single-column CSV.

    Blank lines and lines starting with ``#`` are skipped; a non-numeric first
    data line is taken as a header.
    """
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    values = []
    seen_data_line = False
    for i, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) > 1 and any(fields[1:]):
            raise ParseError(f"expected one column, found {len(fields)}", i)
        field = fields[0].strip('"').strip("'")
        try:
            values.append(float(field))
        except ValueError:
            if not seen_data_line:
                seen_data_line = True
                continue
            raise ParseError(f"not a number: {field!r}", i) from None
        seen_data_line = True
    if not values:
        raise ParseError("no data values found")
    return np.array(values)


# -- rendering -------------------------------------------------------------
def _round(obj):
    """Round floats to 10 significant digits so both output modes agree."""
    if isinstance(obj, float):
        return float(f"{obj:.10g}") if math.isfinite(obj) else obj
    if isinstance(obj, dict):
        return {k: _round(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v) for v in obj]
    if isinstance(obj, np.generic):
        return _round(obj.item())
    return obj


def _human(obj, indent=0) -> list[str]:
    pad = "  " * indent
    out = []
    for k, v in obj.items():
        if isinstance(v, dict):
            out.append(f"{pad}{k}:")
            out.extend(_human(v, indent + 1))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            out.append(f"{pad}{k}:")
            for item in v:
                out.extend(_human(item, indent + 1))
                out.append("")
        else:
            out.append(f"{pad}{k} = {_fmt(v)}")
    return out


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.10g}"
    if v is None:
        return "null"
    if isinstance(v, list):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    return str(v)


def render(payload: dict, output: str) -> str:
    payload = _round(payload)
    if output == "json":
        return json.dumps(payload, sort_keys=True, indent=2)
    return "\n".join(_human(payload)).rstrip()


# -- commands ----------------------------------------------------------------
def _cmd_test(args, cfg: RunConfig) -> dict:
    from .decision import zb_test

    x = read_data(cfg.input_path)
    return zb_test(x, cfg.a, cfg.alpha, cfg.method, cfg.replications, cfg.seed).to_dict()


def _cmd_cumulants(args, cfg: RunConfig) -> dict:
    from .null_theory import MomentSummary, cumulants
    from .pearson import pearson_criterion

    cs = cumulants(cfg.a, source=args.source)
    ms = MomentSummary.from_cumulants(*cs.kappa)
    return {
        "a": cfg.a,
        "source": cs.source,
        "kappa": list(cs.kappa),
        "mean": ms.mean,
        "variance": ms.variance,
        "sqrt_beta1": ms.sqrt_beta1,
        "beta2": ms.beta2,
        "pearson_criterion": pearson_criterion(ms.sqrt_beta1, ms.beta2),
    }


def _cmd_quantiles(args, cfg: RunConfig) -> dict:
    from .pearson import asymptotic_null, lower_tail_unreliable, pearson_quantile
    from .rng import SeedSpec, stream_for
    from .simulation import simulate_critical_values

    levels = sorted(args.levels)
    if args.asymptotic:
        fit = asymptotic_null(cfg.a)
        return {
            "a": cfg.a,
            "n": "inf",
            "source": "asymptotic-pearson",
            "family": fit.family,
            "quantiles": {f"{q:g}": pearson_quantile(fit, q) for q in levels},
            "lower_tail_unreliable": [f"{q:g}" for q in levels if lower_tail_unreliable(q)],
        }
    seed = SeedSpec(cfg.seed, stream_for(f"null/n={args.n}"))
    tab = simulate_critical_values(args.n, cfg.a, levels, cfg.replications, seed, workers=args.workers)
    d = tab.to_dict()
    d["source"] = "simulated"
    return d


def _cmd_power(args, cfg: RunConfig) -> dict:
    from .alternatives import parse_alternative
    from .competitors import parse_statistic
    from .pearson import asymptotic_null
    from .rng import SeedSpec, stream_for
    from .simulation import power_study, simulate_critical_values

    alt = parse_alternative(args.alt)
    stat = parse_statistic(args.stat, default_a=cfg.a)
    if args.critical == "asymptotic":
        if stat.kind != "Z":
            raise InvalidInput("asymptotic critical values exist only for Z")
        crit = asymptotic_null(stat.param)
    else:
        crit = simulate_critical_values(
            args.n, levels=(cfg.alpha, 1 - cfg.alpha), replications=args.critical_reps,
            seed=SeedSpec(cfg.seed, stream_for(f"null/n={args.n}/{stat.label}")),
            statistic=stat, workers=args.workers, bootstrap=0)
    applied = stat.with_ddof(args.ddof) if args.ddof else stat
    entry = power_study(alt, args.n, applied, cfg.alpha, cfg.replications,
                        SeedSpec(cfg.seed, stream_for(f"power/{alt.label}/n={args.n}/{stat.label}")),
                        crit.value(cfg.alpha if stat.rejects_small else 1 - cfg.alpha)
                        if args.critical == "simulated" else crit, args.workers)
    d = entry.to_dict()
    if args.critical == "simulated":
        d["critical_source"] = f"simulated(n={args.n}, reps={args.critical_reps})"
    return d


def _cmd_delta(args, cfg: RunConfig) -> dict:
    from .alternatives import parse_alternative
    from .null_theory import delta_discrepancy
    from .rng import SeedSpec

    alt = parse_alternative(args.alt)
    res = delta_discrepancy(alt, mc_budget=args.mc_budget, seed=SeedSpec(cfg.seed), a=cfg.a,
                            method=args.delta_method)
    d = res.to_dict()
    d["alternative"] = alt.label
    return d


def _cmd_reproduce(args, cfg: RunConfig) -> dict:
    from .simulation import ReplicationBudget, reproduce_table

    budget = ReplicationBudget(
        table2_replications=args.table2_reps,
        power_replications=args.power_reps,
        critical_replications=args.critical_reps,
        workers=args.workers,
    )
    opts = {"z_ddof": args.ddof} if args.table == "table3-subset" else {}
    return reproduce_table(args.table, budget, cfg.seed, **opts).to_dict()


_HANDLERS = {
    "test": _cmd_test,
    "cumulants": _cmd_cumulants,
    "quantiles": _cmd_quantiles,
    "power": _cmd_power,
    "delta": _cmd_delta,
    "reproduce": _cmd_reproduce,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--a", type=float, default=1.0, help="tuning parameter a > 0 (default 1)")
    common.add_argument("--alpha", type=float, default=0.05, help="significance level (default 0.05)")
    common.add_argument("--seed", type=int, default=0, help="master seed (64-bit unsigned)")
    common.add_argument("--output", choices=("human", "json"), default="human")
    common.add_argument("--workers", type=int, default=None,
                        help="worker processes (capped by ZBGOF_THREADS)")

    p = argparse.ArgumentParser(prog="zbgof", description="Zero-bias characteristic-function normality test")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("test", parents=[common], help="test a data file for normality")
    t.add_argument("input_path", help="newline-separated values or single-column CSV")
    t.add_argument("--method", choices=("pearson", "montecarlo"), default="pearson")
    t.add_argument("--reps", type=int, default=20_000, help="null replications for montecarlo")

    c = sub.add_parser("cumulants", parents=[common], help="cumulants and moments of the limit null law")
    c.add_argument("--source", choices=("closed-form", "quadrature-oracle"), default="closed-form")

    q = sub.add_parser("quantiles", parents=[common], help="null quantiles of Z")
    g = q.add_mutually_exclusive_group(required=True)
    g.add_argument("--asymptotic", action="store_true", help="Pearson approximation of the limit law")
    g.add_argument("--n", type=int, help="simulate at sample size n")
    q.add_argument("--levels", type=float, nargs="+", default=[0.01, 0.05, 0.1, 0.9, 0.95, 0.99])
    q.add_argument("--reps", type=int, default=20_000)

    w = sub.add_parser("power", parents=[common], help="empirical power against an alternative")
    w.add_argument("--alt", required=True, help="e.g. t3, chi2_5, U, NMix(0.5,1,4), LN(0,1)")
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--stat", default="Z", help="Z, Z(0.5), HV(2.5), BE(1), BHEP, BCMR, AD, SW, JB")
    w.add_argument("--reps", type=int, default=10_000)
    w.add_argument("--critical", choices=("simulated", "asymptotic"), default="simulated")
    w.add_argument("--critical-reps", type=int, default=20_000)
    w.add_argument("--ddof", type=int, choices=(0, 1), default=0,
                   help="residual divisor for the statistic under the alternative")

    d = sub.add_parser("delta", parents=[common], help="population discrepancy Delta")
    d.add_argument("--alt", required=True)
    d.add_argument("--delta-method", choices=("auto", "analytic-cf", "monte-carlo-cf"), default="auto")
    d.add_argument("--mc-budget", type=int, default=1_000_000)

    r = sub.add_parser("reproduce", parents=[common], help="recompute a published table")
    r.add_argument("table", choices=("table1", "table2", "table3-subset"))
    r.add_argument("--table2-reps", type=int, default=100_000)
    r.add_argument("--power-reps", type=int, default=10_000)
    r.add_argument("--critical-reps", type=int, default=20_000)
    r.add_argument("--ddof", type=int, choices=(0, 1), default=1,
                   help="residual divisor for Z under the alternative in table3-subset")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            input_path=getattr(args, "input_path", None),
            a=args.a,
            alpha=args.alpha,
            method=getattr(args, "method", "pearson"),
            replications=getattr(args, "reps", 20_000),
            seed=args.seed,
            output=args.output,
        )
        payload = _HANDLERS[args.command](args, cfg)
    except (InvalidInput, ParseError, UnknownAlternativeName) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ZBGOFError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2 if isinstance(exc, ValueError) else 1
    print(render(payload, cfg.output))
    return 0


if __name__ == "__main__":
    sys.exit(main())
