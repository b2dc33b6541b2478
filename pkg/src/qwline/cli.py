"""Command-line front end: exact runs, regime comparisons, and data export.

Subcommands
-----------
simulate   exact distributions for each step count
compare    exact vs. leading-order estimate over site windows
konno      window sums against the integrated limit density
rate       empirical decay-rate extraction outside the cone
density    limit density or decay rate on a grid
airy       single Airy evaluation (diagnostics)

A flat key = value config file may supply any long flag; explicit flags
win over the file.  All emitted bytes are deterministic for a fixed
configuration.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass, field

from .airy import airy_ai
from .asymptotics import WALL_WIDTH_DEFAULT, classify, estimate
from .coin import Coin, Spinor, make_coin, make_spinor
from .engine import (
    degenerate_distribution,
    distribution,
    evolve,
    nearest_parity_site,
)
from .errors import DomainError, QwlineError, UnderflowError
from .quadrature import density_mass
from .serialize import distribution_rows, field_rows, fmt, table_text
from .spectral import density_rho, empirical_rate, rate_H

_DEFAULTS = {
    "a_re": 1.0 / math.sqrt(2.0), "a_im": 0.0,
    "b_re": 1.0 / math.sqrt(2.0), "b_im": 0.0,
    "phi1_re": 1.0, "phi1_im": 0.0,
    "phi2_re": 0.0, "phi2_im": 0.0,
    "steps": "1",
    "wall_width": WALL_WIDTH_DEFAULT,
    "format": "csv",
}


@dataclass
class RunConfig:
    """Validated run parameters shared by every subcommand."""

    coin: Coin
    spinor: Spinor
    steps: list[int]
    windows: list[tuple[float, float]] | None
    wall_width: float
    out: str | None
    format: str = "csv"
    extra: dict = field(default_factory=dict)


def _parse_steps(text: str) -> list[int]:
    parts = [p for chunk in str(text).split(",") for p in chunk.split()]
    if not parts:
        raise DomainError("steps list is empty")
    try:
        steps = [int(p) for p in parts]
    except ValueError as exc:
        raise DomainError(f"bad steps list {text!r}") from exc
    if any(n < 0 for n in steps):
        raise DomainError("step counts must be non-negative")
    return steps


def _parse_window(text: str) -> tuple[float, float]:
    try:
        lo_s, hi_s = str(text).split(":")
        lo, hi = float(lo_s), float(hi_s)
    except ValueError as exc:
        raise DomainError(f"bad window {text!r}, expected lo:hi") from exc
    if not (-1.0 <= lo < hi <= 1.0):
        raise DomainError(f"window {text!r} must satisfy -1 <= lo < hi <= 1")
    return lo, hi


def load_config_file(path: str) -> dict:
    """Read a flat ``key = value`` file; '#' starts a comment."""
    values = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError(f"{path}:{lineno}: expected key = value")
            key, _, val = line.partition("=")
            values[key.strip().replace("-", "_")] = val.strip()
    return values


def _resolve(args: argparse.Namespace) -> RunConfig:
    cfg_file = load_config_file(args.config) if args.config else {}

    def pick(name: str, cast=float):
        cli_value = getattr(args, name, None)
        if cli_value is not None:
            return cli_value
        if name in cfg_file:
            return cast(cfg_file[name])
        return _DEFAULTS.get(name)

    coin = make_coin(
        complex(pick("a_re"), pick("a_im")),
        complex(pick("b_re"), pick("b_im")),
    )
    spinor = make_spinor(
        complex(pick("phi1_re"), pick("phi1_im")),
        complex(pick("phi2_re"), pick("phi2_im")),
    )
    steps = _parse_steps(pick("steps", str))

    windows = None
    if getattr(args, "window", None):
        windows = [_parse_window(w) for w in args.window]
    elif "window" in cfg_file:
        windows = [_parse_window(w) for w in cfg_file["window"].split(";")]

    fmt_kind = str(pick("format", str))
    if fmt_kind not in ("csv", "json"):
        raise DomainError(f"format must be csv or json, got {fmt_kind!r}")
    out = getattr(args, "out", None)
    if out is None and "out" in cfg_file:
        out = cfg_file["out"]
    return RunConfig(
        coin=coin,
        spinor=spinor,
        steps=steps,
        windows=windows,
        wall_width=float(pick("wall_width")),
        out=out,
        format=fmt_kind,
    )


def _per_step_path(out: str, n: int, multiple: bool) -> str:
    if "{n}" in out:
        return out.replace("{n}", str(n))
    if not multiple:
        return out
    root, ext = os.path.splitext(out)
    return f"{root}_n{n}{ext}"


def _emit(cfg: RunConfig, blocks: list[tuple[int | None, str]]) -> None:
    # blocks: (step count or None, rendered text); files per step when an
    # output path is set, stdout with '# n=' separators otherwise.
    if cfg.out is None:
        for n, text in blocks:
            if n is not None and len(blocks) > 1:
                sys.stdout.write(f"# n={n}\n")
            sys.stdout.write(text)
        return
    multiple = len(blocks) > 1
    for n, text in blocks:
        path = cfg.out if n is None else _per_step_path(cfg.out, n, multiple)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _exact_distribution(cfg: RunConfig, n: int):
    if cfg.coin.degenerate:
        return degenerate_distribution(cfg.coin, cfg.spinor, n)
    return distribution(evolve(cfg.coin, cfg.spinor, n))


def cmd_simulate(cfg: RunConfig) -> None:
    amplitudes = bool(cfg.extra.get("amplitudes"))
    blocks = []
    for n in cfg.steps:
        if amplitudes:
            header, rows = field_rows(evolve(cfg.coin, cfg.spinor, n))
        else:
            header, rows = distribution_rows(_exact_distribution(cfg, n))
        blocks.append((n, table_text(header, rows, cfg.format)))
    _emit(cfg, blocks)


def _window_sites(n: int, lo: float, hi: float):
    y = math.ceil(n * lo)
    if (n + y) % 2 != 0:
        y += 1
    top = math.floor(n * hi)
    while y <= top:
        yield y
        y += 2


def cmd_compare(cfg: RunConfig) -> None:
    windows = cfg.windows if cfg.windows else [(-1.0, 1.0)]
    header = ["n", "y", "region", "estimate", "exact", "abs_err", "rel_err"]
    rows = []
    for n in cfg.steps:
        if n < 1:
            raise DomainError("compare requires steps >= 1")
        dist = _exact_distribution(cfg, n)
        for lo, hi in windows:
            for y in _window_sites(n, lo, hi):
                if abs(y) > n:
                    continue
                exact = dist.prob(y)
                if abs(y) == n:
                    # no leading-order formula applies at |y/n| = 1; keep
                    # the exact mass, mark the estimate columns absent
                    label = classify(cfg.coin, n, y, cfg.wall_width)
                    rows.append([n, y, label.kind.value,
                                 None, exact, None, None])
                    continue
                est = estimate(cfg.coin, cfg.spinor, n, y, cfg.wall_width)
                abs_err = abs(est.value - exact)
                rel_err = abs_err / exact if exact > 1e-300 else None
                rows.append([n, y, est.region.kind.value,
                             est.value, exact, abs_err, rel_err])
    _emit(cfg, [(None, table_text(header, rows, cfg.format))])


def cmd_konno(cfg: RunConfig, alpha: float, beta: float) -> None:
    aa = cfg.coin.abs_a
    if not (-aa < alpha < beta < aa):
        raise DomainError(
            f"window ({alpha!r}, {beta!r}) must lie inside (-|a|, |a|) = "
            f"(-{aa!r}, {aa!r})"
        )
    integral = density_mass(cfg.coin, cfg.spinor, alpha, beta)
    header = ["n", "sum", "integral", "difference"]
    rows = []
    for n in cfg.steps:
        if n < 1:
            raise DomainError("konno requires steps >= 1")
        dist = _exact_distribution(cfg, n)
        total = math.fsum(
            dist.prob(y) for y in _window_sites(n, alpha, beta)
        )
        rows.append([n, total, integral, total - integral])
    _emit(cfg, [(None, table_text(header, rows, cfg.format))])


def cmd_rate(cfg: RunConfig, xi: float) -> None:
    rate_H(cfg.coin, xi)  # validates the hidden-region domain up front
    header = ["n", "y", "xi", "empirical_rate", "limit_rate", "gap", "status"]
    rows = []
    for n in cfg.steps:
        if n < 1:
            raise DomainError("rate requires steps >= 1")
        y = nearest_parity_site(n, n * xi)
        xi_n = y / n
        p = _exact_distribution(cfg, n).prob(y)
        try:
            limit = rate_H(cfg.coin, xi_n)
        except DomainError:
            rows.append([n, y, xi_n, None, None, None, "domain"])
            continue
        try:
            emp = empirical_rate(n, p)
        except UnderflowError:
            rows.append([n, y, xi_n, None, limit, None, "underflow"])
            continue
        rows.append([n, y, xi_n, emp, limit, abs(emp - limit), "ok"])
    _emit(cfg, [(None, table_text(header, rows, cfg.format))])


def cmd_density(cfg: RunConfig, quantity: str, points: int) -> None:
    if points < 2:
        raise DomainError("density grid needs at least 2 points")
    aa = cfg.coin.abs_a
    if cfg.windows:
        lo, hi = cfg.windows[0]
    elif quantity == "density":
        lo, hi = -(aa - 1e-3), aa - 1e-3
    else:
        lo, hi = aa + 1e-3, 1.0 - 1e-3
    header = ["xi", "value"]
    rows = []
    for i in range(points):
        xi = lo + (hi - lo) * i / (points - 1)
        if quantity == "density":
            value = density_rho(cfg.coin, cfg.spinor, xi)
        else:
            value = rate_H(cfg.coin, xi)
        rows.append([xi, value])
    _emit(cfg, [(None, table_text(header, rows, cfg.format))])


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key = value config file")
    for name in ("a-re", "a-im", "b-re", "b-im",
                 "phi1-re", "phi1-im", "phi2-re", "phi2-im"):
        common.add_argument(f"--{name}", type=float, default=None)
    common.add_argument("--steps", default=None,
                        help="comma-separated step counts, e.g. 500,1000")
    common.add_argument("--window", action="append", default=None,
                        metavar="LO:HI",
                        help="normalized site window y/n (repeatable)")
    common.add_argument("--wall-width", type=float, default=None,
                        help="wall band half-width W in units of n^(1/3)")
    common.add_argument("--out", default=None, help="output path (default stdout)")
    common.add_argument("--format", choices=("csv", "json"), default=None)

    parser = argparse.ArgumentParser(
        prog="qwline",
        description="Quantum walks on the integer line: exact engine and "
                    "asymptotic regime checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("simulate", parents=[common],
                       help="exact distribution for each step count")
    p.add_argument("--amplitudes", action="store_true",
                   help="emit spin amplitudes instead of probabilities")
    sub.add_parser("compare", parents=[common],
                   help="exact vs. asymptotic estimate over windows")
    p = sub.add_parser("konno", parents=[common],
                       help="window sums against the limit density")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p = sub.add_parser("rate", parents=[common],
                       help="empirical decay rate outside the cone")
    p.add_argument("--xi", type=float, required=True)
    p = sub.add_parser("density", parents=[common],
                       help="limit density or decay rate on a grid")
    p.add_argument("--quantity", choices=("density", "rate"), default="density")
    p.add_argument("--points", type=int, default=201)
    p = sub.add_parser("airy", parents=[common], help="evaluate Ai(x)")
    p.add_argument("--x", type=float, required=True)
    return parser


def _merge_window_flags(argv: list[str]) -> list[str]:
    # argparse mistakes "-0.3:0.3" for an option; fold the value into the
    # flag token so windows with negative endpoints parse
    merged = []
    it = iter(argv)
    for tok in it:
        if tok == "--window":
            val = next(it, None)
            merged.append(tok if val is None else f"--window={val}")
        else:
            merged.append(tok)
    return merged


def main(argv=None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_merge_window_flags(list(argv)))
    try:
        if args.command == "airy":
            sys.stdout.write(fmt(airy_ai(args.x)) + "\n")
            return 0
        cfg = _resolve(args)
        if args.command == "simulate":
            cfg.extra["amplitudes"] = args.amplitudes
            cmd_simulate(cfg)
        elif args.command == "compare":
            cmd_compare(cfg)
        elif args.command == "konno":
            cmd_konno(cfg, args.alpha, args.beta)
        elif args.command == "rate":
            cmd_rate(cfg, args.xi)
        elif args.command == "density":
            cmd_density(cfg, args.quantity, args.points)
        return 0
    except QwlineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
