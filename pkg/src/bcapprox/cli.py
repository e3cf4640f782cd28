"""Command-line front end: approx / verify / eval jobs over JSON files.

Exit codes are part of the contract: 0 success, 1 when a bound or error
target is not met (or evaluation hits the null cone), 2 for input errors.
Reports are written with the deterministic JSON writer, so two runs with
the same seed and inputs produce byte-identical files.  The environment
variable BCAPPROX_SEED, when set, overrides --seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import jsonio
from .approx import DEFAULT_SEED, BicomplexRational, FitBudget, approximate
from .core import Bicomplex, ExtendedBicomplex, Hyperbolic
from .errors import NullConeError
from .funcspec import FunctionSpec
from .moebius import MoebiusMap, moebius_apply
from .regions import ProductCompact
from .series import (
    KIND_LAURENT,
    KIND_POWER,
    TruncatedSeries,
    area_contour_estimate,
    bieberbach_check,
    gronwall_area_sum,
    inversion_transform,
    koebe_covering_min,
    laurent_series,
    power_series,
    series_eval,
    sqrt_transform,
)

_BOUND_SLACK = 1e-12


@dataclass(frozen=True)
class JobConfig:
    command: str
    function_path: str | None = None
    region_path: str | None = None
    series_path: str | None = None
    moebius_path: str | None = None
    rational_path: str | None = None
    poles_path: str | None = None
    functional: str | None = None
    eps: float | None = None
    max_degree: int = 40
    order: int | None = None
    radius: float | None = None
    samples: int | None = None
    seed: int = DEFAULT_SEED
    at: str | None = None
    out: str | None = None


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bcapprox")
    sub = p.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("approx", help="fit a product-type function on a product compact")
    pa.add_argument("--function", required=True, help="function JSON (expression per slot)")
    pa.add_argument("--region", required=True, help="region JSON (k1/k2 shapes)")
    pa.add_argument("--eps", required=True, type=float, help="sup-error target per slot")
    pa.add_argument("--max-degree", type=int, default=40)
    pa.add_argument("--poles", help="poles JSON; empty slot list forces a polynomial fit")
    pa.add_argument("--samples", type=int, help="boundary samples per slot for fitting")
    pa.add_argument("--seed", type=int, default=DEFAULT_SEED)
    pa.add_argument("--out", required=True, help="report JSON path")

    pv = sub.add_parser("verify", help="check a univalence functional on a series")
    pv.add_argument("--series", required=True, help="series JSON")
    grp = pv.add_mutually_exclusive_group(required=True)
    grp.add_argument("--area", action="store_true", help="tail area sum against 1")
    grp.add_argument("--bieberbach", action="store_true", help="|A_2|_k against 2")
    grp.add_argument("--koebe", action="store_true", help="covering minimum at --radius")
    pv.add_argument("--order", type=int, help="re-truncate the series to this order first")
    pv.add_argument("--radius", type=float, help="sampling radius (koebe: in (0,1); area trace: > 1)")
    pv.add_argument("--samples", type=int, default=4096)
    pv.add_argument("--seed", type=int, default=DEFAULT_SEED)
    pv.add_argument("--out", help="report JSON path (default: stdout)")

    pe = sub.add_parser("eval", help="evaluate a series/Moebius/rational object at a point")
    pe.add_argument("--series", help="series JSON")
    pe.add_argument("--moebius", help="Moebius map JSON")
    pe.add_argument("--rational", help="rational approximant JSON")
    pe.add_argument("--at", required=True, help='point: JSON {"b1":..,"b2":..} / {"z1":..} or a number')
    pe.add_argument("--seed", type=int, default=DEFAULT_SEED)
    pe.add_argument("--out", help="value JSON path (default: stdout)")
    return p


def _config_from_args(args: argparse.Namespace) -> JobConfig:
    seed = args.seed
    env = os.environ.get("BCAPPROX_SEED")
    if env is not None:
        seed = int(env)
    functional = None
    if args.command == "verify":
        functional = "area" if args.area else "bieberbach" if args.bieberbach else "koebe"
    return JobConfig(
        command=args.command,
        function_path=getattr(args, "function", None),
        region_path=getattr(args, "region", None),
        series_path=getattr(args, "series", None),
        moebius_path=getattr(args, "moebius", None),
        rational_path=getattr(args, "rational", None),
        poles_path=getattr(args, "poles", None),
        functional=functional,
        eps=getattr(args, "eps", None),
        max_degree=getattr(args, "max_degree", 40),
        order=getattr(args, "order", None),
        radius=getattr(args, "radius", None),
        samples=getattr(args, "samples", None),
        seed=seed,
        at=getattr(args, "at", None),
        out=getattr(args, "out", None),
    )


def _emit(report: dict, out: str | None) -> None:
    text = jsonio.dumps(report)
    if out:
        jsonio.dump_path(report, out)
    else:
        print(text)


def _hyp_json(h: Hyperbolic) -> dict:
    return {"a1": h.a1, "a2": h.a2}


# -- approx -------------------------------------------------------------------


def _load_poles(path: str | None):
    if path is None:
        return None
    obj = jsonio.load_path(path)
    out = []
    for key in ("k1", "k2"):
        if key not in obj or obj[key] is None:
            out.append(None)
        else:
            out.append(
                [
                    (complex(e["location"][0], e["location"][1]), int(e.get("max_order", 8)))
                    for e in obj[key]
                ]
            )
    return tuple(out)


def cmd_approx(cfg: JobConfig) -> int:
    if cfg.eps is None or cfg.eps <= 0:
        raise ValueError("--eps must be positive")
    func = FunctionSpec.from_json(jsonio.load_path(cfg.function_path))
    compact = ProductCompact.from_json(jsonio.load_path(cfg.region_path))
    poles = _load_poles(cfg.poles_path)
    budget = FitBudget(max_degree=cfg.max_degree)
    nb = cfg.samples
    rational, report = approximate(
        func, compact, cfg.eps, budget, poles, seed=cfg.seed, n_boundary=nb,
        n_interior=None if nb is None else nb // 2,
    )
    payload = report.to_json()
    payload["command"] = "approx"
    payload["approximant"] = rational.to_json()
    _emit(payload, cfg.out)
    return 0 if report.achieved else 1


# -- verify -------------------------------------------------------------------


def _truncate(series: TruncatedSeries, order: int) -> TruncatedSeries:
    if order >= series.order:
        return series
    if series.kind == KIND_POWER:
        return power_series(series.coeffs[: order + 1])
    return laurent_series(series.coeffs[: order + 2])


def cmd_verify(cfg: JobConfig) -> int:
    series = TruncatedSeries.from_json(jsonio.load_path(cfg.series_path))
    if cfg.order is not None:
        series = _truncate(series, cfg.order)
    trace: dict = {"kind": series.kind, "N": series.order}

    if cfg.functional == "bieberbach":
        if series.kind != KIND_POWER:
            raise ValueError("--bieberbach needs a power-F series")
        res = bieberbach_check(series)
        value, bound, holds = res.value, Hyperbolic(2.0, 2.0), res.holds
        trace.update(res.trace)
    elif cfg.functional == "area":
        if series.kind == KIND_POWER:
            tail = inversion_transform(sqrt_transform(series))
            trace["pipeline"] = "sqrt_transform -> inversion_transform"
            trace["tail_N"] = tail.order
        else:
            tail = series
        value = gronwall_area_sum(tail)
        bound = Hyperbolic(1.0, 1.0)
        holds = value.leq(Hyperbolic(1.0 + _BOUND_SLACK, 1.0 + _BOUND_SLACK))
        if cfg.radius is not None:
            ns = max(cfg.samples or 4096, 4 * tail.order, 4)
            area = area_contour_estimate(tail, cfg.radius, ns)
            trace["contour_area"] = _hyp_json(area)
            trace["contour_radius"] = cfg.radius
    else:  # koebe
        if series.kind != KIND_POWER:
            raise ValueError("--koebe needs a power-F series")
        r = 0.99 if cfg.radius is None else cfg.radius
        ns = cfg.samples or 4096
        value = koebe_covering_min(series, r, ns)
        b = r / (1 + r) ** 2
        bound = Hyperbolic(b, b)
        holds = value.geq(Hyperbolic(b - _BOUND_SLACK, b - _BOUND_SLACK))
        trace["radius"] = r
        trace["nsamples"] = ns

    report = {
        "command": "verify",
        "functional": cfg.functional,
        "value": _hyp_json(value),
        "bound": _hyp_json(bound),
        "holds": holds,
        "trace": trace,
    }
    _emit(report, cfg.out)
    return 0 if holds else 1


# -- eval ---------------------------------------------------------------------


def _parse_point(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"cannot parse --at point: {exc}") from exc
    if isinstance(obj, (int, float)):
        return Bicomplex.from_scalar(obj)
    if isinstance(obj, list) and len(obj) == 2:
        return Bicomplex.from_scalar(complex(float(obj[0]), float(obj[1])))
    if isinstance(obj, dict):
        if "inf" in (obj.get("b1"), obj.get("b2")):
            return ExtendedBicomplex.from_json(obj)
        return Bicomplex.from_json(obj)
    raise ValueError(f"cannot interpret --at point {text!r}")


def cmd_eval(cfg: JobConfig) -> int:
    sources = [s for s in (cfg.series_path, cfg.moebius_path, cfg.rational_path) if s]
    if len(sources) != 1:
        raise ValueError("eval needs exactly one of --series/--moebius/--rational")
    point = _parse_point(cfg.at)

    if cfg.moebius_path:
        m = MoebiusMap.from_json(jsonio.load_path(cfg.moebius_path))
        if isinstance(point, Bicomplex):
            point = ExtendedBicomplex.from_bicomplex(point)
        value = moebius_apply(m, point).to_json()
    else:
        if isinstance(point, ExtendedBicomplex):
            point = point.to_bicomplex()
        if cfg.series_path:
            s = TruncatedSeries.from_json(jsonio.load_path(cfg.series_path))
            value = series_eval(s, point).to_json()
        else:
            r = BicomplexRational.from_json(jsonio.load_path(cfg.rational_path))
            value = r.evaluate(point).to_json()

    _emit({"command": "eval", "value": value}, cfg.out)
    return 0


# -- entry point ---------------------------------------------------------------


def _error_payload(kind: str, exc: Exception) -> str:
    return jsonio.dumps({"error": kind, "detail": str(exc)})


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage, which matches the contract
        return int(exc.code or 0)
    try:
        cfg = _config_from_args(args)
        if cfg.command == "approx":
            return cmd_approx(cfg)
        if cfg.command == "verify":
            return cmd_verify(cfg)
        return cmd_eval(cfg)
    except NullConeError as exc:
        print(_error_payload("null-cone", exc), file=sys.stderr)
        return 1
    except (ValueError, KeyError, TypeError, OSError) as exc:
        print(_error_payload("input", exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
