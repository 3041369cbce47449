"""Command-line front end: capacity curves, regime boundaries and a self-check.

Model strings look like ``gnak:m=2.5,xi=0.7``. Recognized names and keys::

    gnak  m, xi            generalized Nakagami-m
    nak   m                Nakagami-m
    ray                    Rayleigh
    wei   xi               Weibull
    osg                    one-sided Gaussian
    logn  sigma_db         lognormal (dB spread)
    egk   m, xi, m_s, xi_s extended generalized-K
    kmu   kappa, mu        kappa-mu
    emu   eta, mu, format  eta-mu (format 1 or 2)
    awgn                   no fading (alias awgn-proxy)

Every flag can also be given in a ``--config`` file with one ``key = value``
per line (``#`` starts a comment); flags on the command line win.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .asymptotics import HoccResult, hocc_high, hocc_low, jensen_high, vertical_offset
from .errors import HoccError, UnsupportedModelError
from .fading import (
    Egk,
    EtaMu,
    FadingModel,
    GeneralizedNakagami,
    KappaMu,
    Lognormal,
    ModelSpecError,
    Nakagami,
    OneSidedGaussian,
    Rayleigh,
    Weibull,
    integrate_pdf,
    parse_model,
)
from .oracle import McConfig, QuadratureConfig, hocc_monte_carlo, hocc_quadrature
from .regime import (
    DEFAULT_WEIGHTS,
    INFIMUM_BOUNDARY,
    SUPREMUM_BOUNDARY,
    boundary_scan,
    high_onset,
    low_boundary,
    supremum_boundary,
)
from .snr import SnrGrid, linear_to_db
from .specfun import GlConfig
from .statistics import aof, mu_coeffs_closed, mu_coeffs_gl

METHODS = ("quadrature", "mc", "high", "low", "jensen")
CURVE_HEADER = ("snr_db", "method", "order", "value", "err")


def _fmt(x) -> str:
    return "" if x is None else format(float(x), ".12g")


# ---------------------------------------------------------------------------
# argument parsing


def _parse_snr_range(text: str) -> tuple[float, float]:
    parts = text.replace(",", ":").split(":")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected START:STOP in dB, got {text!r}")
    try:
        start, stop = float(parts[0]), float(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad dB range {text!r}") from None
    if not start < stop:
        raise argparse.ArgumentTypeError(f"need start < stop, got {text!r}")
    return start, stop


def _parse_methods(text: str) -> tuple:
    methods = tuple(m.strip() for m in text.split(",") if m.strip())
    bad = [m for m in methods if m not in METHODS]
    if bad or not methods:
        raise argparse.ArgumentTypeError(f"methods must come from {', '.join(METHODS)}; got {text!r}")
    return methods


def _parse_weights(text: str) -> tuple:
    try:
        weights = tuple(float(w) for w in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad weight list {text!r}") from None
    if len(weights) != 4:
        raise argparse.ArgumentTypeError(f"need four weights, got {len(weights)}")
    return weights


def _points(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError("points must be at least 2")
    return value


def read_config(path: str) -> dict:
    """``key = value`` lines; keys use flag spelling with or without dashes."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, eq, value = line.partition("=")
            if not eq:
                raise SystemExit(f"{path}:{lineno}: expected key = value, got {line!r}")
            out[key.strip().lstrip("-").replace("-", "_")] = value.strip()
    return out


def _add_common(p: argparse.ArgumentParser, model_required: bool = True):
    p.add_argument("--model", required=False, help="model string, e.g. gnak:m=2.5,xi=0.7")
    p.add_argument("--eps", type=float, default=1e-3, help="GL step for numeric coefficients (default 1e-3)")
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.add_argument("--config", help="key = value file providing defaults for any flag")
    p.set_defaults(model_required=model_required)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hocc",
        description="Higher-order capacity statistics over fading channels.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__.split("\n\n", 1)[1],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    curve = sub.add_parser("curve", help="capacity statistic against mean SNR, one row per point and method")
    _add_common(curve)
    curve.add_argument("--order", type=int, default=1, help="statistic order n >= 1 (default 1)")
    curve.add_argument("--snr-db", type=_parse_snr_range, default=(0.0, 40.0), help="START:STOP in dB (default 0:40)")
    curve.add_argument("--points", type=_points, default=21, help="grid points (default 21)")
    curve.add_argument("--methods", type=_parse_methods, default=("quadrature", "high"),
                       help=f"comma list from {','.join(METHODS)} (default quadrature,high)")
    curve.add_argument("--samples", type=int, default=10**6, help="Monte Carlo draws per point")
    curve.add_argument("--seed", type=int, default=20240601, help="Monte Carlo seed")

    boundary = sub.add_parser("boundary", help="high-SNR onset and low-SNR boundary of one model")
    _add_common(boundary)
    boundary.add_argument("--weights", type=_parse_weights, default=DEFAULT_WEIGHTS,
                          help="four positive weights summing to 1 (default uniform)")
    boundary.add_argument("--points", type=_points, default=64, help="scan points over [0.3, 2.5]")

    validate = sub.add_parser("validate", help="run the invariant suite and print a pass/fail table")
    _add_common(validate, model_required=False)
    validate.add_argument("--samples", type=int, default=10**6, help="Monte Carlo draws per cell")
    validate.add_argument("--seed", type=int, default=20240601, help="Monte Carlo seed")
    return parser


def parse_args(argv=None) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        sub = parser._subparsers._group_actions[0].choices[args.command]
        known = {a.dest: a for a in sub._actions}
        defaults = {}
        for key, raw in read_config(args.config).items():
            if key not in known or key in ("help", "config"):
                parser.error(f"{args.config}: unknown key {key!r}")
            action = known[key]
            try:
                defaults[key] = action.type(raw) if action.type else raw
            except (argparse.ArgumentTypeError, ValueError) as exc:
                parser.error(f"{args.config}: {key}: {exc}")
        sub.set_defaults(**defaults)
        args = parser.parse_args(argv)
    if args.model_required and not args.model:
        parser.error("--model is required")
    return args


# ---------------------------------------------------------------------------
# output helpers


def _open_out(path):
    return open(path, "w", newline="", encoding="utf-8") if path else sys.stdout


def _write_rows(path, header, rows):
    fh = _open_out(path)
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    finally:
        if fh is not sys.stdout:
            fh.close()


def _coefficients(model: FadingModel, order: int, eps: float):
    try:
        return mu_coeffs_closed(model, order)
    except UnsupportedModelError as exc:
        print(f"note: {exc}; using GL coefficients with step {eps:g}", file=sys.stderr)
        return mu_coeffs_gl(model, order, GlConfig(step=eps))


# ---------------------------------------------------------------------------
# commands


def cmd_curve(args) -> int:
    model = parse_model(args.model)
    grid = SnrGrid.from_db_range(args.snr_db[0], args.snr_db[1], args.points)
    n = args.order
    coeffs = _coefficients(model, n, args.eps) if "high" in args.methods else None
    mc_cfg = McConfig(samples=args.samples, seed=args.seed) if "mc" in args.methods else None
    quad_cfg = QuadratureConfig()
    runners: dict[str, Callable[[float], HoccResult]] = {
        "quadrature": lambda g: hocc_quadrature(model, n, g, quad_cfg),
        "mc": lambda g: hocc_monte_carlo(model, n, g, mc_cfg),
        "high": lambda g: hocc_high(model, n, g, coeffs),
        "low": lambda g: hocc_low(model, n, g),
        "jensen": lambda g: jensen_high(n, g),
    }
    def point(db_mean):
        db, g = db_mean
        out = []
        for method in args.methods:
            res = runners[method](g)
            out.append((_fmt(db), method, n, _fmt(res.value), _fmt(res.error)))
        return out

    # map yields in submission order, so rows stay in grid order
    with ThreadPoolExecutor() as pool:
        rows = [row for block in pool.map(point, zip(grid.db, grid)) for row in block]
    _write_rows(args.out, CURVE_HEADER, rows)
    return 0


def cmd_boundary(args) -> int:
    model = parse_model(args.model)
    scan = boundary_scan(model, args.weights, points=args.points)
    low = low_boundary(model, args.weights, scan=scan)
    lines = [f"model: {model.spec()}"]
    try:
        onset = high_onset(model)
        lines.append(f"high_onset: {onset.value:.10f} ({onset.db:.10f} dB)")
    except HoccError as exc:
        lines.append(f"high_onset: unavailable ({exc})")
    lines += [
        f"low_boundary: {low.value:.10f} ({low.db:.10f} dB)",
        f"infimum: {INFIMUM_BOUNDARY:.11f} ({linear_to_db(INFIMUM_BOUNDARY):.10f} dB)",
        f"supremum: {SUPREMUM_BOUNDARY:.11f} ({linear_to_db(SUPREMUM_BOUNDARY):.10f} dB)",
        "weights: " + ",".join(_fmt(w) for w in args.weights),
    ]
    # keep stdout parseable when the CSV also goes there
    print("\n".join(lines), file=sys.stderr if not args.out else sys.stdout)
    rows = [(_fmt(linear_to_db(g)), _fmt(g), _fmt(v)) for g, v in zip(scan.means, scan.values)]
    _write_rows(args.out, ("snr_db", "mean", "objective"), rows)
    return 0


@dataclass
class Check:
    name: str
    status: str  # pass | fail | xfail
    detail: str


DEFAULT_ZOO = (
    GeneralizedNakagami(2.5, 0.7),
    Nakagami(2.0),
    Rayleigh(),
    Weibull(2.0),
    OneSidedGaussian(),
    Lognormal(6.0),
    Egk(1.5, 1.2, 2.0, 0.8),
    KappaMu(1.0, 2.0),
    EtaMu(0.5, 1.0),
)


def _even_order_heavy_origin(model: FadingModel, n: int) -> bool:
    # with pdf ~ gamma^(a-1), a < 1, E[log^n gamma] stays above E[log^n(1+gamma)]
    # for even n at every finite SNR, so the high-SNR asymptote is not a lower bound there
    return n % 2 == 0 and model.zero_exponent < 0


def validation_checks(models, samples: int, seed: int, eps: float):
    """Yield :class:`Check` rows for each model, then the model-free constants."""
    quad = QuadratureConfig()
    mc = McConfig(samples=samples, seed=seed)
    gl = GlConfig(step=eps)
    for model in models:
        tag = model.spec()
        for mean in (0.01, 1.0, 100.0):
            total = integrate_pdf(model, mean)[0]
            yield Check(f"{tag} normalization @ {mean:g}", "pass" if abs(total - 1) <= 1e-6 else "fail",
                        f"{total:.12f}")
        af1 = aof(model, 1)
        yield Check(f"{tag} AF_1 = 0", "pass" if abs(af1) <= 1e-9 else "fail", f"{af1:.3e}")
        m1 = model.moment(1, 7.5)
        yield Check(f"{tag} moment(1) = mean", "pass" if m1 == 7.5 else "fail", f"{m1!r}")
        numeric = mu_coeffs_gl(model, 4, gl)
        try:
            closed = mu_coeffs_closed(model, 4)
        except UnsupportedModelError:
            closed = None
        yield Check(f"{tag} mu_0 = 0", "pass" if abs(numeric[0]) <= 1e-9 else "fail", f"{numeric[0]:.3e}")
        if closed is not None:
            dev = max(abs(c - g) / max(1.0, abs(c)) for c, g in zip(closed.values, numeric.values))
            yield Check(f"{tag} closed vs GL mu_k", "pass" if dev <= 1e-2 else "fail", f"max rel {dev:.2e}")
        worst = 0.0
        for db in (-20, 0, 20):
            g = 10 ** (db / 10)
            for n in (1, 2, 3, 4):
                q = hocc_quadrature(model, n, g, quad)
                r = hocc_monte_carlo(model, n, g, mc)
                worst = max(worst, abs(q.value - r.value) / r.error)
        yield Check(f"{tag} quadrature vs MC", "pass" if worst <= 4 else "fail", f"max |z| {worst:.2f}")
        coeffs = closed or numeric
        for n in (1, 2, 3, 4):
            slack = min(
                hocc_quadrature(model, n, 10 ** (db / 10), quad).value - hocc_high(model, n, 10 ** (db / 10), coeffs).value
                for db in (25, 30, 40)
            )
            ok = slack >= -1e-6
            if not ok and _even_order_heavy_origin(model, n):
                yield Check(f"{tag} high bound n={n}", "xfail",
                            f"slack {slack:.3g}: density diverges at 0, log^n gamma dominates for even n")
            else:
                yield Check(f"{tag} high bound n={n}", "pass" if ok else "fail", f"min slack {slack:.3g}")
            slack = min(
                hocc_low(model, n, 10 ** (db / 10)).value - hocc_quadrature(model, n, 10 ** (db / 10), quad).value
                for db in (-10, -20, -30)
            )
            yield Check(f"{tag} low bound n={n}", "pass" if slack >= -1e-6 else "fail", f"min slack {slack:.3g}")
        off = vertical_offset(model, coeffs)
        yield Check(f"{tag} vertical offset", "pass" if math.isfinite(off) else "fail", f"{off:.6f}")

    onset = high_onset(OneSidedGaussian()).value
    yield Check("high-SNR onset (one-sided Gaussian)",
                "pass" if abs(onset / 17.5848747065 - 1) <= 1e-5 else "fail", f"{onset:.10f}")
    sup = supremum_boundary().value
    yield Check("supremum boundary", "pass" if abs(sup - SUPREMUM_BOUNDARY) <= 1e-9 else "fail", f"{sup:.11f}")
    inf = low_boundary(OneSidedGaussian()).value
    yield Check("infimum boundary (one-sided Gaussian)",
                "pass" if abs(inf - INFIMUM_BOUNDARY) <= 0.05 else "fail", f"{inf:.11f}")


def cmd_validate(args) -> int:
    models = (parse_model(args.model),) if args.model else DEFAULT_ZOO
    failures = 0
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("check", "status", "detail"))
    for check in validation_checks(models, args.samples, args.seed, args.eps):
        print(f"{check.status.upper():5s}  {check.name}: {check.detail}", flush=True)
        writer.writerow((check.name, check.status, check.detail))
        failures += check.status == "fail"
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            fh.write(buf.getvalue())
    print(f"{'all checks passed' if not failures else f'{failures} check(s) failed'}")
    return 0 if not failures else 1


COMMANDS = {"curve": cmd_curve, "boundary": cmd_boundary, "validate": cmd_validate}


def main(argv=None) -> int:
    args = parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ModelSpecError as exc:
        print(f"error: {exc}\n  {exc.text}\n  {' ' * (exc.column - 1)}^", file=sys.stderr)
        return 2
    except HoccError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
