"""Command line: reference crossing table, spectra, density figures,
asymmetry locus, and config-driven sweeps.

Exit codes: 0 success, 2 numeric/solver failure, 64 usage or config error.
All CSV/JSON floats are written as %.10e so identical inputs give
byte-identical data files; only the sweep manifest carries a timestamp.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .crossings import (REFERENCE_DELTAS_ALPHA4, AlcQuery, LabelsUnresolvedError,
                        NewtonError, asym_locus_cubic, crossing_table,
                        pairing_gaps, relocalization_scan, solve_crossing)
from .polynomial import Polynomial, RootIsolationError
from .spectrum import (ConvergenceError, SolverConfig, central_levels,
                       choose_domain, classify_levels, grid_points_for,
                       off_central_levels, solve_numerical, well_weights)
from .svgfig import line_plot
from .wells import (DegenerateWellError, WellShape, build_symmetric,
                    harmonic_wells)

EXIT_OK = 0
EXIT_NUMERIC = 2
EXIT_USAGE = 64

_NUMERIC_ERRORS = (ValueError, ConvergenceError, RootIsolationError,
                   LabelsUnresolvedError, NewtonError, DegenerateWellError,
                   ZeroDivisionError, OverflowError)


class CliError(Exception):
    """Semantic usage/config error -> exit 64."""


def _fmt(v: float) -> str:
    return format(float(v) + 0.0, ".10e")  # +0.0 normalizes -0.0


def _canon(obj):
    """Round-trip floats through %.10e so JSON output is reproducible."""
    if isinstance(obj, float):
        return float(_fmt(obj))
    if isinstance(obj, dict):
        return {k: _canon(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_canon(v) for v in obj]
    return obj


def _dump_json(obj) -> str:
    return json.dumps(_canon(obj), indent=2) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _csv_lines(header: str, rows: list[list[str]]) -> str:
    return "\n".join([header] + [",".join(r) for r in rows]) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 64, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# shared potential / solver plumbing

def _add_potential_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--alpha", type=float, default=None,
                     help="triple-well inner width alpha")
    sub.add_argument("--mu2", type=float, default=None,
                     help="ratio beta^2/alpha^2 (with --alpha)")
    sub.add_argument("--delta", type=float, default=None,
                     help="mu^2 = 2 + delta (with --alpha)")
    sub.add_argument("--shape", type=str, default=None,
                     help="comma-separated cumulative increments s1,s2,...")
    sub.add_argument("--potential", type=str, default=None,
                     help="comma-separated coefficients, highest degree first, "
                          "down to the constant (e.g. x^6-96x^4+2304x^2 is "
                          "1,0,-96,0,2304,0,0)")


def _add_grid_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--half-width", type=float, default=None,
                     help="grid half-width L (default: chosen from the potential)")
    sub.add_argument("--grid-step", type=float, default=0.005,
                     help="target grid spacing h (default 0.005)")
    sub.add_argument("--grid-points", type=int, default=None,
                     help="explicit odd grid point count")
    sub.add_argument("--lambda", dest="lam", type=float, default=1.0,
                     help="kinetic prefactor in -lam^2 d2/dx2 (default 1)")


def _parse_floats(text: str, what: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise CliError(f"could not parse {what}: {exc}") from exc


def _resolve_potential(args) -> tuple[Polynomial, str]:
    picked = [args.potential is not None, args.shape is not None,
              args.alpha is not None]
    if sum(picked) != 1:
        raise CliError("give exactly one of --alpha, --shape, --potential")
    if args.potential is not None:
        coeffs = _parse_floats(args.potential, "--potential")
        if len(coeffs) < 2:
            raise CliError("--potential needs at least two coefficients")
        return Polynomial.from_descending(coeffs), "custom potential"
    if args.shape is not None:
        increments = _parse_floats(args.shape, "--shape")
        try:
            shape = WellShape(tuple(increments))
        except ValueError as exc:
            raise CliError(f"bad --shape: {exc}") from exc
        return build_symmetric(shape), f"shape {increments}"
    if args.alpha is None or args.alpha <= 0.0:
        raise CliError("alpha must be positive")
    if args.mu2 is not None and args.delta is not None:
        raise CliError("give --mu2 or --delta, not both")
    mu2 = args.mu2 if args.mu2 is not None else 2.0 + (args.delta or 0.0)
    if mu2 <= 0.0:
        raise CliError("mu^2 must be positive")
    a2 = args.alpha ** 2
    shape = WellShape((a2, a2 * (1.0 + mu2)))
    return build_symmetric(shape), \
        f"alpha={args.alpha:g}, mu^2={mu2:g}"


def _stationary_window(p: Polynomial) -> float:
    dv = p.derivative()
    if dv.degree < 1:
        return 3.0
    bound = 1.0 + max(abs(c) for c in dv.coeffs[:-1]) / abs(dv.coeffs[-1])
    return bound + 1.0


def _harmonic_families(p: Polynomial, levels: int, lam: float):
    """(central levels or None, [(well, level list) for x>0 wells])."""
    central = None
    try:
        central = central_levels(p, levels - 1, lam)
    except ValueError:
        pass
    wells = [w for w in harmonic_wells(p, _stationary_window(p)) if w.x > 1e-9]
    off = [(w, off_central_levels(p, w, levels - 1, lam)) for w in wells]
    return central, off


def _solver_config(args, p: Polynomial, levels: int) -> SolverConfig:
    lam = args.lam
    if args.half_width is not None:
        half = args.half_width
    else:
        central, off = _harmonic_families(p, levels, lam)
        estimates = list(central or [])
        for _, values in off:
            estimates.extend(values)
        if not estimates:
            raise CliError("cannot estimate a domain for this potential; "
                           "pass --half-width")
        half = choose_domain(p, max(estimates))
    n = args.grid_points if args.grid_points is not None \
        else grid_points_for(half, args.grid_step)
    return SolverConfig(half_width=half, grid_points=n,
                        num_levels=levels, lam=lam)


# ---------------------------------------------------------------------------
# table1

def _cmd_table1(args) -> int:
    if args.alpha <= 0.0:
        raise CliError("alpha must be positive")
    if args.compare and abs(args.alpha - 4.0) > 1e-12:
        raise CliError("--compare reference values are tabulated for alpha=4 only")
    t0 = time.perf_counter()
    sols = crossing_table(args.alpha)
    elapsed = time.perf_counter() - t0
    gaps = pairing_gaps(sols)

    if args.format == "csv":
        rows = [[str(s.m), str(s.n), _fmt(s.delta), _fmt(s.residual)]
                for s in sols]
        _emit(_csv_lines("m,n,delta,residual", rows), args.output)
        return EXIT_OK
    if args.format == "json":
        payload = []
        for s in sols:
            entry = {"m": s.m, "n": s.n, "delta": s.delta,
                     "residual": s.residual}
            if args.compare:
                ref = REFERENCE_DELTAS_ALPHA4[(s.m, s.n)]
                entry["reference"] = ref
                entry["deviation"] = abs(s.delta - ref)
            payload.append(entry)
        _emit(_dump_json(payload), args.output)
        if args.compare:
            max_dev = max(e["deviation"] for e in payload)
            print(f"max_abs_deviation={max_dev:.3e}", file=sys.stderr)
        return EXIT_OK

    lines = [f"crossing conditions at alpha={args.alpha:g} "
             f"(beta^2 = (2+delta)*alpha^2)"]
    header = f"{'m':>2} {'n':>2} {'delta':>13} {'residual':>12}"
    if args.compare:
        header += f" {'reference':>11} {'deviation':>11}"
    lines.append(header)
    max_dev = 0.0
    for s in sols:
        line = f"{s.m:>2} {s.n:>2} {s.delta:>13.8f} {s.residual:>12.3e}"
        if args.compare:
            ref = REFERENCE_DELTAS_ALPHA4[(s.m, s.n)]
            dev = abs(s.delta - ref)
            max_dev = max(max_dev, dev)
            line += f" {ref:>11.5f} {dev:>11.3e}"
        lines.append(line)
    lines.append("pairing gaps |delta(m+1,n+2) - delta(m,n)|:")
    for g in gaps:
        lines.append(f"  {g.first} vs {g.second}: {g.gap:.3e}")
    if args.compare:
        lines.append(f"max_abs_deviation={max_dev:.3e}")
    lines.append(f"solved 12 conditions in {elapsed:.3f} s")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# spectrum

def _cmd_spectrum(args) -> int:
    if args.levels < 1:
        raise CliError("--levels must be at least 1")
    p, desc = _resolve_potential(args)
    if args.backend == "harmonic":
        central, off = _harmonic_families(p, args.levels, args.lam)
        rows = []
        spring_central = None
        if central is not None:
            spring_central = math.sqrt(p.coeffs[2])  # sqrt(V''(0)/2)
            rows.extend(("central", i, e) for i, e in enumerate(central))
        for k, (well, values) in enumerate(off):
            family = "offcentral" if len(off) == 1 else f"offcentral{k}"
            rows.extend((family, i, e) for i, e in enumerate(values))
        if not rows:
            raise CliError("no harmonic wells found for this potential")
        if args.format == "csv":
            _emit(_csv_lines("family,index,energy",
                             [[f, str(i), _fmt(e)] for f, i, e in rows]),
                  args.output)
        elif args.format == "json":
            payload = {
                "backend": "harmonic", "potential": desc,
                "levels": [{"family": f, "index": i, "energy": e}
                           for f, i, e in rows],
            }
            if spring_central is not None:
                payload["spring_central"] = spring_central
            if off:
                payload["spring_offcentral"] = [math.sqrt(w.g) for w, _ in off]
            _emit(_dump_json(payload), args.output)
        else:
            lines = [f"harmonic estimates for {desc} (lam={args.lam:g})"]
            for f, i, e in rows:
                lines.append(f"  {f}-{i}: {e:.6f}")
            if spring_central is not None:
                lines.append(f"  spring central sqrt(c) = {spring_central:.6f}")
            for w, _ in off:
                lines.append(f"  spring offcentral Omega = "
                             f"{math.sqrt(w.g):.6f} (well at x={w.x:.6g})")
            _emit("\n".join(lines) + "\n", args.output)
        return EXIT_OK

    cfg = _solver_config(args, p, args.levels)
    pairs = solve_numerical(p, cfg)
    labeled = classify_levels(pairs, p)
    harm = {}
    if args.compare:
        central, off = _harmonic_families(p, args.levels + 2, args.lam)
        if central is not None:
            harm.update({f"central-{i}": e for i, e in enumerate(central)})
        if off:
            outermost = max(off, key=lambda item: item[0].x)
            harm.update({f"offcentral-{i}": e
                         for i, e in enumerate(outermost[1])})
    rows = []
    for lv in labeled:
        row = {"label": lv.label, "family": lv.family,
               "index": -1 if lv.index is None else lv.index,
               "energy": lv.energy, "w_central": lv.w_central,
               "w_outer": 1.0 - lv.w_central}
        if args.compare:
            est = harm.get(lv.label)
            row["energy_harmonic"] = est if est is not None else float("nan")
            row["diff"] = lv.energy - est if est is not None else float("nan")
        rows.append(row)
    if args.format == "csv":
        header = "label,family,index,energy,w_central,w_outer"
        if args.compare:
            header += ",energy_harmonic,diff"
        csv_rows = []
        for r in rows:
            cells = [r["label"], r["family"], str(r["index"]),
                     _fmt(r["energy"]), _fmt(r["w_central"]), _fmt(r["w_outer"])]
            if args.compare:
                cells += [_fmt(r["energy_harmonic"]), _fmt(r["diff"])]
            csv_rows.append(cells)
        _emit(_csv_lines(header, csv_rows), args.output)
    elif args.format == "json":
        _emit(_dump_json({"backend": "numerical", "potential": desc,
                          "half_width": cfg.half_width,
                          "grid_points": cfg.grid_points,
                          "levels": rows}), args.output)
    else:
        lines = [f"numerical spectrum for {desc} "
                 f"(L={cfg.half_width:g}, {cfg.grid_points} points, "
                 f"lam={cfg.lam:g})"]
        for r in rows:
            line = (f"  {r['label']:<14} E={r['energy']:.6f} "
                    f"w_c={r['w_central']:.4f}")
            if args.compare and not math.isnan(r["energy_harmonic"]):
                line += (f" harmonic={r['energy_harmonic']:.6f} "
                         f"diff={r['diff']:+.6f}")
            lines.append(line)
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# density

def _cmd_density(args) -> int:
    if args.level < 0:
        raise CliError("--level must be non-negative")
    p, desc = _resolve_potential(args)
    cfg = _solver_config(args, p, args.level + 1)
    pair = solve_numerical(p, cfg)[args.level]
    rho = pair.psi ** 2
    if args.format == "csv":
        rows = [[_fmt(x), _fmt(r)] for x, r in zip(pair.x, rho)]
        _emit(_csv_lines("x,rho", rows), args.output)
        return EXIT_OK
    regions = well_weights(pair, p)
    bands = [(r.lo, r.hi, f"w={r.weight:.4f}") for r in regions]
    svg = line_plot(list(pair.x), list(rho),
                    title=f"probability density, level {args.level} ({desc})",
                    xlabel="x", ylabel="rho(x)",
                    regions=bands if len(bands) > 1 else None)
    _emit(svg, args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# locus

def _cmd_locus(args) -> int:
    if args.alpha <= 0.0:
        raise CliError("alpha must be positive")
    if args.steps < 2:
        raise CliError("--steps must be at least 2")
    if not (args.eps_min < args.eps_max):
        raise CliError("need eps-min < eps-max")
    rows = []
    for i in range(args.steps):
        eps = args.eps_min + (args.eps_max - args.eps_min) * i / (args.steps - 1)
        d_lin = -2.0 * eps / (math.sqrt(3.0) * args.alpha ** 3) + 0.0
        d_cubic = asym_locus_cubic(eps, args.alpha).delta
        rows.append((eps, d_lin, d_cubic, abs(d_cubic - d_lin)))
    if args.format == "csv":
        _emit(_csv_lines("epsilon,delta_lin,delta_cubic,gap",
                         [[_fmt(a), _fmt(b), _fmt(c), _fmt(d)]
                          for a, b, c, d in rows]), args.output)
    elif args.format == "json":
        _emit(_dump_json([{"epsilon": a, "delta_lin": b, "delta_cubic": c,
                           "gap": d} for a, b, c, d in rows]), args.output)
    else:
        lines = [f"asymmetric catastrophe locus at alpha={args.alpha:g}",
                 f"{'epsilon':>12} {'delta_lin':>14} {'delta_cubic':>14} {'gap':>11}"]
        for a, b, c, d in rows:
            lines.append(f"{a:>12.6g} {b:>14.6e} {c:>14.6e} {d:>11.3e}")
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# sweep

def _parse_config(path: str) -> dict[str, str]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read config {path}: {exc}") from exc
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise CliError(f"{path}: line {lineno}: expected key=value, "
                           f"got {raw.strip()!r}")
        key, _, value = line.partition("=")
        key, value = key.strip().lower(), value.strip()
        if not key or not value:
            raise CliError(f"{path}: line {lineno}: empty key or value")
        out[key] = value
    if not out:
        raise CliError(f"{path}: empty config")
    return out


def _cfg_get(cfg: dict[str, str], key: str, cast, default=None):
    if key not in cfg:
        if default is None:
            raise CliError(f"config key {key!r} is required")
        return default
    try:
        return cast(cfg[key])
    except ValueError as exc:
        raise CliError(f"config key {key!r}: {exc}") from exc


def _sweep_relocalization(cfg: dict[str, str], jobs: int):
    alpha = _cfg_get(cfg, "alpha", float)
    lo = _cfg_get(cfg, "delta_min", float)
    hi = _cfg_get(cfg, "delta_max", float)
    steps = _cfg_get(cfg, "steps", int)
    half = _cfg_get(cfg, "half_width", float, 9.0)
    step = _cfg_get(cfg, "grid_step", float, 0.005)
    levels = _cfg_get(cfg, "levels", int, 1)
    lam = _cfg_get(cfg, "lambda", float, 1.0)
    solver = SolverConfig(half_width=half,
                          grid_points=grid_points_for(half, step),
                          num_levels=levels, lam=lam)
    result = relocalization_scan(alpha, (lo, hi), steps, solver, jobs=jobs)
    header = "delta,E0,w_central,w_outer,label"
    csv_rows = [[_fmt(r.delta), _fmt(r.e0), _fmt(r.w_central),
                 _fmt(r.w_outer), r.label] for r in result.rows]
    results = [{"delta": r.delta, "E0": r.e0, "w_central": r.w_central,
                "w_outer": r.w_outer, "label": r.label} for r in result.rows]
    return header, csv_rows, results, result.crossing


def _sweep_tilt(cfg: dict[str, str], jobs: int):
    """Double-well contrast demo: the left-weight response to a linear tilt
    is smooth, unlike the triple-well relocalization jump."""
    del jobs
    from .crossings import tilt_scan
    s1 = _cfg_get(cfg, "s1", float)
    lo = _cfg_get(cfg, "tilt_min", float)
    hi = _cfg_get(cfg, "tilt_max", float)
    steps = _cfg_get(cfg, "steps", int)
    half = _cfg_get(cfg, "half_width", float, 6.0)
    step = _cfg_get(cfg, "grid_step", float, 0.01)
    lam = _cfg_get(cfg, "lambda", float, 1.0)
    solver = SolverConfig(half_width=half,
                          grid_points=grid_points_for(half, step),
                          num_levels=1, lam=lam)
    rows = tilt_scan(s1, (lo, hi), steps, solver)
    header = "tilt,E0,w_left,w_right"
    csv_rows = [[_fmt(r.tilt), _fmt(r.e0), _fmt(r.w_left), _fmt(r.w_right)]
                for r in rows]
    results = [{"tilt": r.tilt, "E0": r.e0, "w_left": r.w_left,
                "w_right": r.w_right} for r in rows]
    return header, csv_rows, results, None


def _sweep_alc(cfg: dict[str, str], jobs: int):
    del jobs  # each bisection is sequential; pairs are few
    alpha = _cfg_get(cfg, "alpha", float)
    backend = _cfg_get(cfg, "backend", str, "harmonic")
    lo = _cfg_get(cfg, "bracket_lo", float, -0.05)
    hi = _cfg_get(cfg, "bracket_hi", float, 0.05)
    pairs_text = _cfg_get(cfg, "pairs", str, "all")
    if pairs_text.strip().lower() == "all":
        from .crossings import TABLE_PAIRS
        pairs = list(TABLE_PAIRS)
    else:
        pairs = []
        for tok in pairs_text.split(","):
            m_str, _, n_str = tok.strip().partition(":")
            try:
                pairs.append((int(m_str), int(n_str)))
            except ValueError as exc:
                raise CliError(f"bad pairs entry {tok!r}: {exc}") from exc
    sols = [solve_crossing(AlcQuery(m, n, alpha, bracket=(lo, hi),
                                    backend=backend))
            for m, n in pairs]
    sols.sort(key=lambda s: s.delta)
    header = "m,n,delta,residual"
    csv_rows = [[str(s.m), str(s.n), _fmt(s.delta), _fmt(s.residual)]
                for s in sols]
    results = [{"m": s.m, "n": s.n, "delta": s.delta, "residual": s.residual}
               for s in sols]
    return header, csv_rows, results, None


def _cmd_sweep(args) -> int:
    cfg = _parse_config(args.config)
    kind = cfg.get("kind", "relocalization").lower()
    jobs = args.jobs if args.jobs is not None else _cfg_get(cfg, "jobs", int, 1)
    if jobs < 1:
        raise CliError("jobs must be at least 1")
    name = cfg.get("name", kind)
    if kind == "relocalization":
        header, csv_rows, results, crossing = _sweep_relocalization(cfg, jobs)
    elif kind == "alc":
        header, csv_rows, results, crossing = _sweep_alc(cfg, jobs)
    elif kind == "tilt":
        header, csv_rows, results, crossing = _sweep_tilt(cfg, jobs)
    else:
        raise CliError(f"unknown sweep kind {kind!r} "
                       "(expected 'relocalization', 'alc', or 'tilt')")
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    csv_path = outdir / f"{name}.csv"
    csv_path.write_text(_csv_lines(header, csv_rows), encoding="utf-8")
    manifest = {
        "command": "sweep",
        "params": dict(sorted(cfg.items())),
        "started": datetime.now(timezone.utc).isoformat(),
        "results": results,
        "crossing": crossing,
        "tool_version": __version__,
    }
    manifest_path = outdir / f"{name}_manifest.json"
    manifest_path.write_text(_dump_json(manifest), encoding="utf-8")
    cross_text = "no crossing" if crossing is None else f"crossing={crossing:.6g}"
    print(f"wrote {csv_path} and {manifest_path} ({len(results)} results, "
          f"{cross_text})")
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="multiwell",
                     description="Multi-well polynomial potentials: spectra, "
                                 "avoided crossings, relocalization scans.")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True,
                                 parser_class=_Parser)

    t1 = subs.add_parser("table1", help="solve the twelve reference "
                                        "crossing conditions")
    t1.add_argument("--alpha", type=float, default=4.0)
    t1.add_argument("--compare", action="store_true",
                    help="compare against embedded reference values (alpha=4)")
    t1.add_argument("--format", choices=("table", "csv", "json"),
                    default="table")
    t1.add_argument("--output", default=None)
    t1.set_defaults(func=_cmd_table1)

    sp = subs.add_parser("spectrum", help="harmonic or numerical level list")
    _add_potential_args(sp)
    _add_grid_args(sp)
    sp.add_argument("--backend", choices=("harmonic", "numerical"),
                    default="harmonic")
    sp.add_argument("--levels", type=int, default=4)
    sp.add_argument("--compare", action="store_true",
                    help="numerical backend: add harmonic estimate and diff")
    sp.add_argument("--format", choices=("table", "csv", "json"),
                    default="table")
    sp.add_argument("--output", default=None)
    sp.set_defaults(func=_cmd_spectrum)

    de = subs.add_parser("density", help="probability density of one level")
    _add_potential_args(de)
    _add_grid_args(de)
    de.add_argument("--level", type=int, default=0)
    de.add_argument("--format", choices=("svg", "csv"), default="svg")
    de.add_argument("--output", default=None)
    de.set_defaults(func=_cmd_density)

    lo = subs.add_parser("locus", help="asymmetric catastrophe locus "
                                       "delta(epsilon)")
    lo.add_argument("--alpha", type=float, required=True)
    lo.add_argument("--eps-min", type=float, default=0.0)
    lo.add_argument("--eps-max", type=float, default=0.1)
    lo.add_argument("--steps", type=int, default=11)
    lo.add_argument("--format", choices=("table", "csv", "json"),
                    default="table")
    lo.add_argument("--output", default=None)
    lo.set_defaults(func=_cmd_locus)

    sw = subs.add_parser("sweep", help="run a scan described by a key=value "
                                       "config file")
    sw.add_argument("--config", required=True)
    sw.add_argument("--outdir", default="out")
    sw.add_argument("--jobs", type=int, default=None,
                    help="parallel workers for lattice points")
    sw.set_defaults(func=_cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK  # consumer closed the pipe (e.g. head)
    except _NUMERIC_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
