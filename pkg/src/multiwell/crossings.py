"""Avoided-level-crossing and relocalization machinery for the triple well.

The control parameter throughout is delta in beta^2 = (2 + delta) * alpha^2
(equivalently beta = mu * alpha with mu^2 = 2 + delta); delta = 0 is the
asymptotic line where the outer minimum value vanishes and the two level
families compete.  Crossing conditions equate an outer doublet estimate
with a central level:

    V(sqrt(alpha^2+beta^2)) + (2m+1)*Omega(delta) = (2n+1)*sqrt(c(delta)).

A parity-breaking eps*x^3 coupling moves the crossing line to negative
delta; the locus is eps = -(1/2)*alpha^3*delta*sqrt(3+delta), linearized
delta = -2*eps/(sqrt(3)*alpha^3).
"""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .polynomial import Polynomial
from .spectrum import (SolverConfig, classify_levels, grid_points_for,
                       harmonic_spectrum_n2, solve_numerical, well_weights)
from .wells import (PerturbationRangeError, WellShape, build_symmetric,
                    harmonic_wells)

__all__ = [
    "AlcQuery", "AlcSolution", "AsymLocusPoint", "PairGap",
    "DegeneracyFit", "ScanRow", "ScanResult", "TiltRow",
    "LabelsUnresolvedError", "NewtonError",
    "TABLE_PAIRS", "PAIRED_ROWS", "REFERENCE_DELTAS_ALPHA4",
    "solve_crossing", "crossing_table", "pairing_gaps",
    "tune_maximal_degeneracy", "asym_locus_linearized", "asym_locus_cubic",
    "left_well_shift", "relocalization_scan", "tilt_scan",
]


class LabelsUnresolvedError(RuntimeError):
    """The numerical backend could not label the requested level indices."""


class NewtonError(RuntimeError):
    """Damped Newton iteration failed to converge."""


# The twelve (m, n) index pairs of the reference crossing search, and the
# (m, n) ~ (m+1, n+2) near-degenerate pairing they exhibit.
TABLE_PAIRS: tuple[tuple[int, int], ...] = (
    (1, 3), (0, 1), (0, 0), (1, 2), (1, 1), (2, 3),
    (1, 0), (2, 2), (2, 1), (3, 3), (2, 0), (3, 2),
)
PAIRED_ROWS: tuple[tuple[tuple[int, int], tuple[int, int]], ...] = (
    ((0, 1), (1, 3)), ((0, 0), (1, 2)), ((1, 1), (2, 3)),
    ((1, 0), (2, 2)), ((2, 1), (3, 3)), ((2, 0), (3, 2)),
)

# Independently published reference values of delta(m, n) at alpha = 4
# (5 printed decimals); embedded as comparison data for the CLI --compare.
REFERENCE_DELTAS_ALPHA4: dict[tuple[int, int], float] = {
    (1, 3): -0.00262,
    (0, 1): -0.00261,
    (0, 0): 0.00260,
    (1, 2): 0.00261,
    (1, 1): 0.00781,
    (2, 3): 0.00783,
    (1, 0): 0.01299,
    (2, 2): 0.01302,
    (2, 1): 0.01818,
    (3, 3): 0.01823,
    (2, 0): 0.02332,
    (3, 2): 0.02338,
}


@dataclass(frozen=True)
class AlcQuery:
    """One crossing condition: off-central level m against central level n."""

    m: int
    n: int
    alpha: float
    bracket: tuple[float, float] = (-0.05, 0.05)
    backend: str = "harmonic"
    solver: SolverConfig | None = None

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("level indices must be non-negative")
        if not (self.alpha > 0.0):
            raise ValueError("alpha must be positive")
        if not (self.bracket[0] < self.bracket[1]):
            raise ValueError("bracket must satisfy lo < hi")
        if self.backend not in ("harmonic", "numerical"):
            raise ValueError(f"unknown backend {self.backend!r}")


@dataclass(frozen=True)
class AlcSolution:
    m: int
    n: int
    delta: float
    mu: float
    beta: float
    residual: float
    backend: str


@dataclass(frozen=True)
class PairGap:
    first: tuple[int, int]
    second: tuple[int, int]
    gap: float


@dataclass(frozen=True)
class AsymLocusPoint:
    epsilon: float
    alpha: float
    delta: float
    method: str  # 'linearized' | 'cubic'


@dataclass(frozen=True)
class DegeneracyFit:
    shape: WellShape
    max_residual: float
    ground_energies: tuple[float, ...]
    iterations: int


@dataclass(frozen=True)
class ScanRow:
    delta: float
    e0: float
    w_central: float
    w_outer: float
    label: str


@dataclass(frozen=True)
class ScanResult:
    alpha: float
    rows: tuple[ScanRow, ...]
    crossing: float | None


@dataclass(frozen=True)
class TiltRow:
    tilt: float
    e0: float
    w_left: float
    w_right: float


def _harmonic_residual(delta: float, m: int, n: int, alpha: float) -> float:
    beta = alpha * math.sqrt(2.0 + delta)
    hs = harmonic_spectrum_n2(alpha, beta, n_max=n, m_max=m)
    return hs.off_central[m] - hs.central[n]


def _default_numeric_config(q: AlcQuery) -> SolverConfig:
    levels = 2 * (q.m + 1) + q.n + 3
    half = math.sqrt(3.2) * q.alpha + 2.5
    half = 0.5 * math.ceil(2.0 * half)
    return SolverConfig(half_width=half, grid_points=grid_points_for(half, 0.005),
                        num_levels=levels)


def _numeric_residual(delta: float, q: AlcQuery, cfg: SolverConfig) -> float:
    shape = WellShape((q.alpha ** 2, (3.0 + delta) * q.alpha ** 2))
    p = build_symmetric(shape)
    labeled = classify_levels(solve_numerical(p, cfg), p)
    central = [lv.energy for lv in labeled if lv.label == f"central-{q.n}"]
    doublet = [lv.energy for lv in labeled
               if lv.label == f"offcentral-{q.m}"]
    if central and doublet:
        return sum(doublet) / len(doublet) - central[0]
    if any(lv.family == "mixed" for lv in labeled):
        raise LabelsUnresolvedError(
            f"labels unresolved at delta={delta:.8g}: mixed-character state "
            f"among {[lv.label for lv in labeled]}")
    # a family missing from the solved window still fixes the residual sign:
    # the absent level lies above every computed one
    if central:
        return math.inf
    if doublet:
        return -math.inf
    raise LabelsUnresolvedError(
        f"labels unresolved at delta={delta:.8g}: neither central-{q.n} nor "
        f"offcentral-{q.m} found in {[lv.label for lv in labeled]}")


def solve_crossing(q: AlcQuery, delta_tol: float = 1e-8) -> AlcSolution:
    """Solve the crossing condition for delta by bisection in the bracket.

    The bracket must contain a sign change of the residual; if several
    appear (should not happen, the residual is monotone in the default
    bracket) the root nearest zero is taken and a warning is emitted.
    """
    if q.backend == "harmonic":
        def residual(d: float) -> float:
            return _harmonic_residual(d, q.m, q.n, q.alpha)
    else:
        cfg = q.solver if q.solver is not None else _default_numeric_config(q)
        def residual(d: float) -> float:
            return _numeric_residual(d, q, cfg)

    lo, hi = q.bracket
    samples = 33
    xs = [lo + (hi - lo) * i / (samples - 1) for i in range(samples)]
    fs = [residual(x) for x in xs]
    intervals = [(xs[i], xs[i + 1], fs[i]) for i in range(samples - 1)
                 if fs[i] == 0.0 or (fs[i] < 0.0) != (fs[i + 1] < 0.0)]
    if not intervals:
        raise ValueError(
            f"no crossing in bracket [{lo:g}, {hi:g}] for (m={q.m}, n={q.n})")
    if len(intervals) > 1:
        warnings.warn("multiple residual sign changes in bracket; "
                      "taking the root nearest zero", stacklevel=2)
        intervals.sort(key=lambda iv: abs(0.5 * (iv[0] + iv[1])))
    a, b, fa = intervals[0]
    if fa == 0.0:
        delta = a
    else:
        for _ in range(200):
            if b - a <= delta_tol:
                break
            mid = 0.5 * (a + b)
            fm = residual(mid)
            if fm == 0.0:
                a = b = mid
                break
            if (fm < 0.0) == (fa < 0.0):
                a, fa = mid, fm
            else:
                b = mid
        delta = 0.5 * (a + b)
    return AlcSolution(q.m, q.n, delta, mu=math.sqrt(2.0 + delta),
                       beta=q.alpha * math.sqrt(2.0 + delta),
                       residual=residual(delta), backend=q.backend)


def crossing_table(alpha: float, delta_tol: float = 1e-12) -> list[AlcSolution]:
    """All twelve reference (m, n) crossings, harmonic backend, sorted by delta."""
    if not (alpha > 0.0):
        raise ValueError("alpha must be positive")
    sols = [solve_crossing(AlcQuery(m, n, alpha), delta_tol=delta_tol)
            for m, n in TABLE_PAIRS]
    return sorted(sols, key=lambda s: s.delta)


def pairing_gaps(solutions: list[AlcSolution]) -> list[PairGap]:
    """Near-degeneracy gaps |delta(m+1, n+2) - delta(m, n)| of the table rows."""
    by_index = {(s.m, s.n): s.delta for s in solutions}
    gaps = []
    for first, second in PAIRED_ROWS:
        if first in by_index and second in by_index:
            gaps.append(PairGap(first, second,
                                abs(by_index[first] - by_index[second])))
    return gaps


def _inequivalent_ground_energies(shape: WellShape) -> list[float]:
    p = build_symmetric(shape)
    window = math.sqrt(shape.increments[-1]) + 2.0
    return [w.level(0) for w in harmonic_wells(p, window) if w.x > -1e-12]


def tune_maximal_degeneracy(shape: WellShape, tol: float,
                            max_iter: int = 50) -> DegeneracyFit:
    """Adjust the last floor((N+1)/2) increments until every inequivalent
    well has the same ground-state harmonic energy v + sqrt(g), within tol.

    Mirror wells (+-X) are identified first, so an N-increment shape leaves
    only floor(N/2) independent constraints; the Newton step uses a
    least-squares pseudo-inverse where the system is underdetermined.
    N = 1 (double well) is trivially degenerate by symmetry and is
    returned unchanged.
    """
    if not (tol > 0.0):
        raise ValueError("tol must be positive")
    n = shape.order
    if n == 1:
        energies = tuple(_inequivalent_ground_energies(shape))
        return DegeneracyFit(shape, 0.0, energies, 0)
    if not shape.is_deep:
        warnings.warn("shape below the deep-well gate (first increment or "
                      "spacing < 1); degeneracy tuning may be unreliable",
                      stacklevel=2)
    j = (n + 1) // 2
    free = list(range(n - j, n))

    def residuals(inc: list[float]) -> np.ndarray:
        energies = _inequivalent_ground_energies(WellShape(tuple(inc)))
        return np.array([e - energies[0] for e in energies[1:]])

    def valid(inc: list[float]) -> bool:
        return inc[0] > 0.0 and all(b > a for a, b in zip(inc, inc[1:]))

    inc = list(shape.increments)
    res = residuals(inc)
    for iteration in range(1, max_iter + 1):
        norm = float(np.max(np.abs(res)))
        if norm <= tol:
            energies = tuple(_inequivalent_ground_energies(WellShape(tuple(inc))))
            spread = max(energies) - min(energies)
            return DegeneracyFit(WellShape(tuple(inc)), spread, energies,
                                 iteration - 1)
        jac = np.zeros((len(res), len(free)))
        for col, idx in enumerate(free):
            step = 1e-6 * max(1.0, inc[idx])
            trial = list(inc)
            trial[idx] += step
            jac[:, col] = (residuals(trial) - res) / step
        dx, *_ = np.linalg.lstsq(jac, -res, rcond=None)
        scale = 1.0
        for _ in range(10):
            trial = list(inc)
            for col, idx in enumerate(free):
                trial[idx] += scale * float(dx[col])
            if valid(trial):
                trial_res = residuals(trial)
                if float(np.max(np.abs(trial_res))) < norm:
                    inc, res = trial, trial_res
                    break
            scale *= 0.5
        else:
            raise NewtonError(
                f"damped Newton stalled at iteration {iteration}; "
                f"residuals {res.tolist()}")
    raise NewtonError(
        f"no convergence in {max_iter} iterations; residuals {res.tolist()}")


def asym_locus_linearized(epsilon: float, alpha: float) -> AsymLocusPoint:
    """Leading-order catastrophe shift delta = -2*eps/(sqrt(3)*alpha^3).

    Valid for |epsilon| <= 0.1*alpha^3; beyond that the cubic form must be
    solved (asym_locus_cubic).
    """
    if not (alpha > 0.0):
        raise ValueError("alpha must be positive")
    if abs(epsilon) > 0.1 * alpha ** 3:
        raise PerturbationRangeError(
            f"|epsilon|={abs(epsilon):g} exceeds 0.1*alpha^3; "
            "use asym_locus_cubic")
    delta = -2.0 * epsilon / (math.sqrt(3.0) * alpha ** 3)
    return AsymLocusPoint(epsilon, alpha, delta, "linearized")


def _locus_epsilon(delta: float, alpha: float) -> float:
    return -0.5 * alpha ** 3 * delta * math.sqrt(3.0 + delta)


def asym_locus_cubic(epsilon: float, alpha: float) -> AsymLocusPoint:
    """Solve eps = -(1/2)*alpha^3*delta*sqrt(3+delta) for delta in (-3, 1].

    Agrees with the linearized form as eps/alpha^3 -> 0.  When the
    equation has two solutions the one nearest zero is returned.
    """
    if not (alpha > 0.0):
        raise ValueError("alpha must be positive")
    if epsilon == 0.0:
        return AsymLocusPoint(0.0, alpha, 0.0, "cubic")
    lo, hi = -3.0 + 1e-9, 1.0
    samples = 601
    xs = [lo + (hi - lo) * i / (samples - 1) for i in range(samples)]
    fs = [_locus_epsilon(x, alpha) - epsilon for x in xs]
    brackets = [(xs[i], xs[i + 1], fs[i]) for i in range(samples - 1)
                if fs[i] == 0.0 or (fs[i] < 0.0) != (fs[i + 1] < 0.0)]
    if not brackets:
        raise ValueError(
            f"no catastrophe shift in (-3, 1] for epsilon={epsilon:g}, "
            f"alpha={alpha:g} (attainable range is +-alpha^3)")
    brackets.sort(key=lambda iv: abs(0.5 * (iv[0] + iv[1])))
    a, b, fa = brackets[0]
    if fa == 0.0:
        delta = a
    else:
        for _ in range(200):
            mid = 0.5 * (a + b)
            if mid <= a or mid >= b:
                break
            fm = _locus_epsilon(mid, alpha) - epsilon
            if fm == 0.0:
                a = b = mid
                break
            if (fm < 0.0) == (fa < 0.0):
                a, fa = mid, fm
            else:
                b = mid
        delta = 0.5 * (a + b)
    return AsymLocusPoint(epsilon, alpha, delta, "cubic")


def left_well_shift(alpha: float, beta: float,
                    epsilon: float) -> tuple[float, float]:
    """O(eps) changes at the leftmost minimum under the eps*x^3 tilt.

    Returns (depth_shift, curvature_shift): the well bottom moves by
    -eps*(alpha^2+beta^2)^(3/2) (a decrease for eps > 0) and V'' there by
    +3*sqrt(alpha^2+beta^2)*(4*alpha^2+5*beta^2)/beta^2 * eps.
    """
    if not (alpha > 0.0 and beta > 0.0):
        raise ValueError("alpha and beta must be positive")
    s = alpha * alpha + beta * beta
    depth = -epsilon * s ** 1.5
    curvature = 3.0 * math.sqrt(s) * (4.0 * alpha * alpha + 5.0 * beta * beta) \
        / (beta * beta) * epsilon
    return depth, curvature


def _triple_well_poly(alpha: float, delta: float) -> Polynomial:
    a2 = alpha * alpha
    return build_symmetric(WellShape((a2, (3.0 + delta) * a2)))


def _scan_point(args: tuple[float, float, SolverConfig]) -> ScanRow:
    alpha, delta, cfg = args
    p = _triple_well_poly(alpha, delta)
    pairs = solve_numerical(p, cfg)
    ground = pairs[0]
    regions = well_weights(ground, p)
    w_central = _central_weight_of(regions)
    label = classify_levels(pairs, p)[0].label
    return ScanRow(delta, ground.energy, w_central, 1.0 - w_central, label)


def _central_weight_of(regions) -> float:
    for region in regions:
        if region.lo < 0.0 < region.hi:
            return region.weight
    return 0.0


def relocalization_scan(alpha: float, delta_range: tuple[float, float],
                        steps: int, cfg: SolverConfig,
                        jobs: int = 1) -> ScanResult:
    """Ground-state central weight w_c over a delta lattice.

    Reports the crossing delta* where w_c first drops through 0.5 (linear
    interpolation between lattice points), or None when w_c never crosses.
    Lattice points are independent; jobs > 1 distributes them over
    processes and merges in lattice order.
    """
    if steps < 3:
        raise ValueError("steps must be at least 3")
    lo, hi = delta_range
    if not (lo < hi):
        raise ValueError("delta range must satisfy lo < hi")
    deltas = [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]
    tasks = [(alpha, d, cfg) for d in deltas]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_scan_point, tasks))
    else:
        rows = [_scan_point(t) for t in tasks]
    crossing = None
    for a, b in zip(rows, rows[1:]):
        if a.w_central > 0.5 >= b.w_central:
            frac = (a.w_central - 0.5) / (a.w_central - b.w_central)
            crossing = a.delta + frac * (b.delta - a.delta)
            break
    return ScanResult(alpha, tuple(rows), crossing)


def tilt_scan(s1: float, tilt_range: tuple[float, float], steps: int,
              cfg: SolverConfig) -> list[TiltRow]:
    """Ground-state left-half weight of the double well x^4 - 2*s1*x^2 + b*x.

    The contrast case to the triple-well relocalization: the double-well
    response to the tilt b is smooth at any lattice resolution, with no
    abrupt weight jump.
    """
    if steps < 3:
        raise ValueError("steps must be at least 3")
    lo, hi = tilt_range
    rows = []
    for i in range(steps):
        b = lo + (hi - lo) * i / (steps - 1)
        p = Polynomial([0.0, b, -2.0 * s1, 0.0, 1.0])
        ground = solve_numerical(p, cfg)[0]
        rho = ground.psi ** 2 * ground.h
        w_left = float(rho[ground.x < 0.0].sum())
        rows.append(TiltRow(b, ground.energy, w_left, 1.0 - w_left))
    return rows
