"""Low-lying bound states of -lam^2 psi'' + V psi = E psi.

Two routes: closed-form harmonic estimates per well (level spacing
2*lam*sqrt(V''/2)), and a second-order finite-difference discretization on
a symmetric grid with Dirichlet boundaries, solved by LAPACK bisection on
the Sturm count plus inverse iteration (scipy's 'stebz' driver).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgError, eigh_tridiagonal

from .polynomial import Polynomial, real_roots
from .wells import HarmonicWell, critical_points, harmonic_wells

__all__ = [
    "SolverConfig", "Eigenpair", "HarmonicSpectrum", "RegionWeight",
    "LabeledLevel", "ConvergenceError",
    "central_levels", "off_central_levels", "harmonic_spectrum_n2",
    "choose_domain", "grid_points_for", "solve_numerical",
    "well_weights", "classify_levels",
]


class ConvergenceError(RuntimeError):
    """The eigensolver failed to converge within its iteration budget."""


@dataclass(frozen=True)
class SolverConfig:
    """Grid and level-count controls for the finite-difference solver.

    The grid [-half_width, half_width] must be symmetric with an odd point
    count (so it contains x = 0); half_width should satisfy
    V(+-L) >= 2 * (highest requested harmonic estimate), which
    choose_domain arranges.
    """

    half_width: float
    grid_points: int
    num_levels: int = 1
    lam: float = 1.0

    def __post_init__(self):
        if not (self.half_width > 0.0 and math.isfinite(self.half_width)):
            raise ValueError("half_width must be positive and finite")
        if self.grid_points < 201:
            raise ValueError("grid_points must be at least 201")
        if self.grid_points % 2 == 0:
            raise ValueError("grid_points must be odd (symmetric grid containing 0)")
        if self.num_levels < 1:
            raise ValueError("num_levels must be at least 1")
        if not (self.lam > 0.0):
            raise ValueError("lam must be positive")

    @property
    def step(self) -> float:
        return 2.0 * self.half_width / (self.grid_points - 1)

    def grid(self) -> np.ndarray:
        return np.linspace(-self.half_width, self.half_width, self.grid_points)


@dataclass(frozen=True, eq=False)
class Eigenpair:
    """One numerical level: energy and L2-normalized wavefunction samples."""

    energy: float
    psi: np.ndarray
    x: np.ndarray
    h: float
    lam: float = 1.0


@dataclass(frozen=True)
class HarmonicSpectrum:
    """Closed-form triple-well estimates: central levels and outer doublets."""

    central: tuple[float, ...]
    off_central: tuple[float, ...]
    spring_central: float       # sqrt(c) = sqrt(V''(0)/2)
    spring_off_central: float   # Omega = sqrt(V''(X)/2) at the outer minimum


@dataclass(frozen=True)
class RegionWeight:
    """Probability weight between two consecutive maxima of V."""

    lo: float
    hi: float
    weight: float

    @property
    def contains_origin(self) -> bool:
        return self.lo < 0.0 < self.hi


@dataclass(frozen=True)
class LabeledLevel:
    energy: float
    family: str          # 'central' | 'offcentral' | 'mixed'
    index: int | None    # n or m counter within the family
    label: str           # e.g. 'central-0', 'offcentral-1', 'mixed'
    w_central: float


def central_levels(p: Polynomial, n_max: int, lam: float = 1.0) -> list[float]:
    """Harmonic levels V(0) + (2n+1)*lam*sqrt(V''(0)/2) for n = 0..n_max."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    slope = p.coeffs[1] if len(p.coeffs) > 1 else 0.0
    if abs(slope) > 1e-12 * (1.0 + p.magnitude_at(1.0)):
        raise ValueError("origin is not a stationary point of the potential")
    curv = 2.0 * p.coeffs[2] if len(p.coeffs) > 2 else 0.0
    if curv <= 1e-12 * (1.0 + p.magnitude_at(1.0)):
        raise ValueError("origin is not a well: V''(0) <= 0")
    omega = math.sqrt(0.5 * curv)
    v0 = p(0.0)
    return [v0 + (2 * n + 1) * lam * omega for n in range(n_max + 1)]


def off_central_levels(p: Polynomial, well: HarmonicWell, m_max: int,
                       lam: float = 1.0) -> list[float]:
    """Doublet estimates v + (2m+1)*lam*sqrt(g) for m = 0..m_max.

    Each value stands for a near-degenerate parity doublet; the leading
    order cannot resolve the splitting.
    """
    if m_max < 0:
        raise ValueError("m_max must be non-negative")
    dv = p.derivative()
    if abs(dv(well.x)) > 1e-6 * (1.0 + dv.magnitude_at(well.x)):
        raise ValueError(f"x={well.x:.6g} is not a stationary point of p")
    return [well.level(m, lam) for m in range(m_max + 1)]


def harmonic_spectrum_n2(alpha: float, beta: float, n_max: int, m_max: int,
                         lam: float = 1.0) -> HarmonicSpectrum:
    """Closed-form spectrum of the triple well with widths (alpha, beta)."""
    a2, b2 = alpha * alpha, beta * beta
    spring_c = math.sqrt(3.0 * a2 * (a2 + b2))
    spring_o = math.sqrt(6.0 * a2 * b2 + 6.0 * b2 * b2)
    v_outer = a2 ** 3 + 1.5 * a2 * a2 * b2 - 0.5 * b2 ** 3
    central = tuple((2 * n + 1) * lam * spring_c for n in range(n_max + 1))
    off = tuple(v_outer + (2 * m + 1) * lam * spring_o for m in range(m_max + 1))
    return HarmonicSpectrum(central, off, spring_c, spring_o)


def choose_domain(p: Polynomial, e_max: float) -> float:
    """Smallest safe half-width L on a 0.5-step lattice.

    Climbs the lattice until V(+-L) >= 2*e_max and L exceeds the outermost
    stationary point by 2, then takes one more lattice step of margin.
    """
    if p.degree < 2 or p.degree % 2 != 0 or p.coeffs[-1] <= 0.0:
        raise ValueError("potential must be confining: even degree >= 2, positive leading coefficient")
    dv = p.derivative()
    outer = 0.0
    if dv.degree >= 1:
        bound = 1.0 + max(abs(c) for c in dv.coeffs[:-1]) / abs(dv.coeffs[-1])
        roots = real_roots(dv, -bound - 1.0, bound + 1.0, tol=1e-9 * max(1.0, bound))
        if roots:
            outer = max(abs(r.x) for r in roots)
    level = 2.0 * e_max
    min_l = outer + 2.0
    half = 0.5
    while not (half >= min_l and p(half) >= level and p(-half) >= level):
        half += 0.5
        if half > 1e6:
            raise ValueError("no reasonable domain found; potential barely grows")
    return half + 0.5


def grid_points_for(half_width: float, step: float) -> int:
    """Odd point count >= 201 putting the grid spacing near the requested step."""
    n = int(round(2.0 * half_width / step)) + 1
    if n % 2 == 0:
        n += 1
    return max(n, 201)


def _is_symmetric(p: Polynomial) -> bool:
    top = max(abs(c) for c in p.coeffs)
    return all(abs(c) <= 1e-12 * top for c in p.coeffs[1::2])


def _rayleigh(diag: np.ndarray, off: float, v: np.ndarray) -> float:
    av = diag * v
    av[:-1] += off * v[1:]
    av[1:] += off * v[:-1]
    return float(v @ av) / float(v @ v)


def _symmetrize_parity(energies: np.ndarray, psi: np.ndarray,
                       diag: np.ndarray, off: float) -> None:
    """Restore parity-pure eigenvectors of a symmetric potential, in place.

    Exact eigenvectors are even or odd; deep outer doublets split below
    machine resolution, so LAPACK returns arbitrary rotations within the
    2D eigenspace.  Degenerate pairs are rotated back to the even/odd
    basis; lone vectors are projected onto their dominant parity (for a
    degenerate singleton both parities are eigenvectors, for a resolved
    level this only strips numerical noise).  psi columns hold interior
    values only.
    """
    k = len(energies)
    groups: list[list[int]] = []
    for j in range(k):
        if groups and abs(energies[j] - energies[groups[-1][-1]]) \
                <= 1e-6 * max(1.0, abs(energies[j])):
            groups[-1].append(j)
        else:
            groups.append([j])
    for group in groups:
        if len(group) == 1:
            col = psi[:, group[0]]
            even = 0.5 * (col + col[::-1])
            odd = 0.5 * (col - col[::-1])
            dominant = even if float(even @ even) >= float(odd @ odd) else odd
            norm = math.sqrt(float(dominant @ dominant))
            if norm > 0.0:
                psi[:, group[0]] = dominant / norm
            continue
        if len(group) != 2:
            continue
        i, j = group
        candidates = []
        for col in (psi[:, i], psi[:, j]):
            flipped = col[::-1]
            candidates.append(0.5 * (col + flipped))
            candidates.append(0.5 * (col - flipped))
        even = max(candidates[0::2], key=lambda u: float(u @ u))
        odd = max(candidates[1::2], key=lambda u: float(u @ u))
        if float(even @ even) == 0.0 or float(odd @ odd) == 0.0:
            continue
        even = even / math.sqrt(float(even @ even))
        odd = odd / math.sqrt(float(odd @ odd))
        if _rayleigh(diag, off, even) <= _rayleigh(diag, off, odd):
            psi[:, i], psi[:, j] = even, odd
        else:
            psi[:, i], psi[:, j] = odd, even


def solve_numerical(p: Polynomial, cfg: SolverConfig) -> list[Eigenpair]:
    """Lowest cfg.num_levels eigenpairs of the discretized operator.

    Second-order central differences, diagonal V(x_i) + 2*lam^2/h^2,
    off-diagonal -lam^2/h^2, Dirichlet boundaries.  Eigenvalues come from
    bisection on the Sturm count, eigenvectors from inverse iteration;
    wavefunctions are returned L2-normalized (sum psi^2 * h = 1) with
    deterministic sign.
    """
    n = cfg.grid_points
    if cfg.num_levels > n - 2:
        raise ValueError(f"requested {cfg.num_levels} levels on a grid with "
                         f"{n - 2} interior points")
    x = cfg.grid()
    h = cfg.step
    v_grid = p(x)
    off = -cfg.lam * cfg.lam / (h * h)
    diag = v_grid[1:-1] - 2.0 * off
    try:
        energies, vectors = eigh_tridiagonal(
            diag, np.full(n - 3, off), select="i",
            select_range=(0, cfg.num_levels - 1),
            check_finite=False, lapack_driver="stebz")
    except LinAlgError as exc:
        raise ConvergenceError(
            f"tridiagonal eigensolver failed: {exc} "
            f"(grid_points={n}, h={h:.4g}, lam={cfg.lam:g})") from exc
    if _is_symmetric(p):
        _symmetrize_parity(energies, vectors, diag, off)
    pairs = []
    for j in range(cfg.num_levels):
        psi = np.zeros(n)
        psi[1:-1] = vectors[:, j]
        psi /= math.sqrt(float(psi @ psi) * h)
        peak = int(np.argmax(np.abs(psi)))
        if psi[peak] < 0.0:
            psi = -psi
        pairs.append(Eigenpair(float(energies[j]), psi, x, h, cfg.lam))
    return pairs


def well_weights(pair: Eigenpair, p: Polynomial) -> list[RegionWeight]:
    """Probability weights of the grid regions delimited by the maxima of V.

    A single-well potential (no interior maxima) yields one region of
    weight 1.  Weights sum to the normalization (1 within 1e-9).
    """
    window = float(pair.x[-1])
    maxima = [cp.x for cp in critical_points(p, window) if cp.kind == "max"]
    rho = pair.psi ** 2 * pair.h
    if not maxima:
        return [RegionWeight(-math.inf, math.inf, float(rho.sum()))]
    edges = [-math.inf] + sorted(maxima) + [math.inf]
    out = []
    for lo, hi in zip(edges, edges[1:]):
        mask = (pair.x >= lo) & (pair.x < hi)
        out.append(RegionWeight(lo, hi, float(rho[mask].sum())))
    return out


def _central_weight(regions: list[RegionWeight]) -> float:
    for region in regions:
        if region.contains_origin:
            return region.weight
    return 0.0


def classify_levels(pairs: list[Eigenpair], p: Polynomial) -> list[LabeledLevel]:
    """Label eigenpairs 'central-n' / 'offcentral-m' by dominant region.

    Outer parity doublets share one m: consecutive off-central energies
    closer than 1e-3 of the outer level spacing are grouped.  A state whose
    central weight sits at 0.5 (tie, typical exactly at a crossing) is
    labeled 'mixed'.
    """
    if not pairs:
        return []
    lam = pairs[0].lam
    weights = [_central_weight(well_weights(pair, p)) for pair in pairs]
    order = sorted(range(len(pairs)), key=lambda i: pairs[i].energy)

    window = float(pairs[0].x[-1])
    spacing = None
    try:
        outer = [w for w in harmonic_wells(p, window) if w.x > 1e-9]
        if outer:
            spacing = 2.0 * lam * math.sqrt(outer[-1].g)
    except ValueError:
        pass

    families: dict[int, str] = {}
    for i, wc in enumerate(weights):
        if abs(wc - 0.5) <= 1e-6:
            families[i] = "mixed"
        elif wc > 0.5:
            families[i] = "central"
        else:
            families[i] = "offcentral"

    off_sorted = [i for i in order if families[i] == "offcentral"]
    if spacing is None and len(off_sorted) > 1:
        gaps = [pairs[b].energy - pairs[a].energy
                for a, b in zip(off_sorted, off_sorted[1:])]
        spacing = max(max(gaps), 1.0)
    labels: dict[int, tuple[str, int | None]] = {}
    n_counter = 0
    for i in order:
        if families[i] == "central":
            labels[i] = (f"central-{n_counter}", n_counter)
            n_counter += 1
        elif families[i] == "mixed":
            labels[i] = ("mixed", None)
    m_counter = -1
    prev_energy = None
    for i in off_sorted:
        e = pairs[i].energy
        if prev_energy is None or spacing is None \
                or e - prev_energy > 1e-3 * spacing:
            m_counter += 1
        labels[i] = (f"offcentral-{m_counter}", m_counter)
        prev_energy = e

    return [LabeledLevel(pairs[i].energy, families[i], labels[i][1],
                         labels[i][0], weights[i])
            for i in range(len(pairs))]
