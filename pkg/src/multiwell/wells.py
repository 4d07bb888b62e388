"""Symmetric multi-well polynomial potentials built from well-shape data.

The confining family used throughout: an even, monic polynomial V of
degree 2N+2 with V(0) = 0 whose derivative factorizes as

    V'(x) = (2N+2) * x * (x^2 - s_1) * ... * (x^2 - s_N),

so the cumulative increments s_1 <= ... <= s_N are the squared radii of
the non-origin stationary points.  For N = 2 this is a triple well with
spring constants sqrt(c) (central) and Omega (outer); adding a small
eps*x^3 term tilts it and shifts every stationary point by eps/(4 beta^2)
to leading order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .polynomial import Polynomial, real_roots

__all__ = [
    "WellShape", "HarmonicWell", "CriticalPoint", "QuadWellForms",
    "PerturbedExtrema", "DegenerateWellError", "PerturbationRangeError",
    "build_symmetric", "closed_form_n2", "closed_form_n3",
    "critical_points", "harmonic_wells", "tilted_well_minimum",
    "perturbed_extrema_n2",
]


class DegenerateWellError(ValueError):
    """A stationary point with vanishing curvature blocks the harmonic model."""


class PerturbationRangeError(ValueError):
    """The asymmetry coupling is too large for the perturbative formulas."""


@dataclass(frozen=True)
class WellShape:
    """Cumulative squared radii s_1 <= s_2 <= ... <= s_N of the stationary points.

    Strictly increasing, strictly positive increments are required for the
    deep-well regime; `is_deep` additionally asks for unit spacing (the
    operations that assume pronounced wells warn below that gate).
    """

    increments: tuple[float, ...]

    def __post_init__(self):
        inc = tuple(float(s) for s in self.increments)
        if len(inc) < 1:
            raise ValueError("shape needs at least one increment")
        if any(not math.isfinite(s) or s < 0.0 for s in inc):
            raise ValueError(f"increments must be finite and non-negative: {inc}")
        if any(b < a for a, b in zip(inc, inc[1:])):
            raise ValueError(f"increments must be non-decreasing: {inc}")
        object.__setattr__(self, "increments", inc)

    @classmethod
    def from_widths(cls, *widths: float) -> "WellShape":
        """Build from the per-step widths (alpha, beta, ...): s_k = alpha^2 + ... """
        if not widths:
            raise ValueError("at least one width required")
        total, inc = 0.0, []
        for w in widths:
            total += float(w) ** 2
            inc.append(total)
        return cls(tuple(inc))

    @property
    def order(self) -> int:
        """Number of barriers N; the potential has degree 2N+2."""
        return len(self.increments)

    @property
    def is_deep(self) -> bool:
        """Deep-well gate: s_1 >= 1 and every spacing s_{k+1}-s_k >= 1."""
        inc = self.increments
        if inc[0] < 1.0:
            return False
        return all(b - a >= 1.0 for a, b in zip(inc, inc[1:]))

    def scaled(self, lam: float) -> "WellShape":
        """Shape with every width multiplied by lam (increments by lam^2)."""
        return WellShape(tuple(s * lam * lam for s in self.increments))

    def radii(self) -> tuple[float, ...]:
        return tuple(math.sqrt(s) for s in self.increments)


@dataclass(frozen=True)
class HarmonicWell:
    """Local model V ~ v + g*(t - x)^2 around a minimum at x.

    v is the well value V(x) and g = V''(x)/2 > 0 the half-curvature.
    """

    x: float
    v: float
    g: float

    def __post_init__(self):
        if not (self.g > 0.0):
            raise ValueError(f"half-curvature must be positive, got g={self.g}")

    def level(self, m: int, lam: float = 1.0) -> float:
        """Harmonic estimate v + (2m+1) * lam * sqrt(g) for level m."""
        return self.v + (2 * m + 1) * lam * math.sqrt(self.g)


@dataclass(frozen=True)
class CriticalPoint:
    x: float
    value: float
    curvature: float  # full second derivative V''(x)
    kind: str         # 'min' | 'max' | 'degenerate'


@dataclass(frozen=True)
class QuadWellForms:
    """Closed-form couplings and well diagnostics for the N=3 (four-well) shape."""

    a: float
    c: float
    f: float
    inner_value: float
    inner_curvature: float
    outer_value: float
    outer_curvature: float


@dataclass(frozen=True)
class PerturbedExtrema:
    """Leading-order stationary-point shifts of the tilted triple well.

    Adding eps*x^3 moves the symmetric stationary set
    {-sqrt(a2+b2), -alpha, 0, alpha, sqrt(a2+b2)} to
    {-sqrt(a2+b2)-eps*p2, -alpha+eps*q2, ~0, alpha+eps*u2, sqrt(a2+b2)-eps*v2};
    all four leading shifts equal 1/(4 beta^2).  u2_correction is the O(eps)
    coefficient of u2(eps); stationary_points holds the numerically refined
    roots of the perturbed derivative for validation.
    """

    epsilon: float
    p2: float
    q2: float
    u2: float
    v2: float
    u2_correction: float
    stationary_points: tuple[float, ...]


def build_symmetric(shape: WellShape) -> Polynomial:
    """Monic even potential of degree 2N+2 with V(0)=0 and the given shape.

    The derivative is constructed as (2N+2) * x * prod (x^2 - s_k) and
    integrated with the constant fixed to zero.
    """
    n = shape.order
    dv = Polynomial.monomial(1, 2.0 * n + 2.0)
    for s in shape.increments:
        dv = dv * Polynomial([-s, 0.0, 1.0])
    return dv.antiderivative()


def closed_form_n2(alpha: float, beta: float) -> tuple[float, float]:
    """Couplings (a, c) of x^6 + a x^4 + c x^2 for the triple-well shape."""
    if alpha < 0.0 or beta < 0.0:
        raise ValueError("alpha and beta must be non-negative")
    a2, b2 = alpha * alpha, beta * beta
    return -3.0 * (a2 + 0.5 * b2), 3.0 * a2 * (a2 + b2)


def closed_form_n3(alpha: float, beta: float, gamma: float) -> QuadWellForms:
    """Couplings (a, c, f) of x^8 + a x^6 + c x^4 + f x^2 plus well diagnostics.

    inner_* refer to the minima at +-alpha, outer_* to the minima at
    +-sqrt(alpha^2+beta^2+gamma^2); curvatures are full second derivatives.
    A zero curvature (e.g. beta = gamma = 0) marks a degenerate well.
    """
    if alpha < 0.0 or beta < 0.0 or gamma < 0.0:
        raise ValueError("alpha, beta, gamma must be non-negative")
    a2, b2, g2 = alpha * alpha, beta * beta, gamma * gamma
    a = -4.0 * a2 - (8.0 / 3.0) * b2 - (4.0 / 3.0) * g2
    c = 8.0 * a2 * b2 + 4.0 * a2 * g2 + 2.0 * b2 * b2 + 6.0 * a2 * a2 + 2.0 * b2 * g2
    f = (-4.0 * a2 * b2 * g2 - 4.0 * a2 ** 3 - 8.0 * a2 * a2 * b2
         - 4.0 * a2 * a2 * g2 - 4.0 * a2 * b2 * b2)
    inner_value = (-a2 ** 4 - (8.0 / 3.0) * a2 ** 3 * b2 - (4.0 / 3.0) * a2 ** 3 * g2
                   - 2.0 * a2 * a2 * b2 * b2 - 2.0 * a2 * a2 * b2 * g2)
    inner_curv = 16.0 * a2 * b2 * b2 + 16.0 * a2 * b2 * g2
    outer_value = (-a2 ** 4 - 2.0 * a2 * a2 * b2 * g2 + (1.0 / 3.0) * b2 ** 4
                   - (2.0 / 3.0) * b2 * g2 ** 3 - (8.0 / 3.0) * a2 ** 3 * b2
                   - (4.0 / 3.0) * a2 ** 3 * g2 - 2.0 * a2 * a2 * b2 * b2
                   + (2.0 / 3.0) * b2 ** 3 * g2 - (1.0 / 3.0) * g2 ** 4)
    outer_curv = (16.0 * b2 * b2 * g2 + 16.0 * a2 * b2 * g2 + 32.0 * b2 * g2 * g2
                  + 16.0 * g2 ** 3 + 16.0 * a2 * g2 * g2)
    return QuadWellForms(a, c, f, inner_value, inner_curv, outer_value, outer_curv)


def _check_monotone_beyond(dv: Polynomial, window: float) -> None:
    """The derivative must keep one strict sign on a probe band outside the window."""
    band_lo = window * (1.0 + 1e-9)
    band_hi = 1.25 * window + 1.0
    samples = 64
    for side in (1.0, -1.0):
        sign = 0.0
        for i in range(samples):
            x = side * (band_lo + (band_hi - band_lo) * i / (samples - 1))
            v = dv(x)
            if v == 0.0 or (sign != 0.0 and (v < 0.0) != (sign < 0.0)):
                raise ValueError(
                    f"window={window:g} too small: derivative changes sign near "
                    f"x={x:.6g}; enlarge the window past the outermost stationary point")
            sign = v


def critical_points(p: Polynomial, window: float) -> list[CriticalPoint]:
    """All stationary points of p in [-window, window], classified and sorted.

    Points where |V''| falls below 1e-9 of its local term magnitude are
    flagged 'degenerate' rather than classified; cusp-like shapes produce
    them legitimately.  Requires V monotone beyond +-window (checked on a
    probe band).
    """
    if not (window > 0.0):
        raise ValueError("window must be positive")
    dv = p.derivative()
    if dv.is_zero:
        raise ValueError("constant potential has no stationary structure")
    _check_monotone_beyond(dv, window)
    ddv = dv.derivative()
    tol = 1e-11 * max(1.0, window)
    points = []
    for root in real_roots(dv, -window, window, tol=tol):
        curv = ddv(root.x)
        thr = 1e-9 * (1.0 + ddv.magnitude_at(root.x))
        if root.flagged or abs(curv) <= thr:
            kind = "degenerate"
        elif curv > 0.0:
            kind = "min"
        else:
            kind = "max"
        points.append(CriticalPoint(root.x, p(root.x), curv, kind))
    return points


def harmonic_wells(p: Polynomial, window: float) -> list[HarmonicWell]:
    """One HarmonicWell per non-degenerate minimum in [-window, window].

    Minimum locations are polished to machine precision (a few Newton
    steps on V'; the curvature is safely nonzero here), so v and g are
    good to full precision.  Raises DegenerateWellError when any
    stationary point has vanishing curvature: the harmonic model is
    refused there.
    """
    dv = p.derivative()
    ddv = dv.derivative()
    wells = []
    for cp in critical_points(p, window):
        if cp.kind == "degenerate":
            raise DegenerateWellError(
                f"degenerate stationary point at x={cp.x:.6g} "
                "(|V''| below tolerance); harmonic approximation refused")
        if cp.kind == "min":
            x = cp.x
            for _ in range(3):
                x -= dv(x) / ddv(x)
            wells.append(HarmonicWell(x=x, v=p(x), g=0.5 * ddv(x)))
    return wells


def tilted_well_minimum(f: float, g: float, x: float,
                        lam: float = 1.0) -> tuple[float, float]:
    """Minimum of t -> t * (f + g*(t - x)^2), scaled to a well at lam*x.

    For the harmonic well t -> lam^(2M+2)*f + lam^(2M)*g*(t - lam*x)^2 the
    cubic t*V(t) has its local minimum at x0 = lam*(1+delta)*x with a
    scale-independent relative shift

        delta = -f / (g*x^2 + x*sqrt(g^2*x^2 - 3*f*g)).

    Returns (x0, delta).  Raises ValueError when the discriminant is
    negative (no real extremum pair).
    """
    if not (g > 0.0):
        raise ValueError("g must be positive")
    if not (x > 0.0):
        raise ValueError("x must be positive")
    disc = g * g * x * x - 3.0 * f * g
    if disc < 0.0:
        raise ValueError("no real extremum pair: discriminant g^2 x^2 - 3 f g < 0")
    delta = -f / (g * x * x + x * math.sqrt(disc))
    return lam * (1.0 + delta) * x, delta


def perturbed_extrema_n2(alpha: float, beta: float, epsilon: float) -> PerturbedExtrema:
    """Stationary-point shifts of the triple well tilted by epsilon * x^3.

    Valid for |epsilon| <= 0.1 * alpha^3 (the shifts scale as eps/alpha^3;
    beyond the gate the perturbative path is refused and critical_points
    on the tilted polynomial should be used directly).
    """
    if not (alpha > 0.0 and beta > 0.0):
        raise ValueError("alpha and beta must be positive")
    if abs(epsilon) > 0.1 * alpha ** 3:
        raise PerturbationRangeError(
            f"|epsilon|={abs(epsilon):g} exceeds 0.1*alpha^3={0.1 * alpha ** 3:g}; "
            "use critical_points on the tilted potential instead")
    b2 = beta * beta
    lead = 1.0 / (4.0 * b2)
    correction = (b2 + 4.0 * alpha * alpha) / (32.0 * alpha * b2 ** 3)
    tilted = build_symmetric(WellShape.from_widths(alpha, beta)) \
        + Polynomial.monomial(3, epsilon)
    window = math.sqrt(alpha * alpha + b2) + 2.0
    roots = real_roots(tilted.derivative(), -window, window,
                       tol=1e-11 * max(1.0, window))
    if len(roots) != 5:
        raise ValueError(
            f"expected 5 stationary points, found {len(roots)}; "
            "extrema may have merged (epsilon too large for this shape)")
    return PerturbedExtrema(
        epsilon=epsilon, p2=lead, q2=lead, u2=lead, v2=lead,
        u2_correction=correction,
        stationary_points=tuple(r.x for r in roots))
