"""Real polynomial arithmetic with guaranteed real-root isolation.

Coefficients are stored ascending by power, so ``coeffs[k]`` multiplies
``x**k``.  Everything is plain float arithmetic on small degrees
(<= ~15); robustness comes from Sturm-count isolation plus bisection,
not from extended precision.
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple

__all__ = ["Polynomial", "Root", "RootIsolationError", "real_roots"]

# relative threshold below which a remainder coefficient is treated as an
# exact zero when building the Sturm chain
_CHAIN_EPS = 1e-13


class RootIsolationError(RuntimeError):
    """Raised when subdivision exceeds its depth budget without isolating."""


class Root(NamedTuple):
    x: float
    flagged: bool  # True when the root is (near-)multiple


def _normalize(coeffs: Iterable[float]) -> tuple[float, ...]:
    cs = [float(c) for c in coeffs]
    if not cs:
        raise ValueError("coefficient list must be non-empty")
    if any(not math.isfinite(c) for c in cs):
        raise ValueError("coefficients must be finite")
    while len(cs) > 1 and cs[-1] == 0.0:
        cs.pop()
    return tuple(cs)


class Polynomial:
    """Immutable real polynomial, coefficients ascending by power.

    Trailing zero coefficients are normalized away; the zero polynomial
    is represented as ``(0.0,)``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[float]):
        object.__setattr__(self, "coeffs", _normalize(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def from_descending(cls, coeffs: Iterable[float]) -> "Polynomial":
        """Build from highest-degree-first coefficients (down to the constant)."""
        return cls(list(coeffs)[::-1])

    @classmethod
    def monomial(cls, power: int, coeff: float = 1.0) -> "Polynomial":
        if power < 0:
            raise ValueError("power must be non-negative")
        return cls([0.0] * power + [float(coeff)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0.0,)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x):
        """Evaluate by Horner's scheme, highest degree first.

        Works elementwise when ``x`` is a numpy array.
        """
        if len(self.coeffs) == 1:
            return self.coeffs[0] + x * 0.0 if hasattr(x, "shape") else self.coeffs[0]
        result = self.coeffs[-1]
        for c in self.coeffs[-2::-1]:
            result = result * x + c
        return result

    evaluate = __call__

    def derivative(self) -> "Polynomial":
        if self.degree == 0:
            return Polynomial([0.0])
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def antiderivative(self) -> "Polynomial":
        """Antiderivative with the constant fixed so that the result is 0 at 0."""
        return Polynomial([0.0] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def even_odd_split(self) -> tuple["Polynomial", "Polynomial"]:
        """Split into (even part, odd part); the parts sum back to self exactly."""
        even = [c if k % 2 == 0 else 0.0 for k, c in enumerate(self.coeffs)]
        odd = [c if k % 2 == 1 else 0.0 for k, c in enumerate(self.coeffs)]
        return Polynomial(even), Polynomial(odd)

    def magnitude_at(self, x: float) -> float:
        """Sum of absolute term magnitudes at x; a cancellation scale."""
        ax = abs(x)
        total, power = 0.0, 1.0
        for c in self.coeffs:
            total += abs(c) * power
            power *= ax
        return total

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for k, c in enumerate(b):
            summed[k] += c
        return Polynomial(summed)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Polynomial([c * other for c in self.coeffs])
        out = [0.0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0.0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__


# ---------------------------------------------------------------------------
# Sturm-chain machinery (operates on raw ascending coefficient lists)

def _horner(cs: list[float], x: float) -> float:
    result = cs[-1]
    for c in cs[-2::-1]:
        result = result * x + c
    return result


def _unit_scale(cs: list[float]) -> list[float]:
    top = max(abs(c) for c in cs)
    if top == 0.0:
        return cs
    return [c / top for c in cs]


def _trim(cs: list[float]) -> list[float]:
    top = max(abs(c) for c in cs) if cs else 0.0
    tiny = _CHAIN_EPS * top
    out = list(cs)
    while len(out) > 1 and abs(out[-1]) <= tiny:
        out.pop()
    return out


def _polyrem(num: list[float], den: list[float]) -> list[float]:
    """Remainder of num / den; den's leading coefficient must be nonzero."""
    rem = list(num)
    dn = len(den) - 1
    lead = den[-1]
    for k in range(len(rem) - 1, dn - 1, -1):
        f = rem[k] / lead
        if f != 0.0:
            for j in range(dn):
                rem[k - dn + j] -= f * den[j]
        rem[k] = 0.0
    return _trim(rem)


def _sturm_chain(p: Polynomial) -> list[list[float]]:
    chain = [_unit_scale(list(p.coeffs))]
    dp = p.derivative()
    if dp.is_zero:
        return chain
    chain.append(_unit_scale(list(dp.coeffs)))
    while len(chain[-1]) > 1:
        rem = _polyrem(chain[-2], chain[-1])
        rem = [-c for c in rem]
        if max(abs(c) for c in rem) <= _CHAIN_EPS:
            break  # float gcd termination: last chain member divides its predecessor
        chain.append(_unit_scale(rem))
    return chain


def _sign_changes(chain: list[list[float]], x: float) -> int:
    changes = 0
    prev = 0.0
    for cs in chain:
        v = _horner(cs, x)
        if v == 0.0:
            continue
        if prev != 0.0 and (v < 0.0) != (prev < 0.0):
            changes += 1
        prev = v
    return changes


def _bisect_to(f, a: float, b: float, fa: float, tol: float) -> float:
    for _ in range(200):
        if b - a <= tol:
            break
        mid = 0.5 * (a + b)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm < 0.0) == (fa < 0.0):
            a, fa = mid, fm
        else:
            b = mid
    return 0.5 * (a + b)


def _is_ambiguous(dp: Polynomial, r: float, tol: float) -> bool:
    """Derivative sign ambiguous within tol of r -> near-multiple root."""
    left, right = dp(r - tol), dp(r + tol)
    if left == 0.0 or right == 0.0 or (left < 0.0) != (right < 0.0):
        return True
    return abs(dp(r)) <= 1e-9 * dp.magnitude_at(r)


def _even_multiplicity_root(p: Polynomial, dp: Polynomial,
                            a: float, b: float, tol: float) -> float:
    """Locate a root with no sign change (even multiplicity) via the extremum."""
    samples = 33
    xs = [a + (b - a) * i / (samples - 1) for i in range(samples)]
    ds = [dp(x) for x in xs]
    for i in range(samples - 1):
        if ds[i] == 0.0:
            x_ext = xs[i]
            break
        if (ds[i] < 0.0) != (ds[i + 1] < 0.0):
            x_ext = _bisect_to(dp, xs[i], xs[i + 1], ds[i], tol)
            break
    else:
        raise RootIsolationError(
            f"counted a root in [{a:.6g}, {b:.6g}] but found no sign change "
            "of the polynomial or its derivative")
    if abs(p(x_ext)) > 1e-8 * (1.0 + p.magnitude_at(x_ext)):
        raise RootIsolationError(
            f"extremum at x={x_ext:.6g} does not touch zero; "
            "isolation failed (suspected count error near a multiple root)")
    return x_ext


def real_roots(p: Polynomial, lo: float, hi: float,
               tol: float = 1e-10, max_depth: int = 64) -> list[Root]:
    """All real roots of p in [lo, hi], each accurate to tol.

    Isolation subdivides on Sturm-sequence root counts; refinement is plain
    bisection.  Near-multiple roots (derivative sign ambiguous within tol)
    come back flagged.  Raises RootIsolationError if subdivision exceeds
    max_depth without isolating.
    """
    if not (lo < hi):
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    if not (tol > 0.0):
        raise ValueError("tol must be positive")
    if p.is_zero:
        raise ValueError("zero polynomial: every point of the interval is a root")
    if p.degree == 0:
        return []

    chain = _sturm_chain(p)
    dp = p.derivative()
    a, b = lo - tol, hi + tol  # widen so endpoint roots land inside (a, b]
    work = [(a, b, _sign_changes(chain, a), _sign_changes(chain, b), 0)]
    leaves: list[tuple[float, float, int]] = []
    while work:
        xa, xb, va, vb, depth = work.pop()
        count = va - vb
        if count <= 0:
            continue
        if count == 1 or xb - xa <= tol:
            leaves.append((xa, xb, count))
            continue
        if depth >= max_depth:
            raise RootIsolationError(
                f"failed to isolate {count} roots in [{xa:.6g}, {xb:.6g}] "
                f"within {max_depth} subdivisions")
        mid = 0.5 * (xa + xb)
        vm = _sign_changes(chain, mid)
        work.append((xa, mid, va, vm, depth + 1))
        work.append((mid, xb, vm, vb, depth + 1))

    roots: list[Root] = []
    for xa, xb, count in leaves:
        if count > 1:  # unresolvable cluster narrower than tol
            roots.append(Root(0.5 * (xa + xb), True))
            continue
        fa, fb = p(xa), p(xb)
        if fa == 0.0:
            # the count covers (xa, xb]: a zero at xa belongs to the
            # neighboring leaf, so step inside before bracketing
            xa += min(tol, 1e-3 * (xb - xa))
            fa = p(xa)
        if fb == 0.0:
            r = xb
        elif fa != 0.0 and (fa < 0.0) != (fb < 0.0):
            r = _bisect_to(p, xa, xb, fa, tol)
        else:
            r = _even_multiplicity_root(p, dp, xa, xb, tol)
            roots.append(Root(r, True))
            continue
        roots.append(Root(r, _is_ambiguous(dp, r, tol)))

    roots.sort()
    merged: list[Root] = []
    for root in roots:
        if merged and abs(root.x - merged[-1].x) <= 2.0 * tol:
            merged[-1] = Root(merged[-1].x, True)
            continue
        merged.append(root)
    return merged
