"""Trigonometric-polynomial boundary curves, complex jets, and corner wedges.

Curves are real trig polynomials x_j(t) = a_j0 + sum_m (a_jm cos mt + b_jm sin mt),
degree <= 16, so the phase g(t) = x1(t) + i x2(t) is entire and all derivatives
are exact termwise expressions valid at complex t.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InvalidShapeParams

__all__ = [
    "TrigCurve",
    "CurveJet",
    "CornerDomain",
    "CornerSegment",
    "eval_jet",
    "eval_jets",
    "g_jet",
    "builtin",
    "corner_segments",
]

MAX_DEGREE = 16


def _coeffs(seq) -> tuple[float, ...]:
    return tuple(float(c) for c in seq)


@dataclass(frozen=True)
class TrigCurve:
    """Closed curve from Fourier coefficients; construction runs advisory checks."""

    a1: tuple[float, ...]
    b1: tuple[float, ...]
    a2: tuple[float, ...]
    b2: tuple[float, ...]
    check: bool = True

    def __post_init__(self):
        rows = [_coeffs(self.a1), _coeffs(self.b1), _coeffs(self.a2), _coeffs(self.b2)]
        deg = max(len(r) for r in rows) - 1
        if deg > MAX_DEGREE:
            raise InvalidShapeParams(f"trig degree {deg} exceeds {MAX_DEGREE}")
        n = max(deg + 1, 1)
        padded = [r + (0.0,) * (n - len(r)) for r in rows]
        # sin(0 t) carries no information
        padded[1] = (0.0,) + padded[1][1:]
        padded[3] = (0.0,) + padded[3][1:]
        for name, row in zip(("a1", "b1", "a2", "b2"), padded):
            object.__setattr__(self, name, row)
        if self.check:
            self._advisory_checks()

    @property
    def degree(self) -> int:
        return len(self.a1) - 1

    def _advisory_checks(self):
        ts = np.linspace(-math.pi, math.pi, 2048, endpoint=False)
        jets = eval_jets(self, ts, order=1)
        x1, x2 = jets[0][0].real, jets[0][1].real
        x1p, x2p = jets[1][0].real, jets[1][1].real
        area = 0.5 * np.mean(x1 * x2p - x2 * x1p) * 2.0 * math.pi
        if area <= 0:
            warnings.warn("curve orientation is not counterclockwise (signed area <= 0)", stacklevel=3)
        if _chords_cross(x1, x2):
            warnings.warn("curve appears to self-intersect on a 2048-point chord sample", stacklevel=3)


def _chords_cross(x, y) -> bool:
    # proper-crossing test among the 2048 closing chords, blocked to bound memory
    n = len(x)
    px, py = x, y
    qx, qy = np.roll(x, -1), np.roll(y, -1)
    rx, ry = qx - px, qy - py
    idx = np.arange(n)
    for i0 in range(0, n, 128):
        i1 = min(i0 + 128, n)
        bi = slice(i0, i1)
        # d1, d2: endpoints of segment j against the line of segment i
        d1 = rx[bi][:, None] * (py[None, :] - py[bi][:, None]) - ry[bi][:, None] * (px[None, :] - px[bi][:, None])
        d2 = rx[bi][:, None] * (qy[None, :] - py[bi][:, None]) - ry[bi][:, None] * (qx[None, :] - px[bi][:, None])
        # d3, d4: endpoints of segment i against the line of segment j
        d3 = rx[None, :] * (py[bi][:, None] - py[None, :]) - ry[None, :] * (px[bi][:, None] - px[None, :])
        d4 = rx[None, :] * (qy[bi][:, None] - py[None, :]) - ry[None, :] * (qx[bi][:, None] - px[None, :])
        cross = (d1 * d2 < 0) & (d3 * d4 < 0)
        # adjacent chords share an endpoint; strict inequalities already drop them,
        # but guard the i == j diagonal explicitly
        jj = idx[None, :]
        ii = idx[bi][:, None]
        cross &= ii != jj
        if cross.any():
            return True
    return False


@dataclass(frozen=True)
class CurveJet:
    """Position and derivatives up to 4th order at one complex t, plus the phase jet."""

    t: complex
    x: tuple[complex, complex]
    xp: Optional[tuple[complex, complex]]
    xpp: Optional[tuple[complex, complex]]
    x3: Optional[tuple[complex, complex]]
    x4: Optional[tuple[complex, complex]]
    g: complex
    gp: Optional[complex]
    gpp: Optional[complex]
    g3: Optional[complex]


@dataclass(frozen=True)
class CornerDomain:
    """Wedge with vertex at the origin, opening leftward, bisected by the x1 axis."""

    theta: float
    a1: float
    a2: float

    def __post_init__(self):
        if not (0.0 < self.theta < 0.5 * math.pi):
            raise InvalidShapeParams(f"theta must lie in (0, pi/2), got {self.theta}")
        if not (self.a1 < 0 and self.a2 < 0):
            raise InvalidShapeParams("segment endpoints a1, a2 must be negative")


@dataclass(frozen=True)
class CornerSegment:
    """One straight edge x(t) = (t, slope*t), t running from a (<0) to 0.

    orient is the sign the parametrized integral carries in the counterclockwise
    boundary integral (the upper edge is traversed against its parametrization).
    """

    a: float
    slope: float
    orient: int


def corner_segments(c: CornerDomain) -> tuple[CornerSegment, CornerSegment]:
    m = math.tan(c.theta)
    upper = CornerSegment(a=c.a1, slope=-m, orient=-1)
    lower = CornerSegment(a=c.a2, slope=+m, orient=+1)
    return upper, lower


def eval_jets(curve: TrigCurve, ts, order: int = 3):
    """Vectorized jets: list over derivative order d of (x1^(d), x2^(d)) arrays."""
    if not 0 <= order <= 4:
        raise ValueError(f"order must be in 0..4, got {order}")
    ts = np.asarray(ts, dtype=complex)
    # fold Re t into [-pi, pi] so jets at t and t + 2 pi k collide to ulps
    re = ts.real
    ts = ts - 2.0 * math.pi * np.round(re / (2.0 * math.pi))
    m = np.arange(len(curve.a1), dtype=float)
    a1 = np.asarray(curve.a1)
    b1 = np.asarray(curve.b1)
    a2 = np.asarray(curve.a2)
    b2 = np.asarray(curve.b2)
    mt = np.multiply.outer(ts, m)
    out = []
    for d in range(order + 1):
        ph = d * 0.5 * math.pi
        fac = m**d
        c = np.cos(mt + ph) * fac
        s = np.sin(mt + ph) * fac
        x1d = c @ a1 + s @ b1
        x2d = c @ a2 + s @ b2
        out.append((x1d, x2d))
    return out


def eval_jet(curve: TrigCurve, t, order: int = 4) -> CurveJet:
    """Exact termwise jet of the curve (and of g) at one complex t."""
    arrs = eval_jets(curve, [complex(t)], order)
    pairs = [(complex(p[0][0]), complex(p[1][0])) for p in arrs]
    pairs += [None] * (5 - len(pairs))
    gs = [p[0] + 1j * p[1] if p is not None else None for p in pairs[:4]]
    return CurveJet(
        t=complex(t),
        x=pairs[0],
        xp=pairs[1],
        xpp=pairs[2],
        x3=pairs[3],
        x4=pairs[4],
        g=gs[0],
        gp=gs[1],
        gpp=gs[2],
        g3=gs[3],
    )


def g_jet(curve: TrigCurve, t, order: int = 3) -> tuple[complex, ...]:
    """(g, g', ..., g^(order)) at complex t."""
    arrs = eval_jets(curve, [complex(t)], min(order, 4))
    return tuple(complex(p[0][0] + 1j * p[1][0]) for p in arrs[: order + 1])


def builtin(name: str, *params: float) -> TrigCurve:
    """Named curves with exact Fourier coefficients (all degree <= 3)."""
    if name == "ellipse":
        if len(params) != 2:
            raise InvalidShapeParams("ellipse needs (a, b)")
        a, b = float(params[0]), float(params[1])
        if not a > b > 0:
            raise InvalidShapeParams(f"ellipse needs a > b > 0, got a={a}, b={b}")
        return TrigCurve(a1=(0.0, a), b1=(0.0,), a2=(0.0,), b2=(0.0, b))
    if name == "circle":
        if len(params) != 1:
            raise InvalidShapeParams("circle needs (r,)")
        r = float(params[0])
        if not r > 0:
            raise InvalidShapeParams(f"circle needs r > 0, got {r}")
        return TrigCurve(a1=(0.0, r), b1=(0.0,), a2=(0.0,), b2=(0.0, r))
    if params:
        raise InvalidShapeParams(f"curve {name!r} takes no shape parameters")
    if name == "cardioid":
        # (1 - cos t)(cos t, sin t)
        return TrigCurve(a1=(-0.5, 1.0, -0.5), b1=(0.0,), a2=(0.0,), b2=(0.0, 1.0, -0.5))
    if name == "deltoid":
        # (2 cos t + cos 2t, 2 sin t - sin 2t)
        return TrigCurve(a1=(0.0, 2.0, 1.0), b1=(0.0,), a2=(0.0,), b2=(0.0, 2.0, -1.0))
    if name == "nonconvex":
        # (2 + cos 2t)(cos t, sin t), expanded by product-to-sum
        return TrigCurve(a1=(0.0, 2.5, 0.0, 0.5), b1=(0.0,), a2=(0.0,), b2=(0.0, 1.5, 0.0, 0.5))
    raise InvalidShapeParams(f"unknown builtin curve {name!r}")
