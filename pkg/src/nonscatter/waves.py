"""Incident Helmholtz waves evaluable with gradients at complex points of C^2.

Every variant is entire on C^2 (plane exponentials, or circular harmonics in
the branch-free factorization (x1 +/- i x2)^|n| G_|n|(k^2(x1^2+x2^2)/4)), so
values stay correct at complex curve points, including cusps at the origin.
Non-entire incident fields (point sources, Hankel fields) are unsupported.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

from .czmath import bessel_g

__all__ = [
    "PlaneWave",
    "PlaneCombo",
    "CircularHarmonic",
    "HerglotzTrunc",
    "WaveModel",
    "WaveSample",
    "value",
    "gradient",
    "sample",
]

MAX_HERGLOTZ_ORDER = 64

_I_POW = (1 + 0j, 1j, -1 + 0j, -1j)  # i^n exactly


@dataclass(frozen=True)
class PlaneWave:
    """exp(i k (x1 cos alpha + x2 sin alpha))."""

    k: float
    alpha: float

    def __post_init__(self):
        if not self.k > 0:
            raise ValueError(f"k must be positive, got {self.k}")


@dataclass(frozen=True)
class PlaneCombo:
    """Finite combination sum_j c_j exp(i k x . eta(alpha_j))."""

    k: float
    terms: tuple[tuple[complex, float], ...]

    def __post_init__(self):
        if not self.k > 0:
            raise ValueError(f"k must be positive, got {self.k}")
        object.__setattr__(
            self, "terms", tuple((complex(c), float(a)) for c, a in self.terms)
        )


@dataclass(frozen=True)
class CircularHarmonic:
    """h_n: the Herglotz wave with density e^{i n alpha}; equals 2 pi i^n e^{i n theta} J_n(k r)."""

    k: float
    n: int

    def __post_init__(self):
        if not self.k > 0:
            raise ValueError(f"k must be positive, got {self.k}")


@dataclass(frozen=True)
class HerglotzTrunc:
    """Truncated Herglotz wave sum_n psi_n h_n, |n| <= 64."""

    k: float
    psi: tuple[tuple[int, complex], ...]

    def __post_init__(self):
        if not self.k > 0:
            raise ValueError(f"k must be positive, got {self.k}")
        terms = tuple(sorted((int(n), complex(c)) for n, c in self.psi))
        if terms and max(abs(n) for n, _ in terms) > MAX_HERGLOTZ_ORDER:
            raise ValueError(f"harmonic order beyond |n| <= {MAX_HERGLOTZ_ORDER}")
        object.__setattr__(self, "psi", terms)


WaveModel = Union[PlaneWave, PlaneCombo, CircularHarmonic, HerglotzTrunc]


@dataclass(frozen=True)
class WaveSample:
    """Value v = u(x) and gradient V = grad u(x) at one (complex) point."""

    v: complex
    V: tuple[complex, complex]


def _plane_value(k: float, alpha: float, x) -> complex:
    x1, x2 = x
    return cmath.exp(1j * k * (x1 * math.cos(alpha) + x2 * math.sin(alpha)))


def _harm_parts(k: float, n: int, x):
    x1, x2 = complex(x[0]), complex(x[1])
    m = abs(n)
    w = 0.25 * k * k * (x1 * x1 + x2 * x2)
    s = x1 + 1j * x2 if n >= 0 else x1 - 1j * x2
    pref = 2.0 * math.pi * _I_POW[m % 4] * (0.5 * k) ** m
    return x1, x2, m, w, s, pref


def _harm_value(k: float, n: int, x) -> complex:
    x1, x2, m, w, s, pref = _harm_parts(k, n, x)
    return pref * s**m * bessel_g(m, w)


def _harm_gradient(k: float, n: int, x) -> tuple[complex, complex]:
    x1, x2, m, w, s, pref = _harm_parts(k, n, x)
    gm = bessel_g(m, w)
    gm1 = bessel_g(m + 1, w)
    # d/dx G_m(w) = -G_{m+1}(w) * k^2 x_j / 2
    radial = s**m * (0.5 * k * k) * gm1
    lead = m * s ** (m - 1) * gm if m > 0 else 0.0
    sgn = 1j if n >= 0 else -1j
    v1 = pref * (lead - radial * x1)
    v2 = pref * (sgn * lead - radial * x2)
    return (v1, v2)


def value(w: WaveModel, x) -> complex:
    """u(x) at a (possibly complex) point x = (x1, x2)."""
    if isinstance(w, PlaneWave):
        return _plane_value(w.k, w.alpha, x)
    if isinstance(w, PlaneCombo):
        return sum((c * _plane_value(w.k, a, x) for c, a in w.terms), 0j)
    if isinstance(w, CircularHarmonic):
        return _harm_value(w.k, w.n, x)
    if isinstance(w, HerglotzTrunc):
        return sum((c * _harm_value(w.k, n, x) for n, c in w.psi), 0j)
    raise TypeError(f"not a wave model: {w!r}")


def gradient(w: WaveModel, x) -> tuple[complex, complex]:
    """grad u(x), componentwise entire in (x1, x2)."""
    if isinstance(w, PlaneWave):
        v = _plane_value(w.k, w.alpha, x)
        return (1j * w.k * math.cos(w.alpha) * v, 1j * w.k * math.sin(w.alpha) * v)
    if isinstance(w, PlaneCombo):
        g1 = 0j
        g2 = 0j
        for c, a in w.terms:
            v = _plane_value(w.k, a, x)
            g1 += c * 1j * w.k * math.cos(a) * v
            g2 += c * 1j * w.k * math.sin(a) * v
        return (g1, g2)
    if isinstance(w, CircularHarmonic):
        return _harm_gradient(w.k, w.n, x)
    if isinstance(w, HerglotzTrunc):
        g1 = 0j
        g2 = 0j
        for n, c in w.psi:
            h1, h2 = _harm_gradient(w.k, n, x)
            g1 += c * h1
            g2 += c * h2
        return (g1, g2)
    raise TypeError(f"not a wave model: {w!r}")


def sample(w: WaveModel, x) -> WaveSample:
    return WaveSample(v=value(w, x), V=gradient(w, x))
