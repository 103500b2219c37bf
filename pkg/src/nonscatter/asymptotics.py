"""Leading and second-order constants of the boundary integral, plus closed forms.

The auxiliary amplitude along the curve is
    f(t) = (k^2 q / 2) (x2' + i x1') v + W',   W = i V1 + V2,
with v = u(x(t)) and V = grad u(x(t)).  At a simple saddle of g = x1 + i x2,
    I(lam) = lam^(-3/2) e^(lam g(t0)) [C1 + C2/lam + O(lam^-2)],
    C1 = sqrt(2 pi) f(t0) / root,     root = (-g''(t0))^(1/2) on the contour branch,
    C2 = sqrt(pi/2) [f'' - f' g'''/g'' - i k^2 q g'' x2'(t0) W(t0)] / root^3.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import waves as _waves
from .curves import CornerDomain, TrigCurve, eval_jet, eval_jets
from .czmath import SpectralParams, bessel_g, bessel_j, bessel_jp, lambda_tilde
from .errors import DegenerateCircle, NoRealSolution
from .saddle import ContourPath, SaddlePoint, branch_angle, branch_sqrt_neg_g2

__all__ = [
    "FJet",
    "AsymReport",
    "CornerConstants",
    "f_jet",
    "c1",
    "c2",
    "asym_report",
    "report_to_dict",
    "mu_n",
    "corner_constants",
    "disk_plane_closed_form",
    "disk_herglotz_closed_form",
    "nonscattering_wavenumbers",
    "bessel_contour_identity",
]

N_RING = 64
R_CAUCHY = 0.1


@dataclass(frozen=True)
class FJet:
    """f(t0), f'(t0), f''(t0)."""

    f0: complex
    f1: complex
    f2: complex


@dataclass(frozen=True)
class CornerConstants:
    """Per-segment corner amplitudes and the combined jump constant C."""

    c1_seg: complex
    c2_seg: complex
    C: complex


@dataclass(frozen=True)
class AsymReport:
    C1: complex
    C2: complex | None
    order: float
    g0: complex
    verdict: str
    omega: float
    omega0: float

    def __post_init__(self):
        if self.verdict not in ("ScattersByC1", "ScattersByC2", "Inconclusive"):
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict == "ScattersByC1" and self.C2 is not None:
            raise ValueError("second-order constant must be absent when C1 decides")
        if self.order not in (1.5, 2.5):
            raise ValueError("order must be 3/2 or 5/2")


def _ring_coeffs(vals: np.ndarray, r: float, orders: int) -> np.ndarray:
    """Taylor coefficients c_0..c_{orders-1} from equispaced ring samples."""
    n = len(vals)
    co = np.fft.fft(vals) / n
    return np.array([co[m] / r**m for m in range(orders)])


def f_jet(curve: TrigCurve, wave, q: float, s: SaddlePoint, r_cauchy: float = R_CAUCHY) -> FJet:
    """Jet of f at the saddle by Cauchy-integral differentiation on a 64-node ring."""
    if not s.simple:
        raise ValueError("f_jet needs a simple saddle")
    k = wave.k
    theta = 2.0 * math.pi * np.arange(N_RING) / N_RING
    ts = s.t0 + r_cauchy * np.exp(1j * theta)
    jets = eval_jets(curve, ts, order=1)
    x1, x2 = jets[0]
    x1p, x2p = jets[1]
    fv = np.empty(N_RING, dtype=complex)
    wv = np.empty(N_RING, dtype=complex)
    for idx in range(N_RING):
        sample = _waves.sample(wave, (x1[idx], x2[idx]))
        fv[idx] = 0.5 * k * k * q * (x2p[idx] + 1j * x1p[idx]) * sample.v
        wv[idx] = 1j * sample.V[0] + sample.V[1]
    cf = _ring_coeffs(fv, r_cauchy, 3)
    cw = _ring_coeffs(wv, r_cauchy, 4)
    return FJet(
        f0=complex(cf[0] + cw[1]),
        f1=complex(cf[1] + 2.0 * cw[2]),
        f2=complex(2.0 * cf[2] + 6.0 * cw[3]),
    )


def _saddle_samples(curve: TrigCurve, wave, s: SaddlePoint):
    jet = eval_jet(curve, s.t0, order=1)
    x = jet.x
    x2p = jet.xp[1]
    sample = _waves.sample(wave, x)
    return x, x2p, sample


def tol_scale(wave, q: float, u0: complex) -> float:
    """Natural size of the constants: k^2 |q-1| max(1, |u(x(t0))|)."""
    return wave.k**2 * abs(q - 1.0) * max(1.0, abs(u0))


def c1(curve: TrigCurve, wave, q: float, s: SaddlePoint, path: ContourPath) -> complex:
    """Leading constant, branch fixed by the direction the contour crosses t0."""
    root = branch_sqrt_neg_g2(s, path.arrival_angle())
    x, x2p, sample = _saddle_samples(curve, wave, s)
    k = wave.k
    val = k * k * (q - 1.0) * sample.v * x2p * math.sqrt(2.0 * math.pi) / root
    jet = f_jet(curve, wave, q, s)
    alt = math.sqrt(2.0 * math.pi) * jet.f0 / root
    scale = max(tol_scale(wave, q, sample.v), abs(val))
    if abs(val - alt) > 1e-9 * scale:
        warnings.warn(
            f"C1 cross-check drift {abs(val - alt):.3g} (closed {val:.6g}, ring {alt:.6g})",
            RuntimeWarning,
        )
    return val


def c2(curve: TrigCurve, wave, q: float, s: SaddlePoint, path: ContourPath) -> complex:
    """Second-order constant on the same branch (root cubed)."""
    root = branch_sqrt_neg_g2(s, path.arrival_angle())
    x, x2p, sample = _saddle_samples(curve, wave, s)
    k = wave.k
    tol = 1e-8 * tol_scale(wave, q, sample.v)
    val_c1 = k * k * (q - 1.0) * sample.v * x2p * math.sqrt(2.0 * math.pi) / abs(root)
    if abs(val_c1) > tol:
        warnings.warn("second-order constant requested while |C1| is not small", RuntimeWarning)
    jet = f_jet(curve, wave, q, s)
    w0 = 1j * sample.V[0] + sample.V[1]
    bracket = jet.f2 - jet.f1 * s.g3 / s.g2 - 1j * k * k * q * s.g2 * x2p * w0
    return math.sqrt(0.5 * math.pi) * bracket / root**3


def asym_report(curve: TrigCurve, wave, q: float, s: SaddlePoint, path: ContourPath) -> AsymReport:
    """Scattering verdict from C1, then C2.  Inconclusive never claims nonscattering."""
    omega = path.arrival_angle()
    omega0 = branch_angle(s, omega)
    _, _, sample = _saddle_samples(curve, wave, s)
    tol = 1e-8 * tol_scale(wave, q, sample.v)
    C1 = c1(curve, wave, q, s, path)
    if abs(C1) > tol:
        return AsymReport(
            C1=C1, C2=None, order=1.5, g0=s.g0, verdict="ScattersByC1", omega=omega, omega0=omega0
        )
    C2 = c2(curve, wave, q, s, path)
    verdict = "ScattersByC2" if abs(C2) > tol else "Inconclusive"
    return AsymReport(
        C1=C1, C2=C2, order=2.5, g0=s.g0, verdict=verdict, omega=omega, omega0=omega0
    )


def _pair(z: complex) -> list:
    z = complex(z)
    return [z.real, z.imag]


def report_to_dict(rep: AsymReport) -> dict:
    return {
        "C1": _pair(rep.C1),
        "C2": None if rep.C2 is None else _pair(rep.C2),
        "order": rep.order,
        "g0": _pair(rep.g0),
        "verdict": rep.verdict,
        "branch": {"omega": rep.omega, "omega0": rep.omega0},
    }


def mu_n(n: int) -> float:
    """Axis-ratio-squared at which the second-order ellipse bracket vanishes."""
    n = int(n)
    if n < 5:
        raise NoRealSolution(f"no real axis ratio exists for n = {n}")
    if n == 5:
        raise DegenerateCircle("n = 5 forces the unit ratio, a circle")
    return (n - 2.0 + math.sqrt((n - 5.0) * (n + 1.0))) / 3.0


def _line_coeffs(wave, axis: int, r: float, orders: int, grad_component: int | None = None) -> np.ndarray:
    theta = 2.0 * math.pi * np.arange(N_RING) / N_RING
    zs = r * np.exp(1j * theta)
    vals = np.empty(N_RING, dtype=complex)
    for idx, z in enumerate(zs):
        x = (z, 0.0) if axis == 0 else (0.0, z)
        if grad_component is None:
            vals[idx] = _waves.value(wave, x)
        else:
            vals[idx] = _waves.gradient(wave, x)[grad_component]
    return _ring_coeffs(vals, r, orders)


def corner_constants(c: CornerDomain, wave, k: float, q: float) -> CornerConstants:
    """Per-leg amplitudes at a corner opening 2*theta plus the verdict constant C.

    Second partials of u at the origin come from Cauchy differentiation along
    the two coordinate lines and of the x2-derivative along the x1 line.
    """
    if abs(wave.k - k) > 1e-12 * max(1.0, k):
        raise ValueError("wavenumber argument disagrees with the wave model")
    m = math.tan(c.theta)
    u0 = _waves.value(wave, (0.0, 0.0))
    a_line = _line_coeffs(wave, 0, R_CAUCHY, 3)
    b_line = _line_coeffs(wave, 1, R_CAUCHY, 3)
    d_line = _line_coeffs(wave, 0, R_CAUCHY, 2, grad_component=1)
    u11 = 2.0 * a_line[2]
    u22 = 2.0 * b_line[2]
    u12 = d_line[1]
    hel = u11 + u22 + k * k * u0
    if abs(hel) > 1e-9 * k * k * max(1.0, abs(u0)):
        warnings.warn(f"Helmholtz residual {abs(hel):.3g} at the corner", RuntimeWarning)

    amp = 0.5 * k * k * q * u0
    c1_seg = (amp * (1j - m) + 1j * u11 + (1.0 - 1j * m) * u12 - m * u22) / (1.0 - 1j * m)
    c2_seg = (amp * (1j + m) + 1j * u11 + (1.0 + 1j * m) * u12 + m * u22) / (1.0 + 1j * m)
    C = 2.0 * k * k * m / (1.0 + m * m) * (q - 1.0) * u0

    ident = (2.0 * m / (1.0 + m * m)) * (k * k * q * u0 + u11 + u22)
    if abs((c2_seg - c1_seg) - ident) > 1e-9 * max(abs(ident), k * k * max(1.0, abs(u0))):
        warnings.warn("corner segment identity drift", RuntimeWarning)
    return CornerConstants(c1_seg=complex(c1_seg), c2_seg=complex(c2_seg), C=complex(C))


def disk_plane_closed_form(lam: float, alpha: float, k: float, q: float) -> complex:
    """Exact unit-disk integral for a plane wave, branch-free via G1."""
    lt = lambda_tilde(SpectralParams(k=k, q=q, lam=lam))
    cval = (
        -0.5j * k * cmath.exp(1j * alpha) * lam
        + 0.5 * lam * lt
        + 0.25 * k * k
        + 0.5 * lt * k * math.sin(alpha)
        + 0.25 * lt * lt
    )
    return math.pi * bessel_g(1, cval)


def disk_herglotz_closed_form(lam: float, n: int, k: float, q: float) -> complex:
    """Exact unit-disk integral for a single circular-harmonic incident wave."""
    lt = lambda_tilde(SpectralParams(k=k, q=q, lam=lam))
    rq = math.sqrt(q)
    wron = bessel_jp(n, k) * bessel_j(n, k * rq) - rq * bessel_j(n, k) * bessel_jp(n, k * rq)
    return 4.0 * math.pi**2 * wron * k * (-1j * lt / (k * rq)) ** n


def _wronskian(n: int, q: float, k: float) -> float:
    rq = math.sqrt(q)
    val = bessel_jp(n, k) * bessel_j(n, k * rq) - rq * bessel_j(n, k) * bessel_jp(n, k * rq)
    return complex(val).real


def nonscattering_wavenumbers(n: int, q: float, k_max: float) -> list[float]:
    """Roots of the radial Wronskian below k_max: 0.01-step sign scan, then bisection."""
    if n < 0:
        raise ValueError("harmonic order must be nonnegative")
    if q == 1.0:
        raise ValueError("contrast q must differ from 1")
    if k_max > 100.0:
        raise ValueError("scan cap is k_max <= 100")
    step = 0.01
    roots: list[float] = []
    k_prev = step
    f_prev = _wronskian(n, q, k_prev)
    k_cur = k_prev
    while k_cur < k_max:
        k_cur = min(k_cur + step, k_max)
        f_cur = _wronskian(n, q, k_cur)
        if f_prev == 0.0:
            roots.append(k_prev)
        elif f_prev * f_cur < 0.0:
            lo, hi, flo = k_prev, k_cur, f_prev
            while hi - lo > 1e-10:
                mid = 0.5 * (lo + hi)
                fm = _wronskian(n, q, mid)
                if fm == 0.0:
                    lo = hi = mid
                    break
                if flo * fm < 0.0:
                    hi = mid
                else:
                    lo, flo = mid, fm
            roots.append(0.5 * (lo + hi))
        k_prev, f_prev = k_cur, f_cur
    return roots


def bessel_contour_identity(n: int, a: complex, b: complex) -> tuple[complex, complex]:
    """Unit-circle trapezoid value of (1/2 pi i) contour integral of z^(n-1) e^(az - b/z)
    against its closed form; returns (lhs, rhs)."""
    a = complex(a)
    b = complex(b)
    if abs(a) > 20.0 or abs(b) > 20.0:
        raise ValueError("|a| and |b| must not exceed 20")
    nodes = 512
    theta = 2.0 * math.pi * np.arange(nodes) / nodes
    z = np.exp(1j * theta)
    lhs = complex(np.mean(z**n * np.exp(a * z - b / z)))
    if n >= 0:
        rhs = (-b) ** n * bessel_g(n, a * b)
    else:
        rhs = a ** (-n) * bessel_g(-n, a * b)
    return lhs, complex(rhs)
