"""Saddle points of the phase, descent-region maps, and admissible contours.

A contour from -pi to pi through a simple saddle t0 is admissible when
Re g(t) < Re g(t0) everywhere on it except at t0 itself.  build_contour
searches the sampled strict-descent region for such a path and records the
departure slope omega used by the square-root branch rule.
"""

from __future__ import annotations

import cmath
import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .curves import TrigCurve, eval_jets, g_jet
from .errors import (
    BranchUnresolvable,
    EndpointAboveLevel,
    MarginViolated,
    NoAdmissiblePath,
)

__all__ = [
    "SaddlePoint",
    "LevelSetGrid",
    "ContourPath",
    "ValidationReport",
    "find_saddles",
    "level_region",
    "build_contour",
    "validate_contour",
    "branch_angle",
    "branch_sqrt_neg_g2",
    "grid_to_csv",
    "grid_to_svg",
]

SIMPLE_REL = 1e-8
RESIDUAL_REL = 1e-10


@dataclass(frozen=True)
class SaddlePoint:
    """Zero t0 of g' with cached g(t0), g''(t0), g'''(t0)."""

    t0: complex
    g0: complex
    g2: complex
    g3: complex
    simple: bool


@dataclass
class LevelSetGrid:
    """Sampled field Re g - Re g(t0) on [-pi,pi] x [s_min,s_max] with zero-level polylines."""

    r: np.ndarray
    s: np.ndarray
    values: np.ndarray
    polylines: list
    t0: complex

    def value_at(self, t) -> float:
        t = complex(t)
        r, s = self.r, self.s
        j = np.clip(np.searchsorted(r, t.real) - 1, 0, len(r) - 2)
        i = np.clip(np.searchsorted(s, t.imag) - 1, 0, len(s) - 2)
        fr = (t.real - r[j]) / (r[j + 1] - r[j])
        fs = (t.imag - s[i]) / (s[i + 1] - s[i])
        v = self.values
        return float(
            v[i, j] * (1 - fr) * (1 - fs)
            + v[i, j + 1] * fr * (1 - fs)
            + v[i + 1, j] * (1 - fr) * fs
            + v[i + 1, j + 1] * fr * fs
        )


@dataclass(frozen=True)
class ContourPath:
    """Polyline -pi -> pi through the saddle; omega is the slope leaving toward pi."""

    waypoints: tuple[complex, ...]
    omega: float
    margin: float
    i_saddle: int

    def __post_init__(self):
        w = tuple(complex(z) for z in self.waypoints)
        object.__setattr__(self, "waypoints", w)
        if len(w) < 3:
            raise ValueError("need at least (-pi, t0, pi)")
        if abs(w[0] - (-math.pi)) > 1e-12 or abs(w[-1] - math.pi) > 1e-12:
            raise ValueError("waypoints must run from -pi to pi")
        if not 0 < self.i_saddle < len(w) - 1:
            raise ValueError("saddle waypoint must be interior")
        if not self.margin > 0:
            raise ValueError("margin must be positive")

    @property
    def t0(self) -> complex:
        return self.waypoints[self.i_saddle]

    def arrival_angle(self) -> float:
        """Direction of motion into the saddle from the preceding waypoint."""
        return cmath.phase(self.t0 - self.waypoints[self.i_saddle - 1])

    def departure_angle(self) -> float:
        return self.omega


@dataclass(frozen=True)
class ValidationReport:
    max_excess: float
    worst_t: complex
    delta: float
    rho: float
    n_samples: int


def _gp_scale(curve: TrigCurve) -> float:
    m = np.arange(len(curve.a1), dtype=float)
    tot = m * (np.abs(curve.a1) + np.abs(curve.b1) + np.abs(curve.a2) + np.abs(curve.b2))
    return float(max(tot.sum(), 1e-300))


def _gpp_scale(curve: TrigCurve) -> float:
    m = np.arange(len(curve.a1), dtype=float)
    tot = m * m * (np.abs(curve.a1) + np.abs(curve.b1) + np.abs(curve.a2) + np.abs(curve.b2))
    return float(max(tot.sum(), 1e-300))


def find_saddles(curve: TrigCurve, rect=None, tol: float = 1e-12, grid_n: int = 40) -> list[SaddlePoint]:
    """Newton on g' = 0 from a grid_n x grid_n seed grid, deduplicated mod 2 pi.

    Saddles on the seam Re t = +/- pi are excluded: the asymptotics needs an
    interior crossing point, and the seam pair duplicates an interior orbit.
    """
    if rect is None:
        rect = ((-math.pi, math.pi), (-1.5, 1.5))
    (r_lo, r_hi), (s_lo, s_hi) = rect
    if max(abs(s_lo), abs(s_hi)) > 3.0:
        raise ValueError("search rectangle must stay within |Im t| <= 3")
    scale_p = _gp_scale(curve)
    scale_pp = _gpp_scale(curve)

    rs = np.linspace(r_lo, r_hi, grid_n, endpoint=False) + (r_hi - r_lo) / (2 * grid_n)
    ss = np.linspace(s_lo, s_hi, grid_n, endpoint=False) + (s_hi - s_lo) / (2 * grid_n)
    ts = (rs[None, :] + 1j * ss[:, None]).ravel()
    alive = np.ones(ts.shape, dtype=bool)
    for _ in range(60):
        jets = eval_jets(curve, ts, order=2)
        gp = jets[1][0] + 1j * jets[1][1]
        gpp = jets[2][0] + 1j * jets[2][1]
        gpp = np.where(np.abs(gpp) < 1e-30, 1e-30, gpp)
        step = gp / gpp
        big = np.abs(step) > 0.5
        step[big] *= 0.5 / np.abs(step[big])
        ts = np.where(alive, ts - step, ts)
        alive &= np.abs(ts.imag) <= 3.0
    jets = eval_jets(curve, ts, order=2)
    gp = jets[1][0] + 1j * jets[1][1]
    ok = alive & (np.abs(gp) <= RESIDUAL_REL * scale_p) & np.isfinite(ts)

    found: list[complex] = []
    for t in ts[ok]:
        r = math.remainder(t.real, 2.0 * math.pi)
        if abs(abs(r) - math.pi) <= 1e-8:
            continue
        cand = complex(r, t.imag)
        if any(abs(cand - f) <= 1e-8 for f in found):
            continue
        # polish with a few scalar Newton steps
        z = cand
        for _ in range(4):
            g = g_jet(curve, z, order=2)
            if abs(g[2]) < 1e-30:
                break
            z = z - g[1] / g[2]
        if abs(z - cand) > 1e-6:
            continue
        if any(abs(z - f) <= 1e-8 for f in found):
            continue
        found.append(z)

    saddles = []
    for z in found:
        g0, g1, g2, g3 = g_jet(curve, z, order=3)
        if abs(g1) > RESIDUAL_REL * scale_p:
            continue
        saddles.append(
            SaddlePoint(t0=z, g0=g0, g2=g2, g3=g3, simple=abs(g2) > SIMPLE_REL * scale_pp)
        )
    saddles.sort(key=lambda sp: (-sp.g0.real, sp.t0.real, sp.t0.imag))
    return saddles


# marching-squares segments per corner-sign case; bits: 1=bl, 2=br, 4=tr, 8=tl
_MS_CASES = {
    1: (("left", "bottom"),),
    2: (("bottom", "right"),),
    3: (("left", "right"),),
    4: (("right", "top"),),
    6: (("bottom", "top"),),
    7: (("left", "top"),),
    8: (("top", "left"),),
    9: (("top", "bottom"),),
    11: (("top", "right"),),
    12: (("right", "left"),),
    13: (("right", "bottom"),),
    14: (("bottom", "left"),),
}


def _march(values: np.ndarray, r: np.ndarray, s: np.ndarray) -> list:
    ns, nr = values.shape
    pos = values > 0.0
    v = values
    # only cells whose corners mix signs can carry segments
    mix = (
        pos[:-1, :-1].astype(int) + pos[:-1, 1:] + pos[1:, 1:] + pos[1:, :-1]
    )
    cells = np.argwhere((mix > 0) & (mix < 4))

    def edge_point(kind, i, j):
        if kind == "h":
            va, vb = v[i, j], v[i, j + 1]
            tau = va / (va - vb)
            return complex(r[j] + tau * (r[j + 1] - r[j]), s[i])
        va, vb = v[i, j], v[i + 1, j]
        tau = va / (va - vb)
        return complex(r[j], s[i] + tau * (s[i + 1] - s[i]))

    def edge_key(cell_i, cell_j, side):
        if side == "bottom":
            return ("h", cell_i, cell_j)
        if side == "top":
            return ("h", cell_i + 1, cell_j)
        if side == "left":
            return ("v", cell_i, cell_j)
        return ("v", cell_i, cell_j + 1)

    points: dict = {}
    links: dict = {}

    def add_seg(ka, kb):
        for k in (ka, kb):
            if k not in points:
                points[k] = edge_point(*k)
        links.setdefault(ka, []).append(kb)
        links.setdefault(kb, []).append(ka)

    for i, j in cells:
        case = (
            (1 if pos[i, j] else 0)
            | (2 if pos[i, j + 1] else 0)
            | (4 if pos[i + 1, j + 1] else 0)
            | (8 if pos[i + 1, j] else 0)
        )
        if case in _MS_CASES:
            segs = _MS_CASES[case]
        elif case == 5:
            center = 0.25 * (v[i, j] + v[i, j + 1] + v[i + 1, j + 1] + v[i + 1, j])
            segs = (("bottom", "right"), ("top", "left")) if center > 0 else (
                ("left", "bottom"),
                ("right", "top"),
            )
        elif case == 10:
            center = 0.25 * (v[i, j] + v[i, j + 1] + v[i + 1, j + 1] + v[i + 1, j])
            segs = (("left", "bottom"), ("right", "top")) if center > 0 else (
                ("bottom", "right"),
                ("top", "left"),
            )
        else:
            continue
        for sa, sb in segs:
            add_seg(edge_key(i, j, sa), edge_key(i, j, sb))

    # chain segments into polylines: open chains first, then closed loops
    visited = set()
    polylines = []

    def walk(start):
        chain = [start]
        visited.add(start)
        cur = start
        while True:
            nxt = [k for k in links[cur] if k not in visited]
            if not nxt:
                break
            cur = nxt[0]
            visited.add(cur)
            chain.append(cur)
        return chain

    deg1 = [k for k, ls in links.items() if len(ls) == 1]
    for k in deg1:
        if k in visited:
            continue
        chain = walk(k)
        polylines.append(np.array([points[c] for c in chain]))
    for k in links:
        if k in visited:
            continue
        chain = walk(k)
        chain.append(chain[0])  # close the loop
        polylines.append(np.array([points[c] for c in chain]))
    return polylines


def level_region(curve: TrigCurve, sp: SaddlePoint, rect=None, nr: int = 481, ns: int = 361) -> LevelSetGrid:
    """Signed field Re g - Re g(t0) on the strip plus marching-squares zero level."""
    if not sp.simple:
        raise ValueError("level_region needs a simple saddle")
    if rect is None:
        rect = ((-math.pi, math.pi), (-0.2, 2.5))
    (r_lo, r_hi), (s_lo, s_hi) = rect
    if nr < 400 or ns < 300:
        raise ValueError("grid resolution must be at least 400 x 300")
    r = np.linspace(r_lo, r_hi, nr)
    s = np.linspace(s_lo, s_hi, ns)
    tt = r[None, :] + 1j * s[:, None]
    jets = eval_jets(curve, tt.ravel(), order=0)
    re_g = (jets[0][0] + 1j * jets[0][1]).real.reshape(ns, nr)
    values = re_g - sp.g0.real
    polylines = _march(values, r, s)
    return LevelSetGrid(r=r, s=s, values=values, polylines=polylines, t0=sp.t0)


def _re_g_many(curve: TrigCurve, ts) -> np.ndarray:
    jets = eval_jets(curve, np.asarray(ts, dtype=complex), order=0)
    return (jets[0][0] + 1j * jets[0][1]).real


def build_contour(curve: TrigCurve, sp: SaddlePoint, grid: LevelSetGrid, delta: float | None = None, rho: float = 0.1) -> ContourPath:
    """Admissible polyline -pi -> pi through sp.t0 inside the sampled descent region.

    The saddle is bridged by short straight probes along the two directions
    where g''(t0) (t - t0)^2 is negative real.  When the two opposite steepest
    directions land in disconnected descent components (inward-cusp geometry),
    both probe legs tilt into the single usable sector and the path V-turns.
    """
    if not sp.simple:
        raise ValueError("build_contour needs a simple saddle")
    t0 = sp.t0
    re_g0 = sp.g0.real
    end_excess = float(_re_g_many(curve, [math.pi + 0j])[0]) - re_g0
    if end_excess >= 0:
        raise EndpointAboveLevel(f"Re g(pi) - Re g(t0) = {end_excess:.3g} >= 0")
    if delta is None:
        delta = 1e-3 * abs(0.0 - float(grid.values.min()))
    if end_excess > -delta:
        raise NoAdmissiblePath("endpoint sits inside the margin band")

    def _finish(waypoints, omega, i_saddle):
        # stored margin = what the path actually achieves, capped by the target
        w = np.asarray(waypoints, dtype=complex)
        seg = np.abs(np.diff(w))
        total = seg.sum()
        pts = [w[0]]
        for a, b, L in zip(w[:-1], w[1:], seg):
            n = max(int(round(2048 * L / total)), 2)
            pts.append(a + (b - a) * np.linspace(0.0, 1.0, n)[1:])
        ts = np.concatenate([np.atleast_1d(np.asarray(x, dtype=complex)) for x in pts])
        exc = _re_g_many(curve, ts) - re_g0
        outside = np.abs(ts - t0) > rho
        worst = float(exc[outside].max())
        if worst >= 0.0:
            raise NoAdmissiblePath(f"constructed path re-ascends to excess {worst:.3g}")
        return ContourPath(
            waypoints=tuple(waypoints),
            omega=omega,
            margin=min(delta, 0.999 * (-worst)),
            i_saddle=i_saddle,
        )

    # real-interval shortcut: real saddle whose axis already descends
    if abs(t0.imag) <= 1e-9:
        ts = np.linspace(-math.pi, math.pi, 2048)
        exc = _re_g_many(curve, ts) - re_g0
        outside = np.abs(ts - t0.real) > rho
        tiny = 1e-12 * max(1.0, abs(re_g0))
        if float(exc[outside].max()) < 0.0 and (exc[~outside] <= tiny).all():
            return _finish(
                (-math.pi + 0j, complex(t0.real, 0.0), math.pi + 0j), 0.0, 1
            )

    r, s, values = grid.r, grid.s, grid.values
    ns, nr = values.shape
    dr = r[1] - r[0]
    ds = s[1] - s[0]
    h = max(dr, ds)
    tt = r[None, :] + 1j * s[:, None]
    mask = (values <= -delta) & (np.abs(tt - t0) > rho)

    def node_of(t: complex):
        j = int(round((t.real - r[0]) / dr))
        i = int(round((t.imag - s[0]) / ds))
        if 0 <= i < ns and 0 <= j < nr:
            return (i, j)
        return None

    def nearest_axis_node(r_val: float):
        j = int(round((r_val - r[0]) / dr))
        j = min(max(j, 0), nr - 1)
        i = int(np.argmin(np.abs(s)))
        if mask[i, j]:
            return (i, j)
        col = np.nonzero(mask[:, j])[0]
        if len(col) == 0:
            return None
        i = col[np.argmin(np.abs(s[col]))]
        return (int(i), j)

    start = nearest_axis_node(-math.pi)
    goal = nearest_axis_node(math.pi)
    if start is None or goal is None:
        raise NoAdmissiblePath("no descent cell adjacent to an interval endpoint")

    comp = np.full(values.shape, -1, dtype=int)
    label = 0
    for i0 in range(ns):
        for j0 in range(nr):
            if mask[i0, j0] and comp[i0, j0] < 0:
                dq = deque([(i0, j0)])
                comp[i0, j0] = label
                while dq:
                    ci, cj = dq.popleft()
                    for ni, nj in ((ci - 1, cj), (ci + 1, cj), (ci, cj - 1), (ci, cj + 1)):
                        if 0 <= ni < ns and 0 <= nj < nr and mask[ni, nj] and comp[ni, nj] < 0:
                            comp[ni, nj] = label
                            dq.append((ni, nj))
                label += 1
    comp_minus = comp[start]
    comp_plus = comp[goal]

    def probe(phi: float):
        length = rho + 1.5 * h
        cap = max(4.0 * rho, 0.5)
        while length <= cap:
            p = t0 + length * cmath.exp(1j * phi)
            node = node_of(p)
            if node is not None and mask[node]:
                if float(_re_g_many(curve, [p])[0]) - re_g0 <= -delta:
                    return p, node
            length += 0.5 * h
        return None

    phi_steep = 0.5 * (math.pi - cmath.phase(sp.g2))
    attempts = []
    for to_plus, to_minus in ((phi_steep, phi_steep - math.pi), (phi_steep - math.pi, phi_steep)):
        attempts.append((to_plus, to_minus))
    # V-turn fallbacks: both legs tilted around one steepest direction
    for base_phi in (phi_steep, phi_steep - math.pi):
        for tilt in (math.pi / 8, math.pi / 6):
            cand = (base_phi - tilt, base_phi + tilt)
            exit_phi = max(cand, key=lambda p: math.cos(p))
            entry_phi = min(cand, key=lambda p: math.cos(p))
            attempts.append((exit_phi, entry_phi))

    chosen = None
    for exit_phi, entry_phi in attempts:
        pe = probe(exit_phi)
        pn = probe(entry_phi)
        if pe is None or pn is None:
            continue
        if comp[pe[1]] == comp_plus and comp[pn[1]] == comp_minus:
            chosen = (exit_phi, entry_phi, pe, pn)
            break
    if chosen is None:
        raise NoAdmissiblePath("no steepest-descent probe pair connects the endpoints")
    exit_phi, entry_phi, (p_exit, n_exit), (p_entry, n_entry) = chosen

    def bfs(a, b):
        prev = {a: None}
        dq = deque([a])
        while dq:
            cur = dq.popleft()
            if cur == b:
                out = []
                while cur is not None:
                    out.append(cur)
                    cur = prev[cur]
                return out[::-1]
            ci, cj = cur
            for nxt in ((ci - 1, cj), (ci + 1, cj), (ci, cj - 1), (ci, cj + 1)):
                ni, nj = nxt
                if 0 <= ni < ns and 0 <= nj < nr and mask[ni, nj] and nxt not in prev:
                    prev[nxt] = cur
                    dq.append(nxt)
        return None

    cells_in = bfs(start, n_entry)
    cells_out = bfs(n_exit, goal)
    if cells_in is None or cells_out is None:
        raise NoAdmissiblePath("descent corridor breaks between endpoint and saddle probe")

    def centers(cells):
        return [complex(r[j], s[i]) for i, j in cells]

    def los(a: complex, b: complex) -> bool:
        n = int(abs(b - a) / h) * 2 + 3
        seg = a + (b - a) * np.linspace(0.0, 1.0, n)
        if (np.abs(seg - t0) < 0.98 * rho).any():
            return False
        exc = _re_g_many(curve, seg) - re_g0
        return bool((exc <= -0.999 * delta).all())

    def smooth(pts):
        out = [pts[0]]
        i = 0
        while i < len(pts) - 1:
            j = len(pts) - 1
            while j > i + 1 and not los(pts[i], pts[j]):
                j -= 1
            out.append(pts[j])
            i = j
        return out

    leg_in = smooth([-math.pi + 0j] + centers(cells_in) + [p_entry])
    leg_out = smooth([p_exit] + centers(cells_out) + [math.pi + 0j])
    waypoints = tuple(leg_in) + (t0,) + tuple(leg_out)
    return _finish(waypoints, float(math.remainder(exit_phi, 2.0 * math.pi)), len(leg_in))


def validate_contour(curve: TrigCurve, path: ContourPath, delta: float | None = None, rho: float = 0.1, n_samples: int = 2048) -> ValidationReport:
    """Sample the polyline; outside the rho-disc Re g - Re g(t0) must stay <= -delta,
    inside it must decay at least a fixed fraction of the quadratic rate."""
    if delta is None:
        delta = path.margin
    t0 = path.t0
    g0, _, g2 = g_jet(curve, t0, order=2)
    re_g0 = g0.real

    w = np.asarray(path.waypoints, dtype=complex)
    seg_len = np.abs(np.diff(w))
    total = seg_len.sum()
    samples = [w[0]]
    for a, b, L in zip(w[:-1], w[1:], seg_len):
        n = max(int(round(n_samples * L / total)), 2)
        samples.append(a + (b - a) * np.linspace(0.0, 1.0, n)[1:])
    ts = np.concatenate([np.atleast_1d(np.asarray(x, dtype=complex)) for x in samples])
    exc = _re_g_many(curve, ts) - re_g0
    dist = np.abs(ts - t0)

    outside = dist > rho
    if outside.any():
        i_worst = np.argmax(np.where(outside, exc, -np.inf))
        max_excess = float(exc[i_worst])
        if max_excess > -delta:
            raise MarginViolated(
                f"Re g excess {max_excess:.6g} above -delta = {-delta:.6g} at t = {ts[i_worst]:.6g}",
                t=complex(ts[i_worst]),
                excess=max_excess,
            )
    else:
        i_worst = int(np.argmax(exc))
        max_excess = float(exc[i_worst])

    inside = (~outside) & (dist > 1e-3 * rho)
    if inside.any():
        bound = -0.05 * abs(g2) * dist[inside] ** 2
        bad = exc[inside] > bound + 1e-12 * max(1.0, abs(re_g0))
        if bad.any():
            tb = ts[inside][bad][0]
            raise MarginViolated(
                f"quadratic decay fails inside the saddle disc at t = {tb:.6g}",
                t=complex(tb),
                excess=float(exc[inside][bad][0]),
            )
    return ValidationReport(
        max_excess=max_excess,
        worst_t=complex(ts[i_worst]),
        delta=delta,
        rho=rho,
        n_samples=len(ts),
    )


def branch_angle(sp: SaddlePoint, omega: float) -> float:
    """The representative omega0 of arg(-g''(t0)) selected by the contour slope omega.

    omega0 is the unique lift of arg(-g'') in (-pi - 2 omega, pi - 2 omega]; it
    must additionally satisfy |omega0 + 2 omega| <= pi/2.
    """
    z = -sp.g2
    if z.imag == 0.0:
        z = complex(z.real, 0.0)  # kill signed zero so phase(-x) = +pi
    base = cmath.phase(z)
    lo = -math.pi - 2.0 * omega
    hi = math.pi - 2.0 * omega
    m = math.floor((hi - base) / (2.0 * math.pi))
    omega0 = base + 2.0 * math.pi * m
    if not lo < omega0 <= hi:
        raise BranchUnresolvable(f"no lift of arg(-g'') in ({lo:.6g}, {hi:.6g}]")
    if abs(omega0 + 2.0 * omega) > 0.5 * math.pi + 1e-12:
        raise BranchUnresolvable(
            f"|omega0 + 2 omega| = {abs(omega0 + 2 * omega):.6g} exceeds pi/2"
        )
    return omega0


def branch_sqrt_neg_g2(sp: SaddlePoint, omega: float) -> complex:
    """(-g''(t0))^(1/2) on the branch tied to the contour slope omega."""
    omega0 = branch_angle(sp, omega)
    return math.sqrt(abs(sp.g2)) * cmath.exp(0.5j * omega0)


def grid_to_csv(grid: LevelSetGrid) -> str:
    lines = ["r,s,value"]
    for i, sv in enumerate(grid.s):
        row = grid.values[i]
        for j, rv in enumerate(grid.r):
            lines.append(f"{float(rv)!r},{float(sv)!r},{float(row[j])!r}")
    return "\n".join(lines) + "\n"


def grid_to_svg(grid: LevelSetGrid, path: ContourPath | None = None, width: int = 1000, height: int = 600) -> str:
    r_lo, r_hi = float(grid.r[0]), float(grid.r[-1])
    s_lo, s_hi = float(grid.s[0]), float(grid.s[-1])

    def to_px(zs):
        zs = np.asarray(zs, dtype=complex)
        x = (zs.real - r_lo) / (r_hi - r_lo) * width
        y = (1.0 - (zs.imag - s_lo) / (s_hi - s_lo)) * height
        return x, y

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" '
        f'width="{width}" height="{height}">'
    ]
    for poly in grid.polylines:
        x, y = to_px(poly)
        pts = " ".join(f"{xi:.2f},{yi:.2f}" for xi, yi in zip(x, y))
        parts.append(f'<polyline fill="none" stroke="black" stroke-width="1" points="{pts}"/>')
    if path is not None:
        x, y = to_px(np.asarray(path.waypoints))
        pts = " ".join(f"{xi:.2f},{yi:.2f}" for xi, yi in zip(x, y))
        parts.append(f'<polyline fill="none" stroke="blue" stroke-width="2" points="{pts}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
