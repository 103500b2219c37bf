import pytest

from nonscatter.curves import builtin
from nonscatter.saddle import build_contour, find_saddles, level_region

# heavy pieces (level-set grids, contours) are built once per session;
# everything downstream treats them as read-only

_BUILTINS = {
    "circle": ("circle", (1.0,)),
    "ellipse": ("ellipse", (2.0, 1.0)),
    "cardioid": ("cardioid", ()),
    "deltoid": ("deltoid", ()),
    "nonconvex": ("nonconvex", ()),
}


@pytest.fixture(scope="session")
def curves():
    return {key: builtin(name, *params) for key, (name, params) in _BUILTINS.items()}


@pytest.fixture(scope="session")
def saddles(curves):
    out = {}
    for key, curve in curves.items():
        if key == "circle":
            continue
        out[key] = find_saddles(curve)[0]
    return out


@pytest.fixture(scope="session")
def grids(curves, saddles):
    return {key: level_region(curves[key], sp) for key, sp in saddles.items()}


@pytest.fixture(scope="session")
def paths(curves, saddles, grids):
    return {key: build_contour(curves[key], saddles[key], grids[key]) for key in saddles}
