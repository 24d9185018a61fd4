"""Reference equations shipped with the package.

Curve files hold one ternary form in x, y, z whose coefficients are
polynomials in the coordinates a, b, c of the general point.  The JSON index
``data/fixtures.json`` records, per curve, the configuration, the degree, the
multiplicity d at the general point and the claimed double points of Z
(``double_points`` lists them; ``null`` means only their number is known).
"""

from functools import lru_cache
from importlib import resources
import json

from .forms import ProjPoint, parse_form
from .scalars import as_scalar

__all__ = ["fixture_index", "curve_text", "instantiate_curve", "curve_fixture", "b3_k1", "b3_k2"]


@lru_cache(maxsize=None)
def fixture_index():
    return json.loads(resources.files(__package__).joinpath("data/fixtures.json").read_text())


def curve_fixture(name):
    for entry in fixture_index()["curves"]:
        if entry["name"] == name:
            return entry
    raise KeyError(f"no curve fixture named {name!r}")


def curve_text(name):
    entry = curve_fixture(name)
    raw = resources.files(__package__).joinpath("data", entry["file"]).read_text()
    return " ".join(raw.split())


def instantiate_curve(text, point, order=1):
    """Bind a, b, c to the coordinates of ``point`` and parse."""
    a, b, c = (as_scalar(v, order) for v in tuple(point))
    return parse_form(text, order=order, extra={"a": a, "b": b, "c": c})


def b3_k1():
    """Ternary syzygy components and the quartic in (a, b, c) = dual point of L, with c = 1."""
    data = fixture_index()["b3_k1"]
    syz = [parse_form(t.replace("a", "x").replace("b", "y").replace("c", "z")) for t in data["syzygy"]]
    return syz, data["quartic"]


def b3_k2():
    data = fixture_index()["b3_k2"]
    sigmas = [[parse_form(t) for t in row] for row in data["sigma"]]
    return ProjPoint(data["line"]), sigmas, parse_form(data["curve"])
