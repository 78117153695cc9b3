"""Python access to the zonorec core. Tilings, paths and labelings are plain dicts in the JSON layout of the CLI."""

import json as _json

from . import _core
from ._core import ZonorecError

__all__ = [
    "ZonorecError",
    "t_min",
    "enumerate_tilings",
    "tiling_through_vertex",
    "validate_tiling",
    "flippable",
    "flip",
    "forest",
    "connect",
    "connect_through",
    "replay",
    "extend",
    "evaluate_path",
    "render_svg",
    "check_confluence",
    "check_laurent",
    "check_grassmann",
    "propagation_trials",
    "random_spin_point",
    "sign_twist",
    "verify_spin_point",
]


def _dump(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def t_min(A):
    return _json.loads(_core.t_min(list(A)))


def enumerate_tilings(A, cap=10000):
    return _json.loads(_core.enumerate_tilings(list(A), cap))


def tiling_through_vertex(A, vertex, seed=0):
    return _json.loads(_core.tiling_through_vertex(list(A), list(vertex), seed))


def validate_tiling(tiling):
    return _json.loads(_core.validate_tiling(_dump(tiling)))


def flippable(tiling):
    return _json.loads(_core.flippable(_dump(tiling)))


def flip(tiling, at):
    """Returns (new tiling, move)."""
    r = _json.loads(_core.flip(_dump(tiling), list(at)))
    return r["tiling"], r["move"]


def forest(tiling):
    return _json.loads(_core.forest(_dump(tiling)))


def connect(tiling, target):
    return _json.loads(_core.connect(_dump(tiling), _dump(target)))


def connect_through(tiling, target, vertex):
    return _json.loads(_core.connect_through(_dump(tiling), _dump(target), list(vertex)))


def replay(path):
    return _json.loads(_core.replay(_dump(path)))


def extend(tiling, labeling=None, seed=0, check=False):
    """Values on the whole box. Without a labeling the run is symbolic."""
    lab = "" if labeling is None else _dump(labeling)
    return _json.loads(_core.extend(_dump(tiling), lab, seed, check))


def evaluate_path(path, labeling):
    return _json.loads(_core.evaluate_path(_dump(path), _dump(labeling)))


def render_svg(tiling, labels=False, forest=False, scale=40.0):
    return _core.render_svg(_dump(tiling), labels, forest, scale)


def check_confluence(A, trials=20, seed=0):
    return _json.loads(_core.check_confluence(list(A), trials, seed))


def check_laurent(A, points=5, seed=0):
    return _json.loads(_core.check_laurent(list(A), points, seed))


def check_grassmann(n, samples=50, seed=0):
    return _json.loads(_core.check_grassmann(n, samples, seed))


def propagation_trials(A, s, c, wanted=100, seed=0):
    return _json.loads(_core.propagation_trials(list(A), s, c, wanted, seed))


def random_spin_point(n, seed=0):
    return _json.loads(_core.random_spin_point(n, seed))


def sign_twist(point):
    return _json.loads(_core.sign_twist(_dump(point)))


def verify_spin_point(point):
    """Three-term relation on the point, cube relation on its sign twist."""
    return _json.loads(_core.verify_spin_point(_dump(point)))
