"""Built-in demo towers, keyed by name (``p{p}b{upper breaks}``)."""

from .tower import Tower, TowerSpec

CATALOG = {
    "p2b1": {"p": 2, "f": 1, "rhs": ["t^-1"]},
    "p2b3": {"p": 2, "f": 1, "rhs": ["t^-3"]},
    "p3b1": {"p": 3, "f": 1, "rhs": ["t^-1"]},
    "p3b2": {"p": 3, "f": 1, "rhs": ["t^-2"]},
    "p5b2": {"p": 5, "f": 1, "rhs": ["t^-2"]},
    "p2b1b3": {"p": 2, "f": 1, "rhs": ["t^-1", "t^-3"]},
    "p3b1b2": {"p": 3, "f": 1, "rhs": ["t^-1", "t^-2"]},
}

_towers = {}


def catalog_tower(name):
    if name not in _towers:
        _towers[name] = Tower.from_spec(TowerSpec.from_dict(CATALOG[name], name))
    return _towers[name]


def all_towers():
    return [catalog_tower(name) for name in CATALOG]
