"""Bundled example algebras, loadable by name."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .algebra import AlgebraSpec
from .fileformat import AlgebraFileError, algebra_from_dict, parse_algebra

BUILTIN = ("ex2_5", "abelian2", "heisenberg3", "odd_heisenberg")


def load_builtin(name: str) -> AlgebraSpec:
    if name not in BUILTIN:
        raise KeyError(f"unknown bundled algebra {name!r}; "
                       f"have {', '.join(BUILTIN)}")
    text = resources.files("homlie").joinpath(f"data/{name}.json").read_text()
    return algebra_from_dict(json.loads(text), source=f"bundled:{name}")


def resolve(path_or_name: str) -> AlgebraSpec:
    """Load an algebra from a file path, falling back to bundled names."""
    if Path(path_or_name).exists():
        return parse_algebra(path_or_name)
    if path_or_name in BUILTIN:
        return load_builtin(path_or_name)
    raise AlgebraFileError(
        f"no such file or bundled algebra: {path_or_name}")
