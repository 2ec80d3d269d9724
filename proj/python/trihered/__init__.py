"""Exact triangles, octahedra and t-structures for representations of Dynkin quivers over F_p.

Objects, morphisms and walks use the same JSON shapes as the command-line tool; they may
be given as dicts or, for objects, as name expressions such as ``"S1 + P2[1]"``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Tuple

from . import _core
from ._core import Error, ParseError, Unsupported, WindowExhausted, prime, set_prime

__all__ = [
    "Error",
    "ParseError",
    "Unsupported",
    "WindowExhausted",
    "Quiver",
    "prime",
    "set_prime",
    "indecomposables",
    "hom",
    "ext",
    "cone",
    "decompose",
    "blocks",
    "tstructure",
    "walk_to_path",
    "octahedron",
    "verify_equivalence",
    "verify_axioms",
]

Window = Tuple[int, int]


def _dump(value: Any) -> str:
    return json.dumps(value)


class Quiver:
    """A finite acyclic quiver; vertices are 1-based in JSON."""

    def __init__(self, core: _core.Quiver):
        self._q = core

    @classmethod
    def from_dict(cls, data: dict) -> "Quiver":
        return cls(_core.Quiver.from_json(_dump(data)))

    @classmethod
    def load(cls, path: str | Path) -> "Quiver":
        return cls(_core.Quiver.from_json(Path(path).read_text()))

    @classmethod
    def linear(cls, n: int) -> "Quiver":
        return cls(_core.Quiver.linear(n))

    @classmethod
    def d4(cls) -> "Quiver":
        return cls(_core.Quiver.d4())

    @property
    def vertex_count(self) -> int:
        return self._q.vertex_count

    @property
    def arrow_count(self) -> int:
        return self._q.arrow_count

    def is_dynkin(self) -> bool:
        return self._q.is_dynkin()

    def to_dict(self) -> dict:
        return json.loads(self._q.to_json())


def indecomposables(q: Quiver) -> dict:
    return json.loads(_core.indecomposables(q._q))


def hom(q: Quiver, source: Any, target: Any, shift: int = 0) -> dict:
    """dim Hom(X, Y[shift]) in the formal model, split into Hom and Ext parts."""
    return json.loads(_core.hom(q._q, _dump(source), _dump(target), shift))


def ext(q: Quiver, source: Any, target: Any) -> dict:
    return json.loads(_core.ext(q._q, _dump(source), _dump(target)))


def cone(q: Quiver, morphism: dict) -> dict:
    return json.loads(_core.cone(q._q, _dump(morphism)))


def decompose(q: Quiver, obj: Any) -> dict:
    return json.loads(_core.decompose(q._q, _dump(obj)))


def blocks(q: Quiver, window: Window = (-3, 3)) -> dict:
    return json.loads(_core.blocks(q._q, tuple(window)))


def tstructure(q: Quiver, generator: str, window: Window = (-3, 3)) -> dict:
    return json.loads(_core.tstructure(q._q, generator, tuple(window)))


def walk_to_path(q: Quiver, walk: dict, window: Window = (-3, 3)) -> dict:
    return json.loads(_core.walk_to_path(q._q, _dump(walk), tuple(window)))


def octahedron(q: Quiver, f: dict, u: dict, seed: int = 17) -> dict:
    return json.loads(_core.octahedron(q._q, _dump(f), _dump(u), seed))


def verify_equivalence(q: Quiver, trials: int = 100, seed: int = 7, window: Window = (-1, 1)) -> dict:
    return json.loads(_core.verify_equivalence(q._q, trials, seed, tuple(window)))


def verify_axioms(q: Quiver, trials: int = 50, seed: int = 13) -> dict:
    return json.loads(_core.verify_axioms(q._q, trials, seed))
