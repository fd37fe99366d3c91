"""Finite acyclic quivers and their paths.

Vertices are numbered ``1..n``.  A path is stored as ``Path(start, end,
arrows)`` where ``arrows`` lists arrow names in the order they are traversed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import NamedTuple, Optional

import numpy as np

from .errors import InputError, InvalidQuiver


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


class Path(NamedTuple):
    start: int
    end: int
    arrows: tuple[str, ...]


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: tuple[Arrow, ...] = field(default=())

    @classmethod
    def build(cls, n: int, arrows) -> "Quiver":
        """Construct from ``(name, source, target)`` triples and validate."""
        q = cls(int(n), tuple(a if isinstance(a, Arrow) else Arrow(str(a[0]), int(a[1]), int(a[2])) for a in arrows))
        errors = validate(q)
        if errors:
            raise InvalidQuiver(errors)
        return q

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def arrow_map(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    def arrow(self, name: str) -> Arrow:
        return self.arrow_map[name]

    @cached_property
    def topological_order(self) -> tuple[int, ...]:
        order = _toposort(self)
        if order is None:
            raise InvalidQuiver([("Cyclic", "quiver has an oriented cycle")])
        return tuple(order)

    def out_arrows(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def in_arrows(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    @cached_property
    def _paths(self) -> dict[tuple[int, int], tuple[Path, ...]]:
        table: dict[tuple[int, int], list[Path]] = {(i, j): [] for i in self.vertices for j in self.vertices}
        # extend paths from each start vertex in topological order
        for i in self.vertices:
            table[(i, i)].append(Path(i, i, ()))
            for v in self.topological_order:
                for prefix in list(table[(i, v)]):
                    for a in self.out_arrows(v):
                        table[(i, a.target)].append(Path(i, a.target, prefix.arrows + (a.name,)))
        return {k: tuple(sorted(v, key=lambda p: (len(p.arrows), p.arrows))) for k, v in table.items()}

    def paths(self, i: int, j: int) -> tuple[Path, ...]:
        """All paths from ``i`` to ``j`` in a fixed canonical order."""
        return self._paths[(i, j)]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {1}
        stack = [1]
        while stack:
            v = stack.pop()
            for a in self.arrows:
                for u, w in ((a.source, a.target), (a.target, a.source)):
                    if u == v and w not in seen:
                        seen.add(w)
                        stack.append(w)
        return len(seen) == self.n

    def an_orientation(self) -> Optional[str]:
        """The orientation string if this is an A_n quiver on ``1..n``, else None."""
        if len(self.arrows) != max(self.n - 1, 0):
            return None
        chars = [None] * max(self.n - 1, 0)
        for a in self.arrows:
            lo, hi = sorted((a.source, a.target))
            if hi != lo + 1 or chars[lo - 1] is not None:
                return None
            chars[lo - 1] = ">" if a.source == lo else "<"
        return "".join(chars)

    def to_json(self) -> dict:
        return {
            "vertices": self.n,
            "arrows": [{"name": a.name, "from": a.source, "to": a.target} for a in self.arrows],
        }

    @classmethod
    def from_json(cls, doc) -> "Quiver":
        try:
            n = doc["vertices"]
            arrows = [(a["name"], a["from"], a["to"]) for a in doc.get("arrows", [])]
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed quiver JSON: {exc}") from exc
        if not isinstance(n, int) or n < 0:
            raise InputError(f"malformed quiver JSON: vertices must be a nonnegative integer, got {n!r}")
        return cls.build(n, arrows)


def _toposort(q: Quiver) -> Optional[list[int]]:
    indeg = {v: 0 for v in q.vertices}
    for a in q.arrows:
        if a.target in indeg:
            indeg[a.target] += 1
    ready = sorted(v for v, d in indeg.items() if d == 0)
    order = []
    while ready:
        v = ready.pop(0)
        order.append(v)
        for a in q.arrows:
            if a.source == v:
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    ready.append(a.target)
        ready.sort()
    return order if len(order) == q.n else None


def validate(q: Quiver) -> list[tuple[str, str]]:
    """Return a list of ``(kind, message)`` problems; empty means valid."""
    errors = []
    names = set()
    for a in q.arrows:
        if a.name in names:
            errors.append(("DuplicateArrowName", f"arrow name {a.name!r} repeated"))
        names.add(a.name)
        for end in (a.source, a.target):
            if not 1 <= end <= q.n:
                errors.append(("DanglingEndpoint", f"arrow {a.name!r} touches vertex {end} outside 1..{q.n}"))
    if not any(k == "DanglingEndpoint" for k, _ in errors) and _toposort(q) is None:
        errors.append(("Cyclic", "quiver has an oriented cycle"))
    return errors


def an_quiver(n: int, orientation: Optional[str] = None) -> Quiver:
    """A_n with arrow ``a_k`` between ``k`` and ``k+1``, pointing right for '>'."""
    if n < 1:
        raise InputError("A_n needs n >= 1")
    if orientation is None:
        orientation = ">" * (n - 1)
    if len(orientation) != n - 1 or set(orientation) - {">", "<"}:
        raise InputError(f"orientation must be {n - 1} characters from '<>', got {orientation!r}")
    arrows = []
    for k, ch in enumerate(orientation, start=1):
        src, tgt = (k, k + 1) if ch == ">" else (k + 1, k)
        arrows.append((f"a{k}", src, tgt))
    return Quiver.build(n, arrows)


def an_orientations(n: int) -> list[str]:
    return ["".join(t) for t in product("><", repeat=n - 1)]


def is_monotone(orientation: str) -> bool:
    return len(set(orientation)) <= 1


def path_table(q: Quiver) -> np.ndarray:
    """``counts[i-1][j-1]`` = number of paths from ``i`` to ``j``, by DP over a topological order."""
    counts = np.zeros((q.n, q.n), dtype=np.int64)
    order = q.topological_order
    for i in q.vertices:
        counts[i - 1, i - 1] = 1
        for v in order:
            c = counts[i - 1, v - 1]
            if c:
                for a in q.out_arrows(v):
                    counts[i - 1, a.target - 1] += c
    return counts


def disjoint_union(q1: Quiver, q2: Quiver) -> Quiver:
    shift = q1.n
    arrows = [(a.name, a.source, a.target) for a in q1.arrows]
    arrows += [(f"{a.name}'", a.source + shift, a.target + shift) for a in q2.arrows]
    return Quiver.build(q1.n + q2.n, arrows)
