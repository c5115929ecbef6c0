"""Finite ordinals and the monotone-map calculus they generate.

Objects are identified with their size: the ordinal ``[n] = {0, ..., n}``
is represented by the integer ``n``, and a map is the dense tuple of its
values.  The interval variants carry the extra endpoint constraints.
All values are immutable; every operation returns a fresh map.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator, Literal


class MismatchedObjectsError(ValueError):
    """Composition was attempted across maps whose middle objects differ."""


def _check_monotone(values, dst, length, kind):
    if len(values) != length:
        raise ValueError(f"{kind} needs {length} values, got {len(values)}")
    previous = 0
    for k, v in enumerate(values):
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"{kind} values must be integers, got {v!r}")
        if not 0 <= v <= dst:
            raise ValueError(f"{kind} value {v} at position {k} is outside 0..{dst}")
        if v < previous:
            raise ValueError(f"{kind} values must be monotone: {values}")
        previous = v


@dataclass(frozen=True)
class OrdinalMap:
    """A monotone map ``[src] -> [dst]``; ``values[k]`` is the image of k."""

    src: int
    dst: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.src < 0 or self.dst < 0:
            raise ValueError("ordinal objects must be nonnegative")
        _check_monotone(self.values, self.dst, self.src + 1, "ordinal map")

    def __call__(self, k: int) -> int:
        return self.values[k]


@dataclass(frozen=True)
class IntervalMap:
    """A monotone, endpoint-preserving map ``{src} -> {dst}``.

    Interval objects ``{m} = {0, ..., m}`` need at least two points
    (``m >= 1``), and a map must send 0 to 0 and the top to the top.
    """

    src: int
    dst: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.src < 1 or self.dst < 1:
            raise ValueError("interval objects need at least two points")
        _check_monotone(self.values, self.dst, self.src + 1, "interval map")
        if self.values[0] != 0 or self.values[-1] != self.dst:
            raise ValueError(f"interval map must preserve endpoints: {self.values}")

    def __call__(self, k: int) -> int:
        return self.values[k]


def identity(n: int) -> OrdinalMap:
    """The identity map on ``[n]``."""
    return OrdinalMap(n, n, tuple(range(n + 1)))


def interval_identity(m: int) -> IntervalMap:
    return IntervalMap(m, m, tuple(range(m + 1)))


def compose(f: OrdinalMap, g: OrdinalMap) -> OrdinalMap:
    """Diagrammatic composite: first ``f``, then ``g`` (i.e. ``g after f``)."""
    if f.dst != g.src:
        raise MismatchedObjectsError(
            f"cannot compose [{f.src}]->[{f.dst}] with [{g.src}]->[{g.dst}]"
        )
    return OrdinalMap(f.src, g.dst, tuple(g.values[v] for v in f.values))


def compose_interval(f: IntervalMap, g: IntervalMap) -> IntervalMap:
    if f.dst != g.src:
        raise MismatchedObjectsError(
            f"cannot compose {{{f.src}}}->{{{f.dst}}} with {{{g.src}}}->{{{g.dst}}}"
        )
    return IntervalMap(f.src, g.dst, tuple(g.values[v] for v in f.values))


def face(n: int, i: int) -> OrdinalMap:
    """The injection ``[n-1] -> [n]`` whose image omits ``i``.

    >>> face(2, 1).values
    (0, 2)
    """
    if not 0 <= i <= n or n < 1:
        raise ValueError(f"face index {i} out of range for [{n}]")
    return OrdinalMap(n - 1, n, tuple(k if k < i else k + 1 for k in range(n)))


def degeneracy(n: int, i: int) -> OrdinalMap:
    """The surjection ``[n+1] -> [n]`` hitting ``i`` twice.

    >>> degeneracy(1, 0).values
    (0, 0, 1)
    """
    if not 0 <= i <= n:
        raise ValueError(f"degeneracy index {i} out of range for [{n}]")
    return OrdinalMap(n + 1, n, tuple(k if k <= i else k - 1 for k in range(n + 2)))


def opposite(f: OrdinalMap) -> OrdinalMap:
    """Conjugate ``f`` by the order reversals of its source and target.

    >>> opposite(OrdinalMap(2, 3, (0, 2, 2))).values
    (1, 1, 3)
    """
    n, m = f.src, f.dst
    return OrdinalMap(n, m, tuple(m - f.values[n - k] for k in range(n + 1)))


def concat_objects(a: int, b: int) -> int:
    """Size of the end-to-end join: ``[a] * [b] = [a + b + 1]``."""
    return a + b + 1


def concat_maps(f: OrdinalMap, g: OrdinalMap) -> OrdinalMap:
    """Join two maps blockwise; the second block lands above ``f``'s target.

    >>> concat_maps(face(1, 1), face(1, 1)).values
    (0, 2)
    """
    offset = f.dst + 1
    values = f.values + tuple(offset + v for v in g.values)
    return OrdinalMap(concat_objects(f.src, g.src), concat_objects(f.dst, g.dst), values)


@dataclass(frozen=True)
class Generator:
    """A face or degeneracy, tagged with the object level it maps into.

    ``Generator("face", n, i)`` stands for ``face(n, i): [n-1] -> [n]`` and
    ``Generator("degeneracy", n, i)`` for ``degeneracy(n, i): [n+1] -> [n]``.
    """

    kind: Literal["face", "degeneracy"]
    level: int
    index: int

    def as_map(self) -> OrdinalMap:
        if self.kind == "face":
            return face(self.level, self.index)
        return degeneracy(self.level, self.index)


def factorize(f: OrdinalMap) -> tuple[Generator, ...]:
    """Split ``f`` into generators, listed in application order.

    The composite of the returned generators (first applied first) equals
    ``f``: all degeneracies come first, collapsing repeated values from the
    highest index down, then faces insert the missing values from the lowest
    index up.

    >>> factorize(OrdinalMap(1, 2, (0, 2)))
    (Generator(kind='face', level=2, index=1),)
    """
    repeats = [j for j in range(f.src) if f.values[j] == f.values[j + 1]]
    image = set(f.values)
    missing = [i for i in range(f.dst + 1) if i not in image]
    gens = []
    current = f.src
    for j in reversed(repeats):
        gens.append(Generator("degeneracy", current - 1, j))
        current -= 1
    for i in missing:
        gens.append(Generator("face", current + 1, i))
        current += 1
    return tuple(gens)


def ordinal_maps(src: int, dst: int) -> Iterator[OrdinalMap]:
    """All monotone maps ``[src] -> [dst]`` in ascending value order."""
    for values in combinations_with_replacement(range(dst + 1), src + 1):
        yield OrdinalMap(src, dst, values)


def interval_maps(src: int, dst: int) -> Iterator[IntervalMap]:
    """All endpoint-preserving monotone maps ``{src} -> {dst}``."""
    if src == 1:
        yield IntervalMap(1, dst, (0, dst))
        return
    for middle in combinations_with_replacement(range(dst + 1), src - 1):
        yield IntervalMap(src, dst, (0, *middle, dst))
