"""The contravariant correspondence between ordinals and intervals.

Mapping into a two-point target turns each category into the other:
``Hom([n], [1])``, ordered pointwise, is an interval with ``n + 2`` points
whose endpoints are the two constant maps, and ``Hom({m}, {1})`` is an
ordinal with ``m`` points.  Precomposition makes these assignments into
mutually inverse contravariant functors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ordinals import (
    IntervalMap,
    OrdinalMap,
    identity,
    interval_identity,
    interval_maps,
    ordinal_maps,
)


def ordered_hom_delta(n: int) -> tuple[OrdinalMap, ...]:
    """All monotone maps ``[n] -> [1]``, sorted ascending.

    Two such maps are comparable pointwise, so the order is total; element
    ``i`` is the step map with ``i`` ones.  The first element is the
    constant-0 map and the last the constant-1 map.
    """
    maps = []
    for ones in range(n + 2):
        values = tuple(1 if k >= n + 1 - ones else 0 for k in range(n + 1))
        maps.append(OrdinalMap(n, 1, values))
    return tuple(maps)


def ordered_hom_interval(m: int) -> tuple[IntervalMap, ...]:
    """All endpoint-preserving maps ``{m} -> {1}``, sorted ascending."""
    maps = []
    for ones in range(1, m + 1):
        values = tuple(1 if k >= m + 1 - ones else 0 for k in range(m + 1))
        maps.append(IntervalMap(m, 1, values))
    return tuple(maps)


def ordinal_dual(f: OrdinalMap) -> IntervalMap:
    """The interval map ``{m+1} -> {n+1}`` dual to ``f: [n] -> [m]``.

    Precomposition with ``f`` sends ``Hom([m], [1])`` to ``Hom([n], [1])``;
    writing a step map as its switch threshold, the value at ``j`` counts
    the values of ``f`` below ``j``, i.e. the first position at which ``f``
    reaches ``j``.  This is the coordinatization inverse to
    ``interval_dual``: it satisfies ``ordinal_dual(f)(j) <= k`` iff
    ``j <= f(k)``, and constant maps go to constant maps, so endpoints are
    preserved.
    """
    n, m = f.src, f.dst
    values = tuple(sum(1 for v in f.values if v < j) for j in range(m + 2))
    return IntervalMap(m + 1, n + 1, values)


def interval_dual(g: IntervalMap) -> OrdinalMap:
    """The ordinal map ``[m-1] -> [n-1]`` dual to ``g: {n} -> {m}``.

    The value at ``i`` is the top of the initial segment pulled back along
    ``g``, i.e. ``|g^{-1}{0..i}| - 1``; equivalently it is characterized by
    ``i <= interval_dual(g)(j)`` iff ``g(i) <= j``.
    """
    values = tuple(
        sum(1 for v in g.values if v <= i) - 1 for i in range(g.dst)
    )
    return OrdinalMap(g.dst - 1, g.src - 1, values)


@dataclass(frozen=True)
class DualityReport:
    passed: bool
    checked: int
    counterexample: str | None = None


def duality_selftest(max_n: int) -> DualityReport:
    """Exhaustively verify that the two duals invert each other.

    Checks every interval map between objects of size at most ``max_n`` and
    every ordinal map between objects ``[0] .. [max_n]``, object identities
    included.  Returns the first counterexample found, if any.
    """
    checked = 0
    for n in range(1, max_n + 1):
        checked += 1
        if interval_dual(ordinal_dual(identity(n - 1))) != identity(n - 1):
            return DualityReport(False, checked, f"object [{n - 1}]")
        if ordinal_dual(interval_dual(interval_identity(n))) != interval_identity(n):
            return DualityReport(False, checked, f"object {{{n}}}")
    for a in range(1, max_n + 1):
        for b in range(1, max_n + 1):
            for g in interval_maps(a, b):
                checked += 1
                if ordinal_dual(interval_dual(g)) != g:
                    return DualityReport(
                        False, checked, f"interval map {{{a}}}->{{{b}}} {g.values}"
                    )
    for a in range(max_n + 1):
        for b in range(max_n + 1):
            for f in ordinal_maps(a, b):
                checked += 1
                if interval_dual(ordinal_dual(f)) != f:
                    return DualityReport(
                        False, checked, f"ordinal map [{a}]->[{b}] {f.values}"
                    )
    return DualityReport(True, checked)
