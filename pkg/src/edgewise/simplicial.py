"""Finite simplicial sets as level/action views, and their subdivisions.

A view presents a simplicial set by a lazily enumerated, ordered list of
simplex descriptors per level together with a contravariant action of
monotone maps.  Standard simplices store monotone value tuples; the
subdivision by a word reindexes the standard levels through the word's
object/map evaluation; products pair levels componentwise.

The cube calculus at the bottom (``eta``/``mu`` and the simplex-to-cube
comparison maps) exhibits the standard simplex as a retract of a power of
the standard 1-simplex.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product as iter_product

from .ordinals import OrdinalMap, degeneracy, face
from .words import Word, eval_map, eval_object


def label_of(sigma) -> str:
    """Human-readable label: value tuples print as digit strings,
    product simplices as parenthesized pairs."""
    if sigma and isinstance(sigma[0], tuple):
        return "(" + ",".join(label_of(component) for component in sigma) + ")"
    return "".join(str(v) for v in sigma)


class SimplicialSetView:
    """Levelwise presentation with a contravariant map action.

    Subclasses provide ``level`` and ``act``; the degeneracy test, the
    nondegenerate enumeration and ``materialize`` are derived.  Views are
    immutable and act purely; ``dim_bound`` only sets the default
    materialization depth.
    """

    dim_bound: int

    def level(self, n: int) -> tuple:
        raise NotImplementedError

    def act(self, f: OrdinalMap, sigma):
        raise NotImplementedError

    def is_degenerate(self, k: int, sigma) -> bool:
        """Whether a level-k simplex lies in the image of a degeneracy.

        It does exactly when ``s_i d_i sigma == sigma`` for some i < k.
        """
        if k < 1:
            raise ValueError("degeneracy is only defined in positive levels")
        for i in range(k):
            collapsed = self.act(face(k, i), sigma)
            if self.act(degeneracy(k - 1, i), collapsed) == sigma:
                return True
        return False

    def nondegenerate(self, k: int) -> tuple:
        if k == 0:
            return tuple(self.level(0))
        return tuple(s for s in self.level(k) if not self.is_degenerate(k, s))

    def materialize(self, depth: int | None = None) -> dict:
        """Snapshot levels 0..depth with all face and degeneracy tables.

        The tables hold indices into the neighbouring level lists, keyed by
        ``"k,i"``.
        """
        d = self.dim_bound if depth is None else depth
        levels = [self.level(k) for k in range(d + 1)]
        out = {
            "levels": [[label_of(s) for s in level] for level in levels],
            "faces": {},
            "degeneracies": {},
        }
        for k in range(1, d + 1):
            index = {s: i for i, s in enumerate(levels[k - 1])}
            for i in range(k + 1):
                out["faces"][f"{k},{i}"] = [
                    index[self.act(face(k, i), s)] for s in levels[k]
                ]
        for k in range(d):
            index = {s: i for i, s in enumerate(levels[k + 1])}
            for i in range(k + 1):
                out["degeneracies"][f"{k},{i}"] = [
                    index[self.act(degeneracy(k, i), s)] for s in levels[k]
                ]
        return out


def _monotone_tuples(length: int, top: int) -> tuple:
    return tuple(combinations_with_replacement(range(top + 1), length))


class StandardSimplexView(SimplicialSetView):
    """The standard m-simplex: level n holds the monotone tuples of length
    n + 1 over 0..m, and maps act by precomposition."""

    def __init__(self, m: int, dim_bound: int):
        if m < 0 or dim_bound < 0:
            raise ValueError("need m >= 0 and dim_bound >= 0")
        self.m = m
        self.dim_bound = dim_bound

    def level(self, n: int) -> tuple:
        return _monotone_tuples(n + 1, self.m)

    def act(self, f: OrdinalMap, sigma):
        return tuple(sigma[v] for v in f.values)


class SubdividedView(SimplicialSetView):
    """A standard simplex subdivided by a word: level n is the standard
    level at the word's value on n, and a map acts through the word."""

    def __init__(self, word: Word, m: int, dim_bound: int):
        if m < 0 or dim_bound < 0:
            raise ValueError("need m >= 0 and dim_bound >= 0")
        self.word = word
        self.m = m
        self.dim_bound = dim_bound
        self._action_cache: dict[tuple, tuple[int, ...]] = {}

    def level(self, n: int) -> tuple:
        return _monotone_tuples(eval_object(self.word, n) + 1, self.m)

    def act(self, f: OrdinalMap, sigma):
        key = (f.src, f.dst, f.values)
        table = self._action_cache.get(key)
        if table is None:
            table = eval_map(self.word, f).values
            self._action_cache[key] = table
        return tuple(sigma[v] for v in table)


class ProductView(SimplicialSetView):
    """Levelwise product of two views with componentwise action."""

    def __init__(self, left: SimplicialSetView, right: SimplicialSetView):
        if left.dim_bound != right.dim_bound:
            raise ValueError("product factors must share the same dimension bound")
        self.left = left
        self.right = right
        self.dim_bound = left.dim_bound

    def level(self, n: int) -> tuple:
        return tuple(iter_product(self.left.level(n), self.right.level(n)))

    def act(self, f: OrdinalMap, sigma):
        return (self.left.act(f, sigma[0]), self.right.act(f, sigma[1]))


def standard_simplex(m: int, dim_bound: int) -> StandardSimplexView:
    return StandardSimplexView(m, dim_bound)


def subdivide(word: Word, m: int, dim_bound: int = 3) -> SubdividedView:
    return SubdividedView(word, m, dim_bound)


def product(x: SimplicialSetView, y: SimplicialSetView) -> ProductView:
    return ProductView(x, y)


@dataclass(frozen=True)
class SkeletonGraph:
    """Labeled 2-skeleton: vertices, directed nondegenerate edges, and the
    vertex triples of nondegenerate triangles."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]  # (label, initial, terminal)
    triangles: tuple[tuple[str, tuple[str, str, str]], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def triangle_count(self) -> int:
        return len(self.triangles)

    @property
    def euler_characteristic(self) -> int:
        return self.vertex_count - self.edge_count + self.triangle_count

    def arrows(self) -> tuple[tuple[str, str], ...]:
        return tuple((initial, terminal) for _, initial, terminal in self.edges)


def skeleton(view: SimplicialSetView) -> SkeletonGraph:
    """Extract the labeled 2-skeleton of a view.

    An edge runs from its 1st-face vertex to its 0th-face vertex; triangle
    corners are listed in vertex order.  Output ordering is deterministic:
    vertices ascending, edges and triangles by label.
    """
    vertices = tuple(label_of(v) for v in view.level(0))
    edges = []
    for e in view.nondegenerate(1):
        initial = view.act(face(1, 1), e)
        terminal = view.act(face(1, 0), e)
        edges.append((label_of(e), label_of(initial), label_of(terminal)))
    triangles = []
    for t in view.nondegenerate(2):
        corners = tuple(
            label_of(view.act(OrdinalMap(0, 2, (j,)), t)) for j in range(3)
        )
        triangles.append((label_of(t), corners))
    return SkeletonGraph(vertices, tuple(sorted(edges)), tuple(sorted(triangles)))


def eta(n: int, m: int) -> tuple[int, ...]:
    """The canonical cube vertex for m: n - m zeros followed by m ones."""
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    return (0,) * (n - m) + (1,) * m


def mu(n: int, v: tuple[int, ...]) -> int:
    """Collapse a cube vertex to 0..n: count positions from the first 1 on.

    The all-zero vertex collapses to 0, making ``mu`` inverse to ``eta`` on
    canonical vertices.
    """
    if len(v) != n:
        raise ValueError(f"expected a bit tuple of length {n}, got {v}")
    for j, bit in enumerate(v):
        if bit:
            return n - j
    return 0


def phi_map(n: int, sigma: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Send a simplex of the standard n-simplex into the n-cube of
    1-simplices, coordinatewise through ``eta``."""
    if n < 1:
        raise ValueError("the cube comparison needs n >= 1")
    columns = [eta(n, value) for value in sigma]
    return tuple(tuple(column[j] for column in columns) for j in range(n))


def psi_map(n: int, tau: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Collapse a simplex of the n-cube of 1-simplices back to the standard
    n-simplex, pointwise through ``mu``."""
    if n < 1:
        raise ValueError("the cube comparison needs n >= 1")
    if len(tau) != n:
        raise ValueError(f"expected {n} coordinate strings, got {len(tau)}")
    length = len(tau[0])
    for coordinate in tau:
        if len(coordinate) != length:
            raise ValueError("coordinate strings must share one length")
    return tuple(
        mu(n, tuple(coordinate[t] for coordinate in tau)) for t in range(length)
    )


@dataclass(frozen=True)
class GammaReport:
    n: int
    passed: bool
    checked: int
    counterexample: str | None = None


def gamma_check(n: int) -> GammaReport:
    """Verify the collapse-to-canonical comparison on the n-cube.

    Every vertex must sit below its canonical vertex ``eta(mu(v))``
    componentwise, and the assignment must respect the product order, so
    the comparisons assemble into a natural family.
    """
    if n > 10:
        raise ValueError("gamma_check is intended for n <= 10")
    vertices = list(iter_product((0, 1), repeat=n))
    checked = 0
    for v in vertices:
        checked += 1
        target = eta(n, mu(n, v))
        if any(a > b for a, b in zip(v, target)):
            return GammaReport(n, False, checked, f"{v} is not below {target}")
    for v, w in iter_product(vertices, repeat=2):
        if any(a > b for a, b in zip(v, w)):
            continue
        checked += 1
        ev, ew = eta(n, mu(n, v)), eta(n, mu(n, w))
        if any(a > b for a, b in zip(ev, ew)):
            return GammaReport(
                n, False, checked, f"{v} <= {w} but {ev} is not below {ew}"
            )
    return GammaReport(n, True, checked)
