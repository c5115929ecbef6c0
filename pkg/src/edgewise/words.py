"""Endofunctors on the simplex category as words over {Id, Op, C0}.

A word is a nonempty sequence of basis letters; it acts on an object by
joining one block per letter end to end (Id and Op contribute a copy of
the object, C0 a single point) and on maps letterwise through the same
join.  The ``+`` of two words is letter concatenation.  A word is fully
recoverable from the action of its functor on ``[0]``, ``[1]`` and the
three generator maps between them; ``decompose`` performs that recovery.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .duality import ordered_hom_delta
from .ordinals import (
    OrdinalMap,
    compose,
    concat_maps,
    degeneracy,
    face,
    identity,
    opposite,
    ordinal_maps,
)

ID = "Id"
OP = "Op"
C0 = "C0"
LETTERS = (ID, OP, C0)

FORWARD = "forward"
BACKWARD = "backward"
NONE = "none"


class WordParseError(ValueError):
    """The textual form of a word could not be parsed."""


class MalformedActionError(ValueError):
    """Generator data does not describe the action of any word."""


@dataclass(frozen=True)
class Word:
    """A nonempty sequence of basis letters.

    >>> str(Word.parse("Op + Id"))
    'Op+Id'
    """

    letters: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if not self.letters:
            raise ValueError("a word needs at least one letter")
        for letter in self.letters:
            if letter not in LETTERS:
                raise ValueError(f"unknown letter {letter!r}")

    @classmethod
    def parse(cls, text: str) -> "Word":
        parts = [part.strip() for part in text.split("+")]
        if not parts or any(not part for part in parts):
            raise WordParseError(f"cannot parse word from {text!r}")
        for part in parts:
            if part not in LETTERS:
                raise WordParseError(
                    f"unknown letter {part!r}; expected one of {', '.join(LETTERS)}"
                )
        return cls(tuple(parts))

    def __str__(self) -> str:
        return "+".join(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "Word") -> "Word":
        return sum_words(self, other)


def iter_words(max_len: int) -> Iterator[Word]:
    """All words of length 1..max_len, shortest first, letters in ID/OP/C0 order."""
    for length in range(1, max_len + 1):
        for letters in product(LETTERS, repeat=length):
            yield Word(letters)


def eval_object(w: Word, n: int) -> int:
    """Size of the word's value on ``[n]``.

    Each Id or Op block contributes ``n + 1`` elements, each C0 block one,
    and joining blocks adds sizes; the result is an object index again.
    """
    active = sum(1 for letter in w.letters if letter != C0)
    return active * n + len(w.letters) - 1


def _letter_map(letter: str, f: OrdinalMap) -> OrdinalMap:
    if letter == ID:
        return f
    if letter == OP:
        return opposite(f)
    return identity(0)


def eval_map(w: Word, f: OrdinalMap) -> OrdinalMap:
    """The word's value on a map: the end-to-end join of its letter actions."""
    result = None
    for letter in w.letters:
        piece = _letter_map(letter, f)
        result = piece if result is None else concat_maps(result, piece)
    return result


def sum_words(w1: Word, w2: Word) -> Word:
    """The word acting as the join of the two summands' actions."""
    return Word(w1.letters + w2.letters)


_OP_FLIP = {ID: OP, OP: ID, C0: C0}


def _compose_with_rule(outer: Word, inner: Word, op_flip: dict) -> Word:
    letters: list[str] = []
    for letter in outer.letters:
        if letter == ID:
            letters.extend(inner.letters)
        elif letter == C0:
            letters.append(C0)
        else:
            # Op reverses the join order of the inner blocks and flips each.
            letters.extend(op_flip[inner_letter] for inner_letter in reversed(inner.letters))
    return Word(tuple(letters))


def compose_words(outer: Word, inner: Word) -> Word:
    """The word whose action is ``outer`` applied after ``inner``.

    >>> str(compose_words(Word.parse("Op+Id"), Word.parse("Op+Id")))
    'Op+Id+Op+Id'
    """
    return _compose_with_rule(outer, inner, _OP_FLIP)


@dataclass(frozen=True)
class SimplicialInterval:
    """A zigzag: ordered vertices with one directed edge or gap between
    consecutive ones."""

    vertex_count: int
    gaps: tuple[str, ...]

    def __post_init__(self):
        if self.vertex_count < 2:
            raise ValueError("an interval needs at least two vertices")
        if len(self.gaps) != self.vertex_count - 1:
            raise ValueError("need exactly one gap entry per consecutive pair")
        for gap in self.gaps:
            if gap not in (FORWARD, BACKWARD, NONE):
                raise ValueError(f"unknown gap direction {gap!r}")

    @property
    def connected(self) -> bool:
        return NONE not in self.gaps


_GAP_OF_LETTER = {ID: FORWARD, OP: BACKWARD, C0: NONE}


def interval_of(w: Word) -> SimplicialInterval:
    """The zigzag the word induces on the 1-simplex.

    Vertices are the monotone maps from the word's value on ``[0]`` to
    ``[1]`` in ascending order; ascending gap ``g`` is governed by the
    letter at position ``len(w) - 1 - g``, because the ascending order on
    those maps reads the letter blocks from the right.
    """
    gaps = tuple(
        _GAP_OF_LETTER[w.letters[len(w.letters) - 1 - g]] for g in range(len(w.letters))
    )
    return SimplicialInterval(eval_object(w, 0) + 2, gaps)


@dataclass(frozen=True)
class GeneratorAction:
    """A functor's footprint on the 1-simplex generators.

    Holds the sizes of the values on ``[0]`` and ``[1]`` together with the
    images of the two faces ``[0] -> [1]`` and of the degeneracy
    ``[1] -> [0]``.  For the action of a word this is exactly the data the
    decomposition consumes.
    """

    obj0: int
    obj1: int
    face0: OrdinalMap
    face1: OrdinalMap
    degeneracy: OrdinalMap

    def validate(self) -> None:
        """Raise MalformedActionError unless the data is functor-shaped."""
        for name, fmap, src, dst in (
            ("face0", self.face0, self.obj0, self.obj1),
            ("face1", self.face1, self.obj0, self.obj1),
            ("degeneracy", self.degeneracy, self.obj1, self.obj0),
        ):
            if fmap.src != src or fmap.dst != dst:
                raise MalformedActionError(
                    f"{name} must map [{src}] to [{dst}], got [{fmap.src}] to [{fmap.dst}]"
                )
        for name, fmap in (("face0", self.face0), ("face1", self.face1)):
            if compose(fmap, self.degeneracy) != identity(self.obj0):
                raise MalformedActionError(
                    f"degeneracy after {name} must be the identity on [{self.obj0}]"
                )


def generator_action(w: Word) -> GeneratorAction:
    """Package the word's values on ``[0]``, ``[1]`` and their generators."""
    return GeneratorAction(
        obj0=eval_object(w, 0),
        obj1=eval_object(w, 1),
        face0=eval_map(w, face(1, 0)),
        face1=eval_map(w, face(1, 1)),
        degeneracy=eval_map(w, degeneracy(0, 0)),
    )


def decompose(action: GeneratorAction) -> Word:
    """Recover the unique word whose generator action is ``action``.

    The vertices of the induced zigzag are the monotone maps from
    ``[obj0]`` to ``[1]`` in ascending order; the edges are the maps from
    ``[obj1]`` to ``[1]`` that do not factor through the degeneracy.  Each
    nondegenerate edge must join two consecutive vertices, no two edges may
    share a gap, and the letter for ascending gap ``g`` lands at word
    position ``obj0 - g``.
    """
    action.validate()
    n = action.obj0
    vertices = ordered_hom_delta(n)
    vertex_index = {v.values: i for i, v in enumerate(vertices)}
    gap_direction: dict[int, str] = {}
    for edge in ordinal_maps(action.obj1, 1):
        if any(compose(action.degeneracy, v) == edge for v in vertices):
            continue
        initial = vertex_index[compose(action.face1, edge).values]
        terminal = vertex_index[compose(action.face0, edge).values]
        if abs(initial - terminal) != 1:
            raise MalformedActionError(
                f"edge {edge.values} joins vertices {initial} and {terminal}, "
                "which are not consecutive"
            )
        gap = min(initial, terminal)
        if gap in gap_direction:
            raise MalformedActionError(f"two nondegenerate edges across gap {gap}")
        gap_direction[gap] = FORWARD if terminal > initial else BACKWARD
    letters = []
    for position in range(n + 1):
        direction = gap_direction.get(n - position)
        if direction == FORWARD:
            letters.append(ID)
        elif direction == BACKWARD:
            letters.append(OP)
        else:
            letters.append(C0)
    word = Word(tuple(letters))
    if generator_action(word) != action:
        raise MalformedActionError("data is not the generator action of any word")
    return word


def is_we_preserving(w: Word) -> bool:
    """Whether the induced subdivision preserves weak equivalences:
    true exactly when no letter is C0."""
    return C0 not in w.letters
