"""Braid-side factor tuples and their projection to transpositions.

A braid word on ``n`` strands is a free word in the standard generators,
stored as a sequence of nonzero indices: ``i`` stands for sigma_i
(``1 <= i <= n-1``) and ``-i`` for its inverse.  Words are never reduced;
equality in the braid group is out of scope, and every check routes through
the projection into the symmetric group.

Projection sends each letter, sign ignored, to the transposition
``(i, i+1)``; a word projects to the left-to-right product of its letters'
images.  A tuple of words projects slot-wise to a factorization when each
word's image is a transposition or the identity.

The word-level elementary move conjugates by concatenation:

* forward at ``k``:   ``..., u, v, ...  ->  ..., u v u^-1, u, ...``
* inverse at ``k``:   ``..., u, v, ...  ->  ..., v, v^-1 u v, ...``

where ``w^-1`` reverses ``w`` and negates each letter.  Lengths grow under
moves by design; projection commutes with moves slot by slot.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import FormatError, MoveRangeError, PreconditionError
from .factorization import Direction, Factor, Factorization, HurwitzMove
from .perm import Permutation, transposition_product


@dataclass(frozen=True)
class BraidWord:
    """A free word in the braid generators on ``degree`` strands."""

    degree: int
    letters: tuple[int, ...]

    def __init__(self, degree: int, letters: Iterable[int]):
        if degree < 1:
            raise PreconditionError(f"degree must be positive, got {degree}")
        letters = tuple(letters)
        for x in letters:
            if x == 0 or abs(x) >= degree:
                raise PreconditionError(
                    f"letter {x} out of range for degree {degree} "
                    f"(valid magnitudes 1..{degree - 1})"
                )
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "letters", letters)

    def inverse(self) -> "BraidWord":
        """Reverse the word and negate each letter."""
        return BraidWord(self.degree, tuple(-x for x in reversed(self.letters)))

    def concat(self, other: "BraidWord") -> "BraidWord":
        if other.degree != self.degree:
            raise PreconditionError(
                f"degree mismatch: {self.degree} vs {other.degree}"
            )
        return BraidWord(self.degree, self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class BraidTuple:
    """A sequence of braid words on a common degree."""

    degree: int
    words: tuple[BraidWord, ...]

    def __init__(self, degree: int, words: Iterable[BraidWord]):
        words = tuple(words)
        for w in words:
            if w.degree != degree:
                raise PreconditionError(
                    f"word of degree {w.degree} in a degree-{degree} tuple"
                )
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "words", words)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[BraidWord]:
        return iter(self.words)


def project_word(word: BraidWord) -> Permutation:
    """Image of a word in the symmetric group.

    Each letter maps to the transposition swapping its strand pair,
    regardless of sign (a transposition is its own inverse).

    >>> project_word(BraidWord(3, (1, 2, -1))).images
    (3, 2, 1)
    >>> project_word(BraidWord(3, ())).is_identity()
    True
    """
    return transposition_product(
        word.degree, ((abs(x), abs(x) + 1) for x in word.letters)
    )


def _projection_factor(word: BraidWord) -> Factor:
    perm = project_word(word)
    moved = [i for i in range(1, perm.degree + 1) if perm(i) != i]
    if not moved:
        return None
    if len(moved) == 2:
        return (moved[0], moved[1])
    raise PreconditionError(
        "projects to a permutation that is neither a transposition "
        "nor the identity"
    )


def project_tuple(braid: BraidTuple) -> Factorization:
    """Project every word to a factor.

    A word whose image is neither a transposition nor the identity makes the
    tuple unprojectable; the error names the offending word index.

    >>> t = BraidTuple(3, [BraidWord(3, (1,)), BraidWord(3, (2, 2))])
    >>> project_tuple(t).factors
    ((1, 2), None)
    """
    factors: list[Factor] = []
    for i, word in enumerate(braid.words):
        try:
            factors.append(_projection_factor(word))
        except PreconditionError as exc:
            raise PreconditionError(f"word {i}: {exc}") from exc
    return Factorization(braid.degree, factors)


def braid_hurwitz_move(braid: BraidTuple, move: HurwitzMove) -> BraidTuple:
    """Apply one elementary move at the word level.  No reduction happens.

    >>> b = BraidTuple(3, [BraidWord(3, (1,)), BraidWord(3, (2,))])
    >>> moved = braid_hurwitz_move(b, HurwitzMove(Direction.FORWARD, 0))
    >>> [w.letters for w in moved.words]
    [(1, 2, -1), (1,)]
    """
    k = move.position
    m = len(braid.words)
    if k < 0 or k + 1 >= m:
        raise MoveRangeError(
            f"move {move} out of range for length {m} (valid positions 0..{m - 2})"
        )
    words = list(braid.words)
    u, v = words[k], words[k + 1]
    if move.direction is Direction.FORWARD:
        words[k], words[k + 1] = u.concat(v).concat(u.inverse()), u
    else:
        words[k], words[k + 1] = v, v.inverse().concat(u).concat(v)
    return BraidTuple(braid.degree, words)


# Text form: "n=3; [1 2 -1 | 2]" with words separated by '|', letters
# space-separated signed integers.  A segment with no letters is the empty
# word, so "[ | 2]" has two words.  "[]" is the empty tuple; a tuple holding
# a single empty word prints the same way and parses back as empty.

_TUPLE_RE = re.compile(r"n\s*=\s*(\d+)\s*;\s*\[(.*)\]\s*$", re.DOTALL)


def parse_braid_tuple(text: str) -> BraidTuple:
    """Parse the textual braid tuple form.

    >>> b = parse_braid_tuple("n=3; [1 2 -1 | 2]")
    >>> [w.letters for w in b.words]
    [(1, 2, -1), (2,)]
    """
    match = _TUPLE_RE.match(text.strip())
    if not match:
        raise FormatError(
            "expected braid tuple of the form 'n=<int>; [ ... ]'", position=0
        )
    degree = int(match.group(1))
    body = match.group(2).strip()
    if not body:
        return BraidTuple(degree, [])
    words = []
    for i, segment in enumerate(body.split("|")):
        letters = []
        for token in segment.split():
            try:
                x = int(token)
            except ValueError:
                raise FormatError(
                    f"word {i}: invalid letter {token!r}", position=i
                ) from None
            letters.append(x)
        try:
            words.append(BraidWord(degree, letters))
        except PreconditionError as exc:
            raise FormatError(f"word {i}: {exc}", position=i) from exc
    return BraidTuple(degree, words)


def format_word(word: BraidWord) -> str:
    return " ".join(str(x) for x in word.letters)


def format_braid_tuple(braid: BraidTuple) -> str:
    """Render the text form, inverse to parse_braid_tuple.

    >>> format_braid_tuple(BraidTuple(3, [BraidWord(3, (1, 2, -1)), BraidWord(3, (2,))]))
    'n=3; [1 2 -1 | 2]'
    """
    body = " | ".join(format_word(w) for w in braid.words)
    return f"n={braid.degree}; [{body}]"
