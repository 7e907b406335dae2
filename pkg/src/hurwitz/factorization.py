"""Transposition factorizations and the Hurwitz move calculus.

A factorization of degree ``n`` is a finite sequence of factors, each either
a transposition ``(a, b)`` with ``1 <= a < b <= n`` or the identity marker
``None`` (written ``e`` in text form).  The product is taken left to right.

The two elementary rewrites are indexed by the left slot of the pair they
touch (0-based):

* forward at ``k``:   ``..., s, t, ...  ->  ..., s t s^-1, s, ...``
* inverse at ``k``:   ``..., s, t, ...  ->  ..., t, t^-1 s t, ...``

Both preserve the left-to-right product.  Conjugating a transposition by a
transposition yields a transposition, and the identity marker conjugates to
whatever it is conjugated against, so the factor alphabet is closed under
both moves.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Optional, Sequence

from .errors import FormatError, MoveRangeError, PreconditionError
from .perm import Permutation, transposition_product

# A factor: a normalized transposition (a < b) or None for the identity.
Factor = Optional[tuple[int, int]]


def normalize_factor(factor: Factor, degree: int) -> Factor:
    """Validate a single factor against ``degree`` and order its entries.

    >>> normalize_factor((5, 2), 6)
    (2, 5)
    >>> normalize_factor(None, 6) is None
    True
    """
    if factor is None:
        return None
    a, b = factor
    if a > b:
        a, b = b, a
    if a < 1 or b > degree:
        raise PreconditionError(
            f"factor ({factor[0]},{factor[1]}) out of range for degree {degree}"
        )
    if a == b:
        raise PreconditionError(f"factor ({a},{b}) is not a transposition")
    return (a, b)


def conjugate_factor(s: Factor, t: Factor) -> Factor:
    """Return ``s t s^-1`` as a normalized factor.

    Transpositions are involutions, so this is ``s t s``: apply ``s`` to both
    entries of ``t``.  Conjugating by or against the identity changes nothing.

    >>> conjugate_factor((1, 2), (2, 3))
    (1, 3)
    >>> conjugate_factor((1, 2), (3, 4))
    (3, 4)
    >>> conjugate_factor((1, 2), (1, 2))
    (1, 2)
    """
    if s is None or t is None:
        return t
    a, b = s
    c, d = t
    c = b if c == a else a if c == b else c
    d = b if d == a else a if d == b else d
    return (c, d) if c < d else (d, c)


@dataclass(frozen=True)
class Factorization:
    """An immutable factor sequence over the points ``1..degree``.

    ``factors`` is normalized on construction: each transposition is stored
    with its smaller entry first, and every entry is range-checked.
    """

    degree: int
    factors: tuple[Factor, ...]

    def __init__(self, degree: int, factors: Iterable[Factor]):
        if degree < 1:
            raise PreconditionError(f"degree must be positive, got {degree}")
        normalized = tuple(normalize_factor(f, degree) for f in factors)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "factors", normalized)

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self) -> Iterator[Factor]:
        return iter(self.factors)

    def __getitem__(self, i: int) -> Factor:
        return self.factors[i]

    def product(self) -> Permutation:
        """Left-to-right product of the factors as a permutation."""
        return transposition_product(self.degree, self.factors)

    def is_identity_factorization(self) -> bool:
        """True when the product is the identity permutation."""
        return self.product().is_identity()

    def identity_factor_count(self) -> int:
        return sum(1 for f in self.factors if f is None)

    def __str__(self) -> str:
        return format_factorization(self)


class Direction(Enum):
    """Orientation of an elementary move."""

    FORWARD = "F"
    INVERSE = "I"


@dataclass(frozen=True)
class HurwitzMove:
    """An elementary move: direction plus the 0-based left slot it acts on."""

    direction: Direction
    position: int

    def inverted(self) -> "HurwitzMove":
        flip = Direction.INVERSE if self.direction is Direction.FORWARD else Direction.FORWARD
        return HurwitzMove(flip, self.position)

    def __str__(self) -> str:
        return f"{self.direction.value}@{self.position}"


# A replayable move sequence; positions are relative to the evolving
# factorization, standard replay semantics.
MoveCertificate = tuple[HurwitzMove, ...]


def forward(position: int) -> HurwitzMove:
    return HurwitzMove(Direction.FORWARD, position)


def inverse(position: int) -> HurwitzMove:
    return HurwitzMove(Direction.INVERSE, position)


def apply_move(factorization: Factorization, move: HurwitzMove) -> Factorization:
    """Apply one elementary move, returning a new factorization.

    >>> f = Factorization(3, [(1, 2), (2, 3)])
    >>> apply_move(f, forward(0)).factors
    ((1, 3), (1, 2))
    >>> apply_move(f, inverse(0)).factors
    ((2, 3), (1, 3))
    """
    k = move.position
    m = len(factorization.factors)
    if k < 0 or k + 1 >= m:
        raise MoveRangeError(
            f"move {move} out of range for length {m} (valid positions 0..{m - 2})"
        )
    factors = list(factorization.factors)
    s, t = factors[k], factors[k + 1]
    if move.direction is Direction.FORWARD:
        factors[k], factors[k + 1] = conjugate_factor(s, t), s
    else:
        factors[k], factors[k + 1] = t, conjugate_factor(t, s)
    result = Factorization.__new__(Factorization)
    object.__setattr__(result, "degree", factorization.degree)
    object.__setattr__(result, "factors", tuple(factors))
    return result


def apply_certificate(
    factorization: Factorization, moves: Sequence[HurwitzMove]
) -> Factorization:
    """Replay a move sequence left to right.

    A move whose position falls outside the current length raises
    MoveRangeError naming the offending index within ``moves``.
    """
    degree = factorization.degree
    factors = list(factorization.factors)
    m = len(factors)
    for i, move in enumerate(moves):
        k = move.position
        if k < 0 or k + 1 >= m:
            raise MoveRangeError(
                f"move {i} ({move}) out of range for length {m}"
            )
        s, t = factors[k], factors[k + 1]
        if move.direction is Direction.FORWARD:
            factors[k], factors[k + 1] = conjugate_factor(s, t), s
        else:
            factors[k], factors[k + 1] = t, conjugate_factor(t, s)
    result = Factorization.__new__(Factorization)
    object.__setattr__(result, "degree", degree)
    object.__setattr__(result, "factors", tuple(factors))
    return result


def invert_certificate(moves: Sequence[HurwitzMove]) -> MoveCertificate:
    """Reverse the sequence and flip each move's direction.

    Replaying the result undoes the original certificate exactly.
    """
    return tuple(move.inverted() for move in reversed(moves))


def evaluate_product(factorization: Factorization) -> Permutation:
    """Product of the factors, left to right."""
    return factorization.product()


# Text form: "n=6; [(2,6),(1,4),e,(4,5)]".  Whitespace is insignificant
# everywhere outside tokens; the factor list may be empty.

_HEADER_RE = re.compile(r"\s*n\s*=\s*(\d+)\s*;\s*\[")
_PAIR_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_factorization(text: str) -> Factorization:
    """Parse the textual factorization form.

    >>> parse_factorization("n=3; [(1,2), e, (3,1)]").factors
    ((1, 2), None, (1, 3))
    """
    match = _HEADER_RE.match(text)
    if not match:
        raise FormatError(
            "expected factorization of the form 'n=<int>; [...]'", position=0
        )
    degree = int(match.group(1))
    pos = match.end()
    factors: list[Factor] = []
    expect_factor = True
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            raise FormatError("unterminated factor list", position=pos)
        ch = text[pos]
        if ch == "]":
            if factors and expect_factor:
                raise FormatError("trailing comma in factor list", position=pos)
            pos += 1
            break
        if not expect_factor:
            if ch != ",":
                raise FormatError(
                    f"expected ',' or ']' but found {ch!r}", position=pos
                )
            pos += 1
            expect_factor = True
            continue
        if ch == "e":
            factors.append(None)
            pos += 1
        elif ch == "(":
            m = _PAIR_RE.match(text, pos)
            if not m:
                raise FormatError("malformed transposition", position=pos)
            a, b = int(m.group(1)), int(m.group(2))
            try:
                factors.append(normalize_factor((a, b), degree))
            except PreconditionError as exc:
                raise FormatError(str(exc), position=pos) from exc
            pos = m.end()
        else:
            raise FormatError(
                f"expected '(', 'e', or ']' but found {ch!r}", position=pos
            )
        expect_factor = False
    tail = text[pos:].strip()
    if tail:
        raise FormatError(
            f"unexpected trailing content {tail!r}", position=pos
        )
    return Factorization(degree, factors)


def format_factorization(factorization: Factorization) -> str:
    """Render the canonical text form, inverse to parse_factorization.

    >>> format_factorization(Factorization(3, [(1, 2), None, (1, 3)]))
    'n=3; [(1,2),e,(1,3)]'
    """
    parts = [
        "e" if f is None else f"({f[0]},{f[1]})" for f in factorization.factors
    ]
    return f"n={factorization.degree}; [{','.join(parts)}]"


_MOVE_RE = re.compile(r"([FI])\s*@\s*(\d+)$")


def parse_certificate(text: str) -> list[HurwitzMove]:
    """Parse a certificate: one move per line, blank lines and '#' comments
    are skipped.

    >>> [str(m) for m in parse_certificate("F@0\\n# comment\\nI@2\\n")]
    ['F@0', 'I@2']
    """
    moves: list[HurwitzMove] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _MOVE_RE.match(line)
        if not m:
            raise FormatError(
                f"malformed move {line!r} on line {lineno}", position=lineno
            )
        direction = Direction.FORWARD if m.group(1) == "F" else Direction.INVERSE
        moves.append(HurwitzMove(direction, int(m.group(2))))
    return moves


def format_certificate(moves: Sequence[HurwitzMove]) -> str:
    """One move per line; empty sequence renders as the empty string."""
    return "\n".join(str(move) for move in moves)
