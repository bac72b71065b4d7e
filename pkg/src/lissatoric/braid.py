"""
Braid words over the Artin generators.

A word on ``n`` strands is a sequence of letters ``(i, e)`` with ``1 <= i <= n-1``
and ``e = ±1``, standing for ``σ_i^e``.  Generator indices are 1-based as in the
usual notation; strand *positions* are 0-based, so ``σ_i`` exchanges positions
``i-1`` and ``i``.

Words are read left to right along the braid: the leftmost letter acts first.
Consequently the permutation of a product satisfies

    permutation(compose(a, b)) == permutation(a).then(permutation(b))

where ``x.then(y)`` applies ``x`` first.  Position 0 is the top strand.

Only free cancellation is performed (``free_reduce``); deciding braid equality
in general is left to invariant comparison.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ParameterError, StrandMismatchError

Letter = tuple[int, int]

_TOKEN = re.compile(r"s(\d+)(\^-1)?")


@dataclass(frozen=True)
class Permutation:
    """A bijection on ``{0, ..., n-1}``; ``images[j]`` is where position ``j`` goes."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ParameterError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> Permutation:
        images = list(range(n))
        images[a], images[b] = images[b], images[a]
        return cls(tuple(images))

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j]

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other``."""
        return Permutation(tuple(other.images[x] for x in self.images))

    def __pow__(self, k: int) -> Permutation:
        result = Permutation.identity(len(self))
        for _ in range(k):
            result = result.then(self)
        return result

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self)
        out = []
        for start in range(len(self)):
            if seen[start]:
                continue
            cycle = []
            j = start
            while not seen[j]:
                seen[j] = True
                cycle.append(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def is_identity(self) -> bool:
        return all(j == x for j, x in enumerate(self.images))


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ParameterError(f"a braid needs at least one strand, got {self.strands}")
        letters = tuple((int(i), int(e)) for i, e in self.letters)
        for i, e in letters:
            if not 1 <= i <= self.strands - 1:
                raise ParameterError(f"generator index {i} out of range for {self.strands} strands")
            if e not in (1, -1):
                raise ParameterError(f"letter exponent must be ±1, got {e}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def identity(cls, strands: int) -> BraidWord:
        return cls(strands, ())

    @classmethod
    def parse(cls, text: str, strands: int | None = None) -> BraidWord:
        """Parse ``"s2 s1^-1 s2^-1 s1"``.

        If ``strands`` is omitted, the smallest strand count that fits is used.
        """
        letters = []
        for token in text.split():
            m = _TOKEN.fullmatch(token)
            if m is None:
                raise ParameterError(f"bad braid token {token!r}")
            letters.append((int(m.group(1)), -1 if m.group(2) else 1))
        if strands is None:
            strands = max((i for i, _ in letters), default=0) + 1
        return cls(strands, tuple(letters))

    def __str__(self) -> str:
        return " ".join(f"s{i}" if e > 0 else f"s{i}^-1" for i, e in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __pow__(self, d: int) -> BraidWord:
        return power(self, d)


def word(strands: int, letters: Iterable[Letter]) -> BraidWord:
    return BraidWord(strands, tuple(letters))


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strands != b.strands:
        raise StrandMismatchError(f"cannot compose braids on {a.strands} and {b.strands} strands")
    return BraidWord(a.strands, a.letters + b.letters)


def product(words: Sequence[BraidWord], strands: int) -> BraidWord:
    letters: list[Letter] = []
    for w in words:
        if w.strands != strands:
            raise StrandMismatchError(f"expected {strands} strands, got {w.strands}")
        letters.extend(w.letters)
    return BraidWord(strands, tuple(letters))


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple((i, -e) for i, e in reversed(w.letters)))


def mirror(w: BraidWord) -> BraidWord:
    """Flip every crossing; the closure becomes the mirror link."""
    return BraidWord(w.strands, tuple((i, -e) for i, e in w.letters))


def power(w: BraidWord, d: int) -> BraidWord:
    if d < 0:
        raise ParameterError(f"power exponent must be non-negative, got {d}")
    return BraidWord(w.strands, w.letters * d)


def permutation(w: BraidWord) -> Permutation:
    """Underlying permutation of positions, leftmost letter first."""
    # where[j]: current position of the strand that started at position j
    where = list(range(w.strands))
    at = list(range(w.strands))
    for i, _ in w.letters:
        a, b = at[i - 1], at[i]
        at[i - 1], at[i] = b, a
        where[a], where[b] = i, i - 1
    return Permutation(tuple(where))


def exponent_sum(w: BraidWord) -> int:
    return sum(e for _, e in w.letters)


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[Letter] = []
    for i, e in w.letters:
        if stack and stack[-1] == (i, -e):
            stack.pop()
        else:
            stack.append((i, e))
    return BraidWord(w.strands, tuple(stack))
