"""Words in the standard generators of the braid group Br_n.

A word is a finite sequence of signed generator letters: the integer +i
stands for the generator sigma_i (1 <= i <= n-1), -i for its inverse.
Composition is concatenation in writing order, so ``u * v`` means "u then
v".  ``(s)^b`` -- conjugation on the right -- is ``b^-1 * s * b``.

All values are immutable; every operation returns a fresh word.  The
canonical JSON form of a word is ``{"n": strand_count, "word": [..]}``
with the signed-letter encoding above, e.g. sigma_1^3 in Br_6 is
``{"n": 6, "word": [1, 1, 1]}``.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Iterator


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """A word in the generators sigma_1 .. sigma_{n-1} of Br_n."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"strand count must be positive, got {self.n}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter == 0 or abs(letter) > self.n - 1:
                raise ValueError(
                    f"letter {letter} out of range for {self.n} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def __repr__(self) -> str:
        return f"BraidWord(n={self.n}, letters={list(self.letters)})"

    def inverse(self) -> "BraidWord":
        return invert(self)

    def conjugated_by(self, b: "BraidWord") -> "BraidWord":
        return conjugate_right(self, b)

    def to_json(self) -> dict:
        return {"n": self.n, "word": list(self.letters)}

    @staticmethod
    def from_json(data: dict) -> "BraidWord":
        return BraidWord(int(data["n"]), tuple(int(x) for x in data["word"]))


def word(n: int, *letters: int) -> BraidWord:
    """Shorthand constructor: ``word(3, 1, 2, -1)`` is sigma_1 sigma_2 sigma_1^-1."""
    return BraidWord(n, letters)


def identity(n: int) -> BraidWord:
    return BraidWord(n, ())


def generator(n: int, i: int, sign: int = 1) -> BraidWord:
    return BraidWord(n, (i if sign > 0 else -i,))


def _check_same_n(u: BraidWord, v: BraidWord) -> None:
    if u.n != v.n:
        raise ValueError(f"strand-count mismatch: {u.n} vs {v.n}")


def reduce_free(w: BraidWord) -> BraidWord:
    """Remove all adjacent cancelling pairs sigma_i sigma_i^-1 / sigma_i^-1 sigma_i."""
    stack: list[int] = []
    for letter in w.letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return BraidWord(w.n, tuple(stack))


def compose(u: BraidWord, v: BraidWord) -> BraidWord:
    """Concatenation in writing order: u then v."""
    _check_same_n(u, v)
    return BraidWord(u.n, u.letters + v.letters)


def compose_all(n: int, words: Iterable[BraidWord]) -> BraidWord:
    out = identity(n)
    for w in words:
        out = compose(out, w)
    return out


def invert(u: BraidWord) -> BraidWord:
    """Reverse the letter sequence and flip every sign."""
    return BraidWord(u.n, tuple(-letter for letter in reversed(u.letters)))


def power(u: BraidWord, m: int) -> BraidWord:
    """u^m by letter repetition (powers are stored fully unrolled)."""
    base = u if m >= 0 else invert(u)
    return BraidWord(u.n, base.letters * abs(m))


def conjugate_right(s: BraidWord, b: BraidWord) -> BraidWord:
    """Right conjugation (s)^b = b^-1 s b, freely reduced."""
    _check_same_n(s, b)
    return reduce_free(compose(compose(invert(b), s), b))


def permutation_image(w: BraidWord) -> tuple[int, ...]:
    """The image of w under Br_n -> S_n, as a tuple of 0-based images.

    Entry p[i] is the end position of the strand starting at position i;
    the map is a homomorphism for writing-order composition.
    """
    perm = list(range(w.n))
    for letter in w.letters:
        i = abs(letter) - 1
        # a generator and its inverse induce the same transposition
        perm = [i + 1 if p == i else i if p == i + 1 else p for p in perm]
    return tuple(perm)
