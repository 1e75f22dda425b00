"""Coefficient groups acted on by the Hurwitz action.

Two groups are used throughout: the symmetric group on three letters,
generated by the transpositions s = (1 2) and t = (2 3) with r = (1 3)
the third transposition, and the three-strand braid group presented on
two generators a, b with a b a = b a b.  Both expose the same value
interface -- multiplication, inversion, equality and hashing -- so tuples
over either group can be enumerated and hashed by the orbit machinery.

Elements are immutable values; all operations are pure.
"""

from __future__ import annotations

import dataclasses
from typing import Protocol, runtime_checkable

from . import garside
from .words import BraidWord


@runtime_checkable
class GroupElement(Protocol):
    """What a coefficient-group value must provide:

    identity element, multiplication in writing order, inversion, and
    equality/hash agreeing with the group's element equality.
    """

    def __mul__(self, other): ...

    def inverse(self): ...

    def __hash__(self) -> int: ...


@dataclasses.dataclass(frozen=True)
class Perm3:
    """A permutation of {1, 2, 3}; images[i-1] is the image of i."""

    images: tuple[int, int, int]

    def __post_init__(self):
        if sorted(self.images) != [1, 2, 3]:
            raise ValueError(f"not a bijection of {{1,2,3}}: {self.images}")

    def __mul__(self, other: "Perm3") -> "Perm3":
        # writing order: apply self, then other
        return Perm3(tuple(other.images[x - 1] for x in self.images))

    def inverse(self) -> "Perm3":
        out = [0, 0, 0]
        for i, x in enumerate(self.images):
            out[x - 1] = i + 1
        return Perm3(tuple(out))

    def is_transposition(self) -> bool:
        return sum(1 for i, x in enumerate(self.images) if x != i + 1) == 2

    def render(self) -> str:
        return _PERM3_NAMES[self.images]

    def __repr__(self) -> str:
        return f"Perm3({self.render()})"


PERM3_E = Perm3((1, 2, 3))
PERM3_S = Perm3((2, 1, 3))
PERM3_T = Perm3((1, 3, 2))
PERM3_R = Perm3((3, 2, 1))

_PERM3_NAMES = {
    (1, 2, 3): "e",
    (2, 1, 3): "s",
    (1, 3, 2): "t",
    (3, 2, 1): "r",
    (PERM3_S * PERM3_T).images: "st",
    (PERM3_T * PERM3_S).images: "ts",
}
_PERM3_BY_NAME = {name: Perm3(images) for images, name in _PERM3_NAMES.items()}


def perm_from_letter(letter: str) -> Perm3:
    """The fixed convention s = (1 2), t = (2 3), r = (1 3) = s t s."""
    if letter not in ("s", "t", "r", "e"):
        raise ValueError(f"unknown letter {letter!r}")
    return _PERM3_BY_NAME[letter]


def perm_from_name(name: str) -> Perm3:
    if name not in _PERM3_BY_NAME:
        raise ValueError(f"unknown permutation name {name!r}")
    return _PERM3_BY_NAME[name]


@dataclasses.dataclass(frozen=True)
class Artin3:
    """An element of the two-generator group <a, b | a b a = b a b>.

    Realized inside Br_3 by a -> sigma_1, b -> sigma_2 and stored as a
    Garside normal form, so equality and hashing are canonical.
    """

    value: garside.NormalForm

    def __mul__(self, other: "Artin3") -> "Artin3":
        return Artin3(self.value * other.value)

    def inverse(self) -> "Artin3":
        return Artin3(self.value.inverse())

    def to_perm3(self) -> Perm3:
        """The image under the quotient a -> s, b -> t."""
        p = self.value.permutation()
        return Perm3(tuple(x + 1 for x in p))

    def render(self) -> str:
        out = []
        for letter in self.value.spelled_word().letters:
            name = "ab"[abs(letter) - 1]
            out.append(name if letter > 0 else name.upper())
        return "".join(out) or "1"

    def to_json(self) -> dict:
        return self.value.to_json()

    def __repr__(self) -> str:
        return f"Artin3({self.render()})"


ARTIN3_IDENTITY = Artin3(garside.normal_form(BraidWord(3, ())))


def artin_from_braid(w: BraidWord) -> Artin3:
    if w.n != 3:
        raise ValueError("Artin3 values live in the three-strand group")
    return Artin3(garside.normal_form(w))


def artin_from_word(text: str) -> Artin3:
    """Parse a word over a, b, with capitals for inverses: 'abA' = a b a^-1."""
    letters = []
    for ch in text:
        if ch in "aA":
            letters.append(1 if ch == "a" else -1)
        elif ch in "bB":
            letters.append(2 if ch == "b" else -2)
        elif ch in " 1":
            continue
        else:
            raise ValueError(f"unknown generator letter {ch!r}")
    return artin_from_braid(BraidWord(3, tuple(letters)))


ARTIN3_A = artin_from_word("a")
ARTIN3_B = artin_from_word("b")
