"""The Hurwitz action of Br_n on n-tuples over a coefficient group.

The generator sigma_i sends (..., g_i, g_{i+1}, ...) to
(..., g_i g_{i+1} g_i^-1, g_i, ...); its inverse sends the pair to
(g_{i+1}, g_{i+1}^-1 g_i g_{i+1}).  Words act with letters applied right
to left, so act_word(u * v, T) = act_word(u, act_word(v, T)); equal braid
words induce the same map.

Orbits of tuples over a finite (or effectively finite) group are
enumerated with a deterministic breadth-first search over the positive
generators only -- on a finite orbit every sigma_i acts as a bijection,
so positive words already reach everything and the transversal consists
of positive braids.  The search is serial and deterministic (generator
index ascending, FIFO queue); any parallel replacement must reproduce
its exact output.
"""

from __future__ import annotations

import dataclasses
from collections import deque
from typing import Callable, Sequence

from .words import BraidWord, compose, invert

System = tuple  # an n-tuple of coefficient-group values

DEFAULT_ORBIT_CAP = 10**6


class OrbitCapExceeded(RuntimeError):
    """Raised when orbit enumeration exceeds its state cap."""

    def __init__(self, cap: int, seen: int):
        super().__init__(f"orbit exceeded cap of {cap} states ({seen} found)")
        self.cap = cap
        self.seen = seen


def act_letter(i: int, sign: int, system: System) -> System:
    """Apply sigma_i (sign +1) or sigma_i^-1 (sign -1) to the tuple."""
    if not 1 <= i <= len(system) - 1:
        raise ValueError(f"generator index {i} out of range for length {len(system)}")
    g, h = system[i - 1], system[i]
    if sign > 0:
        pair = ((g * h) * g.inverse(), g)
    else:
        pair = (h, (h.inverse() * g) * h)
    return system[: i - 1] + pair + system[i + 1 :]


def act_word(w: BraidWord, system: System) -> System:
    """Apply a braid word, rightmost letter first."""
    if w.n != len(system):
        raise ValueError(f"arity mismatch: word on {w.n} strands, tuple of length {len(system)}")
    for letter in reversed(w.letters):
        system = act_letter(abs(letter), 1 if letter > 0 else -1, system)
    return system


def stabilizes(w: BraidWord, system: System) -> bool:
    return act_word(w, system) == system


def ordered_product(system: System):
    """The product g_1 g_2 ... g_n, which every Hurwitz move preserves."""
    out = system[0]
    for g in system[1:]:
        out = out * g
    return out


@dataclasses.dataclass(frozen=True)
class OrbitTable:
    """A Br_n orbit with a positive Schreier transversal.

    ``transversal`` maps each orbit element to the first-discovered
    positive word w with act_word(w, base) = element.  Words grow by
    prepending the applied generator (the leftmost letter acts last), so
    the word set is closed under removing the leftmost letter: every
    stage of a transversal word is again a transversal word.
    """

    base: System
    n: int
    transversal: dict[System, BraidWord]

    @property
    def elements(self) -> Sequence[System]:
        return list(self.transversal.keys())

    def __len__(self) -> int:
        return len(self.transversal)

    def words(self) -> list[BraidWord]:
        return list(self.transversal.values())

    def to_json(self, render: Callable) -> list[dict]:
        return [
            {"element": [render(g) for g in elt], "word": w.to_json()}
            for elt, w in self.transversal.items()
        ]


def orbit(base: System, cap: int = DEFAULT_ORBIT_CAP) -> OrbitTable:
    """Breadth-first closure of the base tuple under sigma_1 .. sigma_{n-1}."""
    n = len(base)
    transversal: dict[System, BraidWord] = {base: BraidWord(n, ())}
    queue: deque[System] = deque([base])
    while queue:
        current = queue.popleft()
        current_word = transversal[current]
        for i in range(1, n):
            image = act_letter(i, 1, current)
            if image not in transversal:
                if len(transversal) >= cap:
                    raise OrbitCapExceeded(cap, len(transversal))
                transversal[image] = BraidWord(n, (i,) + current_word.letters)
                queue.append(image)
    return OrbitTable(base=base, n=n, transversal=transversal)


def schreier_generators(table: OrbitTable) -> list[BraidWord]:
    """Stabilizer generators rep(sigma_i t)^-1 * (sigma_i t), one per
    (transversal word, generator) pair; every output fixes the base tuple."""
    out: list[BraidWord] = []
    for element, t_word in table.transversal.items():
        for i in range(1, table.n):
            image = act_letter(i, 1, element)
            extended = BraidWord(table.n, (i,) + t_word.letters)
            rep = table.transversal[image]
            out.append(compose(invert(rep), extended))
    return out
