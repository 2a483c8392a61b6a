"""The symmetric group on five labels: enumeration, parity, root relabeling.

Action convention, fixed project-wide ("pull"):

    apply(p, rt)[i] = rt[p.image[i]]

and composition is defined so that
``apply(compose(p, q), rt) == apply(p, apply(q, rt))`` exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidInputError

__all__ = [
    "Perm5",
    "identity",
    "all_s5",
    "all_a5",
    "three_cycles",
    "apply",
    "compose",
    "inverse",
]


@dataclass(frozen=True)
class Perm5:
    """A permutation of {0..4}; ``image[i]`` is where position i reads from."""

    image: tuple[int, int, int, int, int]

    def __post_init__(self):
        image = tuple(int(i) for i in self.image)
        if sorted(image) != [0, 1, 2, 3, 4]:
            raise InvalidInputError(f"not a permutation of 0..4: {image}")
        object.__setattr__(self, "image", image)

    @property
    def parity(self) -> int:
        """+1 for even, -1 for odd, by inversion count."""
        inv = sum(
            1
            for i in range(5)
            for j in range(i + 1, 5)
            if self.image[i] > self.image[j]
        )
        return -1 if inv % 2 else 1

    def cycle_lengths(self) -> tuple[int, ...]:
        seen = [False] * 5
        lengths = []
        for start in range(5):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = self.image[j]
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths))


_IDENTITY = Perm5((0, 1, 2, 3, 4))
_S5 = tuple(Perm5(img) for img in itertools.permutations(range(5)))
_A5 = tuple(p for p in _S5 if p.parity == 1)
_THREE_CYCLES = tuple(p for p in _S5 if p.cycle_lengths() == (1, 1, 3))


def identity() -> Perm5:
    return _IDENTITY


def all_s5() -> list[Perm5]:
    """All 120 permutations, lexicographic by image array."""
    return list(_S5)


def all_a5() -> list[Perm5]:
    """The 60 even permutations, in the all_s5 order."""
    return list(_A5)


def three_cycles() -> list[Perm5]:
    """The 20 permutations cycling exactly 3 labels and fixing 2."""
    return list(_THREE_CYCLES)


def apply(p: Perm5, rt: Sequence):
    """Relabel a 5-tuple: position i of the result reads rt[p.image[i]]."""
    if len(rt) != 5:
        raise InvalidInputError("apply expects a 5-tuple")
    return tuple(rt[p.image[i]] for i in range(5))


def compose(p: Perm5, q: Perm5) -> Perm5:
    """Composition matching apply: apply(compose(p, q), rt) = apply(p, apply(q, rt))."""
    return Perm5(tuple(q.image[p.image[i]] for i in range(5)))


def inverse(p: Perm5) -> Perm5:
    img = [0] * 5
    for i, j in enumerate(p.image):
        img[j] = i
    return Perm5(tuple(img))
