from dataclasses import dataclass
from typing import Sequence, Tuple

from errors import LatticeError
from objects import N_POINTS
from .divisor import DivisorClass


@dataclass(frozen=True)
class Permutation:
    """A bijection of the point labels 1..10; ``images[i-1]`` is the image of ``i``."""
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, N_POINTS + 1)):
            raise LatticeError(f"Invalid permutation {images}: not a bijection of 1..{N_POINTS}")
        object.__setattr__(self, "images", images)

    @staticmethod
    def identity() -> 'Permutation':
        return Permutation(tuple(range(1, N_POINTS + 1)))

    @staticmethod
    def transposition(i: int, j: int) -> 'Permutation':
        images = list(range(1, N_POINTS + 1))
        images[i - 1], images[j - 1] = j, i
        return Permutation(tuple(images))

    @staticmethod
    def from_sequence(seq: Sequence[int]) -> 'Permutation':
        return Permutation(tuple(seq))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: 'Permutation') -> 'Permutation':
        """``self`` after ``other``."""
        return Permutation(tuple(self(other(i)) for i in range(1, N_POINTS + 1)))

    def inverse(self) -> 'Permutation':
        inv = [0] * N_POINTS
        for i, image in enumerate(self.images, start=1):
            inv[image - 1] = i
        return Permutation(tuple(inv))


def permute(s: Permutation, d: DivisorClass) -> DivisorClass:
    # E_i -> E_{s(i)}
    e = [0] * N_POINTS
    for i, c in enumerate(d.e, start=1):
        e[s(i) - 1] = c
    return DivisorClass(h=d.h, e=tuple(e))
