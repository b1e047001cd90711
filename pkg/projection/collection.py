import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterator, List, Tuple

from errors import NotExceptional
from hom import GradedDim, LineBundle, ObjectSpec, hom
from lattice import D, E, F, DivisorClass, H
from objects import N_POINTS


@dataclass(frozen=True)
class ExceptionalCollection:
    objects: Tuple[ObjectSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        self.verify()

    @staticmethod
    def default() -> 'ExceptionalCollection':
        """<O(-2F), O(-F), O(-D_1), ..., O(-D_10), O>."""
        classes = [-2 * F(), -F()] + [-D(i) for i in range(1, N_POINTS + 1)] + [DivisorClass.zero()]
        return ExceptionalCollection(tuple(LineBundle(c) for c in classes))

    @staticmethod
    def single(obj: ObjectSpec) -> 'ExceptionalCollection':
        return ExceptionalCollection((obj,))

    @staticmethod
    def empty() -> 'ExceptionalCollection':
        return ExceptionalCollection(())

    def __len__(self):
        return len(self.objects)

    def __iter__(self) -> Iterator[ObjectSpec]:
        return iter(self.objects)

    def __getitem__(self, i: int) -> ObjectSpec:
        return self.objects[i]

    def verify(self):
        """Hom*(E_i, E_i) = C and Hom*(E_j, E_i) = 0 for i < j."""
        for i, a in enumerate(self.objects):
            found = hom(a, a)
            if found != GradedDim.of({0: 1}):
                raise NotExceptional(i + 1, i + 1, found)
            for j in range(i + 1, len(self.objects)):
                found = hom(self.objects[j], a)
                if not found.is_zero():
                    raise NotExceptional(j + 1, i + 1, found)
        logging.debug(f"verified exceptional collection of length {len(self.objects)}")

    @cached_property
    def forward_homs(self) -> Dict[Tuple[int, int], GradedDim]:
        """Hom*(E_a, E_b) for a < b."""
        n = len(self.objects)
        return {(a, b): hom(self.objects[a], self.objects[b]) for a in range(n) for b in range(a + 1, n)}


def generator_objects(use_line_class: bool = False) -> List[LineBundle]:
    """<O, O(E_1), ..., O(E_10), O(F), O(2F)>; with ``use_line_class`` F is replaced by H."""
    top = H() if use_line_class else F()
    classes = [DivisorClass.zero()] + [E(i) for i in range(1, N_POINTS + 1)] + [top, 2 * top]
    return [LineBundle(c) for c in classes]


def is_exceptional(objects: List[ObjectSpec]) -> bool:
    try:
        ExceptionalCollection(tuple(objects))
    except NotExceptional as e:
        logging.info(f"not exceptional: {e}")
        return False
    return True
