import logging
from dataclasses import dataclass
from typing import List, Tuple

from errors import LatticeError
from .divisor import DivisorClass, canonical_form, clamp_exceptional


@dataclass(frozen=True)
class CremonaLogEntry:
    rule: str  # "clamp" or "step"
    indices: Tuple[int, ...]
    before: DivisorClass
    after: DivisorClass

    def to_dict(self):
        return {
            "rule": self.rule,
            "indices": list(self.indices),
            "before": str(self.before),
            "after": str(self.after),
        }


def cremona_step(d: DivisorClass, i: int, j: int, k: int) -> DivisorClass:
    """Quadratic transformation based at the points i, j, k (1-based)."""
    indices = (i, j, k)
    if len(set(indices)) != 3:
        raise LatticeError(f"Invalid Cremona indices {indices}: must be distinct")
    for idx in indices:
        if not 1 <= idx <= len(d.e):
            raise LatticeError(f"Invalid Cremona index {idx}")
    m = d.multiplicities
    s = sum(m[idx - 1] for idx in indices)
    new_m = list(m)
    for idx in indices:
        new_m[idx - 1] = d.degree - s + m[idx - 1]
    return DivisorClass.from_multiplicities(2 * d.degree - s, new_m)


def _step_preserves_dimension(d: DivisorClass) -> bool:
    # in canonical form the three largest multiplicities sit at 1, 2, 3
    degree, m = d.degree, d.multiplicities
    s = m[0] + m[1] + m[2]
    return all(degree - s + m[idx] >= 0 for idx in range(3))


def cremona_reduce(d: DivisorClass) -> Tuple[DivisorClass, List[CremonaLogEntry]]:
    """Apply Cremona steps at the three largest points until the class is reduced.

    A step is taken while the three largest multiplicities exceed the degree and every
    resulting multiplicity stays non-negative; the latter is the condition under which
    the quadratic transformation keeps the dimension of the linear system. The degree
    drops at every step, so the loop ends.
    """
    log: List[CremonaLogEntry] = list()
    current = clamp_exceptional(d)
    if current != d:
        log.append(CremonaLogEntry(rule="clamp", indices=(), before=d, after=current))
    current = canonical_form(current)
    while current.degree >= 0:
        m = current.multiplicities
        if m[0] + m[1] + m[2] <= current.degree or not _step_preserves_dimension(current):
            break
        stepped = canonical_form(cremona_step(current, 1, 2, 3))
        log.append(CremonaLogEntry(rule="step", indices=(1, 2, 3), before=current, after=stepped))
        logging.debug(f"cremona: {current} -> {stepped}")
        current = stepped
    return current, log


def reduction_chain(d: DivisorClass) -> List[DivisorClass]:
    reduced, log = cremona_reduce(d)
    chain = [canonical_form(clamp_exceptional(d))]
    chain.extend(entry.after for entry in log if entry.rule == "step")
    return chain
