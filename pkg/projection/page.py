"""E1 pages of the projection spectral sequence at the level of dimensions.

For the left adjoint the column -p-1 collects chains a_0 < ... < a_p through the
collection, weighted by the graded tensor product

    Hom*(K', E_a0) (x) Hom*(E_a0, E_a1) (x) ... (x) Hom*(E_ap, K)

and column 0 is Hom*(K', K). The right adjoint page has the same shape in the columns
p + 1 >= 1, with the collection twisted by the canonical class at both ends.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from tqdm import tqdm

from errors import DegeneracyUnprovable, InvalidRank
from hom import GradedDim, ObjectSpec, hom, is_zero, render_entry
from hom.graded import Entry
from .collection import ExceptionalCollection

Position = Tuple[int, int]


@dataclass(frozen=True)
class E1Page:
    entries: Tuple[Tuple[Position, Entry], ...]
    relations: tuple = field(default_factory=tuple)

    @staticmethod
    def of(d: Dict[Position, Entry], relations=()) -> 'E1Page':
        return E1Page(entries=tuple(sorted((pq, v) for pq, v in d.items() if not is_zero(v))),
                      relations=tuple(relations))

    def as_dict(self) -> Dict[Position, Entry]:
        return dict(self.entries)

    def __getitem__(self, pq: Position) -> Entry:
        return self.as_dict().get(pq, 0)

    def columns(self) -> List[int]:
        return sorted({p for (p, _), _ in self.entries})

    def total_by_degree(self) -> GradedDim:
        return GradedDim(entries=tuple((p + q, v) for (p, q), v in self.entries), relations=self.relations)

    def alternating_sum(self) -> Entry:
        return self.total_by_degree().alternating_sum()

    def to_dict(self) -> Dict[str, int | str]:
        return {f"{p},{q}": render_entry(v) for (p, q), v in self.entries}


def _chain_weights(source_homs: List[GradedDim], target_homs: List[GradedDim],
                   forward: Dict[Tuple[int, int], GradedDim], progress: bool = False) -> Dict[int, GradedDim]:
    """Sum over chains, keyed by chain length."""
    n = len(source_homs)
    # ending[b]: chains of the current length ending at b
    ending = list(source_homs)
    totals: Dict[int, GradedDim] = dict()
    for length in tqdm(range(1, n + 1), disable=not progress, desc="chains"):
        closed = GradedDim()
        for b in range(n):
            closed = closed + ending[b].convolve(target_homs[b])
        if not closed.is_zero():
            totals[length] = closed
        if length == n:
            break
        nxt = list()
        for b in range(n):
            acc = GradedDim()
            for a in range(b):
                acc = acc + ending[a].convolve(forward[(a, b)])
            nxt.append(acc)
        ending = nxt
    return totals


def _assemble(column_zero: GradedDim, totals: Dict[int, GradedDim], sign: int) -> E1Page:
    d: Dict[Position, Entry] = {(0, q): v for q, v in column_zero.entries}
    relations = list(column_zero.relations)
    for length, graded in totals.items():
        relations.extend(graded.relations)
        for q, v in graded.entries:
            d[(sign * length, q)] = v
    return E1Page.of(d, relations)


def e1_page(kprime: ObjectSpec, k: ObjectSpec, coll: ExceptionalCollection, progress: bool = False) -> E1Page:
    source = [hom(kprime, e) for e in coll]
    target = [hom(e, k) for e in coll]
    page = _assemble(hom(kprime, k), _chain_weights(source, target, coll.forward_homs, progress), sign=-1)
    logging.debug(f"E1 page from {kprime} to {k}: {page.to_dict()}")
    return page


def e1_page_right_adjoint(k: ObjectSpec, kprime: ObjectSpec, coll: ExceptionalCollection,
                          progress: bool = False) -> E1Page:
    twisted = [e.twist_by_canonical() for e in coll]
    source = [hom(k, e) for e in twisted]
    target = [hom(e, kprime) for e in twisted]
    page = _assemble(hom(k, kprime), _chain_weights(source, target, coll.forward_homs, progress), sign=1)
    logging.debug(f"right adjoint E1 page from {k} to {kprime}: {page.to_dict()}")
    return page


def einfty_total(page: E1Page, d1_ranks: Dict[Position, int] | None = None) -> GradedDim:
    """Totals by p + q once the declared d1 ranks are removed.

    ``d1_ranks[(p, q)]`` is the rank of d1 from (p, q) to (p + 1, q). Raises
    DegeneracyUnprovable when two surviving entries could still be joined by some d_r.
    """
    d1_ranks = dict() if d1_ranks is None else d1_ranks
    entries = page.as_dict()
    for (p, q), rank in d1_ranks.items():
        source, target = entries.get((p, q), 0), entries.get((p + 1, q), 0)
        if rank < 0 or not isinstance(source, int) or not isinstance(target, int) or rank > min(source, target):
            raise InvalidRank(f"Invalid d1 rank {rank} at ({p},{q}) -> ({p + 1},{q}): endpoints {source}, {target}")
        entries[(p, q)] = source - rank
        entries[(p + 1, q)] = target - rank
    alive = [pq for pq, v in entries.items() if not is_zero(v)]
    connected = list()
    for (p, q) in alive:
        for (p2, q2) in alive:
            r = p2 - p
            if r < 1 or q2 != q - r + 1:
                continue
            if r == 1 and (p, q) in d1_ranks:
                continue
            connected.append(((p, q), (p2, q2)))
    if connected:
        raise DegeneracyUnprovable(sorted(connected))
    return GradedDim(entries=tuple((p + q, v) for (p, q), v in entries.items()), relations=page.relations)


def d1_rank_skyscraper(same_point: bool, coll: ExceptionalCollection | None = None) -> int:
    """Rank of the evaluation d1 into Hom^2(k(x), k(y)); zero unless the points agree."""
    if coll is not None and len(coll) == 0:
        return 0
    return 1 if same_point else 0
