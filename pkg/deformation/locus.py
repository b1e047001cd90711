import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from lattice import D, DivisorClass, E, F, K, euler_char, reduction_chain
from objects import N_POINTS, VerdictKind
from projection import ExceptionalCollection
from systems import SPLIT_BOXES, SplitRefutation, SystemVerdict, decide, enumerate_split_cases, \
    homogeneous_split, point_split, refute_split


@dataclass(frozen=True)
class CompositionClass:
    i: int
    j: int
    divisor: DivisorClass
    verdict: SystemVerdict

    def to_dict(self) -> Dict:
        return {"pair": [self.i, self.j], "class": str(self.divisor), "verdict": self.verdict.to_dict()}


def composition_criterion(i: int, j: int, coll: ExceptionalCollection | None = None) -> CompositionClass:
    """Class E_i - E_j + K, whose base locus controls the composition E_j -> k(x) -> E_i[2]."""
    coll = ExceptionalCollection.default() if coll is None else coll
    if not 1 <= i < j <= len(coll):
        raise ValueError(f"Invalid collection pair ({i}, {j}): need 1 <= i < j <= {len(coll)}")
    divisor = coll[i - 1].divisor - coll[j - 1].divisor + K()
    return CompositionClass(i=i, j=j, divisor=divisor, verdict=decide(divisor))


def composition_classes(coll: ExceptionalCollection | None = None) -> List[CompositionClass]:
    coll = ExceptionalCollection.default() if coll is None else coll
    n = len(coll)
    return [composition_criterion(i, j, coll) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


@dataclass(frozen=True)
class LocusEntry:
    name: str
    divisor: DivisorClass
    verdict: SystemVerdict
    splits: Tuple[SplitRefutation, ...] = field(default_factory=tuple)
    chains: Tuple[Tuple[DivisorClass, ...], ...] = field(default_factory=tuple)

    @property
    def divisorial(self) -> bool:
        """|D| is a single effective divisor, so it lies in the base locus."""
        return self.verdict.outcome == (VerdictKind.Dim, 0) and euler_char(self.divisor) == 1

    @property
    def unknowns(self) -> List[str]:
        found = [self.name] if not self.verdict.is_decided else []
        for s in self.splits:
            if not s.refuted and not (s.part_verdict.is_decided and s.complement_verdict.is_decided):
                found.append(f"{self.name} split {s.case}")
        return found

    @property
    def ok(self) -> bool:
        return self.verdict.is_decided and all(s.refuted for s in self.splits)

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "class": str(self.divisor),
            "verdict": self.verdict.to_dict(),
            "divisorial": self.divisorial,
            "splits": [s.to_dict() for s in self.splits],
            "chains": [[str(c) for c in chain] for chain in self.chains],
            "ok": self.ok,
        }


def _refuting_chain(s: SplitRefutation) -> Tuple[DivisorClass, ...]:
    side = s.part if s.part_verdict.is_empty else s.complement
    return tuple(reduction_chain(side))


def _entry(name: str, divisor: DivisorClass, box=None) -> LocusEntry:
    verdict = decide(divisor)
    if box == "homogeneous":
        constraint = homogeneous_split(divisor)
    elif box is not None:
        constraint = point_split(divisor, *box)
    else:
        return LocusEntry(name, divisor, verdict)
    splits = tuple(refute_split(divisor, case) for case in enumerate_split_cases(divisor, constraint))
    chains = tuple(_refuting_chain(s) for s in splits if s.refuted)
    return LocusEntry(name, divisor, verdict, splits, chains)


@dataclass(frozen=True)
class SpecialLocusReport:
    entries: Tuple[LocusEntry, ...]

    @property
    def divisorial(self) -> List[LocusEntry]:
        return [e for e in self.entries if e.divisorial]

    @property
    def ok(self) -> bool:
        names = [e.name for e in self.divisorial]
        expected = [f"-K+E{i}" for i in range(1, N_POINTS + 1)]
        return names == expected and all(e.ok for e in self.entries)

    def to_dict(self) -> Dict:
        return {
            "entries": [e.to_dict() for e in self.entries],
            "divisorial": [e.name for e in self.divisorial],
            "unknowns": [u for e in self.entries for u in e.unknowns],
            "ok": self.ok,
        }


def special_locus_report() -> SpecialLocusReport:
    entries = [_entry(f"-K+E{i}", -K() + E(i)) for i in range(1, N_POINTS + 1)]
    entries.append(_entry("K-F", K() - F(), "homogeneous"))
    entries.append(_entry("K-2F", K() - 2 * F(), "homogeneous"))
    for i in range(1, N_POINTS + 1):
        entries.append(_entry(f"K-F+D{i}", K() - F() + D(i), SPLIT_BOXES[1]))
    for i in range(1, N_POINTS + 1):
        entries.append(_entry(f"K-2F+D{i}", K() - 2 * F() + D(i), SPLIT_BOXES[2]))
    report = SpecialLocusReport(tuple(entries))
    logging.info(f"special locus: divisorial {[e.name for e in report.divisorial]}")
    return report
