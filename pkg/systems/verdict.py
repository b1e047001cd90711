from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from lattice import DivisorClass
from objects import VerdictKind


@dataclass(frozen=True)
class TraceStep:
    rule: str
    divisor: DivisorClass
    note: str = ""

    def to_dict(self) -> Dict:
        d = {"rule": self.rule, "class": str(self.divisor)}
        if self.note:
            d["note"] = self.note
        return d


@dataclass(frozen=True)
class SystemVerdict:
    kind: VerdictKind
    dimension: Optional[int] = None
    trace: Tuple[TraceStep, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.kind == VerdictKind.Dim and (self.dimension is None or self.dimension < 0):
            raise ValueError(f"Invalid Dim verdict with dimension {self.dimension}")
        if self.kind != VerdictKind.Dim and self.dimension is not None:
            raise ValueError(f"Invalid {self.kind.name} verdict carrying a dimension")

    @staticmethod
    def empty(trace) -> 'SystemVerdict':
        return SystemVerdict(kind=VerdictKind.Empty, trace=tuple(trace))

    @staticmethod
    def dim(k: int, trace) -> 'SystemVerdict':
        return SystemVerdict(kind=VerdictKind.Dim, dimension=k, trace=tuple(trace))

    @staticmethod
    def unknown(trace) -> 'SystemVerdict':
        return SystemVerdict(kind=VerdictKind.Unknown, trace=tuple(trace))

    @property
    def is_empty(self) -> bool:
        return self.kind == VerdictKind.Empty

    @property
    def is_decided(self) -> bool:
        return self.kind != VerdictKind.Unknown

    @property
    def h0(self) -> Optional[int]:
        if self.kind == VerdictKind.Empty:
            return 0
        if self.kind == VerdictKind.Dim:
            return self.dimension + 1
        return None

    @property
    def projective_dimension(self) -> Optional[int]:
        """-1 for the empty system, as the interpolation oracle reports it."""
        return None if self.h0 is None else self.h0 - 1

    @property
    def outcome(self) -> Tuple[VerdictKind, Optional[int]]:
        return self.kind, self.dimension

    @property
    def rules(self) -> Tuple[str, ...]:
        return tuple(step.rule for step in self.trace)

    def to_dict(self) -> Dict:
        return {
            "verdict": self.kind.name if self.kind != VerdictKind.Dim else f"Dim({self.dimension})",
            "trace": [step.to_dict() for step in self.trace],
        }

    def __str__(self):
        return self.kind.name if self.kind != VerdictKind.Dim else f"Dim({self.dimension})"
