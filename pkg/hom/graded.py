from dataclasses import dataclass, field
from typing import Dict, Iterable, Tuple, Union

import sympy

# dimensions left open for curve self-extensions
EXT1, EXT2 = sympy.symbols("ext1 ext2", integer=True, nonnegative=True)
# and for extensions between two different curve sheaves
EXT1_PAIR, EXT2_PAIR = sympy.symbols("ext1' ext2'", integer=True, nonnegative=True)
PARAMETERS = frozenset({EXT1, EXT2, EXT1_PAIR, EXT2_PAIR})

Entry = Union[int, sympy.Expr]


def is_zero(x: Entry) -> bool:
    if isinstance(x, int):
        return x == 0
    return sympy.sympify(x).is_zero is True


def _normalize(x: Entry) -> Entry:
    x = sympy.expand(x) if isinstance(x, sympy.Basic) else x
    if isinstance(x, sympy.Integer):
        return int(x)
    return x


def render_entry(x: Entry) -> int | str:
    return x if isinstance(x, int) else str(x)


@dataclass(frozen=True)
class GradedDim:
    """Finitely supported map degree -> dimension.

    Entries are integers or linear expressions in ``ext1``/``ext2``. ``relations`` holds the
    linear equations those parameters are known to satisfy.
    """
    entries: Tuple[Tuple[int, Entry], ...] = field(default_factory=tuple)
    relations: Tuple[sympy.Eq, ...] = field(default_factory=tuple)

    def __post_init__(self):
        merged: Dict[int, Entry] = dict()
        for k, v in self.entries:
            merged[k] = _normalize(merged.get(k, 0) + v)
        for k, v in merged.items():
            if isinstance(v, int) and v < 0:
                raise ValueError(f"Invalid graded dimension {v} in degree {k}")
        object.__setattr__(self, "entries", tuple(sorted((k, v) for k, v in merged.items() if not is_zero(v))))
        object.__setattr__(self, "relations", tuple(dict.fromkeys(self.relations)))

    @staticmethod
    def of(d: Dict[int, Entry], relations: Iterable[sympy.Eq] = ()) -> 'GradedDim':
        return GradedDim(entries=tuple(d.items()), relations=tuple(relations))

    @staticmethod
    def zero() -> 'GradedDim':
        return GradedDim()

    def as_dict(self) -> Dict[int, Entry]:
        return dict(self.entries)

    def __getitem__(self, k: int) -> Entry:
        return self.as_dict().get(k, 0)

    def degrees(self) -> Tuple[int, ...]:
        return tuple(k for k, _ in self.entries)

    def is_zero(self) -> bool:
        return len(self.entries) == 0

    def is_symbolic(self) -> bool:
        return any(not isinstance(v, int) for _, v in self.entries)

    def __add__(self, other: 'GradedDim') -> 'GradedDim':
        return GradedDim(entries=self.entries + other.entries, relations=self.relations + other.relations)

    def convolve(self, other: 'GradedDim') -> 'GradedDim':
        """Dimensions of the graded tensor product."""
        if self.is_zero() or other.is_zero():
            return GradedDim()
        out = tuple((i + j, a * b) for i, a in self.entries for j, b in other.entries)
        return GradedDim(entries=out, relations=self.relations + other.relations)

    def shift(self, k: int) -> 'GradedDim':
        return GradedDim(entries=tuple((i + k, v) for i, v in self.entries), relations=self.relations)

    def alternating_sum(self) -> Entry:
        total = sum((v if k % 2 == 0 else -v) for k, v in self.entries)
        return _normalize(self.resolve(total))

    def resolve(self, x: Entry) -> Entry:
        """Eliminate parameters that the relations determine.

        Each relation is solved for its own first parameter, so relations over disjoint
        parameter pairs resolve independently.
        """
        if isinstance(x, int) or len(self.relations) == 0:
            return x
        expr = sympy.sympify(x)
        if len(expr.free_symbols & PARAMETERS) == 0:
            return x
        substitution = dict()
        for relation in self.relations:
            equation = sympy.sympify(relation.lhs - relation.rhs).subs(substitution)
            params = sorted(equation.free_symbols & PARAMETERS, key=str)
            if len(params) == 0:
                continue
            solution = sympy.solve(equation, params[0])
            if solution:
                substitution = {k: v.subs(params[0], solution[0]) for k, v in substitution.items()}
                substitution[params[0]] = solution[0]
        return _normalize(expr.subs(substitution))

    def to_dict(self) -> Dict[str, int | str]:
        d = {str(k): render_entry(v) for k, v in self.entries}
        if self.relations:
            d["relations"] = [f"{sympy.sympify(r.lhs)} = {sympy.sympify(r.rhs)}" for r in self.relations]
        return d

    def __str__(self):
        if self.is_zero():
            return "0"
        return " + ".join(f"C^{{{v}}}[{-k}]" for k, v in self.entries)


def euler_characteristic(graded: GradedDim) -> Entry:
    return graded.alternating_sum()
