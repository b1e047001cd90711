import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Dict, List, Tuple

import sympy
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .composition import N_B, b_monomials, product_matrix, symmetrized, t2_labels

Y_VARS = sympy.symbols("y0 y1")
X_VARS = sympy.symbols(f"x1:{N_B + 1}")
VARIABLES = (*Y_VARS, *X_VARS)


def _variable(label: str) -> sympy.Symbol:
    if label.startswith("s"):
        return Y_VARS[int(label[1:]) - 1]
    return X_VARS[int(label[1:]) - 1]


def _monomial(u: str, v: str) -> sympy.Expr:
    return _variable(u) * _variable(v)


def quadratic_monomials(variables=VARIABLES) -> List[sympy.Expr]:
    return [a * b for a, b in combinations_with_replacement(variables, 2)]


def exact_rank(rows: List[List[int]]) -> int:
    if len(rows) == 0:
        return 0
    return DomainMatrix.from_Matrix(sympy.Matrix(rows)).convert_to(QQ).rank()


@dataclass(frozen=True)
class QuadricIdeal:
    generators: Tuple[Tuple[str, sympy.Expr], ...]

    def as_dict(self) -> Dict[str, sympy.Expr]:
        return dict(self.generators)

    def coefficient_rows(self, monomials: List[sympy.Expr]) -> List[List[int]]:
        rows = list()
        for _, f in self.generators:
            poly = sympy.Poly(f, *VARIABLES)
            rows.append([int(poly.coeff_monomial(m)) for m in monomials])
        return rows

    def rank(self) -> int:
        return exact_rank(self.coefficient_rows(quadratic_monomials()))

    def contains(self, f: sympy.Expr) -> bool:
        """Whether the quadratic form lies in the span of the generators."""
        monomials = quadratic_monomials()
        rows = self.coefficient_rows(monomials)
        poly = sympy.Poly(f, *VARIABLES)
        return exact_rank(rows + [[int(poly.coeff_monomial(m)) for m in monomials]]) == exact_rank(rows)

    def equals(self, other: 'QuadricIdeal') -> bool:
        a, b = self.as_dict(), other.as_dict()
        return a.keys() == b.keys() and all(sympy.expand(a[k] - b[k]) == 0 for k in a)

    def to_dict(self) -> Dict[str, str]:
        return {name: str(f) for name, f in self.generators}


def _name(i: int, j: int) -> str:
    return f"f{j}" if i == j else f"f{i},{j}"


def hull_quadrics() -> QuadricIdeal:
    """f_j = 2 x_j^2 + sum_{i<j} x_i x_j and f_{i,j} = x_i x_j."""
    x = X_VARS
    gens = list()
    for i in range(1, N_B + 1):
        for j in range(i, N_B + 1):
            if i == j:
                f = 2 * x[j - 1] ** 2 + sum((x[k - 1] * x[j - 1] for k in range(1, j)), sympy.Integer(0))
            else:
                f = x[i - 1] * x[j - 1]
            gens.append((_name(i, j), sympy.expand(f)))
    return QuadricIdeal(tuple(gens))


def hull_quadrics_from_table() -> QuadricIdeal:
    """Dual of the symmetrized product map, written in the basis {b_i b_i, b_i b_j} of T2."""
    labels = t2_labels()
    basis = DomainMatrix.from_Matrix(sympy.Matrix(product_matrix()).T).convert_to(QQ)
    pairs = b_monomials()
    images = [[symmetrized(u, v).get(label, 0) for u, v in pairs] for label in labels]
    coords = basis.lu_solve(DomainMatrix.from_Matrix(sympy.Matrix(images)).convert_to(QQ)).to_Matrix()
    gens = list()
    for k, (u, v) in enumerate(pairs):
        f = sum((coords[k, col] * _monomial(a, b) for col, (a, b) in enumerate(pairs)), sympy.Integer(0))
        gens.append((_name(int(u[1:]), int(v[1:])), sympy.expand(f)))
    return QuadricIdeal(tuple(gens))


@dataclass(frozen=True)
class DimensionBound:
    rank: int
    x_monomials: int
    product_rank: int
    surviving: Tuple[str, ...]
    agrees_with_table: bool

    @property
    def ok(self) -> bool:
        return (self.rank == self.x_monomials == self.product_rank
                and self.surviving == tuple(str(y) for y in Y_VARS) and self.agrees_with_table)

    def to_dict(self) -> Dict:
        return {
            "rank": self.rank,
            "x_monomials": self.x_monomials,
            "product_rank": self.product_rank,
            "surviving_directions": list(self.surviving),
            "x_directions_obstructed_at_order_2": self.rank == self.x_monomials,
            "agrees_with_table": self.agrees_with_table,
            "ok": self.ok,
        }


def quadratic_dimension_bound() -> DimensionBound:
    ideal = hull_quadrics()
    rank = ideal.rank()
    surviving = tuple(str(v) for v in VARIABLES if not ideal.contains(v ** 2))
    logging.info(f"hull quadrics: rank {rank}, surviving {surviving}")
    return DimensionBound(
        rank=rank,
        x_monomials=len(quadratic_monomials(X_VARS)),
        product_rank=exact_rank(product_matrix()),
        surviving=surviving,
        agrees_with_table=ideal.equals(hull_quadrics_from_table()),
    )
