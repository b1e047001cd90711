"""Composition table on the first-order deformations of the projected skyscraper.

T1 has basis s_1, s_2, b_1..b_12 and T2 has basis xi_i xi_j, 1 <= i < j <= 13. With
b_i = xi_i - xi_13 and xi_a xi_b = 0 unless a < b the b-products are

    b_i b_j = xi_i xi_j - xi_i xi_13     (i < j)
    b_i b_i = -xi_i xi_13
    b_j b_i = -xi_j xi_13                (i < j)

The expansion of b_i b_i also carries a xi_13 xi_13 term, printed as xi_0^2 in some
sources; it vanishes by the same ordering rule. Products with s_1, s_2 are zero. The
products s_i s_j are not determined by the argument and are set to zero; nothing below
reads them.
"""
from typing import Dict, List, Tuple

N_B = 12
N_XI = 13

T2Vector = Dict[str, int]


def t1_labels() -> List[str]:
    return ["s1", "s2"] + [f"b{i}" for i in range(1, N_B + 1)]


def t2_labels() -> List[str]:
    return [xi_label(i, j) for i in range(1, N_XI + 1) for j in range(i + 1, N_XI + 1)]


def xi_label(i: int, j: int) -> str:
    return f"xi{i}xi{j}"


def _b_index(label: str) -> int:
    if not label.startswith("b"):
        raise ValueError(f"Invalid b label {label}")
    i = int(label[1:])
    if not 1 <= i <= N_B:
        raise ValueError(f"Invalid b label {label}")
    return i


def _check_label(label: str):
    if label not in t1_labels():
        raise ValueError(f"Invalid T1 label {label}. Must be one of {t1_labels()}")


def product(u: str, v: str) -> T2Vector:
    _check_label(u)
    _check_label(v)
    if u.startswith("s") or v.startswith("s"):
        return dict()
    i, j = _b_index(u), _b_index(v)
    if i < j:
        return {xi_label(i, j): 1, xi_label(i, N_XI): -1}
    # b_i b_i and b_i b_j for j < i
    return {xi_label(i, N_XI): -1}


def b_from_xi(i: int) -> Dict[int, int]:
    """b_i = xi_i - xi_13 as coefficients over the xi."""
    if not 1 <= i <= N_B:
        raise ValueError(f"Invalid b index {i}")
    return {i: 1, N_XI: -1}


def xi_product(a: int, b: int) -> T2Vector:
    return {xi_label(a, b): 1} if a < b else dict()


def derived_product(u: str, v: str) -> T2Vector:
    """Product of two b's expanded through b_i = xi_i - xi_13."""
    out: Dict[str, int] = dict()
    for a, ca in b_from_xi(_b_index(u)).items():
        for b, cb in b_from_xi(_b_index(v)).items():
            for label, c in xi_product(a, b).items():
                out[label] = out.get(label, 0) + ca * cb * c
    return {k: v for k, v in out.items() if v != 0}


def symmetrized(u: str, v: str) -> T2Vector:
    """Image of u.v under t.t' -> t o t' + t' o t."""
    out: Dict[str, int] = dict()
    for vec in (product(u, v), product(v, u)):
        for label, c in vec.items():
            out[label] = out.get(label, 0) + c
    return {k: c for k, c in out.items() if c != 0}


def b_monomials() -> List[Tuple[str, str]]:
    """The pairs (b_i, b_j), i <= j, whose products span T2."""
    return [(f"b{i}", f"b{j}") for i in range(1, N_B + 1) for j in range(i, N_B + 1)]


def product_matrix() -> List[List[int]]:
    labels = t2_labels()
    rows = list()
    for u, v in b_monomials():
        vec = product(u, v)
        rows.append([vec.get(label, 0) for label in labels])
    return rows
