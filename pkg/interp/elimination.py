import logging
from typing import List, Tuple

import numpy as np
from tqdm import tqdm

from objects import MAX_WORD_PRIME

# panel width; keeps float64 products of residues with 16-bit halves below 2**53
BLOCK = 32


def _panel_pivots(panel: np.ndarray, prime: int) -> List[Tuple[int, int]]:
    """(row, column) pivots of row reduction on a narrow panel, rows indexed into ``panel``."""
    p = panel.copy()
    order = np.arange(p.shape[0])
    pivots = list()
    r = 0
    for c in range(p.shape[1]):
        if r == p.shape[0]:
            break
        nonzero = np.flatnonzero(p[r:, c])
        if len(nonzero) == 0:
            continue
        k = r + nonzero[0]
        if k != r:
            p[[r, k]] = p[[k, r]]
            order[[r, k]] = order[[k, r]]
        inv = pow(int(p[r, c]), -1, prime)
        p[r, c:] = p[r, c:] * inv % prime
        f = p[r + 1:, c].copy()
        p[r + 1:, c:] = (p[r + 1:, c:] - (f[:, None] * p[r, c:]) % prime) % prime
        pivots.append((int(order[r]), c))
        r += 1
    return pivots


def _solve_mod(w: np.ndarray, rhs: np.ndarray, prime: int) -> np.ndarray:
    """W^-1 rhs over F_p for an invertible k x k block W."""
    k = w.shape[0]
    aug = np.concatenate([w, rhs], axis=1) % prime
    for c in range(k):
        piv = c + np.flatnonzero(aug[c:, c])[0]
        if piv != c:
            aug[[c, piv]] = aug[[piv, c]]
        aug[c] = aug[c] * pow(int(aug[c, c]), -1, prime) % prime
        f = aug[:, c].copy()
        f[c] = 0
        aug = (aug - (f[:, None] * aug[c]) % prime) % prime
    return aug[:, k:]


def _matmul_mod(a: np.ndarray, b: np.ndarray, prime: int) -> np.ndarray:
    """a @ b mod p through BLAS; inner dimension at most BLOCK."""
    af = a.astype(np.float64)
    low = np.rint(af @ (b & 0xFFFF).astype(np.float64)).astype(np.int64) % prime
    high = np.rint(af @ (b >> 16).astype(np.float64)).astype(np.int64) % prime
    return (low + (high << 16) % prime) % prime


def modular_rank(matrix: np.ndarray, prime: int, progress: bool = False) -> int:
    """Rank of an integer matrix over F_p.

    Blocked elimination: the pivots of each panel of BLOCK columns give an invertible block W,
    and the rank is |W| plus the rank of the Schur complement on the remaining columns.
    Entries are reduced mod p first; p < 3037000499 keeps every product of two residues
    below 2**63.
    """
    if prime >= MAX_WORD_PRIME:
        raise ValueError(f"Invalid prime {prime}: residues must multiply within int64 (p < {MAX_WORD_PRIME})")
    a = np.mod(np.asarray(matrix, dtype=np.int64), prime)
    rows, cols = a.shape
    rank = 0
    with tqdm(total=cols, disable=not progress, desc="elimination") as bar:
        while a.shape[0] > 0 and a.shape[1] > 0:
            width = min(BLOCK, a.shape[1])
            pivots = _panel_pivots(a[:, :width], prime)
            if len(pivots) == 0:
                a = a[:, width:]
            else:
                t = [r for r, _ in pivots]
                j = [c for _, c in pivots]
                rest = np.setdiff1d(np.arange(a.shape[0]), t)
                u = _solve_mod(a[np.ix_(t, j)], a[t, width:], prime)
                a = (a[rest, width:] - _matmul_mod(a[np.ix_(rest, j)], u, prime)) % prime
                rank += len(pivots)
            bar.update(width)
    logging.debug(f"modular rank {rank} of a {rows}x{cols} matrix mod {prime}")
    return rank
