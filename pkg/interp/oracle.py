import logging
import math
import multiprocessing
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import sympy
from tqdm import tqdm

from errors import DegeneratePointSample, PhantomError, PrimeTooSmall
from lattice import D, DivisorClass, E, F, H, K, clamp_exceptional, sum_E
from objects import CROSS_CHECK_PRIME, DEFAULT_PRIME, MAX_WORD_PRIME, N_POINTS, CaseList
from systems import decide
from .elimination import modular_rank

Point = Tuple[int, int]


@dataclass(frozen=True)
class FatPointProblem:
    """Degree-d plane curves with multiplicity m_i at ten random points over F_p."""
    d: int
    m: Tuple[int, ...]
    prime: int = DEFAULT_PRIME
    seed: int = 42

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        if self.d < 0:
            raise ValueError(f"Invalid degree {self.d}: must be >= 0")
        if len(self.m) != N_POINTS or min(self.m) < 0:
            raise ValueError(f"Invalid multiplicities {self.m}: need {N_POINTS} non-negative entries")
        if self.prime <= self.d:
            raise PrimeTooSmall(f"Prime {self.prime} must exceed the degree {self.d}")
        if self.prime >= MAX_WORD_PRIME or not sympy.isprime(self.prime):
            raise ValueError(f"Invalid prime {self.prime}: need a prime below {MAX_WORD_PRIME}")

    @staticmethod
    def from_class(divisor: DivisorClass, prime: int = DEFAULT_PRIME, seed: int = 42) -> 'FatPointProblem':
        clamped = clamp_exceptional(divisor)
        return FatPointProblem(d=clamped.degree, m=clamped.multiplicities, prime=prime, seed=seed)

    def with_prime(self, prime: int) -> 'FatPointProblem':
        return FatPointProblem(d=self.d, m=self.m, prime=prime, seed=self.seed)

    @property
    def columns(self) -> int:
        return math.comb(self.d + 2, 2)

    @property
    def rows(self) -> int:
        return sum(math.comb(x + 1, 2) for x in self.m)

    def divisor(self) -> DivisorClass:
        return DivisorClass.from_multiplicities(self.d, self.m)


@dataclass(frozen=True)
class RankResult:
    columns: int
    rows: int
    rank: int
    prime: int
    seed: int

    def __post_init__(self):
        assert self.rank <= min(self.rows, self.columns), f"rank {self.rank} exceeds matrix shape"

    @property
    def projective_dimension(self) -> int:
        return self.columns - 1 - self.rank

    def to_dict(self) -> Dict:
        return {
            "columns": self.columns,
            "rows": self.rows,
            "rank": self.rank,
            "projective_dimension": self.projective_dimension,
            "prime": self.prime,
            "seed": self.seed,
        }


def sample_points(n: int, prime: int, seed: int, max_retries: int = 16) -> List[Point]:
    """Affine chart (X/Z, Y/Z) of n projective points with X, Y, Z all nonzero, pairwise distinct."""
    rng = np.random.default_rng(seed)
    for attempt in range(max_retries):
        xyz = rng.integers(1, prime, size=(n, 3))
        points = list()
        for x, y, z in xyz.tolist():
            inv = pow(z, -1, prime)
            points.append((x * inv % prime, y * inv % prime))
        if len(set(points)) == n:
            return points
        logging.debug(f"point sample {attempt} has a collision, resampling")
    raise DegeneratePointSample(f"No {n} distinct points mod {prime} after {max_retries} attempts (seed {seed})")


def _binomials(d: int, prime: int) -> np.ndarray:
    c = np.zeros((d + 1, d + 1), dtype=np.int64)
    for i in range(d + 1):
        for a in range(i + 1):
            c[i, a] = math.comb(i, a) % prime
    return c


def _powers(a: int, d: int, prime: int) -> np.ndarray:
    out = np.ones(d + 1, dtype=np.int64)
    for k in range(1, d + 1):
        out[k] = out[k - 1] * a % prime
    return out


def condition_matrix(d: int, m: Sequence[int], points: Sequence[Point], prime: int) -> np.ndarray:
    """Rows are Hasse derivatives D^(alpha, beta) f(point), alpha + beta < m_i, on the monomials x^i y^j."""
    exps = [(i, j) for i in range(d + 1) for j in range(d + 1 - i)]
    ei = np.array([e[0] for e in exps], dtype=np.int64)
    ej = np.array([e[1] for e in exps], dtype=np.int64)
    binom = _binomials(d, prime)
    rows = list()
    for (a, b), mult in zip(points, m):
        apow, bpow = _powers(a, d, prime), _powers(b, d, prime)
        for alpha in range(mult):
            for beta in range(mult - alpha):
                ok = (ei >= alpha) & (ej >= beta)
                xa = binom[ei, np.minimum(alpha, ei)] * apow[np.maximum(ei - alpha, 0)] % prime
                yb = binom[ej, np.minimum(beta, ej)] * bpow[np.maximum(ej - beta, 0)] % prime
                rows.append(np.where(ok, xa * yb % prime, 0))
    if len(rows) == 0:
        return np.zeros((0, len(exps)), dtype=np.int64)
    return np.vstack(rows)


def interp_dim(problem: FatPointProblem, max_retries: int = 16, progress: bool = False) -> RankResult:
    points = sample_points(N_POINTS, problem.prime, problem.seed, max_retries)
    matrix = condition_matrix(problem.d, problem.m, points, problem.prime)
    logging.debug(f"interpolation matrix {matrix.shape} for {problem.divisor()}")
    rank = modular_rank(matrix, problem.prime, progress) if matrix.shape[0] > 0 else 0
    return RankResult(columns=problem.columns, rows=problem.rows, rank=rank, prime=problem.prime, seed=problem.seed)


@dataclass(frozen=True)
class CrossCheck:
    problem: FatPointProblem
    results: Tuple[RankResult, ...]

    @property
    def agree(self) -> bool:
        return len({r.projective_dimension for r in self.results}) == 1

    def to_dict(self) -> Dict:
        return {
            "class": str(self.problem.divisor()),
            "results": [r.to_dict() for r in self.results],
            "agree": self.agree,
        }


def cross_check(problem: FatPointProblem, primes: Sequence[int] = (DEFAULT_PRIME, CROSS_CHECK_PRIME),
                max_retries: int = 16) -> CrossCheck:
    results = tuple(interp_dim(problem.with_prime(p), max_retries) for p in primes)
    check = CrossCheck(problem, results)
    if not check.agree:
        logging.warning(f"primes {list(primes)} disagree on {problem.divisor()}: "
                        f"{[r.projective_dimension for r in results]}")
    return check


def _krah() -> List[DivisorClass]:
    # |D_i - F| is listed once
    return [-F(), -2 * F(), -D(1), D(1) - F()]


def _special_locus() -> List[DivisorClass]:
    return [-K() + E(1), K() - F(), K() - 2 * F(), K() - F() + D(1), K() - 2 * F() + D(1)]


def _concordance() -> List[DivisorClass]:
    return [
        H() - E(1) - E(2),
        H() - E(1) - E(2) - E(3) - E(4),
        2 * H() - sum((E(i) for i in range(1, 7)), DivisorClass.zero()),
        7 * H() - 4 * E(1) - 2 * (sum_E() - E(1)),
        -3 * F(),
        -3 * F() - sum_E(),
        -3 * F() - E(1),
        DivisorClass.homogeneous(26, 8) - 2 * E(1),
    ]


CASE_LISTS = {
    CaseList.Krah: _krah,
    CaseList.SpecialLocus: _special_locus,
    CaseList.Concordance: _concordance,
}


def case_list(name: CaseList) -> List[DivisorClass]:
    if name == CaseList.All:
        return [c for key in (CaseList.Krah, CaseList.SpecialLocus, CaseList.Concordance) for c in CASE_LISTS[key]()]
    return CASE_LISTS[name]()


@dataclass(frozen=True)
class GeneralityRecord:
    divisor: DivisorClass
    expected: Optional[int]
    oracle: Optional[int]
    error: Optional[str] = None

    @property
    def match(self) -> Optional[bool]:
        if self.error is not None or self.oracle is None:
            return False
        if self.expected is None:
            return None
        return self.expected == self.oracle

    def to_dict(self) -> Dict:
        d = {"class": str(self.divisor), "expected": self.expected, "oracle": self.oracle, "match": self.match}
        if self.error is not None:
            d["error"] = self.error
        return d


@dataclass(frozen=True)
class _Job:
    divisor: DivisorClass
    prime: int
    seed: int
    max_retries: int = 16


def _verify_one(job: _Job) -> GeneralityRecord:
    expected = decide(job.divisor).projective_dimension
    try:
        result = interp_dim(FatPointProblem.from_class(job.divisor, job.prime, job.seed), job.max_retries)
    except (PhantomError, ValueError) as e:
        logging.warning(f"interpolation failed for {job.divisor}: {e}")
        return GeneralityRecord(job.divisor, expected, None, error=str(e))
    return GeneralityRecord(job.divisor, expected, result.projective_dimension)


@dataclass(frozen=True)
class GeneralityReport:
    records: Tuple[GeneralityRecord, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(r.match is not False for r in self.records)

    def to_dict(self) -> Dict:
        return {"records": [r.to_dict() for r in self.records], "ok": self.ok}


def verify_generality(classes: Sequence[DivisorClass], prime: int = DEFAULT_PRIME, seed: int = 42,
                      workers: int = 1, max_retries: int = 16, progress: bool = False) -> GeneralityReport:
    """Compare decide against the interpolation oracle class by class; failures are collected."""
    jobs = [_Job(c, prime, seed, max_retries) for c in classes]
    if workers > 1 and len(jobs) > 1:
        with multiprocessing.Pool(processes=min(workers, len(jobs))) as pool:
            records = list(tqdm(pool.imap(_verify_one, jobs), total=len(jobs), disable=not progress))
    else:
        records = [_verify_one(job) for job in tqdm(jobs, disable=not progress)]
    report = GeneralityReport(tuple(records))
    logging.info(f"generality: {sum(r.match is True for r in records)}/{len(records)} matches")
    return report
