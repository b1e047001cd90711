"""Certified decisions for |dH - sum(m_i E_i)| at ten general points.

The cascade applies its rules in a fixed order and records every firing in the
trace:

    clamp-exceptional      drop positive E-coefficients (h0 is unchanged)
    negative-degree        H-coefficient < 0: Empty
    multiplicity-exceeds-degree
                           some m_i > d >= 0: Empty
    cremona                dimension-preserving Cremona steps, then the two tests above again
    fixed-line             m_a + m_b > d: the line through the two points splits off
    empty-by-slope         homogeneous, d/m < 2280/721: Empty
    nonspecial-by-slope    homogeneous, d/m >= 174/55: h0 = max(chi, 0)
    standard-form          d >= m_1 + m_2 + m_3, m_i <= 11: h0 = max(chi, 0)
    orbit-subsystem        A - E_i with |A| a single curve and |A - sum E| empty: Empty
    subsystem-of-empty     A - E_i with |A| empty: Empty

Anything else is Unknown.
"""
import logging
from functools import lru_cache
from typing import List, Optional, Tuple

from lattice import DivisorClass, H, E, euler_char, clamp_exceptional, cremona_reduce
from objects import VerdictKind
from .slope import h2_vanishes, empty_by_slope, nonspecial_by_slope, nonspecial_standard_form
from .verdict import SystemVerdict, TraceStep


def _fixed_line(d: DivisorClass) -> Optional[Tuple[int, int]]:
    m = d.multiplicities
    a, b = sorted(range(len(m)), key=lambda i: (-m[i], i))[:2]
    if m[a] + m[b] > d.degree:
        return a + 1, b + 1
    return None


def _from_chi(d: DivisorClass, rule: str, trace: List[TraceStep]) -> SystemVerdict:
    chi = euler_char(d)
    assert h2_vanishes(d), f"h2 of {d} not certified"
    trace.append(TraceStep(rule, d, note=f"non-special, h2 = 0, chi = {chi}"))
    if chi >= 1:
        return SystemVerdict.dim(chi - 1, trace)
    return SystemVerdict.empty(trace)


def _near_homogeneous(d: DivisorClass) -> Optional[int]:
    # canonical form (d; m+1, m, ..., m) -> m
    m = d.multiplicities
    if m[0] == m[1] + 1 and len(set(m[1:])) == 1:
        return m[1]
    return None


@lru_cache(maxsize=None)
def decide(d: DivisorClass) -> SystemVerdict:
    trace: List[TraceStep] = [TraceStep("input", d)]
    current = d
    while True:
        clamped = clamp_exceptional(current)
        if clamped != current:
            trace.append(TraceStep("clamp-exceptional", clamped))
            current = clamped
        verdict = _degree_tests(current, trace)
        if verdict is not None:
            return verdict

        reduced, log = cremona_reduce(current)
        for entry in log:
            if entry.rule == "step":
                trace.append(TraceStep("cremona", entry.after, note=f"points {entry.indices} of {entry.before}"))
        current = reduced
        verdict = _degree_tests(current, trace)
        if verdict is not None:
            return verdict

        line = _fixed_line(current)
        if line is None:
            break
        a, b = line
        current = current - (H() - E(a) - E(b))
        trace.append(TraceStep("fixed-line", current, note=f"removed H-E{a}-E{b}"))

    d_, m = current.degree, current.multiplicities
    if current.is_homogeneous() and m[0] > 0:
        if empty_by_slope(d_, m[0]):
            trace.append(TraceStep("empty-by-slope", current, note=f"{d_}/{m[0]} < 2280/721"))
            return SystemVerdict.empty(trace)
        if nonspecial_by_slope(d_, m[0]):
            return _from_chi(current, "nonspecial-by-slope", trace)
    if nonspecial_standard_form(current):
        return _from_chi(current, "standard-form", trace)

    base = _near_homogeneous(current)
    if base is not None:
        whole = DivisorClass.homogeneous(d_, base)
        thinner = DivisorClass.homogeneous(d_, base + 1)
        whole_verdict = decide(whole)
        if whole_verdict.is_empty:
            trace.append(TraceStep("subsystem-of-empty", current, note=f"|{whole}| is empty"))
            return SystemVerdict.empty(trace)
        thinner_verdict = decide(thinner)
        if whole_verdict.outcome == (VerdictKind.Dim, 0) and thinner_verdict.is_empty:
            trace.append(TraceStep("orbit-subsystem", current,
                                   note=f"|{whole}| is a single curve and |{thinner}| is empty"))
            return SystemVerdict.empty(trace)

    trace.append(TraceStep("unknown", current))
    logging.debug(f"decide: {d} left undecided at {current}")
    return SystemVerdict.unknown(trace)


def _degree_tests(d: DivisorClass, trace: List[TraceStep]) -> Optional[SystemVerdict]:
    if d.degree < 0:
        trace.append(TraceStep("negative-degree", d))
        return SystemVerdict.empty(trace)
    m = max(d.multiplicities)
    if m > d.degree:
        trace.append(TraceStep("multiplicity-exceeds-degree", d, note=f"multiplicity {m} > degree {d.degree}"))
        return SystemVerdict.empty(trace)
    return None
