"""Exhaustive search over all job permutations.

Ground truth for small instances: every permutation is evaluated, no
pruning, so the result is trivially auditable. A job cap (default 10,
about 3.6 million permutations) guards against accidental factorial
blow-ups; it can be raised explicitly but is never exceeded silently.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .model import FlowshopError, Instance, JobSequence, makespan

__all__ = [
    "DEFAULT_MAX_JOBS",
    "TooLargeError",
    "OptimumResult",
    "exhaustive_optimum",
    "heuristic_gap",
]

DEFAULT_MAX_JOBS = 10


class TooLargeError(FlowshopError):
    """The instance exceeds the enumeration cap."""


@dataclass(frozen=True)
class OptimumResult:
    """Outcome of a full enumeration.

    ``sequence`` is the lexicographically smallest permutation reaching the
    optimal makespan, which makes the result a stable fixture; ``explored``
    counts the permutations evaluated (always n factorial on success).
    """

    sequence: JobSequence
    makespan: int
    explored: int


def exhaustive_optimum(inst: Instance, max_jobs: int = DEFAULT_MAX_JOBS) -> OptimumResult:
    """Evaluate all n! permutations and return the optimal one.

    Permutations are visited in lexicographic order and only strict
    improvements are kept, so among equally good sequences the
    lexicographically smallest wins regardless of timing or platform.

    Raises:
        TooLargeError: n_jobs exceeds ``max_jobs``; the message carries the
            n! estimate so the caller can judge an override.
    """
    n = inst.n_jobs
    if n > max_jobs:
        raise TooLargeError(
            f"{n} jobs means {math.factorial(n):,} permutations, over the cap of"
            f" {max_jobs} jobs; pass max_jobs={n} to run it anyway"
        )
    m = inst.n_machines
    times = inst.times
    inner = range(1, m)
    best_value = sum(sum(row) for row in times) + 1
    best_perm: tuple[int, ...] = ()
    for perm in itertools.permutations(range(n)):
        line = [0] * m
        for job in perm:
            row = times[job]
            line[0] += row[0]
            prev = line[0]
            for j in inner:
                cur = line[j]
                prev = (prev if prev > cur else cur) + row[j]
                line[j] = prev
        if line[-1] < best_value:
            best_value = line[-1]
            best_perm = perm
    return OptimumResult(
        sequence=tuple(job + 1 for job in best_perm),
        makespan=best_value,
        explored=math.factorial(n),
    )


def heuristic_gap(inst, result, opt: OptimumResult) -> Fraction:
    """Exact ratio of a heuristic's makespan to the optimum; always >= 1.

    Both makespans are recomputed from the instance as a consistency check.
    An all-zero instance has optimum 0; its gap is defined as 1.
    """
    if makespan(inst, result.sequence) != result.makespan:
        raise ValueError("heuristic result does not belong to this instance")
    if makespan(inst, opt.sequence) != opt.makespan:
        raise ValueError("optimum result does not belong to this instance")
    if opt.makespan == 0:
        return Fraction(1)
    return Fraction(result.makespan, opt.makespan)
