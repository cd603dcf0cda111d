"""Shared fixtures data and an independent reference engine for cross-checks.

`slow_schedule` deliberately mirrors the recursion definition cell by cell,
with no shortcuts, so package results are always checked against a second
route.
"""

import random

# 7 jobs x 4 machines reference matrix (also shipped as instances/demo7x4.txt)
REF7X4 = [
    [3, 1, 4, 12],
    [8, 0, 5, 15],
    [11, 3, 8, 10],
    [4, 7, 3, 8],
    [5, 5, 1, 10],
    [10, 2, 0, 13],
    [2, 5, 6, 9],
]

# Frozen regression constants for the reference instance. Values were
# derived once by full enumeration / step-by-step replay and must never
# drift.
REF7X4_OPTIMUM_MAKESPAN = 85
REF7X4_OPTIMUM_SEQUENCE = (1, 2, 3, 4, 5, 6, 7)  # lex-smallest optimal
REF7X4_GUPTA_SEQUENCE = (6, 1, 2, 5, 7, 4, 3)
REF7X4_GUPTA_MAKESPAN = 89
REF7X4_HYBRID_CONCAT_SEQUENCE = (1, 5, 6, 2, 7, 4, 3)
REF7X4_HYBRID_INSERTION_SEQUENCE = (1, 4, 7, 3, 2, 6, 5)
REF7X4_NEH_SEQUENCE = (1, 5, 6, 7, 4, 2, 3)
REF7X4_CANONICAL_TEXT = (
    "7 4\n"
    "3 1 4 12\n"
    "8 0 5 15\n"
    "11 3 8 10\n"
    "4 7 3 8\n"
    "5 5 1 10\n"
    "10 2 0 13\n"
    "2 5 6 9\n"
)


def slow_schedule(times, seq):
    """Start/completion matrices straight from the recursion, cell by cell."""
    n_machines = len(times[0])
    start, completion = [], []
    for p, job in enumerate(seq):
        srow, crow = [], []
        for j in range(n_machines):
            above = completion[p - 1][j] if p > 0 else 0
            left = crow[j - 1] if j > 0 else 0
            srow.append(max(above, left))
            crow.append(srow[j] + times[job - 1][j])
        start.append(srow)
        completion.append(crow)
    return start, completion


def slow_makespan(times, seq):
    if not seq:
        return 0
    _, completion = slow_schedule(times, seq)
    return completion[-1][-1]


def random_times(rng: random.Random, n_jobs: int, n_machines: int, lo=0, hi=99):
    return [[rng.randint(lo, hi) for _ in range(n_machines)] for _ in range(n_jobs)]


def random_permutation(rng: random.Random, n_jobs: int):
    seq = list(range(1, n_jobs + 1))
    rng.shuffle(seq)
    return tuple(seq)
