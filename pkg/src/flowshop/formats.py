"""Instance text format, JSON result emission, Gantt CSV, seeded generation.

Wire contracts (all byte-deterministic for fixed inputs):

* Instance text: header line ``n m``, then n lines of m whitespace-separated
  non-negative integers (row = job). On input, blank lines and lines whose
  first non-blank character is ``#`` are ignored; the canonical form written
  by :func:`format_instance` has no comments, single spaces, and a trailing
  newline.
* Result JSON: one object with keys ``algorithm``, ``sequence`` (1-based
  ids), ``makespan``, ``condition_flags`` (object or null), ``notes`` and
  ``intervals`` (``{job, machine, start, end}`` in sequence-position, then
  machine order); keys sorted, two-space indent.
* Gantt CSV: header ``job,machine,start,end`` then one row per operation in
  the same order as the JSON intervals.
* Random instances: SplitMix64 words reduced to ``min_time + w % span``,
  filled row-major, so a (jobs, machines, range, seed) tuple yields the
  same matrix in any implementation of the generator.
"""

import json
from collections.abc import Iterator
from dataclasses import dataclass

from .model import (
    FlowshopError,
    Instance,
    NegativeTimeError,
    Schedule,
    validate_instance,
)
from .heuristics import AlgoResult

__all__ = [
    "BadHeaderError",
    "WrongRowCountError",
    "WrongColumnCountError",
    "NonIntegerError",
    "BadRangeError",
    "GenSpec",
    "parse_instance",
    "format_instance",
    "serialize_result",
    "gantt_csv",
    "generate_instance",
]


class BadHeaderError(FlowshopError):
    """The first significant line is not 'n m' with two positive integers."""


class WrongRowCountError(FlowshopError):
    """The file does not contain exactly n job rows."""


class WrongColumnCountError(FlowshopError):
    """A job row does not contain exactly m values."""


class NonIntegerError(FlowshopError):
    """A matrix token is not an integer."""


class BadRangeError(FlowshopError):
    """A generator spec is inconsistent (empty shape or bad time range)."""


def _significant_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped.split()


def parse_instance(text: str) -> Instance:
    """Parse instance text into a validated Instance.

    Error messages carry 1-based line (and column, where it applies)
    positions.
    """
    lines = list(_significant_lines(text))
    if not lines:
        raise BadHeaderError("no header line found")
    header_line, header = lines[0]
    if len(header) != 2:
        raise BadHeaderError(
            f"line {header_line}: header must be 'n m', got {len(header)} tokens"
        )
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise BadHeaderError(f"line {header_line}: header values must be integers")
    if n < 1 or m < 1:
        raise BadHeaderError(f"line {header_line}: job and machine counts must be >= 1")

    body = lines[1:]
    if len(body) < n:
        raise WrongRowCountError(f"expected {n} job rows, found {len(body)}")
    if len(body) > n:
        extra_line = body[n][0]
        raise WrongRowCountError(f"line {extra_line}: expected {n} job rows, found {len(body)}")

    rows: list[list[int]] = []
    for lineno, tokens in body:
        if len(tokens) != m:
            raise WrongColumnCountError(
                f"line {lineno}: expected {m} values, found {len(tokens)}"
            )
        row: list[int] = []
        for col, token in enumerate(tokens, start=1):
            try:
                value = int(token)
            except ValueError:
                raise NonIntegerError(
                    f"line {lineno}, column {col}: {token!r} is not an integer"
                )
            if value < 0:
                raise NegativeTimeError(
                    f"line {lineno}, column {col}: negative time {value}"
                )
            row.append(value)
        rows.append(row)
    return validate_instance(rows)


def format_instance(inst: Instance) -> str:
    """Canonical text for an instance; ``parse_instance`` inverts it exactly."""
    lines = [f"{inst.n_jobs} {inst.n_machines}"]
    lines.extend(" ".join(str(v) for v in row) for row in inst.times)
    return "\n".join(lines) + "\n"


def serialize_result(result: AlgoResult, schedule: Schedule) -> str:
    """Deterministic JSON for an algorithm result and its operation intervals."""
    if result.sequence != schedule.sequence or result.makespan != schedule.makespan:
        raise ValueError("result and schedule describe different solutions")
    flags = None
    if result.flags is not None:
        flags = {
            "cond1": result.flags.cond1,
            "cond2": result.flags.cond2,
            "any": result.flags.any,
        }
    intervals = [
        {
            "job": job,
            "machine": j + 1,
            "start": schedule.start[p][j],
            "end": schedule.completion[p][j],
        }
        for p, job in enumerate(schedule.sequence)
        for j in range(len(schedule.start[p]))
    ]
    payload = {
        "algorithm": result.algorithm,
        "sequence": list(result.sequence),
        "makespan": result.makespan,
        "condition_flags": flags,
        "notes": list(result.notes),
        "intervals": intervals,
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def gantt_csv(schedule: Schedule) -> str:
    """CSV of start/end intervals, one row per (sequence position, machine)."""
    lines = ["job,machine,start,end"]
    for p, job in enumerate(schedule.sequence):
        for j in range(len(schedule.start[p])):
            lines.append(
                f"{job},{j + 1},{schedule.start[p][j]},{schedule.completion[p][j]}"
            )
    return "\n".join(lines) + "\n"


_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class GenSpec:
    """Shape, inclusive time range and seed for a reproducible random instance."""

    n_jobs: int
    n_machines: int
    min_time: int
    max_time: int
    seed: int

    def __post_init__(self) -> None:
        if self.n_jobs < 1 or self.n_machines < 1:
            raise BadRangeError("need at least one job and one machine")
        if self.min_time < 0:
            raise BadRangeError(f"min_time must be >= 0, got {self.min_time}")
        if self.min_time > self.max_time:
            raise BadRangeError(
                f"min_time {self.min_time} exceeds max_time {self.max_time}"
            )


def _splitmix64(seed: int) -> Iterator[int]:
    """SplitMix64 word stream; fixed constants make seeds portable."""
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def generate_instance(spec: GenSpec) -> Instance:
    """Uniform random instance, fully determined by the spec.

    Cells are filled row-major (jobs outer, machines inner) with
    ``min_time + w % span`` where w is the next SplitMix64 word; the modulo
    bias is bounded by span / 2**64, irrelevant at benchmark ranges.
    """
    words = _splitmix64(spec.seed)
    span = spec.max_time - spec.min_time + 1
    rows = tuple(
        tuple(spec.min_time + next(words) % span for _ in range(spec.n_machines))
        for _ in range(spec.n_jobs)
    )
    return Instance(rows)
