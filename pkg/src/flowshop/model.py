"""Permutation flow shop data model and completion-time engine.

All processing times are non-negative integers, so every derived quantity
(start, completion, makespan) is exact and equality-testable. Job ids are
1-based in every public sequence, matching the usual J1..Jn naming; matrix
rows are indexed 0-based internally.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

__all__ = [
    "FlowshopError",
    "EmptyMatrixError",
    "RaggedRowsError",
    "NegativeTimeError",
    "InvalidPermutationError",
    "InvalidPrefixError",
    "Instance",
    "JobSequence",
    "Schedule",
    "Bounds",
    "validate_instance",
    "compute_schedule",
    "makespan",
    "partial_makespan",
    "lower_bound",
    "reverse_instance",
]


class FlowshopError(Exception):
    """Base class for all domain errors raised by this package."""


class EmptyMatrixError(FlowshopError):
    """The processing-time matrix has no rows or no columns."""


class RaggedRowsError(FlowshopError):
    """Rows of the processing-time matrix differ in length."""


class NegativeTimeError(FlowshopError):
    """A processing time is negative."""


class InvalidPermutationError(FlowshopError):
    """A sequence is not a permutation of the instance's job ids."""


class InvalidPrefixError(FlowshopError):
    """A prefix contains duplicate or out-of-range job ids."""


# A job sequence is a tuple of 1-based job ids; a full sequence is a
# permutation of 1..n_jobs and is the single processing order every
# machine follows.
JobSequence = tuple[int, ...]


@dataclass(frozen=True)
class Instance:
    """An n_jobs x n_machines matrix of integer processing times.

    ``times[i][j]`` is the duration of job ``i+1`` on machine ``j+1``.
    Zero durations are legal (a job may effectively skip a machine).
    Instances validate on construction and are immutable afterwards;
    use :func:`validate_instance` to build one from raw nested lists.
    """

    times: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.times or not self.times[0]:
            raise EmptyMatrixError("matrix needs at least one job and one machine")
        width = len(self.times[0])
        for i, row in enumerate(self.times):
            if len(row) != width:
                raise RaggedRowsError(
                    f"row {i + 1} has {len(row)} entries, expected {width}"
                )
            for j, value in enumerate(row):
                if not isinstance(value, int):
                    raise TypeError(
                        f"row {i + 1}, column {j + 1}: times must be integers"
                    )
                if value < 0:
                    raise NegativeTimeError(
                        f"row {i + 1}, column {j + 1}: negative time {value}"
                    )

    @property
    def n_jobs(self) -> int:
        return len(self.times)

    @property
    def n_machines(self) -> int:
        return len(self.times[0])

    def job_row(self, job: int) -> tuple[int, ...]:
        """Processing times of a 1-based job id across all machines."""
        return self.times[job - 1]


@dataclass(frozen=True)
class Schedule:
    """Semi-active schedule of one job sequence.

    ``start[p][j]`` and ``completion[p][j]`` are indexed by position in the
    sequence (not job id) and by machine. Every operation begins as early
    as its machine and job predecessors allow, with no inserted idle time:

        start[p][j] = max(completion[p-1][j], completion[p][j-1])

    where a missing neighbour counts as 0. The makespan is the completion
    of the last position on the last machine.
    """

    sequence: JobSequence
    start: tuple[tuple[int, ...], ...]
    completion: tuple[tuple[int, ...], ...]
    makespan: int


@dataclass(frozen=True)
class Bounds:
    """Two quick lower bounds on the optimal makespan.

    ``machine_load_lb`` is the heaviest machine (largest column sum);
    ``job_length_lb`` is the longest job (largest row sum). No schedule
    can finish before either.
    """

    machine_load_lb: int
    job_length_lb: int

    @property
    def combined(self) -> int:
        return max(self.machine_load_lb, self.job_length_lb)


def validate_instance(raw: Iterable[Iterable[int]]) -> Instance:
    """Check a raw matrix (rows = jobs, columns = machines) and freeze it.

    Raises:
        EmptyMatrixError: no rows, or a first row with no columns.
        RaggedRowsError: row lengths differ.
        NegativeTimeError: any entry is negative.
    """
    return Instance(tuple(tuple(row) for row in raw))


def _check_permutation(inst: Instance, seq: Sequence[int]) -> None:
    n = inst.n_jobs
    if len(seq) != n:
        raise InvalidPermutationError(f"sequence has {len(seq)} jobs, instance has {n}")
    seen = set(seq)
    if len(seen) != n:
        raise InvalidPermutationError("sequence repeats a job id")
    if seen != set(range(1, n + 1)):
        raise InvalidPermutationError(f"sequence is not a permutation of 1..{n}")


def _check_prefix(inst: Instance, prefix: Sequence[int]) -> None:
    n = inst.n_jobs
    seen = set()
    for job in prefix:
        if not 1 <= job <= n:
            raise InvalidPrefixError(f"job id {job} out of range 1..{n}")
        if job in seen:
            raise InvalidPrefixError(f"job id {job} appears twice")
        seen.add(job)


def _chain_completions(inst: Instance, jobs: Sequence[int]) -> list[int]:
    """Rolling per-machine completion line after scheduling ``jobs`` in order."""
    m = inst.n_machines
    line = [0] * m
    times = inst.times
    for job in jobs:
        row = times[job - 1]
        line[0] += row[0]
        prev = line[0]
        for j in range(1, m):
            cur = line[j]
            prev = (prev if prev > cur else cur) + row[j]
            line[j] = prev
    return line


def compute_schedule(inst: Instance, seq: Sequence[int]) -> Schedule:
    """Full start/completion matrices for a permutation, cell by cell.

    Applies the semi-active recursion position by position and machine by
    machine; deterministic for a given (instance, sequence) pair.

    Raises:
        InvalidPermutationError: duplicate, missing, or out-of-range job id.
    """
    _check_permutation(inst, seq)
    m = inst.n_machines
    start: list[tuple[int, ...]] = []
    completion: list[tuple[int, ...]] = []
    for p, job in enumerate(seq):
        row = inst.times[job - 1]
        srow: list[int] = []
        crow: list[int] = []
        for j in range(m):
            above = completion[p - 1][j] if p > 0 else 0
            left = crow[j - 1] if j > 0 else 0
            begin = above if above > left else left
            srow.append(begin)
            crow.append(begin + row[j])
        start.append(tuple(srow))
        completion.append(tuple(crow))
    return Schedule(
        sequence=tuple(seq),
        start=tuple(start),
        completion=tuple(completion),
        makespan=completion[-1][-1],
    )


def makespan(inst: Instance, seq: Sequence[int]) -> int:
    """Makespan of a full permutation; equals ``compute_schedule(...).makespan``."""
    _check_permutation(inst, seq)
    return _chain_completions(inst, seq)[-1]


def partial_makespan(inst: Instance, prefix: Sequence[int]) -> int:
    """Makespan when only the prefix jobs are scheduled, in the given order.

    The empty prefix yields 0.

    Raises:
        InvalidPrefixError: duplicate or out-of-range job id.
    """
    _check_prefix(inst, prefix)
    if not prefix:
        return 0
    return _chain_completions(inst, prefix)[-1]


def lower_bound(inst: Instance) -> Bounds:
    """Machine-load and job-length lower bounds for the instance."""
    machine_load = max(
        sum(row[j] for row in inst.times) for j in range(inst.n_machines)
    )
    job_length = max(sum(row) for row in inst.times)
    return Bounds(machine_load_lb=machine_load, job_length_lb=job_length)


def reverse_instance(inst: Instance) -> Instance:
    """Instance with the machine order reversed; applying it twice is a no-op.

    Useful for the classic reversibility identity: a sequence's makespan on
    the original equals the reversed sequence's makespan on the reversal.
    """
    return Instance(tuple(tuple(reversed(row)) for row in inst.times))
