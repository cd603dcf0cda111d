"""Constructive sequencing heuristics for the permutation flow shop.

Three families live here:

* Johnson's rule, optimal for exactly two machines.
* Gupta's heuristic: adjacent-pair priorities sort two first-vs-last-machine
  groups, which are then concatenated.
* A hybrid that collapses m >= 3 machines onto two composite machines
  (first m-1 and last m-1 summed), orders the groups by those totals, and
  optionally refines the order with best-position insertion.

Every function is pure; ties are always broken deterministically, with
ascending job id as the final key.
"""

from dataclasses import dataclass
from typing import Literal

from .model import (
    FlowshopError,
    Instance,
    JobSequence,
    makespan,
    partial_makespan,
)

__all__ = [
    "SingleMachineError",
    "NotTwoMachinesError",
    "TooFewMachinesError",
    "InvalidJobsError",
    "DuplicateJobError",
    "PriorityTable",
    "Partition",
    "CompositeTimes",
    "ConditionFlags",
    "AlgoResult",
    "pi_value",
    "pi_table",
    "gupta_partition",
    "gupta_sequence",
    "johnson_two_machine",
    "composite_times",
    "dominance_conditions",
    "hybrid_priority_list",
    "best_pair_order",
    "neh_insert_best",
    "hybrid_solve",
    "neh_baseline",
]


class SingleMachineError(FlowshopError):
    """Adjacent-pair priorities need at least two machines."""


class NotTwoMachinesError(FlowshopError):
    """Johnson's rule applies to exactly two machines."""


class TooFewMachinesError(FlowshopError):
    """Composite-machine constructions need at least three machines."""


class InvalidJobsError(FlowshopError):
    """A job argument is out of range or the pair is degenerate."""


class DuplicateJobError(FlowshopError):
    """The job to insert is already part of the partial sequence."""


@dataclass(frozen=True)
class PriorityTable:
    """Per-job priority: the minimum over adjacent machine pairs of their summed times."""

    pi: dict[int, int]


@dataclass(frozen=True)
class Partition:
    """Jobs split into two groups, each already in a definite order."""

    u: JobSequence
    v: JobSequence


@dataclass(frozen=True)
class CompositeTimes:
    """Per-job totals on the two composite machines.

    ``x[i]`` sums job i's times on machines 1..m-1, ``y[i]`` on machines
    2..m; for every job x + last machine time = y + first machine time.
    """

    x: dict[int, int]
    y: dict[int, int]


@dataclass(frozen=True)
class ConditionFlags:
    """Outcome of the two extrema checks that justify the composite reduction.

    cond1: the largest first-machine time reaches the smallest time found
    on any intermediate machine. cond2: the smallest last-machine time
    reaches the largest intermediate time.
    """

    cond1: bool
    cond2: bool

    @property
    def any(self) -> bool:
        return self.cond1 or self.cond2


@dataclass(frozen=True)
class AlgoResult:
    """A heuristic's output: the sequence it chose and that sequence's makespan."""

    algorithm: str
    sequence: JobSequence
    makespan: int
    flags: ConditionFlags | None = None
    notes: tuple[str, ...] = ()


def _job_row(inst: Instance, job: int) -> tuple[int, ...]:
    if not 1 <= job <= inst.n_jobs:
        raise InvalidJobsError(f"job id {job} out of range 1..{inst.n_jobs}")
    return inst.times[job - 1]


def pi_value(inst: Instance, job: int) -> int:
    """Minimum over adjacent machine pairs (k, k+1) of the job's summed times."""
    if inst.n_machines < 2:
        raise SingleMachineError("need at least 2 machines for adjacent pairs")
    row = _job_row(inst, job)
    return min(row[k] + row[k + 1] for k in range(inst.n_machines - 1))


def pi_table(inst: Instance) -> PriorityTable:
    """Priority values for every job of the instance."""
    return PriorityTable(
        pi={job: pi_value(inst, job) for job in range(1, inst.n_jobs + 1)}
    )


def gupta_partition(inst: Instance) -> Partition:
    """Split jobs by first-vs-last machine time.

    Group u holds jobs strictly faster on the first machine than on the
    last; everything else (ties included) goes to v. Both groups are
    emitted in job-id order; sorting happens later.
    """
    if inst.n_machines < 2:
        raise SingleMachineError("need at least 2 machines to compare first vs last")
    u = tuple(
        job for job in range(1, inst.n_jobs + 1)
        if inst.times[job - 1][0] < inst.times[job - 1][-1]
    )
    v = tuple(job for job in range(1, inst.n_jobs + 1) if job not in set(u))
    return Partition(u=u, v=v)


def gupta_sequence(inst: Instance) -> AlgoResult:
    """Gupta's heuristic: u ascending by priority, v descending, concatenated."""
    part = gupta_partition(inst)
    pi = pi_table(inst).pi
    ordered_u = sorted(part.u, key=lambda job: (pi[job], job))
    ordered_v = sorted(part.v, key=lambda job: (-pi[job], job))
    seq = tuple(ordered_u + ordered_v)
    return AlgoResult(algorithm="gupta", sequence=seq, makespan=makespan(inst, seq))


def johnson_two_machine(inst: Instance) -> AlgoResult:
    """Johnson's rule for exactly two machines; the result is makespan-optimal.

    Jobs faster on machine 1 go first in ascending machine-1 time, the rest
    follow in descending machine-2 time; ties fall back to ascending job id.
    """
    if inst.n_machines != 2:
        raise NotTwoMachinesError(
            f"Johnson's rule needs exactly 2 machines, got {inst.n_machines}"
        )
    first = [job for job in range(1, inst.n_jobs + 1) if inst.times[job - 1][0] < inst.times[job - 1][1]]
    second = [job for job in range(1, inst.n_jobs + 1) if inst.times[job - 1][0] >= inst.times[job - 1][1]]
    first.sort(key=lambda job: (inst.times[job - 1][0], job))
    second.sort(key=lambda job: (-inst.times[job - 1][1], job))
    seq = tuple(first + second)
    return AlgoResult(algorithm="johnson", sequence=seq, makespan=makespan(inst, seq))


def composite_times(inst: Instance) -> CompositeTimes:
    """Sum each job's times onto the two overlapping composite machines."""
    if inst.n_machines < 3:
        raise TooFewMachinesError(
            f"composite machines need at least 3 real machines, got {inst.n_machines}"
        )
    x = {job: sum(inst.times[job - 1][:-1]) for job in range(1, inst.n_jobs + 1)}
    y = {job: sum(inst.times[job - 1][1:]) for job in range(1, inst.n_jobs + 1)}
    return CompositeTimes(x=x, y=y)


def dominance_conditions(inst: Instance) -> ConditionFlags:
    """Evaluate the two extrema checks over the intermediate machines.

    cond1: max over jobs of the first-machine time >= min over all
    intermediate cells. cond2: min over jobs of the last-machine time >=
    max over all intermediate cells. Either one justifies treating the
    composite two-machine ordering as well-founded.
    """
    if inst.n_machines < 3:
        raise TooFewMachinesError(
            f"dominance checks need at least 3 machines, got {inst.n_machines}"
        )
    intermediate = [row[j] for row in inst.times for j in range(1, inst.n_machines - 1)]
    cond1 = max(row[0] for row in inst.times) >= min(intermediate)
    cond2 = min(row[-1] for row in inst.times) >= max(intermediate)
    return ConditionFlags(cond1=cond1, cond2=cond2)


def hybrid_priority_list(inst: Instance) -> Partition:
    """Group and order jobs by their composite-machine totals.

    u holds jobs with x strictly below y, sorted ascending by x; v holds
    the rest, sorted descending by y. Ties break by ascending y, then
    ascending job id.
    """
    ct = composite_times(inst)
    u = sorted(
        (job for job in ct.x if ct.x[job] < ct.y[job]),
        key=lambda job: (ct.x[job], ct.y[job], job),
    )
    v = sorted(
        (job for job in ct.x if ct.x[job] >= ct.y[job]),
        key=lambda job: (-ct.y[job], job),
    )
    return Partition(u=tuple(u), v=tuple(v))


def best_pair_order(inst: Instance, a: int, b: int) -> tuple[int, int]:
    """Order two jobs to minimise their two-job makespan; ties keep (a, b)."""
    if a == b:
        raise InvalidJobsError(f"need two distinct jobs, got {a} twice")
    _job_row(inst, a)
    _job_row(inst, b)
    if partial_makespan(inst, (b, a)) < partial_makespan(inst, (a, b)):
        return (b, a)
    return (a, b)


def neh_insert_best(inst: Instance, partial: JobSequence, job: int) -> JobSequence:
    """Insert a job at the position of a partial sequence that minimises its makespan.

    All len(partial)+1 positions are tried; on ties the earliest position
    wins, so appending at the end never beats the chosen position.
    """
    if job in partial:
        raise DuplicateJobError(f"job {job} is already in the partial sequence")
    _job_row(inst, job)
    best_seq: JobSequence = ()
    best_value = -1
    for pos in range(len(partial) + 1):
        trial = partial[:pos] + (job,) + partial[pos:]
        value = partial_makespan(inst, trial)
        if best_value < 0 or value < best_value:
            best_value = value
            best_seq = trial
    return best_seq


def _insertion_build(inst: Instance, order: JobSequence) -> JobSequence:
    """Grow a sequence from a priority order: best pair first, then best insertion."""
    if len(order) < 2:
        return order
    seq: JobSequence = best_pair_order(inst, order[0], order[1])
    for job in order[2:]:
        seq = neh_insert_best(inst, seq, job)
    return seq


def hybrid_solve(
    inst: Instance,
    variant: Literal["insertion", "concatenation"] = "insertion",
) -> AlgoResult:
    """Composite-machine hybrid heuristic.

    Builds the priority list (ordered group u, then ordered group v). The
    ``concatenation`` variant returns that list as-is; the default
    ``insertion`` variant orders the first two jobs by their pair makespan
    and inserts every following job at its best position.

    Two-machine instances fall back to Johnson's rule (composite machines
    would be degenerate) and single-machine instances keep job-id order,
    since every order has the same makespan there. When neither dominance
    condition holds the heuristic still runs, with a warning attached.
    """
    if variant not in ("insertion", "concatenation"):
        raise ValueError(f"unknown variant {variant!r}")
    algorithm = "hybrid" if variant == "insertion" else "hybrid-concat"

    if inst.n_machines == 1:
        seq = tuple(range(1, inst.n_jobs + 1))
        return AlgoResult(
            algorithm=algorithm,
            sequence=seq,
            makespan=makespan(inst, seq),
            notes=("single machine: every order is equivalent, job-id order kept",),
        )
    if inst.n_machines == 2:
        base = johnson_two_machine(inst)
        return AlgoResult(
            algorithm=algorithm,
            sequence=base.sequence,
            makespan=base.makespan,
            notes=("two machines: delegated to Johnson's rule",),
        )

    flags = dominance_conditions(inst)
    part = hybrid_priority_list(inst)
    merged = part.u + part.v
    notes: tuple[str, ...] = ()
    if not flags.any:
        notes = (
            "neither dominance condition holds; the composite ordering is a plain heuristic here",
        )
    if variant == "concatenation":
        seq = merged
    else:
        seq = _insertion_build(inst, merged)
    return AlgoResult(
        algorithm=algorithm,
        sequence=seq,
        makespan=makespan(inst, seq),
        flags=flags,
        notes=notes,
    )


def neh_baseline(inst: Instance) -> AlgoResult:
    """Classic insertion baseline: jobs by descending total work, then best insertion.

    Ties in total work break by ascending job id; the first two jobs are
    ordered by their pair makespan, so two identical jobs stay in id order.
    """
    order = tuple(
        sorted(
            range(1, inst.n_jobs + 1),
            key=lambda job: (-sum(inst.times[job - 1]), job),
        )
    )
    seq = _insertion_build(inst, order)
    return AlgoResult(
        algorithm="neh-baseline", sequence=seq, makespan=makespan(inst, seq)
    )
