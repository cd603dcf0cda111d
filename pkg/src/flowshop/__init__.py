"""Permutation flow shop scheduling toolkit.

A small, exact-integer library for the permutation flow shop: a
completion-time engine, Johnson's two-machine rule, Gupta's heuristic, a
composite-machine hybrid with best-position insertion, an exhaustive
optimum for small instances, plus instance parsing, generation and export.
"""

from .model import (
    Bounds,
    EmptyMatrixError,
    FlowshopError,
    Instance,
    InvalidPermutationError,
    InvalidPrefixError,
    JobSequence,
    NegativeTimeError,
    RaggedRowsError,
    Schedule,
    compute_schedule,
    lower_bound,
    makespan,
    partial_makespan,
    reverse_instance,
    validate_instance,
)
from .heuristics import (
    AlgoResult,
    CompositeTimes,
    ConditionFlags,
    DuplicateJobError,
    InvalidJobsError,
    NotTwoMachinesError,
    Partition,
    PriorityTable,
    SingleMachineError,
    TooFewMachinesError,
    best_pair_order,
    composite_times,
    dominance_conditions,
    gupta_partition,
    gupta_sequence,
    hybrid_priority_list,
    hybrid_solve,
    johnson_two_machine,
    neh_baseline,
    neh_insert_best,
    pi_table,
    pi_value,
)
from .exact import (
    DEFAULT_MAX_JOBS,
    OptimumResult,
    TooLargeError,
    exhaustive_optimum,
    heuristic_gap,
)
from .formats import (
    BadHeaderError,
    BadRangeError,
    GenSpec,
    NonIntegerError,
    WrongColumnCountError,
    WrongRowCountError,
    format_instance,
    gantt_csv,
    generate_instance,
    parse_instance,
    serialize_result,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # model
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
    # heuristics
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
    # exact
    "DEFAULT_MAX_JOBS",
    "TooLargeError",
    "OptimumResult",
    "exhaustive_optimum",
    "heuristic_gap",
    # formats
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
