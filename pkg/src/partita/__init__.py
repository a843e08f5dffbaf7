"""Exact counts of integer partitions into a given number of parts.

The central quantity is P(n, m), the number of partitions of n into
exactly m parts, with Q(n, m) its distinct-parts twin.  The package
offers scalar counts with automatic algorithm dispatch (``p_parts``,
``q_parts``), whole rows and columns of the tables (``p_row``,
``p_column``, ``q_row``, ``q_column``), cached unrestricted series with
several interchangeable recurrences (``PartitionSeries``,
``DistinctSeries``), persistence for those caches, and a deliberately
slow enumeration oracle for independent verification.  All counts are
exact Python integers.
"""

from .core import (
    ALG1,
    ALG2,
    CLOSED_FORM,
    DEFAULT_CROSSOVER,
    FAST_PATH,
    INDEX_CEILING,
    StepEstimate,
    alg1_steps,
    alg2_steps,
    analytic_crossover,
    analytic_crossover_floor,
    dispatch_plan,
    expansion_depth,
    p_parts,
    p_parts_alg1,
    p_parts_alg2,
    p_parts_closed,
    practical_crossover,
    q_parts,
)
from .lists import (
    COLUMN_POWER,
    COLUMN_SCALE,
    causal_convolution,
    p_column,
    p_row,
    q_column,
    q_row,
)
from .oracle import (
    ORACLE_LIMIT,
    OracleLimitError,
    count_partitions,
    count_with_greatest_part,
    distinct_length_counts,
    iter_partitions,
    partition_length_counts,
)
from .series import (
    CacheFormatError,
    DistinctSeries,
    PartitionSeries,
    is_generalized_pentagonal,
    load_series,
    save_series,
    serialize_series,
    series_checksum,
    shared_p_series,
    shared_q_series,
)

__version__ = "0.1.0"

__all__ = [
    "ALG1",
    "ALG2",
    "CLOSED_FORM",
    "COLUMN_POWER",
    "COLUMN_SCALE",
    "DEFAULT_CROSSOVER",
    "FAST_PATH",
    "INDEX_CEILING",
    "ORACLE_LIMIT",
    "CacheFormatError",
    "DistinctSeries",
    "OracleLimitError",
    "PartitionSeries",
    "StepEstimate",
    "alg1_steps",
    "alg2_steps",
    "analytic_crossover",
    "analytic_crossover_floor",
    "causal_convolution",
    "count_partitions",
    "count_with_greatest_part",
    "dispatch_plan",
    "distinct_length_counts",
    "expansion_depth",
    "is_generalized_pentagonal",
    "iter_partitions",
    "load_series",
    "p_column",
    "p_parts",
    "p_parts_alg1",
    "p_parts_alg2",
    "p_parts_closed",
    "p_row",
    "partition_length_counts",
    "practical_crossover",
    "q_column",
    "q_parts",
    "q_row",
    "save_series",
    "serialize_series",
    "series_checksum",
    "shared_p_series",
    "shared_q_series",
    "__version__",
]
