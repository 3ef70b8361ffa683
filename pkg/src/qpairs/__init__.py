"""Exact q-series tools for ST partition pairs.

The subpackages build up from coefficient rings and truncated Laurent series
(:mod:`qpairs.algebra`) through products and brackets (:mod:`qpairs.qseries`)
and Lambert sums (:mod:`qpairs.lambert`) to the partition side
(:mod:`qpairs.partitions`) and the named identity checks
(:mod:`qpairs.identities`).
"""

from .partitions import (
    CrankTable,
    Partition,
    PartitionPair,
    crank_table_enum,
    enumerate_st_pairs,
    paircrank,
    st_count,
    st_series,
    st_series_z_crankform,
    st_series_z_def,
    st_series_z_lambert,
)

__version__ = "0.1.0"

__all__ = [
    "CrankTable",
    "Partition",
    "PartitionPair",
    "crank_table_enum",
    "enumerate_st_pairs",
    "paircrank",
    "st_count",
    "st_series",
    "st_series_z_crankform",
    "st_series_z_def",
    "st_series_z_lambert",
]
