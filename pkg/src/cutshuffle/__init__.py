"""
Exact measures on the symmetric group from riffle shuffles, cuts and affine
shuffles, with the algebraic and combinatorial identities that tie them to
polynomial factorization, Eulerian idempotents and patience sorting.
"""

from .perm_core import CapError, CycleType, Perm, enumerate_sn, perm_stats
from .exact_algebra import ClassMeasure, PermMeasure, convolve, cycle_index, total_variation
from .series import Series, SeriesRing
from .shuffle_measures import (
    cut_measure, gsr_sample, riffle_measure, shuffle_then_cut_measure, tv_riffle_table,
)
from .affine_shuffles import affine2_sample, affine_measure, ramanujan_sum
from .polyfactor import class_measure, poly_class_measure

__version__ = "0.1.0"

__all__ = [
    "CapError", "CycleType", "Perm", "enumerate_sn", "perm_stats",
    "ClassMeasure", "PermMeasure", "convolve", "cycle_index", "total_variation",
    "Series", "SeriesRing",
    "cut_measure", "gsr_sample", "riffle_measure", "shuffle_then_cut_measure",
    "tv_riffle_table", "affine2_sample", "affine_measure", "ramanujan_sum",
    "class_measure", "poly_class_measure",
]
