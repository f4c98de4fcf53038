"""Registry of permutation statistics.

Each statistic is a pure function from a permutation tuple to an integer,
wrapped in a :class:`StatDescriptor` carrying a stable string key, the
FindStat identifier when one exists, and metadata the scanning layer needs
(smallest meaningful n, whether values may be negative).  One statistic (the
circled-entry count of the shifted recording tableau) is registered through
its closed-form generating function only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from ..permutations import Perm
from ..polynomials import IntPolynomial
from . import basic, closed_forms, cycles, distances, entries, extrema, longcycle, patterns
from .basic import (
    comajor_index,
    descents,
    inversions,
    major_index,
)
from .closed_forms import (
    crossings_gf_closed,
    cycles_gf,
    descent_variant_gf,
    entry_gf,
    inv_entry_gf,
    mahonian_gf,
    q_eulerian_hat,
    rank_gf,
    shifted_circled_gf,
)
from .patterns import PatternSpec, classical_pattern_count, pattern_count, vincular_pattern_count

__all__ = [
    "StatDescriptor",
    "REGISTRY",
    "get_statistic",
    "statistic_keys",
    "PatternSpec",
    "pattern_count",
    "classical_pattern_count",
    "vincular_pattern_count",
    "mahonian_gf",
    "cycles_gf",
    "rank_gf",
    "entry_gf",
    "inv_entry_gf",
    "crossings_gf_closed",
    "q_eulerian_hat",
    "descent_variant_gf",
    "shifted_circled_gf",
    "basic",
    "cycles",
    "distances",
    "entries",
    "extrema",
    "longcycle",
    "patterns",
]


@dataclass(frozen=True)
class StatDescriptor:
    """A registered statistic: evaluator, identifiers, and scan metadata."""

    key: str
    name: str
    evaluator: Optional[Callable[[Perm], int]]
    findstat_id: Optional[int] = None
    gf: Optional[Callable[[int], IntPolynomial]] = None
    min_n: int = 1
    signed: bool = False

    def __call__(self, p: Perm) -> int:
        if self.evaluator is None:
            raise ValueError(f"{self.key} is registered through its generating function only")
        return self.evaluator(p)


def _descriptors() -> list[StatDescriptor]:
    S = StatDescriptor
    return [
        # Mahonian representatives
        S("st004", "major index", major_index, 4),
        S("st018", "number of inversions", inversions, 18),
        S("st833", "comajor index", comajor_index, 833),
        # descents and run shapes
        S("st021", "number of descents", descents, 21),
        S("st836", "number of width-2 descents", lambda p: basic.width_k_descents(p, 2), 836, min_n=3),
        S("st1520", "number of width-3 descents", lambda p: basic.width_k_descents(p, 3), 1520, min_n=4),
        S("st1114", "number of odd descents", basic.odd_descents, 1114),
        S("st1115", "number of even descents", basic.even_descents, 1115),
        S("st483", "number of monotone switches", basic.monotone_switches, 483),
        S("st638", "number of up-down runs", basic.up_down_runs, 638),
        # cycle diagram statistics
        S("st039", "number of crossings", cycles.crossings, 39),
        S("st223", "number of nestings", cycles.nestings, 223),
        S("st317", "cycle descent number", cycles.cycle_descents, 317),
        S("st1744", "number of 12 arrow patterns", cycles.arrow_12_patterns, 1744),
        # vincular patterns
        S("st356", "occurrences of 13-2", patterns.occurrences_13_2, 356),
        S("st357", "occurrences of 12-3", patterns.occurrences_12_3, 357),
        S("st358", "occurrences of 31-2", patterns.occurrences_31_2, 358),
        S("st360", "occurrences of 32-1", patterns.occurrences_32_1, 360),
        # classical pattern pairs
        S("st423", "occurrences of 123 or 132", patterns.occurrences_123_or_132, 423),
        S("st428", "occurrences of 123 or 213", patterns.occurrences_123_or_213, 428),
        S("st436", "occurrences of 231 or 321", patterns.occurrences_231_or_321, 436),
        S("st437", "occurrences of 312 or 321", patterns.occurrences_312_or_321, 437),
        # midpoints of length-3 monotone subsequences
        S("st371", "midpoints of decreasing length-3 subsequences", extrema.count_decreasing_midpoints, 371),
        S("st372", "midpoints of increasing length-3 subsequences", extrema.count_increasing_midpoints, 372),
        S("st1683", "distinct positions of 3 in 132 occurrences", extrema.distinct_positions_of_3_in_132, 1683),
        S("st1687", "distinct positions of 2 in 213 occurrences", extrema.distinct_positions_of_2_in_213, 1687),
        S("st373", "weak excedances that are decreasing midpoints", extrema.weak_excedance_decreasing_midpoints, 373),
        # partial extrema and cycles
        S("st007", "number of right-to-left maxima", extrema.count_r2l_maxima, 7),
        S("st031", "number of cycles", extrema.cycle_count, 31),
        S("st314", "number of left-to-right maxima", extrema.count_l2r_maxima, 314),
        S("st541", "values >= 2 with all smaller values to the right", extrema.small_values_to_the_right, 541),
        S("st542", "number of left-to-right minima", extrema.count_l2r_minima, 542),
        S("st991", "number of right-to-left minima", extrema.count_r2l_minima, 991),
        S("st216", "absolute length", extrema.absolute_length, 216),
        S("st316", "number of non-left-to-right maxima", extrema.non_l2r_maxima, 316),
        S("st1004", "positions that are l2r maxima or r2l minima", extrema.extrema_union, 1004),
        S("st1005", "positions that are l2r maxima xor r2l minima", extrema.extrema_xor, 1005),
        S("extrema_sum", "l2r maxima plus r2l minima", extrema.extrema_sum, None),
        # inversion variants
        S("st495", "inversions of distance at most 2", lambda p: basic.inversions_within_distance(p, 2), 495),
        S("st494", "inversions of distance at most 3", lambda p: basic.inversions_within_distance(p, 3), 494),
        S("st538", "number of even inversions", basic.even_inversions, 538),
        S("st539", "number of odd inversions", basic.odd_inversions, 539),
        S("st1726", "number of visible inversions", basic.visible_inversions, 1726),
        S("st1727", "number of invisible inversions", basic.invisible_inversions, 1727),
        # signed and alternating combinations
        S("st677", "standardized bi-alternating inversion number", basic.bialternating, 677),
        S("st825", "major index plus inverse major index", longcycle.maj_plus_imaj, 825),
        S("st1379", "inversions plus major index", longcycle.inv_plus_maj, 1379),
        S("st1377", "major index minus inversions", longcycle.maj_minus_inv, 1377, signed=True),
        S("maj_minus_imaj", "major index minus inverse major index", longcycle.maj_minus_imaj, None, signed=True),
        S("st462", "major index minus excedances", longcycle.maj_minus_excedances, 462, signed=True),
        S("st463", "admissible inversions (Lin-Zeng)", longcycle.admissible_inversions_lz, 463),
        S("st866", "admissible inversions (Shareshian-Wachs)", longcycle.admissible_inversions_sw, 866),
        S("st961", "shifted major index", longcycle.shifted_major_index, 961),
        S("st1911", "weighted descent variant minus inversions", basic.descent_variant_minus_inversions, 1911, signed=True),
        # sorting and factorization distances
        S("st809", "reduced reflection length", distances.reduced_reflection_length, 809),
        S("st1579", "cyclic comparator swaps to sort", distances.cyclic_sort_swaps, 1579),
        S("st1076", "factorization length over cyclic shifts of (12)", distances.cyclic_shift_factorization_length, 1076),
        S("st1077", "prefix exchange distance", distances.prefix_exchange_distance, 1077),
        # entries and rank
        S("st054", "first entry", entries.first_entry, 54),
        S("st740", "last entry", entries.last_entry, 740),
        S("st1806", "upper middle entry", entries.upper_middle_entry, 1806),
        S("st1807", "lower middle entry", entries.lower_middle_entry, 1807),
        S("st1557", "inversions of the second entry", lambda p: entries.inversions_of_ith_entry(p, 2), 1557, min_n=2),
        S("st1556", "inversions of the third entry", lambda p: entries.inversions_of_ith_entry(p, 3), 1556, min_n=3),
        S("st020", "lexicographic rank", entries.rank, 20),
        # generating-function-only entry
        S("st864", "circled entries of the shifted recording tableau", None, 864, gf=shifted_circled_gf),
    ]


_ALL = _descriptors()
REGISTRY: dict[str, StatDescriptor] = {d.key: d for d in _ALL}
if len(REGISTRY) != len(_ALL):
    raise RuntimeError("duplicate statistic keys in the registry")

_BY_ID: dict[int, str] = {
    d.findstat_id: d.key for d in REGISTRY.values() if d.findstat_id is not None
}
if len(_BY_ID) != sum(1 for d in _ALL if d.findstat_id is not None):
    raise RuntimeError("duplicate FindStat ids in the registry")


def statistic_keys() -> tuple[str, ...]:
    return tuple(REGISTRY)


def get_statistic(key: str | int) -> StatDescriptor:
    """Look a statistic up by registry key, FindStat id, or bare number string."""
    if isinstance(key, int):
        if key in _BY_ID:
            return REGISTRY[_BY_ID[key]]
        raise KeyError(f"no statistic with id {key}")
    if key in REGISTRY:
        return REGISTRY[key]
    if key.isdigit() and int(key) in _BY_ID:
        return REGISTRY[_BY_ID[int(key)]]
    raise KeyError(f"unknown statistic {key!r}")
