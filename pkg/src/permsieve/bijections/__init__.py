"""Registry of bijective maps on S_n.

Every map is a pure function from a permutation tuple to a permutation tuple
of the same size, wrapped in a :class:`MapDescriptor` with a stable key, the
FindStat identifier where one exists, and metadata the orbit and scanning
layers use: the smallest n the map is defined on, whether the map is an
involution, and the expected orbit size as a function of n when every orbit
has the same size.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Callable, Optional

from ..permutations import Perm
from . import basic, involutions, laguerre, motzkin
from .basic import (
    complement,
    conjugate_by_long_cycle,
    inverse_map,
    lehmer_code_rotation,
    prefix_reverse_3,
    reverse,
    rotation,
    swap_first_last,
    swap_first_third,
    swap_first_two,
    swap_last_two,
    swap_positions,
    swap_second_third,
    toric_promotion,
)
from .involutions import alexandersson_kebede, psi_32_1, psi_3star, psi_block
from .laguerre import (
    ArcDiagram,
    invert_laguerre_heap,
    laguerre_decode,
    laguerre_encode,
    laguerre_reflect,
)
from .motzkin import ColoredMotzkinPath, corteel, fz_decode, fz_encode, motzkin_complement

__all__ = [
    "MapDescriptor",
    "MAPS",
    "get_map",
    "map_keys",
    "position_swap_involution",
    "reverse",
    "complement",
    "rotation",
    "inverse_map",
    "conjugate_by_long_cycle",
    "lehmer_code_rotation",
    "toric_promotion",
    "corteel",
    "fz_encode",
    "fz_decode",
    "motzkin_complement",
    "ColoredMotzkinPath",
    "invert_laguerre_heap",
    "laguerre_encode",
    "laguerre_reflect",
    "laguerre_decode",
    "ArcDiagram",
    "alexandersson_kebede",
    "psi_3star",
    "psi_32_1",
    "psi_block",
    "swap_positions",
    "basic",
    "involutions",
    "laguerre",
    "motzkin",
]


@dataclass(frozen=True)
class MapDescriptor:
    """A registered bijection with the metadata used by orbit analysis."""

    key: str
    name: str
    applier: Callable[[Perm], Perm]
    findstat_id: Optional[int] = None
    min_n: int = 1
    involution: bool = False
    orbit_size: Optional[Callable[[int], int]] = None

    def __call__(self, p: Perm) -> Perm:
        return self.applier(p)


def _descriptors() -> list[MapDescriptor]:
    M = MapDescriptor
    return [
        M("reverse", "reverse", reverse, involution=True, orbit_size=lambda n: 2 if n >= 2 else 1),
        M("complement", "complement", complement, involution=True, orbit_size=lambda n: 2 if n >= 2 else 1),
        M("inverse", "inverse", inverse_map, involution=True),
        M("rotation", "rotation", rotation, findstat_id=179, orbit_size=lambda n: n),
        M("conj_long_cycle", "conjugation by the long cycle", conjugate_by_long_cycle, findstat_id=265),
        M(
            "lehmer_code_rotation",
            "Lehmer code rotation",
            lehmer_code_rotation,
            findstat_id=149,
            orbit_size=lambda n: lcm(*range(1, n + 1)),
        ),
        M(
            "toric_promotion",
            "toric promotion",
            toric_promotion,
            findstat_id=310,
            min_n=2,
            orbit_size=lambda n: n - 1 if n >= 2 else 1,
        ),
        M("corteel", "Corteel map", corteel, findstat_id=239, involution=True),
        M(
            "invert_laguerre_heap",
            "invert Laguerre heap",
            invert_laguerre_heap,
            findstat_id=241,
            involution=True,
        ),
        M("alexandersson_kebede", "Alexandersson-Kebede map", alexandersson_kebede, involution=True),
        M("psi_3star", "maximal 3**-midpoint toggle", psi_3star, involution=True),
        M("psi_32_1", "recursive 1-2 value swap", psi_32_1, involution=True),
        M("psi_block", "out-of-block value pair swap", psi_block, involution=True),
        M("swap_last_two", "swap last two positions", swap_last_two, min_n=2, involution=True),
        M("swap_first_third", "swap positions 1 and 3", swap_first_third, min_n=3, involution=True),
        M("prefix_reverse_3", "reverse first three positions", prefix_reverse_3, min_n=3, involution=True),
        M("swap_first_last", "swap first and last positions", swap_first_last, min_n=2, involution=True),
        M("swap_first_two", "swap first two positions", swap_first_two, min_n=2, involution=True),
        M("swap_second_third", "swap positions 2 and 3", swap_second_third, min_n=3, involution=True),
    ]


_ALL = _descriptors()
MAPS: dict[str, MapDescriptor] = {d.key: d for d in _ALL}
if len(MAPS) != len(_ALL):
    raise RuntimeError("duplicate map keys in the registry")

_SWAP_ALIASES = {
    "last-two": "swap_last_two",
    "first-third": "swap_first_third",
    "prefix-reverse-3": "prefix_reverse_3",
    "first-last": "swap_first_last",
    "first-two": "swap_first_two",
    "second-third": "swap_second_third",
}


def position_swap_involution(spec: str) -> MapDescriptor:
    """Look up one of the fixed-point-free positional swaps by its short name."""
    if spec not in _SWAP_ALIASES:
        raise KeyError(f"unknown position swap {spec!r}; choose from {sorted(_SWAP_ALIASES)}")
    return MAPS[_SWAP_ALIASES[spec]]


def map_keys() -> tuple[str, ...]:
    return tuple(MAPS)


def get_map(key: str) -> MapDescriptor:
    if key in MAPS:
        return MAPS[key]
    if key in _SWAP_ALIASES:
        return MAPS[_SWAP_ALIASES[key]]
    raise KeyError(f"unknown map {key!r}")
