"""Classical and vincular pattern occurrence counting.

A vincular pattern glues designated neighbouring pattern letters so they must
sit in adjacent positions of the host permutation; adjacency is on positions,
never on values.  The dash notation ``32-1`` means the letters 3 and 2 are
glued and the 1 may appear anywhere later, so an occurrence consists of
positions (i, i+1, k) with k > i+1 and sigma_i > sigma_{i+1} > sigma_k.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..permutations import Perm, check_permutation


@dataclass(frozen=True)
class PatternSpec:
    """A pattern of [k] plus the set of glued neighbour pairs.

    ``adjacent`` holds 1-based letter indices t such that pattern positions
    t and t+1 must be adjacent in the host; empty for classical patterns.
    """

    kind: str
    pattern: tuple[int, ...]
    adjacent: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        check_permutation(self.pattern)
        if len(self.pattern) > 4:
            raise ValueError("patterns longer than 4 are not supported")
        if self.kind not in ("classical", "vincular"):
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        if self.kind == "classical" and self.adjacent:
            raise ValueError("classical patterns carry no adjacency constraints")
        if any(not 1 <= t < len(self.pattern) for t in self.adjacent):
            raise ValueError("adjacency indices must name neighbouring letter pairs")

    @staticmethod
    def from_string(text: str) -> "PatternSpec":
        """Parse dash notation: ``"132"`` is classical, ``"32-1"`` glues 3 and 2.

        >>> PatternSpec.from_string("32-1")
        PatternSpec(kind='vincular', pattern=(3, 2, 1), adjacent=frozenset({1}))
        """
        blocks = text.split("-")
        letters = [int(ch) for ch in "".join(blocks)]
        if len(blocks) == 1:
            return PatternSpec("classical", tuple(letters))
        adjacent = set()
        pos = 0
        for block in blocks:
            for t in range(pos + 1, pos + len(block)):
                adjacent.add(t)
            pos += len(block)
        return PatternSpec("vincular", tuple(letters), frozenset(adjacent))

    def blocks(self) -> tuple[int, ...]:
        """Lengths of the maximal glued letter runs, left to right."""
        lengths = []
        run = 1
        for t in range(1, len(self.pattern)):
            if t in self.adjacent:
                run += 1
            else:
                lengths.append(run)
                run = 1
        lengths.append(run)
        return tuple(lengths)


def pattern_count(p: Perm, spec: PatternSpec) -> int:
    """Number of occurrences of ``spec`` in p.

    >>> pattern_count((3, 2, 4, 1), PatternSpec.from_string("32-1"))
    1
    >>> pattern_count((4, 2, 3, 1), PatternSpec.from_string("32-1"))
    1
    """
    n = len(p)
    pat = spec.pattern
    block_lengths = spec.blocks()
    count = 0

    def order_matches(positions: list[int]) -> bool:
        vals = [p[i - 1] for i in positions]
        k = len(vals)
        for a in range(k):
            for b in range(a + 1, k):
                if (vals[a] < vals[b]) != (pat[a] < pat[b]):
                    return False
        return True

    def place(block: int, start_min: int, positions: list[int]) -> None:
        nonlocal count
        if block == len(block_lengths):
            count += order_matches(positions)
            return
        length = block_lengths[block]
        tail = sum(block_lengths[block + 1 :])
        for s in range(start_min, n - length - tail + 2):
            place(block + 1, s + length, positions + list(range(s, s + length)))

    place(0, 1, [])
    return count


def classical_pattern_count(p: Perm, spec: PatternSpec) -> int:
    if spec.kind != "classical":
        raise ValueError("classical spec expected")
    return pattern_count(p, spec)


def vincular_pattern_count(p: Perm, spec: PatternSpec) -> int:
    if spec.kind != "vincular":
        raise ValueError("vincular spec expected")
    return pattern_count(p, spec)


PATTERN_13_2 = PatternSpec.from_string("13-2")
PATTERN_12_3 = PatternSpec.from_string("12-3")
PATTERN_31_2 = PatternSpec.from_string("31-2")
PATTERN_32_1 = PatternSpec.from_string("32-1")


def occurrences_13_2(p: Perm) -> int:
    return pattern_count(p, PATTERN_13_2)


def occurrences_12_3(p: Perm) -> int:
    return pattern_count(p, PATTERN_12_3)


def occurrences_31_2(p: Perm) -> int:
    return pattern_count(p, PATTERN_31_2)


def occurrences_32_1(p: Perm) -> int:
    return pattern_count(p, PATTERN_32_1)


def _classical_pair(p: Perm, first: str, second: str) -> int:
    return pattern_count(p, PatternSpec.from_string(first)) + pattern_count(
        p, PatternSpec.from_string(second)
    )


def occurrences_123_or_132(p: Perm) -> int:
    return _classical_pair(p, "123", "132")


def occurrences_123_or_213(p: Perm) -> int:
    return _classical_pair(p, "123", "213")


def occurrences_231_or_321(p: Perm) -> int:
    return _classical_pair(p, "231", "321")


def occurrences_312_or_321(p: Perm) -> int:
    return _classical_pair(p, "312", "321")
