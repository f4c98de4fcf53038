"""Noncrossing arc diagrams of permutations and the vertical reflection map.

Every maximal decreasing run of the one-line word contributes one arc per
adjacent pair of its letters.  When the points 1..n are lined up vertically,
a value lying strictly between the endpoints of an arc sits on the left of
that arc exactly when its position precedes the arc's descent, and on the
right otherwise; this side data makes the diagram noncrossing and determines
the permutation uniquely.  Reflecting the diagram swaps every side marker,
and decoding the reflected diagram gives an involution on S_n with 2^(n-1)
fixed points (the diagrams whose arcs only join adjacent values).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import NoPreimage
from ..permutations import Perm, check_permutation

Arc = tuple[int, int]


@dataclass(frozen=True)
class ArcDiagram:
    """Arcs (a, b) with a > b, each with the set of values lying to its left."""

    n: int
    left_sides: dict[Arc, frozenset[int]]

    def __post_init__(self) -> None:
        uppers = [a for a, _ in self.left_sides]
        lowers = [b for _, b in self.left_sides]
        if len(set(uppers)) != len(uppers) or len(set(lowers)) != len(lowers):
            raise NoPreimage("a value may start and end at most one arc each")
        for (a, b), left in self.left_sides.items():
            if not (1 <= b < a <= self.n):
                raise NoPreimage(f"arc {(a, b)} out of range")
            if not left <= frozenset(range(b + 1, a)):
                raise NoPreimage(f"side data of arc {(a, b)} names outside values")

    def arcs(self) -> tuple[Arc, ...]:
        return tuple(sorted(self.left_sides))


def laguerre_encode(p: Perm) -> ArcDiagram:
    """Arc diagram of a permutation: one arc per descent inside a decreasing run."""
    n = len(p)
    pos = {v: i for i, v in enumerate(p, start=1)}
    left_sides: dict[Arc, frozenset[int]] = {}
    for i in range(1, n):
        a, b = p[i - 1], p[i]
        if a > b:
            left_sides[(a, b)] = frozenset(
                v for v in range(b + 1, a) if pos[v] < i
            )
    return ArcDiagram(n, left_sides)


def laguerre_reflect(d: ArcDiagram) -> ArcDiagram:
    """Flip every side marker: values left of an arc move to its right."""
    return ArcDiagram(
        d.n,
        {
            (a, b): frozenset(range(b + 1, a)) - left
            for (a, b), left in d.left_sides.items()
        },
    )


def _chains(d: ArcDiagram) -> list[tuple[int, ...]]:
    """Maximal decreasing runs encoded by the arcs, plus singleton values."""
    succ = {a: b for a, b in d.left_sides}
    lowers = set(succ.values())
    chains = []
    in_chain: set[int] = set()
    for head in sorted(succ):
        if head in lowers:
            continue
        run = [head]
        while run[-1] in succ:
            run.append(succ[run[-1]])
        chains.append(tuple(run))
        in_chain.update(run)
    for v in range(1, d.n + 1):
        if v not in in_chain:
            chains.append((v,))
    return chains


def laguerre_decode(d: ArcDiagram) -> Perm:
    """The unique permutation whose arc diagram is ``d``.

    The runs are the chains of arcs; their left-to-right order is pinned down
    by the side data (a value left of an arc must lie in an earlier run) and
    by maximality (consecutive runs meet in an ascent).  The order is found
    by a smallest-head-first search with backtracking; valid diagrams admit
    exactly one completion.
    """
    chains = _chains(d)
    run_of = {v: idx for idx, run in enumerate(chains) for v in run}
    before: list[set[int]] = [set() for _ in chains]  # before[r] must precede r
    for (a, b), left in d.left_sides.items():
        r = run_of[a]
        for v in range(b + 1, a):
            s = run_of[v]
            if v in left:
                before[r].add(s)
            else:
                before[s].add(r)

    order: list[int] = []
    placed = [False] * len(chains)

    def search(last_value: int) -> bool:
        if len(order) == len(chains):
            return True
        candidates = [
            idx
            for idx, run in enumerate(chains)
            if not placed[idx]
            and run[0] > last_value
            and all(placed[s] for s in before[idx])
        ]
        for idx in sorted(candidates, key=lambda t: chains[t][0]):
            placed[idx] = True
            order.append(idx)
            if search(chains[idx][-1]):
                return True
            placed[idx] = False
            order.pop()
        return False

    if not search(0):
        raise NoPreimage("no permutation realizes this arc diagram")
    word: list[int] = []
    for idx in order:
        word.extend(chains[idx])
    return check_permutation(word)


def invert_laguerre_heap(p: Perm) -> Perm:
    """Reflect the arc diagram of p and decode.

    >>> invert_laguerre_heap((1, 10, 12, 2, 7, 6, 9, 8, 5, 11, 4, 3))
    (1, 11, 4, 3, 9, 8, 5, 7, 6, 12, 2, 10)
    """
    return laguerre_decode(laguerre_reflect(laguerre_encode(p)))
