"""Inversion, descent, and run statistics on one-line notation."""

from __future__ import annotations

from ..errors import ParityViolation, WidthOutOfRange
from ..permutations import Perm


def inversions(p: Perm) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[j] < p[i])


def descent_set(p: Perm) -> tuple[int, ...]:
    """1-based indices i with p_i > p_{i+1}."""
    return tuple(i for i in range(1, len(p)) if p[i - 1] > p[i])


def descents(p: Perm) -> int:
    return len(descent_set(p))


def major_index(p: Perm) -> int:
    return sum(descent_set(p))


def comajor_index(p: Perm) -> int:
    n = len(p)
    return sum(n - i for i in descent_set(p))


def width_k_descents(p: Perm, k: int) -> int:
    """#{i : p_i > p_{i+k}}; a descent is the width-1 case."""
    n = len(p)
    if k >= n:
        raise WidthOutOfRange(f"width {k} needs n > k, got n = {n}")
    return sum(1 for i in range(n - k) if p[i] > p[i + k])


def odd_descents(p: Perm) -> int:
    return sum(1 for i in descent_set(p) if i % 2 == 1)


def even_descents(p: Perm) -> int:
    return sum(1 for i in descent_set(p) if i % 2 == 0)


def monotone_switches(p: Perm) -> int:
    """Number of times the one-line word turns from rising to falling or back."""
    signs = [p[i] < p[i + 1] for i in range(len(p) - 1)]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def up_down_runs(p: Perm) -> int:
    """Maximal monotone consecutive runs, plus one when the word opens with a descent."""
    n = len(p)
    if n == 1:
        return 1
    runs = 1 + monotone_switches(p)
    return runs + (1 if p[0] > p[1] else 0)


def inversions_within_distance(p: Perm, k: int) -> int:
    """Inversions (i, i+m) over all 1 <= m <= k."""
    n = len(p)
    return sum(
        1 for m in range(1, k + 1) for i in range(n - m) if p[i] > p[i + m]
    )


def even_inversions(p: Perm) -> int:
    """Inversions whose two positions share a parity."""
    n = len(p)
    return sum(
        1
        for i in range(n)
        for j in range(i + 2, n, 2)
        if p[j] < p[i]
    )


def odd_inversions(p: Perm) -> int:
    """Inversions whose two positions have opposite parities."""
    n = len(p)
    return sum(
        1
        for i in range(n)
        for j in range(i + 1, n, 2)
        if p[j] < p[i]
    )


def visible_inversions(p: Perm) -> int:
    """Pairs i < j with p_j <= min(i, p_i)."""
    n = len(p)
    return sum(
        1
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if p[j - 1] <= min(i, p[i - 1])
    )


def invisible_inversions(p: Perm) -> int:
    """Inversions (i, j) with p_i > p_j > i."""
    n = len(p)
    return sum(
        1
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if p[i - 1] > p[j - 1] > i
    )


def bialternating_inversion_raw(p: Perm) -> int:
    """sum over y < x of (-1)^(x+y) * sign(p_x - p_y)."""
    n = len(p)
    total = 0
    for y in range(1, n + 1):
        for x in range(y + 1, n + 1):
            s = 1 if p[x - 1] > p[y - 1] else -1
            total += s if (x + y) % 2 == 0 else -s
    return total


def bialternating(p: Perm) -> int:
    """Standardized bi-alternating inversion number: (raw + floor(n/2)^2) / 2."""
    n = len(p)
    value = bialternating_inversion_raw(p) + (n // 2) ** 2
    if value % 2:
        raise ParityViolation(f"bi-alternating sum {value} is odd for {p}")
    return value // 2


def descent_variant_weighted(p: Perm) -> int:
    """sum of i*(n-i) over descents i."""
    n = len(p)
    return sum(i * (n - i) for i in descent_set(p))


def descent_variant_minus_inversions(p: Perm) -> int:
    return descent_variant_weighted(p) - inversions(p)
