"""Scan every registered (statistic, map) pair for apparent sieving instances.

A pair is an *apparent* instance when the exact sieving check holds for every
n in the scanned range on which both members are defined; pairs with no
applicable n are skipped with a reason, and per-pair failures are recorded
without aborting the scan.  Pairs are then deduplicated by their joint
(orbit signature, generating function) fingerprint across the range, since
two maps with the same orbit structure sieve for exactly the same generating
functions.  Reports are deterministic: rows are keyed and sorted, and worker
parallelism cannot change any value.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import factorial
from typing import Callable, Optional, Sequence

from .bijections import get_map, map_keys
from .errors import PermsieveError
from .orbits import orbit_sizes, signature_from_sizes
from .polynomials import IntPolynomial
from .sieving import csp_check, equidistribution, generating_function, q_minus_one, verdict_from_parts
from .statistics import descent_variant_gf, get_statistic, statistic_keys

GfProvider = Callable[[str, int], IntPolynomial]
SizesProvider = Callable[[str, int], dict[int, int]]

MIN_SCAN_N = 1
MAX_SCAN_N = 8


@dataclass(frozen=True)
class ScanRow:
    """One (pair, n) observation; the unit every report format serializes."""

    pair: str
    stat_key: str
    map_key: str
    n: int
    holds: bool
    table: tuple[int, ...]
    signature: str
    gf_offset: int
    gf_coeffs: tuple[int, ...]


@dataclass(frozen=True)
class PairVerdict:
    pair: str
    stat_key: str
    map_key: str
    status: str  # "apparent" | "fail" | "skipped"
    checked_ns: tuple[int, ...]
    failing_n: Optional[int] = None
    witness_d: Optional[int] = None
    reason: str = ""


@dataclass(frozen=True)
class DedupClass:
    members: tuple[str, ...]
    apparent: bool
    signature_key: tuple[str, ...]
    gf_key: tuple[tuple[int, tuple[int, ...]], ...]


@dataclass(frozen=True)
class ScanReport:
    n_min: int
    n_max: int
    stat_keys: tuple[str, ...]
    map_keys: tuple[str, ...]
    rows: tuple[ScanRow, ...]
    verdicts: tuple[PairVerdict, ...]
    classes: tuple[DedupClass, ...] = field(default=())

    def summary(self) -> dict[str, int]:
        counts = {"pairs": len(self.verdicts), "apparent": 0, "fail": 0, "skipped": 0}
        for v in self.verdicts:
            counts[v.status] += 1
        counts["classes"] = len(self.classes)
        counts["apparent_classes"] = sum(1 for c in self.classes if c.apparent)
        return counts


def _applicable_ns(stat_key: str, map_key: str, n_min: int, n_max: int) -> list[int]:
    stat = get_statistic(stat_key)
    mp = get_map(map_key)
    lo = max(n_min, stat.min_n, mp.min_n)
    return list(range(lo, n_max + 1))


def _pair_outcome(
    stat_key: str,
    map_key: str,
    n_min: int,
    n_max: int,
    gf_provider: GfProvider,
    sizes_provider: SizesProvider,
) -> tuple[tuple, tuple]:
    """All rows for one pair, plus its verdict, as plain tuples."""
    pair = f"{stat_key}|{map_key}"
    ns = _applicable_ns(stat_key, map_key, n_min, n_max)
    if not ns:
        verdict = (pair, stat_key, map_key, "skipped", (), None, None,
                   "undefined on the whole range")
        return (), verdict
    rows = []
    failing_n = None
    witness = None
    for n in ns:
        try:
            f = gf_provider(stat_key, n)
            sizes = sizes_provider(map_key, n)
            v = verdict_from_parts(stat_key, map_key, n, f, sizes)
        except PermsieveError as exc:
            verdict = (pair, stat_key, map_key, "skipped", tuple(ns), None, None,
                       f"evaluation failed at n={n}: {exc}")
            return tuple(rows), verdict
        rows.append(
            (pair, stat_key, map_key, n, v.holds, v.fixed,
             signature_from_sizes(sizes), f.offset, f.coeffs)
        )
        if not v.holds and failing_n is None:
            failing_n = n
            witness = v.witnesses[0] if v.witnesses else None
    status = "apparent" if failing_n is None else "fail"
    verdict = (pair, stat_key, map_key, status, tuple(ns), failing_n, witness, "")
    return tuple(rows), verdict


def _scan_pair(args: tuple[str, str, int, int]) -> tuple[tuple, tuple]:
    """Picklable worker entry using the pure providers."""
    stat_key, map_key, n_min, n_max = args
    return _pair_outcome(
        stat_key, map_key, n_min, n_max,
        lambda s, n: generating_function(s, n),
        orbit_sizes,
    )


def scan(
    n_min: int = 4,
    n_max: int = 6,
    stats: Optional[Sequence[str]] = None,
    maps: Optional[Sequence[str]] = None,
    workers: int = 1,
    gf_provider: Optional[GfProvider] = None,
    sizes_provider: Optional[SizesProvider] = None,
) -> ScanReport:
    """Check every selected (statistic, map) pair on n_min..n_max.

    The default range 4..6 keeps false negatives rare (several statistics are
    degenerate on tiny permutations) while staying fast; wider ranges are
    opt-in up to n = 8.  Providers allow a persistent cache to stand in for
    the pure computations; with more than one worker the pure computations
    run in subprocesses and providers are consulted only when storing.  The
    report is byte-for-byte independent of the worker count.
    """
    if not MIN_SCAN_N <= n_min <= n_max <= MAX_SCAN_N:
        raise ValueError(f"scan range must satisfy {MIN_SCAN_N} <= n_min <= n_max <= {MAX_SCAN_N}")
    stat_list = tuple(stats) if stats else statistic_keys()
    map_list = tuple(maps) if maps else map_keys()
    stat_list = tuple(sorted(get_statistic(s).key for s in stat_list))
    map_list = tuple(sorted(get_map(m).key for m in map_list))
    tasks = [(s, m, n_min, n_max) for s in stat_list for m in map_list]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_scan_pair, tasks, chunksize=8))
    else:
        gf_fn = gf_provider or (lambda s, n: generating_function(s, n))
        sz_fn = sizes_provider or orbit_sizes
        outcomes = [
            _pair_outcome(s, m, lo, hi, gf_fn, sz_fn) for (s, m, lo, hi) in tasks
        ]
    all_rows: list[ScanRow] = []
    verdicts: list[PairVerdict] = []
    for rows, verdict in outcomes:
        for r in rows:
            all_rows.append(ScanRow(*r))
        verdicts.append(PairVerdict(*verdict))
    all_rows.sort(key=lambda r: (r.stat_key, r.map_key, r.n))
    verdicts.sort(key=lambda v: (v.stat_key, v.map_key))
    report = ScanReport(n_min, n_max, stat_list, map_list, tuple(all_rows), tuple(verdicts))
    return ScanReport(
        n_min, n_max, stat_list, map_list, report.rows, report.verdicts, dedupe(report)
    )


def dedupe(report: ScanReport) -> tuple[DedupClass, ...]:
    """Group non-skipped pairs by joint (orbit signature, gf vector) fingerprint."""
    by_pair_rows: dict[str, list[ScanRow]] = {}
    for row in report.rows:
        by_pair_rows.setdefault(row.pair, []).append(row)
    status = {v.pair: v.status for v in report.verdicts}
    classes: dict[tuple, list[str]] = {}
    for pair, rows in by_pair_rows.items():
        if status.get(pair) == "skipped":
            continue
        rows = sorted(rows, key=lambda r: r.n)
        sig_key = tuple(r.signature for r in rows)
        gf_key = tuple((r.gf_offset, r.gf_coeffs) for r in rows)
        classes.setdefault((tuple(r.n for r in rows), sig_key, gf_key), []).append(pair)
    out = []
    for (_, sig_key, gf_key), members in classes.items():
        members = tuple(sorted(members))
        out.append(
            DedupClass(
                members=members,
                apparent=status[members[0]] == "apparent",
                signature_key=sig_key,
                gf_key=gf_key,
            )
        )
    out.sort(key=lambda c: c.members)
    return tuple(out)


def conjecture_suite(n_max: int = 8) -> dict:
    """Observations backing the conjectured instances; nothing here asserts.

    Covers the equidistribution of the weak-excedance midpoint count with the
    cycle descent number, the vanishing of the distance-3 inversion count at
    q = -1 for even n, the width-k failure pattern against the n = k (mod 2k)
    rule, and the mismatch between the quoted closed form for the weighted
    descent variant and the empirical distribution.
    """
    if n_max > 10:
        raise ValueError("conjecture suite runs up to n = 10")
    equi = {n: equidistribution("st373", "st317", n) for n in range(4, min(n_max, 8) + 1)}
    dist3 = {n: q_minus_one("st494", n) for n in range(3, n_max + 1)}
    width_rows = []
    for n in range(4, min(n_max, 8) + 1):
        for k in range(1, n):
            holds = q_minus_one_width(n, k) == 0
            predicted_fail = n % (2 * k) == k % (2 * k)
            width_rows.append(
                {
                    "n": n,
                    "k": k,
                    "holds": holds,
                    "predicted_fail": predicted_fail,
                    "consistent": holds != predicted_fail,
                }
            )
    variant = {}
    for n in range(3, min(n_max, 7) + 1):
        closed = descent_variant_gf(n)
        variant[n] = {
            "closed_form_at_1": closed.evaluate(1),
            "factorial": factorial(n),
            "matches_distribution": closed == generating_function("st1911", n),
        }
    return {
        "equidistribution_373_317": equi,
        "inv_distance_3_at_minus_one": dist3,
        "width_k": width_rows,
        "descent_variant_closed_form": variant,
    }


def q_minus_one_width(n: int, k: int) -> int:
    """f(-1) for the width-k descent count on S_n, for any 1 <= k < n."""
    from itertools import permutations as iter_permutations

    from .statistics.basic import width_k_descents

    return sum(
        (-1) ** width_k_descents(p, k) for p in iter_permutations(range(1, n + 1))
    )


KNOWN_INSTANCES: tuple[tuple[str, str, str], ...] = tuple(
    (stat, mp, condition)
    for stat, maps, condition in [
        # involutions with 2^(n-1) fixed points
        ("st039", ("corteel", "invert_laguerre_heap"), "n>=4"),
        ("st223", ("corteel", "invert_laguerre_heap"), "n>=4"),
        ("st356", ("corteel", "invert_laguerre_heap"), "n>=4"),
        ("st358", ("corteel", "invert_laguerre_heap"), "n>=4"),
        ("st317", ("corteel", "invert_laguerre_heap"), "n>=4"),
        ("st1744", ("corteel", "invert_laguerre_heap"), "n>=4"),
        ("st371", ("corteel", "invert_laguerre_heap"), "n>=4"),
        ("st372", ("corteel", "invert_laguerre_heap"), "n>=4"),
        ("st1683", ("corteel", "invert_laguerre_heap"), "n>=4"),
        ("st1687", ("corteel", "invert_laguerre_heap"), "n>=4"),
        ("st360", ("corteel", "invert_laguerre_heap"), "n>=4"),
        ("st357", ("corteel", "invert_laguerre_heap"), "n>=4"),
        ("st1004", ("corteel", "invert_laguerre_heap"), "even"),
        # involutions with 2^(floor(n/2)) fixed points
        ("extrema_sum", ("alexandersson_kebede", "psi_block"), "n>=4"),
        ("st1005", ("alexandersson_kebede", "psi_block"), "n>=4"),
        ("st1727", ("alexandersson_kebede", "psi_block"), "n>=4"),
        # involutions without fixed points
        ("st031", ("reverse", "complement"), "n>=4"),
        ("st007", ("reverse", "complement"), "n>=4"),
        ("st314", ("reverse", "complement"), "n>=4"),
        ("st541", ("reverse", "complement"), "n>=4"),
        ("st542", ("reverse", "complement"), "n>=4"),
        ("st991", ("reverse", "complement"), "n>=4"),
        ("st216", ("reverse", "complement"), "n>=4"),
        ("st316", ("reverse", "complement"), "n>=4"),
        ("st864", ("reverse", "complement"), "n>=4"),
        ("st495", ("reverse", "complement"), "n>=4"),
        ("st494", ("reverse", "complement"), "odd"),
        ("st021", ("reverse", "complement"), "even"),
        ("st836", ("reverse", "complement"), "odd"),
        ("st1520", ("reverse", "complement"), "even"),
        ("st483", ("reverse", "complement"), "n>=4"),
        ("st538", ("reverse", "complement"), "n>=4"),
        ("st638", ("reverse", "complement"), "n>=4"),
        ("st677", ("reverse", "complement"), "n>=4"),
        ("st809", ("reverse", "complement"), "n>=4"),
        ("st1579", ("reverse", "complement"), "n>=4"),
        ("st1076", ("reverse", "complement"), "n>=4"),
        ("st1077", ("reverse", "complement"), "n>=4"),
        ("st1114", ("reverse", "complement"), "n>=4"),
        ("st1115", ("reverse", "complement"), "n>=4"),
        ("st1726", ("reverse", "complement"), "n>=4"),
        ("st436", ("reverse", "complement"), "n>=4"),
        ("st423", ("reverse", "complement"), "n>=4"),
        ("st428", ("reverse", "complement"), "n>=4"),
        ("st437", ("reverse", "complement"), "n>=4"),
        # maps with constant orbit size
        ("st004", ("rotation", "toric_promotion", "reverse", "complement"), "n>=4"),
        ("st018", ("rotation", "toric_promotion", "reverse", "complement"), "n>=4"),
        ("st833", ("rotation", "toric_promotion", "reverse", "complement"), "n>=4"),
        ("st020", ("rotation", "lehmer_code_rotation", "toric_promotion", "reverse", "complement"), "n>=4"),
        ("st054", ("rotation",), "n>=4"),
        ("st740", ("rotation",), "n>=4"),
        ("st1806", ("rotation",), "n>=4"),
        ("st1807", ("rotation",), "n>=4"),
        ("st1557", ("toric_promotion",), "n>=4"),
        ("st1911", ("toric_promotion",), "n>=4"),
        # conjugation by the long cycle
        ("st825", ("conj_long_cycle",), "n>=4"),
        ("st1379", ("conj_long_cycle",), "n>=4"),
        ("st1377", ("conj_long_cycle",), "n>=4"),
        ("maj_minus_imaj", ("conj_long_cycle",), "n>=4"),
        ("st462", ("conj_long_cycle",), "n>=4"),
        ("st463", ("conj_long_cycle",), "n>=4"),
        ("st866", ("conj_long_cycle",), "n>=4"),
        ("st961", ("conj_long_cycle",), "n>=4"),
    ]
    for mp in maps
)
"""Catalog of proven instances with their n-conditions ("even"/"odd" restrict the range)."""


def instance_applies(condition: str, n: int) -> bool:
    if condition == "even":
        return n % 2 == 0
    if condition == "odd":
        return n % 2 == 1
    if condition.startswith("n>="):
        return n >= int(condition[3:])
    raise ValueError(f"unknown condition {condition!r}")


def known_instances_verdict(n_min: int = 4, n_max: int = 6) -> list[tuple[str, str, bool]]:
    """Check the whole catalog; returns (pair, condition, holds-on-all-applicable-n)."""
    out = []
    for stat, mp, condition in KNOWN_INSTANCES:
        ns = [n for n in range(n_min, n_max + 1) if instance_applies(condition, n)]
        ok = all(csp_check(stat, mp, n).holds for n in ns)
        out.append((f"{stat}|{mp}", condition, ok))
    return out
