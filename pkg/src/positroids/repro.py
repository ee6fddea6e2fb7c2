"""Built-in verification checks for the documented reference results.

Every check recomputes one documented example, either on the bundled
14-element demo positroid or on the 2x4 demo matrix, and compares against a
frozen expected value. `run_all` returns structured results; the CLI `repro`
verb prints one line per check. The same values are pinned in the test
suite; this module exists so an installed copy can vouch for itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .cyclic import (
    cyclic_less,
    decompose,
    gale_leq,
    interval_contains,
    open_interval,
)
from .morph import (
    ExchangeKind,
    GapStatus,
    align_basis,
    interval_exchange,
    is_compatible,
    mimic,
    morph_sequence,
    witness_basis,
)
from .positroid import (
    Positroid,
    enumerate_bases,
    loops_and_coloops,
    necklace_of,
    permutation_of,
    rank_bruteforce,
)
from .rank import (
    NonCrossingPartition,
    bound_for_partition,
    cw_count,
    ccw_count,
    min_elements,
    natural_bound,
    rank,
    rank_dp,
    rank_of_interval,
)
from .realize import (
    BasisCollection,
    RationalMatrix,
    is_totally_nonnegative,
    matroid_from_matrix,
    maximal_minor,
    necklace_from_bases,
    positroid_from_matrix,
)

__all__ = [
    "DEMO_PERMUTATION",
    "DEMO_MATRIX_ROWS",
    "DEMO_NECKLACE",
    "CheckResult",
    "demo_positroid",
    "demo_matrix",
    "run_all",
]

# 14-element fixed-point-free demo permutation used throughout the docs
DEMO_PERMUTATION = (2, 8, 6, 7, 9, 4, 5, 14, 13, 3, 10, 11, 1, 12)

# 2x4 demo matrix with nonnegative maximal minors
DEMO_MATRIX_ROWS = ((1, 0, -3, -1), (0, 1, 4, 0))

# the full necklace of the demo positroid, I_1 through I_14
DEMO_NECKLACE = (
    {1, 3, 4, 5, 10, 11, 12},
    {2, 3, 4, 5, 10, 11, 12},
    {3, 4, 5, 8, 10, 11, 12},
    {4, 5, 6, 8, 10, 11, 12},
    {5, 6, 7, 8, 10, 11, 12},
    {6, 7, 8, 9, 10, 11, 12},
    {4, 7, 8, 9, 10, 11, 12},
    {4, 5, 8, 9, 10, 11, 12},
    {4, 5, 9, 10, 11, 12, 14},
    {4, 5, 10, 11, 12, 13, 14},
    {3, 4, 5, 11, 12, 13, 14},
    {3, 4, 5, 10, 12, 13, 14},
    {3, 4, 5, 10, 11, 13, 14},
    {1, 3, 4, 5, 10, 11, 14},
)


def demo_positroid() -> Positroid:
    return Positroid.from_oneline(DEMO_PERMUTATION)


def demo_matrix() -> RationalMatrix:
    return RationalMatrix.from_rows(DEMO_MATRIX_ROWS)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


_CHECKS: list[tuple[str, Callable[[], None]]] = []


def _check(name: str):
    def deco(fn: Callable[[], None]) -> Callable[[], None]:
        _CHECKS.append((name, fn))
        return fn

    return deco


def _eq(actual: object, expected: object, label: str) -> None:
    if actual != expected:
        raise AssertionError(f"{label}: got {actual!r}, expected {expected!r}")


@_check("cyclic-order")
def _cyclic_order() -> None:
    _eq(cyclic_less(14, 8, 14, 14), True, "14 before 8 from 14")
    _eq(cyclic_less(1, 13, 9, 14), False, "1 before 13 from 9")


@_check("interval-containment")
def _interval_containment() -> None:
    _eq(interval_contains((13, 7), (4, 6), 14), True, "[13,7] contains [4,6]")
    _eq(interval_contains((7, 10), (9, 13), 14), False, "[7,10] contains [9,13]")


@_check("set-decomposition")
def _set_decomposition() -> None:
    d = decompose({1, 2, 7, 8, 9, 10, 13}, 14)
    _eq(d.intervals, ((1, 2), (7, 10), (13, 13)), "intervals of {1,2,7..10,13}")
    _eq(decompose({1, 4}, 4).intervals, ((4, 1),), "wrapping two-element set")


@_check("necklace-entries")
def _necklace_entries() -> None:
    neck = demo_positroid().necklace
    for k, expected in enumerate(DEMO_NECKLACE, start=1):
        _eq(set(neck.at(k)), expected, f"I_{k}")


@_check("necklace-roundtrip")
def _necklace_roundtrip() -> None:
    P = demo_positroid()
    _eq(permutation_of(necklace_of(P.perm)), P.perm, "necklace -> permutation")


@_check("gale-comparison")
def _gale_comparison() -> None:
    P = demo_positroid()
    _eq(gale_leq(P.necklace.at(6), {6, 7, 10, 11, 12, 1, 4}, 6, 14), True, "I_6 <= basis")


@_check("basis-membership")
def _basis_membership() -> None:
    P = demo_positroid()
    _eq(P.is_basis({1, 4, 7, 8, 10, 11, 13}), True, "first basis")
    _eq(P.is_basis({4, 7, 8, 10, 11, 13, 14}), True, "exchanged basis")


@_check("no-fixed-points")
def _no_fixed_points() -> None:
    _eq(loops_and_coloops(demo_positroid()), (frozenset(), frozenset()), "loops/coloops")


@_check("brute-force-rank")
def _brute_force_rank() -> None:
    P = demo_positroid()
    _eq(rank_bruteforce(P, {1, 2, 3, 8, 9, 10}), 3, "max basis overlap")


@_check("cw-arrow-counts")
def _cw_arrow_counts() -> None:
    P = demo_positroid()
    _eq(cw_count(P, decompose({1, 2}, 14).interval(1)), 1, "cw [1,2]")
    _eq(cw_count(P, decompose({7, 8, 9, 10}, 14).interval(1)), 0, "cw [7,10]")
    _eq(cw_count(P, decompose({13}, 14).interval(1)), 0, "cw [13,13]")


@_check("ccw-arrow-counts")
def _ccw_arrow_counts() -> None:
    P = demo_positroid()
    for (b, a), expected in {
        (2, 7): 1,
        (10, 13): 1,
        (13, 1): 0,
        (10, 1): 2,
        (2, 13): 5,
        (13, 7): 1,
        (3, 8): 2,
    }.items():
        _eq(ccw_count(P, open_interval(b, a, 14)), expected, f"ccw ({b},{a})")


@_check("interval-ranks")
def _interval_ranks() -> None:
    P = demo_positroid()
    _eq(rank_of_interval(P, 1, 3), 2, "rank [1,3]")
    _eq(rank_of_interval(P, 8, 10), 3, "rank [8,10]")
    _eq(min_elements(P, 3, 8), 2, "min elements (3,8)")
    _eq(min_elements(P, 10, 1), 2, "min elements (10,1)")


@_check("one-block-bounds")
def _one_block_bounds() -> None:
    P = demo_positroid()
    _eq(natural_bound(P, decompose({1, 2, 3, 8, 9, 10}, 14)), 3, "bound [1,3]u[8,10]")
    _eq(
        natural_bound(P, decompose({1, 2, 7, 8, 9, 10, 13}, 14)),
        5,
        "bound [1,2]u[7,10]u[13,13]",
    )


@_check("partition-bounds")
def _partition_bounds() -> None:
    P = demo_positroid()
    E = decompose({1, 2, 7, 8, 9, 10, 13}, 14)
    expected = {
        ((1, 2, 3),): 5,
        ((1,), (2, 3)): 6,
        ((1, 2), (3,)): 5,
        ((1, 3), (2,)): 6,
        ((1,), (2,), (3,)): 6,
    }
    for blocks, value in expected.items():
        ncp = NonCrossingPartition.from_blocks(3, blocks)
        _eq(bound_for_partition(P, E, ncp), value, f"bound at {ncp}")


@_check("rank-two-intervals")
def _rank_two_intervals() -> None:
    cert = rank(demo_positroid(), {1, 2, 3, 8, 9, 10})
    _eq(cert.value, 3, "rank [1,3]u[8,10]")
    _eq(cert.partition.blocks, ((1, 2),), "optimal partition")


@_check("rank-three-intervals")
def _rank_three_intervals() -> None:
    E = {1, 2, 7, 8, 9, 10, 13}
    P = demo_positroid()
    cert = rank(P, E)
    _eq(cert.value, 5, "rank [1,2]u[7,10]u[13,13]")
    _eq(rank_dp(P, E), 5, "dynamic program agrees")


@_check("empty-set-rank")
def _empty_set_rank() -> None:
    _eq(rank(demo_positroid(), ()).value, 0, "rank of empty set")


@_check("interval-exchange")
def _interval_exchange() -> None:
    P = demo_positroid()
    result = interval_exchange(P, {1, 4, 7, 8, 10, 11, 13}, 13, 2)
    _eq(set(result), {4, 7, 8, 10, 11, 13, 14}, "exchange on [13,2]")


@_check("window-compatibility")
def _window_compatibility() -> None:
    P = demo_positroid()
    _eq(is_compatible(P, P.necklace.at(2), 7, (4, 10)), True, "I_2 with I_7 in (4,10]")


@_check("mimic-with-gaps")
def _mimic_with_gaps() -> None:
    P = demo_positroid()
    result, status = mimic(P, P.necklace.at(2), 7, (4, 10))
    _eq(set(result), {2, 3, 4, 7, 10, 11, 12}, "mimic I_7 from I_2")
    _eq(status, GapStatus.HAS_GAPS, "gaps remain on [7,10]")


@_check("mimic-no-op")
def _mimic_no_op() -> None:
    P = demo_positroid()
    result, status = mimic(P, P.necklace.at(7), 2, (10, 4))
    _eq(result, P.necklace.at(7), "nothing excessive to move")
    _eq(status, GapStatus.HAS_GAPS, "gaps remain on [2,4]")


@_check("morph-sequence")
def _morph_sequence() -> None:
    P = demo_positroid()
    E = decompose({2, 3, 4, 7, 8, 9, 10}, 14)
    one = morph_sequence(P, E, 1)
    _eq(one[0].members, P.necklace.at(2), "start at I_2")
    _eq(set(one[1].members), {2, 3, 4, 7, 10, 11, 12}, "first morph")
    _eq(one[1].exchange.removed, (5,), "excess moved out")
    _eq(one[1].exchange.added, (7,), "gap filled")
    two = morph_sequence(P, E, 2)
    _eq(two[1].members, P.necklace.at(7), "start at I_7 stays put")


@_check("basis-alignment")
def _basis_alignment() -> None:
    P = demo_positroid()
    E = decompose({1, 2, 3, 4, 6, 7}, 14)
    trace: list = []
    final = align_basis(P, {1, 3, 6, 7, 10, 11, 14}, E, 1, trace)
    _eq(set(final), {1, 3, 4, 7, 10, 11, 12}, "aligned basis")
    _eq([(r.removed, r.added) for r in trace], [((14,), (12,)), ((6,), (4,))], "trace")
    for r in trace:
        _eq(r.kind, ExchangeKind.BASIS_EXCHANGE, "exchange kind")


@_check("witness-basis")
def _witness_basis() -> None:
    P = demo_positroid()
    E = {1, 2, 3, 8, 9, 10}
    W = witness_basis(P, E)
    _eq(P.is_basis(W), True, "witness is a basis")
    _eq(len(W & E), 3, "witness attains the rank")


@_check("matrix-bases")
def _matrix_bases() -> None:
    coll = matroid_from_matrix(demo_matrix())
    expected = {
        frozenset(B) for B in ({1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4})
    }
    _eq(coll.bases, expected, "nonzero maximal minors")


@_check("matrix-nonnegativity")
def _matrix_nonnegativity() -> None:
    _eq(is_totally_nonnegative(demo_matrix()), True, "all maximal minors >= 0")
    flipped = RationalMatrix.from_rows(((1, 0, -3, -1), (0, -1, 4, 0)))
    _eq(is_totally_nonnegative(flipped), False, "sign flip breaks it")


@_check("matrix-positroid")
def _matrix_positroid() -> None:
    P = positroid_from_matrix(demo_matrix())
    _eq(P.perm.images, (3, 4, 2, 1), "permutation of the matrix positroid")
    _eq(P.is_basis({1, 4}), False, "columns 1,4 are dependent")
    _eq(
        [set(P.necklace.at(k)) for k in (1, 2, 3, 4)],
        [{1, 2}, {2, 3}, {3, 4}, {2, 4}],
        "necklace of the matrix positroid",
    )


@_check("bases-to-necklace")
def _bases_to_necklace() -> None:
    P = demo_positroid()
    coll = BasisCollection.from_sets(enumerate_bases(P), P.n)
    _eq(necklace_from_bases(coll), P.necklace, "necklace recovered from bases")


@_check("exact-arithmetic")
def _exact_arithmetic() -> None:
    A = RationalMatrix.from_rows((("1/3", 1, 0), (0, "2/7", "5/2")))
    _eq(maximal_minor(A, (1, 2)), Fraction(2, 21), "fractional minor")
    _eq(is_totally_nonnegative(A), True, "fractional entries stay exact")


def run_all() -> list[CheckResult]:
    """Run every check; never raises, failures land in the result list."""
    results = []
    for name, fn in _CHECKS:
        try:
            fn()
        except AssertionError as exc:
            results.append(CheckResult(name, False, str(exc)))
        except Exception as exc:  # defensive: a crash is also a failure
            results.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))
        else:
            results.append(CheckResult(name, True))
    return results
