"""Rank queries certified by non-crossing partitions.

Everything here reduces rank computations to counting arrows of the
decorated permutation. A CW-arrow is the cyclic interval [x, pi(x)], a
CCW-arrow is [x, pi^{-1}(x)]. For a cyclic interval T = [a, b]:

    rank([a,b]) = |I_a ∩ [a,b]| = |[a,b]| - cw([a,b])
    minelts((b,a)) = ccw((b,a)) = d - rank([a,b])

where minelts is the fewest elements a basis can have in the open gap
(b, a). For a union E of s intervals, every non-crossing partition of the
interval indices gives an upper bound on rank(E), and the minimum over all
of them is exact. rank() enumerates the partitions (certificate included),
rank_dp() gets the same value by dynamic programming in O(s^3).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .cyclic import CyclicInterval, IntervalDecomposition, decompose, open_interval
from .errors import EnumerationLimitError, ValidationError
from .positroid import Positroid, reduce

__all__ = [
    "DEFAULT_PARTITION_LIMIT",
    "NonCrossingPartition",
    "enumerate_ncp",
    "ArrowTable",
    "arrow_table",
    "cw_count",
    "ccw_count",
    "min_elements",
    "rank_of_interval",
    "natural_bound",
    "bound_for_partition",
    "RankCertificate",
    "rank",
    "rank_dp",
]

DEFAULT_PARTITION_LIMIT = 16


@dataclass(frozen=True)
class NonCrossingPartition:
    """A partition of {1..s} with no two blocks interleaving cyclically.

    Canonical form: every block is an ascending tuple and blocks are sorted
    by their smallest element. Use from_blocks() to canonicalize arbitrary
    input. s = 0 carries the single empty partition.
    """

    s: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        owner: dict[int, int] = {}
        for bi, block in enumerate(self.blocks):
            if not block:
                raise ValidationError("empty block")
            if list(block) != sorted(block):
                raise ValidationError(f"block {block} is not ascending")
            for x in block:
                if not 1 <= x <= self.s:
                    raise ValidationError(f"block element {x} outside 1..{self.s}")
                if x in owner:
                    raise ValidationError(f"element {x} appears in two blocks")
                owner[x] = bi
        if len(owner) != self.s:
            missing = sorted(set(range(1, self.s + 1)) - owner.keys())
            raise ValidationError(f"elements {missing} not covered")
        firsts = [b[0] for b in self.blocks]
        if firsts != sorted(firsts):
            raise ValidationError("blocks must be sorted by smallest element")
        # single left-to-right sweep; each block must sit on top of the stack
        # between its min and its max, otherwise two blocks interleave
        last = {b[-1]: bi for bi, b in enumerate(self.blocks)}
        first = {b[0]: bi for bi, b in enumerate(self.blocks)}
        stack: list[int] = []
        for x in range(1, self.s + 1):
            if x in first:
                stack.append(first[x])
            if not stack or stack[-1] != owner[x]:
                raise ValidationError(f"blocks cross near element {x}")
            if x in last:
                stack.pop()

    @classmethod
    def from_blocks(cls, s: int, blocks: Iterable[Iterable[int]]) -> "NonCrossingPartition":
        canon = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
        return cls(s, canon)

    def __str__(self) -> str:
        inner = ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)
        return "{" + inner + "}"


def _raw_ncps(elems: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Non-crossing partitions of an ascending element tuple, as raw blocks.

    The block containing the smallest element is chosen first (growing by
    size, then lexicographically); the runs between its members partition
    independently. Blocks come out sorted by smallest element, so results
    are already canonical. Streams in O(s^2) memory.
    """
    if not elems:
        yield ()
        return
    head, rest = elems[0], elems[1:]
    for k in range(len(rest) + 1):
        for extra in combinations(rest, k):
            block = (head,) + extra
            segments: list[tuple[int, ...]] = []
            cut = block + (None,)
            j = 0
            for t in range(len(extra) + 1):
                seg = []
                while j < len(rest) and (cut[t + 1] is None or rest[j] < cut[t + 1]):
                    if rest[j] > cut[t]:
                        seg.append(rest[j])
                    j += 1
                segments.append(tuple(seg))
            for tail in _segment_products(tuple(segments), 0):
                yield (block,) + tail


def _segment_products(segments: tuple[tuple[int, ...], ...], i: int) -> Iterator[tuple]:
    if i == len(segments):
        yield ()
        return
    for head in _raw_ncps(segments[i]):
        for tail in _segment_products(segments, i + 1):
            yield head + tail


def enumerate_ncp(s: int, *, limit: int = DEFAULT_PARTITION_LIMIT) -> Iterator[NonCrossingPartition]:
    """All non-crossing partitions of {1..s}; Catalan(s) of them in total.

    Deterministic order (first block grows from {1} upward). s = 0 yields
    the single empty partition. Guarded by `limit` since the count explodes.
    """
    if s < 0:
        raise ValidationError("s must be nonnegative")
    if s > limit:
        raise EnumerationLimitError(
            f"enumerating non-crossing partitions of {s} intervals exceeds the "
            f"limit {limit}; rank_dp computes the rank without a certificate"
        )
    for raw in _raw_ncps(tuple(range(1, s + 1))):
        yield NonCrossingPartition(s, raw)


@dataclass(frozen=True)
class ArrowTable:
    """Per-anchor prefix counts of arrows, O(n^2) space, O(1) per query.

    An arrow [x, y] is counted in the interval [a, b] when both ends lie in
    the interval and x comes before y reading from the anchor a. On every
    proper interval this is plain containment of the arrow; anchoring only
    matters for the full circle, where it makes cw(full) = n - d and
    ccw(full) = d so that the rank identities above stay valid. Singleton
    arrows of fixed points count toward cw when white, ccw when black.
    """

    n: int
    cw_prefix: tuple[tuple[int, ...], ...]
    ccw_prefix: tuple[tuple[int, ...], ...]

    def cw(self, T: CyclicInterval) -> int:
        if T.is_empty:
            return 0
        return self.cw_prefix[T.a - 1][len(T)]

    def ccw(self, T: CyclicInterval) -> int:
        if T.is_empty:
            return 0
        return self.ccw_prefix[T.a - 1][len(T)]


@lru_cache(maxsize=None)
def arrow_table(P: Positroid) -> ArrowTable:
    n = P.n
    perm = P.perm
    cw_rows, ccw_rows = [], []
    for c in range(1, n + 1):
        cw_bucket = [0] * n
        ccw_bucket = [0] * n
        for x in range(1, n + 1):
            y = perm.pi(x)
            if y == x:
                if x in perm.white:
                    cw_bucket[(x - c) % n] += 1
                else:
                    ccw_bucket[(x - c) % n] += 1
                continue
            px, py = (x - c) % n, (y - c) % n
            if px < py:
                cw_bucket[py] += 1
            z = perm.pi_inv(x)
            pz = (z - c) % n
            if px < pz:
                ccw_bucket[pz] += 1
        cw_pref, ccw_pref = [0], [0]
        for p in range(n):
            cw_pref.append(cw_pref[-1] + cw_bucket[p])
            ccw_pref.append(ccw_pref[-1] + ccw_bucket[p])
        cw_rows.append(tuple(cw_pref))
        ccw_rows.append(tuple(ccw_pref))
    return ArrowTable(n, tuple(cw_rows), tuple(ccw_rows))


def cw_count(P: Positroid, T: CyclicInterval) -> int:
    """Number of CW-arrows [x, pi(x)] contained in T."""
    return arrow_table(P).cw(T)


def ccw_count(P: Positroid, T: CyclicInterval) -> int:
    """Number of CCW-arrows [x, pi^{-1}(x)] contained in T."""
    return arrow_table(P).ccw(T)


def rank_of_interval(P: Positroid, a: int, b: int) -> int:
    """rank([a, b]), as the necklace intersection |I_a ∩ [a,b]|.

    The arrow-count formula |[a,b]| - cw([a,b]) is computed alongside and
    asserted equal.
    """
    iv = CyclicInterval.span(a, b, P.n)
    value = len(P.necklace.at(a) & iv.members)
    assert value == len(iv) - cw_count(P, iv), "cw-arrow formula disagrees with necklace"
    return value


def min_elements(P: Positroid, b: int, a: int) -> int:
    """Fewest elements a basis can have in the open gap (b, a).

    Equals ccw((b, a)); the identity minelts = d - rank([a,b]) is asserted.
    """
    gap = open_interval(b, a, P.n)
    value = ccw_count(P, gap)
    assert value == P.d - rank_of_interval(P, a, b), "gap count disagrees with rank"
    return value


def natural_bound(P: Positroid, E: IntervalDecomposition) -> int:
    """d minus the sum of ccw over the gaps of E; 0 when E is empty."""
    if E.s == 0:
        return 0
    table = arrow_table(P)
    return P.d - sum(table.ccw(g) for g in E.gaps())


def bound_for_partition(P: Positroid, E: IntervalDecomposition, ncp: NonCrossingPartition) -> int:
    """Upper bound nbd(E, Π): sum of natural bounds over Π's blocks of intervals."""
    if ncp.s != E.s:
        raise ValidationError(f"partition of {ncp.s} blocks a decomposition with s = {E.s}")
    return sum(natural_bound(P, E.restrict(block)) for block in ncp.blocks)


@dataclass(frozen=True)
class RankCertificate:
    """rank(E) together with the non-crossing partition that attains it.

    `partition` indexes the intervals of `decomposition` and attains the
    minimum; value = sum(per_block_bounds) + coloop_bonus. When the
    positroid has loops or coloops, the query is answered on the reduced
    (fixed-point-free, relabeled) positroid: `reduced` is then True,
    `decomposition` and `partition` refer to the relabeled ground set (see
    reduce() for the label map), and every element of E that is a coloop
    contributes 1 via coloop_bonus. all_bounds, present when requested,
    lists (partition, bound) for every non-crossing partition, sorted by
    block count then lexicographically.
    """

    value: int
    decomposition: IntervalDecomposition
    partition: NonCrossingPartition
    per_block_bounds: tuple[int, ...]
    coloop_bonus: int = 0
    reduced: bool = False
    all_bounds: tuple[tuple[NonCrossingPartition, int], ...] | None = None


@lru_cache(maxsize=None)
def _reduced(P: Positroid) -> tuple[Positroid, dict[int, int]]:
    return reduce(P)


def _gap_matrix(P: Positroid, decomp: IntervalDecomposition) -> list[list[int]]:
    """w[i][j] = ccw over the open gap from interval i's end to interval j's start."""
    table = arrow_table(P)
    n = decomp.n
    s = decomp.s
    return [
        [table.ccw(open_interval(decomp.intervals[i][1], decomp.intervals[j][0], n)) for j in range(s)]
        for i in range(s)
    ]


def _block_bound(block: tuple[int, ...], w: list[list[int]], d: int) -> int:
    acc = d
    for idx, t in enumerate(block):
        acc -= w[t - 1][block[(idx + 1) % len(block)] - 1]
    return acc


def _strip_fixed(P: Positroid, members: frozenset[int]) -> tuple[Positroid, frozenset[int], int]:
    """Map a rank query onto the loopless/coloopless reduction of P.

    Returns the reduced positroid, the relabeled query set, and the number
    of coloops of P inside the query (each worth one unit of rank).
    """
    reduced_P, relabel = _reduced(P)
    bonus = len(members & P.perm.black)
    image = frozenset(relabel[x] for x in members if x in relabel)
    return reduced_P, image, bonus


def rank(
    P: Positroid,
    E: Iterable[int],
    *,
    all_bounds: bool = False,
    limit: int = DEFAULT_PARTITION_LIMIT,
) -> RankCertificate:
    """rank(E) as the minimum of nbd(E, Π) over non-crossing partitions Π.

    Every Π is an upper bound and at least one is tight, so the minimum is
    the exact rank. The returned certificate carries the first optimal
    partition in enumeration order. Enumeration is capped at `limit`
    intervals (after reduction); past that use rank_dp, which needs no cap.
    """
    members = frozenset(E)
    bonus = 0
    reduced_flag = False
    if P.perm.fixed_points:
        P, members, bonus = _strip_fixed(P, members)
        reduced_flag = True
    decomp = decompose(members, P.n)
    s = decomp.s
    if s == 0:
        empty = NonCrossingPartition(0, ())
        return RankCertificate(
            value=bonus,
            decomposition=decomp,
            partition=empty,
            per_block_bounds=(),
            coloop_bonus=bonus,
            reduced=reduced_flag,
            all_bounds=((empty, 0),) if all_bounds else None,
        )
    if s > limit:
        raise EnumerationLimitError(
            f"E decomposes into {s} intervals, past the certificate limit {limit}; "
            f"rank_dp computes the value without enumerating partitions"
        )
    w = _gap_matrix(P, decomp)
    d = P.d
    best: int | None = None
    best_raw: tuple[tuple[int, ...], ...] | None = None
    collected: list[tuple[NonCrossingPartition, int]] = []
    for raw in _raw_ncps(tuple(range(1, s + 1))):
        bound = sum(_block_bound(block, w, d) for block in raw)
        if best is None or bound < best:
            best, best_raw = bound, raw
        if all_bounds:
            collected.append((NonCrossingPartition(s, raw), bound))
    assert best is not None and best_raw is not None
    partition = NonCrossingPartition(s, best_raw)
    per_block = tuple(_block_bound(block, w, d) for block in best_raw)
    if all_bounds:
        collected.sort(key=lambda pair: (len(pair[0].blocks), pair[0].blocks))
    return RankCertificate(
        value=best + bonus,
        decomposition=decomp,
        partition=partition,
        per_block_bounds=per_block,
        coloop_bonus=bonus,
        reduced=reduced_flag,
        all_bounds=tuple(collected) if all_bounds else None,
    )


def rank_dp(P: Positroid, E: Iterable[int]) -> int:
    """Same value as rank(...).value, in O(s^3) without touching partitions.

    A non-crossing partition decomposes like a polygon triangulation: the
    block containing interval u is a chain u = j_0 < j_1 < ... < j_k, the
    runs strictly between consecutive chain nodes partition independently,
    and the block pays d minus the gap weights along its cyclic closure.
    """
    members = frozenset(E)
    bonus = 0
    if P.perm.fixed_points:
        P, members, bonus = _strip_fixed(P, members)
    decomp = decompose(members, P.n)
    s = decomp.s
    if s == 0:
        return bonus
    w = _gap_matrix(P, decomp)
    d = P.d

    chain_memo: dict[tuple[int, int], int] = {}
    seg_memo: dict[tuple[int, int], int] = {}

    def chain(u: int, j: int) -> int:
        # cheapest open chain of u's block from u to current endpoint j,
        # interiors between chain nodes already partitioned; the block's
        # own d and closing edge w[j][u] are paid by seg()
        if u == j:
            return 0
        key = (u, j)
        if key not in chain_memo:
            chain_memo[key] = min(
                chain(u, jp) - w[jp - 1][j - 1] + seg(jp + 1, j - 1) for jp in range(u, j)
            )
        return chain_memo[key]

    def seg(u: int, v: int) -> int:
        if u > v:
            return 0
        key = (u, v)
        if key not in seg_memo:
            seg_memo[key] = min(
                chain(u, j) + d - w[j - 1][u - 1] + seg(j + 1, v) for j in range(u, v + 1)
            )
        return seg_memo[key]

    return seg(1, s) + bonus
