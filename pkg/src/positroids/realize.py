"""Realizable matroids from exact rational matrices.

Maximal minors are computed with fractions.Fraction throughout: a subset of
columns is a basis iff its minor is nonzero, and the matroid is a positroid
iff every maximal minor is nonnegative. No floating point anywhere; matrix
entries arrive as integers or "p/q" strings.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

from .cyclic import position
from .errors import EnumerationLimitError, NotAPositroidError, ValidationError
from .positroid import GrassmannNecklace, Positroid, enumerate_bases

__all__ = [
    "RationalMatrix",
    "BasisCollection",
    "matroid_from_matrix",
    "is_totally_nonnegative",
    "first_negative_minor",
    "necklace_from_bases",
    "positroid_from_matrix",
    "random_tnn_matrix",
]

# C(n, r) cap for scanning all column subsets; past this the scan would not
# finish at desk scale anyway
MINOR_SCAN_CAP = 200_000

# basis-exchange validation is quadratic in the collection size, so it runs
# only for collections at most this big (covers every documented use)
EXCHANGE_VALIDATION_CAP = 600


def _parse_entry(value: object) -> Fraction:
    if isinstance(value, bool):
        raise ValidationError(f"matrix entry {value!r} is not a number")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"cannot parse matrix entry {value!r}: {exc}") from None
    if isinstance(value, float):
        raise ValidationError(
            f"floating point entry {value!r} rejected; use an integer or a 'p/q' string"
        )
    raise ValidationError(f"cannot read matrix entry {value!r}")


@dataclass(frozen=True)
class RationalMatrix:
    """An r x n matrix of exact rationals, r <= n."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise ValidationError("matrix rows have unequal lengths")
        if self.r > self.n:
            raise ValidationError(f"matrix has more rows ({self.r}) than columns ({self.n})")

    @property
    def r(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[object]]) -> "RationalMatrix":
        return cls(tuple(tuple(_parse_entry(v) for v in row) for row in rows))

    @classmethod
    def from_json(cls, obj: object) -> "RationalMatrix":
        if not isinstance(obj, list) or not all(isinstance(row, list) for row in obj):
            raise ValidationError("matrix JSON must be a list of row lists")
        return cls.from_rows(obj)

    def to_json(self) -> list[list[object]]:
        return [
            [int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}" for v in row]
            for row in self.entries
        ]

    def column_submatrix(self, cols: Iterable[int]) -> list[list[Fraction]]:
        """Rows restricted to the 1-based columns, in the given order."""
        idx = list(cols)
        return [[row[c - 1] for c in idx] for row in self.entries]


def _det(rows: list[list[Fraction]]) -> Fraction:
    """Determinant by exact Gaussian elimination."""
    m = [list(row) for row in rows]
    k = len(m)
    det = Fraction(1)
    for col in range(k):
        pivot = next((r for r in range(col, k) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, k):
            factor = m[r][col] / m[col][col]
            if factor:
                for c in range(col, k):
                    m[r][c] -= factor * m[col][c]
    return det


def maximal_minor(A: RationalMatrix, cols: Iterable[int]) -> Fraction:
    idx = tuple(cols)
    if len(idx) != A.r:
        raise ValidationError(f"maximal minors take exactly {A.r} columns, got {len(idx)}")
    if A.r == 0:
        return Fraction(1)
    return _det(A.column_submatrix(idx))


def _column_subsets(A: RationalMatrix) -> Iterator[tuple[int, ...]]:
    if comb(A.n, A.r) > MINOR_SCAN_CAP:
        raise EnumerationLimitError(
            f"scanning C({A.n},{A.r}) column subsets exceeds the cap {MINOR_SCAN_CAP}"
        )
    return combinations(range(1, A.n + 1), A.r)


def row_rank(A: RationalMatrix) -> int:
    m = [list(row) for row in A.entries]
    rank = 0
    for col in range(A.n):
        pivot = next((r for r in range(rank, A.r) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(rank + 1, A.r):
            factor = m[r][col] / m[rank][col]
            if factor:
                for c in range(col, A.n):
                    m[r][c] -= factor * m[rank][c]
        rank += 1
    return rank


@dataclass(frozen=True)
class BasisCollection:
    """A nonempty family of d-subsets of {1..n} closed under basis exchange.

    The exchange axiom is verified on construction for collections of at
    most EXCHANGE_VALIDATION_CAP bases on at most 20 elements; bigger
    collections are accepted as-is (documented trade-off: the check is
    quadratic in the collection size).
    """

    n: int
    d: int
    bases: frozenset[frozenset[int]]

    def __post_init__(self) -> None:
        if not self.bases:
            raise ValidationError("a matroid has at least one basis")
        for B in self.bases:
            if len(B) != self.d:
                raise ValidationError(f"basis {sorted(B)} has size {len(B)}, expected {self.d}")
            for x in B:
                if not 1 <= x <= self.n:
                    raise ValidationError(f"basis element {x} outside 1..{self.n}")
        if self.n <= 20 and len(self.bases) <= EXCHANGE_VALIDATION_CAP:
            self._check_exchange()

    def _check_exchange(self) -> None:
        for B1 in self.bases:
            for B2 in self.bases:
                for x in B1 - B2:
                    if not any((B1 - {x}) | {y} in self.bases for y in B2 - B1):
                        raise ValidationError(
                            f"basis exchange fails: cannot trade {x} out of "
                            f"{sorted(B1)} toward {sorted(B2)}"
                        )

    @classmethod
    def from_sets(cls, bases: Iterable[Iterable[int]], n: int) -> "BasisCollection":
        frozen = frozenset(frozenset(B) for B in bases)
        d = len(next(iter(frozen))) if frozen else 0
        return cls(n, d, frozen)


def matroid_from_matrix(A: RationalMatrix) -> BasisCollection:
    """Bases = column subsets with nonzero maximal minor. Needs full row rank."""
    rank = row_rank(A)
    if rank != A.r:
        raise ValidationError(f"matrix row rank is {rank}, less than the row count {A.r}")
    bases = frozenset(
        frozenset(cols) for cols in _column_subsets(A) if maximal_minor(A, cols) != 0
    )
    return BasisCollection(A.n, A.r, bases)


def first_negative_minor(A: RationalMatrix) -> tuple[tuple[int, ...], Fraction] | None:
    """The lexicographically first column subset with a negative minor, if any."""
    for cols in _column_subsets(A):
        value = maximal_minor(A, cols)
        if value < 0:
            return cols, value
    return None


def is_totally_nonnegative(A: RationalMatrix) -> bool:
    return first_negative_minor(A) is None


def necklace_from_bases(B: BasisCollection) -> GrassmannNecklace:
    """I_k = the minimal basis in the order that starts at k.

    The minimum is taken lexicographically on position-sorted bases, which
    for a matroid is also the componentwise (greedy) minimum. The necklace
    transition rule holds for any matroid, so to certify a positroid the
    derived necklace's basis filter is compared against the input whenever
    n <= 20; a mismatch raises NotAPositroidError.
    """
    n, bases = B.n, B.bases
    sets = []
    for k in range(1, n + 1):
        best = min(bases, key=lambda S: tuple(sorted(position(x, k, n) for x in S)))
        sets.append(frozenset(best))
    try:
        neck = GrassmannNecklace(n, B.d, tuple(sets))
    except ValidationError as exc:
        raise NotAPositroidError(
            f"collection is not a positroid (nor a matroid): {exc}"
        ) from None
    if n <= 20:
        derived = frozenset(enumerate_bases(Positroid.from_necklace(neck)))
        if derived != bases:
            extra = derived - bases
            missing = bases - derived
            sample = sorted(next(iter(extra or missing)))
            raise NotAPositroidError(
                f"collection is a matroid but not a positroid: its necklace "
                f"generates {len(derived)} bases, input has {len(bases)} "
                f"(first difference: {sample})"
            )
    return neck


def positroid_from_matrix(A: RationalMatrix) -> Positroid:
    """The positroid of a full-row-rank matrix with nonnegative maximal minors."""
    collection = matroid_from_matrix(A)
    witness = first_negative_minor(A)
    if witness is not None:
        cols, value = witness
        raise ValidationError(
            f"matrix is not totally nonnegative: minor at columns "
            f"{tuple(cols)} equals {value}"
        )
    return Positroid.from_necklace(necklace_from_bases(collection))


def random_tnn_matrix(
    r: int, n: int, rng: random.Random, ops: int = 12
) -> RationalMatrix:
    """A random full-row-rank r x n matrix with nonnegative maximal minors.

    Built as the first r rows of a product of elementary column operations
    (add a nonnegative multiple of an adjacent column, or scale a column by
    a positive integer), each of which preserves total nonnegativity.
    """
    if not 1 <= r <= n:
        raise ValidationError(f"need 1 <= r <= n, got r = {r}, n = {n}")
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(ops):
        kind = rng.randrange(3)
        if kind == 2 or n == 1:
            j = rng.randrange(n)
            scale = rng.randint(1, 3)
            for row in m:
                row[j] *= scale
        else:
            j = rng.randrange(n - 1)
            t = rng.randint(0, 3)
            src, dst = (j, j + 1) if kind == 0 else (j + 1, j)
            for row in m:
                row[dst] += t * row[src]
    return RationalMatrix.from_rows(m[:r])
