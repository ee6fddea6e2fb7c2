"""Shared helpers: exhaustive small-instance pools and brute-force oracles."""

from __future__ import annotations

import random
from itertools import combinations, permutations
from typing import Iterator

from positroids import Positroid, enumerate_bases


def derangements(n: int) -> Iterator[tuple[int, ...]]:
    for p in permutations(range(1, n + 1)):
        if all(p[i - 1] != i for i in range(1, n + 1)):
            yield p


def fixed_point_free_positroids(n: int) -> Iterator[Positroid]:
    for p in derangements(n):
        yield Positroid.from_oneline(p)


def decorated_positroids(n: int) -> Iterator[Positroid]:
    """Every decorated permutation of [n]: each fixed point colored both ways."""
    for p in permutations(range(1, n + 1)):
        fixed = [i for i in range(1, n + 1) if p[i - 1] == i]
        for mask in range(1 << len(fixed)):
            white = [f for k, f in enumerate(fixed) if not mask >> k & 1]
            black = [f for k, f in enumerate(fixed) if mask >> k & 1]
            yield Positroid.from_oneline(p, white, black)


def random_fpf_positroid(n: int, rng: random.Random) -> Positroid:
    while True:
        p = list(range(1, n + 1))
        rng.shuffle(p)
        if all(p[i] != i + 1 for i in range(n)):
            return Positroid.from_oneline(p)


def all_subsets(n: int) -> Iterator[frozenset[int]]:
    for size in range(n + 1):
        for combo in combinations(range(1, n + 1), size):
            yield frozenset(combo)


def brute_rank_table(P: Positroid) -> dict[frozenset[int], int]:
    """rank of every subset of [n], from one basis enumeration."""
    bases = list(enumerate_bases(P))
    return {E: max(len(B & E) for B in bases) for E in all_subsets(P.n)}
