"""
From matrices to positroids
===========================

A full-row-rank r x n matrix represents a matroid: the bases are the column
r-subsets with nonzero maximal minor. When every maximal minor is >= 0 the
matroid is a positroid, and the necklace/permutation forms can be extracted.
All arithmetic here is exact rational, so "minor equals zero" means exactly
zero.
"""

import random
from fractions import Fraction
from itertools import combinations

from positroids import (
    RationalMatrix,
    enumerate_bases,
    first_negative_minor,
    is_totally_nonnegative,
    matroid_from_matrix,
    maximal_minor,
    positroid_from_matrix,
    random_tnn_matrix,
)

# --- a small worked example ------------------------------------------------
A = RationalMatrix.from_rows(((1, 0, -3, -1), (0, 1, 4, 0)))
print("A =")
for row in A.to_json():
    print(f"  {row}")
print()

print("maximal minors:")
for cols in combinations(range(1, A.n + 1), A.r):
    print(f"  columns {cols}: {maximal_minor(A, cols)}")
print()

M = matroid_from_matrix(A)
print(f"bases (nonzero minors): {sorted(map(sorted, M.bases))}")
assert is_totally_nonnegative(A)

P = positroid_from_matrix(A)
print(f"positroid: pi = {list(P.perm.images)}")
assert frozenset(enumerate_bases(P)) == M.bases
print("basis enumeration from the permutation matches the matrix exactly")
print()

# --- entries can be fractions ----------------------------------------------
B = RationalMatrix.from_rows((("1/3", 1, 0), (0, "2/7", "5/2")))
print(f'minor of [["1/3",1,0],[0,"2/7","5/2"]] on columns (1,2): '
      f"{maximal_minor(B, (1, 2))} (exactly {Fraction(2, 21)})")
print()

# --- a matrix that fails the sign test --------------------------------------
C = RationalMatrix.from_rows(((1, 0, -3, -1), (0, -1, 4, 0)))
cols, value = first_negative_minor(C)
print(f"flipping one sign: first negative minor at columns {cols}, value {value}")
print()

# --- random totally nonnegative matrices ------------------------------------
# built from column operations that provably preserve nonnegativity, so the
# round trip through the positroid is guaranteed to close
rng = random.Random(108)
for r, n in ((2, 5), (3, 6)):
    X = random_tnn_matrix(r, n, rng, ops=20)
    Q = positroid_from_matrix(X)
    count = sum(1 for _ in enumerate_bases(Q))
    print(f"random {r}x{n}: pi = {list(Q.perm.images)}, {count} bases")
