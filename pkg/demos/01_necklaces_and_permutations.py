"""
Necklaces and decorated permutations
====================================

A positroid on the cyclically ordered ground set {1..n} can be handed around
in two equivalent forms: a decorated permutation (a permutation whose fixed
points carry a white/black color) or a Grassmann necklace (one d-subset I_k
per rotation of the ground set). This script builds both for a 14-element
example and walks the translation in each direction.
"""

from positroids import (
    Positroid,
    enumerate_bases,
    loops_and_coloops,
    necklace_of,
    permutation_of,
)

# the running example: fixed-point-free, n = 14, d = 7
P = Positroid.from_oneline((2, 8, 6, 7, 9, 4, 5, 14, 13, 3, 10, 11, 1, 12))
print(f"pi = {list(P.perm.images)}")
print(f"n = {P.n}, d = {P.d}")
print()

# the necklace: I_k is the lexicographically smallest basis when the ground
# set is read starting at k
print("Grassmann necklace:")
for k in range(1, P.n + 1):
    print(f"  I_{k:<2} = {sorted(P.necklace.at(k))}")
print()

# each step I_k -> I_{k+1} either keeps the set (k was absent, or k is a
# black fixed point) or trades k for exactly one new element, namely pi(k)
I1, I2 = P.necklace.at(1), P.necklace.at(2)
print(f"I_1 -> I_2 trades {sorted(I1 - I2)} for {sorted(I2 - I1)};  pi(1) = {P.perm.images[0]}")
print()

# round trips are exact
assert permutation_of(necklace_of(P.perm)) == P.perm
print("necklace -> permutation -> necklace round trip: exact")
print()

# fixed points: white ones never enter a basis (loops), black ones sit in
# every basis (coloops)
Q = Positroid.from_oneline((1, 3, 4, 2, 5), white=(1,), black=(5,))
loops, coloops = loops_and_coloops(Q)
print(f"decorated example pi = {list(Q.perm.images)}")
print(f"  loops (white) = {sorted(loops)}, coloops (black) = {sorted(coloops)}")
for B in sorted(map(sorted, enumerate_bases(Q))):
    print(f"  basis {B}")
print("every basis avoids 1 and contains 5")
