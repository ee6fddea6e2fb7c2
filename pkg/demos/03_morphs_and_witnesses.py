"""
Morph walks and witness bases
=============================

Rank certificates say how large |B ∩ E| can get; a witness basis B attaining
the maximum is built constructively. The construction walks from a necklace
member toward E one interval at a time: each stage "mimics" the next
interval's necklace member inside a shrinking window, trading excess elements
sitting in the gaps for missing elements of the target interval. This script
traces those walks on the 14-element example.
"""

from positroids import (
    ExchangeRecord,
    Positroid,
    align_basis,
    decompose,
    mimic,
    morph_sequence,
    rank_dp,
    witness_basis,
)

P = Positroid.from_oneline((2, 8, 6, 7, 9, 4, 5, 14, 13, 3, 10, 11, 1, 12))

# --- one mimic step, spelled out ------------------------------------------
E = decompose({2, 3, 4, 7, 8, 9, 10}, 14)       # [2,4] u [7,10]
J0 = P.necklace.at(2)
print(f"start from I_2 = {sorted(J0)}")
J1, status = mimic(P, J0, 7, (4, 10))
print(f"mimic I_7 in (4,10]: {sorted(J1)}  ({status.value})")
# 5 was excess (not in I_7), 7 was the first missing element of [7,10]
print()

# --- full morph sequences, one per starting interval ----------------------
for start in (1, 2):
    print(f"morph starting at interval {start}:")
    for st in morph_sequence(P, E, start):
        if st.stage == 0:
            print(f"  stage 0: {sorted(st.members)}")
        else:
            ex = st.exchange
            move = f"-{list(ex.removed)} +{list(ex.added)}" if ex.removed else "no move"
            print(f"  stage {st.stage}: {move} -> {sorted(st.members)} ({st.status.value})")
print()

# --- aligning a maximizing basis onto a window -----------------------------
# a basis already meeting E in rank(E) elements can be massaged, one exchange
# at a time, until it agrees with I_2 on the window before/inside interval 1
E2 = decompose({1, 2, 3, 4, 6, 7}, 14)          # [1,4] u [6,7]
B = frozenset({1, 3, 6, 7, 10, 11, 14})
assert len(B & E2.members) == rank_dp(P, E2.members)
trace: list[ExchangeRecord] = []
aligned = align_basis(P, B, E2, 1, trace)
print(f"align {sorted(B)} to interval 1 of [1,4] u [6,7]:")
for step in trace:
    print(f"  swap {step.removed} -> {step.added}")
print(f"result {sorted(aligned)}")
print()

# --- witnesses ------------------------------------------------------------
for members in ({1, 2, 3, 8, 9, 10}, {1, 2, 7, 8, 9, 10, 13}):
    W = witness_basis(P, members)
    print(
        f"witness for {sorted(members)}: {sorted(W)} "
        f"(meets it in {len(W & members)} = rank {rank_dp(P, members)})"
    )
