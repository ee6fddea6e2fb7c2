"""Decorated permutations, Grassmann necklaces, and the positroids they define.

A positroid on {1..n} is stored as a decorated permutation pi together with
its derived necklace (I_1, ..., I_n). The necklace entry I_k is the set of
weak k-exceedances of pi: elements j with j strictly before pi^{-1}(j) in
the cyclic order starting at k, plus the black fixed points. Membership of
an arbitrary d-subset is decided by the Gale-order test against the
necklace, so no basis list is ever materialized unless asked for.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from .cyclic import gale_leq, position
from .errors import EnumerationLimitError, ValidationError

__all__ = [
    "DecoratedPermutation",
    "GrassmannNecklace",
    "Positroid",
    "necklace_of",
    "permutation_of",
    "is_basis",
    "enumerate_bases",
    "rank_bruteforce",
    "loops_and_coloops",
    "reduce",
]

BASIS_ENUMERATION_CAP = 20

_COLOR_NAMES = ("white", "black")


@dataclass(frozen=True)
class DecoratedPermutation:
    """A bijection of {1..n} with each fixed point colored white or black.

    n = 0 is allowed as a degenerate case so that reduce() is total; it
    never arises from user input.
    """

    n: int
    images: tuple[int, ...]
    white: frozenset[int]
    black: frozenset[int]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValidationError("n must be nonnegative")
        if len(self.images) != self.n:
            raise ValidationError(
                f"one-line notation has {len(self.images)} entries, expected {self.n}"
            )
        if sorted(self.images) != list(range(1, self.n + 1)):
            raise ValidationError("images do not form a permutation of 1..n")
        fixed = {i for i in range(1, self.n + 1) if self.images[i - 1] == i}
        if self.white & self.black:
            raise ValidationError("white and black sets overlap")
        if self.white | self.black != fixed:
            missing = fixed - (self.white | self.black)
            extra = (self.white | self.black) - fixed
            if missing:
                raise ValidationError(f"fixed points {sorted(missing)} lack a color")
            raise ValidationError(f"colored elements {sorted(extra)} are not fixed points")

    @classmethod
    def from_oneline(
        cls,
        images: Iterable[int],
        white: Iterable[int] = (),
        black: Iterable[int] = (),
    ) -> "DecoratedPermutation":
        images = tuple(images)
        return cls(len(images), images, frozenset(white), frozenset(black))

    @cached_property
    def _inverse(self) -> tuple[int, ...]:
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return tuple(inv)

    def pi(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValidationError(f"element {i} out of range 1..{self.n}")
        return self.images[i - 1]

    def pi_inv(self, j: int) -> int:
        if not 1 <= j <= self.n:
            raise ValidationError(f"element {j} out of range 1..{self.n}")
        return self._inverse[j - 1]

    @property
    def fixed_points(self) -> frozenset[int]:
        return self.white | self.black

    def color(self, i: int) -> str:
        if i in self.white:
            return "white"
        if i in self.black:
            return "black"
        raise ValidationError(f"{i} is not a fixed point")

    def to_json(self) -> dict:
        out: dict = {"n": self.n, "pi": list(self.images)}
        if self.fixed_points:
            out["colors"] = {str(i): self.color(i) for i in sorted(self.fixed_points)}
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "DecoratedPermutation":
        if not isinstance(obj, dict) or "pi" not in obj:
            raise ValidationError('permutation JSON must be an object with a "pi" list')
        images = tuple(obj["pi"])
        n = obj.get("n", len(images))
        if n != len(images):
            raise ValidationError(f'"n" is {n} but "pi" has {len(images)} entries')
        colors = obj.get("colors", {})
        white, black = set(), set()
        for key, value in colors.items():
            try:
                i = int(key)
            except (TypeError, ValueError):
                raise ValidationError(f"color key {key!r} is not an element") from None
            if value not in _COLOR_NAMES:
                raise ValidationError(f"color of {i} must be white or black, got {value!r}")
            (white if value == "white" else black).add(i)
        return cls(n, images, frozenset(white), frozenset(black))


@dataclass(frozen=True)
class GrassmannNecklace:
    """Cyclic sequence (I_1, ..., I_n) of d-subsets obeying the transition rule:

    if i is in I_i then I_{i+1} = I_i minus i plus one element, otherwise
    I_{i+1} = I_i (indices mod n). Construction validates the rule.
    """

    n: int
    d: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValidationError("n must be nonnegative")
        if len(self.sets) != self.n:
            raise ValidationError(f"necklace has {len(self.sets)} sets, expected {self.n}")
        for i, I in enumerate(self.sets, start=1):
            if len(I) != self.d:
                raise ValidationError(f"I_{i} has size {len(I)}, expected d = {self.d}")
            for x in I:
                if not 1 <= x <= self.n:
                    raise ValidationError(f"I_{i} contains {x}, outside 1..{self.n}")
        for i in range(1, self.n + 1):
            cur = self.sets[i - 1]
            nxt = self.sets[i % self.n]
            if i not in cur:
                if nxt != cur:
                    raise ValidationError(
                        f"transition broken at {i}: {i} is missing from I_{i} "
                        f"but I_{i + 1} differs from I_{i}"
                    )
            elif not (cur - {i}) <= nxt:
                raise ValidationError(
                    f"transition broken at {i}: I_{i + 1} does not contain I_{i} minus {{{i}}}"
                )

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]], n: int | None = None) -> "GrassmannNecklace":
        frozen = tuple(frozenset(s) for s in sets)
        if n is None:
            n = len(frozen)
        d = len(frozen[0]) if frozen else 0
        return cls(n, d, frozen)

    def at(self, i: int) -> frozenset[int]:
        """I_i with the index wrapping modulo n, so at(n+1) == at(1)."""
        if self.n == 0:
            raise ValidationError("empty necklace has no entries")
        return self.sets[(i - 1) % self.n]

    def to_json(self) -> dict:
        return {"n": self.n, "sets": [sorted(I) for I in self.sets]}

    @classmethod
    def from_json(cls, obj: dict) -> "GrassmannNecklace":
        if not isinstance(obj, dict) or "sets" not in obj:
            raise ValidationError('necklace JSON must be an object with a "sets" list')
        sets = obj["sets"]
        n = obj.get("n", len(sets))
        if n != len(sets):
            raise ValidationError(f'"n" is {n} but "sets" has {len(sets)} entries')
        return cls.from_sets(sets, n)


def necklace_of(perm: DecoratedPermutation) -> GrassmannNecklace:
    """The necklace I_k = weak k-exceedances of the permutation.

    j lands in I_k when j comes strictly before pi^{-1}(j) in the cyclic
    order starting at k, or when j is a black fixed point.
    """
    n = perm.n
    sets = []
    for k in range(1, n + 1):
        members = set(perm.black)
        for j in range(1, n + 1):
            pre = perm.pi_inv(j)
            if pre != j and position(j, k, n) < position(pre, k, n):
                members.add(j)
        sets.append(frozenset(members))
    d = len(sets[0]) if sets else 0
    return GrassmannNecklace(n, d, tuple(sets))


def permutation_of(neck: GrassmannNecklace) -> DecoratedPermutation:
    """The unique decorated permutation whose necklace is the given one.

    Convention: if I_{i+1} = I_i minus {i} plus {j} with j != i then
    pi(i) = j; if i is in I_i and I_{i+1} = I_i then pi(i) = i colored
    black; if i is not in I_i then pi(i) = i colored white.
    """
    n = neck.n
    images = [0] * n
    white, black = set(), set()
    for i in range(1, n + 1):
        cur = neck.at(i)
        nxt = neck.at(i + 1)
        if i not in cur:
            images[i - 1] = i
            white.add(i)
        elif nxt == cur:
            images[i - 1] = i
            black.add(i)
        else:
            gained = nxt - (cur - {i})
            if len(gained) != 1:
                raise ValidationError(
                    f"transition at {i} gains {sorted(gained)}, expected one element"
                )
            images[i - 1] = next(iter(gained))
    return DecoratedPermutation(n, tuple(images), frozenset(white), frozenset(black))


@dataclass(frozen=True)
class Positroid:
    """A positroid, carried by its decorated permutation plus cached necklace."""

    perm: DecoratedPermutation
    necklace: GrassmannNecklace

    def __post_init__(self) -> None:
        if self.necklace != necklace_of(self.perm):
            raise ValidationError("necklace does not match the permutation")

    @classmethod
    def from_permutation(cls, perm: DecoratedPermutation) -> "Positroid":
        return cls(perm, necklace_of(perm))

    @classmethod
    def from_oneline(
        cls,
        images: Iterable[int],
        white: Iterable[int] = (),
        black: Iterable[int] = (),
    ) -> "Positroid":
        return cls.from_permutation(DecoratedPermutation.from_oneline(images, white, black))

    @classmethod
    def from_necklace(cls, neck: GrassmannNecklace) -> "Positroid":
        return cls.from_permutation(permutation_of(neck))

    @classmethod
    def from_json(cls, obj: dict) -> "Positroid":
        return cls.from_permutation(DecoratedPermutation.from_json(obj))

    def to_json(self) -> dict:
        return self.perm.to_json()

    @property
    def n(self) -> int:
        return self.perm.n

    @property
    def d(self) -> int:
        return self.necklace.d

    @cached_property
    def _necklace_positions(self) -> tuple[tuple[int, ...], ...]:
        # row k-1: sorted positions of I_k relative to k, for the Gale test
        return tuple(
            tuple(sorted((x - k) % self.n for x in self.necklace.sets[k - 1]))
            for k in range(1, self.n + 1)
        )

    def is_basis(self, B: Iterable[int]) -> bool:
        """Gale-order membership test: B is a basis iff B >=_b I_b for all b in B."""
        members = frozenset(B)
        for x in members:
            if not 1 <= x <= self.n:
                raise ValidationError(f"element {x} out of range 1..{self.n}")
        if len(members) != self.d:
            return False
        n = self.n
        for b in members:
            bpos = sorted((x - b) % n for x in members)
            ipos = self._necklace_positions[b - 1]
            if any(bp < ip for bp, ip in zip(bpos, ipos)):
                return False
        return True


def is_basis(P: Positroid, B: Iterable[int]) -> bool:
    return P.is_basis(B)


def enumerate_bases(P: Positroid) -> Iterator[frozenset[int]]:
    """All bases in lexicographic order, by filtering the d-subsets.

    Deliberately naive; capped at n = 20 since C(n, d) grows fast.
    """
    if P.n > BASIS_ENUMERATION_CAP:
        raise EnumerationLimitError(
            f"basis enumeration is capped at n = {BASIS_ENUMERATION_CAP}, got n = {P.n}"
        )
    for combo in combinations(range(1, P.n + 1), P.d):
        if P.is_basis(combo):
            yield frozenset(combo)


def rank_bruteforce(P: Positroid, E: Iterable[int]) -> int:
    """max |B ∩ E| over all bases B. Exponential; the testing oracle."""
    members = frozenset(E)
    return max(len(B & members) for B in enumerate_bases(P))


def loops_and_coloops(P: Positroid) -> tuple[frozenset[int], frozenset[int]]:
    """(loops, coloops) = (white fixed points, black fixed points)."""
    return P.perm.white, P.perm.black


def reduce(P: Positroid) -> tuple[Positroid, dict[int, int]]:
    """Delete all loops and coloops, relabeling the survivors 1..m in order.

    Returns the reduced positroid and the old -> new label map (keyed by the
    surviving elements only). The reduced permutation has no fixed points.
    For every subset E of the original ground set:

        rank(P, E) = rank(P', {map[x] for x in E if x survives}) + |E ∩ coloops|
    """
    fixed = P.perm.fixed_points
    kept = [x for x in range(1, P.n + 1) if x not in fixed]
    relabel = {old: new for new, old in enumerate(kept, start=1)}
    images = tuple(relabel[P.perm.pi(old)] for old in kept)
    return Positroid.from_oneline(images), relabel
