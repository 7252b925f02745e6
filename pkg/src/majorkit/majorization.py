"""The majorization preorder on rational vectors.

``majorizes(a, b)`` decides ``b`` ⪯ ``a``: equal sums and every prefix
sum of the decreasing rearrangement of ``b`` bounded by the matching
prefix sum of ``a``.  Vectors may have negative entries -- the order is
defined through decreasing rearrangements alone; operations elsewhere in
the package that genuinely need nonnegativity (transfer chains,
permutohedron membership) enforce it themselves.

``decreasing_rearrangement`` also returns a witness permutation whose
matrix sorts the vector; ties are broken stably (equal values keep their
original relative order), which makes every downstream certificate
deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .core import Vector
from .errors import DimensionMismatch
from .stochastic import Permutation

__all__ = [
    "MajorizationVerdict",
    "Relation",
    "all_sorting_permutations",
    "basis_vector",
    "compare",
    "decreasing_rearrangement",
    "hamming_distance",
    "majorizes",
    "uniform_vector",
]

DEFAULT_SORT_LIMIT = 10_000


class Relation(Enum):
    """How two vectors sit relative to each other in the majorization order."""

    EQUAL = "Equal"
    LEFT_MAJORIZES_RIGHT = "LeftMajorizesRight"
    RIGHT_MAJORIZES_LEFT = "RightMajorizesLeft"
    INCOMPARABLE = "Incomparable"
    SUM_MISMATCH = "SumMismatch"


@dataclass(frozen=True)
class MajorizationVerdict:
    """Outcome of ``compare`` plus the prefix-sum evidence.

    ``prefix_gaps[k-1]`` is (sum of the k largest entries of the left
    vector) minus (sum of the k largest entries of the right vector),
    for k = 1..n.  The last gap is the total-sum difference.
    """

    relation: Relation
    prefix_gaps: tuple[Fraction, ...]


def decreasing_rearrangement(v: Vector) -> tuple[Vector, Permutation]:
    """Sort into weakly decreasing order with a sorting witness.

    Returns ``(sorted_vector, sigma)`` where ``sigma.act(v)`` (equally,
    applying ``sigma.matrix()``) equals ``sorted_vector``.  Ties keep
    their original order, so the witness is canonical.
    """
    n = len(v)
    order = sorted(range(n), key=lambda i: v[i], reverse=True)  # stable on ties
    images = [0] * n
    for slot, source in enumerate(order):
        images[source] = slot + 1
    return Vector(v[i] for i in order), Permutation(images)


def all_sorting_permutations(v: Vector, limit: int = DEFAULT_SORT_LIMIT) -> list[Permutation]:
    """Every permutation whose matrix sorts ``v`` decreasingly.

    There are exactly (product of the factorials of the value
    multiplicities) of them; enumeration is deterministic, starts with
    the stable witness from ``decreasing_rearrangement``, and stops after
    ``limit`` results.
    """
    if limit < 1:
        raise ValueError("limit must be at least 1")
    n = len(v)
    order = sorted(range(n), key=lambda i: v[i], reverse=True)
    # group the sorted slots by value; sources for a value, in original order,
    # may land on that value's slots in any arrangement
    groups: list[tuple[list[int], list[int]]] = []  # (slots, sources), both 0-based
    start = 0
    while start < n:
        stop = start
        while stop < n and v[order[stop]] == v[order[start]]:
            stop += 1
        slots = list(range(start, stop))
        sources = sorted(order[start:stop])
        groups.append((slots, sources))
        start = stop
    results: list[Permutation] = []
    for assignment in itertools.product(
        *(itertools.permutations(sources) for _, sources in groups)
    ):
        images = [0] * n
        for (slots, _), arranged in zip(groups, assignment):
            for slot, source in zip(slots, arranged):
                images[source] = slot + 1
        results.append(Permutation(images))
        if len(results) >= limit:
            break
    return results


def _prefix_gaps(a: Vector, b: Vector) -> tuple[Fraction, ...]:
    a_sorted = sorted(a.entries, reverse=True)
    b_sorted = sorted(b.entries, reverse=True)
    gaps = []
    running = Fraction(0)
    for x, y in zip(a_sorted, b_sorted):
        running += x - y
        gaps.append(running)
    return tuple(gaps)


def compare(a: Vector, b: Vector) -> MajorizationVerdict:
    """Classify the pair in the majorization order, with evidence."""
    if len(a) != len(b):
        raise DimensionMismatch(f"vector lengths differ: {len(a)} vs {len(b)}")
    gaps = _prefix_gaps(a, b)
    if gaps[-1] != 0:
        relation = Relation.SUM_MISMATCH
    elif all(g == 0 for g in gaps):
        relation = Relation.EQUAL  # equal prefix sums force equal rearrangements
    elif all(g >= 0 for g in gaps):
        relation = Relation.LEFT_MAJORIZES_RIGHT
    elif all(g <= 0 for g in gaps):
        relation = Relation.RIGHT_MAJORIZES_LEFT
    else:
        relation = Relation.INCOMPARABLE
    return MajorizationVerdict(relation, gaps)


def majorizes(a: Vector, b: Vector) -> bool:
    """True when ``b`` ⪯ ``a`` (reflexive: every vector majorizes itself)."""
    return compare(a, b).relation in (Relation.EQUAL, Relation.LEFT_MAJORIZES_RIGHT)


def hamming_distance(a: Vector, b: Vector) -> int:
    """Number of positions where the vectors differ."""
    if len(a) != len(b):
        raise DimensionMismatch(f"vector lengths differ: {len(a)} vs {len(b)}")
    return sum(1 for x, y in zip(a, b) if x != y)


def basis_vector(n: int, j: int) -> Vector:
    """Standard basis vector e_j in dimension n (1-based j)."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    if not 1 <= j <= n:
        raise ValueError(f"basis index {j} out of range 1..{n}")
    return Vector(1 if i == j else 0 for i in range(1, n + 1))


def uniform_vector(n: int) -> Vector:
    """The barycenter (1/n, ..., 1/n)."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    return Vector([Fraction(1, n)] * n)
